/*
 * Copyright 2026 The ptgames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "nlbox.hpp"

#include "errors.hpp"

namespace ptg {

namespace {

void require_bit(int v, const char* name) {
    if (v != 0 && v != 1)
        throw Error(ErrorKind::InvalidArgument,
                    std::string(name) + " must be 0 or 1, got " + std::to_string(v));
}

} // namespace

std::array<PRBoxBranch, 2> pr_branches(int x, int y) {
    require_bit(x, "x");
    require_bit(y, "y");
    const int parity = x & y;
    std::array<PRBoxBranch, 2> branches;
    for (int a = 0; a < 2; ++a)
        branches[a] = PRBoxBranch{x, y, a, a ^ parity, Rational(1, 2)};
    return branches;
}

CorrelationBox::CorrelationBox() {
    for (auto& row : table_)
        for (auto& dist : row) dist.fill(Rational(0));
}

CorrelationBox CorrelationBox::pr() {
    CorrelationBox box;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (const auto& br : pr_branches(x, y))
                box.set_probability(x, y, br.a, br.b, br.weight);
    return box;
}

CorrelationBox CorrelationBox::local_deterministic(int a_on_x0, int a_on_x1,
                                                   int b_on_y0, int b_on_y1) {
    require_bit(a_on_x0, "a_on_x0");
    require_bit(a_on_x1, "a_on_x1");
    require_bit(b_on_y0, "b_on_y0");
    require_bit(b_on_y1, "b_on_y1");
    CorrelationBox box;
    const int fa[2] = {a_on_x0, a_on_x1};
    const int gb[2] = {b_on_y0, b_on_y1};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            box.set_probability(x, y, fa[x], gb[y], Rational(1));
    return box;
}

CorrelationBox CorrelationBox::uniform() {
    CorrelationBox box;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int ab = 0; ab < 4; ++ab)
                box.set_probability(x, y, ab >> 1, ab & 1, Rational(1, 4));
    return box;
}

Rational CorrelationBox::probability(int x, int y, int a, int b) const {
    require_bit(x, "x");
    require_bit(y, "y");
    require_bit(a, "a");
    require_bit(b, "b");
    return table_[x][y][(a << 1) | b];
}

void CorrelationBox::set_probability(int x, int y, int a, int b, const Rational& p) {
    require_bit(x, "x");
    require_bit(y, "y");
    require_bit(a, "a");
    require_bit(b, "b");
    table_[x][y][(a << 1) | b] = p;
}

CorrelationBox CorrelationBox::mix(const CorrelationBox& other, const Rational& p) const {
    CorrelationBox box;
    const Rational q = Rational(1) - p;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int ab = 0; ab < 4; ++ab) {
                const int a = ab >> 1, b = ab & 1;
                box.set_probability(x, y, a, b,
                                    p * probability(x, y, a, b) +
                                        q * other.probability(x, y, a, b));
            }
    return box;
}

namespace {

// Returns empty string if all four conditional distributions sum to 1,
// otherwise a description of the first offender.
std::string malformed_detail(const CorrelationBox& box) {
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            Rational sum(0);
            for (int ab = 0; ab < 4; ++ab) sum = sum + box.probability(x, y, ab >> 1, ab & 1);
            if (!(sum == Rational(1)))
                return "distribution at (x=" + std::to_string(x) + ",y=" + std::to_string(y) +
                       ") sums to " + sum.to_string();
        }
    return {};
}

} // namespace

NoSignallingResult no_signalling_check(const CorrelationBox& box) {
    if (auto detail = malformed_detail(box); !detail.empty())
        return {BoxCheckStatus::Malformed, detail};

    for (int x = 0; x < 2; ++x)
        for (int a = 0; a < 2; ++a) {
            Rational m0(0), m1(0);
            for (int b = 0; b < 2; ++b) {
                m0 = m0 + box.probability(x, 0, a, b);
                m1 = m1 + box.probability(x, 1, a, b);
            }
            if (!(m0 == m1))
                return {BoxCheckStatus::Signalling,
                        "Alice marginal P(a=" + std::to_string(a) + "|x=" + std::to_string(x) +
                            ") depends on y: " + m0.to_string() + " vs " + m1.to_string()};
        }
    for (int y = 0; y < 2; ++y)
        for (int b = 0; b < 2; ++b) {
            Rational m0(0), m1(0);
            for (int a = 0; a < 2; ++a) {
                m0 = m0 + box.probability(0, y, a, b);
                m1 = m1 + box.probability(1, y, a, b);
            }
            if (!(m0 == m1))
                return {BoxCheckStatus::Signalling,
                        "Bob marginal P(b=" + std::to_string(b) + "|y=" + std::to_string(y) +
                            ") depends on x: " + m0.to_string() + " vs " + m1.to_string()};
        }
    return {BoxCheckStatus::Pass, {}};
}

Rational chsh_value(const CorrelationBox& box) {
    if (auto detail = malformed_detail(box); !detail.empty())
        throw Error(ErrorKind::InvalidArgument, "malformed box: " + detail);

    const auto correlator = [&box](int x, int y) {
        Rational e(0);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const Rational p = box.probability(x, y, a, b);
                e = ((a ^ b) == 0) ? e + p : e - p;
            }
        return e;
    };
    const Rational value =
        correlator(0, 0) + correlator(0, 1) + correlator(1, 0) - correlator(1, 1);
    return value.abs();
}

} // namespace ptg
