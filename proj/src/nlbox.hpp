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
#ifndef PTGAMES_NLBOX_HPP
#define PTGAMES_NLBOX_HPP

#include <array>
#include <string>

#include "rational.hpp"

namespace ptg {

// ---------------------------------------------------------------------------
// Exact model of the Popescu-Rohrlich non-local box and related diagnostics.
//
// The box takes one input bit from each party and returns one output bit to
// each, correlated as x*y = a XOR b with both consistent output pairs equally
// likely. Everything here is exact rational arithmetic.
// ---------------------------------------------------------------------------

struct PRBoxBranch {
    int x = 0; // Alice input
    int y = 0; // Bob input
    int a = 0; // Alice output
    int b = 0; // Bob output
    Rational weight;
};

// The two deterministic branches for inputs (x, y): exactly the output pairs
// with a XOR b = x*y, each with weight 1/2, ordered by a.
std::array<PRBoxBranch, 2> pr_branches(int x, int y);

// General binary-input binary-output correlation box: a conditional
// distribution over (a, b) for each input pair (x, y).
class CorrelationBox {
  public:
    CorrelationBox();

    static CorrelationBox pr();
    // a = f(x), b = g(y) with f = (a_on_x0, a_on_x1), g = (b_on_y0, b_on_y1).
    static CorrelationBox local_deterministic(int a_on_x0, int a_on_x1,
                                              int b_on_y0, int b_on_y1);
    static CorrelationBox uniform();

    Rational probability(int x, int y, int a, int b) const;
    void set_probability(int x, int y, int a, int b, const Rational& p);

    // Convex mixture p*this + (1-p)*other.
    CorrelationBox mix(const CorrelationBox& other, const Rational& p) const;

  private:
    // [x][y] -> distribution over (a<<1)|b.
    std::array<std::array<std::array<Rational, 4>, 2>, 2> table_;
};

enum class BoxCheckStatus { Pass, Malformed, Signalling };

struct NoSignallingResult {
    BoxCheckStatus status = BoxCheckStatus::Pass;
    // On failure, names the offending marginal (party, input, conditioning).
    std::string detail;
};

// Pass iff Alice's output marginal is independent of Bob's input for each of
// her inputs, and symmetrically for Bob. Malformed distributions (sum != 1)
// are reported distinctly from signalling failures.
NoSignallingResult no_signalling_check(const CorrelationBox& box);

// |E(0,0) + E(0,1) + E(1,0) - E(1,1)| with E(x,y) computed under the +/-1
// encoding (-1)^a, (-1)^b, i.e. E = sum over (a,b) of (-1)^(a XOR b) P(a,b|x,y).
// Throws on malformed distributions.
Rational chsh_value(const CorrelationBox& box);

// Maximum CHSH value over quantum states, quoted for reference only; its
// derivation is out of scope here. Local boxes reach 2, the PR box reaches 4.
inline constexpr double kTsirelsonBound = 2.8284271247461903;

} // namespace ptg

#endif
