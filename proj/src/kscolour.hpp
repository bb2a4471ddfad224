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
#ifndef PTGAMES_KSCOLOUR_HPP
#define PTGAMES_KSCOLOUR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ptg {

// ---------------------------------------------------------------------------
// Kochen-Specker instance model: exact integer vectors grouped into complete
// orthogonal bases, plus the colourability searches over them.
//
// A valid colouring assigns each vector a bit such that every basis contains
// exactly one vector valued 1; the assignment is non-contextual by
// construction (one value per vector, however many bases it appears in).
// All arithmetic is exact: vectors are unnormalized integer tuples and
// orthogonality is an integer dot product. Sign-flipped vectors are distinct.
// ---------------------------------------------------------------------------

struct KSVector {
    std::vector<int> components;

    friend bool operator==(const KSVector& a, const KSVector& b) {
        return a.components == b.components;
    }
};

struct KSBasis {
    // Indices into KSSet::vectors; exactly `dimension` pairwise-orthogonal
    // distinct members.
    std::vector<int> members;

    friend bool operator==(const KSBasis& a, const KSBasis& b) {
        return a.members == b.members;
    }
};

struct KSSet {
    std::string name;
    int dimension = 0;
    std::vector<KSVector> vectors;
    std::vector<KSBasis> bases;

    friend bool operator==(const KSSet& a, const KSSet& b) {
        return a.dimension == b.dimension && a.vectors == b.vectors && a.bases == b.bases;
    }
};

// A (possibly partial) value assignment: values[v] in {-1, 0, 1} where -1
// means unassigned.
using Colouring = std::vector<std::int8_t>;

// Throws Error with a distinct kind per defect: dimension mismatch, basis
// arity, duplicate vector, duplicate basis member, dangling index,
// non-orthogonal pair. Every diagnostic names the offending vector or basis.
void validate(const KSSet& set);

// The 18-vector, 9-basis set in dimension 4, transcribed in printed order.
// Every vector appears in exactly two bases.
KSSet builtin_cabello18();

// New set with bases reordered: order[i] is the index (0-based, into the
// original basis list) of the i-th basis of the result. Vectors keep their
// ids. Throws unless `order` is a permutation of 0..r-1.
KSSet permute_bases(const KSSet& set, const std::vector<int>& order);

enum class ColouringMode { Exhaustive, Backtracking };

// Guard for the exhaustive 2^n enumeration.
inline constexpr int kExhaustiveVectorLimit = 30;

// Number of total colourings with exactly one value-1 member per basis.
// Exhaustive mode enumerates all 2^n assignments (n <= 30); backtracking
// chooses the value-1 member per basis and propagates zeros.
long long count_valid_colourings(const KSSet& set,
                                 ColouringMode mode = ColouringMode::Exhaustive);

// The parity obstruction: if every vector occurs an even number of times
// across the bases and the basis count is odd, no valid colouring exists.
// Checked independently of any enumeration.
bool parity_witness_holds(const KSSet& set);

struct PrefixResult {
    // Largest p such that bases[0..p) admit a valid colouring of the vectors
    // occurring there. residual_count = r - p.
    int prefix_length = 0;
    int residual_count = 0;
    // witness[v] in {-1,0,1}; -1 for vectors not occurring in the prefix.
    Colouring witness;
};

// Backtracking over the bases in stored order; deterministic first witness
// (value-1 member chosen by position, lowest first).
PrefixResult colour_prefix_maximal(const KSSet& set);

struct RepairResult {
    // Set admits a plain valid colouring; every vector is then trivially
    // repairable.
    bool already_colourable = false;
    // Vector ids which, when allowed one value per occurrence context, admit
    // a full assignment with exactly one value-1 member per basis.
    std::vector<int> repairable;
};

// Searches each vector occurring in >= 2 bases as a contextual-repair
// candidate. Brute force over all assignments when small enough, basis-wise
// backtracking otherwise; both give identical verdicts.
RepairResult contextual_repair_search(const KSSet& set);

// ---------------------------------------------------------------------------
// Shared backtracking engine. One decision variable per (vector, context
// class): normally a single variable per vector; split vectors get one per
// containing basis. Values may be pinned before solving.
// ---------------------------------------------------------------------------
class ColouringEngine {
  public:
    // Considers bases [0, basis_limit); -1 means all bases.
    explicit ColouringEngine(const KSSet& set, int basis_limit = -1);

    // Give `vector_id` an independent value in each containing basis.
    void split_contexts(int vector_id);
    // Pin the value of a vector, either in one basis context or everywhere
    // (basis_ctx = -1). Must be called after any split_contexts for the same
    // vector.
    void pin(int vector_id, int basis_ctx, int value);

    // First witness under position-order tie-breaking; false if none.
    bool solve();
    // Number of complete valid assignments.
    long long count();

    // After a successful solve(): assigned value of a vector (requires an
    // unsplit vector) or of a vector in one basis context.
    int value_of(int vector_id) const;
    int value_in(int vector_id, int basis_ctx) const;

  private:
    void build();
    bool dfs(std::size_t basis_idx, long long* counter);

    const KSSet& set_;
    int basis_limit_;
    std::vector<bool> split_;
    std::vector<std::pair<int, int>> pins_; // (vector, ctx) -> value via parallel array
    std::vector<int> pin_values_;
    bool built_ = false;

    int var_count_ = 0;
    std::vector<int> unsplit_var_;                   // per vector; -1 if split/absent
    std::vector<std::vector<int>> context_var_;      // per basis, per position
    std::vector<std::int8_t> values_;                // per variable; -1 unassigned
    std::vector<std::int8_t> pinned_;                // per variable
};

} // namespace ptg

#endif
