#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "repspan/bitvec.hpp"
#include "repspan/rng.hpp"

namespace repspan {

/// Linear subspace of GF(2)^d held as its unique reduced row echelon
/// basis: rows nonzero, pivot columns strictly increasing, each pivot the
/// only 1 in its column. Two Subspace values compare equal iff they are
/// the same set of vectors.
class Subspace {
public:
    /// The zero-dimensional subspace {0}.
    explicit Subspace(int ambient);

    /// Canonicalize the span of arbitrary rows (all of dimension ambient).
    static Subspace span_of(int ambient, const std::vector<BitVec>& rows);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BitVec>& basis() const { return basis_; }

    bool contains(const BitVec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) {
        return !(a == b);
    }
    friend bool operator<(const Subspace& a, const Subspace& b);

    /// a ⊇ b as sets of vectors.
    bool contains_subspace(const Subspace& other) const;

private:
    friend class IncrementalBasis;

    int ambient_;
    std::vector<BitVec> basis_; // strict RREF order
};

Subspace rref(int ambient, const std::vector<BitVec>& rows);

/// Forward-eliminated row set supporting O(d^2/w) incremental
/// independence tests. Rows are kept with distinct pivots; a candidate is
/// reduced against them and joins iff it does not vanish.
class IncrementalBasis {
public:
    explicit IncrementalBasis(int ambient);

    /// True iff v is outside the current span (no mutation).
    bool would_extend(const BitVec& v) const;

    /// Insert if independent; returns whether the rank grew.
    bool try_insert(BitVec v);

    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Back-eliminate to the canonical RREF subspace.
    Subspace to_subspace() const;

private:
    BitVec reduce(BitVec v) const;

    int ambient_;
    std::vector<BitVec> rows_;   // row i has pivot pivots_[i]
    std::vector<int> pivots_;
};

bool is_independent_with(const std::vector<BitVec>& current,
                         const BitVec& candidate);

/// Solutions of an affine system <w, x_i> = y_i: every element is
/// particular ⊕ (combination of null_basis rows), 2^null_basis.dim() in
/// total.
struct AffineSolutionSet {
    BitVec particular;
    Subspace null_basis;
};

/// Full solution set, or nullopt when the system is contradictory.
/// With zero equations the set is all of GF(2)^ambient.
std::optional<AffineSolutionSet>
solve_affine(int ambient, const std::vector<std::pair<BitVec, int>>& equations);

/// Exactly uniform over the solution set; consumes null_basis.dim() words.
BitVec sample_uniform(const AffineSolutionSet& sols, RandomnessHandle& rnd);

} // namespace repspan
