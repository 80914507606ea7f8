#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "repspan/gf2.hpp"

namespace repspan {

struct ZeroVectorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
    std::size_t index = 0;
};

/// One greedy-collected linearly independent set, with the original
/// positions of its members.
struct IndependentSet {
    std::vector<std::size_t> indices;
    std::vector<BitVec> vectors;
    Subspace span;
};

struct Partition {
    int ambient = 0;
    std::vector<IndependentSet> sets;
};

/// Greedy partition into linearly independent sets: sweep the remaining
/// sequence in original order, collect every vector that keeps the
/// current set independent, remove it, repeat. Deterministic; input order
/// matters. All vectors must be nonzero.
Partition stable_partition(const std::vector<BitVec>& vectors);

/// Count of sets per canonical span.
using MultiplicityMap = std::map<Subspace, std::size_t>;

MultiplicityMap multiplicities(const Partition& p);

/// Cumulative multiplicity n(V): number of sets whose span contains V,
/// i.e. the sum of counts over map keys that contain V. This is the
/// quantity with replacement sensitivity 1 — the per-span counts alone
/// can jump by 2 when a replacement splits a set boundary.
std::size_t count_containing(const MultiplicityMap& counts, const Subspace& v);

} // namespace repspan
