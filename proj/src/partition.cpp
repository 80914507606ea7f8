#include "repspan/partition.hpp"

#include <string>

namespace repspan {

Partition stable_partition(const std::vector<BitVec>& vectors) {
    Partition out;
    if (vectors.empty()) {
        return out;
    }
    const int d = vectors.front().dim();
    out.ambient = d;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].dim() != d) {
            throw DimensionMismatch("vector " + std::to_string(i) +
                                    " has mismatched dimension");
        }
        if (vectors[i].is_zero()) {
            ZeroVectorError err("zero vector at index " + std::to_string(i));
            err.index = i;
            throw err;
        }
    }

    std::vector<std::size_t> remaining(vectors.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) {
        remaining[i] = i;
    }

    while (!remaining.empty()) {
        IndependentSet set{{}, {}, Subspace(d)};
        IncrementalBasis state(d);
        std::vector<std::size_t> rest;
        rest.reserve(remaining.size());
        for (std::size_t idx : remaining) {
            if (state.rank() < d && state.try_insert(vectors[idx])) {
                set.indices.push_back(idx);
                set.vectors.push_back(vectors[idx]);
            } else {
                rest.push_back(idx);
            }
        }
        set.span = state.to_subspace();
        out.sets.push_back(std::move(set));
        remaining = std::move(rest);
    }
    return out;
}

MultiplicityMap multiplicities(const Partition& p) {
    MultiplicityMap counts;
    for (const IndependentSet& set : p.sets) {
        ++counts[set.span];
    }
    return counts;
}

std::size_t count_containing(const MultiplicityMap& counts, const Subspace& v) {
    std::size_t total = 0;
    for (const auto& [span, count] : counts) {
        if (span.contains_subspace(v)) {
            total += count;
        }
    }
    return total;
}

} // namespace repspan
