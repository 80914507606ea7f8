#include "repspan/gf2.hpp"

#include <algorithm>

namespace repspan {

namespace {

int leading_coord(const BitVec& v) {
    for (int i = 0; i < v.dim(); ++i) {
        if (v.get(i)) {
            return i;
        }
    }
    return -1;
}

} // namespace

Subspace::Subspace(int ambient) : ambient_(ambient) {
    if (ambient <= 0) {
        throw std::invalid_argument("Subspace ambient dimension must be positive");
    }
}

Subspace Subspace::span_of(int ambient, const std::vector<BitVec>& rows) {
    IncrementalBasis basis(ambient);
    for (const BitVec& r : rows) {
        if (r.dim() != ambient) {
            throw DimensionMismatch("row dimension does not match ambient");
        }
        basis.try_insert(r);
    }
    return basis.to_subspace();
}

bool Subspace::contains(const BitVec& v) const {
    if (v.dim() != ambient_) {
        throw DimensionMismatch("vector dimension does not match subspace");
    }
    BitVec r = v;
    for (const BitVec& row : basis_) {
        const int p = leading_coord(row);
        if (r.get(p)) {
            r ^= row;
        }
    }
    return r.is_zero();
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (const BitVec& row : other.basis_) {
        if (!contains(row)) {
            return false;
        }
    }
    return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) {
        return a.ambient_ < b.ambient_;
    }
    return a.basis_ < b.basis_;
}

Subspace rref(int ambient, const std::vector<BitVec>& rows) {
    return Subspace::span_of(ambient, rows);
}

IncrementalBasis::IncrementalBasis(int ambient) : ambient_(ambient) {
    if (ambient <= 0) {
        throw std::invalid_argument("ambient dimension must be positive");
    }
}

BitVec IncrementalBasis::reduce(BitVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool IncrementalBasis::would_extend(const BitVec& v) const {
    if (v.dim() != ambient_) {
        throw DimensionMismatch("vector dimension does not match basis");
    }
    return !reduce(v).is_zero();
}

bool IncrementalBasis::try_insert(BitVec v) {
    if (v.dim() != ambient_) {
        throw DimensionMismatch("vector dimension does not match basis");
    }
    v = reduce(std::move(v));
    const int p = leading_coord(v);
    if (p < 0) {
        return false;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

Subspace IncrementalBasis::to_subspace() const {
    // back-substitution: clear every pivot column above its row
    std::vector<BitVec> rows = rows_;
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pivots_[a] < pivots_[b];
    });
    Subspace out(ambient_);
    std::vector<BitVec> result;
    for (std::size_t idx : order) {
        result.push_back(rows[idx]);
    }
    for (std::size_t i = result.size(); i-- > 0;) {
        const int p = leading_coord(result[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (result[j].get(p)) {
                result[j] ^= result[i];
            }
        }
    }
    out.basis_ = std::move(result);
    return out;
}

bool is_independent_with(const std::vector<BitVec>& current,
                         const BitVec& candidate) {
    if (current.empty()) {
        return !candidate.is_zero();
    }
    IncrementalBasis basis(current.front().dim());
    for (const BitVec& v : current) {
        basis.try_insert(v);
    }
    return basis.would_extend(candidate);
}

std::optional<AffineSolutionSet>
solve_affine(int ambient,
             const std::vector<std::pair<BitVec, int>>& equations) {
    // forward elimination on augmented rows (lhs | rhs)
    std::vector<BitVec> rows;
    std::vector<int> rhs;
    std::vector<int> pivots;
    for (const auto& [x, y] : equations) {
        if (x.dim() != ambient) {
            throw DimensionMismatch("equation dimension does not match ambient");
        }
        BitVec r = x;
        int b = y & 1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (r.get(pivots[i])) {
                r ^= rows[i];
                b ^= rhs[i];
            }
        }
        const int p = leading_coord(r);
        if (p < 0) {
            if (b != 0) {
                return std::nullopt;
            }
            continue;
        }
        rows.push_back(std::move(r));
        rhs.push_back(b);
        pivots.push_back(p);
    }

    // full RREF of the augmented system
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<BitVec> srows;
    std::vector<int> srhs, spiv;
    for (std::size_t idx : order) {
        srows.push_back(rows[idx]);
        srhs.push_back(rhs[idx]);
        spiv.push_back(pivots[idx]);
    }
    for (std::size_t i = srows.size(); i-- > 0;) {
        for (std::size_t j = 0; j < i; ++j) {
            if (srows[j].get(spiv[i])) {
                srows[j] ^= srows[i];
                srhs[j] ^= srhs[i];
            }
        }
    }

    // particular solution: free variables zero, w[pivot] = rhs
    BitVec particular(ambient);
    for (std::size_t i = 0; i < srows.size(); ++i) {
        particular.set(spiv[i], srhs[i] != 0);
    }

    // kernel basis: one vector per free column
    std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
    for (int p : spiv) {
        is_pivot[static_cast<std::size_t>(p)] = true;
    }
    std::vector<BitVec> kernel;
    for (int f = 0; f < ambient; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) {
            continue;
        }
        BitVec k(ambient);
        k.set(f, true);
        for (std::size_t i = 0; i < srows.size(); ++i) {
            if (srows[i].get(f)) {
                k.set(spiv[i], true);
            }
        }
        kernel.push_back(std::move(k));
    }
    return AffineSolutionSet{std::move(particular),
                             Subspace::span_of(ambient, kernel)};
}

BitVec sample_uniform(const AffineSolutionSet& sols, RandomnessHandle& rnd) {
    BitVec w = sols.particular;
    for (const BitVec& row : sols.null_basis.basis()) {
        if (rnd.fair_bit()) {
            w ^= row;
        }
    }
    return w;
}

} // namespace repspan
