#include "repspan/linear_span.hpp"

#include <cmath>
#include <string>

namespace repspan {

Thresholds derive_thresholds(int d, std::size_t m, double rho) {
    if (d < 1) {
        throw ConfigError("d must be >= 1");
    }
    if (m < 1) {
        throw ConfigError("m must be >= 1");
    }
    if (!(rho > 0 && rho < 1)) {
        throw ConfigError("rho must lie in (0, 1)");
    }
    const double dd = static_cast<double>(d);
    const double dm = static_cast<double>(m);
    Thresholds t;
    t.t_min = std::sqrt(2.0 * dm * (dd * dd + std::log(6.0 / rho)));
    t.t_max = (30.0 * dd / rho) * std::sqrt(dm * std::log(12.0 * dd / rho));
    return t;
}

void validate_thresholds(const Thresholds& t, int d, std::size_t m) {
    if (!(t.t_min < t.t_max)) {
        throw ConfigError("threshold order violated: T_min (" +
                          std::to_string(t.t_min) + ") must be < T_max (" +
                          std::to_string(t.t_max) + "); m too small for (d, rho)");
    }
    const double cap = static_cast<double>(m) / (static_cast<double>(d) * d);
    if (!(t.t_max < cap)) {
        throw ConfigError("heavy-set nonemptiness violated: T_max (" +
                          std::to_string(t.t_max) + ") must be < m/d^2 (" +
                          std::to_string(cap) + ")");
    }
    if (!(t.t_min > 0)) {
        throw ConfigError("T_min must be positive");
    }
}

Thresholds resolve_thresholds(const SpanParams& params) {
    Thresholds t;
    if (params.threshold_override) {
        t.t_min = params.threshold_override->first;
        t.t_max = params.threshold_override->second;
    } else {
        t = derive_thresholds(params.d, params.m, params.rho);
    }
    validate_thresholds(t, params.d, params.m);
    return t;
}

SpanOutcome rep_linear_span_detail(const std::vector<BitVec>& vectors,
                                   const SpanParams& params,
                                   RandomnessHandle& rnd) {
    if (vectors.empty()) {
        throw ConfigError("rep_linear_span requires a nonempty input");
    }
    const Thresholds thresholds = resolve_thresholds(params);

    // one fixed-width draw, always, so paired runs stay aligned
    RandomnessHandle tstream = rnd.sub("span-threshold");
    const double t = tstream.uniform_real(thresholds.t_min, thresholds.t_max);

    const int d = vectors.front().dim();
    std::vector<BitVec> nonzero;
    nonzero.reserve(vectors.size());
    for (const BitVec& v : vectors) {
        if (v.dim() != d) {
            throw DimensionMismatch("mixed dimensions in rep_linear_span input");
        }
        if (!v.is_zero()) {
            nonzero.push_back(v);
        }
    }

    SpanOutcome out{Subspace(d), thresholds, t,
                    vectors.size() - nonzero.size(), 0};
    if (nonzero.empty()) {
        return out; // zero subspace covers everything
    }
    // the pigeonhole floor needs T_max < (nonzero count)/d^2
    const double cap = static_cast<double>(nonzero.size()) /
                       (static_cast<double>(d) * d);
    if (!(thresholds.t_max < cap)) {
        throw ConfigError(
            "T_max (" + std::to_string(thresholds.t_max) +
            ") must be < (nonzero count)/d^2 (" + std::to_string(cap) + ")");
    }

    const Partition partition = stable_partition(nonzero);
    const MultiplicityMap counts = multiplicities(partition);

    bool found = false;
    for (const auto& [subspace, count] : counts) {
        // n(V) counts every set whose span contains V, the sensitivity-1
        // quantity; the minimal span always reaches the number of sets,
        // which is >= m/d, so the heavy set is nonempty below m/d^2
        if (static_cast<double>(count_containing(counts, subspace)) < t) {
            continue;
        }
        if (!found || subspace.dim() > out.subspace.dim()) {
            out.subspace = subspace;
            found = true;
        } else if (subspace.dim() == out.subspace.dim() &&
                   subspace != out.subspace) {
            // the nested-subspaces property makes the argmax unique
            throw std::logic_error("heavy set is not a chain");
        }
    }
    if (!found) {
        // cannot happen when T_max < m/d^2 (pigeonhole over <= d spans)
        throw std::logic_error("heavy set empty despite valid thresholds");
    }
    for (const BitVec& v : nonzero) {
        if (!out.subspace.contains(v)) {
            ++out.uncovered_count;
        }
    }
    return out;
}

Subspace rep_linear_span(const std::vector<BitVec>& vectors,
                         const SpanParams& params, RandomnessHandle& rnd) {
    return rep_linear_span_detail(vectors, params, rnd).subspace;
}

double uncovered_fraction(const std::vector<BitVec>& vectors,
                          const Subspace& V) {
    if (vectors.empty()) {
        throw std::invalid_argument("uncovered_fraction of an empty dataset");
    }
    std::size_t outside = 0;
    for (const BitVec& v : vectors) {
        if (!v.is_zero() && !V.contains(v)) {
            ++outside;
        }
    }
    return static_cast<double>(outside) / static_cast<double>(vectors.size());
}

} // namespace repspan
