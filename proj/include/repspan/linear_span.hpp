#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "repspan/partition.hpp"
#include "repspan/rng.hpp"

namespace repspan {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Thresholds {
    double t_min = 0;
    double t_max = 0;
};

struct SpanParams {
    int d = 1;
    std::size_t m = 1;
    double rho = 0.1;
    double eps = 0.1;
    /// Desk-scale (T_min, T_max) pair; the closed-form defaults need
    /// astronomically large m.
    std::optional<std::pair<double, double>> threshold_override;
};

/// Closed-form thresholds:
///   T_min = sqrt(2m(d^2 + ln(6/rho)))
///   T_max = (30d/rho) sqrt(m ln(12d/rho))
/// Natural logarithms. Throws ConfigError on invalid ranges; does not
/// check the ordering constraints (see validate_thresholds).
Thresholds derive_thresholds(int d, std::size_t m, double rho);

/// Requires t_min < t_max and t_max < m/d^2; the failing inequality is
/// named in the ConfigError.
void validate_thresholds(const Thresholds& t, int d, std::size_t m);

/// Override if present, else derived; validated either way.
Thresholds resolve_thresholds(const SpanParams& params);

struct SpanOutcome {
    Subspace subspace;
    Thresholds thresholds;
    double threshold_drawn = 0;        // t ~ U[T_min, T_max]
    std::size_t zero_count = 0;        // stripped before partitioning
    std::size_t uncovered_count = 0;   // positions outside the subspace
};

/// Replicable linear span: stable-partition the nonzero vectors, draw a
/// uniform threshold t from the "span-threshold" substream, keep the
/// spans with multiplicity >= t, return the one of maximum dimension in
/// canonical form. Always satisfies output ⊆ span(input) and
/// uncovered count <= d^2 * T_max. All-zero input yields the
/// zero-dimensional subspace.
SpanOutcome rep_linear_span_detail(const std::vector<BitVec>& vectors,
                                   const SpanParams& params,
                                   RandomnessHandle& rnd);

Subspace rep_linear_span(const std::vector<BitVec>& vectors,
                         const SpanParams& params, RandomnessHandle& rnd);

/// Fraction of positions (with multiplicity) whose vector is outside V;
/// zero vectors count as covered. Empty input is an error.
double uncovered_fraction(const std::vector<BitVec>& vectors,
                          const Subspace& V);

} // namespace repspan
