#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "repspan/linear_span.hpp"

namespace repspan {

struct LabeledSample {
    BitVec x;
    int y = 0;
};

struct ParityHypothesis {
    BitVec w;

    int predict(const BitVec& x) const { return w.dot(x); }

    friend bool operator==(const ParityHypothesis& a, const ParityHypothesis& b) {
        return a.w == b.w;
    }
    friend bool operator<(const ParityHypothesis& a, const ParityHypothesis& b) {
        return a.w < b.w;
    }
};

struct LearnerParams {
    int d = 1;
    double rho = 0.1;
    double eps = 0.1;
    double delta = 0.05;
    std::optional<std::pair<double, double>> threshold_override;

    /// Half the accuracy budget goes to span coverage.
    SpanParams span_params(std::size_t m) const {
        return SpanParams{d, m, rho, eps / 2.0, threshold_override};
    }
};

/// Recover a covering subspace replicably, solve the label constraints on
/// the covered samples, and draw a uniformly random consistent parity
/// from the "coset" substream. Returns nullopt (infeasible) when the
/// restricted system is contradictory, which only non-realizable data can
/// produce. The result is consistent with every covered sample.
std::optional<ParityHypothesis>
learn_parity(const std::vector<LabeledSample>& samples,
             const LearnerParams& params, RandomnessHandle& rnd);

double empirical_error(const ParityHypothesis& h,
                       const std::vector<LabeledSample>& samples);

/// Advisory sample size
///   900 d^6 ln(12d/rho) / (rho^2 (eps/2)^2) + ceil(2(d + ln(2/delta))/eps^2).
std::uint64_t recommended_sample_size(int d, double rho, double eps,
                                      double delta);

} // namespace repspan
