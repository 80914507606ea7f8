#include "repspan/parity.hpp"

#include <cmath>

namespace repspan {

std::optional<ParityHypothesis>
learn_parity(const std::vector<LabeledSample>& samples,
             const LearnerParams& params, RandomnessHandle& rnd) {
    if (samples.empty()) {
        throw std::invalid_argument("learn_parity requires a nonempty sample");
    }
    std::vector<BitVec> xs;
    xs.reserve(samples.size());
    for (const LabeledSample& s : samples) {
        if (s.x.dim() != params.d) {
            throw DimensionMismatch("sample dimension does not match params.d");
        }
        xs.push_back(s.x);
    }

    const Subspace vstar =
        rep_linear_span(xs, params.span_params(samples.size()), rnd);

    std::vector<std::pair<BitVec, int>> covered;
    for (const LabeledSample& s : samples) {
        if (vstar.contains(s.x)) {
            covered.emplace_back(s.x, s.y);
        }
    }
    const auto sols = solve_affine(params.d, covered);
    if (!sols) {
        return std::nullopt;
    }
    RandomnessHandle coset = rnd.sub("coset");
    return ParityHypothesis{sample_uniform(*sols, coset)};
}

double empirical_error(const ParityHypothesis& h,
                       const std::vector<LabeledSample>& samples) {
    if (samples.empty()) {
        throw std::invalid_argument("empirical_error of an empty dataset");
    }
    std::size_t wrong = 0;
    for (const LabeledSample& s : samples) {
        if (h.predict(s.x) != (s.y & 1)) {
            ++wrong;
        }
    }
    return static_cast<double>(wrong) / static_cast<double>(samples.size());
}

std::uint64_t recommended_sample_size(int d, double rho, double eps,
                                      double delta) {
    if (d < 1 || !(rho > 0 && rho < 1) || !(eps > 0 && eps < 1) ||
        !(delta > 0 && delta < 1)) {
        throw ConfigError("recommended_sample_size: parameters out of range");
    }
    const double dd = static_cast<double>(d);
    const double d6 = std::pow(dd, 6.0);
    const double half_eps = eps / 2.0;
    const double span_term =
        900.0 * d6 * std::log(12.0 * dd / rho) / (rho * rho * half_eps * half_eps);
    const double gen_term = std::ceil(2.0 * (dd + std::log(2.0 / delta)) /
                                      (eps * eps));
    return static_cast<std::uint64_t>(std::ceil(span_term) + gen_term);
}

} // namespace repspan
