#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repspan/linear_span.hpp"
#include "repspan/make_replicable.hpp"
#include "repspan/parity.hpp"
#include "repspan/rng.hpp"

namespace repspan {

struct WilsonInterval {
    double lo = 0;
    double hi = 0;
};

/// 95% by default (z = 1.96).
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials,
                               double z = 1.959963984540054);

enum class DistKind { UniformFull, PlantedSubspace, PointMassMixture, FromFile };

struct DistributionSpec {
    DistKind kind = DistKind::UniformFull;
    int d = 1;
    /// When set, labels are <z, x>; otherwise 0.
    std::optional<BitVec> hidden_parity;
    /// Flip probability, for non-realizable stress tests.
    double label_noise = 0.0;

    // planted-subspace
    std::vector<BitVec> subspace_basis;
    double leak = 0.0;

    // point-mass mixture
    std::vector<BitVec> atoms;
    std::vector<double> weights;

    // from-file: records are drawn uniformly with replacement
    std::string path;

    void validate() const;
};

DistributionSpec uniform_full(int d, std::optional<BitVec> hidden_parity = {},
                              double label_noise = 0.0);

/// Random k-dimensional support subspace (drawn once from rnd so both
/// runs of a paired experiment see the same distribution), contaminated
/// with a `leak` fraction of uniform vectors.
DistributionSpec planted_subspace(int d, int k, double leak,
                                  RandomnessHandle& rnd,
                                  std::optional<BitVec> hidden_parity = {});

DistributionSpec point_mass_mixture(int d, std::vector<BitVec> atoms,
                                    std::vector<double> weights,
                                    std::optional<BitVec> hidden_parity = {});

std::vector<LabeledSample> generate(const DistributionSpec& spec,
                                    std::size_t n, RandomnessHandle& rnd);

/// Unbounded i.i.d. source backed by a generator spec; batch contents are
/// a deterministic function of the handle's stream position.
class SyntheticSource : public SampleSource {
public:
    SyntheticSource(DistributionSpec spec, RandomnessHandle rnd)
        : spec_(std::move(spec)), rnd_(std::move(rnd)) {}

    std::vector<LabeledSample> next_batch(std::size_t n) override {
        return generate(spec_, n, rnd_);
    }

private:
    DistributionSpec spec_;
    RandomnessHandle rnd_;
};

/// Fixed record list handed out sequentially; throws DataExhausted when a
/// full batch can no longer be supplied.
class FiniteSource : public SampleSource {
public:
    explicit FiniteSource(std::vector<LabeledSample> records)
        : records_(std::move(records)) {}

    std::vector<LabeledSample> next_batch(std::size_t n) override {
        if (cursor_ + n > records_.size()) {
            throw DataExhausted("sample source exhausted after " +
                                std::to_string(cursor_) + " records");
        }
        std::vector<LabeledSample> out(records_.begin() + static_cast<long>(cursor_),
                                       records_.begin() +
                                           static_cast<long>(cursor_ + n));
        cursor_ += n;
        return out;
    }

    std::size_t consumed() const { return cursor_; }

private:
    std::vector<LabeledSample> records_;
    std::size_t cursor_ = 0;
};

struct AgreementReport {
    std::size_t trials = 0;
    std::size_t agreements = 0;
    double rate = 0;
    WilsonInterval wilson;
};

/// Paired-run agreement under shared internal randomness: per trial, two
/// independent datasets are drawn and the algorithm runs on each with an
/// identical copy of the trial's shared substream; outputs are compared
/// for exact equality.
template <class Out>
AgreementReport estimate_replicability(
    std::size_t trials, const RandomnessHandle& master,
    const std::function<std::vector<LabeledSample>(RandomnessHandle&)>& draw,
    const std::function<Out(const std::vector<LabeledSample>&,
                            RandomnessHandle&)>& algorithm) {
    AgreementReport report;
    report.trials = trials;
    for (std::size_t i = 0; i < trials; ++i) {
        RandomnessHandle trial = master.sub("trial-" + std::to_string(i));
        RandomnessHandle data1 = trial.sub("data-1");
        RandomnessHandle data2 = trial.sub("data-2");
        const RandomnessHandle shared = trial.sub("shared");

        RandomnessHandle r1 = shared;
        RandomnessHandle r2 = shared;
        const Out out1 = algorithm(draw(data1), r1);
        const Out out2 = algorithm(draw(data2), r2);
        if (out1 == out2) {
            ++report.agreements;
        }
    }
    report.rate = trials == 0
                      ? 0.0
                      : static_cast<double>(report.agreements) /
                            static_cast<double>(trials);
    report.wilson = wilson_interval(report.agreements, trials);
    return report;
}

struct TwoParamReport {
    std::vector<double> modal_mass; // one entry per seed

    /// Fraction of seeds whose modal output mass is >= 1 - eta.
    double good_fraction(double eta) const {
        if (modal_mass.empty()) {
            return 0.0;
        }
        std::size_t good = 0;
        for (double m : modal_mass) {
            if (m >= 1.0 - eta) {
                ++good;
            }
        }
        return static_cast<double>(good) /
               static_cast<double>(modal_mass.size());
    }
};

/// For each of R fixed randomness seeds, run N trials on fresh data and
/// record the frequency of the modal output.
template <class Out>
TwoParamReport estimate_two_param_replicability(
    std::size_t seeds, std::size_t trials_per_seed,
    const RandomnessHandle& master,
    const std::function<std::vector<LabeledSample>(RandomnessHandle&)>& draw,
    const std::function<Out(const std::vector<LabeledSample>&,
                            RandomnessHandle&)>& algorithm) {
    TwoParamReport report;
    for (std::size_t s = 0; s < seeds; ++s) {
        RandomnessHandle seed_rnd = master.sub("seed-" + std::to_string(s));
        const RandomnessHandle shared = seed_rnd.sub("shared");
        std::map<Out, std::size_t> histogram;
        for (std::size_t i = 0; i < trials_per_seed; ++i) {
            RandomnessHandle data =
                seed_rnd.sub("data-" + std::to_string(i));
            RandomnessHandle r = shared;
            ++histogram[algorithm(draw(data), r)];
        }
        std::size_t modal = 0;
        for (const auto& [out, count] : histogram) {
            modal = std::max(modal, count);
        }
        report.modal_mass.push_back(static_cast<double>(modal) /
                                    static_cast<double>(trials_per_seed));
    }
    return report;
}

std::size_t multiplicity_linf_diff(const MultiplicityMap& a,
                                   const MultiplicityMap& b);

struct SensitivityResult {
    std::size_t cases = 0;
    std::size_t max_deviation = 0;
    std::size_t cases_at_max = 0;
};

/// Random base sequences from the pool; every position is replaced by
/// every pool vector and the multiplicity histograms are compared.
SensitivityResult sensitivity_oracle(int d, std::size_t m,
                                     const std::vector<BitVec>& pool,
                                     std::size_t trials,
                                     RandomnessHandle& rnd);

/// All 3^4 base sequences over the nonzero vectors of GF(2)^2, all
/// positions, all replacements: 972 cases.
SensitivityResult sensitivity_exhaustive_d2();

struct CoverageRow {
    std::size_t m = 0;
    double uncovered = 0;
    double bound = 0; // d^2 T_max / m
    double threshold_drawn = 0;
};

std::vector<CoverageRow>
coverage_bench(const DistributionSpec& spec, const std::vector<std::size_t>& sizes,
               const std::function<SpanParams(std::size_t)>& params_for,
               const RandomnessHandle& master);

} // namespace repspan
