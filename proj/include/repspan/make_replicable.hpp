#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "repspan/heavy_hitters.hpp"
#include "repspan/parity.hpp"
#include "repspan/rng.hpp"

namespace repspan {

struct DataExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pull interface for labeled data. Implementations must throw
/// DataExhausted when they cannot supply a full batch, and must make the
/// sample-to-batch assignment deterministic given their own state.
class SampleSource {
public:
    virtual ~SampleSource() = default;
    virtual std::vector<LabeledSample> next_batch(std::size_t n) = 0;
};

struct WrapperParams {
    double rho = 0.1;    // must lie in (0, 1/8)
    double delta = 0.1;  // must lie in (0, 1/4)
    std::size_t base_sample_size = 1;
    // hidden constants; the analysis gives only Theta
    double c_t = 4.0;
    double c_k = 1.0;
    double c_delta = 1.0;

    void validate() const {
        if (!(rho > 0 && rho < 0.125)) {
            throw std::invalid_argument("wrapper rho must lie in (0, 1/8)");
        }
        if (!(delta > 0 && delta < 0.25)) {
            throw std::invalid_argument("wrapper delta must lie in (0, 1/4)");
        }
        if (base_sample_size == 0) {
            throw std::invalid_argument("base_sample_size must be positive");
        }
    }

    std::size_t rounds() const {
        return static_cast<std::size_t>(
            std::ceil(c_t * std::log(1.0 / delta) / std::log(1.0 / rho)));
    }

    std::size_t batches_per_round() const {
        const double t = static_cast<double>(rounds());
        return static_cast<std::size_t>(
            std::ceil(c_k * t * t / (rho * rho) * std::log(t / rho)));
    }

    /// Confidence to hand to the base learner.
    double delta_prime() const {
        return c_delta * delta * rho * rho * std::log(1.0 / rho) /
               std::log(1.0 / delta);
    }
};

template <class Hypothesis>
struct WrapOutcome {
    std::optional<Hypothesis> hypothesis; // nullopt is Bottom
    std::size_t rounds_used = 0;
    std::size_t samples_consumed = 0;
};

/// Upgrade a learner that is replicable only on realizable sources to one
/// replicable on every source: per round, run the base learner on k fresh
/// batches under one shared randomness string, extract a replicable heavy
/// hitter of the outputs (eps 1/12, nu 2/3, rho/(2T)), and return the
/// first hit; after T empty rounds return Bottom.
template <class Hypothesis>
WrapOutcome<Hypothesis> make_replicable(
    const std::function<Hypothesis(const std::vector<LabeledSample>&,
                                   RandomnessHandle&)>& base,
    const WrapperParams& params, SampleSource& data, RandomnessHandle& rnd) {
    params.validate();
    const std::size_t rounds = params.rounds();
    const std::size_t k = params.batches_per_round();

    WrapOutcome<Hypothesis> out;
    for (std::size_t round = 1; round <= rounds; ++round) {
        RandomnessHandle round_rnd = rnd.sub("round-" + std::to_string(round));
        const RandomnessHandle base_rnd = round_rnd.sub("base");
        RandomnessHandle hh_rnd = round_rnd.sub("hh");
        RandomnessHandle pick_rnd = round_rnd.sub("pick");

        std::vector<Hypothesis> outputs;
        outputs.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<LabeledSample> batch =
                data.next_batch(params.base_sample_size);
            out.samples_consumed += params.base_sample_size;
            RandomnessHandle shared = base_rnd; // same string for every batch
            outputs.push_back(base(batch, shared));
        }
        ++out.rounds_used;

        HHParams hh{1.0 / 12.0, 2.0 / 3.0,
                    params.rho / (2.0 * static_cast<double>(rounds))};
        std::vector<Hypothesis> hits = r_heavy_hitters(outputs, hh, hh_rnd);
        if (!hits.empty()) {
            out.hypothesis = hits[pick_rnd.uniform_index(hits.size())];
            return out;
        }
    }
    return out;
}

} // namespace repspan
