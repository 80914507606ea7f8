#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "repspan/rng.hpp"

namespace repspan {

struct HHParams {
    double eps_hh = 1.0 / 12.0;
    double nu_hh = 2.0 / 3.0;
    double rho = 0.1;

    void validate() const {
        if (!(eps_hh > 0 && eps_hh < 0.5)) {
            throw std::invalid_argument("eps_hh must lie in (0, 1/2)");
        }
        if (!(nu_hh > eps_hh && nu_hh < 1.0 - eps_hh)) {
            throw std::invalid_argument("nu_hh must lie in (eps_hh, 1 - eps_hh)");
        }
        if (!(rho > 0 && rho < 1)) {
            throw std::invalid_argument("rho must lie in (0, 1)");
        }
    }

    /// Advisory sample count ceil(1 / (rho^2 eps^2 (nu - eps)^2)).
    std::uint64_t advisory_sample_count() const {
        validate();
        const double margin = nu_hh - eps_hh;
        return static_cast<std::uint64_t>(std::ceil(
            1.0 / (rho * rho * eps_hh * eps_hh * margin * margin)));
    }
};

/// Replicable heavy hitters: draw a cutoff nu' uniformly from
/// [nu_hh - eps_hh, nu_hh + eps_hh] on the "hh-threshold" substream and
/// return every item whose empirical frequency reaches it, sorted by item
/// encoding. Deterministic given (items, randomness state).
template <class Item>
std::vector<Item> r_heavy_hitters(const std::vector<Item>& items,
                                  const HHParams& params,
                                  RandomnessHandle& rnd) {
    params.validate();
    if (items.empty()) {
        throw std::invalid_argument("r_heavy_hitters requires a nonempty input");
    }
    RandomnessHandle tstream = rnd.sub("hh-threshold");
    const double cutoff = tstream.uniform_real(params.nu_hh - params.eps_hh,
                                               params.nu_hh + params.eps_hh);
    std::map<Item, std::size_t> counts;
    for (const Item& item : items) {
        ++counts[item];
    }
    const double n = static_cast<double>(items.size());
    std::vector<Item> out;
    for (const auto& [item, count] : counts) {
        if (static_cast<double>(count) / n >= cutoff) {
            out.push_back(item);
        }
    }
    return out;
}

} // namespace repspan
