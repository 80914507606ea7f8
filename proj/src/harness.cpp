#include "repspan/harness.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "repspan/dataset_io.hpp"

namespace repspan {

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials,
                               double z) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = p + z2 / (2.0 * n);
    const double spread =
        z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {(center - spread) / denom, (center + spread) / denom};
}

void DistributionSpec::validate() const {
    if (d < 1) {
        throw ConfigError("distribution dimension must be >= 1");
    }
    if (label_noise < 0 || label_noise > 1) {
        throw ConfigError("label_noise must lie in [0, 1]");
    }
    if (hidden_parity && hidden_parity->dim() != d) {
        throw ConfigError("hidden parity dimension does not match d");
    }
    switch (kind) {
    case DistKind::PlantedSubspace: {
        if (leak < 0 || leak > 1) {
            throw ConfigError("leak must lie in [0, 1]");
        }
        if (subspace_basis.empty() ||
            static_cast<int>(subspace_basis.size()) > d) {
            throw ConfigError("planted subspace needs 1..d basis vectors");
        }
        break;
    }
    case DistKind::PointMassMixture: {
        if (atoms.empty() || atoms.size() != weights.size()) {
            throw ConfigError("mixture needs matching atoms and weights");
        }
        const double total =
            std::accumulate(weights.begin(), weights.end(), 0.0);
        if (std::abs(total - 1.0) > 1e-9) {
            throw ConfigError("mixture weights must sum to 1");
        }
        break;
    }
    case DistKind::FromFile:
        if (path.empty()) {
            throw ConfigError("from-file distribution needs a path");
        }
        break;
    case DistKind::UniformFull:
        break;
    }
}

DistributionSpec uniform_full(int d, std::optional<BitVec> hidden_parity,
                              double label_noise) {
    DistributionSpec spec;
    spec.kind = DistKind::UniformFull;
    spec.d = d;
    spec.hidden_parity = std::move(hidden_parity);
    spec.label_noise = label_noise;
    spec.validate();
    return spec;
}

DistributionSpec planted_subspace(int d, int k, double leak,
                                  RandomnessHandle& rnd,
                                  std::optional<BitVec> hidden_parity) {
    if (k < 1 || k > d) {
        throw ConfigError("planted k must lie in [1, d]");
    }
    DistributionSpec spec;
    spec.kind = DistKind::PlantedSubspace;
    spec.d = d;
    spec.leak = leak;
    spec.hidden_parity = std::move(hidden_parity);
    IncrementalBasis basis(d);
    while (basis.rank() < k) {
        BitVec v = BitVec::random(d, rnd);
        if (basis.would_extend(v)) {
            basis.try_insert(v);
            spec.subspace_basis.push_back(std::move(v));
        }
    }
    spec.validate();
    return spec;
}

DistributionSpec point_mass_mixture(int d, std::vector<BitVec> atoms,
                                    std::vector<double> weights,
                                    std::optional<BitVec> hidden_parity) {
    DistributionSpec spec;
    spec.kind = DistKind::PointMassMixture;
    spec.d = d;
    spec.atoms = std::move(atoms);
    spec.weights = std::move(weights);
    spec.hidden_parity = std::move(hidden_parity);
    spec.validate();
    return spec;
}

namespace {

BitVec draw_vector(const DistributionSpec& spec, RandomnessHandle& rnd,
                   const std::vector<LabeledSample>* file_records) {
    switch (spec.kind) {
    case DistKind::UniformFull:
        return BitVec::random(spec.d, rnd);
    case DistKind::PlantedSubspace: {
        if (spec.leak > 0 && rnd.uniform_real(0.0, 1.0) < spec.leak) {
            return BitVec::random(spec.d, rnd);
        }
        BitVec v(spec.d);
        for (const BitVec& b : spec.subspace_basis) {
            if (rnd.fair_bit()) {
                v ^= b;
            }
        }
        return v;
    }
    case DistKind::PointMassMixture: {
        const double u = rnd.uniform_real(0.0, 1.0);
        double acc = 0.0;
        for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
            acc += spec.weights[i];
            if (u < acc) {
                return spec.atoms[i];
            }
        }
        return spec.atoms.back();
    }
    case DistKind::FromFile:
        break; // handled by the caller, which needs the record's label
    }
    throw std::logic_error("unreachable distribution kind");
}

} // namespace

std::vector<LabeledSample> generate(const DistributionSpec& spec,
                                    std::size_t n, RandomnessHandle& rnd) {
    spec.validate();
    std::vector<LabeledSample> file_records;
    if (spec.kind == DistKind::FromFile) {
        file_records = read_dataset_file(spec.path).samples;
        if (file_records.empty()) {
            throw ConfigError("dataset file has no records: " + spec.path);
        }
    }
    std::vector<LabeledSample> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVec x(spec.d);
        int y = 0;
        if (spec.kind == DistKind::FromFile) {
            const LabeledSample& rec =
                file_records[rnd.uniform_index(file_records.size())];
            x = rec.x;
            y = rec.y;
        } else {
            x = draw_vector(spec, rnd, &file_records);
        }
        if (spec.hidden_parity) {
            y = spec.hidden_parity->dot(x);
        }
        if (spec.label_noise > 0 &&
            rnd.uniform_real(0.0, 1.0) < spec.label_noise) {
            y ^= 1;
        }
        out.push_back(LabeledSample{std::move(x), y});
    }
    return out;
}

std::size_t multiplicity_linf_diff(const MultiplicityMap& a,
                                   const MultiplicityMap& b) {
    // compare the cumulative counts n(V) at every span appearing in
    // either partition; n is constant between these evaluation points
    std::size_t max_diff = 0;
    const auto visit = [&](const Subspace& v) {
        const std::size_t na = count_containing(a, v);
        const std::size_t nb = count_containing(b, v);
        max_diff = std::max(max_diff, na > nb ? na - nb : nb - na);
    };
    for (const auto& [subspace, count] : a) {
        visit(subspace);
    }
    for (const auto& [subspace, count] : b) {
        if (a.find(subspace) == a.end()) {
            visit(subspace);
        }
    }
    return max_diff;
}

SensitivityResult sensitivity_oracle(int d, std::size_t m,
                                     const std::vector<BitVec>& pool,
                                     std::size_t trials,
                                     RandomnessHandle& rnd) {
    if (pool.empty()) {
        throw std::invalid_argument("sensitivity_oracle needs a nonempty pool");
    }
    for (const BitVec& v : pool) {
        if (v.is_zero()) {
            throw std::invalid_argument("sensitivity pool must be nonzero");
        }
        if (v.dim() != d) {
            throw DimensionMismatch("pool vector dimension mismatch");
        }
    }
    SensitivityResult result;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<BitVec> base;
        base.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            base.push_back(pool[rnd.uniform_index(pool.size())]);
        }
        const MultiplicityMap base_counts =
            multiplicities(stable_partition(base));
        for (std::size_t pos = 0; pos < m; ++pos) {
            const BitVec saved = base[pos];
            for (const BitVec& replacement : pool) {
                base[pos] = replacement;
                const std::size_t diff = multiplicity_linf_diff(
                    base_counts, multiplicities(stable_partition(base)));
                ++result.cases;
                if (diff > result.max_deviation) {
                    result.max_deviation = diff;
                    result.cases_at_max = 1;
                } else if (diff == result.max_deviation && diff > 0) {
                    ++result.cases_at_max;
                }
            }
            base[pos] = saved;
        }
    }
    return result;
}

SensitivityResult sensitivity_exhaustive_d2() {
    const std::vector<BitVec> pool = {BitVec::from_string("01"),
                                      BitVec::from_string("10"),
                                      BitVec::from_string("11")};
    SensitivityResult result;
    std::vector<BitVec> base(4, pool[0]);
    for (int code = 0; code < 81; ++code) {
        int c = code;
        for (int i = 0; i < 4; ++i) {
            base[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(c % 3)];
            c /= 3;
        }
        const MultiplicityMap base_counts =
            multiplicities(stable_partition(base));
        for (std::size_t pos = 0; pos < 4; ++pos) {
            const BitVec saved = base[pos];
            for (const BitVec& replacement : pool) {
                base[pos] = replacement;
                const std::size_t diff = multiplicity_linf_diff(
                    base_counts, multiplicities(stable_partition(base)));
                ++result.cases;
                if (diff > result.max_deviation) {
                    result.max_deviation = diff;
                    result.cases_at_max = 1;
                } else if (diff == result.max_deviation && diff > 0) {
                    ++result.cases_at_max;
                }
            }
            base[pos] = saved;
        }
    }
    return result;
}

std::vector<CoverageRow>
coverage_bench(const DistributionSpec& spec,
               const std::vector<std::size_t>& sizes,
               const std::function<SpanParams(std::size_t)>& params_for,
               const RandomnessHandle& master) {
    std::vector<CoverageRow> rows;
    for (std::size_t m : sizes) {
        RandomnessHandle data_rnd = master.sub("m-" + std::to_string(m) + "/data");
        RandomnessHandle alg_rnd = master.sub("m-" + std::to_string(m) + "/alg");
        std::vector<LabeledSample> samples = generate(spec, m, data_rnd);
        std::vector<BitVec> xs;
        xs.reserve(samples.size());
        for (const LabeledSample& s : samples) {
            xs.push_back(s.x);
        }
        const SpanParams params = params_for(m);
        const SpanOutcome outcome = rep_linear_span_detail(xs, params, alg_rnd);
        CoverageRow row;
        row.m = m;
        row.uncovered = uncovered_fraction(xs, outcome.subspace);
        row.bound = static_cast<double>(params.d) * params.d *
                    outcome.thresholds.t_max / static_cast<double>(m);
        row.threshold_drawn = outcome.threshold_drawn;
        rows.push_back(row);
    }
    return rows;
}

} // namespace repspan
