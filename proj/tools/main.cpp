#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repspan/dataset_io.hpp"
#include "repspan/harness.hpp"
#include "repspan/heavy_hitters.hpp"
#include "repspan/linear_span.hpp"
#include "repspan/make_replicable.hpp"
#include "repspan/parity.hpp"
#include "repspan/partition.hpp"

using json = nlohmann::ordered_json;
using namespace repspan;

namespace {

struct BenchFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// report rendering

void render_text(const json& node, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            render_text(value, os, indent + 1);
        } else if (value.is_array()) {
            os << pad << key << ":\n";
            for (const auto& item : value) {
                if (item.is_object()) {
                    os << pad << "  -\n";
                    render_text(item, os, indent + 2);
                } else {
                    os << pad << "  - " << item.dump() << "\n";
                }
            }
        } else if (value.is_string()) {
            os << pad << key << ": " << value.get<std::string>() << "\n";
        } else {
            os << pad << key << ": " << value.dump() << "\n";
        }
    }
}

void render_csv(const json& report, std::ostream& os) {
    if (report.contains("rows") && report["rows"].is_array() &&
        !report["rows"].empty()) {
        const json& rows = report["rows"];
        bool first = true;
        for (const auto& [key, value] : rows.front().items()) {
            os << (first ? "" : ",") << key;
            first = false;
        }
        os << "\n";
        for (const auto& row : rows) {
            first = true;
            for (const auto& [key, value] : row.items()) {
                os << (first ? "" : ",");
                if (value.is_string()) {
                    os << value.get<std::string>();
                } else {
                    os << value.dump();
                }
                first = false;
            }
            os << "\n";
        }
        return;
    }
    os << "key,value\n";
    for (const auto& [key, value] : report.items()) {
        if (value.is_object() || value.is_array()) {
            continue;
        }
        os << key << ",";
        if (value.is_string()) {
            os << value.get<std::string>();
        } else {
            os << value.dump();
        }
        os << "\n";
    }
}

void emit(const json& report, const std::string& out_path,
          const std::string& format) {
    std::ostringstream buf;
    if (format == "json") {
        buf << report.dump(2) << "\n";
    } else if (format == "csv") {
        render_csv(report, buf);
    } else {
        render_text(report, buf, 0);
    }
    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot open output file: " + out_path);
        }
        file << buf.str();
    }
}

json basis_json(const Subspace& v) {
    json basis = json::array();
    for (const BitVec& b : v.basis()) {
        basis.push_back(b.to_string());
    }
    return basis;
}

json wilson_json(const WilsonInterval& w) {
    return json{{"lo", w.lo}, {"hi", w.hi}};
}

// ---------------------------------------------------------------------------
// shared option bundles

struct DistOptions {
    std::string kind = "uniform";
    int d = 4;
    int k = 2;
    double leak = 0.0;
    double noise = 0.0;
    std::string hidden; // "", "random", or a bitstring
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--dist", kind, "distribution kind")
            ->check(CLI::IsMember({"uniform", "planted", "from-file"}))
            ->capture_default_str();
        cmd->add_option("-d,--dim", d, "ambient dimension")
            ->capture_default_str();
        cmd->add_option("-k,--support-dim", k,
                        "planted support dimension")
            ->capture_default_str();
        cmd->add_option("--leak", leak, "off-subspace sample probability")
            ->capture_default_str();
        cmd->add_option("--noise", noise, "label flip probability")
            ->capture_default_str();
        cmd->add_option("--hidden", hidden,
                        "hidden parity: bitstring or 'random'");
        cmd->add_option("--dist-file", file, "dataset file for from-file");
    }

    DistributionSpec build(RandomnessHandle& rnd, json* out = nullptr) const {
        std::optional<BitVec> z;
        if (hidden == "random") {
            RandomnessHandle h = rnd.sub("hidden-parity");
            z = BitVec::random(d, h);
        } else if (!hidden.empty()) {
            z = BitVec::from_string(hidden);
        }
        DistributionSpec spec;
        if (kind == "planted") {
            RandomnessHandle b = rnd.sub("planted-basis");
            spec = planted_subspace(d, k, leak, b, z);
        } else if (kind == "from-file") {
            spec.kind = DistKind::FromFile;
            spec.d = d;
            spec.path = file;
            spec.hidden_parity = z;
        } else {
            spec = uniform_full(d, z);
        }
        spec.label_noise = noise;
        spec.validate();
        if (out != nullptr) {
            (*out)["kind"] = kind;
            (*out)["d"] = d;
            if (kind == "planted") {
                (*out)["k"] = k;
                (*out)["leak"] = leak;
            }
            if (z) {
                (*out)["hidden_parity"] = z->to_string();
            }
            if (noise > 0) {
                (*out)["label_noise"] = noise;
            }
        }
        return spec;
    }
};

struct ThresholdOptions {
    double t_min = -1;
    double t_max = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tmin", t_min, "threshold override T_min");
        cmd->add_option("--tmax", t_max, "threshold override T_max");
    }

    std::optional<std::pair<double, double>> resolve() const {
        const bool has_min = t_min >= 0;
        const bool has_max = t_max >= 0;
        if (has_min != has_max) {
            throw CLI::ValidationError(
                "--tmin and --tmax must be given together");
        }
        if (!has_min) {
            return std::nullopt;
        }
        return std::make_pair(t_min, t_max);
    }
};

std::vector<BitVec> vectors_of(const std::vector<LabeledSample>& samples) {
    std::vector<BitVec> xs;
    xs.reserve(samples.size());
    for (const LabeledSample& s : samples) {
        xs.push_back(s.x);
    }
    return xs;
}

// ---------------------------------------------------------------------------
// subcommands

json run_calc_params(int d, std::size_t m, double rho, double eps,
                     double delta) {
    json report;
    report["command"] = "calc-params";
    report["d"] = d;
    report["m"] = m;
    report["rho"] = rho;
    const Thresholds t = derive_thresholds(d, m, rho);
    report["t_min"] = t.t_min;
    report["t_max"] = t.t_max;
    try {
        validate_thresholds(t, d, m);
        report["valid"] = true;
    } catch (const ConfigError& e) {
        report["valid"] = false;
        report["invalid_reason"] = e.what();
    }
    report["recommended_sample_size"] =
        recommended_sample_size(d, rho, eps, delta);
    return report;
}

json run_partition(const std::string& in_path) {
    const Dataset data = read_dataset_file(in_path);
    const Partition p = stable_partition(vectors_of(data.samples));
    json report;
    report["command"] = "partition";
    report["d"] = data.d;
    report["m"] = data.samples.size();
    report["set_count"] = p.sets.size();
    json sets = json::array();
    for (const IndependentSet& set : p.sets) {
        json entry;
        entry["size"] = set.vectors.size();
        entry["span_dim"] = set.span.dim();
        entry["indices"] = set.indices;
        sets.push_back(entry);
    }
    report["sets"] = sets;
    const MultiplicityMap counts = multiplicities(p);
    json mult = json::array();
    for (const auto& [span, count] : counts) {
        json entry;
        entry["dim"] = span.dim();
        entry["basis"] = basis_json(span);
        entry["count"] = count;
        entry["count_containing"] = count_containing(counts, span);
        mult.push_back(entry);
    }
    report["multiplicities"] = mult;
    return report;
}

json run_span(const std::string& in_path, double rho, double eps,
              const ThresholdOptions& thr, std::uint64_t seed) {
    const Dataset data = read_dataset_file(in_path);
    const std::vector<BitVec> xs = vectors_of(data.samples);
    SpanParams params{data.d, xs.size(), rho, eps, thr.resolve()};
    RandomnessHandle rnd = RandomnessHandle::from_seed(seed);
    const SpanOutcome outcome = rep_linear_span_detail(xs, params, rnd);
    json report;
    report["command"] = "span";
    report["d"] = data.d;
    report["m"] = xs.size();
    report["seed"] = seed;
    report["t_min"] = outcome.thresholds.t_min;
    report["t_max"] = outcome.thresholds.t_max;
    report["threshold_drawn"] = outcome.threshold_drawn;
    report["dim"] = outcome.subspace.dim();
    report["basis"] = basis_json(outcome.subspace);
    report["zero_count"] = outcome.zero_count;
    report["uncovered_count"] = outcome.uncovered_count;
    report["uncovered_fraction"] = uncovered_fraction(xs, outcome.subspace);
    report["coverage_bound"] = static_cast<double>(params.d) * params.d *
                               outcome.thresholds.t_max /
                               static_cast<double>(xs.size());
    return report;
}

json run_learn(const std::string& in_path, const std::string& holdout_path,
               double rho, double eps, double delta,
               const ThresholdOptions& thr, bool wrap,
               std::size_t batch_size, std::uint64_t seed) {
    const Dataset data = read_dataset_file(in_path);
    if (!data.labeled) {
        throw ConfigError("learn needs a labeled dataset");
    }
    json report;
    report["command"] = "learn";
    report["d"] = data.d;
    report["m"] = data.samples.size();
    report["seed"] = seed;

    LearnerParams params{data.d, rho, eps, delta, thr.resolve()};
    RandomnessHandle rnd = RandomnessHandle::from_seed(seed);
    std::optional<ParityHypothesis> hypothesis;
    if (wrap) {
        if (batch_size == 0) {
            throw CLI::ValidationError("--wrap needs --batch-size > 0");
        }
        WrapperParams wp;
        wp.rho = rho;
        wp.delta = delta;
        wp.base_sample_size = batch_size;
        std::function<std::optional<ParityHypothesis>(
            const std::vector<LabeledSample>&, RandomnessHandle&)>
            base = [&](const std::vector<LabeledSample>& batch,
                       RandomnessHandle& r) {
                return learn_parity(batch, params, r);
            };
        FiniteSource source(data.samples);
        RandomnessHandle wrap_rnd = rnd.sub("wrapper");
        const auto outcome = make_replicable<std::optional<ParityHypothesis>>(
            base, wp, source, wrap_rnd);
        report["rounds_used"] = outcome.rounds_used;
        report["samples_consumed"] = outcome.samples_consumed;
        if (outcome.hypothesis.has_value()) {
            hypothesis = *outcome.hypothesis;
        } else {
            report["bottom"] = true;
        }
    } else {
        hypothesis = learn_parity(data.samples, params, rnd);
    }

    if (hypothesis) {
        report["feasible"] = true;
        report["w"] = hypothesis->w.to_string();
        report["training_error"] = empirical_error(*hypothesis, data.samples);
        if (!holdout_path.empty()) {
            const Dataset holdout = read_dataset_file(holdout_path);
            report["holdout_error"] =
                empirical_error(*hypothesis, holdout.samples);
        }
    } else {
        report["feasible"] = false;
    }
    return report;
}

json run_bench_replicability(const std::string& alg, const DistOptions& dist,
                             std::size_t m, std::size_t trials, double rho,
                             double eps, double delta,
                             const ThresholdOptions& thr, double min_rate_lb,
                             std::uint64_t seed) {
    RandomnessHandle master = RandomnessHandle::from_seed(seed);
    json report;
    report["command"] = "bench-replicability";
    report["algorithm"] = alg;
    json dist_json;
    const DistributionSpec spec = dist.build(master, &dist_json);
    report["distribution"] = dist_json;
    report["m"] = m;
    report["trials"] = trials;
    report["rho"] = rho;
    report["seed"] = seed;

    const std::function<std::vector<LabeledSample>(RandomnessHandle&)> draw =
        [&](RandomnessHandle& rnd) { return generate(spec, m, rnd); };

    AgreementReport agreement;
    if (alg == "span") {
        SpanParams params{dist.d, m, rho, eps, thr.resolve()};
        const std::function<Subspace(const std::vector<LabeledSample>&,
                                     RandomnessHandle&)>
            algorithm = [&](const std::vector<LabeledSample>& samples,
                            RandomnessHandle& rnd) {
                return rep_linear_span(vectors_of(samples), params, rnd);
            };
        agreement = estimate_replicability<Subspace>(trials, master.sub("bench"),
                                                     draw, algorithm);
    } else {
        LearnerParams params{dist.d, rho, eps, delta, thr.resolve()};
        const std::function<std::optional<ParityHypothesis>(
            const std::vector<LabeledSample>&, RandomnessHandle&)>
            algorithm = [&](const std::vector<LabeledSample>& samples,
                            RandomnessHandle& rnd) {
                return learn_parity(samples, params, rnd);
            };
        agreement = estimate_replicability<std::optional<ParityHypothesis>>(
            trials, master.sub("bench"), draw, algorithm);
    }
    report["agreements"] = agreement.agreements;
    report["rate"] = agreement.rate;
    report["wilson"] = wilson_json(agreement.wilson);
    if (min_rate_lb >= 0 && agreement.wilson.lo < min_rate_lb) {
        report["passed"] = false;
        emit(report, "", "text");
        throw BenchFailure("wilson lower bound " +
                           std::to_string(agreement.wilson.lo) +
                           " below required " + std::to_string(min_rate_lb));
    }
    if (min_rate_lb >= 0) {
        report["passed"] = true;
    }
    return report;
}

json run_bench_coverage(const DistOptions& dist,
                        const std::vector<std::size_t>& sizes, double rho,
                        double eps, double tmin_frac, double tmax_frac,
                        std::uint64_t seed) {
    RandomnessHandle master = RandomnessHandle::from_seed(seed);
    json report;
    report["command"] = "bench-coverage";
    json dist_json;
    const DistributionSpec spec = dist.build(master, &dist_json);
    report["distribution"] = dist_json;
    report["seed"] = seed;
    const int d = dist.d;
    const auto rows = coverage_bench(
        spec, sizes,
        [&](std::size_t m) {
            const double cap =
                static_cast<double>(m) / (static_cast<double>(d) * d);
            return SpanParams{d, m, rho, eps,
                              {{cap * tmin_frac, cap * tmax_frac}}};
        },
        master.sub("coverage"));
    json out_rows = json::array();
    bool ok = true;
    for (const CoverageRow& row : rows) {
        json r;
        r["m"] = row.m;
        r["uncovered_fraction"] = row.uncovered;
        r["bound"] = row.bound;
        r["threshold_drawn"] = row.threshold_drawn;
        ok = ok && row.uncovered <= row.bound;
        out_rows.push_back(r);
    }
    report["rows"] = out_rows;
    report["passed"] = ok;
    if (!ok) {
        emit(report, "", "text");
        throw BenchFailure("uncovered fraction exceeded the bound");
    }
    return report;
}

json run_bench_sensitivity(int d, std::size_t m, std::size_t trials,
                           std::size_t pool_size, bool exhaustive,
                           std::uint64_t seed) {
    json report;
    report["command"] = "bench-sensitivity";
    SensitivityResult result;
    if (exhaustive) {
        report["mode"] = "exhaustive-d2";
        result = sensitivity_exhaustive_d2();
    } else {
        report["mode"] = "random";
        report["d"] = d;
        report["m"] = m;
        report["trials"] = trials;
        report["seed"] = seed;
        RandomnessHandle rnd = RandomnessHandle::from_seed(seed);
        std::vector<BitVec> pool;
        RandomnessHandle pool_rnd = rnd.sub("pool");
        while (pool.size() < pool_size) {
            BitVec v = BitVec::random(d, pool_rnd);
            if (!v.is_zero()) {
                pool.push_back(std::move(v));
            }
        }
        RandomnessHandle sweep = rnd.sub("sweep");
        result = sensitivity_oracle(d, m, pool, trials, sweep);
    }
    report["cases"] = result.cases;
    report["max_deviation"] = result.max_deviation;
    report["cases_at_max"] = result.cases_at_max;
    report["passed"] = result.max_deviation <= 1;
    if (result.max_deviation > 1) {
        emit(report, "", "text");
        throw BenchFailure("sensitivity exceeded 1");
    }
    return report;
}

json run_bench_hh(std::size_t trials, double rho, std::size_t n_override,
                  double min_rate_lb, std::uint64_t seed) {
    HHParams params{1.0 / 12.0, 2.0 / 3.0, rho};
    params.validate();
    const std::size_t n =
        n_override > 0
            ? n_override
            : static_cast<std::size_t>(params.advisory_sample_count());
    json report;
    report["command"] = "bench-hh";
    report["trials"] = trials;
    report["rho"] = rho;
    report["n"] = n;
    report["seed"] = seed;

    // planted 0.9-frequency item; everything else unique in its run
    RandomnessHandle master = RandomnessHandle::from_seed(seed);
    std::size_t agreements = 0;
    bool sound = true;
    const auto draw = [&](RandomnessHandle& rnd) {
        std::vector<std::int64_t> items;
        items.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rnd.uniform_real(0.0, 1.0) < 0.9) {
                items.push_back(0);
            } else {
                items.push_back(static_cast<std::int64_t>(i) + 1);
            }
        }
        return items;
    };
    for (std::size_t trial = 0; trial < trials; ++trial) {
        RandomnessHandle t = master.sub("trial-" + std::to_string(trial));
        RandomnessHandle d1 = t.sub("data-1");
        RandomnessHandle d2 = t.sub("data-2");
        const RandomnessHandle shared = t.sub("shared");
        RandomnessHandle r1 = shared;
        RandomnessHandle r2 = shared;
        const auto items1 = draw(d1);
        const auto items2 = draw(d2);
        const auto out1 = r_heavy_hitters(items1, params, r1);
        const auto out2 = r_heavy_hitters(items2, params, r2);
        if (out1 == out2) {
            ++agreements;
        }
        for (const auto* pair : {&items1, &items2}) {
            const auto& out = pair == &items1 ? out1 : out2;
            for (std::int64_t item : out) {
                const auto count = static_cast<double>(
                    std::count(pair->begin(), pair->end(), item));
                if (count / static_cast<double>(n) <
                    params.nu_hh - params.eps_hh) {
                    sound = false;
                }
            }
        }
    }
    const WilsonInterval wilson = wilson_interval(agreements, trials);
    report["agreements"] = agreements;
    report["rate"] =
        static_cast<double>(agreements) / static_cast<double>(trials);
    report["wilson"] = wilson_json(wilson);
    report["sound"] = sound;
    const bool passed =
        sound && (min_rate_lb < 0 || wilson.lo >= min_rate_lb);
    report["passed"] = passed;
    if (!passed) {
        emit(report, "", "text");
        throw BenchFailure(sound ? "wilson lower bound below required rate"
                                 : "soundness violated");
    }
    return report;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"replicable parity learning over GF(2)"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global flags after the subcommand too
    app.set_config("--config", "", "read option defaults from a file");

    std::uint64_t seed = 1;
    std::string out_path;
    std::string format = "text";
    app.add_option("--seed", seed, "master seed")
        ->envname("REPSPAN_SEED")
        ->capture_default_str();
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    // calc-params
    auto* calc = app.add_subcommand(
        "calc-params", "print thresholds, validity, and sample sizes");
    int cp_d = 5;
    std::size_t cp_m = 10000;
    double cp_rho = 0.1, cp_eps = 0.1, cp_delta = 0.05;
    calc->add_option("-d,--dim", cp_d)->capture_default_str();
    calc->add_option("-m,--samples", cp_m)->capture_default_str();
    calc->add_option("--rho", cp_rho)->capture_default_str();
    calc->add_option("--eps", cp_eps)->capture_default_str();
    calc->add_option("--delta", cp_delta)->capture_default_str();

    // partition
    auto* part = app.add_subcommand("partition",
                                    "stable partition of a dataset file");
    std::string part_in;
    part->add_option("--in", part_in, "dataset file")->required();

    // span
    auto* span = app.add_subcommand("span",
                                    "replicable linear span of a dataset");
    std::string span_in;
    double span_rho = 0.1, span_eps = 0.1;
    ThresholdOptions span_thr;
    span->add_option("--in", span_in, "dataset file")->required();
    span->add_option("--rho", span_rho)->capture_default_str();
    span->add_option("--eps", span_eps)->capture_default_str();
    span_thr.attach(span);

    // learn
    auto* learn = app.add_subcommand("learn", "replicable parity learner");
    std::string learn_in, learn_holdout;
    double learn_rho = 0.1, learn_eps = 0.1, learn_delta = 0.05;
    bool learn_wrap = false;
    std::size_t learn_batch = 0;
    ThresholdOptions learn_thr;
    learn->add_option("--in", learn_in, "labeled dataset file")->required();
    learn->add_option("--holdout", learn_holdout, "holdout dataset file");
    learn->add_option("--rho", learn_rho)->capture_default_str();
    learn->add_option("--eps", learn_eps)->capture_default_str();
    learn->add_option("--delta", learn_delta)->capture_default_str();
    learn->add_flag("--wrap", learn_wrap,
                    "run under the replicability wrapper");
    learn->add_option("--batch-size", learn_batch,
                      "base learner sample size per batch (with --wrap)");
    learn_thr.attach(learn);

    // bench-replicability
    auto* br = app.add_subcommand("bench-replicability",
                                  "paired-run agreement estimate");
    std::string br_alg = "span";
    DistOptions br_dist;
    std::size_t br_m = 400, br_trials = 100;
    double br_rho = 0.1, br_eps = 0.1, br_delta = 0.05, br_min_lb = -1;
    ThresholdOptions br_thr;
    br->add_option("--alg", br_alg, "algorithm under test")
        ->check(CLI::IsMember({"span", "parity"}))
        ->capture_default_str();
    br_dist.attach(br);
    br->add_option("-m,--samples", br_m)->capture_default_str();
    br->add_option("--trials", br_trials)->capture_default_str();
    br->add_option("--rho", br_rho)->capture_default_str();
    br->add_option("--eps", br_eps)->capture_default_str();
    br->add_option("--delta", br_delta)->capture_default_str();
    br->add_option("--min-rate-lb", br_min_lb,
                   "fail (exit 1) if the Wilson lower bound is smaller");
    br_thr.attach(br);

    // bench-coverage
    auto* bc = app.add_subcommand("bench-coverage",
                                  "uncovered fraction vs. the bound");
    DistOptions bc_dist;
    std::vector<std::size_t> bc_sizes{400, 800, 1600};
    double bc_rho = 0.1, bc_eps = 0.1;
    double bc_tmin_frac = 0.25, bc_tmax_frac = 0.5;
    bc_dist.attach(bc);
    bc->add_option("--sizes", bc_sizes, "sample sizes")->capture_default_str();
    bc->add_option("--rho", bc_rho)->capture_default_str();
    bc->add_option("--eps", bc_eps)->capture_default_str();
    bc->add_option("--tmin-frac", bc_tmin_frac,
                   "T_min as a fraction of m/d^2")
        ->capture_default_str();
    bc->add_option("--tmax-frac", bc_tmax_frac,
                   "T_max as a fraction of m/d^2")
        ->capture_default_str();

    // bench-sensitivity
    auto* bs = app.add_subcommand("bench-sensitivity",
                                  "multiplicity replacement sensitivity");
    int bs_d = 6;
    std::size_t bs_m = 50, bs_trials = 10, bs_pool = 6;
    bool bs_exhaustive = false;
    bs->add_option("-d,--dim", bs_d)->capture_default_str();
    bs->add_option("-m,--samples", bs_m)->capture_default_str();
    bs->add_option("--trials", bs_trials)->capture_default_str();
    bs->add_option("--pool-size", bs_pool)->capture_default_str();
    bs->add_flag("--exhaustive", bs_exhaustive,
                 "all length-4 sequences over nonzero GF(2)^2");

    // bench-hh
    auto* bh = app.add_subcommand("bench-hh",
                                  "heavy hitters paired-run agreement");
    std::size_t bh_trials = 200, bh_n = 0;
    double bh_rho = 0.1, bh_min_lb = -1;
    bh->add_option("--trials", bh_trials)->capture_default_str();
    bh->add_option("--rho", bh_rho)->capture_default_str();
    bh->add_option("-n,--items", bh_n,
                   "items per run (default: advisory count)");
    bh->add_option("--min-rate-lb", bh_min_lb,
                   "fail (exit 1) if the Wilson lower bound is smaller");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json report;
        if (*calc) {
            report = run_calc_params(cp_d, cp_m, cp_rho, cp_eps, cp_delta);
        } else if (*part) {
            report = run_partition(part_in);
        } else if (*span) {
            report = run_span(span_in, span_rho, span_eps, span_thr, seed);
        } else if (*learn) {
            report = run_learn(learn_in, learn_holdout, learn_rho, learn_eps,
                               learn_delta, learn_thr, learn_wrap, learn_batch,
                               seed);
        } else if (*br) {
            report = run_bench_replicability(br_alg, br_dist, br_m, br_trials,
                                             br_rho, br_eps, br_delta, br_thr,
                                             br_min_lb, seed);
        } else if (*bc) {
            report = run_bench_coverage(bc_dist, bc_sizes, bc_rho, bc_eps,
                                        bc_tmin_frac, bc_tmax_frac, seed);
        } else if (*bs) {
            report = run_bench_sensitivity(bs_d, bs_m, bs_trials, bs_pool,
                                           bs_exhaustive, seed);
        } else if (*bh) {
            report = run_bench_hh(bh_trials, bh_rho, bh_n, bh_min_lb, seed);
        }
        emit(report, out_path, format);
        return 0;
    } catch (const BenchFailure& e) {
        std::cerr << "bench failed: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
