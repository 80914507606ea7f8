#include <doctest.h>

#include <sstream>

#include "repspan/dataset_io.hpp"
#include "repspan/harness.hpp"

using namespace repspan;

namespace {
BitVec bv(const char* s) { return BitVec::from_string(s); }
} // namespace

TEST_CASE("wilson interval brackets the point estimate") {
    const WilsonInterval w = wilson_interval(90, 100);
    CHECK(w.lo < 0.9);
    CHECK(w.hi > 0.9);
    CHECK(w.lo > 0.8);
    CHECK(w.hi < 0.96);
    const WilsonInterval all = wilson_interval(100, 100);
    CHECK(all.hi == doctest::Approx(1.0));
    CHECK(all.lo > 0.95);
}

TEST_CASE("uniform-full with a zero hidden parity labels everything 0") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(901);
    const auto samples = generate(uniform_full(3, bv("000")), 200, rnd);
    for (const auto& s : samples) {
        CHECK(s.y == 0);
    }
}

TEST_CASE("planted leak fraction concentrates") {
    RandomnessHandle seed = RandomnessHandle::from_seed(902);
    const DistributionSpec spec = planted_subspace(10, 2, 0.1, seed);
    const Subspace support = rref(10, spec.subspace_basis);
    RandomnessHandle rnd = RandomnessHandle::from_seed(903);
    const auto samples = generate(spec, 10000, rnd);
    std::size_t off = 0;
    for (const auto& s : samples) {
        if (!support.contains(s.x)) {
            ++off;
        }
    }
    const double frac = static_cast<double>(off) / 10000.0;
    CHECK(frac > 0.08);
    CHECK(frac < 0.12);
}

TEST_CASE("planted with k equal d and no leak spans the full space") {
    RandomnessHandle seed = RandomnessHandle::from_seed(904);
    const DistributionSpec spec = planted_subspace(4, 4, 0.0, seed);
    RandomnessHandle rnd = RandomnessHandle::from_seed(905);
    const auto samples = generate(spec, 500, rnd);
    std::vector<BitVec> xs;
    for (const auto& s : samples) {
        xs.push_back(s.x);
    }
    CHECK(rref(4, xs).dim() == 4);
}

TEST_CASE("labels follow the hidden parity with noise flipping") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(906);
    const BitVec z = bv("1100");
    const auto clean = generate(uniform_full(4, z), 500, rnd);
    for (const auto& s : clean) {
        CHECK(s.y == z.dot(s.x));
    }
    const auto noisy = generate(uniform_full(4, z, 0.5), 4000, rnd);
    std::size_t flipped = 0;
    for (const auto& s : noisy) {
        if (s.y != z.dot(s.x)) {
            ++flipped;
        }
    }
    CHECK(flipped > 1800);
    CHECK(flipped < 2200);
}

TEST_CASE("estimate_replicability is exactly 1 for a constant algorithm") {
    const std::function<int(const std::vector<LabeledSample>&,
                            RandomnessHandle&)>
        algorithm = [](const std::vector<LabeledSample>&, RandomnessHandle&) {
            return 42;
        };
    const DistributionSpec spec = uniform_full(3);
    const std::function<std::vector<LabeledSample>(RandomnessHandle&)> draw =
        [&](RandomnessHandle& rnd) { return generate(spec, 10, rnd); };
    const AgreementReport report = estimate_replicability<int>(
        100, RandomnessHandle::from_seed(907), draw, algorithm);
    CHECK(report.agreements == 100);
    CHECK(report.rate == 1.0);
}

TEST_CASE("copy-first-sample agreement matches the collision probability") {
    // two equal point masses: independent copies agree with prob 1/2
    const DistributionSpec spec =
        point_mass_mixture(2, {bv("10"), bv("01")}, {0.5, 0.5});
    const std::function<std::vector<LabeledSample>(RandomnessHandle&)> draw =
        [&](RandomnessHandle& rnd) { return generate(spec, 1, rnd); };
    const std::function<BitVec(const std::vector<LabeledSample>&,
                               RandomnessHandle&)>
        algorithm = [](const std::vector<LabeledSample>& s, RandomnessHandle&) {
            return s.front().x;
        };
    const AgreementReport report = estimate_replicability<BitVec>(
        2000, RandomnessHandle::from_seed(908), draw, algorithm);
    CHECK(report.wilson.lo < 0.5);
    CHECK(report.wilson.hi > 0.5);
}

TEST_CASE("two-parameter estimator: constant algorithm has modal mass 1") {
    const std::function<int(const std::vector<LabeledSample>&,
                            RandomnessHandle&)>
        algorithm = [](const std::vector<LabeledSample>&, RandomnessHandle&) {
            return 7;
        };
    const DistributionSpec spec = uniform_full(2);
    const std::function<std::vector<LabeledSample>(RandomnessHandle&)> draw =
        [&](RandomnessHandle& rnd) { return generate(spec, 5, rnd); };
    const TwoParamReport report = estimate_two_param_replicability<int>(
        10, 20, RandomnessHandle::from_seed(909), draw, algorithm);
    for (double m : report.modal_mass) {
        CHECK(m == 1.0);
    }
    CHECK(report.good_fraction(0.01) == 1.0);
}

TEST_CASE("two-parameter estimator: data-copying algorithm has modal mass "
          "near the larger point mass") {
    const DistributionSpec spec =
        point_mass_mixture(2, {bv("10"), bv("01")}, {0.7, 0.3});
    const std::function<std::vector<LabeledSample>(RandomnessHandle&)> draw =
        [&](RandomnessHandle& rnd) { return generate(spec, 1, rnd); };
    const std::function<BitVec(const std::vector<LabeledSample>&,
                               RandomnessHandle&)>
        algorithm = [](const std::vector<LabeledSample>& s, RandomnessHandle&) {
            return s.front().x;
        };
    const TwoParamReport report = estimate_two_param_replicability<BitVec>(
        4, 2000, RandomnessHandle::from_seed(910), draw, algorithm);
    for (double m : report.modal_mass) {
        CHECK(m > 0.65);
        CHECK(m < 0.75);
    }
}

TEST_CASE("exhaustive d=2 sensitivity sweep") {
    const SensitivityResult result = sensitivity_exhaustive_d2();
    CHECK(result.cases == 972);
    CHECK(result.max_deviation == 1);
    CHECK(result.cases_at_max > 0);
}

TEST_CASE("coverage bench rows respect the deterministic bound") {
    RandomnessHandle seed = RandomnessHandle::from_seed(911);
    const DistributionSpec spec = planted_subspace(5, 2, 0.05, seed);
    const auto rows = coverage_bench(
        spec, {400, 800, 1600},
        [](std::size_t m) {
            const double cap = static_cast<double>(m) / 25.0;
            return SpanParams{5, m, 0.1, 0.1,
                              {{cap * 0.25, cap * 0.5}}};
        },
        RandomnessHandle::from_seed(912));
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.uncovered <= row.bound);
        CHECK(row.bound ==
              25.0 * (static_cast<double>(row.m) / 25.0) * 0.5 /
                  static_cast<double>(row.m));
        CHECK(row.threshold_drawn >= static_cast<double>(row.m) / 100.0);
        CHECK(row.threshold_drawn <= static_cast<double>(row.m) / 50.0);
    }
}

TEST_CASE("dataset files round-trip") {
    Dataset data;
    data.d = 3;
    data.labeled = true;
    data.samples = {{bv("101"), 1}, {bv("010"), 0}, {bv("111"), 1}};
    std::stringstream buf;
    write_dataset(buf, data);
    CHECK(buf.str() == "#d=3\n101,1\n010,0\n111,1\n");
    const Dataset back = read_dataset(buf);
    CHECK(back.d == 3);
    CHECK(back.labeled);
    REQUIRE(back.samples.size() == 3);
    CHECK(back.samples[0].x == bv("101"));
    CHECK(back.samples[0].y == 1);
    CHECK(back.samples[2].y == 1);
}

TEST_CASE("dataset reader rejects malformed input") {
    std::stringstream no_header("101\n");
    CHECK_THROWS(read_dataset(no_header));
    std::stringstream bad_len("#d=3\n10\n");
    CHECK_THROWS(read_dataset(bad_len));
    std::stringstream bad_label("#d=2\n10,2\n");
    CHECK_THROWS(read_dataset(bad_label));
}
