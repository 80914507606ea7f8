#include <doctest.h>

#include "repspan/harness.hpp"
#include "repspan/partition.hpp"

using namespace repspan;

namespace {
BitVec bv(const char* s) { return BitVec::from_string(s); }
} // namespace

TEST_CASE("alternating basis vectors split into two full sets") {
    const BitVec e1 = bv("10");
    const BitVec e2 = bv("01");
    const Partition p = stable_partition({e1, e2, e1, e2});
    REQUIRE(p.sets.size() == 2);
    CHECK(p.sets[0].indices == std::vector<std::size_t>{0, 1});
    CHECK(p.sets[1].indices == std::vector<std::size_t>{2, 3});
    const MultiplicityMap counts = multiplicities(p);
    REQUIRE(counts.size() == 1);
    CHECK(counts.begin()->first == rref(2, {e1, e2}));
    CHECK(counts.begin()->second == 2);
}

TEST_CASE("repeated vector gives singleton sets") {
    const BitVec v = bv("101");
    const Partition p = stable_partition({v, v, v});
    REQUIRE(p.sets.size() == 3);
    for (const auto& set : p.sets) {
        CHECK(set.vectors == std::vector<BitVec>{v});
    }
    const MultiplicityMap counts = multiplicities(p);
    REQUIRE(counts.size() == 1);
    CHECK(counts.at(rref(3, {v})) == 3);
}

TEST_CASE("dependent third vector is deferred to the next sweep") {
    const BitVec e1 = bv("10");
    const BitVec e2 = bv("01");
    const Partition p = stable_partition({e1, e1 ^ e2, e2});
    REQUIRE(p.sets.size() == 2);
    CHECK(p.sets[0].indices == std::vector<std::size_t>{0, 1});
    CHECK(p.sets[1].indices == std::vector<std::size_t>{2});
    CHECK(p.sets[0].span.dim() == 2);
    CHECK(p.sets[1].span == rref(2, {e2}));
    CHECK(p.sets[0].span.contains_subspace(p.sets[1].span));
}

TEST_CASE("zero vectors are rejected with the offending index") {
    try {
        stable_partition({bv("10"), bv("00"), bv("01")});
        FAIL("expected ZeroVectorError");
    } catch (const ZeroVectorError& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("empty input gives an empty partition and map") {
    const Partition p = stable_partition({});
    CHECK(p.sets.empty());
    CHECK(multiplicities(p).empty());
}

TEST_CASE("spans form a nested chain of at most d distinct subspaces") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(101);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 1 + static_cast<int>(rnd.uniform_index(6));
        const std::size_t m = 1 + rnd.uniform_index(60);
        std::vector<BitVec> vs;
        // small pools produce repeated spans
        std::vector<BitVec> pool;
        const std::size_t pool_size = 1 + rnd.uniform_index(6);
        while (pool.size() < pool_size) {
            BitVec v = BitVec::random(d, rnd);
            if (!v.is_zero()) {
                pool.push_back(std::move(v));
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            vs.push_back(pool[rnd.uniform_index(pool.size())]);
        }
        const Partition p = stable_partition(vs);

        std::vector<Subspace> distinct;
        for (const auto& set : p.sets) {
            if (distinct.empty() || distinct.back() != set.span) {
                if (!distinct.empty()) {
                    CHECK(distinct.back().contains_subspace(set.span));
                }
                distinct.push_back(set.span);
            }
        }
        CHECK(distinct.size() <= static_cast<std::size_t>(d));
        // set sizes never grow
        for (std::size_t j = 1; j < p.sets.size(); ++j) {
            CHECK(p.sets[j - 1].vectors.size() >= p.sets[j].vectors.size());
        }
    }
}

TEST_CASE("multiplicities sum to the number of sets") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(103);
    std::vector<BitVec> vs;
    for (int i = 0; i < 50; ++i) {
        BitVec v = BitVec::random(4, rnd);
        if (!v.is_zero()) {
            vs.push_back(std::move(v));
        }
    }
    const Partition p = stable_partition(vs);
    const MultiplicityMap counts = multiplicities(p);
    std::size_t total = 0;
    for (const auto& [subspace, count] : counts) {
        total += count;
    }
    CHECK(total == p.sets.size());
    CHECK(counts.size() <= 4);
}

TEST_CASE("some span reaches the pigeonhole floor m over d squared") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(107);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + static_cast<int>(rnd.uniform_index(4));
        const std::size_t m = 20 + rnd.uniform_index(80);
        std::vector<BitVec> vs;
        for (std::size_t i = 0; i < m; ++i) {
            BitVec v = BitVec::random(d, rnd);
            while (v.is_zero()) {
                v = BitVec::random(d, rnd);
            }
            vs.push_back(std::move(v));
        }
        const MultiplicityMap counts = multiplicities(stable_partition(vs));
        std::size_t best = 0;
        for (const auto& [subspace, count] : counts) {
            best = std::max(best, count);
        }
        CHECK(static_cast<double>(best) >=
              static_cast<double>(m) / (static_cast<double>(d) * d));
    }
}

TEST_CASE("replacement sensitivity stays at one on small random cases") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(109);
    std::vector<BitVec> pool = {bv("001"), bv("010"), bv("100"),
                                bv("011"), bv("111")};
    const SensitivityResult result = sensitivity_oracle(3, 6, pool, 5, rnd);
    CHECK(result.cases == 5 * 6 * pool.size());
    CHECK(result.max_deviation <= 1);
}
