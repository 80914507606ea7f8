#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "repspan/gf2.hpp"

using namespace repspan;

namespace {

BitVec bv(const char* s) { return BitVec::from_string(s); }

// every w in GF(2)^d satisfying all equations, by enumeration
std::set<BitVec> brute_force_solutions(
    int d, const std::vector<std::pair<BitVec, int>>& eqs) {
    std::set<BitVec> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
        BitVec w(d);
        for (int i = 0; i < d; ++i) {
            w.set(i, (code >> i) & 1);
        }
        bool ok = true;
        for (const auto& [x, y] : eqs) {
            if (w.dot(x) != (y & 1)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.insert(w);
        }
    }
    return out;
}

std::set<BitVec> enumerate_solution_set(const AffineSolutionSet& sols) {
    std::set<BitVec> out;
    const auto& basis = sols.null_basis.basis();
    const std::uint64_t n = std::uint64_t{1} << basis.size();
    for (std::uint64_t code = 0; code < n; ++code) {
        BitVec w = sols.particular;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if ((code >> i) & 1) {
                w ^= basis[i];
            }
        }
        out.insert(w);
    }
    return out;
}

} // namespace

TEST_CASE("BitVec basics") {
    BitVec v(3);
    CHECK(v.is_zero());
    v.set(1, true);
    CHECK(v.to_string() == "010");
    CHECK(v.get(1));
    CHECK_THROWS_AS(v.get(3), std::out_of_range);
    CHECK_THROWS_AS(v.get(-1), std::out_of_range);

    CHECK((bv("110") ^ bv("011")) == bv("101"));
    CHECK(bv("101").dot(bv("111")) == 0);
    CHECK(bv("101").dot(bv("100")) == 1);
    CHECK_THROWS_AS(bv("10").dot(bv("100")), DimensionMismatch);
}

TEST_CASE("rref of empty row set is the zero subspace") {
    const Subspace s = rref(3, {});
    CHECK(s.dim() == 0);
    CHECK(s.contains(bv("000")));
    CHECK_FALSE(s.contains(bv("100")));
}

TEST_CASE("rref canonicalizes a dependent set") {
    const Subspace s = rref(3, {bv("110"), bv("011"), bv("101")});
    CHECK(s.dim() == 2);
    CHECK(s.contains(bv("110")));
    CHECK(s.contains(bv("011")));
    CHECK(s.contains(bv("101")));
    CHECK_FALSE(s.contains(bv("100")));
    // canonical basis: pivots 0 and 1, zeros above pivots
    REQUIRE(s.basis().size() == 2);
    CHECK(s.basis()[0] == bv("101"));
    CHECK(s.basis()[1] == bv("011"));
}

TEST_CASE("rref of the standard basis is itself") {
    const Subspace s =
        rref(3, {BitVec::unit(3, 0), BitVec::unit(3, 1), BitVec::unit(3, 2)});
    CHECK(s.dim() == 3);
    REQUIRE(s.basis().size() == 3);
    CHECK(s.basis()[0] == bv("100"));
    CHECK(s.basis()[1] == bv("010"));
    CHECK(s.basis()[2] == bv("001"));
}

TEST_CASE("rref is idempotent") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + static_cast<int>(rnd.uniform_index(8));
        std::vector<BitVec> rows;
        const std::size_t n = rnd.uniform_index(10);
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(BitVec::random(d, rnd));
        }
        const Subspace once = rref(d, rows);
        const Subspace twice = rref(d, once.basis());
        CHECK(once == twice);
    }
}

TEST_CASE("contains agrees with rank") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(19);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 1 + static_cast<int>(rnd.uniform_index(8));
        std::vector<BitVec> rows;
        const std::size_t n = rnd.uniform_index(8);
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(BitVec::random(d, rnd));
        }
        const Subspace V = rref(d, rows);
        const BitVec v = BitVec::random(d, rnd);
        std::vector<BitVec> extended = V.basis();
        extended.push_back(v);
        CHECK(V.contains(v) == (rref(d, extended).dim() == V.dim()));
    }
}

TEST_CASE("rref rejects mixed dimensions") {
    CHECK_THROWS_AS(rref(3, {bv("110"), bv("01")}), DimensionMismatch);
}

TEST_CASE("is_independent_with") {
    const BitVec e1 = BitVec::unit(3, 0);
    const BitVec e2 = BitVec::unit(3, 1);
    CHECK_FALSE(is_independent_with({e1}, e1));
    CHECK_FALSE(is_independent_with({e1, e2}, e1 ^ e2));
    CHECK(is_independent_with({}, bv("010")));
    CHECK_FALSE(is_independent_with({}, bv("000")));
    CHECK(is_independent_with({e1, e2}, bv("001")));
}

TEST_CASE("incremental basis matches batch rank") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + static_cast<int>(rnd.uniform_index(10));
        IncrementalBasis inc(d);
        std::vector<BitVec> inserted;
        for (int i = 0; i < 12; ++i) {
            const BitVec v = BitVec::random(d, rnd);
            const bool fresh = inc.would_extend(v);
            CHECK(fresh == is_independent_with(inserted, v));
            if (inc.try_insert(v)) {
                inserted.push_back(v);
            }
        }
        CHECK(inc.to_subspace() == rref(d, inserted));
    }
}

TEST_CASE("solve_affine with no equations returns the full space") {
    const auto sols = solve_affine(2, {});
    REQUIRE(sols.has_value());
    CHECK(sols->particular == bv("00"));
    CHECK(sols->null_basis.dim() == 2);
}

TEST_CASE("solve_affine with a unique solution") {
    const auto sols = solve_affine(2, {{bv("10"), 1}, {bv("01"), 0}});
    REQUIRE(sols.has_value());
    CHECK(sols->particular == bv("10"));
    CHECK(sols->null_basis.dim() == 0);
}

TEST_CASE("solve_affine reports contradictions") {
    CHECK_FALSE(solve_affine(2, {{bv("10"), 1}, {bv("10"), 0}}).has_value());
}

TEST_CASE("solve_affine equals brute force enumeration") {
    RandomnessHandle rnd = RandomnessHandle::from_seed(29);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 1 + static_cast<int>(rnd.uniform_index(4));
        std::vector<std::pair<BitVec, int>> eqs;
        const std::size_t n = rnd.uniform_index(static_cast<std::uint64_t>(2 * d) + 1);
        for (std::size_t i = 0; i < n; ++i) {
            eqs.emplace_back(BitVec::random(d, rnd),
                             static_cast<int>(rnd.fair_bit()));
        }
        const auto brute = brute_force_solutions(d, eqs);
        const auto sols = solve_affine(d, eqs);
        if (!sols) {
            CHECK(brute.empty());
        } else {
            CHECK(enumerate_solution_set(*sols) == brute);
        }
    }
}

TEST_CASE("sample_uniform is deterministic and hits only solutions") {
    const auto sols = solve_affine(4, {{bv("1000"), 1}, {bv("0110"), 1}});
    REQUIRE(sols.has_value());
    RandomnessHandle a = RandomnessHandle::from_seed(31).sub("coset");
    RandomnessHandle b = RandomnessHandle::from_seed(31).sub("coset");
    for (int i = 0; i < 64; ++i) {
        const BitVec w = sample_uniform(*sols, a);
        CHECK(w == sample_uniform(*sols, b));
        CHECK(w.dot(bv("1000")) == 1);
        CHECK(w.dot(bv("0110")) == 1);
    }
}

TEST_CASE("sample_uniform with trivial kernel returns the particular solution") {
    const auto sols = solve_affine(2, {{bv("10"), 1}, {bv("01"), 0}});
    REQUIRE(sols.has_value());
    RandomnessHandle rnd = RandomnessHandle::from_seed(37);
    for (int i = 0; i < 10; ++i) {
        CHECK(sample_uniform(*sols, rnd) == bv("10"));
    }
}

TEST_CASE("sample_uniform with a one-dimensional kernel is a fair coin") {
    AffineSolutionSet sols{bv("10"), rref(2, {bv("01")})};
    RandomnessHandle rnd = RandomnessHandle::from_seed(41);
    int hi = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const BitVec w = sample_uniform(sols, rnd);
        REQUIRE((w == bv("10") || w == bv("11")));
        if (w == bv("11")) {
            ++hi;
        }
    }
    CHECK(std::abs(hi - n / 2) < 5 * std::sqrt(n / 4.0));
}
