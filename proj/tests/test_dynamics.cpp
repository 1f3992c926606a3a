#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "ppdiag/dynamics.hpp"

using namespace ppdiag;

namespace {

SystemParams sys(uint64_t n, uint64_t c, uint64_t p) {
    return SystemParams(n, c, PrimeModulus(p));
}

std::set<uint64_t> as_set(const Bitset& bits) {
    auto v = bits.to_vector();
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("params validation") {
    CHECK_THROWS_AS(sys(1, 0, 7), std::invalid_argument);
    CHECK_THROWS_AS(sys(2, 7, 7), std::invalid_argument);
    CHECK_NOTHROW(sys(2, 6, 7));
}

TEST_CASE("step examples") {
    CHECK(step(0, sys(2, 1, 7)) == 1);
    CHECK(step(2, sys(2, 0, 7)) == 4);
    CHECK(step(3, sys(2, 3, 7)) == 5);
    CHECK(step(5, sys(2, 3, 7)) == 0);
}

TEST_CASE("orbit_info examples") {
    // 0 -> 1 -> 2 -> 5 -> 5 under x^2 + 1 mod 7
    CHECK(orbit_info(0, sys(2, 1, 7)) == OrbitInfo{0, 3, 1});
    // 3-cycle 0 -> 3 -> 5 -> 0 under x^2 + 3 mod 7
    CHECK(orbit_info(0, sys(2, 3, 7)) == OrbitInfo{0, 0, 3});
    // 2-cycle 2 <-> 4 under x^2 mod 7
    CHECK(orbit_info(4, sys(2, 0, 7)) == OrbitInfo{4, 0, 2});
}

TEST_CASE("orbit_info against direct iteration") {
    // Walk until the first repeated value, recording positions; the repeat
    // position is the preperiod and the remaining tail length the period.
    auto brute = [](uint64_t x, const SystemParams& params) {
        std::vector<int64_t> seen_at(params.p.value(), -1);
        uint64_t y = x;
        uint64_t steps = 0;
        while (seen_at[y] < 0) {
            seen_at[y] = static_cast<int64_t>(steps++);
            y = step(y, params);
        }
        uint64_t preperiod = static_cast<uint64_t>(seen_at[y]);
        return OrbitInfo{x, preperiod, steps - preperiod};
    };

    for (PrimeModulus p : primes_up_to(31)) {
        for (uint64_t n : {2, 5}) {
            for (uint64_t c = 0; c < p.value(); ++c) {
                SystemParams params(n, c, p);
                for (uint64_t x = 0; x < p.value(); ++x)
                    REQUIRE(orbit_info(x, params) == brute(x, params));
            }
        }
    }
}

TEST_CASE("congruent exponents give the same map") {
    // x^n depends only on n mod (p-1) for x != 0, and 0^n = 0 for n >= 1,
    // so exponents are applied exactly however large they are.
    PrimeModulus p(13);
    for (uint64_t c : {0, 5}) {
        auto small = periodic_points(SystemParams(2, c, p)).members;
        auto congruent = periodic_points(SystemParams(14, c, p)).members;
        auto huge = periodic_points(SystemParams(2 + 12 * 1000000007ull, c, p)).members;
        CHECK(small == congruent);
        CHECK(small == huge);
    }
}

TEST_CASE("reference scan on the seven quadratic systems mod 7") {
    CHECK(as_set(periodic_points_naive(sys(2, 0, 7)).members) == std::set<uint64_t>{0, 1, 2, 4});
    CHECK(as_set(periodic_points_naive(sys(2, 2, 7)).members) == std::set<uint64_t>{4});
    CHECK(as_set(periodic_points_naive(sys(2, 5, 7)).members) == std::set<uint64_t>{2, 6});
}

TEST_CASE("fast detector examples") {
    CHECK(as_set(periodic_points(sys(2, 3, 7)).members) == std::set<uint64_t>{0, 3, 5});
    CHECK(as_set(periodic_points(sys(2, 6, 7)).members) == std::set<uint64_t>{0, 6});
    CHECK(as_set(periodic_points(sys(3, 4, 5)).members) == std::set<uint64_t>{0, 1, 2, 3, 4});
}

TEST_CASE("is_bijective") {
    CHECK(is_bijective(3, PrimeModulus(5)));
    CHECK_FALSE(is_bijective(2, PrimeModulus(7)));
    CHECK_FALSE(is_bijective(5, PrimeModulus(71)));
    CHECK(is_bijective(2, PrimeModulus(2)));
}

TEST_CASE("functional_graph examples") {
    auto edges = functional_graph(sys(2, 2, 7));
    REQUIRE(edges.size() == 7);
    for (uint64_t x = 0; x < 7; ++x) CHECK(edges[x].first == x);
    CHECK(edges[3].second == 4);
    CHECK(edges[4].second == 4);

    auto loops = functional_graph(sys(2, 0, 2));
    CHECK(loops == std::vector<std::pair<uint64_t, uint64_t>>{{0, 0}, {1, 1}});

    auto cyc = functional_graph(sys(2, 4, 7));
    CHECK(cyc[1].second == 5);
    CHECK(cyc[5].second == 1);
}

TEST_CASE("fast detector equals reference scan for p < 60") {
    for (PrimeModulus p : primes_up_to(59)) {
        for (uint64_t n = 2; n <= 7; ++n) {
            PeriodicScanner scanner(n, p);
            for (uint64_t c = 0; c < p.value(); ++c) {
                CAPTURE(n);
                CAPTURE(p.value());
                CAPTURE(c);
                REQUIRE(scanner.scan(c) == periodic_points_naive(SystemParams(n, c, p)).members);
            }
        }
    }
}

TEST_CASE("membership matches zero preperiod") {
    for (PrimeModulus p : primes_up_to(59)) {
        for (uint64_t n = 2; n <= 7; ++n) {
            for (uint64_t c = 0; c < p.value(); ++c) {
                SystemParams params(n, c, p);
                Bitset members = periodic_points(params).members;
                for (uint64_t x = 0; x < p.value(); ++x) {
                    bool periodic = orbit_info(x, params).preperiod == 0;
                    REQUIRE(members.test(x) == periodic);
                }
            }
        }
    }
}

TEST_CASE("pure cycle structure iff gcd(n, p-1) == 1") {
    for (PrimeModulus p : primes_up_to(59)) {
        for (uint64_t n = 2; n <= 7; ++n) {
            bool all_full = true;
            for (uint64_t c = 0; c < p.value(); ++c)
                all_full = all_full &&
                           periodic_points(SystemParams(n, c, p)).members.count() == p.value();
            CHECK(all_full == is_bijective(n, p));
        }
    }
}

TEST_CASE("advancing to the cycle preserves the period") {
    for (PrimeModulus p : primes_up_to(31)) {
        for (uint64_t n : {2, 5}) {
            for (uint64_t c = 0; c < p.value(); ++c) {
                SystemParams params(n, c, p);
                for (uint64_t x = 0; x < p.value(); ++x) {
                    OrbitInfo info = orbit_info(x, params);
                    uint64_t y = x;
                    for (uint64_t i = 0; i < info.preperiod; ++i) y = step(y, params);
                    OrbitInfo on_cycle = orbit_info(y, params);
                    REQUIRE(on_cycle.preperiod == 0);
                    REQUIRE(on_cycle.period == info.period);
                }
            }
        }
    }
}

TEST_CASE("image size does not depend on c") {
    for (PrimeModulus p : primes_up_to(59)) {
        for (uint64_t n = 2; n <= 7; ++n) {
            uint64_t base_size = 0;
            for (uint64_t c = 0; c < p.value(); ++c) {
                std::set<uint64_t> image;
                SystemParams params(n, c, p);
                for (uint64_t x = 0; x < p.value(); ++x) image.insert(step(x, params));
                if (c == 0)
                    base_size = image.size();
                else
                    REQUIRE(image.size() == base_size);
            }
        }
    }
}

TEST_CASE("odd exponents mirror orbits under negation") {
    for (PrimeModulus p : primes_up_to(59)) {
        const uint64_t P = p.value();
        for (uint64_t n : {3, 5, 7}) {
            for (uint64_t c = 0; c < P; ++c) {
                SystemParams params(n, c, p);
                SystemParams mirrored(n, (P - c) % P, p);
                for (uint64_t x = 0; x < P; ++x) {
                    OrbitInfo a = orbit_info(x, params);
                    OrbitInfo b = orbit_info((P - x) % P, mirrored);
                    REQUIRE((a.preperiod == 0) == (b.preperiod == 0));
                    if (a.preperiod == 0) REQUIRE(a.period == b.period);
                }
            }
        }
    }
}

TEST_CASE("power_table matches pow_mod") {
    for (uint64_t n : {2, 13}) {
        PrimeModulus p(101);
        auto table = power_table(n, p);
        REQUIRE(table.size() == 101);
        for (uint64_t x = 0; x < 101; ++x) CHECK(table[x] == pow_mod(x, n, p));
    }
}
