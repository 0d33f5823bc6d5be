#include "adl/sieve.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"

using namespace adl::sieve;

namespace {

// trial-division oracle for mu/omega/lpf
struct Naive {
    int mu;
    int omega;
    uint64_t lpf;
};

Naive naive_factor(uint64_t n) {
    if (n == 1) return {1, 0, kInfinityMark};
    int omega = 0;
    bool squareful = false;
    uint64_t lpf = 0, m = n;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ++omega;
            if (!lpf) lpf = p;
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e > 1) squareful = true;
        }
    }
    if (m > 1) {
        ++omega;
        if (!lpf) lpf = m;
    }
    return {squareful ? 0 : (omega % 2 ? -1 : 1), omega, lpf};
}

}  // namespace

TEST_CASE("primes_up_to basics") {
    CHECK(primes_up_to(1.9).primes.empty());
    CHECK(primes_up_to(10).primes == std::vector<uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(11).primes == std::vector<uint64_t>{2, 3, 5, 7, 11});
    CHECK(primes_up_to(0).primes.empty());
}

TEST_CASE("single-segment values") {
    auto base = primes_up_to(400);
    auto t = build_segment(1, 100, base);
    CHECK(t.mu_at(1) == 1);
    CHECK(t.omega_at(1) == 0);
    CHECK(t.lpf_at(1) == kInfinityMark);
    CHECK(t.mu_at(12) == 0);
    CHECK(t.omega_at(12) == 2);
    CHECK(t.lpf_at(12) == 2);
    CHECK(t.mu_at(60) == 0);
    CHECK(t.omega_at(60) == 3);
    CHECK(t.lpf_at(60) == 2);
    CHECK(t.mu_at(35) == 1);
    CHECK(t.omega_at(35) == 2);
    CHECK(t.lpf_at(35) == 5);
}

TEST_CASE("brute-force oracle equivalence up to 1e5") {
    uint64_t limit = 100000;
    auto base = primes_up_to(std::sqrt(static_cast<double>(limit)) + 1);
    auto t = build_segment(1, limit + 1, base);
    for (uint64_t n = 1; n <= limit; ++n) {
        auto nf = naive_factor(n);
        REQUIRE(t.mu_at(n) == nf.mu);
        REQUIRE(t.omega_at(n) == nf.omega);
        REQUIRE(t.lpf_at(n) == nf.lpf);
    }
}

TEST_CASE("segment independence under arbitrary partitions") {
    const uint64_t X = 30000;
    auto base = primes_up_to(200);
    auto whole = build_segment(1, X, base);
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 3; ++trial) {
        uint64_t lo = 1;
        while (lo < X) {
            uint64_t hi = std::min<uint64_t>(X, lo + 1 + rng() % 7000);
            auto seg = build_segment(lo, hi, base);
            for (uint64_t n = lo; n < hi; ++n) {
                REQUIRE(seg.mu_at(n) == whole.mu_at(n));
                REQUIRE(seg.omega_at(n) == whole.omega_at(n));
                REQUIRE(seg.lpf_at(n) == whole.lpf_at(n));
            }
            lo = hi;
        }
    }
}

TEST_CASE("insufficient base prime list names the required bound") {
    auto base = primes_up_to(10);
    CHECK_THROWS_WITH_AS(build_segment(1, 1000, base),
                         doctest::Contains("primes up to 31"), std::invalid_argument);
}

TEST_CASE("kth_prime_factor") {
    CHECK(kth_prime_factor(60, 2, Direction::largest) == 3);
    CHECK(kth_prime_factor(60, 2, Direction::smallest) == 3);
    CHECK(kth_prime_factor(60, 1, Direction::largest) == 5);
    CHECK(!kth_prime_factor(7, 2, Direction::largest).has_value());
    CHECK(kth_prime_factor(1, 1, Direction::smallest) == kInfinityMark);
    CHECK(!kth_prime_factor(1, 1, Direction::largest).has_value());
    CHECK(!kth_prime_factor(1, 2, Direction::smallest).has_value());
}

TEST_CASE("for_each_prime matches primes_up_to") {
    std::vector<uint64_t> got;
    for_each_prime(1, 10000, [&](uint64_t p) { got.push_back(p); });
    CHECK(got == primes_up_to(9999).primes);
    got.clear();
    for_each_prime(100, 200, [&](uint64_t p) { got.push_back(p); });
    std::vector<uint64_t> want;
    for (uint64_t p : primes_up_to(199).primes)
        if (p >= 100) want.push_back(p);
    CHECK(got == want);
}

TEST_CASE("cache round trip is bit-identical and detects corruption") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "adl_sieve_test";
    fs::create_directories(dir);
    auto file = dir / "seg.adls";
    auto base = primes_up_to(100);
    auto t = build_segment(1, 5000, base);
    write_cache(t, file);
    auto back = read_cache(file);
    CHECK(back.lo == t.lo);
    CHECK(back.hi == t.hi);
    CHECK(back.mu == t.mu);
    CHECK(back.omega == t.omega);
    CHECK(back.lpf == t.lpf);

    // flip one payload byte: the checksum must fail and the error names the file
    {
        std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
        f.seekg(64);
        char c;
        f.get(c);
        f.seekp(64);
        f.put(static_cast<char>(c ^ 0x5a));
    }
    CHECK_THROWS_WITH_AS(read_cache(file), doctest::Contains("seg.adls"), CacheError);
    fs::remove_all(dir);
}

TEST_CASE("cached streaming equals fresh computation") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "adl_sieve_cache2";
    fs::remove_all(dir);
    std::vector<int64_t> fresh, cached, cached2;
    auto collect = [](std::vector<int64_t>& dst) {
        return [&dst](const FactorTable& t) {
            for (uint64_t n = t.lo; n < t.hi; ++n)
                dst.push_back(t.mu_at(n) * static_cast<int64_t>(
                                               t.lpf_at(n) == kInfinityMark ? 0 : t.lpf_at(n)));
        };
    };
    for_each_segment(1, 20000, 3000, collect(fresh));
    for_each_segment_cached(1, 20000, 3000, dir, collect(cached));
    for_each_segment_cached(1, 20000, 3000, dir, collect(cached2));  // reads the files back
    CHECK(fresh == cached);
    CHECK(fresh == cached2);
    fs::remove_all(dir);
}
