#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace adl::sieve {

// Sentinel for the least prime factor of 1; larger than any representable n,
// so the predicate p_1(n) > y is true for n = 1 at every y.
inline constexpr uint64_t kInfinityMark = std::numeric_limits<uint64_t>::max();

inline constexpr uint64_t kDefaultSegment = uint64_t{1} << 20;

struct PrimeList {
    uint64_t bound = 0;
    std::vector<uint64_t> primes;
};

// All primes p <= y. y < 2 gives an empty list.
PrimeList primes_up_to(double y);

struct FactorTable {
    uint64_t lo = 1;  // inclusive
    uint64_t hi = 1;  // exclusive
    std::vector<int8_t> mu;
    std::vector<uint8_t> omega;
    std::vector<uint64_t> lpf;

    uint64_t size() const { return hi - lo; }
    int8_t mu_at(uint64_t n) const { return mu[n - lo]; }
    uint8_t omega_at(uint64_t n) const { return omega[n - lo]; }
    uint64_t lpf_at(uint64_t n) const { return lpf[n - lo]; }
};

// mu, omega (distinct primes), lpf for all n in [lo, hi).
// base must contain every prime <= sqrt(hi-1).
FactorTable build_segment(uint64_t lo, uint64_t hi, const PrimeList& base);

// Streams consecutive segments of [lo, hi) in ascending order.
void for_each_segment(uint64_t lo, uint64_t hi, uint64_t segment_size,
                      const std::function<void(const FactorTable&)>& fn);

// Prime enumeration over [lo, hi) without factor tables; the fast path for
// large prime sums (reaches 1e8 in a couple of seconds).
void for_each_prime(uint64_t lo, uint64_t hi, const std::function<void(uint64_t)>& fn);

enum class Direction { smallest, largest };

// k-th smallest/largest distinct prime factor. nullopt when omega(n) < k,
// except p_1(1) which is kInfinityMark.
std::optional<uint64_t> kth_prime_factor(uint64_t n, int k, Direction dir);

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary segment cache: "ADLSIEVE" magic, u32 version, u64 lo, u64 hi
// (little-endian), packed mu (2 bits/entry), omega (u8), lpf (u64),
// then a trailing u64 FNV-1a checksum of everything before it.
void write_cache(const FactorTable& t, const std::filesystem::path& file);
FactorTable read_cache(const std::filesystem::path& file);

// Cached segment streaming: reuses files under cache_dir when present and
// valid, writes them otherwise. Results are bit-identical either way.
void for_each_segment_cached(uint64_t lo, uint64_t hi, uint64_t segment_size,
                             const std::filesystem::path& cache_dir,
                             const std::function<void(const FactorTable&)>& fn);

}  // namespace adl::sieve
