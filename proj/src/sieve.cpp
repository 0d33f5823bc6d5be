#include "adl/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "adl/common.hpp"

namespace adl::sieve {

PrimeList primes_up_to(double y) {
    PrimeList out;
    if (!(y >= 0.0)) throw std::invalid_argument("primes_up_to: y must be >= 0");
    if (y < 2.0) {
        out.bound = y < 0 ? 0 : static_cast<uint64_t>(y);
        return out;
    }
    uint64_t n = static_cast<uint64_t>(y);
    out.bound = n;
    std::vector<uint8_t> composite(n + 1, 0);
    for (uint64_t i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    for (uint64_t i = 2; i <= n; ++i)
        if (!composite[i]) out.primes.push_back(i);
    return out;
}

FactorTable build_segment(uint64_t lo, uint64_t hi, const PrimeList& base) {
    if (!(1 <= lo && lo < hi))
        throw std::invalid_argument("build_segment: need 1 <= lo < hi");
    uint64_t need = isqrt_u64(hi - 1);
    if (base.bound < need) {
        std::ostringstream os;
        os << "build_segment: base prime list reaches " << base.bound
           << " but primes up to " << need << " are required for hi=" << hi;
        throw std::invalid_argument(os.str());
    }

    uint64_t n = hi - lo;
    FactorTable t;
    t.lo = lo;
    t.hi = hi;
    t.mu.assign(n, 0);
    t.omega.assign(n, 0);
    t.lpf.assign(n, 0);
    std::vector<uint64_t> rem(n);
    std::vector<uint8_t> squareful(n, 0);
    for (uint64_t i = 0; i < n; ++i) rem[i] = lo + i;

    for (uint64_t p : base.primes) {
        if (p * p > hi - 1) break;
        uint64_t start = ((lo + p - 1) / p) * p;
        for (uint64_t m = start; m < hi; m += p) {
            uint64_t i = m - lo;
            t.omega[i]++;
            if (t.lpf[i] == 0) t.lpf[i] = p;
            int e = 0;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                ++e;
            }
            if (e >= 2) squareful[i] = 1;
        }
    }
    for (uint64_t i = 0; i < n; ++i) {
        uint64_t v = lo + i;
        if (v == 1) {
            t.mu[i] = 1;
            t.omega[i] = 0;
            t.lpf[i] = kInfinityMark;
            continue;
        }
        if (rem[i] > 1) {  // one prime factor above sqrt remains
            t.omega[i]++;
            if (t.lpf[i] == 0) t.lpf[i] = rem[i];
        }
        t.mu[i] = squareful[i] ? 0 : ((t.omega[i] & 1) ? -1 : 1);
    }
    return t;
}

void for_each_segment(uint64_t lo, uint64_t hi, uint64_t segment_size,
                      const std::function<void(const FactorTable&)>& fn) {
    if (lo >= hi) return;
    if (segment_size == 0) segment_size = kDefaultSegment;
    PrimeList base = primes_up_to(static_cast<double>(isqrt_u64(hi - 1)));
    for (uint64_t a = lo; a < hi; a += segment_size) {
        uint64_t b = std::min(hi, a + segment_size);
        fn(build_segment(a, b, base));
    }
}

void for_each_prime(uint64_t lo, uint64_t hi, const std::function<void(uint64_t)>& fn) {
    if (hi <= 2 || lo >= hi) return;
    if (lo <= 2) fn(2);
    uint64_t start = std::max<uint64_t>(3, lo | 1);
    PrimeList base = primes_up_to(static_cast<double>(isqrt_u64(hi - 1)));
    const uint64_t span = uint64_t{1} << 22;  // odds per segment
    std::vector<uint8_t> comp;
    for (uint64_t a = start; a < hi; a += 2 * span) {
        uint64_t b = std::min(hi, a + 2 * span);  // covers odds in [a, b)
        uint64_t cnt = (b - a + 1) / 2;
        comp.assign(cnt, 0);
        for (uint64_t p : base.primes) {
            if (p == 2) continue;
            if (p * p >= b) break;
            uint64_t m = std::max(p * p, ((a + p - 1) / p) * p);
            if (m % 2 == 0) m += p;
            for (; m < b; m += 2 * p) comp[(m - a) / 2] = 1;
        }
        for (uint64_t i = 0; i < cnt; ++i)
            if (!comp[i]) fn(a + 2 * i);
    }
}

std::optional<uint64_t> kth_prime_factor(uint64_t n, int k, Direction dir) {
    if (n < 1 || k < 1) throw std::invalid_argument("kth_prime_factor: need n >= 1, k >= 1");
    if (n == 1) {
        if (dir == Direction::smallest && k == 1) return kInfinityMark;
        return std::nullopt;
    }
    std::vector<uint64_t> ps;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    if (static_cast<size_t>(k) > ps.size()) return std::nullopt;
    return dir == Direction::smallest ? ps[k - 1] : ps[ps.size() - k];
}

// ---------------------------------------------------------------------------
// cache files
// ---------------------------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'A', 'D', 'L', 'S', 'I', 'E', 'V', 'E'};
constexpr uint32_t kVersion = 1;

uint64_t fnv1a(const uint8_t* data, size_t n, uint64_t h = 1469598103934665603ULL) {
    for (size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ULL;
    }
    return h;
}

template <class T>
void put(std::string& buf, T v) {
    uint8_t b[sizeof(T)];
    for (size_t i = 0; i < sizeof(T); ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
    buf.append(reinterpret_cast<char*>(b), sizeof(T));
}

template <class T>
T get(const std::string& buf, size_t& off) {
    T v = 0;
    for (size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<T>(static_cast<uint8_t>(buf[off + i])) << (8 * i);
    off += sizeof(T);
    return v;
}

}  // namespace

void write_cache(const FactorTable& t, const std::filesystem::path& file) {
    std::string buf;
    buf.append(kMagic, 8);
    put<uint32_t>(buf, kVersion);
    put<uint64_t>(buf, t.lo);
    put<uint64_t>(buf, t.hi);
    uint64_t n = t.size();
    // mu packed 2 bits/entry, value mu+1 in {0,1,2}
    std::string mu((n + 3) / 4, '\0');
    for (uint64_t i = 0; i < n; ++i)
        mu[i / 4] |= static_cast<char>((t.mu[i] + 1) << (2 * (i % 4)));
    buf += mu;
    buf.append(reinterpret_cast<const char*>(t.omega.data()), n);
    for (uint64_t i = 0; i < n; ++i) put<uint64_t>(buf, t.lpf[i]);
    put<uint64_t>(buf, fnv1a(reinterpret_cast<const uint8_t*>(buf.data()), buf.size()));

    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw CacheError("cannot open sieve cache for writing: " + file.string());
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!os) throw CacheError("short write to sieve cache: " + file.string());
}

FactorTable read_cache(const std::filesystem::path& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw CacheError("cannot open sieve cache: " + file.string());
    std::string buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (buf.size() < 8 + 4 + 16 + 8 || std::memcmp(buf.data(), kMagic, 8) != 0)
        throw CacheError("sieve cache has bad magic: " + file.string());
    uint64_t stored = 0;
    {
        size_t off = buf.size() - 8;
        stored = get<uint64_t>(buf, off);
    }
    if (fnv1a(reinterpret_cast<const uint8_t*>(buf.data()), buf.size() - 8) != stored)
        throw CacheError("sieve cache checksum mismatch: " + file.string());

    size_t off = 8;
    uint32_t version = get<uint32_t>(buf, off);
    if (version != kVersion)
        throw CacheError("sieve cache has unsupported version: " + file.string());
    FactorTable t;
    t.lo = get<uint64_t>(buf, off);
    t.hi = get<uint64_t>(buf, off);
    uint64_t n = t.hi - t.lo;
    size_t expect = off + (n + 3) / 4 + n + 8 * n + 8;
    if (buf.size() != expect)
        throw CacheError("sieve cache is truncated: " + file.string());
    t.mu.resize(n);
    for (uint64_t i = 0; i < n; ++i)
        t.mu[i] = static_cast<int8_t>(((buf[off + i / 4] >> (2 * (i % 4))) & 3) - 1);
    off += (n + 3) / 4;
    t.omega.assign(reinterpret_cast<const uint8_t*>(buf.data()) + off,
                   reinterpret_cast<const uint8_t*>(buf.data()) + off + n);
    off += n;
    t.lpf.resize(n);
    for (uint64_t i = 0; i < n; ++i) t.lpf[i] = get<uint64_t>(buf, off);
    return t;
}

void for_each_segment_cached(uint64_t lo, uint64_t hi, uint64_t segment_size,
                             const std::filesystem::path& cache_dir,
                             const std::function<void(const FactorTable&)>& fn) {
    if (cache_dir.empty()) {
        for_each_segment(lo, hi, segment_size, fn);
        return;
    }
    if (segment_size == 0) segment_size = kDefaultSegment;
    std::filesystem::create_directories(cache_dir);
    PrimeList base;
    for (uint64_t a = lo; a < hi; a += segment_size) {
        uint64_t b = std::min(hi, a + segment_size);
        char name[64];
        std::snprintf(name, sizeof name, "seg_%016llx_%016llx.adls",
                      static_cast<unsigned long long>(a), static_cast<unsigned long long>(b));
        auto file = cache_dir / name;
        if (std::filesystem::exists(file)) {
            fn(read_cache(file));
            continue;
        }
        if (base.primes.empty() && hi > 1)
            base = primes_up_to(static_cast<double>(isqrt_u64(hi - 1)));
        FactorTable t = build_segment(a, b, base);
        write_cache(t, file);
        fn(t);
    }
}

}  // namespace adl::sieve
