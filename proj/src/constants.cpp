#include "adl/constants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "adl/combinatorics.hpp"
#include "adl/common.hpp"
#include "adl/nderiv.hpp"

namespace adl::constants {

namespace {

// B_2, B_4, ..., B_24
constexpr double kBernoulli[] = {
    1.0 / 6,           -1.0 / 30,         1.0 / 42,          -1.0 / 30,
    5.0 / 66,          -691.0 / 2730,     7.0 / 6,           -3617.0 / 510,
    43867.0 / 798,     -174611.0 / 330,   854513.0 / 138,    -236364091.0 / 2730};

}  // namespace

double zeta_real(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("zeta_real: needs s > 1");
    const int M = 32, R = 10;
    Accum acc;
    for (int k = 1; k < M; ++k) acc.add(std::pow(k, -s));
    double Ms = std::pow(M, -s);
    acc.add(0.5 * Ms);
    acc.add(Ms * M / (s - 1.0));
    // sum_r B_{2r}/(2r)! * s(s+1)...(s+2r-2) * M^{-s-2r+1}
    double poch = s;           // rising factorial s(s+1)...(s+2r-2)
    double fact = 2.0;         // (2r)!
    double mpow = Ms / M;      // M^{-s-2r+1}
    for (int r = 1; r <= R; ++r) {
        acc.add(kBernoulli[r - 1] / fact * poch * mpow);
        poch *= (s + 2.0 * r - 1.0) * (s + 2.0 * r);
        fact *= (2.0 * r + 1.0) * (2.0 * r + 2.0);
        mpow /= static_cast<double>(M) * M;
    }
    return acc.value();
}

double zeta_at_integer(int n) {
    if (n < 2) throw std::invalid_argument("zeta_at_integer: needs n >= 2");
    return zeta_real(static_cast<double>(n));
}

namespace {

// Stieltjes constants by Euler-Maclaurin applied to f(x) = (log x)^n / x:
// gamma_n = sum_{k<=M} f(k) - (log M)^{n+1}/(n+1) - f(M)/2
//           - sum_r B_{2r}/(2r)! f^{(2r-1)}(M) + tiny, with the derivative
// terms from the exact representation
// f^{(d)}(x) = x^{-1-d} sum_a c_{d,a} (log x)^a, c integer.
// The subtraction cancels ~(log M)^{n+1}/(n+1) of mass, so everything runs in
// long double and M stays small; R = 9 keeps the remainder far below that.
double stieltjes_impl(int n) {
    const long M = 256;
    const int R = 9;
    long double acc = 0.0L;
    for (long k = 1; k <= M; ++k) {
        long double lk = std::log(static_cast<long double>(k));
        acc += std::pow(lk, static_cast<long double>(n)) / k;
    }
    long double lM = std::log(static_cast<long double>(M));
    acc -= std::pow(lM, static_cast<long double>(n + 1)) / (n + 1);
    acc -= 0.5L * std::pow(lM, static_cast<long double>(n)) / M;

    std::vector<long double> c(n + 1, 0.0L);  // c[a] for current derivative order
    c[n] = 1.0L;
    int order = 0;
    long double xpow = 1.0L / M;  // x^{-1-order} at x=M
    for (int r = 1; r <= R; ++r) {
        while (order < 2 * r - 1) {
            // d/dx [x^{-1-d} (log x)^a] = -(1+d) x^{-2-d}(log x)^a + a x^{-2-d}(log x)^{a-1}
            std::vector<long double> nxt(n + 1, 0.0L);
            for (int a = 0; a <= n; ++a) {
                if (c[a] == 0.0L) continue;
                nxt[a] -= (order + 1) * c[a];
                if (a > 0) nxt[a - 1] += a * c[a];
            }
            c = std::move(nxt);
            ++order;
            xpow /= M;
        }
        long double fd = 0.0L;
        for (int a = n; a >= 0; --a) fd = fd * lM + c[a];
        fd *= xpow;
        long double fact = 1.0L;
        for (int i = 2; i <= 2 * r; ++i) fact *= i;
        acc -= static_cast<long double>(kBernoulli[r - 1]) / fact * fd;
    }
    return static_cast<double>(acc);
}

}  // namespace

double stieltjes_const(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("stieltjes_const: supported range is 0..8");
    static const auto cached = [] {
        std::vector<double> v(9);
        for (int i = 0; i <= 8; ++i) v[i] = stieltjes_impl(i);
        return v;
    }();
    return cached[n];
}

double euler_gamma() { return stieltjes_const(0); }

double gamma_deriv_at_1(int j) {
    if (j < 0) throw std::invalid_argument("gamma_deriv_at_1: j >= 0");
    std::vector<double> x(j);
    for (int i = 1; i <= j; ++i) {
        if (i == 1)
            x[0] = -euler_gamma();
        else {
            double f = 1.0;
            for (int t = 2; t < i; ++t) f *= t;
            x[i - 1] = (i % 2 == 0 ? 1.0 : -1.0) * f * zeta_at_integer(i);
        }
    }
    return comb::bell_complete(j, x);
}

double gamma_mn_closed_custom(int m, int N, double gamma_value,
                              std::span<const double> zeta_values) {
    if (m < 0 || m > 12 || N < 0 || N > 8)
        throw std::out_of_range("gamma_mn_closed: supported range is m <= 12, N <= 8");
    // Gamma^{(j)}(1) from the supplied constants
    std::vector<double> gd(m + 1);
    for (int j = 0; j <= m; ++j) {
        std::vector<double> x(j);
        for (int i = 1; i <= j; ++i) {
            if (i == 1)
                x[0] = -gamma_value;
            else {
                if (static_cast<size_t>(i - 2) >= zeta_values.size())
                    throw std::invalid_argument("gamma_mn_closed_custom: zeta table too short");
                double f = 1.0;
                for (int t = 2; t < i; ++t) f *= t;
                x[i - 1] = (i % 2 == 0 ? 1.0 : -1.0) * f * zeta_values[i - 2];
            }
        }
        gd[j] = comb::bell_complete(j, x);
    }
    double mfact = 1.0;
    for (int i = 2; i <= m; ++i) mfact *= i;
    double total = 0.0;
    for (int i = 1; i <= m; i += 2) {
        double sgn = (((i - 1) / 2) % 2) ? -1.0 : 1.0;
        double pip = std::pow(kPi, i - 1);
        double ifact = 1.0;
        for (int t = 2; t <= i; ++t) ifact *= t;
        for (int j = 0; i + j <= m; ++j) {
            int k = m - i - j;
            if (k + 1 > N + 2) continue;  // c(N+2, k+1) = 0 above the diagonal
            double jfact = 1.0;
            for (int t = 2; t <= j; ++t) jfact *= t;
            double w = mfact / (ifact * jfact);
            double c = static_cast<double>(comb::stirling1_unsigned(N + 2, k + 1));
            total += w * sgn * pip * gd[j] * c;
        }
    }
    return (N % 2 ? -1.0 : 1.0) * total;
}

double gamma_mn_closed(int m, int N) {
    const auto& t = table();
    return gamma_mn_closed_custom(m, N, t.euler_gamma,
                                  std::span<const double>(t.zeta_int).subspan(2));
}

namespace {

// sin(pi z) with exact argument reduction
long double sinpi_l(long double z) {
    long double r = std::round(z);
    long double frac = z - r;
    long double s = std::sin(static_cast<long double>(kPi) * frac);
    return (static_cast<long long>(r) % 2 == 0) ? s : -s;
}

long double rgamma_neg_l(long double z) {
    return -sinpi_l(z) * std::tgamma(1.0L + z) / static_cast<long double>(kPi);
}

}  // namespace

double rgamma_neg(double z) { return static_cast<double>(rgamma_neg_l(z)); }

OracleResult gamma_mn_oracle(int m, int N, double tol) {
    if (m < 0 || m > 12 || N < 0 || N > 8)
        throw std::out_of_range("gamma_mn_oracle: supported range is m <= 12, N <= 8");
    if (m == 0) return {rgamma_neg(N + 1.0), 0.0};
    DerivResult r = nderiv_central([](long double z) { return rgamma_neg_l(z); },
                                   static_cast<long double>(N + 1), m, 0.5L, 8);
    if (!(r.residual < tol)) {
        std::ostringstream os;
        os << "gamma_mn_oracle(" << m << "," << N
           << "): finite differences did not converge; achieved residual " << r.residual;
        throw std::runtime_error(os.str());
    }
    return {r.value, r.residual};
}

const AnalyticConstants& table() {
    static const AnalyticConstants t = [] {
        AnalyticConstants c;
        c.pi = kPi;
        c.euler_gamma = euler_gamma();
        c.zeta_int.assign(18, 0.0);  // index by n, 2..17
        for (int n = 2; n <= 17; ++n) c.zeta_int[n] = zeta_at_integer(n);
        c.stieltjes.resize(9);
        for (int n = 0; n <= 8; ++n) c.stieltjes[n] = stieltjes_const(n);
        c.precision_digits = 13;
        return c;
    }();
    return t;
}

}  // namespace adl::constants
