#include "adl/hankel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "adl/constants.hpp"

namespace adl::hankel {

namespace {

using cplx = std::complex<double>;

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
struct GaussRule {
    std::vector<double> x, w;
};

const GaussRule& gauss_rule(int n) {
    static std::vector<GaussRule> cache(129);
    if (n < 1 || n > 128) throw std::invalid_argument("gauss_rule: n out of range");
    GaussRule& r = cache[n];
    if (!r.x.empty()) return r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(constants::kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

cplx integrand(cplx w, int m, int npow, Branch branch) {
    cplx lw;
    if (branch == Branch::principal)
        lw = std::log(w);
    else
        lw = cplx(std::log(std::abs(w)), 0.0);
    cplx f = std::exp(w);
    for (int i = 0; i <= npow; ++i) f *= w;
    for (int i = 0; i < m; ++i) f *= lw;
    return f;
}

// Integrates f over the straight line a->b with GL panels of width <= 0.5.
cplx line_integral(cplx a, cplx b, int m, int npow, Branch branch, int nodes_per_unit) {
    double len = std::abs(b - a);
    int panels = std::max(1, static_cast<int>(std::ceil(len / 0.5)));
    int n = std::clamp(nodes_per_unit / 2, 4, 128);
    const GaussRule& g = gauss_rule(n);
    cplx total = 0.0;
    for (int p = 0; p < panels; ++p) {
        cplx pa = a + (b - a) * (static_cast<double>(p) / panels);
        cplx pb = a + (b - a) * (static_cast<double>(p + 1) / panels);
        cplx mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += g.w[i] * integrand(mid + g.x[i] * half, m, npow, branch);
        total += acc * half;
    }
    return total;
}

// Arc w = e^{i theta}, theta from t0 to t1, panels of width <= 0.5 rad.
cplx arc_integral(double t0, double t1, int m, int npow, Branch branch, int nodes_per_unit) {
    int panels = std::max(1, static_cast<int>(std::ceil(std::abs(t1 - t0) / 0.5)));
    int n = std::clamp(nodes_per_unit / 2, 4, 128);
    const GaussRule& g = gauss_rule(n);
    cplx total = 0.0;
    for (int p = 0; p < panels; ++p) {
        double pa = t0 + (t1 - t0) * p / panels;
        double pb = t0 + (t1 - t0) * (p + 1) / panels;
        double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i) {
            double th = mid + g.x[i] * half;
            cplx w = std::polar(1.0, th);
            acc += g.w[i] * integrand(w, m, npow, branch) * cplx(0.0, 1.0) * w;
        }
        total += acc * half;
    }
    return total;
}

}  // namespace

std::complex<double> contour_integral_raw(int m, int npow, const ContourSpec& spec,
                                          Branch branch, HalfMode half) {
    if (!(spec.cutoff_x > 0)) throw std::invalid_argument("hankel: cutoff X must be positive");
    double X = spec.cutoff_x;
    int npu = spec.nodes_per_unit;
    cplx total = 0.0;
    if (half == HalfMode::full) {
        total += line_integral(cplx(-X, -1.0), cplx(0.0, -1.0), m, npow, branch, npu);
        total += arc_integral(-constants::kPi / 2, constants::kPi / 2, m, npow, branch, npu);
        total += line_integral(cplx(0.0, 1.0), cplx(-X, 1.0), m, npow, branch, npu);
    } else {
        // upper half only: arc from 1 to +i, arm from +i to -X+i
        total += arc_integral(0.0, constants::kPi / 2, m, npow, branch, npu);
        total += line_integral(cplx(0.0, 1.0), cplx(-X, 1.0), m, npow, branch, npu);
    }
    total /= cplx(0.0, 2.0 * constants::kPi);
    if (half == HalfMode::upper_doubled) total = cplx(2.0 * total.real(), 0.0);
    return total;
}

double hankel_integral(int m, int npow, ContourSpec spec) {
    if (m < 0 || npow < 0) throw std::invalid_argument("hankel_integral: m, npow >= 0");
    cplx prev = contour_integral_raw(m, npow, spec);
    for (int npu = spec.nodes_per_unit * 2; npu <= 256; npu *= 2) {
        ContourSpec s2 = spec;
        s2.nodes_per_unit = npu;
        cplx cur = contour_integral_raw(m, npow, s2);
        double scale = std::max(1.0, std::abs(cur));
        if (std::abs(cur - prev) < 1e-11 * scale) {
            if (std::abs(cur.imag()) > 1e-9 * scale)
                throw std::runtime_error("hankel_integral: imaginary part failed to cancel");
            return cur.real();
        }
        prev = cur;
    }
    std::ostringstream os;
    os << "hankel_integral(" << m << "," << npow
       << "): quadrature did not converge; last iterates " << prev.real();
    throw std::runtime_error(os.str());
}

std::vector<DecayRow> truncation_decay_scan(int m, int npow, std::span<const double> cutoffs) {
    if (cutoffs.size() < 3)
        throw std::invalid_argument("truncation_decay_scan: need >= 3 ascending cutoffs");
    for (size_t i = 1; i < cutoffs.size(); ++i)
        if (!(cutoffs[i] > cutoffs[i - 1]))
            throw std::invalid_argument("truncation_decay_scan: cutoffs must ascend");
    double ref = constants::gamma_mn_closed(m, npow);
    std::vector<DecayRow> rows;
    for (double X : cutoffs) {
        ContourSpec spec;
        spec.cutoff_x = X;
        double v = hankel_integral(m, npow, spec);
        rows.push_back({X, v, std::abs(v - ref)});
    }
    return rows;
}

}  // namespace adl::hankel
