#include "adl/series_asym.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "adl/combinatorics.hpp"
#include "adl/constants.hpp"
#include "adl/exact_sums.hpp"
#include "adl/primesums.hpp"

namespace adl::series {

BiSeries::BiSeries(int imax, int jmax) : imax_(imax), jmax_(jmax) {
    if (imax < 0 || jmax < 0) throw std::invalid_argument("BiSeries: bad truncation orders");
    c_.assign(static_cast<size_t>(imax + 1) * (jmax + 1), 0.0);
}

BiSeries BiSeries::from_u_coeffs(std::span<const double> c, int imax, int jmax) {
    BiSeries s(imax, jmax);
    for (int i = 0; i <= imax && i < static_cast<int>(c.size()); ++i) s.set(i, 0, c[i]);
    return s;
}

double BiSeries::at(int i, int j) const {
    if (i < 0 || i > imax_ || j < 0 || j > jmax_)
        throw std::out_of_range("BiSeries::at: index out of range");
    return c_[static_cast<size_t>(i) * (jmax_ + 1) + j];
}

void BiSeries::set(int i, int j, double v) {
    if (i < 0 || i > imax_ || j < 0 || j > jmax_)
        throw std::out_of_range("BiSeries::set: index out of range");
    c_[static_cast<size_t>(i) * (jmax_ + 1) + j] = v;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
    BiSeries r(std::max(imax_, o.imax_), std::max(jmax_, o.jmax_));
    for (int i = 0; i <= r.imax_; ++i)
        for (int j = 0; j <= r.jmax_; ++j) {
            double v = 0.0;
            if (i <= imax_ && j <= jmax_) v += at(i, j);
            if (i <= o.imax_ && j <= o.jmax_) v += o.at(i, j);
            r.set(i, j, v);
        }
    return r;
}

BiSeries BiSeries::operator-(const BiSeries& o) const { return *this + o.scaled(-1.0); }

BiSeries BiSeries::scaled(double c) const {
    BiSeries r = *this;
    for (auto& v : r.c_) v *= c;
    return r;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
    // u-degree truncated at max(imax), ell-degree is exact and must fit
    int imax = std::max(imax_, o.imax_);
    int jmax = std::max(jmax_, o.jmax_);
    BiSeries r(imax, jmax);
    for (int i1 = 0; i1 <= imax_; ++i1)
        for (int j1 = 0; j1 <= jmax_; ++j1) {
            double a = at(i1, j1);
            if (a == 0.0) continue;
            for (int i2 = 0; i2 + i1 <= imax && i2 <= o.imax_; ++i2)
                for (int j2 = 0; j2 <= o.jmax_; ++j2) {
                    double b = o.at(i2, j2);
                    if (b == 0.0) continue;
                    if (j1 + j2 > jmax)
                        throw std::runtime_error("BiSeries: ell-degree overflow in product");
                    r.set(i1 + i2, j1 + j2, r.at(i1 + i2, j1 + j2) + a * b);
                }
        }
    return r;
}

BiSeries BiSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BiSeries::pow: e >= 0");
    BiSeries r(imax_, jmax_);
    r.set(0, 0, 1.0);
    for (int t = 0; t < e; ++t) r = r * *this;
    return r;
}

namespace {

std::vector<double> u_coeffs_of(const BiSeries& s) {
    std::vector<double> c(s.imax() + 1);
    for (int i = 0; i <= s.imax(); ++i) {
        for (int j = 1; j <= s.jmax(); ++j)
            if (s.at(i, j) != 0.0)
                throw std::invalid_argument("BiSeries: operation requires a pure u-series");
        c[i] = s.at(i, 0);
    }
    return c;
}

}  // namespace

BiSeries BiSeries::log_unit() const {
    auto a = u_coeffs_of(*this);
    if (a[0] != 1.0) throw std::invalid_argument("log_unit: constant term must be 1");
    int n = imax_;
    std::vector<double> b(n + 1, 0.0);
    for (int m = 1; m <= n; ++m) {
        double acc = m * a[m];
        for (int i = 1; i < m; ++i) acc -= i * b[i] * a[m - i];
        b[m] = acc / m;
    }
    return from_u_coeffs(b, imax_, jmax_);
}

BiSeries BiSeries::exp_pure() const {
    auto a = u_coeffs_of(*this);
    if (a[0] != 0.0) throw std::invalid_argument("exp_pure: constant term must be 0");
    int n = imax_;
    std::vector<double> b(n + 1, 0.0);
    b[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (int i = 1; i <= m; ++i) acc += i * a[i] * b[m - i];
        b[m] = acc / m;
    }
    return from_u_coeffs(b, imax_, jmax_);
}

BiSeries BiSeries::inverse_unit() const {
    auto a = u_coeffs_of(*this);
    if (a[0] == 0.0) throw std::invalid_argument("inverse_unit: constant term must be nonzero");
    int n = imax_;
    std::vector<double> b(n + 1, 0.0);
    b[0] = 1.0 / a[0];
    for (int m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (int i = 1; i <= m; ++i) acc += a[i] * b[m - i];
        b[m] = -acc / a[0];
    }
    return from_u_coeffs(b, imax_, jmax_);
}

double BiSeries::eval_u(double u) const {
    auto a = u_coeffs_of(*this);
    double v = 0.0;
    for (int i = imax_; i >= 0; --i) v = v * u + a[i];
    return v;
}

double BiSeries::eval(double u, double ell) const {
    double v = 0.0;
    for (int i = imax_; i >= 0; --i) {
        double row = 0.0;
        for (int j = jmax_; j >= 0; --j) row = row * ell + at(i, j);
        v = v * u + row;
    }
    return v;
}

BiSeries zeta_series(int order) {
    if (order < 0 || order > 8) throw std::invalid_argument("zeta_series: order <= 8");
    std::vector<double> c(order + 1, 0.0);
    c[0] = 1.0;
    double nf = 1.0;
    for (int n = 0; n + 1 <= order; ++n) {
        if (n > 0) nf *= n;
        c[n + 1] = (n % 2 == 0 ? 1.0 : -1.0) * constants::stieltjes_const(n) / nf;
    }
    return BiSeries::from_u_coeffs(c, order, 0);
}

BiSeries delta_series(int order) { return zeta_series(order).log_unit(); }

BiSeries inv_s_zeta_series(int order) {
    // 1/(s zeta) = u / ((1+u) (s-1) zeta(s)); compute to order+1 in u
    // internally so the leading u keeps `order` meaningful coefficients.
    BiSeries z = zeta_series(order);
    BiSeries one_plus_u = BiSeries::from_u_coeffs(std::vector<double>{1.0, 1.0}, order, 0);
    BiSeries inv = (one_plus_u * z).inverse_unit();
    BiSeries r(order, 0);
    for (int i = 1; i <= order; ++i) r.set(i, 0, inv.at(i - 1, 0));
    return r;
}

double hankel_coeff(int i, int j) {
    if (i < 1 || j < 0) throw std::invalid_argument("hankel_coeff: i >= 1, j >= 0");
    return constants::gamma_mn_closed(j, i - 1);
}

PhiTable phi_table(double y, int k, int nprime, double tail_cut) {
    if (k < 1 || k > 4) throw std::invalid_argument("phi_table: k in 1..4");
    if (nprime < 1 || nprime > 6) throw std::invalid_argument("phi_table: nprime in 1..6");
    auto prof = primesums::profile(y, nprime, k - 1, tail_cut);

    int imax = nprime, jmax = k - 1;
    BiSeries invsz = inv_s_zeta_series(imax);
    BiSeries invsz2(imax, jmax);
    for (int i = 0; i <= imax; ++i) invsz2.set(i, 0, invsz.at(i, 0));
    BiSeries delta = delta_series(imax);
    // log zeta = Delta - ell; at k = 1 the ell slot does not exist and the
    // series only ever enters with power 0
    BiSeries logzeta(imax, jmax);
    for (int i = 0; i <= imax; ++i) logzeta.set(i, 0, delta.at(i, 0));
    if (jmax >= 1) logzeta.set(0, 1, -1.0);

    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    double kfact = 1.0;
    for (int t = 2; t <= k - 1; ++t) kfact *= t;

    BiSeries total(imax, jmax);
    BiSeries total_rad(imax, jmax);  // |coef| radii, same layout
    for (int i = 0; i <= k - 1; ++i) {
        BiSeries gpoly(imax, jmax), gpoly_rad(imax, jmax);
        double jf = 1.0;
        for (int n = 0; n <= nprime; ++n) {
            if (n > 0) jf *= n;
            gpoly.set(n, 0, prof.g[i][n].value / jf);
            gpoly_rad.set(n, 0, prof.g[i][n].radius / jf);
        }
        BiSeries weight = logzeta.pow(k - 1 - i).scaled(
            static_cast<double>(comb::binom(k - 1, i)));
        total = total + weight * gpoly;
        // radii propagate linearly through the (exactly known) weight series
        BiSeries wabs = weight;
        for (int a = 0; a <= imax; ++a)
            for (int b = 0; b <= jmax; ++b) wabs.set(a, b, std::abs(weight.at(a, b)));
        total_rad = total_rad + wabs * gpoly_rad;
    }
    BiSeries f = (invsz2 * total).scaled(sign / kfact);
    BiSeries invabs = invsz2;
    for (int a = 0; a <= imax; ++a) invabs.set(a, 0, std::abs(invsz2.at(a, 0)));
    BiSeries frad = (invabs * total_rad).scaled(1.0 / kfact);

    PhiTable out;
    out.y = y;
    out.k = k;
    out.nprime = nprime;
    out.phi.assign(imax + 1, std::vector<double>(jmax + 1, 0.0));
    out.radius.assign(imax + 1, std::vector<double>(jmax + 1, 0.0));
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; j <= jmax; ++j) {
            out.phi[i][j] = f.at(i, j);
            out.radius[i][j] = frad.at(i, j);
        }
    return out;
}

double main_term(const MainTermParams& p, const PhiTable& table) {
    if (p.k < 1) throw std::invalid_argument("main_term: k >= 1");
    if (p.k == 1) return 0.0;  // empty J range
    if (p.order < 1 || p.order > table.nprime)
        throw std::invalid_argument("main_term: order must be within the phi table");
    if (table.k != p.k) throw std::invalid_argument("main_term: phi table built for another k");
    double lx = std::log(p.x), llx = std::log(lx);
    double total = 0.0;
    for (int i = 1; i <= p.order; ++i) {
        for (int J = 1; J <= p.k - 1; ++J) {
            for (int j = 1; j <= J; ++j) {
                double sgn = ((J - j) % 2 == 0) ? 1.0 : -1.0;
                total += table.phi[i][J] * static_cast<double>(comb::binom(J, j)) * sgn *
                         std::pow(llx, J - j) * hankel_coeff(i, j) / std::pow(lx, i);
            }
        }
    }
    return p.x / lx * total;
}

double main_term(const MainTermParams& p) {
    if (p.k == 1) return 0.0;
    PhiTable t = phi_table(p.y, p.k, std::max(p.order, 1) + 2);
    return main_term(p, t);
}

std::vector<CompareRow> compare(std::span<const double> xs, double y, int k, int order,
                                const Window& w) {
    std::vector<CompareRow> rows;
    PhiTable table = phi_table(y, k, order + 2);
    for (double x : xs) {
        double cap_theorem =
            w.y0 * std::exp(w.power * std::log(x) /
                            std::pow(std::log(std::log(x + 1.0)), 1.0 + w.epsilon));
        double cap_power = std::pow(x, 1.0 / k);
        double cap = std::min(cap_theorem, cap_power);
        if (!(y >= 1.9 && y <= cap)) {
            std::ostringstream os;
            os << "compare: y = " << y << " violates the window at x = " << x
               << " (bound min(Y0 exp(p log x/(llog(x+1))^(1+eps)), x^(1/k)) = " << cap << ")";
            throw std::invalid_argument(os.str());
        }
        sums::SumRequest req;
        req.x = static_cast<uint64_t>(x);
        req.y = y;
        req.k = k;
        int64_t exact = sums::mkw_exact(req);
        MainTermParams mp{x, y, k, order};
        double main = main_term(mp, table);
        double lx = std::log(x), llx = std::log(std::log(x + 1.0));
        double norm = std::abs(static_cast<double>(exact) - main) * lx /
                      (x * std::pow(llx, k - 1) * std::pow(std::log(y) / lx, order + 1));
        rows.push_back({x, exact, main, norm});
    }
    return rows;
}

}  // namespace adl::series
