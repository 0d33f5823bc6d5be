// adl: single executable exposing the sifted-Mobius-sum library as
// subcommands and orchestrating acceptance runs.
//
// Exit codes: 0 success / all criteria pass, 1 criterion failure,
// 2 usage or runtime error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adl/acceptance.hpp"
#include "adl/combinatorics.hpp"
#include "adl/constants.hpp"
#include "adl/exact_sums.hpp"
#include "adl/hankel.hpp"
#include "adl/orders.hpp"
#include "adl/primesums.hpp"
#include "adl/series_asym.hpp"
#include "adl/sieve.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Global {
    bool json_out = false;
    bool csv_out = false;
    std::string cache_dir;
    uint64_t seed = 0;
};

std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stod(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

std::string cache_dir_or_env(const Global& g) {
    if (!g.cache_dir.empty()) return g.cache_dir;
    const char* env = std::getenv("ADL_CACHE_DIR");
    return env ? env : "";
}

void setup_sums(CLI::App& app, Global& g, int& rc) {
    auto* sums = app.add_subcommand("sums", "exact sifted Mobius sums and identities");

    auto* mkw = sums->add_subcommand("mkw", "M_{k,omega}(x,y), exact integer");
    static double x = 100, y = 1.9;
    static int k = 1;
    static uint64_t rm = 1, rl = 0;
    mkw->add_option("--x", x, "upper limit x")->required();
    mkw->add_option("--y", y, "sifting threshold y");
    mkw->add_option("--k", k, "binomial order k");
    mkw->add_option("--residue-m", rm, "residue modulus m (1 = no filter)");
    mkw->add_option("--residue-l", rl, "residue class l");
    mkw->callback([&] {
        adl::sums::SumRequest req;
        req.x = static_cast<uint64_t>(x);
        req.y = y;
        req.k = k;
        req.cache_dir = cache_dir_or_env(g);
        if (rm > 1) req.residue = {rm, rl};
        int64_t v = adl::sums::mkw_exact(req);
        if (g.json_out) {
            json j{{"x", std::to_string(req.x)}, {"y", y}, {"k", k},
                   {"value", std::to_string(v)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << v << "\n";
        }
    });

    auto* du = sums->add_subcommand("duality", "check both duality relations");
    static uint64_t maxn = 100000;
    static std::string klist = "1,2,3";
    du->add_option("--max-n", maxn, "check all n up to this bound");
    du->add_option("--k", klist, "comma-separated k values");
    du->callback([&] {
        auto ks = parse_grid(klist);
        std::vector<std::function<int64_t(uint64_t)>> fs = {
            [](uint64_t p) {
                return p == adl::sieve::kInfinityMark ? 0 : static_cast<int64_t>(p);
            },
            [](uint64_t p) {
                return p == adl::sieve::kInfinityMark
                           ? 0
                           : static_cast<int64_t>(std::floor(std::log((double)p)));
            },
            [](uint64_t p) {
                return p == adl::sieve::kInfinityMark ? 0 : static_cast<int64_t>(p % 4 == 1);
            }};
        uint64_t violations = 0;
        for (uint64_t n = 2; n <= maxn; ++n)
            for (double kk : ks)
                for (auto& f : fs) {
                    auto r = adl::sums::duality_check(n, static_cast<int>(kk), f);
                    violations += !r.third_ok + !r.fourth_ok;
                }
        if (g.json_out) {
            json j{{"max_n", std::to_string(maxn)}, {"violations", std::to_string(violations)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "violations: " << violations << " (n <= " << maxn << ")\n";
        }
        if (violations) rc = 1;
    });

    auto* rs = sums->add_subcommand("residue", "residue-class series partial sums");
    static uint64_t m = 4, l = 1;
    static int rk = 1;
    static std::string xgrid = "1e5,1e6,1e7";
    rs->add_option("--m", m, "modulus")->required();
    rs->add_option("--l", l, "residue class")->required();
    rs->add_option("--k", rk, "binomial order k");
    rs->add_option("--x-grid", xgrid, "comma-separated x values");
    rs->callback([&] {
        auto xs = parse_grid(xgrid);
        json rows = json::array();
        if (!g.json_out) std::cout << "x,partial_sum,target\n";
        double target = (rk % 2 ? -1.0 : 1.0);
        uint64_t phi = 0;
        for (uint64_t a = 1; a <= m; ++a)
            if (std::gcd(a, m) == 1) ++phi;
        target /= static_cast<double>(phi);
        for (double xv : xs) {
            double s = adl::sums::residue_series_partial(m, l, static_cast<uint64_t>(xv), rk);
            if (g.json_out)
                rows.push_back({{"x", std::to_string((uint64_t)xv)}, {"partial", s},
                                {"target", target}});
            else
                std::printf("%.0f,%.9f,%.6f\n", xv, s, target);
        }
        if (g.json_out) std::cout << rows.dump() << "\n";
    });

    auto* ratio = sums->add_subcommand("ratio", "general-range upper-bound ratios");
    static std::string rx = "1e6", ry = "10";
    static int ratk = 2;
    ratio->add_option("--x-grid", rx, "comma-separated x values");
    ratio->add_option("--y-grid", ry, "comma-separated y values");
    ratio->add_option("--k", ratk, "binomial order k");
    ratio->callback([&] {
        json rows = json::array();
        if (!g.json_out) std::cout << "x,y,ratio\n";
        for (double xv : parse_grid(rx))
            for (double yv : parse_grid(ry)) {
                double r = adl::sums::upper_bound_ratio(static_cast<uint64_t>(xv), yv, ratk);
                if (g.json_out)
                    rows.push_back(
                        {{"x", std::to_string((uint64_t)xv)}, {"y", yv}, {"ratio", r}});
                else
                    std::printf("%.0f,%g,%.9e\n", xv, yv, r);
            }
        if (g.json_out) std::cout << rows.dump() << "\n";
    });
}

void setup_primesums(CLI::App& app, Global& g) {
    auto* ps = app.add_subcommand("primesums", "Mertens-type sums and G derivatives");

    auto* prof = ps->add_subcommand("profile", "values and certified radii at one y");
    static double y = 1e5;
    static int maxn = 4, maxi = 2;
    prof->add_option("--y", y, "threshold y")->required();
    prof->add_option("--max-n", maxn, "highest s-derivative order");
    prof->add_option("--max-i", maxi, "highest z-derivative order");
    prof->callback([&] {
        auto p = adl::primesums::profile(y, maxn, maxi);
        json j;
        j["y"] = p.y;
        j["tail_cut"] = p.tail_cut;
        j["mertens_m"] = p.mertens_m;
        j["mertens_q"] = p.mertens_q;
        j["continuation"] = json::array();
        for (auto& cv : p.cont)
            j["continuation"].push_back({{"value", cv.value}, {"radius", cv.radius}});
        j["g_derivs"] = json::array();
        for (size_t i = 0; i < p.g.size(); ++i) {
            json row = json::array();
            for (auto& cv : p.g[i]) row.push_back({{"value", cv.value}, {"radius", cv.radius}});
            j["g_derivs"].push_back(row);
        }
        std::cout << j.dump(2) << "\n";
    });

    auto* fit = ps->add_subcommand("fit", "least-squares asymptotic fits");
    static std::string kind = "M";
    static int power = 1, degree = 1;
    static std::string ygrid = "1e3,3.16e3,1e4,3.16e4,1e5,3.16e5,1e6";
    fit->add_option("--kind", kind, "M or Q");
    fit->add_option("--power", power, "log power in the sum");
    fit->add_option("--degree", degree, "fit degree in log y");
    fit->add_option("--y-grid", ygrid, "comma-separated y values");
    fit->callback([&] {
        auto ys = parse_grid(ygrid);
        std::vector<double> vals;
        for (double yv : ys)
            vals.push_back(adl::primesums::mertens_sum(
                kind == "Q" ? adl::primesums::MertensKind::Q : adl::primesums::MertensKind::M,
                power, yv));
        auto f = adl::primesums::asymptotic_fit(ys, vals, adl::primesums::FitBasis::poly_logy,
                                                degree);
        if (g.json_out) {
            json j{{"basis", f.basis}, {"coeffs", f.coeffs}, {"residuals", f.residuals}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < f.coeffs.size(); ++i)
                std::printf("%s,%.9e\n", f.basis[i].c_str(), f.coeffs[i]);
            std::printf("y,residual\n");
            for (size_t i = 0; i < ys.size(); ++i)
                std::printf("%g,%.3e\n", ys[i], f.residuals[i]);
        }
    });
}

void setup_constants(CLI::App& app, Global&) {
    auto* cst = app.add_subcommand("constants", "analytic constants");
    auto* dump = cst->add_subcommand("dump", "Gamma_{m,N} per method with discrepancies");
    static int maxm = 4, maxn = 5;
    dump->add_option("--max-m", maxm, "highest derivative order m");
    dump->add_option("--max-n", maxn, "highest N");
    dump->callback([&] {
        std::printf("m,N,closed_form,finite_diff,abs_discrepancy\n");
        for (int m = 0; m <= maxm; ++m)
            for (int N = 0; N <= maxn; ++N) {
                double c = adl::constants::gamma_mn_closed(m, N);
                double o = adl::constants::gamma_mn_oracle(m, N).value;
                std::printf("%d,%d,%.12e,%.12e,%.3e\n", m, N, c, o, std::fabs(c - o));
            }
    });
}

void setup_hankel(CLI::App& app, Global&) {
    auto* hk = app.add_subcommand("hankel", "truncated Hankel contour quadrature");
    auto* scan = hk->add_subcommand("scan", "truncation decay scan");
    static int m = 1, n = 1;
    static std::string cuts = "10,20,30,40";
    scan->add_option("--m", m, "log power m");
    scan->add_option("--n", n, "w power N");
    scan->add_option("--cutoffs", cuts, "comma-separated arm lengths");
    scan->callback([&] {
        auto xs = parse_grid(cuts);
        auto rows = adl::hankel::truncation_decay_scan(m, n, xs);
        std::printf("X,value,abs_error\n");
        for (auto& r : rows) std::printf("%g,%.12e,%.3e\n", r.cutoff, r.value, r.abs_error);
    });
}

void setup_asym(CLI::App& app, Global& g) {
    auto* as = app.add_subcommand("asym", "series assembly and main-term comparison");

    auto* phi = as->add_subcommand("phi", "phi table with certified radii");
    static double y = 100;
    static int k = 2, n = 3;
    phi->add_option("--y", y, "threshold y")->required();
    phi->add_option("--k", k, "binomial order k");
    phi->add_option("--n", n, "u-order of the table");
    phi->callback([&] {
        auto t = adl::series::phi_table(y, k, n);
        json j{{"y", t.y}, {"k", t.k}, {"nprime", t.nprime}};
        j["phi"] = t.phi;
        j["radius"] = t.radius;
        std::cout << j.dump(2) << "\n";
    });

    auto* cmp = as->add_subcommand("compare", "exact vs main term over an x grid");
    static double cy = 5;
    static int ck = 2, cn = 2;
    static std::string xgrid = "1e5,1e6,1e7";
    static adl::series::Window w;
    cmp->add_option("--y", cy, "threshold y");
    cmp->add_option("--k", ck, "binomial order k");
    cmp->add_option("--n", cn, "truncation order N");
    cmp->add_option("--x-grid", xgrid, "comma-separated x values");
    cmp->add_option("--y0", w.y0, "window constant Y0");
    cmp->add_option("--power", w.power, "window constant p");
    cmp->add_option("--epsilon", w.epsilon, "window constant epsilon");
    cmp->callback([&] {
        auto xs = parse_grid(xgrid);
        auto rows = adl::series::compare(xs, cy, ck, cn, w);
        if (g.json_out) {
            json arr = json::array();
            for (auto& r : rows)
                arr.push_back({{"x", r.x}, {"exact", std::to_string(r.exact)},
                               {"main", r.main},
                               {"normalized_residual", r.normalized_residual}});
            std::cout << arr.dump(2) << "\n";
        } else {
            std::printf("x,exact,main,normalized_residual\n");
            for (auto& r : rows)
                std::printf("%.0f,%lld,%.6e,%.6e\n", r.x, static_cast<long long>(r.exact),
                            r.main, r.normalized_residual);
        }
    });
}

void setup_orders(CLI::App& app, Global&) {
    auto* od = app.add_subcommand("orders", "growth-order comparisons");
    auto* cmp = od->add_subcommand("cmp", "compare two growth expressions");
    static std::string fs, gs;
    cmp->add_option("--f", fs, "left expression")->required();
    cmp->add_option("--g", gs, "right expression")->required();
    cmp->callback([&] {
        auto f = adl::orders::parse(fs);
        auto gg = adl::orders::parse(gs);
        std::cout << "f: " << adl::orders::to_string(f) << "\n";
        std::cout << "g: " << adl::orders::to_string(gg) << "\n";
        std::cout << "f <_forall g: " << (adl::orders::lt_forall(f, gg) ? "true" : "false")
                  << "\n";
        std::cout << "f <_exists g: " << (adl::orders::lt_exists(f, gg) ? "true" : "false")
                  << "\n";
        try {
            std::cout << "same strict lower set: "
                      << (adl::orders::lower_set_equal(f, gg) ? "true" : "false") << "\n";
        } catch (const adl::orders::OutOfClassError&) {
            std::cout << "same strict lower set: OUT_OF_CLASS\n";
        }
    });
}

void setup_comb(CLI::App& app, Global&) {
    auto* cb = app.add_subcommand("comb", "exact combinatorial tables");
    auto* dump = cb->add_subcommand("dump", "CSV tables of S2, c1, T, Fubini");
    static int maxn = 10;
    dump->add_option("--max-n", maxn, "table size");
    dump->callback([&] {
        std::printf("table,n,k,value\n");
        for (int n = 0; n <= maxn; ++n)
            for (int k = 0; k <= n; ++k)
                std::printf("S2,%d,%d,%s\n", n, k,
                            adl::comb::stirling2(n, k).str().c_str());
        for (int n = 0; n <= maxn; ++n)
            for (int k = 0; k <= n; ++k)
                std::printf("c1,%d,%d,%s\n", n, k,
                            adl::comb::stirling1_unsigned(n, k).str().c_str());
        for (int j = 0; j <= maxn - 1; ++j)
            for (int k = 1; k <= j + 1; ++k)
                std::printf("T,%d,%d,%s\n", j, k, adl::comb::t_coeff_big(j, k).str().c_str());
        for (int n = 0; n <= maxn; ++n)
            std::printf("fubini,%d,0,%s\n", n, adl::comb::fubini(n).str().c_str());
    });
}

void setup_acceptance(CLI::App& app, Global& g, int& rc) {
    auto* ac = app.add_subcommand("acceptance", "acceptance criteria");
    auto* runcmd = ac->add_subcommand("run", "run the full acceptance suite");
    static adl::acceptance::RunConfig cfg;
    runcmd->add_option("--sieve-ceiling", cfg.sieve_ceiling, "largest allowed sieve bound");
    runcmd->add_option("--y0", cfg.y0, "window constant Y0");
    runcmd->add_option("--power", cfg.power, "window constant p");
    runcmd->add_option("--epsilon", cfg.epsilon, "window constant epsilon");
    runcmd->callback([&] {
        cfg.cache_dir = cache_dir_or_env(g);
        cfg.seed = g.seed;
        auto rep = adl::acceptance::run_full(cfg);
        if (g.json_out)
            std::cout << adl::acceptance::render_json(rep, cfg) << "\n";
        else
            std::cout << rep.text;
        if (!rep.all_passed()) rc = 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sifted Mobius sums, Selberg-Delange constants, and growth orders"};
    app.require_subcommand(1);
    Global g;
    int rc = 0;
    app.add_flag("--json", g.json_out, "JSON output");
    app.add_flag("--csv", g.csv_out, "CSV output (default for tabular commands)");
    app.add_option("--cache-dir", g.cache_dir, "sieve cache directory (or ADL_CACHE_DIR)");
    app.add_option("--seed", g.seed, "seed for randomized fixture selection (default fixed)");

    setup_sums(app, g, rc);
    setup_primesums(app, g);
    setup_constants(app, g);
    setup_hankel(app, g);
    setup_asym(app, g);
    setup_orders(app, g);
    setup_comb(app, g);
    setup_acceptance(app, g, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
