#include "adl/orders.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace adl::orders {

namespace {

using Scale = std::pair<Rat, Rat>;  // (alpha, beta) exponents of (log x, llx)

constexpr auto kLogX = Scale{Rat(1), Rat(0)};
constexpr auto kLlx = Scale{Rat(0), Rat(1)};
const Scale kConst{Rat(0), Rat(0)};

// log f as an exact sum of scale terms. Ordered map: largest scale = most
// dominant term last.
using LogForm = std::map<Scale, Rat>;

void add_term(LogForm& f, const Scale& s, const Rat& c) {
    if (c == Rat(0)) return;
    auto it = f.find(s);
    if (it == f.end())
        f.emplace(s, c);
    else {
        it->second += c;
        if (it->second == Rat(0)) f.erase(it);
    }
}

LogForm to_logform(const GrowthClass& g) {
    LogForm f;
    add_term(f, kLogX, g.rho);
    if (g.c != Rat(0)) add_term(f, Scale{g.alpha, g.beta}, g.c);
    add_term(f, kLlx, g.delta);
    return f;
}

// Largest scale that actually tends to infinity (scale > (0,0) lexicographically).
// Terms at or below constant scale never matter for the orders.
struct Dominant {
    bool exists = false;
    Scale scale{};
    Rat coef{0};
};

Dominant dominant(const LogForm& f) {
    // map is ordered by scale; only the largest entry can be effective, and
    // it is effective iff its scale exceeds the constant scale (0,0)
    if (!f.empty() && f.rbegin()->first > kConst)
        return {true, f.rbegin()->first, f.rbegin()->second};
    return {};
}

bool form_unbounded(const LogForm& f) {
    Dominant d = dominant(f);
    return d.exists && d.coef > Rat(0);
}

bool lt_forall_form(const LogForm& f, const LogForm& g) {
    if (!form_unbounded(g))
        throw std::invalid_argument("lt_forall: g must be unbounded");
    Dominant df = dominant(f);
    if (!df.exists || df.coef < Rat(0)) return true;  // f bounded or f -> 0
    return df.scale < dominant(g).scale;
}

bool lt_exists_form(const LogForm& f, const LogForm& g) {
    if (!form_unbounded(g))
        throw std::invalid_argument("lt_exists: g must be unbounded");
    Dominant df = dominant(f);
    if (!df.exists || df.coef < Rat(0)) return true;
    Dominant dg = dominant(g);
    if (df.scale != dg.scale) return df.scale < dg.scale;
    return df.coef < dg.coef;  // limsup log f / log g = coef ratio
}

LogForm subtract(const LogForm& a, const LogForm& b) {
    LogForm r = a;
    for (const auto& [s, c] : b) add_term(r, s, -c);
    return r;
}

bool is_intermediate(const Scale& s) { return s != kLogX && s != kLlx && s != kConst; }

void check_in_family(const LogForm& f, const char* who) {
    int inter = 0;
    for (const auto& [s, c] : f)
        if (is_intermediate(s)) ++inter;
    if (inter >= 2) {
        std::ostringstream os;
        os << who << ": quotient needs " << inter
           << " intermediate terms and leaves the representable family (OUT_OF_CLASS)";
        throw OutOfClassError(os.str());
    }
}

}  // namespace

bool is_canonical(const GrowthClass& f) {
    if (f.c < Rat(0)) return false;
    if (f.c == Rat(0)) return f.alpha == Rat(0) && f.beta == Rat(0);
    return f.alpha < Rat(1) || (f.alpha == Rat(1) && f.beta < Rat(0));
}

void require_canonical(const GrowthClass& f) {
    if (!is_canonical(f))
        throw std::invalid_argument(
            "GrowthClass is not canonical: need c >= 0 and alpha < 1 or (alpha = 1, beta < 0)");
}

bool is_unbounded(const GrowthClass& f) {
    require_canonical(f);
    return form_unbounded(to_logform(f));
}

bool is_subradical(const GrowthClass& f) {
    require_canonical(f);
    return f.rho == Rat(0) &&
           (f.c == Rat(0) || f.alpha < Rat(1) || (f.alpha == Rat(1) && f.beta < Rat(0)));
}

bool lt_forall(const GrowthClass& f, const GrowthClass& g) {
    require_canonical(f);
    require_canonical(g);
    return lt_forall_form(to_logform(f), to_logform(g));
}

bool lt_exists(const GrowthClass& f, const GrowthClass& g) {
    require_canonical(f);
    require_canonical(g);
    return lt_exists_form(to_logform(f), to_logform(g));
}

bool lower_set_equal(const GrowthClass& f, const GrowthClass& g) {
    require_canonical(f);
    require_canonical(g);
    LogForm lf = to_logform(f), lg = to_logform(g);
    if (!form_unbounded(lf) || !form_unbounded(lg))
        throw std::invalid_argument("lower_set_equal: f and g must be unbounded");
    LogForm qfg = subtract(lf, lg), qgf = subtract(lg, lf);
    check_in_family(qfg, "lower_set_equal");
    check_in_family(qgf, "lower_set_equal");
    return lt_forall_form(qfg, lf) && lt_forall_form(qgf, lg);
}

namespace {

GrowthClass from_logform(const LogForm& f, const char* who) {
    check_in_family(f, who);
    GrowthClass g;
    for (const auto& [s, c] : f) {
        if (s == kLogX)
            g.rho = c;
        else if (s == kLlx)
            g.delta = c;
        else if (s == kConst)
            continue;
        else {
            if (c < Rat(0))
                throw OutOfClassError(std::string(who) +
                                      ": negative intermediate coefficient is outside the "
                                      "canonical family (OUT_OF_CLASS)");
            g.c = c;
            g.alpha = s.first;
            g.beta = s.second;
        }
    }
    require_canonical(g);
    return g;
}

}  // namespace

GrowthClass mul(const GrowthClass& f, const GrowthClass& g) {
    require_canonical(f);
    require_canonical(g);
    LogForm r = to_logform(f);
    for (const auto& [s, c] : to_logform(g)) add_term(r, s, c);
    return from_logform(r, "mul");
}

GrowthClass add_max(const GrowthClass& f, const GrowthClass& g) {
    require_canonical(f);
    require_canonical(g);
    LogForm d = subtract(to_logform(f), to_logform(g));
    Dominant dd = dominant(d);
    if (!dd.exists || dd.coef > Rat(0)) return f;  // ties keep f (constant shift ignored)
    return g;
}

GrowthClass pow(const GrowthClass& f, const Rat& p) {
    require_canonical(f);
    if (!(p > Rat(0))) throw std::invalid_argument("pow: p > 0");
    GrowthClass r = f;
    r.rho *= p;
    r.c *= p;
    r.delta *= p;
    return r;
}

// ---------------------------------------------------------------------------
// expression parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view src;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        std::ostringstream os;
        os << "parse error at position " << pos << ": expected " << expected;
        throw std::invalid_argument(os.str());
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (src.substr(pos, w.size()) == w) {
            // reject prefixes of longer identifiers ("logx" inside "logxy")
            size_t end = pos + w.size();
            if (end < src.size() && (std::isalnum(static_cast<unsigned char>(src[end])) ||
                                     src[end] == '_'))
                return false;
            pos = end;
            return true;
        }
        return false;
    }

    Rat parse_rational() {
        skip_ws();
        size_t start = pos;
        bool neg = eat('-');
        skip_ws();
        long long num = 0;
        bool any = false;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            num = num * 10 + (src[pos] - '0');
            ++pos;
            any = true;
        }
        if (!any) {
            pos = start;
            fail("a rational number (digits, optional '.', '/' or leading '-')");
        }
        long long den = 1;
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                num = num * 10 + (src[pos] - '0');
                den *= 10;
                ++pos;
            }
        } else if (pos < src.size() && src[pos] == '/') {
            ++pos;
            long long d = 0;
            bool anyd = false;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                d = d * 10 + (src[pos] - '0');
                ++pos;
                anyd = true;
            }
            if (!anyd || d == 0) fail("a nonzero denominator after '/'");
            den = d;
        }
        Rat r(num, den);
        return neg ? -r : r;
    }

    // value-domain monomial inside exp(): coef * logx^a * llx^b
    void parse_exp_argument(Rat& coef, Rat& a, Rat& b) {
        coef = Rat(1);
        a = b = Rat(0);
        while (true) {
            skip_ws();
            if (eat_word("logx")) {
                Rat e(1);
                if (eat('^')) e = parse_rational();
                a += e;
            } else if (eat_word("llx")) {
                Rat e(1);
                if (eat('^')) e = parse_rational();
                b += e;
            } else if (eat_word("x")) {
                fail("no 'x' inside exp() (that growth leaves the class); use logx/llx");
            } else if (pos < src.size() &&
                       (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '-')) {
                Rat n = parse_rational();
                if (eat('^')) {
                    Rat e = parse_rational();
                    if (e.denominator() != 1)
                        fail("an integer exponent on numeric literals");
                    long long k = e.numerator();
                    Rat acc(1);
                    Rat base = k >= 0 ? n : Rat(n.denominator(), n.numerator());
                    for (long long i = 0; i < std::abs(k); ++i) acc *= base;
                    n = acc;
                }
                coef *= n;
            } else {
                fail("logx, llx, or a numeric factor inside exp()");
            }
            if (!eat('*')) break;
        }
    }

    LogForm parse_factor() {
        skip_ws();
        LogForm f;
        if (eat_word("exp")) {
            if (!eat('(')) fail("'(' after exp");
            Rat coef, a, b;
            parse_exp_argument(coef, a, b);
            if (!eat(')')) fail("')' closing exp(...)");
            add_term(f, Scale{a, b}, coef);
        } else if (eat_word("logx")) {
            add_term(f, kLlx, Rat(1));
        } else if (eat_word("llx")) {
            fail("llx only makes sense inside exp() (log(llx) leaves the class)");
        } else if (eat_word("x")) {
            add_term(f, kLogX, Rat(1));
        } else if (pos < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[pos]))) {
            Rat n = parse_rational();
            if (n <= Rat(0)) fail("a positive numeric constant");
            // multiplicative constant: no effect on the growth class
        } else {
            fail("x, logx, exp(...), or a numeric constant");
        }
        if (eat('^')) {
            Rat e = parse_rational();
            for (auto& [s, c] : f) c *= e;
        }
        return f;
    }

    LogForm parse_expr() {
        LogForm f = parse_factor();
        while (eat('*')) {
            for (const auto& [s, c] : parse_factor()) add_term(f, s, c);
        }
        skip_ws();
        if (pos != src.size()) fail("'*' or end of expression");
        return f;
    }
};

}  // namespace

GrowthClass parse(std::string_view expr) {
    Parser p{expr};
    return from_logform(p.parse_expr(), "parse");
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

}  // namespace

std::string to_string(const GrowthClass& f) {
    std::ostringstream os;
    os << "log f = ";
    bool any = false;
    if (f.rho != Rat(0)) {
        os << rat_str(f.rho) << "*logx";
        any = true;
    }
    if (f.c != Rat(0)) {
        if (any) os << " + ";
        os << rat_str(f.c) << "*(logx)^" << rat_str(f.alpha) << "*(llx)^" << rat_str(f.beta);
        any = true;
    }
    if (f.delta != Rat(0)) {
        if (any) os << " + ";
        os << rat_str(f.delta) << "*llx";
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

}  // namespace adl::orders
