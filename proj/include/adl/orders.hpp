#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace adl::orders {

using Rat = boost::rational<long long>;

// Canonical growth class: log f(x) = rho log x + c (log x)^alpha (llx)^beta
// + delta llx, with c >= 0 and, when c > 0, alpha < 1 or (alpha = 1, beta < 0).
struct GrowthClass {
    Rat rho{0};
    Rat c{0};
    Rat alpha{0};
    Rat beta{0};
    Rat delta{0};
};

struct OutOfClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_canonical(const GrowthClass& f);
void require_canonical(const GrowthClass& f);  // throws std::invalid_argument

// f is unbounded (tends to +infinity).
bool is_unbounded(const GrowthClass& f);

// log f(x) = o(log x)?
bool is_subradical(const GrowthClass& f);

// f <_forall g: f = o(g^eps) for every eps > 0. Pre: g unbounded.
bool lt_forall(const GrowthClass& f, const GrowthClass& g);

// f <_exists g: f = o(g^{1-eps}) for some eps in (0,1). Pre: g unbounded.
bool lt_exists(const GrowthClass& f, const GrowthClass& g);

// Same strict <_exists lower set: lt_forall(f/g, f) and lt_forall(g/f, g).
// Bounded quotients count as constants. Throws OutOfClassError when a
// quotient needs two incompatible intermediate terms.
bool lower_set_equal(const GrowthClass& f, const GrowthClass& g);

// log-form algebra on canonical classes
GrowthClass mul(const GrowthClass& f, const GrowthClass& g);      // f*g
GrowthClass add_max(const GrowthClass& f, const GrowthClass& g);  // pointwise-dominant form of f+g
GrowthClass pow(const GrowthClass& f, const Rat& p);              // f^p, p > 0

// Expression grammar: x, logx, llx (inside exp only), exp(...), rational or
// decimal powers with ^, products with *. Errors carry position and the
// expected token.
GrowthClass parse(std::string_view expr);
std::string to_string(const GrowthClass& f);

}  // namespace adl::orders
