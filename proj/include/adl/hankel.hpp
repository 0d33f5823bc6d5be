#pragma once

#include <complex>
#include <span>
#include <vector>

namespace adl::hankel {

// Truncated Hankel contour: horizontal arm at Im = -1 from -X to 0, right
// unit semicircle around 0, horizontal arm at Im = +1 back to -X.
// Principal branch of log throughout.
struct ContourSpec {
    double cutoff_x = 30.0;    // arm length X
    int nodes_per_unit = 16;   // quadrature density; adaptively doubled
};

enum class Branch {
    principal,
    broken_real,  // log |w| on the whole contour; a deliberate negative control
};

enum class HalfMode {
    full,
    upper_doubled,  // 2 Re of the upper-half integral; equals full by symmetry
};

// Raw contour integral (1/2*pi*i) int log(w)^m w^{npow+1} e^w dw at a fixed
// node density, before symmetrization.
std::complex<double> contour_integral_raw(int m, int npow, const ContourSpec& spec,
                                          Branch branch = Branch::principal,
                                          HalfMode half = HalfMode::full);

// Adaptive version: doubles nodes_per_unit until two successive densities
// agree; throws with the last two iterates otherwise. The assembled value is
// real (conjugate-symmetric contour); |Im| is checked against 1e-9.
double hankel_integral(int m, int npow, ContourSpec spec);

struct DecayRow {
    double cutoff;
    double value;
    double abs_error;  // against the closed-form Gamma_{m,N}
};

// Truncation-error profile over ascending cutoffs (>= 3 entries).
std::vector<DecayRow> truncation_decay_scan(int m, int npow, std::span<const double> cutoffs);

}  // namespace adl::hankel
