#pragma once

#include <vector>

// Integer-order Bessel function arrays used by the lattice Green function
// quadratures. Both evaluators fill J_n / e^{-t} I_n for all n = 0..nmax in
// one pass so that a single t-node serves every matrix element.
namespace latpair::bessel {

// J_0(t) .. J_nmax(t). Upward recurrence from libm j0/j1 when t is safely
// above the order, Miller backward recurrence with even-sum normalization
// otherwise.
void j_array(int nmax, double t, double* out);

// Exponentially scaled modified Bessel functions e^{-t} I_n(t), n = 0..nmax.
// Miller backward recurrence; the scaled normalization e^{-t}[I0 + 2 sum I_n] = 1
// keeps everything bounded for large t.
void i_scaled_array(int nmax, double t, double* out);

// Upper incomplete gamma Gamma(a, x) for real a (including negative
// half-integers) and x > 0. Used for the algebraic tails of the above-band
// Green integrals.
double upper_gamma(double a, double x);

}  // namespace latpair::bessel
