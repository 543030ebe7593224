#include "latpair/bessel.hpp"

#include <cmath>
#include <stdexcept>

extern "C" {
double j0(double);
double j1(double);
}

namespace latpair::bessel {

namespace {

void j_array_miller(int nmax, double t, double* out) {
    // backward recurrence started well above both the order and the argument
    const int start = std::max(nmax, static_cast<int>(std::ceil(t))) + 36;
    double bp = 0.0;          // b_{n+1}
    double bn = 1e-300;       // b_n, arbitrary seed
    double even_sum = 0.0;    // accumulates J_0 + 2 sum_{k>=1} J_{2k}
    for (int n = start; n >= 1; --n) {
        const double bm = (2.0 * n / t) * bn - bp;
        bp = bn;
        bn = bm;
        const int idx = n - 1;
        if (idx <= nmax) out[idx] = bn;
        if ((idx & 1) == 0) even_sum += (idx == 0) ? bn : 2.0 * bn;
        if (std::abs(bn) > 1e250) {
            const double s = 1e-250;
            bn *= s;
            bp *= s;
            even_sum *= s;
            for (int k = idx; k <= nmax; ++k) out[k] *= s;
        }
    }
    const double scale = 1.0 / even_sum;
    for (int n = 0; n <= nmax; ++n) out[n] *= scale;
}

}  // namespace

void j_array(int nmax, double t, double* out) {
    if (t < 0.0) throw std::invalid_argument("j_array: t must be >= 0");
    if (t == 0.0) {
        out[0] = 1.0;
        for (int n = 1; n <= nmax; ++n) out[n] = 0.0;
        return;
    }
    if (t >= 2.0 * std::max(nmax, 1) && t >= 15.0) {
        out[0] = ::j0(t);
        if (nmax >= 1) out[1] = ::j1(t);
        for (int n = 1; n < nmax; ++n)
            out[n + 1] = (2.0 * n / t) * out[n] - out[n - 1];
        return;
    }
    j_array_miller(nmax, t, out);
}

void i_scaled_array(int nmax, double t, double* out) {
    if (t < 0.0) throw std::invalid_argument("i_scaled_array: t must be >= 0");
    if (t == 0.0) {
        out[0] = 1.0;
        for (int n = 1; n <= nmax; ++n) out[n] = 0.0;
        return;
    }
    // I_n(t)/I_0(t) ~ exp(-n^2/2t); start high enough that the seed has decayed
    const int start =
        nmax + 10 + static_cast<int>(std::ceil(std::sqrt(std::max(1.0, 80.0 * t))));
    double bp = 0.0;
    double bn = 1e-300;
    double sum = 0.0;  // I_0 + 2 sum_{n>=1} I_n (unscaled)
    for (int n = start; n >= 1; --n) {
        double bm = bp + (2.0 * n / t) * bn;
        bp = bn;
        bn = bm;
        if (n - 1 <= nmax) out[n - 1] = bn;
        sum += (n - 1 == 0) ? bn : 2.0 * bn;
        if (bn > 1e250) {
            const double s = 1e-250;
            bn *= s;
            bp *= s;
            sum *= s;
            for (int k = n - 1; k <= nmax; ++k) out[k] *= s;
        }
    }
    // e^{-t} (I0 + 2 sum I_n) = 1
    const double scale = 1.0 / sum;
    for (int n = 0; n <= nmax; ++n) out[n] *= scale;
}

double upper_gamma(double a, double x) {
    if (x <= 0.0) throw std::invalid_argument("upper_gamma: x must be > 0");
    if (x >= 1.5) {
        // Lentz continued fraction, valid for any real a
        const double tiny = 1e-300;
        double b = x + 1.0 - a;
        double c = 1.0 / tiny;
        double d = 1.0 / b;
        double h = d;
        for (int i = 1; i <= 400; ++i) {
            const double an = -i * (i - a);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < 1e-16) break;
        }
        return std::exp(-x + a * std::log(x)) * h;
    }
    // small x: climb down from Gamma(1/2, x) (half-integer a) or use
    // the series via tgamma for generic a
    const double half_frac = a - std::floor(a);
    if (std::abs(half_frac - 0.5) < 1e-12 && a <= 0.5) {
        double g = std::sqrt(M_PI) * std::erfc(std::sqrt(x));  // Gamma(1/2, x)
        double aa = 0.5;
        while (aa > a + 1e-12) {
            aa -= 1.0;
            g = (g - std::pow(x, aa) * std::exp(-x)) / aa;
        }
        return g;
    }
    // generic fallback: Gamma(a) - lower incomplete via series
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 1; n < 300; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    const double lower = std::pow(x, a) * std::exp(-x) * sum;
    return std::tgamma(a) - lower;
}

}  // namespace latpair::bessel
