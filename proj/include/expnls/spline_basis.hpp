/**
 * @file spline_basis.hpp
 * @brief Exponential cubic B-spline basis on a uniform mesh
 *
 * B_i is supported on [x_{i-2}, x_{i+2}], equals 1 at x_i and is C^2. The
 * tension parameter p blends between the cubic B-spline (p -> 0) and a
 * piecewise linear hat (p -> infinity).
 *
 * All quantities that cancel for small p*h (sinh z - z, z cosh z - sinh z,
 * cosh z - 1) are evaluated through truncated Taylor series below
 * kSeriesCutoff, so the basis stays accurate down to p ~ 1e-9.
 *
 * Evaluation uses the truncated-power representation
 *
 *   B_i(x) = 1/(2D) * sum_j w_j * phi(x_{i-2+j} - x),
 *   phi(t) = sinh(pt) - pt for t > 0 and 0 otherwise,
 *   w = (1, -2(c+1), 4c+2, -2(c+1), 1),  D = phc - s,
 *
 * which is algebraically identical to the piecewise form with the
 * a1/b1/c1/d1 coefficients but does not cancel catastrophically.
 */

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace expnls {

/// Thrown for non-physical inputs (non-positive p or h, bad mesh, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Below this value of z = p*h the cancellation-prone combinations switch to
/// series. At z = 0.1 the first neglected term is ~1e-15 relative.
inline constexpr double kSeriesCutoff = 0.1;

/// sinh(z) - z
inline double sinh_minus_arg(double z) {
    if (std::abs(z) < kSeriesCutoff) {
        const double z2 = z * z;
        return z * z2 *
               (1.0 / 6.0 +
                z2 * (1.0 / 120.0 +
                      z2 * (1.0 / 5040.0 + z2 * (1.0 / 362880.0 + z2 / 39916800.0))));
    }
    return std::sinh(z) - z;
}

/// cosh(z) - 1
inline double cosh_minus_one(double z) {
    if (std::abs(z) < kSeriesCutoff) {
        const double z2 = z * z;
        return z2 *
               (0.5 + z2 * (1.0 / 24.0 +
                            z2 * (1.0 / 720.0 + z2 * (1.0 / 40320.0 + z2 / 3628800.0))));
    }
    return std::cosh(z) - 1.0;
}

/// z*cosh(z) - sinh(z)
inline double z_cosh_minus_sinh(double z) {
    if (std::abs(z) < kSeriesCutoff) {
        const double z2 = z * z;
        // coefficient of z^(2k+1) is 1/(2k)! - 1/(2k+1)! = 2k/(2k+1)!
        return z * z2 *
               (1.0 / 3.0 +
                z2 * (1.0 / 30.0 +
                      z2 * (1.0 / 840.0 + z2 * (1.0 / 45360.0 + z2 / 3991680.0))));
    }
    return z * std::cosh(z) - std::sinh(z);
}

}  // namespace detail

/// Tension parameter and spacing together with the hyperbolic quantities
/// every other formula is built from.
struct SplineShape {
    double p = 1.0;
    double h = 1.0;
    double s = 0.0;      ///< sinh(ph)
    double c = 1.0;      ///< cosh(ph)
    double denom = 0.0;  ///< phc - s, always > 0

    // Cancellation-free companions of s, c and denom.
    double s_minus_ph = 0.0;   ///< s - ph
    double c_minus_one = 0.0;  ///< c - 1
};

/// Build a SplineShape; throws InvalidParameter unless p > 0 and h > 0.
inline SplineShape shape(double p, double h) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw InvalidParameter("tension parameter p must be positive, got " + std::to_string(p));
    }
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw InvalidParameter("mesh spacing h must be positive, got " + std::to_string(h));
    }
    const double z = p * h;
    SplineShape out;
    out.p = p;
    out.h = h;
    out.s = std::sinh(z);
    out.c = std::cosh(z);
    out.denom = detail::z_cosh_minus_sinh(z);
    out.s_minus_ph = detail::sinh_minus_arg(z);
    out.c_minus_one = detail::cosh_minus_one(z);
    if (!(out.denom > 0.0) || !std::isfinite(out.denom)) {
        throw InvalidParameter("p*h = " + std::to_string(z) + " is outside the representable range");
    }
    return out;
}

/// Coefficients of the printed piecewise form of B_i. Only meaningful for
/// moderate p*h; they blow up like (ph)^-3 as p -> 0.
struct BasisCoefficients {
    double a1 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double c1 = 0.0;
    double d1 = 0.0;
};

inline BasisCoefficients basis_coefficients(const SplineShape& sh) {
    const double z = sh.p * sh.h;
    const double d = sh.denom;
    const double one_minus_c = -sh.c_minus_one;
    BasisCoefficients k;
    k.a1 = z * sh.c / d;
    k.b1 = 0.5 * sh.p * (sh.c * (sh.c - 1.0) + sh.s * sh.s) / (d * one_minus_c);
    k.b2 = sh.p / (2.0 * d);
    k.c1 = 0.25 * (std::exp(-z) * one_minus_c + sh.s * (std::exp(-z) - 1.0)) / (d * one_minus_c);
    k.d1 = 0.25 * (std::exp(z) * (sh.c - 1.0) + sh.s * (std::exp(z) - 1.0)) / (d * one_minus_c);
    return k;
}

/// Values of B_i and its first two derivatives at the knots of its support.
///
/// The first-derivative weight follows the convention of the nodal
/// expansion r'(x_m) = beta1*delta_{m-1} - beta1*delta_{m+1}: beta1 is the
/// slope B_{m-1}'(x_m) = B_i'(x_{i+1}), which is negative, and
/// B_i'(x_{i-1}) = -beta1.
struct NodalWeights {
    double alpha1 = 0.0;  ///< B_i(x_{i+-1})
    double alpha0 = 1.0;  ///< B_i(x_i)
    double beta1 = 0.0;   ///< B_i'(x_{i+1}) = -B_i'(x_{i-1})
    double gamma1 = 0.0;  ///< B_i''(x_{i+-1})
    double gamma0 = 0.0;  ///< B_i''(x_i) = -2 gamma1
};

inline NodalWeights nodal_weights(const SplineShape& sh) {
    const double two_d = 2.0 * sh.denom;
    NodalWeights w;
    w.alpha1 = sh.s_minus_ph / two_d;
    w.alpha0 = 1.0;
    w.beta1 = -sh.p * sh.c_minus_one / two_d;
    w.gamma1 = sh.p * sh.p * sh.s / two_d;
    w.gamma0 = -2.0 * w.gamma1;
    return w;
}

namespace detail {

/// k-th derivative of phi(t) = sinh(pt) - pt with respect to t, t >= 0.
inline double truncated_power(double p, double t, int order) {
    if (t <= 0.0) {
        return 0.0;
    }
    const double z = p * t;
    switch (order) {
        case 0:
            return sinh_minus_arg(z);
        case 1:
            return p * cosh_minus_one(z);
        default:
            return p * p * std::sinh(z);
    }
}

}  // namespace detail

/// Derivative of the given order (0, 1 or 2) of B_i at x, for a mesh with
/// knots x_j = origin + j*h. Zero outside [x_{i-2}, x_{i+2}].
inline double eval_basis(int i, double x, const SplineShape& sh, double origin, int order) {
    if (order < 0 || order > 2) {
        throw InvalidParameter("basis derivative order must be 0, 1 or 2");
    }
    const double xi = origin + static_cast<double>(i) * sh.h;
    const double offset = x - xi;
    const double u = std::abs(offset);
    if (u >= 2.0 * sh.h) {
        return 0.0;
    }
    // Right half: B(x_i + u) = [phi(2h - u) - 2(c+1) phi(h - u)] / (2D).
    // d/du phi(h - u) = -phi'(h - u), so odd orders pick up a sign.
    const double k1 = 2.0 * (sh.c + 1.0);
    const double value = (detail::truncated_power(sh.p, 2.0 * sh.h - u, order) -
                          k1 * detail::truncated_power(sh.p, sh.h - u, order)) /
                         (2.0 * sh.denom);
    double sign = (order == 1) ? -1.0 : 1.0;
    // B is even about x_i, so odd derivatives flip on the left half.
    if (offset < 0.0 && order == 1) {
        sign = -sign;
    }
    return sign * value;
}

/// The printed piecewise form with a1/b1/c1/d1 (middle pieces) and b2
/// (outer pieces). Loses all accuracy for small p*h; kept as an independent
/// reference for moderate tension.
inline double eval_basis_piecewise(int i, double x, const SplineShape& sh, double origin) {
    const BasisCoefficients k = basis_coefficients(sh);
    const double p = sh.p;
    const double xi = origin + static_cast<double>(i) * sh.h;
    const double xm2 = xi - 2.0 * sh.h;
    const double xm1 = xi - sh.h;
    const double xp1 = xi + sh.h;
    const double xp2 = xi + 2.0 * sh.h;
    if (x >= xm2 && x <= xm1) {
        return k.b2 * ((xm2 - x) - std::sinh(p * (xm2 - x)) / p);
    }
    if (x > xm1 && x <= xi) {
        return k.a1 + k.b1 * (xi - x) + k.c1 * std::exp(p * (xi - x)) + k.d1 * std::exp(-p * (xi - x));
    }
    if (x > xi && x <= xp1) {
        return k.a1 + k.b1 * (x - xi) + k.c1 * std::exp(p * (x - xi)) + k.d1 * std::exp(-p * (x - xi));
    }
    if (x > xp1 && x <= xp2) {
        return k.b2 * ((x - xp2) - std::sinh(p * (x - xp2)) / p);
    }
    return 0.0;
}

}  // namespace expnls
