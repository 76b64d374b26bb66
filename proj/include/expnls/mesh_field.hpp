/**
 * @file mesh_field.hpp
 * @brief Uniform mesh, spline-coefficient state and field evaluation
 *
 * U = r + i s is represented as r = sum delta_j B_j, s = sum phi_j B_j with
 * j = -1..N+1. At a knot only three basis functions are nonzero, so nodal
 * values and derivatives are three-term combinations of the coefficients.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "expnls/spline_basis.hpp"

namespace expnls {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(double)>;

/// Uniform mesh a = x_0 < x_1 < ... < x_N = b.
class Mesh {
public:
    Mesh(double a, double b, int intervals) : a_(a), b_(b), n_(intervals) {
        if (!(a < b)) {
            throw InvalidParameter("mesh requires a < b");
        }
        if (intervals < 1) {
            throw InvalidParameter("mesh requires at least one interval");
        }
        h_ = (b - a) / static_cast<double>(intervals);
    }

    /// Mesh whose spacing is as close to h as an integer interval count allows.
    static Mesh with_spacing(double a, double b, double h) {
        if (!(h > 0.0)) {
            throw InvalidParameter("mesh spacing must be positive");
        }
        const double count = std::round((b - a) / h);
        return Mesh(a, b, static_cast<int>(std::max(1.0, count)));
    }

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] int intervals() const noexcept { return n_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] double knot(int i) const noexcept { return a_ + static_cast<double>(i) * h_; }

private:
    double a_;
    double b_;
    int n_;
    double h_ = 0.0;
};

/// Spline coefficients of r (delta) and s (phi) at one time level.
/// Storage index j+1 holds coefficient j, j = -1..N+1.
class WaveState {
public:
    WaveState() = default;
    explicit WaveState(int intervals, double t = 0.0)
        : t_(t),
          delta_(static_cast<std::size_t>(intervals) + 3, 0.0),
          phi_(static_cast<std::size_t>(intervals) + 3, 0.0) {}

    [[nodiscard]] int intervals() const noexcept { return static_cast<int>(delta_.size()) - 3; }
    [[nodiscard]] double time() const noexcept { return t_; }
    void set_time(double t) noexcept { t_ = t; }

    [[nodiscard]] double delta(int j) const { return delta_.at(static_cast<std::size_t>(j + 1)); }
    [[nodiscard]] double phi(int j) const { return phi_.at(static_cast<std::size_t>(j + 1)); }
    double& delta(int j) { return delta_.at(static_cast<std::size_t>(j + 1)); }
    double& phi(int j) { return phi_.at(static_cast<std::size_t>(j + 1)); }

    /// Raw coefficient arrays, index 0 is j = -1.
    [[nodiscard]] std::span<const double> delta_coefficients() const noexcept { return delta_; }
    [[nodiscard]] std::span<const double> phi_coefficients() const noexcept { return phi_; }

    friend bool operator==(const WaveState&, const WaveState&) = default;

private:
    double t_ = 0.0;
    std::vector<double> delta_;
    std::vector<double> phi_;
};

/// r, s and their first two x-derivatives at one knot.
struct NodalSample {
    double r = 0.0;
    double s = 0.0;
    double rx = 0.0;
    double sx = 0.0;
    double rxx = 0.0;
    double sxx = 0.0;

    [[nodiscard]] Complex value() const noexcept { return {r, s}; }
    [[nodiscard]] Complex slope() const noexcept { return {rx, sx}; }
};

inline NodalSample sample_knot(const WaveState& state, int m, const NodalWeights& w) {
    if (m < 0 || m > state.intervals()) {
        throw std::out_of_range("knot index " + std::to_string(m) + " outside 0.." +
                                std::to_string(state.intervals()));
    }
    const double dl = state.delta(m - 1);
    const double dc = state.delta(m);
    const double dr = state.delta(m + 1);
    const double fl = state.phi(m - 1);
    const double fc = state.phi(m);
    const double fr = state.phi(m + 1);
    NodalSample out;
    out.r = w.alpha1 * dl + w.alpha0 * dc + w.alpha1 * dr;
    out.s = w.alpha1 * fl + w.alpha0 * fc + w.alpha1 * fr;
    out.rx = w.beta1 * dl - w.beta1 * dr;
    out.sx = w.beta1 * fl - w.beta1 * fr;
    out.rxx = w.gamma1 * dl + w.gamma0 * dc + w.gamma1 * dr;
    out.sxx = w.gamma1 * fl + w.gamma0 * fc + w.gamma1 * fr;
    return out;
}

/// U (or U', U'') at an arbitrary point of [a, b].
inline Complex eval_field(const WaveState& state, double x, int order, const Mesh& mesh,
                          const SplineShape& sh) {
    if (x < mesh.a() || x > mesh.b()) {
        throw std::out_of_range("evaluation point " + std::to_string(x) + " outside the mesh");
    }
    int cell = static_cast<int>(std::floor((x - mesh.a()) / mesh.h()));
    cell = std::clamp(cell, 0, mesh.intervals() - 1);
    double re = 0.0;
    double im = 0.0;
    for (int j = cell - 1; j <= cell + 2; ++j) {
        const double bj = eval_basis(j, x, sh, mesh.a(), order);
        re += state.delta(j) * bj;
        im += state.phi(j) * bj;
    }
    return {re, im};
}

namespace detail {

/// Solve a tridiagonal system in place (Thomas algorithm, no pivoting).
/// lower[0] and upper[n-1] are ignored.
inline void solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                              std::vector<double> upper, std::span<double> rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0) {
            throw std::runtime_error("singular initial-fit system");
        }
        const double f = lower[i] / diag[i - 1];
        diag[i] -= f * upper[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    if (diag[n - 1] == 0.0) {
        throw std::runtime_error("singular initial-fit system");
    }
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

}  // namespace detail

/// Coefficients that interpolate f at every knot and match f' at both ends.
///
/// The two derivative rows give delta_{-1} = delta_1 + f'(a)/beta1 and
/// delta_{N+1} = delta_{N-1} - f'(b)/beta1; substituting them leaves a
/// tridiagonal system that is diagonally dominant since alpha1 <= 1/4.
inline WaveState fit_initial(const ComplexFn& f, const ComplexFn& fprime, const Mesh& mesh,
                             const SplineShape& sh) {
    const NodalWeights w = nodal_weights(sh);
    const int n = mesh.intervals();
    const auto size = static_cast<std::size_t>(n) + 1;

    std::vector<double> lower(size, w.alpha1);
    std::vector<double> diag(size, w.alpha0);
    std::vector<double> upper(size, w.alpha1);
    upper[0] = 2.0 * w.alpha1;
    lower[size - 1] = 2.0 * w.alpha1;

    std::vector<double> re(size);
    std::vector<double> im(size);
    for (int i = 0; i <= n; ++i) {
        const Complex v = f(mesh.knot(i));
        re[static_cast<std::size_t>(i)] = v.real();
        im[static_cast<std::size_t>(i)] = v.imag();
    }
    const Complex left_slope = fprime(mesh.a());
    const Complex right_slope = fprime(mesh.b());
    re.front() -= w.alpha1 * left_slope.real() / w.beta1;
    im.front() -= w.alpha1 * left_slope.imag() / w.beta1;
    re.back() += w.alpha1 * right_slope.real() / w.beta1;
    im.back() += w.alpha1 * right_slope.imag() / w.beta1;

    detail::solve_tridiagonal(lower, diag, upper, re);
    detail::solve_tridiagonal(lower, diag, upper, im);

    WaveState state(n, 0.0);
    for (int i = 0; i <= n; ++i) {
        state.delta(i) = re[static_cast<std::size_t>(i)];
        state.phi(i) = im[static_cast<std::size_t>(i)];
    }
    state.delta(-1) = state.delta(1) + left_slope.real() / w.beta1;
    state.phi(-1) = state.phi(1) + left_slope.imag() / w.beta1;
    state.delta(n + 1) = state.delta(n - 1) - right_slope.real() / w.beta1;
    state.phi(n + 1) = state.phi(n - 1) - right_slope.imag() / w.beta1;
    return state;
}

/// Which artificial boundary condition a closure relation expresses.
enum class BoundaryCondition { Value, Slope, Curvature };

/// Residual of the chosen boundary condition at x_0 (left) or x_N (right),
/// as a complex number (real part from delta, imaginary from phi).
inline Complex boundary_residual(const WaveState& state, bool left, BoundaryCondition bc,
                                 const NodalWeights& w) {
    const int m = left ? 0 : state.intervals();
    const NodalSample smp = sample_knot(state, m, w);
    switch (bc) {
        case BoundaryCondition::Value:
            return smp.value();
        case BoundaryCondition::Slope:
            return smp.slope();
        default:
            return {smp.rxx, smp.sxx};
    }
}

}  // namespace expnls
