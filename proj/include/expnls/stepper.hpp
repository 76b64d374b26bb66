/**
 * @file stepper.hpp
 * @brief Linearized Crank-Nicolson step for the split NLS system
 *
 * With U = r + i s the equation iU_t + U_xx + q|U|^2 U = 0 becomes
 *
 *   s_t - r_xx - q (r^2 + s^2) r = 0,
 *   r_t + s_xx + q (r^2 + s^2) s = 0.
 *
 * Each equation is collocated at every knot with Crank-Nicolson averaging;
 * the cubic terms at the new level are replaced by their first-order
 * Taylor expansion about the old level, e.g.
 * (r^3)^{n+1} ~ 3 (r^n)^2 r^{n+1} - 2 (r^n)^3, giving one banded linear
 * solve per step.
 *
 * Unknowns are ordered delta_0, phi_0, delta_1, phi_1, ..., so the system
 * has three sub- and three super-diagonals. The exterior coefficients
 * delta_{-1}, delta_{N+1} (and the phi counterparts) are eliminated through
 * r(x_0) = r(x_N) = 0, s(x_0) = s(x_N) = 0.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "expnls/banded.hpp"
#include "expnls/mesh_field.hpp"
#include "expnls/spline_basis.hpp"

namespace expnls {

/// Multipliers of one node's two collocation equations, indexed by the
/// coefficient offset k + 1 for k in {-1, 0, +1}.
///
/// Equation A comes from the s_t equation, equation B from the r_t one.
/// lhs_* multiply level n+1 coefficients, rhs_* level n coefficients.
struct SchemeCoefficients {
    using Row = std::array<double, 3>;
    Row lhs_a_delta{};
    Row lhs_a_phi{};
    Row rhs_a_delta{};
    Row rhs_a_phi{};
    Row lhs_b_delta{};
    Row lhs_b_phi{};
    Row rhs_b_delta{};
    Row rhs_b_phi{};
};

/// Node multipliers frozen at the level-n values r, s of the sample.
inline SchemeCoefficients linearize(const NodalSample& sample, double q, double dt,
                                    const NodalWeights& w) {
    const double r = sample.r;
    const double s = sample.s;
    const double rs = r * s;
    const std::array<double, 3> alpha{w.alpha1, w.alpha0, w.alpha1};
    const std::array<double, 3> gamma{w.gamma1, w.gamma0, w.gamma1};

    SchemeCoefficients k;
    for (std::size_t i = 0; i < 3; ++i) {
        const double a = alpha[i];
        const double g = gamma[i];
        k.lhs_a_delta[i] = -dt * (q * (3.0 * r * r + s * s) * a + g);
        k.lhs_a_phi[i] = (2.0 - 2.0 * dt * q * rs) * a;
        k.rhs_a_delta[i] = dt * g - dt * q * r * r * a;
        k.rhs_a_phi[i] = (2.0 - dt * q * rs) * a;

        k.lhs_b_delta[i] = (2.0 + 2.0 * dt * q * rs) * a;
        k.lhs_b_phi[i] = dt * (q * (r * r + 3.0 * s * s) * a + g);
        k.rhs_b_delta[i] = (2.0 + dt * q * rs) * a;
        k.rhs_b_phi[i] = dt * q * s * s * a - dt * g;
    }
    return k;
}

/// The banded system of one step together with its right-hand side.
struct StepSystem {
    BandMatrix matrix;
    std::vector<double> rhs;

    [[nodiscard]] std::size_t dimension() const noexcept { return rhs.size(); }
};

/// Raised when a step cannot be completed; node() is the mesh node at which
/// elimination broke down (or -1 if the failure is not node-specific).
class StepFailure : public std::runtime_error {
public:
    StepFailure(int node, const std::string& what) : std::runtime_error(what), node_(node) {}
    [[nodiscard]] int node() const noexcept { return node_; }

private:
    int node_;
};

namespace detail {

inline constexpr std::size_t kStepBandwidth = 3;

/// Express coefficient j (-1..N+1) as a combination of interior ones and
/// call sink(column, factor) for each term. Exterior coefficients follow the
/// value closure c_{-1} = -c_0/alpha1 - c_1, c_{N+1} = -c_N/alpha1 - c_{N-1}.
template <typename Sink>
void scatter(int j, int n, double alpha1, Sink&& sink) {
    if (j < 0) {
        sink(0, -1.0 / alpha1);
        sink(1, -1.0);
    } else if (j > n) {
        sink(n, -1.0 / alpha1);
        sink(n - 1, -1.0);
    } else {
        sink(j, 1.0);
    }
}

}  // namespace detail

/// Build rows 2m (equation A) and 2m+1 (equation B) for every node m.
/// The right-hand side is formed from the interior level-n coefficients
/// with the same closure, so a state violating closure is projected onto it.
inline StepSystem assemble(const WaveState& state, double q, double dt, const NodalWeights& w) {
    const int n = state.intervals();
    if (n < 2) {
        throw InvalidParameter("stepping needs at least two mesh intervals");
    }
    const auto dim = 2 * (static_cast<std::size_t>(n) + 1);
    StepSystem sys{BandMatrix(dim, detail::kStepBandwidth, detail::kStepBandwidth),
                   std::vector<double>(dim, 0.0)};

    for (int m = 0; m <= n; ++m) {
        const SchemeCoefficients k = linearize(sample_knot(state, m, w), q, dt, w);
        const auto row_a = 2 * static_cast<std::size_t>(m);
        const auto row_b = row_a + 1;
        double rhs_a = 0.0;
        double rhs_b = 0.0;
        for (int off = -1; off <= 1; ++off) {
            const auto i = static_cast<std::size_t>(off + 1);
            const int j = m + off;
            detail::scatter(j, n, w.alpha1, [&](int col, double f) {
                const auto dc = 2 * static_cast<std::size_t>(col);
                sys.matrix.add(row_a, dc, f * k.lhs_a_delta[i]);
                sys.matrix.add(row_a, dc + 1, f * k.lhs_a_phi[i]);
                sys.matrix.add(row_b, dc, f * k.lhs_b_delta[i]);
                sys.matrix.add(row_b, dc + 1, f * k.lhs_b_phi[i]);
                rhs_a += f * (k.rhs_a_delta[i] * state.delta(col) + k.rhs_a_phi[i] * state.phi(col));
                rhs_b += f * (k.rhs_b_delta[i] * state.delta(col) + k.rhs_b_phi[i] * state.phi(col));
            });
        }
        sys.rhs[row_a] = rhs_a;
        sys.rhs[row_b] = rhs_b;
    }
    return sys;
}

/// Relative residual bound accepted from the banded solve.
inline constexpr double kSolveResidualTolerance = 1e-9;

/// Solve the step system; returns the interleaved interior coefficients.
inline std::vector<double> solve_step(const StepSystem& sys) {
    std::vector<double> x;
    try {
        const BandLU lu(sys.matrix);
        x = lu.solve(sys.rhs);
    } catch (const SingularMatrix& e) {
        throw StepFailure(static_cast<int>(e.column() / 2),
                          "step matrix singular at node " + std::to_string(e.column() / 2));
    }
    const std::vector<double> ax = sys.matrix.multiply(x);
    double res = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i])) {
            throw StepFailure(static_cast<int>(i / 2), "non-finite coefficient at node " +
                                                           std::to_string(i / 2));
        }
        res = std::max(res, std::abs(ax[i] - sys.rhs[i]));
        scale = std::max(scale, std::abs(sys.rhs[i]));
    }
    if (res > kSolveResidualTolerance * scale) {
        throw StepFailure(-1, "banded solve residual " + std::to_string(res) +
                                  " exceeds tolerance relative to " + std::to_string(scale));
    }
    return x;
}

/// Fill exterior coefficients from the value closure r = s = 0 at both ends.
inline void apply_value_closure(WaveState& state, const NodalWeights& w) {
    const int n = state.intervals();
    state.delta(-1) = -state.delta(0) / w.alpha1 - state.delta(1);
    state.phi(-1) = -state.phi(0) / w.alpha1 - state.phi(1);
    state.delta(n + 1) = -state.delta(n) / w.alpha1 - state.delta(n - 1);
    state.phi(n + 1) = -state.phi(n) / w.alpha1 - state.phi(n - 1);
}

/// Advance the state by dt.
inline WaveState step(const WaveState& state, double q, double dt, const NodalWeights& w) {
    if (!(dt > 0.0)) {
        throw InvalidParameter("time step must be positive");
    }
    const StepSystem sys = assemble(state, q, dt, w);
    const std::vector<double> x = solve_step(sys);
    const int n = state.intervals();
    WaveState next(n, state.time() + dt);
    for (int m = 0; m <= n; ++m) {
        next.delta(m) = x[2 * static_cast<std::size_t>(m)];
        next.phi(m) = x[2 * static_cast<std::size_t>(m) + 1];
    }
    apply_value_closure(next, w);
    return next;
}

}  // namespace expnls
