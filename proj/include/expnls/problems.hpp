/**
 * @file problems.hpp
 * @brief Test problems: single soliton, two-soliton collision, standing and
 *        mobile Maxwellian pulses and sech bound states
 */

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "expnls/diagnostics.hpp"
#include "expnls/mesh_field.hpp"

namespace expnls {

enum class ProblemKind { SingleSoliton, Collision, MaxwellianStanding, MaxwellianMobile, BoundState };

inline std::string_view to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::SingleSoliton:
            return "single_soliton";
        case ProblemKind::Collision:
            return "collision";
        case ProblemKind::MaxwellianStanding:
            return "maxwellian_standing";
        case ProblemKind::MaxwellianMobile:
            return "maxwellian_mobile";
        case ProblemKind::BoundState:
            return "bound_state";
    }
    return "unknown";
}

inline std::optional<ProblemKind> parse_problem_kind(std::string_view name) {
    for (const ProblemKind k : {ProblemKind::SingleSoliton, ProblemKind::Collision,
                                ProblemKind::MaxwellianStanding, ProblemKind::MaxwellianMobile,
                                ProblemKind::BoundState}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

/// Physical parameters of one problem. Fields not used by `kind` are ignored.
struct ProblemSpec {
    ProblemKind kind = ProblemKind::SingleSoliton;
    double q = 2.0;

    // single soliton
    double alpha = 1.0;
    double speed = 4.0;

    // collision: soliton j has amplitude alpha_j, speed S_j, centre x_j
    double alpha1 = 1.0;
    double speed1 = -4.0;
    double x1 = 10.0;
    double alpha2 = 1.0;
    double speed2 = 4.0;
    double x2 = -10.0;

    // Maxwellian amplitude
    double amplitude = 1.78;

    // bound state order, q = 2 M^2
    int order = 4;

    static ProblemSpec single_soliton(double q = 2.0, double alpha = 1.0, double speed = 4.0) {
        ProblemSpec p;
        p.kind = ProblemKind::SingleSoliton;
        p.q = q;
        p.alpha = alpha;
        p.speed = speed;
        return p;
    }

    static ProblemSpec collision() {
        ProblemSpec p;
        p.kind = ProblemKind::Collision;
        p.q = 2.0;
        return p;
    }

    static ProblemSpec maxwellian(bool mobile, double amplitude, double q = 2.0) {
        ProblemSpec p;
        p.kind = mobile ? ProblemKind::MaxwellianMobile : ProblemKind::MaxwellianStanding;
        p.amplitude = amplitude;
        p.q = q;
        return p;
    }

    static ProblemSpec bound_state(int order) {
        if (order < 1) {
            throw InvalidParameter("bound-state order M must be >= 1");
        }
        ProblemSpec p;
        p.kind = ProblemKind::BoundState;
        p.order = order;
        p.q = 2.0 * order * order;
        return p;
    }
};

/// Throws InvalidParameter if the spec is inconsistent.
inline void validate(const ProblemSpec& spec) {
    if (spec.kind == ProblemKind::SingleSoliton || spec.kind == ProblemKind::Collision) {
        if (!(spec.q > 0.0)) {
            throw InvalidParameter("soliton problems need q > 0");
        }
    }
    if (spec.kind == ProblemKind::BoundState) {
        if (spec.order < 1) {
            throw InvalidParameter("bound-state order M must be >= 1");
        }
        const double expected = 2.0 * spec.order * spec.order;
        if (std::abs(spec.q - expected) > 1e-12 * expected) {
            throw InvalidParameter("bound state requires q = 2 M^2 (M = " +
                                   std::to_string(spec.order) + " gives q = " +
                                   std::to_string(expected) + ")");
        }
    }
    if ((spec.kind == ProblemKind::MaxwellianStanding || spec.kind == ProblemKind::MaxwellianMobile) &&
        !(spec.amplitude >= 0.0)) {
        throw InvalidParameter("Maxwellian amplitude must be non-negative");
    }
}

/// alpha sqrt(2/q) exp(i(S x/2 - (S^2 - 4 alpha^2) t/4)) sech(alpha (x - S t)).
///
/// The time-phase rate is the Galilean boost of the standing soliton
/// alpha sqrt(2/q) sech(alpha x) exp(i alpha^2 t); the variant with
/// (S^2 - alpha^2)/4 that circulates in the literature is not a solution.
inline Complex exact_single_soliton(double x, double t, double alpha, double speed, double q) {
    if (!(q > 0.0)) {
        throw InvalidParameter("single soliton requires q > 0");
    }
    const double phase = 0.5 * speed * x - 0.25 * (speed * speed - 4.0 * alpha * alpha) * t;
    const double envelope = alpha * std::sqrt(2.0 / q) / std::cosh(alpha * (x - speed * t));
    return std::polar(envelope, phase);
}

namespace detail {

// One term of the collision initial condition and its derivative.
inline Complex moving_sech(double x, double alpha, double speed, double centre, double q) {
    const double xi = x - centre;
    return std::polar(alpha * std::sqrt(2.0 / q) / std::cosh(alpha * xi), 0.5 * speed * xi);
}

inline Complex moving_sech_slope(double x, double alpha, double speed, double centre, double q) {
    const double xi = x - centre;
    return moving_sech(x, alpha, speed, centre, q) *
           Complex(-alpha * std::tanh(alpha * xi), 0.5 * speed);
}

}  // namespace detail

inline Complex initial_condition(const ProblemSpec& spec, double x) {
    switch (spec.kind) {
        case ProblemKind::SingleSoliton:
            return exact_single_soliton(x, 0.0, spec.alpha, spec.speed, spec.q);
        case ProblemKind::Collision:
            return detail::moving_sech(x, spec.alpha1, spec.speed1, spec.x1, spec.q) +
                   detail::moving_sech(x, spec.alpha2, spec.speed2, spec.x2, spec.q);
        case ProblemKind::MaxwellianStanding:
            return {spec.amplitude * std::exp(-x * x), 0.0};
        case ProblemKind::MaxwellianMobile:
            return std::polar(spec.amplitude * std::exp(-x * x), 2.0 * x);
        case ProblemKind::BoundState:
            return {1.0 / std::cosh(x), 0.0};
    }
    return {};
}

/// d/dx of initial_condition.
inline Complex initial_derivative(const ProblemSpec& spec, double x) {
    switch (spec.kind) {
        case ProblemKind::SingleSoliton:
            return detail::moving_sech_slope(x, spec.alpha, spec.speed, 0.0, spec.q);
        case ProblemKind::Collision:
            return detail::moving_sech_slope(x, spec.alpha1, spec.speed1, spec.x1, spec.q) +
                   detail::moving_sech_slope(x, spec.alpha2, spec.speed2, spec.x2, spec.q);
        case ProblemKind::MaxwellianStanding:
            return initial_condition(spec, x) * (-2.0 * x);
        case ProblemKind::MaxwellianMobile:
            return initial_condition(spec, x) * Complex(-2.0 * x, 2.0);
        case ProblemKind::BoundState:
            return {-std::tanh(x) / std::cosh(x), 0.0};
    }
    return {};
}

/// Exact solution for problems that have one (the single soliton).
inline std::optional<ExactSolution> exact_solution(const ProblemSpec& spec) {
    if (spec.kind != ProblemKind::SingleSoliton) {
        return std::nullopt;
    }
    return ExactSolution([spec](double x, double t) {
        return exact_single_soliton(x, t, spec.alpha, spec.speed, spec.q);
    });
}

/// Closed-form C1, C2 of the Maxwellian initial data; empty otherwise.
inline std::optional<Invariants> analytic_invariants(const ProblemSpec& spec) {
    const double a2 = spec.amplitude * spec.amplitude;
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const double mass = a2 * std::sqrt(std::numbers::pi / 2.0);
    switch (spec.kind) {
        case ProblemKind::MaxwellianStanding:
            return Invariants{mass, 0.25 * a2 * (2.0 * std::numbers::sqrt2 - spec.q * a2) * sqrt_pi};
        case ProblemKind::MaxwellianMobile:
            return Invariants{mass, 5.0 * mass - 0.25 * sqrt_pi * spec.q * a2 * a2};
        default:
            return std::nullopt;
    }
}

/// Whether a Maxwellian of amplitude A has integral sqrt(pi) A >= pi and so
/// sheds a soliton. Compared as A >= sqrt(pi) so the boundary case is exact.
inline bool soliton_birth_threshold(double amplitude) {
    return amplitude >= std::sqrt(std::numbers::pi);
}

}  // namespace expnls
