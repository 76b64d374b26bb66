#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "expnls/problems.hpp"

using namespace expnls;

namespace {

// Residual of iU_t + U_xx + q|U|^2 U by central differences.
double nls_residual(const ExactSolution& u, double x, double t, double q, double d) {
    const Complex ut = (u(x, t + d) - u(x, t - d)) / (2 * d);
    const Complex uxx = (u(x + d, t) - 2.0 * u(x, t) + u(x - d, t)) / (d * d);
    const Complex v = u(x, t);
    return std::abs(Complex(0, 1) * ut + uxx + q * std::norm(v) * v);
}

double wrap(double phase) {
    return std::remainder(phase, 2 * std::numbers::pi);
}

}  // namespace

TEST(ExactSoliton, Values) {
    EXPECT_NEAR(std::abs(exact_single_soliton(0, 0, 1, 4, 2) - Complex(1, 0)), 0.0, 1e-15);
    const Complex v = exact_single_soliton(4, 1, 1, 4, 2);
    EXPECT_NEAR(std::abs(v), 1.0, 1e-14);
    EXPECT_NEAR(wrap(std::arg(v) - (8.0 - 3.0)), 0.0, 1e-12);
    EXPECT_THROW(exact_single_soliton(0, 0, 1, 4, 0), InvalidParameter);
}

TEST(ExactSoliton, ModulusIdentity) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ux(-10, 10);
    std::uniform_real_distribution<double> ut(0, 3);
    for (int i = 0; i < 50; ++i) {
        const double x = ux(rng);
        const double t = ut(rng);
        EXPECT_NEAR(std::abs(exact_single_soliton(x, t, 1.5, 3, 4)),
                    std::sqrt(2.0 / 4.0) * 1.5 / std::cosh(1.5 * (x - 3 * t)), 1e-14);
    }
}

TEST(ExactSoliton, SolvesTheEquation) {
    const ProblemSpec spec = ProblemSpec::single_soliton(2.0, 1.0, 4.0);
    const ExactSolution u = *exact_solution(spec);
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> ux(-3, 7);
    for (int i = 0; i < 20; ++i) {
        const double x = ux(rng);
        const double coarse = nls_residual(u, x, 0.8, 2.0, 1e-2);
        const double fine = nls_residual(u, x, 0.8, 2.0, 5e-3);
        EXPECT_LT(fine, 1e-3);
        EXPECT_GT(coarse / fine, 3.0);  // second-order stencil, residual -> 0
    }
}

TEST(ExactSoliton, LiteratureVariantIsNotASolution) {
    const ExactSolution printed = [](double x, double t) {
        return std::polar(1.0 / std::cosh(x - 4 * t), 2.0 * x - 0.25 * (16.0 - 1.0) * t);
    };
    EXPECT_GT(nls_residual(printed, 4.0, 1.0, 2.0, 1e-3), 0.5);
}

TEST(InitialCondition, Examples) {
    EXPECT_EQ(initial_condition(ProblemSpec::maxwellian(false, 1.78), 0.0), Complex(1.78, 0.0));
    EXPECT_EQ(initial_condition(ProblemSpec::bound_state(4), 0.0), Complex(1.0, 0.0));
    const ProblemSpec col = ProblemSpec::collision();
    EXPECT_NEAR(std::abs(initial_condition(col, 10.0)), 1.0, 1e-8);
    EXPECT_NEAR(std::abs(initial_condition(col, -10.0)), 1.0, 1e-8);
}

TEST(InitialCondition, CollisionModulusIsEven) {
    const ProblemSpec col = ProblemSpec::collision();
    for (double x = 0.0; x < 30.0; x += 0.37) {
        EXPECT_NEAR(std::abs(initial_condition(col, x)), std::abs(initial_condition(col, -x)), 1e-14);
    }
}

TEST(InitialDerivative, Examples) {
    EXPECT_EQ(initial_derivative(ProblemSpec::maxwellian(false, 1.78), 0.0), Complex(0.0, 0.0));
    EXPECT_EQ(initial_derivative(ProblemSpec::bound_state(5), 0.0), Complex(0.0, 0.0));
    EXPECT_NEAR(std::abs(initial_derivative(ProblemSpec::single_soliton(), 0.0) - Complex(0, 2)), 0.0, 1e-15);
}

TEST(InitialDerivative, MatchesFiniteDifferences) {
    const std::array<ProblemSpec, 5> specs{ProblemSpec::single_soliton(), ProblemSpec::collision(),
                                           ProblemSpec::maxwellian(false, 1.78),
                                           ProblemSpec::maxwellian(true, 1.78), ProblemSpec::bound_state(4)};
    const double d = 1e-6;
    for (const ProblemSpec& spec : specs) {
        for (double x : {-11.3, -2.1, -0.4, 0.3, 1.7, 9.6}) {
            const Complex fd = (initial_condition(spec, x + d) - initial_condition(spec, x - d)) / (2 * d);
            EXPECT_LT(std::abs(initial_derivative(spec, x) - fd), 1e-8) << to_string(spec.kind) << ' ' << x;
        }
    }
}

TEST(AnalyticInvariants, Maxwellian) {
    const auto standing = analytic_invariants(ProblemSpec::maxwellian(false, 1.78));
    ASSERT_TRUE(standing.has_value());
    EXPECT_NEAR(standing->c1, 3.9710, 5e-5);
    EXPECT_NEAR(standing->c2, -4.9256, 5e-5);
    const auto mobile = analytic_invariants(ProblemSpec::maxwellian(true, 1.78));
    ASSERT_TRUE(mobile.has_value());
    EXPECT_NEAR(mobile->c1, 3.97100, 5e-6);
    EXPECT_NEAR(mobile->c2, 10.95838, 5e-5);
    EXPECT_FALSE(analytic_invariants(ProblemSpec::collision()).has_value());
}

TEST(SolitonBirth, Threshold) {
    EXPECT_FALSE(soliton_birth_threshold(1.0));
    EXPECT_TRUE(soliton_birth_threshold(1.78));
    EXPECT_TRUE(soliton_birth_threshold(std::sqrt(std::numbers::pi)));
    EXPECT_FALSE(soliton_birth_threshold(std::nextafter(std::sqrt(std::numbers::pi), 0.0)));
}

TEST(ProblemSpec, BoundStateMapping) {
    EXPECT_EQ(ProblemSpec::bound_state(4).q, 32.0);
    EXPECT_EQ(ProblemSpec::bound_state(5).q, 50.0);
    EXPECT_EQ(ProblemSpec::bound_state(6).q, 72.0);
    EXPECT_EQ(ProblemSpec::bound_state(7).q, 98.0);
    EXPECT_THROW(ProblemSpec::bound_state(0), InvalidParameter);
    ProblemSpec bad = ProblemSpec::bound_state(4);
    bad.q = 30.0;
    EXPECT_THROW(validate(bad), InvalidParameter);
    ProblemSpec neg = ProblemSpec::single_soliton();
    neg.q = -1.0;
    EXPECT_THROW(validate(neg), InvalidParameter);
}

TEST(ProblemKind, RoundTrip) {
    for (const ProblemKind k : {ProblemKind::SingleSoliton, ProblemKind::Collision, ProblemKind::MaxwellianStanding,
                                ProblemKind::MaxwellianMobile, ProblemKind::BoundState}) {
        EXPECT_EQ(parse_problem_kind(to_string(k)), k);
    }
    EXPECT_FALSE(parse_problem_kind("breather").has_value());
}
