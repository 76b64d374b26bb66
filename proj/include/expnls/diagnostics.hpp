/**
 * @file diagnostics.hpp
 * @brief Error norm, conserved quantities and peak tracking
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "expnls/mesh_field.hpp"

namespace expnls {

using ExactSolution = std::function<Complex(double x, double t)>;

struct Peak {
    double position = 0.0;
    double height = 0.0;
};

/// Time series collected during a run.
struct DiagnosticsSeries {
    std::vector<double> times;
    std::vector<double> linf;  ///< empty when the problem has no exact solution
    std::vector<double> c1;
    std::vector<double> c2;
    std::vector<std::vector<Peak>> peaks;
};

/// Mass and energy-like invariants.
struct Invariants {
    double c1 = 0.0;  ///< integral of |U|^2
    double c2 = 0.0;  ///< integral of |U_x|^2 - (q/2)|U|^4
};

/// U at every knot.
inline std::vector<Complex> knot_values(const WaveState& state, const NodalWeights& w) {
    std::vector<Complex> out(static_cast<std::size_t>(state.intervals()) + 1);
    for (int m = 0; m <= state.intervals(); ++m) {
        out[static_cast<std::size_t>(m)] = sample_knot(state, m, w).value();
    }
    return out;
}

/// How the pointwise error of the maximum norm is formed.
enum class ErrorNorm {
    Complex,  ///< |U_exact - U|
    Modulus,  ///< ||U_exact| - |U||, insensitive to phase error
};

/// Maximum pointwise error over all knots at state.time().
inline double linf_error(const WaveState& state, const ExactSolution& exact, const Mesh& mesh,
                         const NodalWeights& w, ErrorNorm norm = ErrorNorm::Complex) {
    double err = 0.0;
    for (int m = 0; m <= mesh.intervals(); ++m) {
        const Complex u = sample_knot(state, m, w).value();
        const Complex ref = exact(mesh.knot(m), state.time());
        const double e = norm == ErrorNorm::Complex ? std::abs(ref - u) : std::abs(std::abs(ref) - std::abs(u));
        err = std::max(err, e);
    }
    return err;
}

/// Composite Simpson for an even number of intervals, trapezoid otherwise.
inline double integrate_samples(std::span<const double> f, double h) {
    if (f.size() < 2) {
        return 0.0;
    }
    const std::size_t intervals = f.size() - 1;
    if (intervals % 2 == 0) {
        double odd = 0.0;
        double even = 0.0;
        for (std::size_t i = 1; i < intervals; ++i) {
            (i % 2 == 1 ? odd : even) += f[i];
        }
        return h / 3.0 * (f.front() + 4.0 * odd + 2.0 * even + f.back());
    }
    double inner = 0.0;
    for (std::size_t i = 1; i < intervals; ++i) {
        inner += f[i];
    }
    return h * (0.5 * (f.front() + f.back()) + inner);
}

inline Invariants invariants(const WaveState& state, double q, const Mesh& mesh,
                             const NodalWeights& w) {
    const auto count = static_cast<std::size_t>(mesh.intervals()) + 1;
    std::vector<double> mass(count);
    std::vector<double> energy(count);
    for (int m = 0; m <= mesh.intervals(); ++m) {
        const NodalSample smp = sample_knot(state, m, w);
        const double u2 = smp.r * smp.r + smp.s * smp.s;
        const double ux2 = smp.rx * smp.rx + smp.sx * smp.sx;
        mass[static_cast<std::size_t>(m)] = u2;
        energy[static_cast<std::size_t>(m)] = ux2 - 0.5 * q * u2 * u2;
    }
    return {integrate_samples(mass, mesh.h()), integrate_samples(energy, mesh.h())};
}

/// Default peak threshold as a fraction of max|U|.
inline constexpr double kDefaultPeakFraction = 0.1;

/// Strict local maxima of |U| at interior knots with height >= threshold,
/// refined by a parabola through |U|^2 at the maximum and its neighbours.
inline std::vector<Peak> track_peaks(const WaveState& state, const Mesh& mesh,
                                     const NodalWeights& w, double threshold) {
    const std::vector<Complex> u = knot_values(state, w);
    std::vector<Peak> peaks;
    for (std::size_t m = 1; m + 1 < u.size(); ++m) {
        const double left = std::norm(u[m - 1]);
        const double mid = std::norm(u[m]);
        const double right = std::norm(u[m + 1]);
        if (!(mid > left && mid > right) || std::sqrt(mid) < threshold) {
            continue;
        }
        const double curvature = left - 2.0 * mid + right;  // < 0 at a strict maximum
        const double shift = 0.5 * (left - right) / curvature;
        const double top = mid - 0.25 * (left - right) * shift;
        peaks.push_back({mesh.knot(static_cast<int>(m)) + shift * mesh.h(), std::sqrt(top)});
    }
    return peaks;
}

/// track_peaks with threshold kDefaultPeakFraction * max|U|.
inline std::vector<Peak> track_peaks(const WaveState& state, const Mesh& mesh,
                                     const NodalWeights& w) {
    double top = 0.0;
    for (const Complex& v : knot_values(state, w)) {
        top = std::max(top, std::abs(v));
    }
    if (top == 0.0) {
        return {};
    }
    return track_peaks(state, mesh, w, kDefaultPeakFraction * top);
}

/// The peak with the largest height, if any.
inline std::optional<Peak> dominant_peak(const std::vector<Peak>& peaks) {
    const auto it = std::max_element(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        return a.height < b.height;
    });
    if (it == peaks.end()) {
        return std::nullopt;
    }
    return *it;
}

}  // namespace expnls
