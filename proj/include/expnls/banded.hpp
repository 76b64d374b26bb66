/**
 * @file banded.hpp
 * @brief General band matrix with LU factorization and partial pivoting
 *
 * Storage follows the LAPACK general-band layout: A(i, j) lives at
 * row kl + ku + i - j of column j in a (2 kl + ku + 1) x n array, the top
 * kl rows being workspace for fill-in created by row interchanges.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace expnls {

/// Raised when elimination meets an exactly zero pivot column.
class SingularMatrix : public std::runtime_error {
public:
    SingularMatrix(std::size_t column, const std::string& what)
        : std::runtime_error(what), column_(column) {}
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

class BandMatrix {
public:
    BandMatrix() = default;
    BandMatrix(std::size_t n, std::size_t kl, std::size_t ku)
        : n_(n), kl_(kl), ku_(ku), ld_(2 * kl + ku + 1), data_(ld_ * n, 0.0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t lower_bandwidth() const noexcept { return kl_; }
    [[nodiscard]] std::size_t upper_bandwidth() const noexcept { return ku_; }

    [[nodiscard]] bool in_band(std::size_t i, std::size_t j) const noexcept {
        return i < n_ && j < n_ && i <= j + kl_ && j <= i + ku_;
    }

    /// Entry A(i, j); zero outside the band.
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept {
        return in_band(i, j) ? data_[index(i, j)] : 0.0;
    }

    /// Mutable entry; (i, j) must lie inside the band.
    double& at(std::size_t i, std::size_t j) {
        if (!in_band(i, j)) {
            throw std::out_of_range("band matrix entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside the band");
        }
        return data_[index(i, j)];
    }

    void add(std::size_t i, std::size_t j, double v) { at(i, j) += v; }

    /// y = A x
    [[nodiscard]] std::vector<double> multiply(std::span<const double> x) const {
        std::vector<double> y(n_, 0.0);
        for (std::size_t j = 0; j < n_; ++j) {
            const std::size_t lo = j > ku_ ? j - ku_ : 0;
            const std::size_t hi = std::min(n_ - 1, j + kl_);
            for (std::size_t i = lo; i <= hi; ++i) {
                y[i] += data_[index(i, j)] * x[j];
            }
        }
        return y;
    }

    /// Number of diagonals that carry at least one nonzero entry.
    [[nodiscard]] std::size_t occupied_diagonals() const {
        std::size_t count = 0;
        for (std::ptrdiff_t d = -static_cast<std::ptrdiff_t>(kl_);
             d <= static_cast<std::ptrdiff_t>(ku_); ++d) {
            for (std::size_t i = 0; i < n_; ++i) {
                const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + d;
                if (j >= 0 && j < static_cast<std::ptrdiff_t>(n_) &&
                    (*this)(i, static_cast<std::size_t>(j)) != 0.0) {
                    ++count;
                    break;
                }
            }
        }
        return count;
    }

private:
    friend class BandLU;

    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const noexcept {
        return j * ld_ + (kl_ + ku_ + i - j);
    }
    // Row offset is relative to the top of the stored band, diagonal at kl + ku.
    [[nodiscard]] double& raw(std::size_t row, std::size_t j) noexcept { return data_[j * ld_ + row]; }
    [[nodiscard]] double raw(std::size_t row, std::size_t j) const noexcept { return data_[j * ld_ + row]; }

    std::size_t n_ = 0;
    std::size_t kl_ = 0;
    std::size_t ku_ = 0;
    std::size_t ld_ = 0;
    std::vector<double> data_;
};

/// Banded LU with partial pivoting (unblocked gbtf2 ordering).
class BandLU {
public:
    explicit BandLU(BandMatrix a) : lu_(std::move(a)), pivots_(lu_.n_, 0) { factorize(); }

    /// Solve A x = b; b is overwritten with x.
    void solve_in_place(std::span<double> b) const {
        const std::size_t n = lu_.n_;
        const std::size_t kl = lu_.kl_;
        const std::size_t kv = lu_.kl_ + lu_.ku_;
        const BandMatrix& lu = lu_;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const std::size_t km = std::min(kl, n - 1 - j);
            if (pivots_[j] != j) {
                std::swap(b[j], b[pivots_[j]]);
            }
            for (std::size_t i = 1; i <= km; ++i) {
                b[j + i] -= lu.raw(kv + i, j) * b[j];
            }
        }
        for (std::size_t j = n; j-- > 0;) {
            b[j] /= lu.raw(kv, j);
            const std::size_t reach = std::min(kv, j);
            for (std::size_t i = 1; i <= reach; ++i) {
                b[j - i] -= lu.raw(kv - i, j) * b[j];
            }
        }
    }

    [[nodiscard]] std::vector<double> solve(std::span<const double> b) const {
        std::vector<double> x(b.begin(), b.end());
        solve_in_place(x);
        return x;
    }

private:
    void factorize() {
        const std::size_t n = lu_.n_;
        const std::size_t kl = lu_.kl_;
        const std::size_t kv = lu_.kl_ + lu_.ku_;
        std::size_t ju = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t km = std::min(kl, n - 1 - j);
            std::size_t jp = 0;
            double best = std::abs(lu_.raw(kv, j));
            for (std::size_t i = 1; i <= km; ++i) {
                const double v = std::abs(lu_.raw(kv + i, j));
                if (v > best) {
                    best = v;
                    jp = i;
                }
            }
            pivots_[j] = j + jp;
            if (best == 0.0 || !std::isfinite(best)) {
                throw SingularMatrix(j, "band matrix is singular at column " + std::to_string(j));
            }
            ju = std::max(ju, std::min(j + lu_.ku_ + jp, n - 1));
            if (jp != 0) {
                for (std::size_t c = j; c <= ju; ++c) {
                    std::swap(lu_.raw(kv + jp - (c - j), c), lu_.raw(kv - (c - j), c));
                }
            }
            if (km > 0) {
                const double inv = 1.0 / lu_.raw(kv, j);
                for (std::size_t i = 1; i <= km; ++i) {
                    lu_.raw(kv + i, j) *= inv;
                }
                for (std::size_t c = j + 1; c <= ju; ++c) {
                    const double pivot_row = lu_.raw(kv - (c - j), c);
                    if (pivot_row == 0.0) {
                        continue;
                    }
                    for (std::size_t i = 1; i <= km; ++i) {
                        lu_.raw(kv + i - (c - j), c) -= lu_.raw(kv + i, j) * pivot_row;
                    }
                }
            }
        }
    }

    BandMatrix lu_;
    std::vector<std::size_t> pivots_;
};

}  // namespace expnls
