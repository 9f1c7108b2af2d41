#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "plumbline/field.hpp"
#include "plumbline/matrix.hpp"

namespace plumbline {

template <CoefficientField F>
double max_magnitude(const Matrix<F>& m)
{
    double s = 0.0;
    for (const auto& x : m.data()) s = std::max(s, FieldTraits<F>::magnitude(x));
    return s;
}

/// Every 2x2 minor vanishes, i.e. rank <= 1. Only minors through a
/// largest-magnitude pivot are formed; if those vanish every row is a multiple
/// of the pivot row. Float minors are compared against tol times the square of
/// the largest entry.
template <CoefficientField F>
bool all_2x2_minors_vanish(const Matrix<F>& m, double tol = kDefaultTolerance)
{
    std::size_t pr = 0, pc = 0;
    double scale = 0.0;
    bool found = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double x = FieldTraits<F>::magnitude(m(i, j));
            if (x > scale || (!found && !(m(i, j) == F(0)))) {
                scale = std::max(scale, x);
                pr = i;
                pc = j;
                found = true;
            }
        }
    if (!found) return true;
    const double minor_scale = scale * scale;
    const F& p = m(pr, pc);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == pr) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j == pc) continue;
            const F minor = m(i, j) * p - m(i, pc) * m(pr, j);
            if (!FieldTraits<F>::negligible(minor, minor_scale, tol)) return false;
        }
    }
    return true;
}

/// Rank of a list of row vectors by Gaussian elimination. Exact over Gaussian
/// rationals; partial pivoting with a relative threshold over floats.
template <CoefficientField F>
std::size_t rank(std::vector<std::vector<F>> rows, double tol = kDefaultTolerance)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    double scale = 0.0;
    for (const auto& r : rows)
        for (const auto& x : r) scale = std::max(scale, FieldTraits<F>::magnitude(x));

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        double best = 0.0;
        for (std::size_t k = r; k < rows.size(); ++k) {
            if (FieldTraits<F>::negligible(rows[k][c], scale, tol)) continue;
            if constexpr (FieldTraits<F>::exact) {
                pivot = k;
                break;
            } else {
                const double mag = std::abs(rows[k][c]);
                if (mag > best) {
                    best = mag;
                    pivot = k;
                }
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const F inv = F(1) / rows[r][c];
        for (std::size_t k = r + 1; k < rows.size(); ++k) {
            if (rows[k][c] == F(0)) continue;
            const F factor = rows[k][c] * inv;
            for (std::size_t j = c; j < cols; ++j) rows[k][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

template <CoefficientField F>
std::size_t rank(const Matrix<F>& m, double tol = kDefaultTolerance)
{
    std::vector<std::vector<F>> rows(m.rows(), std::vector<F>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rank(std::move(rows), tol);
}

} // namespace plumbline
