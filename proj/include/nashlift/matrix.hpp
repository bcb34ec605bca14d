#ifndef NASHLIFT_MATRIX_HPP
#define NASHLIFT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "nashlift/polynomial.hpp"

namespace nashlift {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

using PolyMatrix = Matrix<Polynomial>;

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

namespace detail {

template <typename T>
T laplace(const Matrix<T>& m, std::size_t row, std::vector<std::size_t>& cols) {
    if (cols.size() == 1) return m[row][cols[0]];
    if (cols.size() == 2)
        return m[row][cols[0]] * m[row + 1][cols[1]] - m[row][cols[1]] * m[row + 1][cols[0]];
    T acc{};
    bool have = false;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const T& entry = m[row][cols[j]];
        if (is_zero(entry)) continue;
        std::size_t c = cols[j];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
        T sub = laplace(m, row + 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), c);
        if (is_zero(sub)) continue;
        T prod = entry * sub;
        if (!have) {
            acc = (j % 2 == 0) ? prod : -prod;
            have = true;
        } else if (j % 2 == 0) {
            acc += prod;
        } else {
            acc -= prod;
        }
    }
    if (!have) return m[row][cols[0]] - m[row][cols[0]];
    return acc;
}

} // namespace detail

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Determinant by cofactor expansion along the first row. `m` must be square
/// and nonempty; the sizes used here never exceed a handful of rows.
template <typename T>
T determinant(const Matrix<T>& m) {
    if (m.empty() || m.size() != m.front().size())
        throw Error(ErrorKind::Size, "determinant of a non-square matrix");
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return detail::laplace(m, 0, cols);
}

template <typename T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    Matrix<T> out;
    out.reserve(rows.size());
    for (auto r : rows) {
        std::vector<T> row;
        row.reserve(cols.size());
        for (auto c : cols) row.push_back(m[r][c]);
        out.push_back(std::move(row));
    }
    return out;
}

/// All k x k minors, enumerated by row subset, then column subset, both in
/// lexicographic order. `ncols` is needed for matrices with no rows.
std::vector<Polynomial> matrix_minors(const PolyMatrix& m, std::size_t k, std::size_t ncols,
                                      const RingPtr& ring);

/// Rank of a rational matrix by fraction-free elimination.
std::size_t rank(Matrix<Rational> m);

} // namespace nashlift

#endif
