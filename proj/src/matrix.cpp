#include "nashlift/matrix.hpp"

namespace nashlift {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Polynomial> matrix_minors(const PolyMatrix& m, std::size_t k, std::size_t ncols,
                                      const RingPtr& ring) {
    std::size_t nrows = m.size();
    if (k > nrows || k > ncols)
        throw Error(ErrorKind::Size, "minor size " + std::to_string(k) + " exceeds a " +
                                         std::to_string(nrows) + "x" + std::to_string(ncols) +
                                         " matrix");
    std::vector<Polynomial> out;
    if (k == 0) {
        out.push_back(Polynomial::constant(ring, 1));
        return out;
    }
    auto row_sets = subsets(nrows, k);
    auto col_sets = subsets(ncols, k);
    out.reserve(row_sets.size() * col_sets.size());
    for (const auto& rows : row_sets)
        for (const auto& cols : col_sets) out.push_back(determinant(submatrix(m, rows, cols)));
    return out;
}

std::size_t rank(Matrix<Rational> m) {
    std::size_t r = 0;
    std::size_t ncols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace nashlift
