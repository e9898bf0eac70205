#include "linalg.hpp"

#include <cmath>

namespace holopack {

namespace {

void check_square(const CMatrix& a) {
    require(!a.empty(), ErrorCode::InvalidArgument, "matrix is empty");
    for (const auto& row : a)
        require(row.size() == a.size(), ErrorCode::InvalidArgument, "matrix is not square");
}

double frobenius(const CMatrix& a) {
    double s = 0;
    for (const auto& row : a)
        for (const auto& v : row) s += std::norm(v);
    return std::sqrt(s);
}

} // namespace

cplx matrix_det(const CMatrix& a) {
    check_square(a);
    CMatrix m = a;
    std::size_t n = m.size();
    cplx det(1, 0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == cplx(0)) return cplx(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            cplx factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

CMatrix invert_matrix(const CMatrix& a) {
    check_square(a);
    std::size_t n = a.size();
    double scale = frobenius(a) / std::sqrt(static_cast<double>(n));
    double det_mag = std::abs(matrix_det(a));
    if (!(det_mag > 1e-12 * std::pow(scale, static_cast<double>(n))))
        fail(ErrorCode::SingularMatrix, "coefficient matrix fails the scaled regularity test");

    CMatrix m = a;
    CMatrix inv(n, std::vector<cplx>(n, cplx(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        cplx d = m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] /= d;
            inv[col][c] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            cplx factor = m[r][col];
            if (factor == cplx(0)) continue;
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= factor * m[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

std::vector<cplx> matrix_apply(const CMatrix& a, const std::vector<cplx>& v) {
    require(!a.empty() && a[0].size() == v.size(), ErrorCode::InvalidArgument, "matrix/vector size mismatch");
    std::vector<cplx> out(a.size(), cplx(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

} // namespace holopack
