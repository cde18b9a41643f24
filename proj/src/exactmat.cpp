#include "sdkit/exactmat.hpp"

#include "sdkit/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace sdkit {

ZMat to_zmat(const IMat& m) {
    ZMat z(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        z[i].reserve(m[i].size());
        for (Int v : m[i]) z[i].emplace_back(static_cast<long>(v));
    }
    return z;
}

IMat to_imat(const ZMat& m) {
    IMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const mpz_class& v : m[i]) {
            if (!v.fits_slong_p())
                throw ValidationError("matrix entry exceeds int64 range");
            out[i].push_back(Int(v.get_si()));
        }
    }
    return out;
}

ZMat hnf(ZMat m) {
    if (m.empty()) return m;
    const int ncols = int(m[0].size());
    int row = 0;
    for (int col = 0; col < ncols && row < int(m.size()); ++col) {
        // Clear the column below `row` with Euclidean row combinations.
        while (true) {
            int piv = -1;
            for (int r = row; r < int(m.size()); ++r)
                if (m[r][col] != 0 && (piv < 0 || abs(m[r][col]) < abs(m[piv][col])))
                    piv = r;
            if (piv < 0) break;
            std::swap(m[row], m[piv]);
            bool cleared = true;
            for (int r = row + 1; r < int(m.size()); ++r) {
                if (m[r][col] == 0) continue;
                mpz_class q = m[r][col] / m[row][col]; // truncated division
                if (q != 0)
                    for (int c = 0; c < ncols; ++c) m[r][c] -= q * m[row][c];
                if (m[r][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0)
            for (int c = 0; c < ncols; ++c) m[row][c] = -m[row][c];
        // Reduce the entries above the pivot into [0, pivot).
        for (int r = 0; r < row; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[row][col].get_mpz_t());
            if (q != 0)
                for (int c = 0; c < ncols; ++c) m[r][c] -= q * m[row][c];
        }
        ++row;
    }
    m.resize(row);
    return m;
}

int rank_of(const ZMat& m) {
    return int(hnf(m).size());
}

mpz_class det(const ZMat& m_in) {
    ZMat m = m_in;
    const int n = int(m.size());
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int sel = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { sel = r; break; }
            if (sel < 0) return 0;
            std::swap(m[k], m[sel]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

bool positive_definite_symmetric(const ZMat& m_in) {
    // Bareiss pivots m[k][k] are the leading principal minors (up to the
    // telescoping divisor), all positive iff the matrix is PD.
    ZMat m = m_in;
    const int n = int(m.size());
    mpz_class prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return true;
}

QMat q_inverse(const QMat& m_in) {
    const int n = int(m_in.size());
    QMat a = m_in;
    QMat inv(n, QVec(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw ValidationError("singular matrix in q_inverse");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        mpq_class d = a[col][col];
        for (int c = 0; c < n; ++c) { a[col][c] /= d; inv[col][c] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

ZMat z_mul(const ZMat& a, const ZMat& b) {
    const int r = int(a.size());
    const int n = r ? int(a[0].size()) : 0;
    const int c = b.empty() ? 0 : int(b[0].size());
    ZMat out(r, ZVec(c, 0));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

ZMat z_transpose(const ZMat& m) {
    if (m.empty()) return m;
    ZMat t(m[0].size(), ZVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

QMat solve_left(const ZMat& a, const ZMat& b) {
    const int n = int(a.size());
    QMat aq(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) aq[i][j] = a[i][j];
    QMat ainv = q_inverse(aq);
    QMat out(b.size(), QVec(n, 0));
    for (size_t i = 0; i < b.size(); ++i)
        for (int k = 0; k < n; ++k) {
            if (b[i][k] == 0) continue;
            mpq_class f = b[i][k];
            for (int j = 0; j < n; ++j) out[i][j] += f * ainv[k][j];
        }
    return out;
}

bool is_integral(const QMat& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (v.get_den() != 1) return false;
    return true;
}

ZMat q_to_z(const QMat& m) {
    ZMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const auto& v : m[i]) {
            if (v.get_den() != 1) throw ValidationError("expected integral matrix");
            out[i].push_back(v.get_num());
        }
    }
    return out;
}

} // namespace sdkit
