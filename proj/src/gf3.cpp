#include "sdkit/gf3.hpp"

#include <algorithm>

namespace sdkit::gf3 {

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int ncols = int(m[0].size());
    int row = 0;
    for (int col = 0; col < ncols && row < int(m.size()); ++col) {
        int sel = -1;
        for (int r = row; r < int(m.size()); ++r)
            if (m[r][col]) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        const uint8_t piv_inv = inv(m[row][col]);
        if (piv_inv != 1)
            for (auto& x : m[row]) x = mul(x, piv_inv);
        for (int r = 0; r < int(m.size()); ++r) {
            if (r == row || m[r][col] == 0) continue;
            add_scaled(m[r], m[row], neg(m[r][col]));
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

Vec reduce_against(const Mat& rows, const std::vector<int>& pivots, Vec v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        const uint8_t c = v[pivots[r]];
        if (c) add_scaled(v, rows[r], neg(c));
    }
    return v;
}

Mat nullspace(const Mat& rows, int n) {
    Mat m = rows;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;

    Mat basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec x(n, 0);
        x[free_col] = 1;
        for (size_t r = 0; r < m.size(); ++r)
            x[pivots[r]] = neg(m[r][free_col]);
        basis.push_back(std::move(x));
    }
    rref(basis);
    return basis;
}

Vec encode(const Vec& message, const Mat& genmat) {
    Vec out(genmat.empty() ? 0 : genmat[0].size(), 0);
    for (size_t i = 0; i < message.size(); ++i)
        if (message[i]) add_scaled(out, genmat[i], message[i]);
    return out;
}

} // namespace sdkit::gf3
