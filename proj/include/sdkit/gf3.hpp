#ifndef SDKIT_GF3_HPP
#define SDKIT_GF3_HPP

#include <cstdint>
#include <vector>

// Arithmetic and row reduction over GF(3). Elements are stored as
// uint8_t values in {0,1,2}.

namespace sdkit::gf3 {

using Vec = std::vector<uint8_t>;
using Mat = std::vector<Vec>;

inline uint8_t add(uint8_t a, uint8_t b) { return uint8_t((a + b) % 3); }
inline uint8_t sub(uint8_t a, uint8_t b) { return uint8_t((a + 3 - b) % 3); }
inline uint8_t mul(uint8_t a, uint8_t b) { return uint8_t((a * b) % 3); }
inline uint8_t neg(uint8_t a) { return uint8_t((3 - a) % 3); }
// 1 and 2 are their own inverses.
inline uint8_t inv(uint8_t a) { return a; }

inline void add_scaled(Vec& dst, const Vec& src, uint8_t c) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] = add(dst[i], mul(c, src[i]));
}

inline uint8_t dot(const Vec& a, const Vec& b) {
    unsigned s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += unsigned(a[i]) * b[i];
    return uint8_t(s % 3);
}

inline int weight(const Vec& v) {
    int w = 0;
    for (uint8_t x : v) w += (x != 0);
    return w;
}

inline bool is_zero(const Vec& v) {
    for (uint8_t x : v) if (x) return false;
    return true;
}

// In-place reduced row echelon form; returns the pivot columns.
// Zero rows are removed, so the result has exactly rank(m) rows.
std::vector<int> rref(Mat& m);

// Reduce v against rows already in RREF (pivots as returned by rref).
// The result is zero iff v lies in the row space.
Vec reduce_against(const Mat& rows, const std::vector<int>& pivots, Vec v);

// Basis of the right null space { x : rows * x^T = 0 }, returned in RREF.
Mat nullspace(const Mat& rows, int n);

// message * genmat
Vec encode(const Vec& message, const Mat& genmat);

} // namespace sdkit::gf3

#endif
