#include "sdkit/named_codes.hpp"

#include "sdkit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sdkit {

namespace {

using Poly = std::vector<uint8_t>; // coefficients mod 3, index = degree

int degree(const Poly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[i]) return i;
    return -1;
}

Poly trim(Poly p) {
    p.resize(size_t(degree(p) + 1));
    return p;
}

// product modulo x^p - 1
Poly cyclic_mul(const Poly& a, const Poly& b, int p) {
    Poly out(p, 0);
    for (int i = 0; i < int(a.size()); ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < int(b.size()); ++j) {
            if (!b[j]) continue;
            int k = (i + j) % p;
            out[k] = gf3::add(out[k], gf3::mul(a[i], b[j]));
        }
    }
    return out;
}

Poly poly_mod(Poly a, const Poly& m) {
    const int dm = degree(m);
    const uint8_t lead_inv = gf3::inv(m[dm]);
    for (int i = degree(a); i >= dm; i = degree(a)) {
        uint8_t c = gf3::mul(a[i], lead_inv);
        for (int j = 0; j <= dm; ++j)
            a[i - dm + j] = gf3::sub(a[i - dm + j], gf3::mul(c, m[j]));
    }
    return trim(a);
}

Poly poly_gcd(Poly a, Poly b) {
    a = trim(a);
    b = trim(b);
    while (degree(b) >= 0) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // monic
    if (degree(a) >= 0) {
        uint8_t s = gf3::inv(a[degree(a)]);
        for (auto& c : a) c = gf3::mul(c, s);
    }
    return a;
}

std::vector<char> legendre_table(int p) {
    std::vector<char> chi(p, -1); // -1 nonresidue, 1 residue, 0 zero
    chi[0] = 0;
    for (int x = 1; x < p; ++x) chi[(x * x) % p] = 1;
    return chi;
}

// Cyclic code of length p generated by g(x), extended by the column
// c_inf = ext * (sum of coordinates).
TernaryCode extend_cyclic(const Poly& g, int p, uint8_t ext) {
    const int k = p - degree(g);
    gf3::Mat rows;
    for (int s = 0; s < k; ++s) {
        gf3::Vec row(p + 1, 0);
        unsigned total = 0;
        for (int j = 0; j <= degree(g); ++j) {
            row[(s + j) % p] = g[j];
            total += g[j];
        }
        row[p] = gf3::mul(ext, uint8_t(total % 3));
        rows.push_back(std::move(row));
    }
    return TernaryCode::from_generator_matrix(p + 1, std::move(rows));
}

} // namespace

TernaryCode e4_code() {
    return TernaryCode::from_generator_matrix(4, {{1, 0, 2, 1}, {0, 1, 2, 2}});
}

TernaryCode extended_qr_code(int p) {
    if (p % 12 != 11)
        throw PreconditionError("extended_qr_code expects a prime p = 11 mod 12");
    const auto chi = legendre_table(p);

    Poly xp1(p + 1, 0); // x^p - 1
    xp1[0] = 2;
    xp1[p] = 1;

    // Idempotents supported on {1} u residues u nonresidues pick out the
    // cyclic codes with the QR splitting; among the 27 candidate
    // coefficient triples keep the dimension-(p+1)/2 piece. The two
    // mirror choices give equivalent codes; take the first in scan order.
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                Poly e(p, 0);
                e[0] = uint8_t(a);
                for (int x = 1; x < p; ++x) e[x] = uint8_t(chi[x] == 1 ? b : c);
                if (cyclic_mul(e, e, p) != e) continue;
                Poly g = poly_gcd(Poly(e), xp1);
                if (p - degree(g) != (p + 1) / 2) continue;
                for (uint8_t ext : {uint8_t(1), uint8_t(2)}) {
                    TernaryCode cand = extend_cyclic(g, p, ext);
                    if (is_self_dual(cand)) return cand;
                }
            }
    throw Error("no self-dual extended QR code found for p=" + std::to_string(p));
}

TernaryCode pless_symmetry_code(int q) {
    if (q % 6 != 5)
        throw PreconditionError("pless_symmetry_code expects a prime q = 5 mod 6");
    const auto chi = legendre_table(q);
    const int m = q + 1;
    // B indexed by {inf} u GF(q); B[inf][inf] = 0, the border rows/cols
    // are constant, the core is the Legendre circulant chi(j - i). The
    // border signs are fixed by requiring self-duality.
    for (uint8_t s_row : {uint8_t(1), uint8_t(2)})
        for (uint8_t s_col : {uint8_t(1), uint8_t(2)}) {
            gf3::Mat rows;
            for (int i = 0; i < m; ++i) {
                gf3::Vec row(2 * m, 0);
                row[i] = 1;
                if (i == 0) { // inf row
                    for (int j = 1; j < m; ++j) row[m + j] = s_row;
                } else {
                    row[m] = s_col;
                    for (int j = 1; j < m; ++j) {
                        int d = ((j - 1) - (i - 1)) % q;
                        if (d < 0) d += q;
                        row[m + j] = uint8_t(chi[d] == 0 ? 0 : (chi[d] == 1 ? 1 : 2));
                    }
                }
                rows.push_back(std::move(row));
            }
            TernaryCode cand = TernaryCode::from_generator_matrix(2 * m, std::move(rows));
            if (is_self_dual(cand)) return cand;
        }
    throw Error("no self-dual Pless symmetry code found for q=" + std::to_string(q));
}

TernaryCode g11_p13_code() {
    static const char* g11[5] = {
        "10000201221", "01000210122", "00100221012", "00010222101", "00001212210",
    };
    static const char* p13[6] = {
        "1000002212001", "0100001012202", "0010002010221",
        "0001001022021", "0000101220201", "0000011210022",
    };
    static const char* glue = "000000111111101000001000";

    gf3::Mat rows;
    auto push = [&](const std::string& left, const std::string& right) {
        gf3::Vec row;
        for (char ch : left + right) row.push_back(uint8_t(ch - '0'));
        rows.push_back(std::move(row));
    };
    for (auto r : g11) push(r, std::string(13, '0'));
    for (auto r : p13) push(std::string(11, '0'), r);
    {
        gf3::Vec row;
        for (const char* p = glue; *p; ++p) row.push_back(uint8_t(*p - '0'));
        rows.push_back(std::move(row));
    }
    return TernaryCode::from_generator_matrix(24, std::move(rows));
}

std::vector<NamedCode> builtin_codes() {
    std::vector<NamedCode> out;
    out.push_back({"e4", e4_code()});
    out.push_back({"g12", g12_code()});
    out.push_back({"qr24", qr24_code()});
    out.push_back({"p24", p24_code()});
    out.push_back({"g11p13", g11_p13_code()});
    out.push_back({"e4^6", direct_sum(std::vector<TernaryCode>(6, e4_code()))});
    out.push_back({"g12+g12", direct_sum({g12_code(), g12_code()})});
    return out;
}

} // namespace sdkit
