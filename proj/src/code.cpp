#include "sdkit/code.hpp"

#include "sdkit/errors.hpp"
#include "sdkit/par.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sdkit {

Monomial Monomial::identity(int n) {
    Monomial p;
    p.perm.resize(n);
    std::iota(p.perm.begin(), p.perm.end(), 0);
    p.sign.assign(n, 1);
    return p;
}

gf3::Vec Monomial::apply(const gf3::Vec& x) const {
    gf3::Vec y(x.size(), 0);
    for (size_t i = 0; i < x.size(); ++i) y[perm[i]] = gf3::mul(sign[i], x[i]);
    return y;
}

Monomial Monomial::then(const Monomial& second) const {
    Monomial out;
    const int m = n();
    out.perm.resize(m);
    out.sign.resize(m);
    for (int i = 0; i < m; ++i) {
        out.perm[i] = second.perm[perm[i]];
        out.sign[i] = gf3::mul(sign[i], second.sign[perm[i]]);
    }
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out;
    const int m = n();
    out.perm.resize(m);
    out.sign.resize(m);
    for (int i = 0; i < m; ++i) {
        out.perm[perm[i]] = i;
        out.sign[perm[i]] = gf3::inv(sign[i]);
    }
    return out;
}

int WeightDistribution::min_weight() const {
    for (int w = 1; w < int(counts.size()); ++w)
        if (counts[w] > 0) return w;
    return 0;
}

long long WeightDistribution::total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
}

TernaryCode TernaryCode::span(int n, gf3::Mat rows) {
    for (const auto& r : rows)
        if (int(r.size()) != n) throw ValidationError("generator row length mismatch");
    TernaryCode c;
    c.n_ = n;
    c.pivots_ = gf3::rref(rows);
    c.rows_ = std::move(rows);
    c.k_ = int(c.rows_.size());
    return c;
}

TernaryCode TernaryCode::from_generator_matrix(int n, gf3::Mat rows) {
    const int claimed = int(rows.size());
    TernaryCode c = span(n, std::move(rows));
    if (c.k_ != claimed)
        throw ValidationError("generator matrix is rank-deficient");
    return c;
}

bool TernaryCode::contains(const gf3::Vec& word) const {
    if (int(word.size()) != n_) return false;
    return gf3::is_zero(gf3::reduce_against(rows_, pivots_, word));
}

bool TernaryCode::operator<(const TernaryCode& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (k_ != o.k_) return k_ < o.k_;
    return rows_ < o.rows_;
}

TernaryCode TernaryCode::apply(const Monomial& p) const {
    gf3::Mat rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(p.apply(r));
    return span(n_, std::move(rows));
}

std::string TernaryCode::canonical_bytes() const {
    std::string s;
    s.reserve(size_t(k_) * n_ + 8);
    s += char(n_); s += char(n_ >> 8);
    s += char(k_); s += char(k_ >> 8);
    for (const auto& r : rows_)
        for (uint8_t x : r) s += char('0' + x);
    return s;
}

TernaryCode dual(const TernaryCode& code) {
    gf3::Mat basis = gf3::nullspace(code.genmat(), code.length());
    return TernaryCode::span(code.length(), std::move(basis));
}

bool is_self_dual(const TernaryCode& code) {
    if (code.length() != 2 * code.dimension()) return false;
    return dual(code) == code;
}

namespace {

long long pow3(int k) {
    long long p = 1;
    while (k--) p *= 3;
    return p;
}

void check_wenum_budget(const TernaryCode& code) {
    if (code.dimension() > kMaxWenumDim)
        throw BudgetError("weight enumeration limited to dimension <= " +
                          std::to_string(kMaxWenumDim));
}

// Enumerate messages in [lo, hi) in mixed-radix order, maintaining the
// codeword incrementally: a +1 step on digit j adds row j once, carries
// included (2 -> 0 is also one addition of row j, since 3*row = 0).
void wenum_range(const gf3::Mat& rows, int n, int k, long long lo, long long hi,
                 std::vector<long long>& beta) {
    std::vector<uint8_t> digits(k, 0);
    gf3::Vec word(n, 0);
    long long m = lo;
    for (int j = 0; j < k; ++j) {
        uint8_t d = uint8_t(m % 3);
        m /= 3;
        digits[j] = d;
        if (d) gf3::add_scaled(word, rows[j], d);
    }
    for (long long idx = lo; idx < hi; ++idx) {
        beta[gf3::weight(word)]++;
        if (idx + 1 == hi) break;
        for (int j = 0; j < k; ++j) {
            gf3::add_scaled(word, rows[j], 1);
            if (++digits[j] < 3) break;
            digits[j] = 0; // carry: keep adding the next row
        }
    }
}

} // namespace

WeightDistribution weight_distribution_serial(const TernaryCode& code) {
    check_wenum_budget(code);
    const int n = code.length(), k = code.dimension();
    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    const long long total = pow3(k);
    gf3::Vec msg(k, 0);
    for (long long m = 0; m < total; ++m) {
        long long t = m;
        for (int j = 0; j < k; ++j) { msg[j] = uint8_t(t % 3); t /= 3; }
        wd.counts[gf3::weight(gf3::encode(msg, code.genmat()))]++;
    }
    return wd;
}

WeightDistribution weight_distribution(const TernaryCode& code) {
    check_wenum_budget(code);
    const int n = code.length(), k = code.dimension();
    const long long total = pow3(k);
    const int nt = int(std::max<long long>(1, std::min<long long>(par::max_threads(), total)));
    std::vector<std::vector<long long>> partial(nt, std::vector<long long>(n + 1, 0));

#pragma omp parallel for num_threads(nt) schedule(static)
    for (int t = 0; t < nt; ++t) {
        const long long lo = total * t / nt;
        const long long hi = total * (t + 1) / nt;
        if (lo < hi) wenum_range(code.genmat(), n, k, lo, hi, partial[t]);
    }

    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    for (const auto& p : partial)
        for (int w = 0; w <= n; ++w) wd.counts[w] += p[w];
    return wd;
}

int minimum_weight(const TernaryCode& code) {
    return weight_distribution(code).min_weight();
}

bool is_extremal(const TernaryCode& code) {
    if (!is_self_dual(code))
        throw PreconditionError("is_extremal requires a self-dual code");
    const int bound = 3 * (code.length() / 12) + 3;
    return minimum_weight(code) == bound;
}

std::vector<CodeComponent> decompose(const TernaryCode& code) {
    const int n = code.length();
    // RREF rows of a decomposable code split along the finest partition,
    // so connected components of row supports are exactly the blocks.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    for (const auto& r : code.genmat()) {
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (!r[i]) continue;
            if (first < 0) first = i;
            else parent[find(i)] = find(first);
        }
    }
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);

    std::vector<CodeComponent> out;
    for (int root = 0; root < n; ++root) {
        if (groups[root].empty()) continue;
        const auto& supp = groups[root];
        std::vector<int> pos(n, -1);
        for (size_t j = 0; j < supp.size(); ++j) pos[supp[j]] = int(j);
        gf3::Mat rows;
        for (const auto& r : code.genmat()) {
            bool inside = false;
            for (int i : supp) if (r[i]) { inside = true; break; }
            if (!inside) continue;
            gf3::Vec rr(supp.size(), 0);
            for (int i : supp) rr[pos[i]] = r[i];
            rows.push_back(std::move(rr));
        }
        out.push_back({supp, TernaryCode::span(int(supp.size()), std::move(rows))});
    }
    return out;
}

TernaryCode direct_sum(const std::vector<TernaryCode>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.length();
    gf3::Mat rows;
    int off = 0;
    for (const auto& p : parts) {
        for (const auto& r : p.genmat()) {
            gf3::Vec rr(n, 0);
            std::copy(r.begin(), r.end(), rr.begin() + off);
            rows.push_back(std::move(rr));
        }
        off += p.length();
    }
    return TernaryCode::span(n, std::move(rows));
}

gf3::Mat codewords_of_weight(const TernaryCode& code, int w) {
    check_wenum_budget(code);
    const int k = code.dimension();
    const long long total = pow3(k);
    gf3::Mat out;
    gf3::Vec msg(k, 0);
    for (long long m = 0; m < total; ++m) {
        long long t = m;
        for (int j = 0; j < k; ++j) { msg[j] = uint8_t(t % 3); t /= 3; }
        gf3::Vec word = gf3::encode(msg, code.genmat());
        if (gf3::weight(word) == w) out.push_back(std::move(word));
    }
    std::sort(out.begin(), out.end());
    return out;
}

TernaryCode parse_code(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos || line[p] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("empty code file");
    std::istringstream hdr(line);
    int n = 0, k = 0;
    if (!(hdr >> n >> k) || n <= 0 || k < 0 || k > n)
        throw ParseError("bad code header, expected `n k`", lineno);
    gf3::Mat rows;
    for (int r = 0; r < k; ++r) {
        if (!next_line()) throw ParseError("expected " + std::to_string(k) + " code rows");
        std::string digits;
        for (char ch : line)
            if (!isspace(static_cast<unsigned char>(ch))) digits += ch;
        if (int(digits.size()) != n)
            throw ParseError("code row has wrong length", lineno);
        gf3::Vec row(n);
        for (int i = 0; i < n; ++i) {
            if (digits[i] < '0' || digits[i] > '2')
                throw ParseError(std::string("bad digit `") + digits[i] + "` in code row", lineno);
            row[i] = uint8_t(digits[i] - '0');
        }
        rows.push_back(std::move(row));
    }
    return TernaryCode::from_generator_matrix(n, std::move(rows));
}

TernaryCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file: " + path);
    return parse_code(in);
}

std::string format_code(const TernaryCode& code, const std::string& name) {
    std::ostringstream out;
    if (!name.empty()) out << "# name: " << name << "\n";
    out << code.length() << " " << code.dimension() << "\n";
    for (const auto& r : code.genmat()) {
        for (uint8_t x : r) out << char('0' + x);
        out << "\n";
    }
    return out.str();
}

void write_code_file(const TernaryCode& code, const std::string& path,
                     const std::string& name) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write code file: " + path);
    out << format_code(code, name);
}

} // namespace sdkit
