#ifndef SDKIT_CODE_HPP
#define SDKIT_CODE_HPP

#include "sdkit/gf3.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdkit {

// Signed permutation of codeword coordinates. Coordinate i is sent to
// position perm[i] and scaled by sign[i] (a unit of GF(3), so 1 or 2):
//   y[perm[i]] = sign[i] * x[i].
struct Monomial {
    std::vector<int> perm;
    std::vector<uint8_t> sign;

    static Monomial identity(int n);
    int n() const { return int(perm.size()); }
    gf3::Vec apply(const gf3::Vec& x) const;
    Monomial then(const Monomial& second) const; // this, then second
    Monomial inverse() const;
    bool operator==(const Monomial&) const = default;
};

struct WeightDistribution {
    std::vector<long long> counts; // counts[w] = codewords of weight w

    long long at(int w) const { return w < int(counts.size()) ? counts[w] : 0; }
    int min_weight() const;       // least w > 0 with counts[w] > 0; 0 for the zero code
    long long total() const;
    bool operator==(const WeightDistribution&) const = default;
};

// A linear code over GF(3), stored canonically: generator matrix in
// reduced row echelon form with pivot columns recorded. Two equal codes
// (as codeword sets) compare equal.
class TernaryCode {
public:
    TernaryCode() = default;

    // Span of arbitrary rows (dependent rows allowed; rank is recomputed).
    static TernaryCode span(int n, gf3::Mat rows);
    // Requires the rows to be independent (rank == rows.size()).
    static TernaryCode from_generator_matrix(int n, gf3::Mat rows);

    int length() const { return n_; }
    int dimension() const { return k_; }
    const gf3::Mat& genmat() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const gf3::Vec& word) const;
    bool operator==(const TernaryCode&) const = default;
    bool operator<(const TernaryCode& o) const;

    TernaryCode apply(const Monomial& p) const;

    // Stable byte serialization of the canonical form (cache keys).
    std::string canonical_bytes() const;

private:
    int n_ = 0, k_ = 0;
    gf3::Mat rows_;
    std::vector<int> pivots_;
};

TernaryCode dual(const TernaryCode& code);
bool is_self_dual(const TernaryCode& code);

// Exact weight enumeration over all 3^k codewords. Dimensions above
// kMaxWenumDim are rejected with BudgetError.
inline constexpr int kMaxWenumDim = 16;
WeightDistribution weight_distribution(const TernaryCode& code);
// Reference implementation: one independent matrix-vector product per
// codeword. Kept for testing the incremental parallel kernel against.
WeightDistribution weight_distribution_serial(const TernaryCode& code);

int minimum_weight(const TernaryCode& code);

// d == 3*floor(n/12) + 3. Rejects non-self-dual input.
bool is_extremal(const TernaryCode& code);

// Finest coordinate partition with the code a direct sum of the parts.
struct CodeComponent {
    std::vector<int> support;   // sorted coordinates of this block
    TernaryCode code;           // component code on its own coordinates
};
std::vector<CodeComponent> decompose(const TernaryCode& code);

// Direct sum on disjoint coordinate blocks, in argument order.
TernaryCode direct_sum(const std::vector<TernaryCode>& parts);

// All codewords of a given weight (each with its negative).
gf3::Mat codewords_of_weight(const TernaryCode& code, int w);

// --- file format: line `n k`, then k rows of digits; '#' comments ---
TernaryCode parse_code(std::istream& in);
TernaryCode read_code_file(const std::string& path);
std::string format_code(const TernaryCode& code, const std::string& name = "");
void write_code_file(const TernaryCode& code, const std::string& path,
                     const std::string& name = "");

} // namespace sdkit

#endif
