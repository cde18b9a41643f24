#ifndef SDKIT_MASS_HPP
#define SDKIT_MASS_HPP

#include "sdkit/code.hpp"

#include <gmpxx.h>

namespace sdkit {

// Number of distinct self-dual codes of length n:
//   N(n) = 2 * prod_{i=1}^{(n-2)/2} (3^i + 1),  n = 0 mod 4.
mpz_class mass_number(int n);

struct MassReport {
    int n = 0;
    mpz_class expected;                      // N(n)
    mpq_class total;                         // sum of 2^n n!/#Aut
    std::vector<mpq_class> contributions;    // per input code
    std::vector<mpz_class> aut_orders;
    bool pass = false;                       // total == expected
};

// Verifies sum over the (pairwise inequivalent, self-dual) codes of
// 2^n * n! / #Aut(C) against N(n).
MassReport mass_check(const std::vector<TernaryCode>& codes, int n);

// T_i = sum over the indecomposable codes with beta_3 = 2i of 1/#Aut(C).
mpq_class t_statistic(const std::vector<TernaryCode>& codes, int i);

} // namespace sdkit

#endif
