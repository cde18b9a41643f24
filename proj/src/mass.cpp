#include "sdkit/mass.hpp"

#include "sdkit/code_aut.hpp"
#include "sdkit/errors.hpp"

namespace sdkit {

mpz_class mass_number(int n) {
    if (n <= 0 || n % 4 != 0)
        throw PreconditionError("self-dual codes exist only for lengths = 0 mod 4");
    mpz_class out = 2;
    mpz_class p3 = 1;
    for (int i = 1; i <= (n - 2) / 2; ++i) {
        p3 *= 3;
        out *= p3 + 1;
    }
    return out;
}

MassReport mass_check(const std::vector<TernaryCode>& codes, int n) {
    MassReport rep;
    rep.n = n;
    rep.expected = mass_number(n);
    mpz_class numerator = 1;
    for (int i = 0; i < n; ++i) numerator *= 2;
    for (int i = 2; i <= n; ++i) numerator *= i;
    for (const auto& c : codes) {
        if (c.length() != n)
            throw PreconditionError("mass_check: code length mismatch");
        mpz_class aut = automorphism_group(c).order;
        mpq_class contrib(numerator, aut);
        contrib.canonicalize();
        rep.aut_orders.push_back(aut);
        rep.contributions.push_back(contrib);
        rep.total += contrib;
    }
    rep.pass = (rep.total == mpq_class(rep.expected));
    return rep;
}

mpq_class t_statistic(const std::vector<TernaryCode>& codes, int i) {
    mpq_class t = 0;
    for (const auto& c : codes) {
        WeightDistribution wd = weight_distribution(c);
        if (wd.at(3) != 2 * i) continue;
        if (decompose(c).size() > 1) continue;
        mpq_class term(1, automorphism_group(c).order);
        term.canonicalize();
        t += term;
    }
    return t;
}

} // namespace sdkit
