#ifndef SDKIT_CODE_AUT_HPP
#define SDKIT_CODE_AUT_HPP

#include "sdkit/code.hpp"

#include <gmpxx.h>

#include <optional>

namespace sdkit {

struct AutGroupDescription {
    std::vector<Monomial> generators; // each fixes the code setwise
    mpz_class order;                  // exact
};

// Exact monomial automorphism group. Indecomposable codes run a
// backtrack over coordinate images pruned by codeword-support
// invariants, with a stabilizer chain on signed coordinates giving the
// order. Decomposable codes are handled blockwise: the group is the
// direct product of the block groups extended by permutations of equal
// blocks. Results are memoized on the canonical form.
AutGroupDescription automorphism_group(const TernaryCode& code);

// Witness monomial P with c1 * P = c2, or nullopt when the codes are
// definitively inequivalent. Invariant screens (weight distribution,
// coordinate/pair statistics, support intersection profile, group
// order) run before any search.
std::optional<Monomial> are_equivalent(const TernaryCode& c1, const TernaryCode& c2);

// Monomial-invariant fingerprint; equal codes have equal fingerprints,
// so a mismatch certifies inequivalence.
std::string invariant_fingerprint(const TernaryCode& code);

} // namespace sdkit

#endif
