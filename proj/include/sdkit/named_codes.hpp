#ifndef SDKIT_NAMED_CODES_HPP
#define SDKIT_NAMED_CODES_HPP

#include "sdkit/code.hpp"

namespace sdkit {

// The self-dual [4,2,3] code with generator rows 1021 / 0122.
TernaryCode e4_code();

// Extended ternary quadratic residue code of length p+1, built from the
// quadratic-residue idempotent of the cyclic code of length p and an
// overall-sum extension column. Valid for primes p = 11 mod 12; the
// result is self-dual. p=11 gives the extended Golay [12,6,6] code,
// p=23 gives the extremal [24,12,9] code.
TernaryCode extended_qr_code(int p);

inline TernaryCode g12_code() { return extended_qr_code(11); }
inline TernaryCode qr24_code() { return extended_qr_code(23); }

// Pless symmetry code of length 2(q+1) from the bordered Legendre-symbol
// circulant over GF(q). q=11 gives the second extremal [24,12,9] code.
TernaryCode pless_symmetry_code(int q);

inline TernaryCode p24_code() { return pless_symmetry_code(11); }

// The [24,12,6] code generated by an [11,5] block, a [13,6] block and a
// single glue row; its twisted even neighbor has root system A24.
TernaryCode g11_p13_code();

struct NamedCode {
    std::string name;
    TernaryCode code;
};
// e4, g12, qr24, p24, g11p13 and the length-24 composites used in tests.
std::vector<NamedCode> builtin_codes();

} // namespace sdkit

#endif
