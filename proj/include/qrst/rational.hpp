#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>

#include "qrst/errors.hpp"

namespace qrst {

/// Exact rational scalar. GMP supplies the arbitrary-precision arithmetic;
/// values are kept canonical (positive denominator, lowest terms).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/r", or "-p/r" with decimal integers.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail(errc::parse_error, "empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            fail(errc::parse_error, "bad rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) fail(errc::parse_error, "bad rational literal: " + s);
    if (r.get_den() == 0) fail(errc::division_by_zero, "rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

/// r^e for integer e of either sign.
inline Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    Rat base = r;
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert) {
        if (base == 0) fail(errc::pole_at_point, "0 raised to a negative power");
        base = Rat(1) / base;
    }
    Rat out;
    mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), k);
    return out;
}

inline Int int_factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

} // namespace qrst
