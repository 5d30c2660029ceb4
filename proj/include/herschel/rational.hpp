#pragma once

#include <gmpxx.h>

namespace herschel {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// p/q in lowest terms; q must be nonzero.
inline Rational make_rational(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& p, const BigInt& q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// base^e by exact numerator/denominator powers; base must be canonical.
inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace herschel
