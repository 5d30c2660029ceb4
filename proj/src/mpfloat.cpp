#include "herschel/mpfloat.hpp"

#include <algorithm>

namespace herschel::mp {

namespace {

// |z| into out, computed at out's precision.
void complex_abs(mpfr_ptr out, const Complex& z) {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(out));
    mpfr_sqr(out, z.re.raw(), MPFR_RNDN);
    mpfr_sqr(t, z.im.raw(), MPFR_RNDN);
    mpfr_add(out, out, t, MPFR_RNDN);
    mpfr_sqrt(out, out, MPFR_RNDN);
    mpfr_clear(t);
}

}  // namespace

double relative_difference(const Complex& a, const Complex& b, double floor) {
    mpfr_prec_t prec = std::max(a.re.precision(), b.re.precision());
    Complex diff(prec);
    mpfr_sub(diff.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_sub(diff.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);

    mpfr_t num, den;
    mpfr_init2(num, prec);
    mpfr_init2(den, prec);
    complex_abs(num, diff);
    complex_abs(den, b);
    if (mpfr_cmp_d(den, floor) < 0) mpfr_set_d(den, floor, MPFR_RNDN);
    mpfr_div(num, num, den, MPFR_RNDN);
    double out = mpfr_get_d(num, MPFR_RNDN);
    mpfr_clear(num);
    mpfr_clear(den);
    return out;
}

}  // namespace herschel::mp
