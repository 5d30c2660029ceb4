#include "herschel/numeric_transform.hpp"

#include <stdexcept>

#include "herschel/zero_differences.hpp"

namespace herschel {

namespace {

// acc += x with Kahan compensation carried in comp.
void compensated_add(mpfr_ptr acc, mpfr_ptr comp, mpfr_srcptr x, mpfr_ptr t1, mpfr_ptr t2) {
    // y = x - comp; t = acc + y; comp = (t - acc) - y; acc = t
    mpfr_sub(t1, x, comp, MPFR_RNDN);
    mpfr_add(t2, acc, t1, MPFR_RNDN);
    mpfr_sub(comp, t2, acc, MPFR_RNDN);
    mpfr_sub(comp, comp, t1, MPFR_RNDN);
    mpfr_set(acc, t2, MPFR_RNDN);
}

}  // namespace

mp::Complex herschel_row_raw(const NumericProvider& provider, std::size_t n, mpfr_prec_t prec) {
    if (prec < 53) throw std::invalid_argument("herschel_row_raw: precision below 53 bits");

    auto& table = shared_difference_table();
    table.ensure_rows(n);

    mp::Complex acc(prec), comp(prec);
    mpfr_t term_re, term_im, t1, t2;
    mpfr_init2(term_re, prec);
    mpfr_init2(term_im, prec);
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);

    // j = 0 contributes only at n = 0 (Delta^0 0^n = [n = 0]).
    for (std::size_t j = (n == 0) ? 0 : 1; j <= n; ++j) {
        BigInt d = table.delta_zero(j, n);
        if ((n + j) % 2 == 1) d = -d;
        mp::Complex c = provider(j, prec);
        mpfr_mul_z(term_re, c.re.raw(), d.get_mpz_t(), MPFR_RNDN);
        mpfr_mul_z(term_im, c.im.raw(), d.get_mpz_t(), MPFR_RNDN);
        compensated_add(acc.re.raw(), comp.re.raw(), term_re, t1, t2);
        compensated_add(acc.im.raw(), comp.im.raw(), term_im, t1, t2);
    }

    mpfr_clear(term_re);
    mpfr_clear(term_im);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return acc;
}

std::vector<mp::Complex> herschel_coefficients_numeric(const NumericProvider& provider,
                                                       std::size_t n_max, mpfr_prec_t prec) {
    std::vector<mp::Complex> out;
    out.reserve(n_max + 1);
    BigInt fact = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        mp::Complex row = herschel_row_raw(provider, n, prec);
        mpfr_div_z(row.re.raw(), row.re.raw(), fact.get_mpz_t(), MPFR_RNDN);
        mpfr_div_z(row.im.raw(), row.im.raw(), fact.get_mpz_t(), MPFR_RNDN);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace herschel
