#include "herschel/polylog.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "herschel/errors.hpp"
#include "herschel/numeric_transform.hpp"
#include "herschel/rational.hpp"
#include "herschel/zero_differences.hpp"

namespace herschel {

const char* to_string(PolylogStatus status) {
    switch (status) {
        case PolylogStatus::converged: return "converged";
        case PolylogStatus::truncated: return "truncated";
        case PolylogStatus::outside_guard: return "outside_guard";
    }
    return "unknown";
}

namespace {

// j^{-s} = exp(-s ln j) for integer j >= 1, at the requested precision.
mp::Complex integer_power_coefficient(std::complex<double> s, std::size_t j, mpfr_prec_t prec) {
    mp::Complex out(prec);
    if (j == 0) return out;

    mpfr_t lnj, mag, angle, c, sn;
    mpfr_init2(lnj, prec);
    mpfr_init2(mag, prec);
    mpfr_init2(angle, prec);
    mpfr_init2(c, prec);
    mpfr_init2(sn, prec);

    mpfr_set_ui(lnj, static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_log(lnj, lnj, MPFR_RNDN);

    // |j^{-s}| = exp(-Re(s) ln j), arg = -Im(s) ln j
    mpfr_mul_d(mag, lnj, -s.real(), MPFR_RNDN);
    mpfr_exp(mag, mag, MPFR_RNDN);
    mpfr_mul_d(angle, lnj, -s.imag(), MPFR_RNDN);
    mpfr_sin_cos(sn, c, angle, MPFR_RNDN);

    mpfr_mul(out.re.raw(), mag, c, MPFR_RNDN);
    mpfr_mul(out.im.raw(), mag, sn, MPFR_RNDN);

    mpfr_clear(lnj);
    mpfr_clear(mag);
    mpfr_clear(angle);
    mpfr_clear(c);
    mpfr_clear(sn);
    return out;
}

mp::Complex coefficient_row(std::complex<double> s, std::size_t n, mpfr_prec_t prec) {
    mp::Complex row = herschel_row_raw(
        [s](std::size_t j, mpfr_prec_t p) { return integer_power_coefficient(s, j, p); }, n, prec);
    BigInt fact = factorial(static_cast<unsigned long>(n));
    mpfr_div_z(row.re.raw(), row.re.raw(), fact.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(row.im.raw(), row.im.raw(), fact.get_mpz_t(), MPFR_RNDN);
    return row;
}

std::complex<double> checked_coefficient(std::complex<double> s, std::size_t n,
                                         mpfr_prec_t precision_bits) {
    if (n == 0) return {0.0, 0.0};
    const mpfr_prec_t auto_prec = polylog_auto_precision(n);
    if (precision_bits == 0) {
        return coefficient_row(s, n, auto_prec).to_std();
    }
    mp::Complex at_p = coefficient_row(s, n, precision_bits);
    if (precision_bits < auto_prec) {
        mp::Complex shadow = coefficient_row(s, n, 2 * precision_bits);
        if (mp::relative_difference(at_p, shadow) > 1e-10) {
            throw precision_error("polylog coefficient b_" + std::to_string(n) +
                                  " unstable at the requested precision");
        }
    }
    return at_p.to_std();
}

using CoeffBlock = std::shared_ptr<const std::vector<std::complex<double>>>;

class CoefficientCache {
public:
    CoeffBlock get(std::complex<double> s, mpfr_prec_t precision_bits, std::size_t n_max) {
        const Key key{s.real(), s.imag(), static_cast<long>(precision_bits)};
        CoeffBlock base;
        {
            std::shared_lock lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) {
                if (it->second->size() > n_max) return it->second;
                base = it->second;
            }
        }
        // Extend a copy outside the lock; racing writers at worst redo rows.
        auto next = base ? std::make_shared<std::vector<std::complex<double>>>(*base)
                         : std::make_shared<std::vector<std::complex<double>>>();
        for (std::size_t n = next->size(); n <= n_max; ++n) {
            next->push_back(checked_coefficient(s, n, precision_bits));
        }
        std::unique_lock lock(mu_);
        auto& slot = cache_[key];
        if (!slot || slot->size() < next->size()) slot = std::move(next);
        return slot;
    }

private:
    using Key = std::tuple<double, double, long>;
    std::map<Key, CoeffBlock> cache_;
    std::shared_mutex mu_;
};

CoefficientCache& coefficient_cache() {
    static CoefficientCache cache;
    return cache;
}

bool on_cut(std::complex<double> x) { return x.imag() == 0.0 && x.real() >= 1.0; }

}  // namespace

mpfr_prec_t polylog_auto_precision(std::size_t n) {
    auto& table = shared_difference_table();
    table.ensure_rows(n);
    std::size_t max_bits = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        BigInt d = table.delta_zero(j, n);
        max_bits = std::max(max_bits, mpz_sizeinbase(d.get_mpz_t(), 2));
    }
    return static_cast<mpfr_prec_t>(64 + max_bits);
}

std::vector<std::complex<double>> polylog_coefficients(std::complex<double> s, std::size_t n_max,
                                                       mpfr_prec_t precision_bits) {
    if (n_max < 1) throw std::invalid_argument("polylog_coefficients: n_max must be >= 1");
    CoeffBlock block = coefficient_cache().get(s, precision_bits, n_max);
    return {block->begin(), block->begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
}

PolylogResult polylog_eval(const PolylogRequest& req) {
    if (!(req.rel_tol > 0)) throw std::invalid_argument("polylog_eval: rel_tol must be > 0");
    if (!(req.radius_guard > 0)) {
        throw std::invalid_argument("polylog_eval: radius_guard must be > 0");
    }
    if (req.max_terms < 1) throw std::invalid_argument("polylog_eval: max_terms must be >= 1");
    if (on_cut(req.x)) {
        throw std::domain_error("polylog_eval: x lies on the cut [1, inf)");
    }

    PolylogResult res;
    if (req.x == std::complex<double>(0.0, 0.0)) return res;

    const std::complex<double> t = -std::log(std::complex<double>(1.0, 0.0) - req.x);
    if (std::abs(t) >= req.radius_guard) {
        res.status = PolylogStatus::outside_guard;
        res.value = {std::nan(""), std::nan("")};
        res.abs_error_estimate = std::numeric_limits<double>::infinity();
        return res;
    }

    auto& cache = coefficient_cache();
    CoeffBlock block = cache.get(req.s, req.precision_bits, std::min<std::size_t>(req.max_terms, 64));
    auto coeff = [&](std::size_t n) -> std::complex<double> {
        if (n >= block->size()) {
            block = cache.get(req.s, req.precision_bits,
                              std::min(req.max_terms + 1, std::max<std::size_t>(2 * n, 64)));
        }
        return (*block)[n];
    };

    std::complex<double> sum = 0.0;
    std::complex<double> t_pow = 1.0;
    double last_term = 0.0;
    std::size_t consecutive_small = 0;
    for (std::size_t n = 1; n <= req.max_terms; ++n) {
        t_pow *= t;
        const std::complex<double> term = coeff(n) * t_pow;
        sum += term;
        last_term = std::abs(term);
        consecutive_small = (last_term < req.rel_tol * std::abs(sum)) ? consecutive_small + 1 : 0;
        if (consecutive_small >= 3) {
            // First omitted term must itself honor the converged bound.
            const double next_term = std::abs(coeff(n + 1) * t_pow * t);
            if (next_term <= req.rel_tol * std::abs(sum) + DBL_MIN) {
                res.value = sum;
                res.abs_error_estimate = next_term;
                res.terms_used = n;
                res.status = PolylogStatus::converged;
                return res;
            }
            consecutive_small = 0;
        }
    }

    res.value = sum;
    res.abs_error_estimate = last_term;
    res.terms_used = req.max_terms;
    res.status = PolylogStatus::truncated;
    return res;
}

std::complex<double> polylog_direct(std::complex<double> s, std::complex<double> x,
                                    double rel_tol) {
    if (std::abs(x) > 0.75) {
        throw std::domain_error("polylog_direct: |x| must be <= 0.75");
    }
    if (!(rel_tol > 0)) throw std::invalid_argument("polylog_direct: rel_tol must be > 0");
    if (x == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};

    std::complex<double> sum = 0.0;
    std::complex<double> x_pow = 1.0;
    std::size_t consecutive_small = 0;
    for (std::size_t n = 1; n <= 10000; ++n) {
        x_pow *= x;
        const std::complex<double> term = x_pow * std::exp(-s * std::log(static_cast<double>(n)));
        sum += term;
        consecutive_small = (std::abs(term) < rel_tol * std::abs(sum)) ? consecutive_small + 1 : 0;
        if (consecutive_small >= 3) return sum;
    }
    return sum;
}

}  // namespace herschel
