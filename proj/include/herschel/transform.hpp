#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

#include "herschel/series.hpp"
#include "herschel/zero_differences.hpp"

namespace herschel {

// The Herschel transform maps the coefficients c_j of X^j in phi(1-X)
// (equivalently c_j = (-1)^j phi^(j)(1)/j!) to the Taylor coefficients of
// phi(e^{-t}):
//
//   a_n = ((-1)^n / n!) sum_{j=0}^{n} (-1)^j c_j Delta^j 0^n
//
// herschel_egf_numbers returns s_n = n! a_n, avoiding the division.

template <class Ring, class Provider>
    requires std::invocable<Provider&, std::size_t>
std::vector<Ring> herschel_egf_numbers(Provider&& provider, std::size_t n_max) {
    std::vector<Ring> c;
    c.reserve(n_max + 1);
    for (std::size_t j = 0; j <= n_max; ++j) c.push_back(provider(j));
    shared_difference_table().ensure_rows(n_max);

    std::vector<Ring> s;
    s.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        Ring acc = RingOps<Ring>::zero();
        // j = 0 contributes only at n = 0 (Delta^0 0^n = [n = 0]).
        for (std::size_t j = (n == 0) ? 0 : 1; j <= n; ++j) {
            Rational d{delta_zero(j, n)};
            if ((n + j) % 2 == 1) d = -d;
            acc = acc + RingOps<Ring>::scale(c[j], d);
        }
        s.push_back(std::move(acc));
    }
    return s;
}

template <class Ring, class Provider>
    requires std::invocable<Provider&, std::size_t>
std::vector<Ring> herschel_coefficients(Provider&& provider, std::size_t n_max) {
    std::vector<Ring> a = herschel_egf_numbers<Ring>(provider, n_max);
    BigInt fact(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        fact *= static_cast<unsigned long>(n);
        a[n] = RingOps<Ring>::scale(a[n], make_rational(BigInt(1), fact));
    }
    return a;
}

template <class Ring>
std::vector<Ring> herschel_egf_numbers(const std::vector<Ring>& c, std::size_t n_max) {
    return herschel_egf_numbers<Ring>([&c](std::size_t j) { return c.at(j); }, n_max);
}

template <class Ring>
std::vector<Ring> herschel_coefficients(const std::vector<Ring>& c, std::size_t n_max) {
    return herschel_coefficients<Ring>([&c](std::size_t j) { return c.at(j); }, n_max);
}

/// Single row s_n = n! a_n for one n.
template <class Ring, class Provider>
    requires std::invocable<Provider&, std::size_t>
Ring herschel_egf_single(Provider&& provider, std::size_t n) {
    shared_difference_table().ensure_rows(n);
    if (n == 0) return provider(0);
    Ring acc = RingOps<Ring>::zero();
    for (std::size_t j = 1; j <= n; ++j) {
        Rational d{delta_zero(j, n)};
        if ((n + j) % 2 == 1) d = -d;
        acc = acc + RingOps<Ring>::scale(provider(j), d);
    }
    return acc;
}

}  // namespace herschel
