#include "herschel/zero_differences.hpp"

#include <mutex>
#include <string>

#include "herschel/errors.hpp"

namespace herschel {

void ZeroDifferenceTable::grow_locked(std::size_t n_max) {
    if (n_max > cap_) {
        throw table_limit_error("difference table row " + std::to_string(n_max) +
                                " exceeds cap " + std::to_string(cap_));
    }
    if (rows_.empty()) {
        rows_.push_back({BigInt(1)});  // Delta^0 0^0 = 1
    }
    for (std::size_t n = rows_.size(); n <= n_max; ++n) {
        const auto& prev = rows_[n - 1];
        std::vector<BigInt> row(n + 1);
        row[0] = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            BigInt sum = prev[j - 1];
            if (j < n) sum += prev[j];
            row[j] = sum * static_cast<unsigned long>(j);
        }
        rows_.push_back(std::move(row));
    }
}

void ZeroDifferenceTable::ensure_rows(std::size_t n_max) {
    {
        std::shared_lock lock(mutex_);
        if (rows_.size() > n_max) return;
    }
    std::unique_lock lock(mutex_);
    if (rows_.size() > n_max) return;
    grow_locked(n_max);
}

BigInt ZeroDifferenceTable::delta_zero(std::size_t j, std::size_t n) {
    if (j > n) return BigInt(0);
    ensure_rows(n);
    std::shared_lock lock(mutex_);
    return rows_[n][j];
}

BigInt ZeroDifferenceTable::stirling2(std::size_t n, std::size_t j) {
    const BigInt d = delta_zero(j, n);
    if (d == 0) return d;
    const BigInt f = factorial(static_cast<unsigned long>(j));
    if (!mpz_divisible_p(d.get_mpz_t(), f.get_mpz_t())) {
        throw consistency_error("stirling2: Delta^j 0^n not divisible by j!");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), f.get_mpz_t());
    return q;
}

std::size_t ZeroDifferenceTable::rows_built() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
}

std::size_t ZeroDifferenceTable::cap() const {
    std::shared_lock lock(mutex_);
    return cap_;
}

void ZeroDifferenceTable::set_cap(std::size_t cap) {
    std::unique_lock lock(mutex_);
    cap_ = cap;
}

ZeroDifferenceTable& shared_difference_table() {
    static ZeroDifferenceTable table;
    return table;
}

BigInt delta_zero(std::size_t j, std::size_t n) { return shared_difference_table().delta_zero(j, n); }

BigInt stirling2(std::size_t n, std::size_t j) { return shared_difference_table().stirling2(n, j); }

void set_table_cap(std::size_t cap) { shared_difference_table().set_cap(cap); }

}  // namespace herschel
