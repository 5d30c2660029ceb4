#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "herschel/rational.hpp"

namespace herschel {

/// Triangular table of the finite differences of zero: entry (n, j) holds
/// Delta^j 0^n for 0 <= j <= n, built by the multiplicative recurrence
///
///   Delta^j 0^n = j * (Delta^{j-1} 0^{n-1} + Delta^j 0^{n-1})
///
/// with Delta^0 0^0 = 1 (convention 0^0 = 1).  Entries equal j! S(n, j),
/// S the Stirling numbers of the second kind.  Rows grow monotonically up
/// to a configurable cap; built rows are readable concurrently and growth
/// takes the writer lock.
class ZeroDifferenceTable {
public:
    static constexpr std::size_t kDefaultCap = 1000;

    explicit ZeroDifferenceTable(std::size_t cap = kDefaultCap) : cap_(cap) {}

    /// Build all rows up to n_max; throws table_limit_error past the cap.
    void ensure_rows(std::size_t n_max);

    /// Delta^j 0^n as an immutable copy; 0 when j > n.  Extends the table
    /// on demand.
    BigInt delta_zero(std::size_t j, std::size_t n);

    /// S(n, j) = Delta^j 0^n / j!; the division is checked exact.
    BigInt stirling2(std::size_t n, std::size_t j);

    std::size_t rows_built() const;
    std::size_t cap() const;
    void set_cap(std::size_t cap);

private:
    void grow_locked(std::size_t n_max);

    mutable std::shared_mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
    std::size_t cap_;
};

/// Process-wide shared table used by the transforms and sequence families.
ZeroDifferenceTable& shared_difference_table();

BigInt delta_zero(std::size_t j, std::size_t n);
BigInt stirling2(std::size_t n, std::size_t j);

/// Override the shared table's row cap (default 1000).
void set_table_cap(std::size_t cap);

}  // namespace herschel
