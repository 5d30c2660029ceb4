#include <doctest.h>

#include <thread>
#include <vector>

#include "herschel/errors.hpp"
#include "herschel/rational.hpp"
#include "herschel/zero_differences.hpp"

using herschel::BigInt;

namespace {

// Independent oracle: Delta^j 0^n = sum_k (-1)^{j-k} C(j,k) k^n.
BigInt delta_direct(std::size_t j, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t k = 0; k <= j; ++k) {
        BigInt kn;
        mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(n));
        BigInt term = herschel::binomial(static_cast<unsigned long>(j),
                                         static_cast<unsigned long>(k)) *
                      kn;
        if ((j - k) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_SUITE("zero_differences") {

TEST_CASE("recurrence matches the alternating binomial sum") {
    for (std::size_t n = 0; n <= 30; ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            CAPTURE(n);
            CAPTURE(j);
            CHECK(herschel::delta_zero(j, n) == delta_direct(j, n));
        }
    }
}

TEST_CASE("diagonal is n factorial") {
    for (std::size_t n = 0; n <= 200; ++n) {
        CHECK(herschel::delta_zero(n, n) == herschel::factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("vanishes above the diagonal") {
    CHECK(herschel::delta_zero(3, 2) == 0);
    CHECK(herschel::delta_zero(10, 0) == 0);
    CHECK(herschel::delta_zero(151, 150) == 0);
}

TEST_CASE("first column and row base cases") {
    CHECK(herschel::delta_zero(0, 0) == 1);  // 0^0 = 1
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(herschel::delta_zero(0, n) == 0);
        CHECK(herschel::delta_zero(1, n) == 1);
    }
}

TEST_CASE("stirling numbers recover classical values") {
    CHECK(herschel::stirling2(0, 0) == 1);
    CHECK(herschel::stirling2(4, 2) == 7);
    CHECK(herschel::stirling2(10, 5) == 42525);
    for (std::size_t n = 1; n <= 15; ++n) {
        CHECK(herschel::stirling2(n, 1) == 1);
        CHECK(herschel::stirling2(n, n) == 1);
        // S(n,2) = 2^{n-1} - 1
        if (n >= 2) {
            BigInt expect = (BigInt(1) << static_cast<unsigned long>(n - 1)) - 1;
            CHECK(herschel::stirling2(n, 2) == expect);
        }
    }
}

TEST_CASE("stirling row sums are Bell numbers") {
    // Bell triangle: row n opens with B_n.
    std::vector<BigInt> bell{BigInt(1)};
    std::vector<BigInt> row{BigInt(1)};
    for (std::size_t n = 1; n <= 25; ++n) {
        std::vector<BigInt> next{row.back()};
        for (const BigInt& v : row) next.push_back(next.back() + v);
        bell.push_back(next.front());
        row = std::move(next);
    }
    for (std::size_t n = 0; n <= 25; ++n) {
        BigInt sum = 0;
        for (std::size_t j = 0; j <= n; ++j) sum += herschel::stirling2(n, j);
        CHECK(sum == bell[n]);
    }
}

TEST_CASE("row cap raises table_limit_error") {
    herschel::ZeroDifferenceTable table;
    table.set_cap(16);
    CHECK_NOTHROW(table.ensure_rows(16));
    CHECK_THROWS_AS(table.ensure_rows(17), herschel::table_limit_error);
    CHECK(table.delta_zero(8, 16) == table.delta_zero(8, 16));
}

TEST_CASE("concurrent reads and growth stay consistent") {
    herschel::ZeroDifferenceTable table;
    std::vector<std::thread> workers;
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([&table, w] {
            for (std::size_t n = static_cast<std::size_t>(w); n <= 60; n += 3) {
                table.ensure_rows(n);
                (void)table.delta_zero(n / 2, n);
            }
        });
    }
    for (auto& t : workers) t.join();
    for (std::size_t n = 0; n <= 60; n += 10) {
        CHECK(table.delta_zero(n / 2, n) == delta_direct(n / 2, n));
    }
}

}  // TEST_SUITE
