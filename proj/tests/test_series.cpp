#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <sstream>

#include "ginipart/gini.hpp"
#include "ginipart/partition.hpp"
#include "ginipart/series.hpp"

using namespace ginipart;

namespace {

QPolynomial poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    QPolynomial p;
    for (const auto& [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
}

}  // namespace

TEST_CASE("QPolynomial term bookkeeping") {
    QPolynomial p;
    CHECK(p.is_zero());
    p.add_term(3, 0);
    CHECK(p.is_zero());
    p.add_term(3, 2);
    p.add_term(3, 1);
    p.add_term(5, 1);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(3) == 3);
    CHECK(p.coefficient(4) == 0);
    CHECK(p.coefficient_sum() == 4);
    p.add_term(5, -1);
    CHECK(p.coefficient(5) == 0);
    CHECK(p.term_count() == 1);
}

TEST_CASE("dominant term prefers the smallest exponent on ties") {
    CHECK(poly({{3, 2}, {5, 2}, {7, 1}}).dominant_term() ==
          std::pair<std::int64_t, BigInt>(3, BigInt(2)));
    CHECK(poly({{4, 1}}).dominant_term() == std::pair<std::int64_t, BigInt>(4, BigInt(1)));
    CHECK_THROWS_AS(QPolynomial().dominant_term(), std::domain_error);
}

TEST_CASE("low-degree coefficients of the expanded product") {
    const auto rows = expand_product(5);
    CHECK(rows[1] == poly({{1, 1}}));
    CHECK(rows[2] == poly({{2, 1}, {3, 1}}));
    CHECK(rows[3] == poly({{3, 1}, {4, 1}, {6, 1}}));
    CHECK(rows[4] == poly({{4, 1}, {5, 1}, {6, 1}, {7, 1}, {10, 1}}));
    CHECK(rows[5] == poly({{5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}, {11, 1}, {15, 1}}));
    CHECK_THROWS_AS(expand_product(0), std::invalid_argument);
}

TEST_CASE("x^6 coefficient has a doubled term") {
    const auto rows = expand_product(6);
    CHECK(rows[6].coefficient(9) == 2);
}

TEST_CASE("coefficients by direct enumeration") {
    CHECK(direct_coefficient(2) == poly({{2, 1}, {3, 1}}));
    CHECK(direct_coefficient(3) == poly({{3, 1}, {4, 1}, {6, 1}}));
    CHECK(direct_coefficient(5) ==
          poly({{5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}, {11, 1}, {15, 1}}));
    CHECK_THROWS_AS(direct_coefficient(0), std::invalid_argument);
    CHECK_THROWS_AS(direct_coefficient(20, 100), budget_error);
}

TEST_CASE("product expansion equals direct enumeration") {
    const auto rows = expand_product(12);
    for (std::int64_t n = 1; n <= 12; ++n)
        CHECK(rows[static_cast<std::size_t>(n)] == direct_coefficient(n));
}

TEST_CASE("q=1 specialization counts partitions") {
    const auto rows = expand_product(30);
    const auto table = partition_count_table(30);
    for (std::int64_t n = 1; n <= 30; ++n)
        CHECK(rows[static_cast<std::size_t>(n)].coefficient_sum() ==
              table[static_cast<std::size_t>(n)]);
}

TEST_CASE("extreme exponents carry coefficient one") {
    const auto rows = expand_product(15);
    for (std::int64_t n = 1; n <= 15; ++n) {
        const auto& terms = rows[static_cast<std::size_t>(n)].terms();
        CHECK(terms.begin()->first == n);
        CHECK(terms.begin()->second == 1);
        CHECK(terms.rbegin()->first == binom2(n + 1));
        CHECK(terms.rbegin()->second == 1);
    }
}

TEST_CASE("exponents come from the row-sum mapping") {
    // each partition contributes the exponent sum_i C(p_i+1,2), which the
    // binomial identity turns into C(n+1,2) - e2; over all of P_n that
    // multiset coincides with the exponents C(n+1,2) - g
    for (std::int64_t n = 1; n <= 12; ++n) {
        QPolynomial by_rows;
        QPolynomial by_gini;
        for (const Partition& p : enumerate_partitions(n)) {
            std::int64_t row_sum = 0;
            for (std::int64_t part : p.parts()) row_sum += binom2(part + 1);
            CHECK(row_sum == binom2(n + 1) - e2_direct(p));
            by_rows.add_term(row_sum, 1);
            by_gini.add_term(binom2(n + 1) - gini(p), 1);
        }
        CHECK(by_rows == by_gini);
    }
}

TEST_CASE("truncation does not disturb lower degrees") {
    const auto small = expand_product(9);
    const auto large = expand_product(14);
    for (std::int64_t n = 1; n <= 9; ++n)
        CHECK(small[static_cast<std::size_t>(n)] == large[static_cast<std::size_t>(n)]);
}

TEST_CASE("gini profile from a coefficient") {
    const GiniProfile p4 = gini_profile(4, direct_coefficient(4));
    CHECK(p4.counts == std::map<std::int64_t, BigInt>{{0, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});

    const GiniProfile p1 = gini_profile(1, direct_coefficient(1));
    CHECK(p1.counts == std::map<std::int64_t, BigInt>{{0, 1}});

    const GiniProfile p6 = gini_profile(6, direct_coefficient(6));
    BigInt largest = 0;
    for (const auto& [g, count] : p6.counts) largest = std::max(largest, count);
    CHECK(largest == 2);

    CHECK_THROWS_AS(gini_profile(4, poly({{3, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(gini_profile(4, poly({{11, 1}})), std::invalid_argument);
}

TEST_CASE("gini profile invariants") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        const GiniProfile profile = gini_profile(n, direct_coefficient(n));
        BigInt total = 0;
        for (const auto& [g, count] : profile.counts) {
            CHECK(g >= 0);
            CHECK(g <= binom2(n));
            total += count;
        }
        CHECK(total == count_partitions(n));
        CHECK(profile.counts.at(0) == 1);
        CHECK(profile.counts.at(binom2(n)) == 1);
    }
}

TEST_CASE("largest level set sizes") {
    const long expected[] = {1, 1, 1, 1, 1, 2, 2, 2, 3};
    for (std::int64_t n = 1; n <= 9; ++n)
        CHECK(level_set_max(n) == expected[n - 1]);

    // cross-route: the enumeration profile gives the same maximum at n=20
    const GiniProfile p20 = gini_profile(20, direct_coefficient(20));
    BigInt largest = 0;
    for (const auto& [g, count] : p20.counts) largest = std::max(largest, count);
    CHECK(level_set_max(20) == largest);
}

TEST_CASE("JSON and CSV emission") {
    const auto rows = expand_product(4);
    CHECK(coefficient_json(4, rows[4]) ==
          "{\"n\":4,\"terms\":[[4,1],[5,1],[6,1],[7,1],[10,1]]}");
    CHECK(coefficient_json(1, rows[1]) == "{\"n\":1,\"terms\":[[1,1]]}");

    std::ostringstream os;
    write_profile_csv(os, gini_profile(4, rows[4]));
    CHECK(os.str() == "n,g,count\n4,0,1\n4,3,1\n4,4,1\n4,5,1\n4,6,1\n");

    std::ostringstream no_header;
    write_profile_csv(no_header, gini_profile(1, rows[1]), false);
    CHECK(no_header.str() == "1,0,1\n");
}
