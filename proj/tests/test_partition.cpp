#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ginipart/partition.hpp"
#include "oracles.hpp"

using namespace ginipart;

namespace {

Partition make(std::initializer_list<std::int64_t> parts) {
    return Partition(std::vector<std::int64_t>(parts));
}

}  // namespace

TEST_CASE("construction strips trailing zeros and validates") {
    const Partition p = make({4, 3, 1, 1, 0, 0});
    CHECK(p.parts() == std::vector<std::int64_t>{4, 3, 1, 1});
    CHECK(p.weight() == 9);
    CHECK(p.part_count() == 4);

    const Partition empty;
    CHECK(empty.empty());
    CHECK(empty.weight() == 0);
    CHECK(make({}) == empty);
    CHECK(make({0, 0}) == empty);

    CHECK_THROWS_AS(make({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make({0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(make({3, -1}), std::invalid_argument);
    CHECK_THROWS_AS(make({-2}), std::invalid_argument);
}

TEST_CASE("padded view") {
    CHECK(make({4, 3, 1, 1}).padded(9) ==
          std::vector<std::int64_t>{4, 3, 1, 1, 0, 0, 0, 0, 0});
    CHECK(Partition().padded(3) == std::vector<std::int64_t>{0, 0, 0});
    CHECK(make({2, 2}).padded(2) == std::vector<std::int64_t>{2, 2});
    CHECK_THROWS_AS(make({2, 2}).padded(1), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(make({4, 3, 1, 1})) == make({4, 2, 2, 1}));
    CHECK(conjugate(make({1, 1, 1, 1})) == make({4}));
    CHECK(conjugate(make({3, 2, 1})) == make({3, 2, 1}));  // staircase is self-conjugate
    CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("conjugation is a weight-preserving involution") {
    for (std::int64_t n = 0; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            const Partition c = conjugate(p);
            CHECK(c.weight() == p.weight());
            CHECK(conjugate(c) == p);
        }
}

TEST_CASE("enumeration order and content") {
    const auto of4 = enumerate_partitions(4);
    REQUIRE(of4.size() == 5);
    CHECK(of4[0] == make({4}));
    CHECK(of4[1] == make({3, 1}));
    CHECK(of4[2] == make({2, 2}));
    CHECK(of4[3] == make({2, 1, 1}));
    CHECK(of4[4] == make({1, 1, 1, 1}));

    const auto of0 = enumerate_partitions(0);
    REQUIRE(of0.size() == 1);
    CHECK(of0[0].empty());

    const auto of9 = enumerate_partitions(9);
    CHECK(std::find(of9.begin(), of9.end(), make({4, 3, 1, 1})) != of9.end());
}

TEST_CASE("enumeration is strictly descending lexicographic") {
    for (std::int64_t n = 1; n <= 15; ++n) {
        const auto all = enumerate_partitions(n);
        for (std::size_t i = 1; i < all.size(); ++i)
            CHECK(std::lexicographical_compare(all[i].parts().begin(), all[i].parts().end(),
                                               all[i - 1].parts().begin(),
                                               all[i - 1].parts().end()));
    }
}

TEST_CASE("enumeration agrees with an independent generator") {
    for (std::int64_t n = 0; n <= 12; ++n) {
        std::set<std::vector<std::int64_t>> ours;
        for (const Partition& p : enumerate_partitions(n)) ours.insert(p.parts());
        std::set<std::vector<std::int64_t>> reference;
        for (auto& parts : oracles::partitions_by_recursion(n)) reference.insert(parts);
        CHECK(ours == reference);
    }
}

TEST_CASE("counting by the pentagonal recurrence") {
    CHECK(count_partitions(4) == 5);
    CHECK(count_partitions(0) == 1);

    // standard values, re-verified against our own enumeration below
    const std::int64_t known[] = {1,   1,   2,   3,   5,   7,   11,  15,  22,  30, 42,
                                  56,  77,  101, 135, 176, 231, 297, 385, 490, 627};
    const auto table = partition_count_table(20);
    for (std::size_t n = 0; n < std::size(known); ++n)
        CHECK(table[n] == known[n]);
}

TEST_CASE("enumeration count matches the recurrence") {
    const auto table = partition_count_table(30);
    for (std::int64_t n = 0; n <= 30; ++n) {
        std::size_t seen = 0;
        for ([[maybe_unused]] const auto& parts : partition_range(n)) ++seen;
        CHECK(BigInt(static_cast<unsigned long>(seen)) == table[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("enumeration count matches the recurrence at n=50") {
    std::size_t seen = 0;
    for ([[maybe_unused]] const auto& parts : partition_range(50)) ++seen;
    CHECK(BigInt(static_cast<unsigned long>(seen)) == count_partitions(50));
}

TEST_CASE("repeated form") {
    const RepeatedForm f = to_repeated_form(make({4, 3, 1, 1}));
    REQUIRE(f.entries.size() == 3);
    CHECK(f.entries[0] == RepeatedForm::Entry{4, 1});
    CHECK(f.entries[1] == RepeatedForm::Entry{3, 1});
    CHECK(f.entries[2] == RepeatedForm::Entry{1, 2});

    CHECK(to_repeated_form(make({2, 2, 2})).entries ==
          std::vector<RepeatedForm::Entry>{{2, 3}});
    CHECK(to_repeated_form(Partition()).entries.empty());

    for (std::int64_t n = 0; n <= 10; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(from_repeated_form(to_repeated_form(p)) == p);

    CHECK_THROWS_AS(from_repeated_form(RepeatedForm{{{3, 0}}}), std::invalid_argument);
}

TEST_CASE("round trip through the padded view") {
    for (std::int64_t n = 0; n <= 10; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(Partition(p.padded(static_cast<std::size_t>(n))) == p);
}

TEST_CASE("bracket text form") {
    CHECK(to_string(make({4, 3, 1, 1})) == "[4,3,1,1]");
    CHECK(to_string(Partition()) == "[]");

    CHECK(parse_partition("[4,3,1,1]") == make({4, 3, 1, 1}));
    CHECK(parse_partition("[]") == Partition());
    CHECK(parse_partition(" [ 4 , 3 , 1 , 1 ] ") == make({4, 3, 1, 1}));
    CHECK(parse_partition("[4,3,1,1,0,0]") == make({4, 3, 1, 1}));

    for (std::int64_t n = 0; n <= 8; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(parse_partition(to_string(p)) == p);

    // malformed text and invalid content fail with distinct messages
    CHECK_THROWS_WITH_AS(parse_partition("4,3"), doctest::Contains("cannot parse"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_partition("[4,3"), doctest::Contains("cannot parse"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_partition("[4,,3]"), doctest::Contains("cannot parse"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_partition("[1,2] junk"), doctest::Contains("cannot parse"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_partition("[1,3]"), doctest::Contains("weakly decreasing"),
                         std::invalid_argument);
}

TEST_CASE("node budget check") {
    CHECK_NOTHROW(check_node_budget(6, 11, "test"));
    try {
        check_node_budget(6, 10, "test");
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.needed() == 11);
        CHECK(e.allowed() == 10);
        CHECK(std::string(e.what()).find("11") != std::string::npos);
    }
}
