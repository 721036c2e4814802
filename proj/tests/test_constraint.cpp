#include <doctest.h>

#include <vector>

#include "ncc/constraint.hpp"
#include "ncc/errors.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using helpers::w;
using ncc::BitWord;
using ncc::FiniteTypeConstraint;

TEST_CASE("minimal forbidden set") {
    CHECK(ncc::minimal_forbidden_set({w("11"), w("110")}) == std::vector<BitWord>{w("11")});
    CHECK(ncc::minimal_forbidden_set({}).empty());
    CHECK(ncc::minimal_forbidden_set({w("11"), w("101")}) ==
          std::vector<BitWord>{w("11"), w("101")});
    // a long word listed before a short factor still gets dropped
    CHECK(ncc::minimal_forbidden_set({w("0110"), w("11")}) == std::vector<BitWord>{w("11")});
}

TEST_CASE("minimal reduction preserves the constraint and is idempotent") {
    const std::vector<std::vector<BitWord>> cases = {
        {w("11"), w("110"), w("0110")},
        {w("101"), w("11"), w("1001")},
        {w("000"), w("0000"), w("11")},
    };
    for (const auto& forbidden : cases) {
        const auto minimal = ncc::minimal_forbidden_set(forbidden);
        CHECK(ncc::minimal_forbidden_set(minimal) == minimal);
        const FiniteTypeConstraint a(forbidden), b(minimal);
        for (int n = 0; n <= 12; ++n) CHECK(a.enumerate_allowed(n) == b.enumerate_allowed(n));
    }
}

TEST_CASE("topological order") {
    CHECK(FiniteTypeConstraint({w("11")}).order() == 1);
    CHECK(FiniteTypeConstraint({w("11"), w("0000")}).order() == 3);   // (1,3) run lengths
    CHECK(helpers::full_shift().order() == 0);
}

TEST_CASE("enumerate_allowed") {
    const FiniteTypeConstraint no11 = helpers::no11();
    CHECK(no11.enumerate_allowed(2) == std::vector<BitWord>{w("00"), w("01"), w("10")});
    CHECK(no11.enumerate_allowed(1).size() == 2);
    CHECK(no11.enumerate_allowed(2).size() == 3);
    CHECK(no11.enumerate_allowed(3).size() == 5);   // Fibonacci growth
    CHECK(helpers::full_shift().enumerate_allowed(5).size() == 32);
}

TEST_CASE("enumeration equals brute-force filtering") {
    const std::vector<std::vector<BitWord>> cases = {
        {w("11")}, {w("11"), w("101")}, {w("11"), w("0000")}, {w("010")}, {}};
    for (const auto& forbidden : cases) {
        const FiniteTypeConstraint c(forbidden);
        for (int n = 0; n <= 14; ++n)
            CHECK(c.enumerate_allowed(n) == oracle::brute_allowed(c.minimal_forbidden(), n));
    }
}

TEST_CASE("enumeration cap raises a resource error") {
    CHECK_THROWS_AS(helpers::full_shift().enumerate_allowed(8, 100), ncc::resource_error);
}

TEST_CASE("path counting through the vertex graph") {
    for (const auto& forbidden :
         std::vector<std::vector<BitWord>>{{w("11")}, {w("11"), w("101")}, {w("11"), w("0000")}, {}}) {
        const FiniteTypeConstraint c(forbidden);
        const auto a = c.graph_presentation();
        const std::size_t nv = a.size();
        // row sums of A^(n - order) seeded with one count per vertex
        std::vector<std::size_t> counts(nv, 1);
        for (int n = c.order(); n <= 14; ++n) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < nv; ++i) total += counts[i];
            CHECK(total == c.count_allowed(n));
            std::vector<std::size_t> next(nv, 0);
            for (std::size_t i = 0; i < nv; ++i)
                for (std::size_t j = 0; j < nv; ++j)
                    next[j] += counts[i] * static_cast<std::size_t>(a[i][j]);
            counts.swap(next);
        }
    }
}

TEST_CASE("factor closure of the allowed sets") {
    const FiniteTypeConstraint c({w("11"), w("0000")});
    for (int n = 1; n <= 10; ++n) {
        const auto shorter = c.enumerate_allowed(n);
        for (const BitWord& word : c.enumerate_allowed(n + 1)) {
            CHECK(std::binary_search(shorter.begin(), shorter.end(), word.drop_first()));
            CHECK(std::binary_search(shorter.begin(), shorter.end(), word.drop_last()));
        }
    }
}

TEST_CASE("irreducibility") {
    CHECK(helpers::no11().irreducible());
    CHECK(helpers::full_shift().irreducible());
    CHECK(!FiniteTypeConstraint({w("01"), w("10")}).irreducible());
    CHECK(!FiniteTypeConstraint({w("00"), w("01")}).irreducible());
    CHECK(!FiniteTypeConstraint({w("110")}).irreducible());
    CHECK(FiniteTypeConstraint({w("11"), w("101")}).irreducible());
    // single letter forbidden: the all-zeros shift is still irreducible
    CHECK(FiniteTypeConstraint({w("1")}).irreducible());
}

TEST_CASE("graph presentation") {
    const auto a = helpers::no11().graph_presentation();
    CHECK(a == std::vector<std::vector<int>>{{1, 1}, {1, 0}});

    CHECK(helpers::full_shift().graph_presentation() == std::vector<std::vector<int>>{{2}});

    // two-in-a-row spacing: vertices 00, 01, 10 and exactly four edges
    const FiniteTypeConstraint s2inf({w("11"), w("101")});
    const auto& g = s2inf.graph();
    REQUIRE(g.vertices == std::vector<BitWord>{w("00"), w("01"), w("10")});
    int edges = 0;
    for (const auto& row : g.adjacency)
        for (int e : row) edges += e;
    CHECK(edges == 4);
    CHECK(g.adjacency[0][0] == 1);   // 00 -> 00
    CHECK(g.adjacency[0][1] == 1);   // 00 -> 01
    CHECK(g.adjacency[1][2] == 1);   // 01 -> 10
    CHECK(g.adjacency[2][0] == 1);   // 10 -> 00
}

TEST_CASE("essential words filter out dead ends") {
    // after 11 the word 110 is forbidden, so 11 only extends to 111...
    const FiniteTypeConstraint c({w("110")});
    const auto& g = c.graph();
    REQUIRE(g.vertices.size() == 4);
    CHECK(g.essential == std::vector<char>{1, 1, 1, 1});
    CHECK(!c.irreducible());   // two separate cyclic components

    const FiniteTypeConstraint dead({w("00"), w("01")});
    const auto ess = dead.essential_words(1);
    CHECK(ess == std::vector<BitWord>{w("1")});
}
