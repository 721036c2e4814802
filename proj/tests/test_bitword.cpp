#include <doctest.h>

#include <stdexcept>

#include "ncc/bitword.hpp"

using ncc::BitWord;

TEST_CASE("parse and str round-trip") {
    CHECK(BitWord::parse("0110").str() == "0110");
    CHECK(BitWord::parse("").size() == 0);
    CHECK(BitWord::parse("1").value() == 1);
    CHECK(BitWord::parse("110").value() == 6);
    CHECK_THROWS_AS(BitWord::parse("10a"), std::invalid_argument);
}

TEST_CASE("indexing follows the oldest-first convention") {
    const BitWord w = BitWord::parse("0110");
    CHECK(w[0] == 0);
    CHECK(w[1] == 1);
    CHECK(w[3] == 0);
    // back(t) is the symbol at time -t
    CHECK(w.back(0) == 0);
    CHECK(w.back(1) == 1);
    CHECK(w.back(3) == 0);
}

TEST_CASE("construction ops") {
    const BitWord w = BitWord::parse("011");
    CHECK(w.append(0).str() == "0110");
    CHECK(w.prepend(1).str() == "1011");
    CHECK(w.prefix(2).str() == "01");
    CHECK(w.suffix(2).str() == "11");
    CHECK(w.drop_first().str() == "11");
    CHECK(w.drop_last().str() == "01");
    CHECK(w.concat(BitWord::parse("10")).str() == "01110");
    CHECK(w.flip_back(0).str() == "010");
    CHECK(w.flip_back(2).str() == "111");
}

TEST_CASE("flip preserves length and is an involution") {
    const BitWord w = BitWord::parse("10101");
    for (int t = 0; t < w.size(); ++t) {
        CHECK(w.flip_back(t).size() == w.size());
        CHECK(w.flip_back(t).flip_back(t) == w);
    }
}

TEST_CASE("factor containment") {
    const BitWord w = BitWord::parse("011010");
    CHECK(w.contains(BitWord::parse("110")));
    CHECK(w.contains(BitWord::parse("0")));
    CHECK(w.contains(BitWord::parse("")));
    CHECK(!w.contains(BitWord::parse("111")));
    CHECK(!w.contains(BitWord::parse("0110100")));
}

TEST_CASE("lexicographic order within a length is numeric order") {
    CHECK(BitWord::parse("001") < BitWord::parse("010"));
    CHECK(BitWord::parse("011") < BitWord::parse("100"));
}
