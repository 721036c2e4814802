#include <doctest.h>

#include <cmath>

#include "ncc/channel.hpp"
#include "ncc/errors.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using helpers::w;
using ncc::BitWord;
using ncc::ChannelParameter;
using ncc::MarkovChain;

namespace {

ncc::FiniteTypeConstraint s13() { return ncc::FiniteTypeConstraint({w("11"), w("0000")}); }

// bit-complemented version of a chain (swap the roles of 0 and 1)
MarkovChain complemented(const MarkovChain& chain) {
    std::vector<MarkovChain::KernelRow> rows;
    const int m = chain.order();
    for (const BitWord& ctx : chain.contexts()) {
        BitWord flipped(m, ~ctx.value());
        rows.emplace_back(flipped, std::array<double, 2>{chain.transition(ctx, 1),
                                                         chain.transition(ctx, 0)});
    }
    return MarkovChain::from_kernel(m, std::move(rows));
}

}  // namespace

TEST_CASE("channel parameter domain") {
    CHECK_NOTHROW(ChannelParameter(0.0));
    CHECK_NOTHROW(ChannelParameter(0.5));
    CHECK_THROWS_AS(ChannelParameter(0.6), std::invalid_argument);
    CHECK_THROWS_AS(ChannelParameter(-0.1), std::invalid_argument);
}

TEST_CASE("binary entropy") {
    CHECK(ncc::binary_entropy(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(ncc::binary_entropy(0.0) == 0.0);
    const double direct = -(0.11 * std::log(0.11) + 0.89 * std::log(0.89));
    CHECK(ncc::binary_entropy(0.11) == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("joint law degenerate cases") {
    const MarkovChain chain = helpers::golden_parry();
    for (const BitWord& word : {w("0101"), w("0010"), w("11"), w("10")}) {
        CHECK(ncc::joint_xz_prob(chain, 0.07, word.size(), word) ==
              doctest::Approx(chain.word_prob(word)).epsilon(1e-14));
        CHECK(ncc::joint_xz_prob(chain, 0.0, 0, word) ==
              doctest::Approx(chain.word_prob(word)).epsilon(1e-14));
    }
}

TEST_CASE("joint law slope at the forbidden pair") {
    const MarkovChain chain = helpers::golden_parry();
    const double eps = 1e-6;
    const double slope = ncc::joint_xz_prob(chain, eps, 0, w("11")) / eps;
    const double expected = chain.word_prob(w("01")) + chain.word_prob(w("10"));
    CHECK(std::abs(slope - expected) < 1e-3 * expected);
    CHECK(expected == doctest::Approx(0.5527864045).epsilon(1e-9));
}

TEST_CASE("output law is normalized") {
    const MarkovChain chain = helpers::golden_parry();
    for (int len : {3, 6, 9}) {
        double total = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
            total += ncc::joint_xz_prob(chain, 0.13, 0, BitWord(len, v));
        CHECK(std::abs(total - 1.0) < 1e-12);
    }
}

TEST_CASE("output conditional entropy against exhaustive enumeration") {
    const MarkovChain golden = helpers::golden_parry();
    const MarkovChain s13_chain = ncc::random_chain(s13(), 3, 21);
    for (const MarkovChain* chain : {&golden, &s13_chain})
        for (double eps : {0.3, 0.01})
            for (int n : {4, 6}) {
                CHECK(std::abs(ncc::cond_entropy_output(*chain, eps, n) -
                               oracle::brute_cond_entropy_output(*chain, eps, n)) < 1e-12);
                if (n >= chain->order())
                    CHECK(std::abs(ncc::cond_entropy_birch_lower(*chain, eps, n) -
                                   oracle::brute_cond_entropy_birch_lower(*chain, eps, n)) < 1e-12);
            }
}

TEST_CASE("noiseless channel reduces to the window entropies") {
    const MarkovChain chains[] = {helpers::golden_parry(), ncc::random_chain(s13(), 3, 23)};
    for (const MarkovChain& chain : chains)
        for (int n = chain.order(); n <= chain.order() + 3; ++n) {
            const double words = ncc::cond_entropy_words(ncc::pvector_of(chain, n));
            CHECK(std::abs(ncc::cond_entropy_output(chain, 0.0, n) - words) < 1e-12);
            CHECK(std::abs(ncc::cond_entropy_birch_lower(chain, 0.0, n) - words) < 1e-12);
        }
}

TEST_CASE("fair input saturates at log 2 for any noise") {
    const MarkovChain fair = helpers::fair_coin();
    for (double eps : {0.0, 0.1, 0.37, 0.5})
        for (int n : {1, 4, 7})
            CHECK(ncc::cond_entropy_output(fair, eps, n) ==
                  doctest::Approx(std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("crossover one half erases everything") {
    const MarkovChain chain = helpers::golden_parry();
    for (int n : {2, 5})
        CHECK(ncc::cond_entropy_output(chain, 0.5, n) ==
              doctest::Approx(std::log(2.0)).epsilon(1e-13));
    for (int len : {3, 5})
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
            CHECK(ncc::joint_xz_prob(chain, 0.5, 0, BitWord(len, v)) ==
                  doctest::Approx(std::pow(0.5, len)).epsilon(1e-12));
}

TEST_CASE("complement symmetry of the output law") {
    const MarkovChain chain = ncc::random_chain(s13(), 3, 29);
    const MarkovChain mirror = complemented(chain);
    for (int len : {4, 8}) {
        const std::uint64_t all = (std::uint64_t{1} << len) - 1;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
            CHECK(std::abs(ncc::joint_xz_prob(chain, 0.2, 0, BitWord(len, v)) -
                           ncc::joint_xz_prob(mirror, 0.2, 0, BitWord(len, v ^ all))) < 1e-13);
    }
}

TEST_CASE("sandwich brackets and tightens") {
    const MarkovChain chain = helpers::golden_parry();

    const ncc::Sandwich at0 = ncc::entropy_rate_sandwich(chain, 0.0, 5);
    CHECK(std::abs(at0.lower - chain.entropy_rate()) < 1e-12);
    CHECK(std::abs(at0.upper - chain.entropy_rate()) < 1e-12);

    double prev_lower = 0.0, prev_upper = std::log(2.0);
    for (int n = 1; n <= 10; ++n) {
        const ncc::Sandwich s = ncc::entropy_rate_sandwich(chain, 0.05, n);
        CHECK(s.lower <= s.upper + 1e-15);
        CHECK(s.lower >= prev_lower - 1e-13);
        CHECK(s.upper <= prev_upper + 1e-13);
        prev_lower = s.lower;
        prev_upper = s.upper;
    }

    // at this depth the bracket has converged to roundoff (measured <= 1e-13)
    const ncc::Sandwich tight = ncc::entropy_rate_sandwich(chain, 1e-3, 10);
    CHECK(tight.gap() < 1e-13);
    CHECK(tight.gap() >= -1e-15);
}

TEST_CASE("resource cap") {
    CHECK_THROWS_AS(ncc::cond_entropy_output(helpers::fair_coin(), 0.1, 30), ncc::resource_error);
}
