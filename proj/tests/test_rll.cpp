#include <doctest.h>

#include <cmath>

#include "ncc/asymptotics.hpp"
#include "ncc/rll.hpp"
#include "ncc/spectral.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using helpers::w;
using ncc::BitWord;
using ncc::MarkovChain;
namespace rll = ncc::rll;

TEST_CASE("forbidden sets of run-length constraints") {
    CHECK(rll::constraint({1, std::nullopt}).minimal_forbidden() == std::vector<BitWord>{w("11")});
    CHECK(rll::constraint({1, 3}).minimal_forbidden() ==
          std::vector<BitWord>{w("11"), w("0000")});
    CHECK(rll::constraint({2, 4}).minimal_forbidden() ==
          std::vector<BitWord>{w("11"), w("101"), w("00000")});
    CHECK(rll::constraint({0, std::nullopt}).minimal_forbidden().empty());
    CHECK(rll::constraint({1, 3}).order() == 3);
}

TEST_CASE("root of the characteristic equation") {
    const double r1 = rll::rho0({1, std::nullopt});
    CHECK(r1 == doctest::Approx(1.0 / helpers::golden_ratio).epsilon(1e-12));
    CHECK(r1 * r1 / (1.0 - r1) == doctest::Approx(1.0).epsilon(1e-12));

    const double r2 = rll::rho0({2, std::nullopt});
    CHECK(r2 == doctest::Approx(0.6823278038).epsilon(1e-8));
    CHECK(r2 * r2 * r2 == doctest::Approx(1.0 - r2).epsilon(1e-12));

    const double r13 = rll::rho0({1, 3});
    CHECK(r13 == doctest::Approx(oracle::rll_root(1, 3)).epsilon(1e-12));
    CHECK(r13 * r13 + r13 * r13 * r13 + r13 * r13 * r13 * r13 ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r13 == doctest::Approx(0.6823).epsilon(1e-4));

    CHECK_THROWS_AS(rll::rho0({2, 2}), std::invalid_argument);
}

TEST_CASE("capacity equals the root on both routes") {
    for (const rll::Params& p :
         {rll::Params{1, std::nullopt}, rll::Params{1, 3}, rll::Params{2, std::nullopt},
          rll::Params{2, 4}})
        CHECK(std::abs(std::log(1.0 / rll::rho0(p)) -
                       ncc::noiseless_capacity(rll::constraint(p))) < 1e-10);
}

TEST_CASE("run-length f form equals the general boundary sum") {
    const rll::Params params[] = {{1, std::nullopt}, {1, 2}, {1, 3}, {2, 3}, {2, std::nullopt}};
    for (const rll::Params& p : params) {
        const ncc::FiniteTypeConstraint c = rll::constraint(p);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const MarkovChain chain = ncc::random_chain(c, c.order(), seed);
            CHECK(std::abs(rll::f_general(chain, p) - ncc::f_nk(chain, 2 * chain.order(), 0)) <
                  1e-12);
        }
    }
}

TEST_CASE("tight spacing forces f = 1") {
    const rll::Params params[] = {{1, 2}, {2, 3}, {2, 4}, {3, 5}};
    for (const rll::Params& p : params) {
        const ncc::FiniteTypeConstraint c = rll::constraint(p);
        for (std::uint64_t seed = 0; seed < 10; ++seed)
            CHECK(std::abs(rll::f_general(ncc::random_chain(c, c.order(), seed), p) - 1.0) < 1e-12);
    }
}

TEST_CASE("f rejects chains escaping the constraint") {
    CHECK_THROWS_AS(rll::f_general(helpers::fair_coin(), {1, std::nullopt}), std::invalid_argument);
}

TEST_CASE("closed-form f at the maximum-entropy chain") {
    CHECK(rll::f_maxentropy_closed_form({1, std::nullopt}) ==
          doctest::Approx(0.4472135955).epsilon(1e-9));
    CHECK(rll::f_maxentropy_closed_form({2, 4}) == doctest::Approx(1.0).epsilon(1e-11));
    for (const rll::Params& p :
         {rll::Params{1, 3}, rll::Params{2, std::nullopt}, rll::Params{1, std::nullopt}}) {
        const double via_expansion = ncc::expansion_of(ncc::parry_chain(rll::constraint(p))).f;
        CHECK(std::abs(rll::f_maxentropy_closed_form(p) - via_expansion) < 1e-10);
    }
}

TEST_CASE("one-parameter family f") {
    const double pmax = 1.0 / (helpers::golden_ratio * helpers::golden_ratio);
    CHECK(rll::family_f(pmax) == doctest::Approx(0.4472135955).epsilon(1e-9));
    CHECK(rll::family_f(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    for (double p : {0.1, 0.45, 0.8})
        CHECK(std::abs(rll::family_f(p) - ncc::f_nk(helpers::no11_chain(p), 2, 0)) < 1e-13);
}

TEST_CASE("one-parameter family g validated against the general machinery") {
    for (double p : {0.3, 0.5, 0.7})
        CHECK(std::abs(rll::family_g(p) - ncc::g_nk(helpers::no11_chain(p), 3, 0)) < 1e-10);

    const double pmax = 1.0 / (helpers::golden_ratio * helpers::golden_ratio);
    CHECK(std::abs(rll::family_g(pmax) - ncc::g_nk(helpers::no11_chain(pmax), 3, 0)) < 1e-10);

    // g blows up like log(1/p) as p -> 0: the non-log part stays bounded
    for (double p : {1e-3, 1e-5}) {
        const double bounded = (1.0 + p) * rll::family_g(p) -
                               (3.0 * p - 1.0 - p * p) * std::log(p);
        CHECK(std::abs(bounded) < 0.1);
    }
    CHECK(rll::family_g(1e-6) > 10.0);
}
