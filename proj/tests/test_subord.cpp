#include "doctest.h"

#include <stdexcept>

#include "freeprob/rand.hpp"
#include "freeprob/subord.hpp"
#include "test_util.hpp"

using namespace freeprob;

namespace {

Word ones(int n) { return Word(static_cast<std::size_t>(n), 1); }

void check_four_way(const Distribution& mu, const Distribution& nu) {
    Distribution sig = boxright(mu, nu);
    for (const Word& w : testutil::all_words(mu.k(), mu.order())) {
        Rat r = sig.rseries().cf(w);
        CHECK(boxright_r_subsets(mu, nu, w) == r);
        CHECK(boxright_r_partitions(mu, nu, w) == r);
        CHECK(boxright_eta(mu, nu, w) == sig.eseries().cf(w));
        CHECK(boxright_moments(mu, nu, w) == sig.moment(w));
    }
}

}  // namespace

TEST_CASE("four-way agreement on random pairs") {
    RandomDistributions gen(53);
    for (int k = 1; k <= 3; ++k)
        for (int trial = 0; trial < 4; ++trial)
            check_four_way(gen.random_distribution(k, 4), gen.random_distribution(k, 4));
    for (int trial = 0; trial < 2; ++trial)
        check_four_way(gen.random_distribution(1, 6), gen.random_distribution(1, 6));
}

TEST_CASE("generalized coefficients match the production path") {
    RandomDistributions gen(59);
    Distribution mu = gen.random_distribution(2, 4);
    Distribution nu = gen.random_distribution(2, 4);
    Distribution sig = boxright(mu, nu);
    for (const auto& rho : enumerate_nc(4))
        for (const Word& w : testutil::all_words(2, 4)) {
            if (w.size() != 4) continue;
            CHECK(boxright_r_generalized(mu, nu, w, rho) ==
                  cf_partition(w, rho, sig.rseries()));
        }
    // rho = 1_n specializes to the single-outer partition sum
    NcPartition one = make_partition(4, {{1, 2, 3, 4}});
    CHECK(boxright_r_generalized(mu, nu, {1, 2, 2, 1}, one) ==
          boxright_r_partitions(mu, nu, {1, 2, 2, 1}));
    // rho = 0_n leaves only pi = 0_n with every block special
    NcPartition zero = make_partition(4, {{1}, {2}, {3}, {4}});
    CHECK(boxright_r_generalized(mu, nu, {1, 2, 1, 2}, zero) ==
          cf_partition({1, 2, 1, 2}, zero, mu.rseries()));
}

TEST_CASE("delta absorbs") {
    RandomDistributions gen(61);
    Distribution mu = gen.random_distribution(2, 4);
    Distribution dd = delta(2, 4);
    CHECK(boxright(mu, dd) == mu);
    CHECK(boxright(dd, mu) == dd);
    // against delta, only the gapless subset survives in the gap formula
    for (const Word& w : testutil::all_words(2, 4))
        CHECK(boxright_r_subsets(mu, dd, w) == mu.rseries().cf(w));
}

TEST_CASE("semicircle subordinated to itself") {
    Distribution g = semicircular(1, 6, Rat(1));
    Distribution sig = boxright(g, g);
    CHECK(sig.moment(ones(2)) == 1);
    CHECK(sig.moment(ones(4)) == 3);
    CHECK(sig == bb(g));
    // R of gamma |> gamma starts z^2 + z^4 + 2 z^6
    CHECK(sig.rseries().cf(ones(2)) == 1);
    CHECK(sig.rseries().cf(ones(4)) == 1);
    CHECK(sig.rseries().cf(ones(6)) == 2);
    // the worked subset sum at word (1,1,1,1): only S = {1,4} contributes
    CHECK(boxright_r_subsets(g, g, ones(4)) == 1);
    CHECK(boxright_r_partitions(g, g, ones(4)) == 1);
}

TEST_CASE("point mass at 1 is a boxright fixed point") {
    Distribution pm = point_mass(4, Rat(1));
    CHECK(boxright(pm, pm) == pm);
    for (const Word& w : testutil::all_words(1, 4))
        CHECK(boxright_moments(pm, pm, w) == 1);
}

TEST_CASE("subordination of powers") {
    RandomDistributions gen(67);
    Distribution nu = gen.random_distribution(2, 4);
    CHECK(subordination_of_power(nu, Rat(1)) == delta(2, 4));
    CHECK(subordination_of_power(nu, Rat(2)) == bb(nu));
    CHECK_THROWS_AS(subordination_of_power(nu, Rat(1, 2)), std::domain_error);

    Distribution g = semicircular(1, 6, Rat(1));
    Distribution sig3 = subordination_of_power(g, Rat(3));
    NcSeries expect(1, 6);
    expect.set(ones(2), Rat(2));
    expect.set(ones(4), Rat(2));
    expect.set(ones(6), Rat(4));
    CHECK(sig3.rseries() == expect);  // 2 eta_gamma
}

TEST_CASE("gamma_boxright builds the sandwich R directly") {
    RandomDistributions gen(71);
    Distribution nu = gen.random_distribution(2, 4);
    Distribution gb = gamma_boxright(nu);
    CHECK(gb == boxright(semicircular(2, 4, Rat(1)), nu));
    CHECK(gb == bb(phi(nu)));
    // cf((i,j,j,i)) reads off the (j,j) moment of nu
    CHECK(gb.rseries().cf({1, 2, 2, 1}) == nu.moment({2, 2}));
    CHECK(gamma_boxright(delta(1, 6)) == semicircular(1, 6, Rat(1)));
}

TEST_CASE("oracle guard rails") {
    RandomDistributions gen(73);
    Distribution a = gen.random_distribution(2, 4);
    Distribution b = gen.random_distribution(2, 5);
    CHECK_THROWS_AS(boxright(a, b), std::domain_error);
    Distribution c = gen.random_distribution(2, 4);
    CHECK_THROWS_AS(boxright_r_subsets(a, c, Word{}), std::domain_error);
    CHECK_THROWS_AS(boxright_r_subsets(a, c, ones(5)), std::domain_error);
    CHECK_THROWS_AS(boxright_r_subsets(a, c, {1, 3}), std::domain_error);
    NcPartition bad = make_partition(3, {{1, 2, 3}});
    CHECK_THROWS_AS(boxright_r_generalized(a, c, {1, 1}, bad), std::domain_error);
}
