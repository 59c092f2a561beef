#include "doctest.h"

#include <stdexcept>

#include "freeprob/cauchy1d.hpp"
#include "freeprob/rand.hpp"
#include "freeprob/subord.hpp"
#include "test_util.hpp"

using namespace freeprob;

namespace {

Word ones(int n) { return Word(static_cast<std::size_t>(n), 1); }

}  // namespace

TEST_CASE("cauchy_from_moments fixtures") {
    LaurentTail gd = cauchy_from_moments(delta(1, 5));
    CHECK(gd.coeffs[0] == 1);
    for (std::size_t j = 1; j < gd.coeffs.size(); ++j) CHECK(gd.coeffs[j] == 0);

    LaurentTail gp = cauchy_from_moments(point_mass(5, Rat(1)));
    for (const Rat& c : gp.coeffs) CHECK(c == 1);  // geometric: 1/(z-1)

    LaurentTail gg = cauchy_from_moments(semicircular(1, 6, Rat(1)));
    CHECK(gg.coeffs[0] == 1);
    CHECK(gg.coeffs[2] == 1);
    CHECK(gg.coeffs[4] == 2);
    CHECK(gg.coeffs[6] == 5);
    CHECK(gg.coeffs[1] == 0);
    CHECK(gg.coeffs[3] == 0);
    CHECK(gg.coeffs[5] == 0);

    RandomDistributions gen(97);
    CHECK_THROWS_AS(cauchy_from_moments(gen.random_distribution(2, 4)), std::domain_error);
}

TEST_CASE("k_transform fixtures and reversion consistency") {
    KSeries kd = k_transform(cauchy_from_moments(delta(1, 5)));
    for (const Rat& a : kd.a) CHECK(a == 0);  // K = 1/z, R = 0

    KSeries kp = k_transform(cauchy_from_moments(point_mass(5, Rat(1))));
    CHECK(kp.a[0] == 1);  // K = 1/z + 1, R = z
    for (std::size_t j = 1; j < kp.a.size(); ++j) CHECK(kp.a[j] == 0);

    KSeries kg = k_transform(cauchy_from_moments(semicircular(1, 6, Rat(1))));
    CHECK(kg.a[1] == 1);  // K = 1/z + z, R = z^2
    CHECK(kg.a[0] == 0);
    CHECK(kg.a[2] == 0);
    CHECK(kg.a[3] == 0);

    LaurentTail bad{3, {Rat(2), Rat(0), Rat(0), Rat(0)}};
    CHECK_THROWS_AS(k_transform(bad), std::domain_error);
    CHECK_THROWS_AS(reciprocal(bad), std::domain_error);
}

TEST_CASE("reversion-based R equals the functional-equation R") {
    RandomDistributions gen(101);
    for (int trial = 0; trial < 20; ++trial) {
        Distribution d = gen.random_distribution(1, 8);
        CHECK(r_from_k(k_transform(cauchy_from_moments(d))) == d.rseries());
    }
}

TEST_CASE("F from the reciprocal equals F from the eta series") {
    RandomDistributions gen(103);
    for (int trial = 0; trial < 20; ++trial) {
        Distribution d = gen.random_distribution(1, 8);
        CHECK(reciprocal(cauchy_from_moments(d)) == f_from_eta(d));
    }
}

TEST_CASE("composition against a closed form: G and F of the point mass") {
    // G_{delta_2}(z) = 1/(z-2) = G_{delta_1}(z-1): compose with F(z) = z - 1
    Distribution pm = point_mass(5, Rat(1));
    Distribution pm2 = boxplus(pm, pm);  // point mass at 2
    FSeries omega = f_from_eta(boxright(pm, pm));
    CHECK(omega.c[0] == -1);
    for (std::size_t j = 1; j < omega.c.size(); ++j) CHECK(omega.c[j] == 0);
    CHECK(compose(cauchy_from_moments(pm), omega) == cauchy_from_moments(pm2));
}

TEST_CASE("subordination of the Cauchy transform on random pairs") {
    RandomDistributions gen(107);
    for (int trial = 0; trial < 20; ++trial) {
        Distribution mu = gen.random_distribution(1, 8);
        Distribution nu = gen.random_distribution(1, 8);
        CHECK(check_subordination(mu, nu));
        CHECK(check_f_sum(mu, nu));
    }
    Distribution mu = gen.random_distribution(1, 6);
    CHECK(check_subordination(mu, delta(1, 6)));  // F_{mu |> delta} = F_mu
}

TEST_CASE("power subordination") {
    RandomDistributions gen(109);
    const Rat probes[] = {Rat(1), Rat(3, 2), Rat(2), Rat(3)};
    for (int trial = 0; trial < 10; ++trial) {
        Distribution nu = gen.random_distribution(1, 8);
        for (const Rat& p : probes) CHECK(check_power_subordination(nu, p));
    }
    Distribution g = semicircular(1, 6, Rat(1));
    CHECK(check_power_subordination(g, Rat(3)));
    // p = 2: sigma = bb(nu), eta_sigma = eta_{nu boxplus nu} / 2
    Distribution nu = gen.random_distribution(1, 8);
    Distribution sig = subordination_of_power(nu, Rat(2));
    CHECK(sig == bb(nu));
    CHECK(sig.eseries() == scale(boxplus(nu, nu).eseries(), Rat(1, 2)));
    CHECK_THROWS_AS(check_power_subordination(nu, Rat(1, 2)), std::domain_error);
}
