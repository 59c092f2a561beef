#include "doctest.h"

#include <stdexcept>

#include "freeprob/fock.hpp"
#include "freeprob/rand.hpp"
#include "freeprob/subord.hpp"
#include "test_util.hpp"

using namespace freeprob;

namespace {

Word ones(int n) { return Word(static_cast<std::size_t>(n), 1); }

}  // namespace

TEST_CASE("basis indexing is a bijection by length then lex") {
    FockBasis b(2, 3);
    CHECK(b.size() == 1 + 4 + 16 + 64);
    CHECK(b.index({}) == 0);
    CHECK(b.index({0}) == 1);
    CHECK(b.index({3}) == 4);
    CHECK(b.index({0, 0}) == 5);
    CHECK(b.index({3, 3}) == 20);
    CHECK(b.letter(1, true) == 0);
    CHECK(b.letter(2, false) == 3);
    CHECK_THROWS_AS(b.index({0, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(b.letter(3, true), std::domain_error);
}

TEST_CASE("creation is an isometry below the truncation cap") {
    FockBasis b(1, 3);
    FockOperator l = creation(b, 1, true);
    FockOperator ltl = l.transpose() * l;
    // (L*)L fixes every word of length < depth and kills the top level
    for (std::int64_t i = 0; i < b.size(); ++i)
        for (std::int64_t j = 0; j < b.size(); ++j) {
            Rat expect = (i == j && i < b.index({0, 0, 0})) ? Rat(1) : Rat(0);
            CHECK(ltl.at(i, j) == expect);
        }
}

TEST_CASE("vacuum projection passes its own axioms; identity fails them") {
    FockBasis b(1, 2);
    FockOperator p = vacuum_projection(b);
    FockOperator l = creation(b, 1, true);
    std::vector<FockOperator> probes{l + l.transpose(), l.transpose() * l};
    CHECK(!check_vacuum_projection(p, probes).has_value());
    CHECK(check_vacuum_projection(FockOperator::identity(b), probes).has_value());
    CHECK(check_vacuum_projection(FockOperator(b), probes).has_value());  // P = 0
}

TEST_CASE("semicircular model: A reproduces the gamma moments") {
    Distribution g = semicircular(1, 6, Rat(1));
    Distribution dd = delta(1, 6);
    FockModel m = build_model(g, dd, 6);
    CHECK(vacuum_moment(m.a, ones(2)) == 1);
    CHECK(vacuum_moment(m.a, ones(4)) == 2);
    CHECK(vacuum_moment(m.a, ones(6)) == 5);
    CHECK(vacuum_moment(m.a, ones(3)) == 0);
    // nu = delta makes B the vacuum-annihilating part and C = A + (1-P)B(1-P)
    CHECK(vacuum_moment(m.c, ones(2)) == 1);
}

TEST_CASE("model matches series engine on a random pair") {
    RandomDistributions gen(79);
    Distribution mu = gen.random_distribution(2, 3);
    Distribution nu = gen.random_distribution(2, 3);
    Distribution sig = boxright(mu, nu);
    FockModel m = build_model(mu, nu, 3);
    for (const Word& w : testutil::all_words(2, 3)) {
        CHECK(vacuum_moment(m.a, w) == mu.moment(w));
        CHECK(vacuum_moment(m.b, w) == nu.moment(w));
        CHECK(vacuum_moment(m.c, w) == sig.moment(w));
    }
}

TEST_CASE("depth stability of vacuum moments") {
    RandomDistributions gen(83);
    Distribution mu = gen.random_distribution(1, 4);
    Distribution nu = gen.random_distribution(1, 4);
    FockModel m4 = build_model(mu, nu, 4);
    FockModel m5 = build_model(mu, nu, 5);
    for (int n = 1; n <= 4; ++n)
        CHECK(vacuum_moment(m4.c, ones(n)) == vacuum_moment(m5.c, ones(n)));
}

TEST_CASE("build_model rejects mismatched inputs") {
    RandomDistributions gen(89);
    Distribution a = gen.random_distribution(2, 3);
    Distribution b = gen.random_distribution(1, 3);
    CHECK_THROWS_AS(build_model(a, b, 4), std::domain_error);
    CHECK_THROWS_AS(vacuum_moment({}, ones(1)), std::domain_error);
}
