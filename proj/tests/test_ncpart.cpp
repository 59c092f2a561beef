#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "freeprob/ncpart.hpp"
#include "test_util.hpp"

using namespace freeprob;

TEST_CASE("enumerate_nc matches the brute-force set-partition filter") {
    for (int n = 1; n <= 8; ++n) {
        auto nc = enumerate_nc(n);
        CHECK(static_cast<long>(nc.size()) == testutil::catalan(n));

        std::set<std::vector<std::vector<int>>> brute;
        for (const auto& blocks : testutil::all_set_partitions(n))
            if (!testutil::is_noncrossing(blocks, n)) brute.insert(blocks);
        std::set<std::vector<std::vector<int>>> ours;
        for (const auto& pi : nc) ours.insert(pi.blocks);
        CHECK(brute == ours);
    }
}

TEST_CASE("enumerate_nc rejects out-of-range ground sets") {
    CHECK_THROWS_AS(enumerate_nc(0), std::domain_error);
    CHECK_THROWS_AS(enumerate_nc(kDefaultGroundSetCeiling + 1), std::domain_error);
    CHECK_NOTHROW(enumerate_nc(3, 3));
    CHECK_THROWS_AS(enumerate_nc(4, 3), std::domain_error);
}

TEST_CASE("classify_blocks marks covered blocks as inner") {
    NcPartition pi = make_partition(4, {{1, 4}, {2, 3}});
    auto outer = classify_blocks(pi);
    REQUIRE(outer.size() == 2);
    CHECK(outer[0]);
    CHECK_FALSE(outer[1]);
    CHECK(inner_outer_colouring(pi) == Colouring{1, 2});

    NcPartition singletons = make_partition(3, {{1}, {2}, {3}});
    for (bool b : classify_blocks(singletons)) CHECK(b);
}

TEST_CASE("leq_refinement is a partial order with bottom 0_n") {
    auto nc5 = enumerate_nc(5);
    NcPartition zero = make_partition(5, {{1}, {2}, {3}, {4}, {5}});
    NcPartition one = make_partition(5, {{1, 2, 3, 4, 5}});
    for (const auto& pi : nc5) {
        CHECK(leq_refinement(zero, pi));
        CHECK(leq_refinement(pi, pi));
        CHECK(leq_refinement(pi, one));
    }
    CHECK_THROWS_AS(leq_refinement(zero, make_partition(4, {{1, 2, 3, 4}})),
                    std::domain_error);
}

TEST_CASE("pi << 1_n iff 1 and n share a block") {
    NcPartition one = make_partition(5, {{1, 2, 3, 4, 5}});
    for (const auto& pi : enumerate_nc(5)) {
        bool share = false;
        for (const auto& b : pi.blocks)
            if (b.front() == 1 && b.back() == 5) share = true;
        CHECK(ll_leq(pi, one) == share);
    }
}

TEST_CASE("ll_leq refines leq_refinement") {
    auto nc = enumerate_nc(5);
    for (const auto& pi : nc)
        for (const auto& rho : nc)
            if (ll_leq(pi, rho)) CHECK(leq_refinement(pi, rho));
}

TEST_CASE("interval partitions: count and shape") {
    for (int n = 1; n <= 7; ++n) {
        auto ints = interval_partitions(n);
        CHECK(ints.size() == (1u << (n - 1)));
        for (const auto& rho : ints)
            for (const auto& b : rho.blocks)
                CHECK(b.back() - b.front() + 1 == static_cast<int>(b.size()));
    }
}

TEST_CASE("interval_hull is the unique interval partition above in <<") {
    for (int n = 1; n <= 7; ++n) {
        auto ints = interval_partitions(n);
        for (const auto& pi : enumerate_nc(n)) {
            NcPartition hull = interval_hull(pi);
            CHECK(std::find(ints.begin(), ints.end(), hull) != ints.end());
            CHECK(ll_leq(pi, hull));
            int above = 0;
            for (const auto& rho : ints)
                if (ll_leq(pi, rho)) ++above;
            CHECK(above == 1);
        }
    }
}

TEST_CASE("special blocks biject completions above pi in <<") {
    // For pi << 1_n, rho |-> {rho-special blocks of pi} is a bijection from
    // {rho : pi << rho} onto the block subsets containing the outer block.
    for (int n = 2; n <= 6; ++n) {
        auto nc = enumerate_nc(n);
        NcPartition one = make_partition(n, std::vector<std::vector<int>>{[n] {
            std::vector<int> b;
            for (int e = 1; e <= n; ++e) b.push_back(e);
            return b;
        }()});
        for (const auto& pi : nc) {
            if (!ll_leq(pi, one)) continue;
            std::set<std::vector<std::size_t>> images;
            int count = 0;
            for (const auto& rho : nc) {
                if (!ll_leq(pi, rho)) continue;
                auto sp = special_blocks(pi, rho);
                CHECK(std::find(sp.begin(), sp.end(), 0u) != sp.end());  // V0 = block of 1
                images.insert(sp);
                ++count;
            }
            CHECK(images.size() == static_cast<std::size_t>(count));
            CHECK(count == 1 << (pi.blocks.size() - 1));
        }
    }
}

TEST_CASE("special_colouring demands pi << rho") {
    NcPartition pi = make_partition(4, {{1, 2}, {3, 4}});
    NcPartition rho = make_partition(4, {{1, 4}, {2, 3}});
    CHECK_THROWS_AS(special_colouring(pi, rho), std::domain_error);
    NcPartition hull = interval_hull(pi);
    CHECK(special_colouring(pi, hull) == Colouring{1, 1});
}

TEST_CASE("special colouring marks non-endpoint blocks 2") {
    NcPartition pi = make_partition(5, {{1, 5}, {2, 4}, {3}});
    NcPartition one = make_partition(5, {{1, 2, 3, 4, 5}});
    CHECK(special_colouring(pi, one) == Colouring{1, 2, 2});
    CHECK(special_colouring(pi, pi) == Colouring{1, 1, 1});
}

TEST_CASE("make_partition validates structure") {
    CHECK_THROWS_AS(make_partition(4, {{1, 3}, {2, 4}}), std::domain_error);  // crossing
    CHECK_THROWS_AS(make_partition(3, {{1, 2}}), std::domain_error);          // not a cover
    CHECK_THROWS_AS(make_partition(3, {{1, 2}, {2, 3}}), std::domain_error);  // overlap
    CHECK_THROWS_AS(make_partition(2, {{1}, {}, {2}}), std::domain_error);    // empty block
    CHECK(make_partition(3, {{3}, {1, 2}}).str() == "{1,2}{3}");
}
