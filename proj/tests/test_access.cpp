#include <doctest.h>

#include <random>

#include "arcshare/access.hpp"

using namespace arcshare;

namespace {

using Sets = std::vector<std::vector<int>>;

} // namespace

TEST_CASE("threshold basis") {
    AccessStructure g23 = threshold_basis(2, 3);
    CHECK(g23.basis() == Sets{{0, 1}, {0, 2}, {1, 2}});
    CHECK(threshold_basis(3, 3).basis() == Sets{{0, 1, 2}});
    CHECK(threshold_basis(2, 4).basis().size() == 6);
    CHECK_THROWS_AS(threshold_basis(1, 3), Error);
    CHECK_THROWS_AS(threshold_basis(4, 3), Error);
}

TEST_CASE("is_authorized") {
    AccessStructure g = threshold_basis(2, 3);
    CHECK(g.is_authorized({0, 2}));
    CHECK(g.is_authorized({0, 1, 2}));
    CHECK_FALSE(g.is_authorized({}));
    CHECK_FALSE(g.is_authorized({1}));
    CHECK_THROWS_AS(g.is_authorized({3}), Error);
}

TEST_CASE("parallel basis") {
    AccessStructure g = parallel_basis({{0, 1}, {2, 3}}, 2);
    CHECK(g.basis() == Sets{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

    CHECK(parallel_basis({{0}, {1}}, 2).basis() == Sets{{0, 1}});
    CHECK(parallel_basis({{0, 1, 2}, {3, 4, 5}}, 3).basis().size() == 18); // C(6,3) - 2

    CHECK_THROWS_AS(parallel_basis({{0, 1}, {1, 2}}, 2), Error);  // overlap
    CHECK_THROWS_AS(parallel_basis({{0, 1, 2}}, 2), Error);       // one group -> empty basis
}

TEST_CASE("hierarchical basis") {
    CHECK(hierarchical_basis({0}, {1, 2}, 2).basis() == Sets{{0, 1}, {0, 2}});
    CHECK(hierarchical_basis({0, 1}, {2, 3}, 3).basis().size() == 4); // C(4,3) - C(2,3)
    CHECK(hierarchical_basis({0}, {1, 2, 3}, 3).basis() ==
          Sets{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK_THROWS_AS(hierarchical_basis({}, {0, 1}, 2), Error);
    CHECK_THROWS_AS(hierarchical_basis({0}, {0, 1}, 2), Error); // not a partition
}

TEST_CASE("maximal unauthorized sets") {
    CHECK(maximal_unauthorized(threshold_basis(2, 3)) == Sets{{0}, {1}, {2}});
    CHECK(maximal_unauthorized(parallel_basis({{0, 1}, {2, 3}}, 2)) == Sets{{0, 1}, {2, 3}});
    // {0} alone is unauthorized and cannot be extended without becoming
    // authorized, so it is maximal alongside the full lower group
    CHECK(maximal_unauthorized(hierarchical_basis({0}, {1, 2}, 2)) == Sets{{0}, {1, 2}});
}

TEST_CASE("maximal unauthorized sets are maximal, exhaustively") {
    for (const AccessStructure& g :
         {threshold_basis(3, 6), parallel_basis({{0, 1, 2}, {3, 4, 5}}, 3),
          hierarchical_basis({0, 1}, {2, 3, 4, 5}, 3)}) {
        for (const auto& y : maximal_unauthorized(g)) {
            CHECK_FALSE(g.is_authorized(y));
            for (int i = 0; i < g.n_participants(); ++i) {
                if (std::find(y.begin(), y.end(), i) != y.end()) continue;
                std::vector<int> bigger = y;
                bigger.push_back(i);
                CHECK(g.is_authorized(bigger));
            }
        }
    }
}

TEST_CASE("monotonicity of is_authorized") {
    std::mt19937 rng(11);
    AccessStructure g = parallel_basis({{0, 1, 2}, {3, 4}, {5}}, 3);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t mask = rng() % 64;
        std::vector<int> s, bigger;
        for (int i = 0; i < 6; ++i)
            if (mask & (1u << i)) s.push_back(i);
        uint32_t super = mask | (rng() % 64);
        for (int i = 0; i < 6; ++i)
            if (super & (1u << i)) bigger.push_back(i);
        if (g.is_authorized(s)) CHECK(g.is_authorized(bigger));
    }
}

TEST_CASE("model bases are antichains of equal-size sets") {
    for (const AccessStructure& g :
         {parallel_basis({{0, 1}, {2, 3, 4}}, 3), hierarchical_basis({0, 1, 2}, {3, 4}, 3)}) {
        size_t sz = g.basis().front().size();
        for (const auto& b : g.basis()) CHECK(b.size() == sz);
    }
}

TEST_CASE("construction rejects degenerate bases") {
    CHECK_THROWS_AS(AccessStructure(3, {{0}}), Error);               // singleton
    CHECK_THROWS_AS(AccessStructure(3, {{0, 1}, {0, 1, 2}}), Error); // not an antichain
    CHECK_THROWS_AS(AccessStructure(3, {{0, 1}}), Error);            // participant 2 uncovered
    CHECK_THROWS_AS(AccessStructure(3, {}), Error);                  // empty
}
