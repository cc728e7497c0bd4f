#include "oracles/closure_oracle.hpp"
#include "support.hpp"

#include "pert/error.hpp"
#include "pert/poset.hpp"

#include <doctest.h>

using namespace pert;
using test::ones;

namespace {

std::string error_code(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("validate_network accepts a two-activity chain") {
    auto net = validate_network(2, {{1, 2}}, ones(2));
    CHECK(net.size() == 2);
    CHECK(net.covers() == std::vector<Arc>{{1, 2}});
    CHECK(net.successors(1) == std::vector<int>{2});
    CHECK(net.predecessors(2) == std::vector<int>{1});
}

TEST_CASE("validate_network reports each structural error") {
    CHECK(error_code([] { validate_network(2, {{1, 1}}, ones(2)); }) == "SelfLoop");
    CHECK(error_code([] { validate_network(2, {{1, 2}, {1, 2}}, ones(2)); }) == "DuplicateArc");
    CHECK(error_code([] { validate_network(2, {{1, 3}}, ones(2)); }) == "IndexOutOfRange");
    CHECK(error_code([] { validate_network(2, {}, test::costs({"1", "-1/2"})); }) == "NegativeCost");
    CHECK(error_code([] { validate_network(2, {}, ones(3)); }) == "DimensionMismatch");
    CHECK(error_code([] { validate_network(0, {}, {}); }) == "BadParameters");
}

TEST_CASE("cycle and short-cut errors carry their witness") {
    try {
        validate_network(2, {{1, 2}, {2, 1}}, ones(2));
        FAIL("expected CycleDetected");
    } catch (const Error& e) {
        CHECK(e.code() == "CycleDetected");
        CHECK(std::string(e.what()) == "cycle 1 -> 2 -> 1");
    }
    try {
        validate_network(3, {{1, 2}, {2, 3}, {1, 3}}, ones(3));
        FAIL("expected ShortCut");
    } catch (const Error& e) {
        CHECK(e.code() == "ShortCut");
        CHECK(std::string(e.what()) == "arc (1,3) is implied by path 1 -> 2 -> 3");
    }
}

TEST_CASE("normalize flag rewrites short-cuts instead of rejecting") {
    auto net = validate_network(3, {{1, 2}, {2, 3}, {1, 3}}, ones(3), {}, {true});
    CHECK(net.covers() == std::vector<Arc>{{1, 2}, {2, 3}});
}

TEST_CASE("normalize_shortcuts") {
    CHECK(normalize_shortcuts(3, {{1, 2}, {2, 3}, {1, 3}}) == std::vector<Arc>{{1, 2}, {2, 3}});
    CHECK(normalize_shortcuts(2, {{1, 2}}) == std::vector<Arc>{{1, 2}});
    CHECK_THROWS_AS(normalize_shortcuts(2, {{1, 2}, {2, 1}}), Error);

    // Frozen from the brute-force reduction oracle: only (1,6) is redundant.
    std::vector<Arc> arcs{{1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 6}, {4, 5}, {1, 6}};
    std::vector<Arc> expected{{1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 5}, {4, 6}};
    CHECK(oracle::reduction(6, arcs) == expected);
    CHECK(normalize_shortcuts(6, arcs) == expected);
}

TEST_CASE("normalize_shortcuts matches the reduction oracle and keeps reachability") {
    test::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = test::uniform(rng, 1, 8);
        auto arcs = test::random_dag_arcs(n, rng, 0.5);
        auto reduced = normalize_shortcuts(n, arcs);
        CHECK(reduced == oracle::reduction(n, arcs));
        CHECK(oracle::closure(n, reduced) == oracle::closure(n, arcs));
    }
}

TEST_CASE("to_poset computes the reflexive-transitive closure") {
    auto chain = to_poset(test::chain_network(3));
    CHECK(chain.leq(1, 2));
    CHECK(chain.leq(2, 3));
    CHECK(chain.leq(1, 3));
    CHECK_FALSE(chain.leq(3, 1));

    auto anti = to_poset(test::parallel_network(3));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(anti.leq(i, j) == (i == j));

    auto fig = to_poset(test::six_network());
    CHECK(fig.leq(1, 5));  // via 1 < 4 < 5
    CHECK(fig.leq(2, 6));
    CHECK_FALSE(fig.comparable(3, 4));
    CHECK_FALSE(fig.comparable(5, 6));
}

TEST_CASE("to_hasse of total order and antichain") {
    std::vector<char> total{1, 1, 1, 0, 1, 1, 0, 0, 1};
    CHECK(to_hasse(Poset::from_relation(3, total)) == std::vector<Arc>{{1, 2}, {2, 3}});
    std::vector<char> anti{1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(to_hasse(Poset::from_relation(3, anti)).empty());
}

TEST_CASE("Poset::from_relation rejects non-orders") {
    CHECK_THROWS_AS(Poset::from_relation(2, {0, 0, 0, 1}), Error);  // not reflexive
    CHECK_THROWS_AS(Poset::from_relation(2, {1, 1, 1, 1}), Error);  // not antisymmetric
    CHECK_THROWS_AS(Poset::from_relation(3, {1, 1, 0, 0, 1, 1, 0, 0, 1}), Error);  // not transitive
}

TEST_CASE("poset <-> Hasse roundtrip on random DAGs") {
    test::Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = test::uniform(rng, 1, 8);
        auto net = test::random_network(n, rng);
        auto poset = to_poset(net);
        auto covers = to_hasse(poset);
        CHECK(covers == net.covers());
        auto again = validate_network(n, covers, net.costs());
        CHECK(to_poset(again) == poset);

        auto closure = oracle::closure(n, net.covers());
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(poset.leq(i, j) == closure[i][j]);
    }
}

TEST_CASE("linear_extension layers by distance from the bottom") {
    // 1 < 3, 2 < 3
    auto p = to_poset(validate_network(3, {{1, 3}, {2, 3}}, ones(3)));
    CHECK(linear_extension(p).order == std::vector<int>{1, 2, 3});

    auto anti = linear_extension(to_poset(test::parallel_network(3)));
    CHECK(anti.order == std::vector<int>{1, 2, 3});
    CHECK(anti.position == std::vector<int>{1, 2, 3});

    // 3 < 2 < 1
    auto rev = linear_extension(to_poset(validate_network(3, {{3, 2}, {2, 1}}, ones(3))));
    CHECK(rev.order == std::vector<int>{3, 2, 1});
    CHECK(rev.position == std::vector<int>{3, 2, 1});

    // Long and short routes into 3: 4 < 5 < 6 < 3 and 1 < 3 puts 3 last.
    auto mixed = linear_extension(to_poset(validate_network(6, {{1, 3}, {4, 5}, {5, 6}, {6, 3}}, ones(6))));
    CHECK(mixed.order == std::vector<int>{1, 2, 4, 5, 6, 3});
}

TEST_CASE("linear_extension is monotone on random posets") {
    test::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = test::uniform(rng, 1, 8);
        auto p = to_poset(test::random_network(n, rng));
        auto ext = linear_extension(p);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (p.less(i, j)) CHECK(ext.position[static_cast<std::size_t>(i - 1)] < ext.position[static_cast<std::size_t>(j - 1)]);
    }
}

TEST_CASE("maximal_chains") {
    CHECK(maximal_chains(test::chain_network(3)) == SupportFamily{{1, 2, 3}});
    CHECK(maximal_chains(test::parallel_network(3)) == SupportFamily{{1}, {2}, {3}});
    CHECK(maximal_chains(test::six_network()) == test::six_terms());
}

TEST_CASE("maximal_chains cap") {
    // Three layers of width 3 fully connected: 27 paths.
    std::vector<Arc> arcs;
    for (int a = 1; a <= 3; ++a)
        for (int b = 4; b <= 6; ++b) arcs.push_back({a, b});
    for (int b = 4; b <= 6; ++b)
        for (int c = 7; c <= 9; ++c) arcs.push_back({b, c});
    auto net = validate_network(9, arcs, ones(9));
    CHECK(maximal_chains(net).size() == 27);
    CHECK(maximal_chains(net, 27).size() == 27);
    try {
        maximal_chains(net, 26);
        FAIL("expected ChainCapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == "ChainCapExceeded");
        CHECK(e.kind() == ErrorKind::Limit);
    }
}

TEST_CASE("maximal chains are maximal antichain members (oracle)") {
    test::Rng rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = test::uniform(rng, 1, 8);
        auto net = test::random_network(n, rng);
        auto chains = maximal_chains(net);
        CHECK(chains == oracle::maximal_chains(n, oracle::closure(n, net.covers())));
        for (const auto& a : chains)
            for (const auto& b : chains)
                if (a != b) CHECK_FALSE(is_subset(a, b));
    }
}
