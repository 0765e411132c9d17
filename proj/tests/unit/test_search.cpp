#include <doctest.h>

#include <edgemagic/caterpillar_labeler.hpp>
#include <edgemagic/constellation_labeler.hpp>
#include <edgemagic/search.hpp>

#include "../support/oracles.hpp"

#include <algorithm>

using namespace edgemagic;

namespace {
    ForestGraph stars(std::vector<StarSize> sizes)
    {
        // Plain forest of the given stars, in the given order.
        std::vector<Edge> edges;
        const int p = static_cast<int>(sizes.size());
        int next = p + 1;
        for (int i = 1; i <= p; ++i)
            for (int j = 0; j < sizes[i - 1]; ++j)
                edges.push_back({i, next++});
        return make_forest(next - 1, std::move(edges));
    }

    std::set<int> as_set(const std::vector<int> & v) { return {v.begin(), v.end()}; }
}

TEST_CASE("K_{1,2} is super edge-magic with k = 8")
{
    auto report = search_super_edge_magic(stars({2}), {});
    REQUIRE(report.outcome == SearchOutcome::Found);
    CHECK(report.magic_constant() == 8);
    CHECK(verify_super_edge_magic(stars({2}), *report.labeling).magic_constant == 8);
}

TEST_CASE("{0,0,1} is super edge-magic")
{
    auto g = stars({0, 0, 1});
    auto report = search_super_edge_magic(g, {});
    REQUIRE(report.outcome == SearchOutcome::Found);
    CHECK(verify_super_edge_magic(g, *report.labeling).ok());
    CHECK(oracle::naive_magic_constants(g).super_edge_magic.count(*report.magic_constant()) == 1);
}

TEST_CASE("two disjoint edges are neither super edge-magic nor edge-magic")
{
    // Regression fixture: decided by exhaustive search and by the naive oracle.
    auto g = stars({1, 1});
    SearchOptions options;
    options.all_constants = true;
    auto report = search_super_edge_magic(g, {}, options);
    CHECK(report.outcome == SearchOutcome::ExhaustedInfeasible);
    CHECK(oracle::naive_magic_constants(g).super_edge_magic.empty());
    // 1-regular graphs are edge-magic only with an odd number of edges.
    CHECK(search_edge_magic(g, {}).outcome == SearchOutcome::ExhaustedInfeasible);
    CHECK(oracle::naive_magic_constants(g).edge_magic.empty());
}

TEST_CASE("edge-magic search on small graphs")
{
    SearchOptions all;
    all.all_constants = true;

    auto edge = make_forest(2, {{1, 2}});
    auto single = search_edge_magic(edge, {}, all);
    REQUIRE(single.outcome == SearchOutcome::Found);
    CHECK(as_set(single.feasible_constants()) == oracle::naive_magic_constants(edge).edge_magic);
    CHECK(as_set(single.feasible_constants()).count(6) == 1);

    auto three_edges = build_army(Army::uniform(1, 1, 3));
    auto matching = search_edge_magic(three_edges, {}, all);
    REQUIRE(matching.outcome == SearchOutcome::Found);
    CHECK(as_set(matching.feasible_constants()).count(army_magic_constant(1, 1, 3)) == 1);
    CHECK(army_magic_constant(1, 1, 3) == 15);

    auto path = build_path(3);
    auto p3 = search_edge_magic(path, {});
    REQUIRE(p3.outcome == SearchOutcome::Found);
    CHECK(verify_edge_magic(path, *p3.labeling).ok());
}

TEST_CASE("magic constant bounds contain every feasible constant")
{
    for (auto & [name, g] : oracle::forest_corpus(8)) {
        auto naive = oracle::naive_magic_constants(g);
        for (auto mode : {SearchMode::EdgeMagic, SearchMode::SuperEdgeMagic}) {
            auto [low, high] = magic_constant_bounds(g, mode);
            auto & feasible = mode == SearchMode::EdgeMagic ? naive.edge_magic : naive.super_edge_magic;
            for (int k : feasible) {
                CHECK_MESSAGE(k >= low, name);
                CHECK_MESSAGE(k <= high, name);
            }
        }
    }
}

TEST_CASE("search agrees with the naive oracle on forests with n + m <= 8")
{
    SearchOptions all;
    all.all_constants = true;
    for (auto & [name, g] : oracle::forest_corpus(8)) {
        auto naive = oracle::naive_magic_constants(g);
        auto sem = search_super_edge_magic(g, {}, all);
        auto em = search_edge_magic(g, {}, all);
        CHECK_MESSAGE(as_set(sem.feasible_constants()) == naive.super_edge_magic, name);
        CHECK_MESSAGE(as_set(em.feasible_constants()) == naive.edge_magic, name);
        if (sem.labeling)
            CHECK(verify_super_edge_magic(g, *sem.labeling).ok());
        if (em.labeling)
            CHECK(verify_edge_magic(g, *em.labeling).ok());
    }
}

TEST_CASE("symmetry breaking and parallelism never change verdicts")
{
    for (auto & entry : enumerate_odd_constellations(9)) {
        auto g = stars(entry.sizes);
        SearchOptions plain;
        plain.symmetry_breaking = false;
        plain.all_constants = true;
        SearchOptions parallel;
        parallel.jobs = 4;
        parallel.all_constants = true;
        SearchOptions sequential;
        sequential.all_constants = true;

        auto a = search_super_edge_magic(g, {}, sequential);
        auto b = search_super_edge_magic(g, {}, plain);
        auto c = search_super_edge_magic(g, {}, parallel);
        CHECK(a.outcome == b.outcome);
        CHECK(a.outcome == c.outcome);
        CHECK(a.feasible_constants() == b.feasible_constants());
        CHECK(a.feasible_constants() == c.feasible_constants());
        CHECK(a.nodes_visited <= b.nodes_visited);
        // The witness is the first hit in task order regardless of workers.
        CHECK(a.labeling == c.labeling);
    }
}

TEST_CASE("sequential search is deterministic")
{
    auto g = stars({1, 2, 2, 3, 0});
    auto a = search_super_edge_magic(g, {});
    auto b = search_super_edge_magic(g, {});
    CHECK(a.nodes_visited == b.nodes_visited);
    CHECK(a.labeling == b.labeling);
}

TEST_CASE("only_constant restricts the search")
{
    auto c = Constellation({1, 2, 1});
    auto g = build_constellation(c);
    SearchOptions options;
    options.only_constant = predicted_magic_constant(c);
    auto report = search_super_edge_magic(g, {}, options);
    REQUIRE(report.per_constant.size() == 1);
    CHECK(report.per_constant.front().k == predicted_magic_constant(c));
    CHECK(report.outcome == SearchOutcome::Found);
}

TEST_CASE("node budget exhaustion is reported separately from infeasibility")
{
    auto g = build_path(12);
    SearchBudget budget;
    budget.max_nodes = 50;
    auto report = search_edge_magic(g, budget);
    CHECK(report.outcome == SearchOutcome::BudgetExceeded);
    CHECK_FALSE(report.labeling.has_value());

    budget.max_nodes = 0;
    CHECK_THROWS_AS(search_edge_magic(g, budget), std::invalid_argument);
}

TEST_CASE("edgeless forests are found immediately")
{
    auto report = search_super_edge_magic(make_forest(3, {}), {});
    CHECK(report.outcome == SearchOutcome::Found);
    CHECK_FALSE(report.magic_constant().has_value());
}

TEST_CASE("scan over n <= 3")
{
    auto records = scan_lee_kong(3, {});
    REQUIRE(records.size() == 4);
    for (auto & record : records) {
        CHECK(record.outcome == SearchOutcome::Found);
        if (record.symmetric)
            CHECK(record.agrees == true);
    }
    CHECK_THROWS_AS(scan_lee_kong(13, {}), std::invalid_argument);
}

TEST_CASE("every super edge-magic labeling found has consecutive vertex sums")
{
    for (auto & [name, g] : oracle::forest_corpus(9)) {
        auto report = search_super_edge_magic(g, {});
        if (! report.labeling)
            continue;
        auto sums = vertex_sum_check(g, report.labeling->vertices());
        CHECK_MESSAGE(sums.consecutive, name);
        CHECK(*report.magic_constant() == *sums.min_sum + g.n + g.m());
    }
}
