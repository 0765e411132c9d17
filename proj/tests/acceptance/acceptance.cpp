// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   edgemagic_acceptance [--fixtures PATH] [--recompute] [--write-fixtures PATH] [--jobs N]
//
// Criterion 5 compares the search engine against a naive permutation oracle.
// The naive results are cached in the fixture file; --recompute ignores the
// cache and runs the naive oracle live.

#include <edgemagic/caterpillar_labeler.hpp>
#include <edgemagic/constellation_labeler.hpp>
#include <edgemagic/io.hpp>
#include <edgemagic/search.hpp>

#include "../support/oracles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace edgemagic;
using nlohmann::json;

namespace {
    using Clock = std::chrono::steady_clock;

    struct Check {
        bool ok = true;
        std::ostringstream failures;
        int reported = 0;

        void expect(bool condition, const std::string & what)
        {
            if (condition)
                return;
            ok = false;
            if (reported++ < 5)
                failures << "\n      " << what;
        }
    };

    bool report(int number, const std::string & title, Check & check, Clock::time_point started, double limit_seconds,
        const std::string & detail = {})
    {
        double seconds = std::chrono::duration<double>(Clock::now() - started).count();
        check.expect(seconds < limit_seconds, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
        std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title << " (" << std::fixed
                  << std::setprecision(2) << seconds << " s" << (detail.empty() ? "" : ", " + detail) << ")"
                  << check.failures.str() << std::endl;
        return check.ok;
    }

    std::set<int> as_set(const std::vector<int> & v) { return {v.begin(), v.end()}; }

    // ---- criterion 1 -------------------------------------------------------

    bool diagram_reproduction()
    {
        auto started = Clock::now();
        Check check;
        auto army = Army::uniform(3, 4, 5);
        auto g = build_army(army);
        auto t = army_labeling(army);

        std::map<std::tuple<char, int, int>, int> named;
        for (int id = 1; id <= g.n; ++id) {
            auto role = g.role(id);
            named[{role.kind == RoleKind::UPart ? 'u' : 'v', role.component, role.index}] = t.vertex_labels[id - 1];
        }
        for (int e = 0; e < g.m(); ++e)
            named[{'e', g.edge_component[e], g.edge_order[e]}] = t.edge_labels[e];

        // Rows of the reference table: u_i block, edge block of C_a, v block of C_b.
        const int rows[5][5] = {{1, 3, 4, 4, 10}, {14, 5, 17, 5, 23}, {27, 2, 30, 1, 36}, {40, 4, 43, 2, 49}, {53, 1, 56, 3, 62}};
        int matched = 0;
        for (int i = 1; i <= 5; ++i) {
            auto & row = rows[i - 1];
            for (int j = 1; j <= 3; ++j)
                matched += named.at({'u', i, j}) == row[0] + j - 1;
            for (int j = 1; j <= 6; ++j)
                matched += named.at({'e', row[1], j}) == row[2] + j - 1;
            for (int j = 1; j <= 4; ++j)
                matched += named.at({'v', row[3], j}) == row[4] + j - 1;
        }
        check.expect(matched == 65, std::to_string(matched) + " of 65 labels match");
        check.expect(named.at({'u', 1, 1}) == 1, "f(u11)");
        check.expect(named.at({'v', 4, 1}) == 10, "f(v41)");
        check.expect(named.at({'e', 3, 1}) == 4, "f(e31)");
        check.expect(named.at({'e', 5, 6}) == 22, "f(e56)");
        check.expect(named.at({'u', 5, 1}) == 53, "f(u51)");
        check.expect(named.at({'v', 3, 4}) == 65, "f(v34)");
        auto verdict = verify_edge_magic(g, t);
        check.expect(verdict.ok() && verdict.magic_constant == 98, "verifier: " + verdict.message);
        return report(1, "five type-(3,4) caterpillars match the reference labels, k = 98", check, started, 1.0,
            std::to_string(matched) + "/65 labels");
    }

    // ---- criterion 2 -------------------------------------------------------

    bool magic_constant_formula(std::mt19937 & rng)
    {
        auto started = Clock::now();
        Check check;
        int armies = 0;
        for (int r = 1; r <= 5; ++r)
            for (int s = r; s <= 5; ++s) {
                auto shapes = enumerate_caterpillar_shapes(r, s);
                std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
                for (int p : {1, 3, 5, 7})
                    for (int sample = 0; sample < 3; ++sample) {
                        std::vector<CaterpillarShape> chosen;
                        for (int i = 0; i < p; ++i)
                            chosen.push_back(shapes[pick(rng)]);
                        Army army(std::move(chosen));
                        auto g = build_army(army);
                        auto t = army_labeling(army);
                        const int x = 2 * (r + s) - 1;
                        std::vector<int> all = t.vertex_labels;
                        all.insert(all.end(), t.edge_labels.begin(), t.edge_labels.end());
                        std::sort(all.begin(), all.end());
                        bool bijective = static_cast<int>(all.size()) == x * p;
                        for (std::size_t idx = 0; bijective && idx < all.size(); ++idx)
                            bijective = all[idx] == static_cast<int>(idx) + 1;
                        const int k = 4 * r + 2 * s + ((3 * p - 3) / 2) * x;
                        bool sums = true;
                        for (int e = 0; e < g.m(); ++e)
                            sums = sums && t.vertex_labels[g.edges[e].u - 1] + t.vertex_labels[g.edges[e].v - 1] + t.edge_labels[e] == k;
                        auto tag = "(r,s,p)=(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(p) + ")";
                        check.expect(bijective, tag + " labels are not a bijection onto 1..xp");
                        check.expect(sums, tag + " edge sums differ from " + std::to_string(k));
                        ++armies;
                    }
            }
        return report(2, "army labelings are bijective with k = 4r+2s+((3p-3)/2)x", check, started, 10.0,
            std::to_string(armies) + " armies");
    }

    // ---- criterion 3 -------------------------------------------------------

    bool constellation_construction(std::vector<std::pair<ForestGraph, VertexLabeling>> & produced)
    {
        auto started = Clock::now();
        Check check;
        int instances = 0;
        for (auto & entry : enumerate_odd_constellations(12)) {
            if (! entry.symmetric)
                continue;
            ++instances;
            auto c = symmetric_order(entry.sizes);
            auto standard = standard_vertex_labeling(c);
            auto t = extend_vertex_labeling(standard.graph, standard.labeling);
            auto verdict = verify_super_edge_magic(standard.graph, t);
            std::string tag = "sizes " + json(c.sizes()).dump();
            check.expect(verdict.ok(), tag + ": " + verdict.message);
            for (int i = 1; i <= c.p(); ++i)
                check.expect(standard.labeling(i) == i, tag + ": center label");
            if (standard.graph.m() > 0) {
                auto sums = vertex_sum_check(standard.graph, standard.labeling);
                check.expect(sums.min_sum == c.r() + c.p() + 1, tag + ": minimum vertex sum");
                check.expect(verdict.magic_constant == 2 * c.vertex_count() + c.r() + 1, tag + ": k != 2n+r+1");
            }
            produced.emplace_back(standard.graph, standard.labeling);
        }
        auto seven = Constellation({1, 2, 3, 9, 3, 2, 1});
        auto g = build_constellation(seven);
        auto verdict = verify_super_edge_magic(g, standard_labeling(seven));
        check.expect(g.n == 28 && verdict.ok() && verdict.magic_constant == 61, "p=7, n=28 instance: k != 61");
        return report(3, "standard labelings for all odd symmetric constellations with n <= 12; p=7, n=28 gives k = 61", check,
            started, 30.0, std::to_string(instances) + " constellations");
    }

    // ---- criterion 4 -------------------------------------------------------

    bool sums_round_trip(const std::vector<std::pair<ForestGraph, VertexLabeling>> & produced, std::mt19937 & rng)
    {
        auto started = Clock::now();
        Check check;
        auto round_trip = [&](const ForestGraph & g, const VertexLabeling & vl, const std::string & tag) {
            auto sums = vertex_sum_check(g, vl);
            check.expect(sums.consecutive, tag + ": sums not consecutive");
            auto t = extend_vertex_labeling(g, vl);
            auto verdict = verify_super_edge_magic(g, t);
            check.expect(verdict.ok(), tag + ": " + verdict.message);
            if (g.m() > 0)
                check.expect(verdict.magic_constant == *sums.min_sum + g.n + g.m(), tag + ": k != min(L)+n+m");
        };
        for (auto & [g, vl] : produced)
            round_trip(g, vl, "constructed n=" + std::to_string(g.n));

        int random = 0;
        for (int attempt = 0; random < 100 && attempt < 1'000'000; ++attempt) {
            const int n = std::uniform_int_distribution<int>(2, 10)(rng);
            auto g = oracle::random_forest(rng, n, 0.3);
            if (g.m() == 0)
                continue;
            VertexLabeling vl;
            vl.labels.resize(static_cast<std::size_t>(n));
            std::iota(vl.labels.begin(), vl.labels.end(), 1);
            std::shuffle(vl.labels.begin(), vl.labels.end(), rng);
            if (! vertex_sum_check(g, vl).consecutive)
                continue;
            round_trip(g, vl, "random forest n=" + std::to_string(n));
            ++random;
        }
        check.expect(random == 100, "only " + std::to_string(random) + " random consecutive-sum labelings drawn");

        // Converse: every labeling the oracle finds restricts to consecutive sums.
        int converse = 0;
        SearchOptions all;
        all.all_constants = true;
        for (auto & [name, g] : oracle::forest_corpus(10)) {
            auto found = search_super_edge_magic(g, {}, all);
            if (! found.labeling)
                continue;
            ++converse;
            check.expect(vertex_sum_check(g, found.labeling->vertices()).consecutive, name + ": oracle labeling fails the sum check");
        }
        return report(4, "extend/verify round trip; oracle labelings restrict to consecutive sums", check, started, 30.0,
            std::to_string(produced.size()) + " constructed, " + std::to_string(random) + " random, "
                + std::to_string(converse) + " oracle labelings");
    }

    // ---- criterion 5 -------------------------------------------------------

    json naive_fixture(const std::vector<oracle::CorpusForest> & corpus)
    {
        json doc;
        doc["limit"] = 10;
        doc["forests"] = json::array();
        for (auto & [name, g] : corpus) {
            auto naive = oracle::naive_magic_constants(g);
            doc["forests"].push_back({{"name", name}, {"n", g.n}, {"m", g.m()},
                {"edge_magic", std::vector<int>(naive.edge_magic.begin(), naive.edge_magic.end())},
                {"super_edge_magic", std::vector<int>(naive.super_edge_magic.begin(), naive.super_edge_magic.end())}});
        }
        return doc;
    }

    bool oracle_cross_validation(const std::string & fixture_path, bool recompute, int jobs)
    {
        auto started = Clock::now();
        Check check;
        auto corpus = oracle::forest_corpus(10);

        json fixture;
        std::string source = "cached fixture";
        if (! recompute) {
            std::ifstream in(fixture_path);
            if (in)
                fixture = json::parse(in);
        }
        if (fixture.is_null()) {
            fixture = naive_fixture(corpus);
            source = "live naive oracle";
        }
        std::map<std::string, json> expected;
        for (auto & entry : fixture["forests"])
            expected[entry["name"].get<std::string>()] = entry;
        check.expect(expected.size() == corpus.size(),
            "fixture has " + std::to_string(expected.size()) + " forests, corpus " + std::to_string(corpus.size()));

        SearchOptions all;
        all.all_constants = true;
        all.jobs = jobs;
        int compared = 0;
        for (auto & [name, g] : corpus) {
            auto it = expected.find(name);
            if (it == expected.end()) {
                check.expect(false, name + " missing from fixture");
                continue;
            }
            auto sem = search_super_edge_magic(g, {}, all);
            auto em = search_edge_magic(g, {}, all);
            auto want_sem = it->second["super_edge_magic"].get<std::vector<int>>();
            auto want_em = it->second["edge_magic"].get<std::vector<int>>();
            check.expect(sem.feasible_constants() == want_sem, name + ": super edge-magic constants differ");
            check.expect(em.feasible_constants() == want_em, name + ": edge-magic constants differ");
            check.expect((sem.outcome == SearchOutcome::Found) == ! want_sem.empty(), name + ": super verdict");
            check.expect((em.outcome == SearchOutcome::Found) == ! want_em.empty(), name + ": edge-magic verdict");
            if (sem.labeling)
                check.expect(verify_super_edge_magic(g, *sem.labeling).ok(), name + ": super witness does not verify");
            if (em.labeling)
                check.expect(verify_edge_magic(g, *em.labeling).ok(), name + ": witness does not verify");
            ++compared;
        }

        // Constructive labelings small enough for the corpus must be feasible there too.
        int constructive = 0;
        auto confirm = [&](const ForestGraph & g, const TotalLabeling & t, SearchMode mode, const std::string & tag) {
            if (g.n + g.m() > 10 || g.m() == 0)
                return;
            SearchBudget budget;
            budget.mode = mode;
            SearchOptions options;
            options.only_constant = t.magic_constant;
            auto result = search_labeling(g, budget, options);
            check.expect(result.outcome == SearchOutcome::Found, tag + ": oracle does not confirm constant");
            ++constructive;
        };
        for (int r = 1; r <= 5; ++r)
            for (int s = r; s <= 5; ++s)
                for (int p : {1, 3, 5, 7}) {
                    auto army = Army::uniform(r, s, p);
                    confirm(build_army(army), army_labeling(army), SearchMode::EdgeMagic, "army");
                }
        for (auto & entry : enumerate_odd_constellations(10))
            if (entry.symmetric) {
                auto c = symmetric_order(entry.sizes);
                confirm(build_constellation(c), standard_labeling(c), SearchMode::SuperEdgeMagic, "constellation");
            }
        return report(5, "search matches the naive permutation oracle on all forests with n+m <= 10", check, started, 600.0,
            std::to_string(compared) + " forests vs " + source + ", " + std::to_string(constructive) + " constructive labelings confirmed");
    }

    // ---- criterion 6 -------------------------------------------------------

    bool lee_kong_scan(int jobs)
    {
        auto started = Clock::now();
        Check check;
        SearchOptions options;
        options.jobs = jobs;
        auto records = scan_lee_kong(11, SearchBudget{}, options);
        int found = 0, symmetric = 0;
        for (auto & record : records) {
            auto tag = json(record.sizes).dump();
            if (record.outcome == SearchOutcome::ExhaustedInfeasible)
                check.expect(false, "COUNTEREXAMPLE CANDIDATE " + tag + " (re-verified: "
                        + (record.reverified_infeasible.value_or(false) ? "yes" : "no") + ")");
            check.expect(record.outcome != SearchOutcome::BudgetExceeded, tag + ": budget exhausted");
            found += record.outcome == SearchOutcome::Found;
            if (record.symmetric) {
                ++symmetric;
                check.expect(record.agrees.value_or(false), tag + ": construction and oracle disagree");
            }
        }
        return report(6, "every odd constellation with n <= 11 is super edge-magic", check, started, 600.0,
            std::to_string(found) + "/" + std::to_string(records.size()) + " found, " + std::to_string(symmetric)
                + " symmetric cross-checked");
    }

    // ---- criterion 7 -------------------------------------------------------

    bool well_behaved_property()
    {
        auto started = Clock::now();
        Check check;
        int labelings = 0;
        for (int r = 1; r <= 7; ++r)
            for (int s = r; r + s <= 8; ++s)
                for (auto & shape : enumerate_caterpillar_shapes(r, s)) {
                    auto cat = build_caterpillar(shape);
                    const int sizes[3] = {r, s, r + s - 1};
                    // Start offsets for the u, v and edge blocks on a grid; skip overlaps.
                    for (int a = 1; a <= 30; a += 4)
                        for (int b = 1; b <= 30; b += 3)
                            for (int c = 1; c <= 30; c += 5) {
                                const int starts[3] = {a, b, c};
                                bool disjoint = true;
                                for (int x = 0; x < 3; ++x)
                                    for (int y = x + 1; y < 3; ++y)
                                        disjoint = disjoint
                                            && (starts[x] + sizes[x] <= starts[y] || starts[y] + sizes[y] <= starts[x]);
                                if (! disjoint)
                                    continue;
                                TotalLabeling t;
                                for (int id = 1; id <= cat.n; ++id) {
                                    auto role = cat.role(id);
                                    t.vertex_labels.push_back((role.kind == RoleKind::UPart ? a : b) + role.index - 1);
                                }
                                for (int e = 0; e < cat.m(); ++e)
                                    t.edge_labels.push_back(c + cat.edge_order[e] - 1);
                                if (! is_well_behaved(cat, t)) {
                                    check.expect(false, "grid labeling not recognized as well-behaved");
                                    continue;
                                }
                                std::set<int> sums;
                                for (int e = 0; e < cat.m(); ++e)
                                    sums.insert(
                                        t.vertex_labels[cat.edges[e].u - 1] + t.vertex_labels[cat.edges[e].v - 1] + t.edge_labels[e]);
                                check.expect(sums.size() == 1, "well-behaved labeling of " + shape.to_string() + " is not magic");
                                ++labelings;
                            }
                }
        return report(7, "well-behaved caterpillar labelings have constant edge sums", check, started, 10.0,
            std::to_string(labelings) + " labelings");
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"edgemagic acceptance suite"};
    std::string fixtures = EDGEMAGIC_FIXTURE_PATH;
    std::string write_fixtures;
    bool recompute = false;
    int jobs = 1;
    unsigned seed = 20261016;
    app.add_option("--fixtures", fixtures, "naive-oracle fixture file");
    app.add_flag("--recompute", recompute, "run the naive oracle instead of reading the fixture");
    app.add_option("--write-fixtures", write_fixtures, "regenerate the naive-oracle fixture and exit");
    app.add_option("--jobs", jobs, "search worker threads");
    app.add_option("--seed", seed, "seed for sampled inputs");
    CLI11_PARSE(app, argc, argv);

    if (! write_fixtures.empty()) {
        std::ofstream out(write_fixtures);
        out << naive_fixture(oracle::forest_corpus(10)).dump(1) << "\n";
        return out ? 0 : 1;
    }

    std::mt19937 rng(seed);
    std::vector<std::pair<ForestGraph, VertexLabeling>> produced;
    bool ok = true;
    ok &= diagram_reproduction();
    ok &= magic_constant_formula(rng);
    ok &= constellation_construction(produced);
    ok &= sums_round_trip(produced, rng);
    ok &= oracle_cross_validation(fixtures, recompute, jobs);
    ok &= lee_kong_scan(jobs);
    ok &= well_behaved_property();
    std::cout << (ok ? "all acceptance criteria passed" : "ACCEPTANCE FAILED") << std::endl;
    return ok ? 0 : 1;
}
