// edgemagic: generate forests, label them constructively, verify labelings,
// search small forests exhaustively, scan odd constellations, export DOT.
//
// Exit codes: 0 ok, 1 infeasible, 2 bad input, 3 no constructive labeling for
// this structure, 4 invalid labeling, 5 search budget exhausted.

#include <edgemagic/caterpillar_labeler.hpp>
#include <edgemagic/constellation_labeler.hpp>
#include <edgemagic/io.hpp>
#include <edgemagic/search.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace edgemagic;
using nlohmann::json;

namespace {
    enum Exit { Ok = 0, Infeasible = 1, BadInput = 2, Unsupported = 3, InvalidLabeling = 4, Budget = 5 };

    struct Failure {
        Exit code;
        std::string message;
    };

    std::vector<std::string> split(const std::string & text, char separator)
    {
        std::vector<std::string> parts;
        std::stringstream in(text);
        for (std::string part; std::getline(in, part, separator);)
            parts.push_back(part);
        return parts;
    }

    std::vector<int> parse_ints(const std::string & text, const std::string & what)
    {
        std::vector<int> values;
        for (auto & part : split(text, ',')) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoi(part, &used));
                if (used != part.size())
                    throw std::invalid_argument(part);
            }
            catch (const std::exception &) {
                throw Failure{BadInput, what + ": \"" + part + "\" is not an integer"};
            }
        }
        return values;
    }

    json read_json(const std::string & path)
    {
        std::ifstream in(path);
        if (! in)
            throw Failure{BadInput, "cannot open " + path};
        try {
            return json::parse(in);
        }
        catch (const json::exception & e) {
            throw Failure{BadInput, path + ": " + e.what()};
        }
    }

    ForestGraph read_forest(const std::string & path)
    {
        try {
            return forest_from_json(read_json(path));
        }
        catch (const InputError & e) {
            throw Failure{BadInput, path + ": " + e.what()};
        }
    }

    TotalLabeling read_labeling(const ForestGraph & g, const std::string & path)
    {
        try {
            return labeling_from_json(g, read_json(path));
        }
        catch (const InputError & e) {
            throw Failure{BadInput, path + ": " + e.what()};
        }
    }

    void emit(const std::string & output, const std::string & text)
    {
        if (output.empty() || output == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(output);
        out << text;
        if (! out)
            throw Failure{BadInput, "cannot write " + output};
    }

    struct SearchFlags {
        int jobs = 1;
        std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
        long long budget_ms = SearchBudget{}.max_time.count();

        void attach(CLI::App * command)
        {
            command->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
            command->add_option("--budget-nodes", budget_nodes, "backtracking node limit")->check(CLI::PositiveNumber);
            command->add_option("--budget-ms", budget_ms, "wall-clock limit in milliseconds")->check(CLI::PositiveNumber);
        }
        SearchBudget budget(SearchMode mode) const
        {
            SearchBudget b;
            b.max_nodes = budget_nodes;
            b.max_time = std::chrono::milliseconds(budget_ms);
            b.mode = mode;
            return b;
        }
    };

    ForestGraph stars_forest(const std::vector<int> & sizes)
    {
        std::vector<Edge> edges;
        const int p = static_cast<int>(sizes.size());
        int next = p + 1;
        for (int i = 1; i <= p; ++i)
            for (int j = 0; j < sizes[i - 1]; ++j)
                edges.push_back({i, next++});
        return make_forest(next - 1, std::move(edges));
    }

    // Symmetric multisets become constellations; others stay plain star forests.
    ForestGraph constellation_forest(const std::vector<int> & sizes, bool require_symmetric)
    {
        try {
            return build_constellation(symmetric_order(sizes));
        }
        catch (const ForestError & e) {
            if (e.kind() == ForestErrorKind::NotSymmetric && ! require_symmetric)
                return stars_forest(sizes);
            throw Failure{BadInput, e.what()};
        }
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Edge-magic labelings of constellations and caterpillar armies"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned seed = 1;
    app.add_option("--seed", seed, "seed for randomly drawn shapes");

    // generate
    auto * generate = app.add_subcommand("generate", "write a forest as JSON");
    generate->require_subcommand(1);
    std::string output;
    std::string sizes_text;
    bool require_symmetric = false;
    auto * gen_constellation = generate->add_subcommand("constellation", "a forest of stars");
    gen_constellation->add_option("--sizes", sizes_text, "comma-separated star sizes (edge counts)")->required();
    gen_constellation->add_flag("--require-symmetric", require_symmetric, "reject multisets that are not symmetric");
    gen_constellation->add_option("-o,--output", output, "output file (default stdout)");

    std::string type_text, shapes_text = "default";
    int count = 1;
    auto * gen_army = generate->add_subcommand("army", "a uniform army of caterpillars");
    gen_army->add_option("--type", type_text, "r,s")->required();
    gen_army->add_option("--count", count, "number of caterpillars (odd)")->required();
    gen_army->add_option("--shapes", shapes_text,
        "default | random | comma-separated staircases over U/V, one per caterpillar or one for all");
    gen_army->add_option("-o,--output", output, "output file (default stdout)");

    int path_n = 0;
    auto * gen_path = generate->add_subcommand("path", "a path");
    gen_path->add_option("--n", path_n, "vertex count")->required();
    gen_path->add_option("-o,--output", output, "output file (default stdout)");

    // label
    std::string forest_path, labeling_path;
    auto * label = app.add_subcommand("label", "construct a labeling for a constellation or army");
    label->add_option("forest", forest_path, "forest JSON")->required();
    label->add_option("-o,--output", output, "output file (default stdout)");

    // verify
    bool super = false;
    auto * verify = app.add_subcommand("verify", "check a labeling");
    verify->add_option("forest", forest_path, "forest JSON")->required();
    verify->add_option("labeling", labeling_path, "labeling JSON")->required();
    verify->add_flag("--super", super, "also require vertex labels 1..n");

    // search
    SearchFlags flags;
    bool all_constants = false;
    auto * search = app.add_subcommand("search", "exhaustive search for a labeling");
    search->add_option("forest", forest_path, "forest JSON");
    search->add_option("--sizes", sizes_text, "search a star forest with these sizes instead of a file");
    search->add_flag("--super", super, "super edge-magic labelings only");
    search->add_flag("--all-constants", all_constants, "decide every candidate magic constant");
    search->add_option("-o,--output", output, "output file (default stdout)");
    flags.attach(search);

    // scan
    int max_n = 0, guard = 12;
    auto * scan = app.add_subcommand("scan", "search every odd constellation up to a vertex count");
    scan->add_option("--max-n", max_n, "largest vertex count")->required();
    scan->add_option("--guard", guard, "refuse max-n above this");
    scan->add_option("-o,--output", output, "output file (default stdout)");
    flags.attach(scan);

    // export
    std::string format = "dot";
    auto * exporter = app.add_subcommand("export", "render a labeled forest");
    exporter->add_option("forest", forest_path, "forest JSON")->required();
    exporter->add_option("labeling", labeling_path, "labeling JSON")->required();
    exporter->add_option("--format", format, "output format")->check(CLI::IsMember({"dot"}));
    exporter->add_option("-o,--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return BadInput;
    }

    try {
        if (*gen_constellation) {
            auto g = constellation_forest(parse_ints(sizes_text, "--sizes"), require_symmetric);
            emit(output, forest_to_json(g).dump(2) + "\n");
        }
        else if (*gen_army) {
            auto type = parse_ints(type_text, "--type");
            if (type.size() != 2)
                throw Failure{BadInput, "--type expects r,s"};
            if (count < 1 || count % 2 == 0)
                throw Failure{BadInput, "InvalidArmy: --count must be odd and positive"};
            std::vector<CaterpillarShape> shapes;
            try {
                if (shapes_text == "default")
                    shapes.assign(static_cast<std::size_t>(count), CaterpillarShape::first(type[0], type[1]));
                else if (shapes_text == "random") {
                    auto all = enumerate_caterpillar_shapes(type[0], type[1]);
                    std::mt19937 rng(seed);
                    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
                    for (int i = 0; i < count; ++i)
                        shapes.push_back(all[pick(rng)]);
                }
                else {
                    auto parts = split(shapes_text, ',');
                    if (parts.size() != 1 && parts.size() != static_cast<std::size_t>(count))
                        throw Failure{BadInput, "--shapes needs one staircase or one per caterpillar"};
                    for (int i = 0; i < count; ++i)
                        shapes.push_back(CaterpillarShape::parse(type[0], type[1], parts[parts.size() == 1 ? 0 : i]));
                }
                emit(output, forest_to_json(build_army(Army(std::move(shapes)))).dump(2) + "\n");
            }
            catch (const ForestError & e) {
                throw Failure{BadInput, e.what()};
            }
        }
        else if (*gen_path) {
            try {
                emit(output, forest_to_json(build_path(path_n)).dump(2) + "\n");
            }
            catch (const ForestError & e) {
                throw Failure{BadInput, e.what()};
            }
        }
        else if (*label) {
            auto g = read_forest(forest_path);
            if (g.family == ForestFamily::Constellation) {
                auto t = standard_labeling(Constellation(g.star_sizes));
                emit(output, labeling_to_json(g, t, "super-edge-magic").dump(2) + "\n");
            }
            else if (g.family == ForestFamily::Army) {
                auto t = army_labeling(Army(g.caterpillar_shapes));
                emit(output, labeling_to_json(g, t, "edge-magic").dump(2) + "\n");
            }
            else
                throw Failure{Unsupported,
                    "forest is neither an odd symmetric constellation nor an odd uniform army; try `edgemagic search`"};
        }
        else if (*verify) {
            auto g = read_forest(forest_path);
            auto t = read_labeling(g, labeling_path);
            auto verdict = super ? verify_super_edge_magic(g, t) : verify_edge_magic(g, t);
            if (! verdict)
                throw Failure{InvalidLabeling, std::string(to_string(verdict.error)) + ": " + verdict.message};
            std::cout << (super ? "super-edge-magic" : "edge-magic") << ", k="
                      << (verdict.magic_constant ? std::to_string(*verdict.magic_constant) : std::string("none")) << "\n";
        }
        else if (*search) {
            if (forest_path.empty() == sizes_text.empty())
                throw Failure{BadInput, "search needs exactly one of a forest file or --sizes"};
            ForestGraph g;
            if (! sizes_text.empty()) {
                auto sizes = parse_ints(sizes_text, "--sizes");
                for (int s : sizes)
                    if (s < 0)
                        throw Failure{BadInput, "--sizes: negative star size"};
                g = stars_forest(sizes);
            }
            else
                g = read_forest(forest_path);
            SearchOptions options;
            options.jobs = flags.jobs;
            options.all_constants = all_constants;
            auto report = search_labeling(g, flags.budget(super ? SearchMode::SuperEdgeMagic : SearchMode::EdgeMagic), options);
            emit(output, report_to_json(g, report).dump(2) + "\n");
            if (report.outcome == SearchOutcome::ExhaustedInfeasible)
                return Infeasible;
            if (report.outcome == SearchOutcome::BudgetExceeded)
                return Budget;
        }
        else if (*scan) {
            SearchOptions options;
            options.jobs = flags.jobs;
            std::vector<ScanRecord> records;
            try {
                records = scan_lee_kong(max_n, flags.budget(SearchMode::SuperEdgeMagic), options, guard);
            }
            catch (const std::invalid_argument & e) {
                throw Failure{BadInput, e.what()};
            }
            std::string lines;
            bool infeasible = false, budget = false;
            for (auto & record : records) {
                lines += scan_record_to_json(record).dump() + "\n";
                if (record.outcome == SearchOutcome::ExhaustedInfeasible) {
                    infeasible = true;
                    std::cerr << "COUNTEREXAMPLE CANDIDATE: odd constellation " << json(record.sizes).dump()
                              << " has no super edge-magic labeling (re-verified without symmetry breaking: "
                              << (record.reverified_infeasible.value_or(false) ? "yes" : "no") << ")\n";
                }
                budget = budget || record.outcome == SearchOutcome::BudgetExceeded;
            }
            emit(output, lines);
            if (infeasible)
                return Infeasible;
            if (budget)
                return Budget;
        }
        else if (*exporter) {
            auto g = read_forest(forest_path);
            auto t = read_labeling(g, labeling_path);
            emit(output, export_dot(g, t));
        }
    }
    catch (const Failure & failure) {
        std::cerr << "edgemagic: " << failure.message << "\n";
        return failure.code;
    }
    catch (const std::exception & e) {
        std::cerr << "edgemagic: " << e.what() << "\n";
        return BadInput;
    }
    return Ok;
}
