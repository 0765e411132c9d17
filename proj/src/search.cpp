#include <edgemagic/constellation_labeler.hpp>
#include <edgemagic/search.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace edgemagic {

const char * to_string(SearchOutcome outcome)
{
    switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::ExhaustedInfeasible: return "infeasible";
    case SearchOutcome::BudgetExceeded: return "budget";
    }
    return "?";
}

std::vector<int> SearchReport::feasible_constants() const
{
    std::vector<int> result;
    for (auto & c : per_constant)
        if (c.outcome == SearchOutcome::Found)
            result.push_back(c.k);
    return result;
}

namespace {
    long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
    long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

    // Smallest and largest value of sum(weight * label) over bijections of
    // `weights` onto the consecutive labels first..first+|weights|-1.
    std::pair<long long, long long> rearrangement_bounds(std::vector<int> weights, int first)
    {
        std::sort(weights.begin(), weights.end());
        long long low = 0, high = 0;
        const auto size = weights.size();
        for (std::size_t idx = 0; idx < size; ++idx) {
            high += static_cast<long long>(weights[idx]) * (first + static_cast<long long>(idx));
            low += static_cast<long long>(weights[size - 1 - idx]) * (first + static_cast<long long>(idx));
        }
        return {low, high};
    }
}

std::pair<int, int> magic_constant_bounds(const ForestGraph & g, SearchMode mode)
{
    const int n = g.n, m = g.m(), total = n + m;
    if (m == 0)
        return {1, 0};
    auto degrees = g.degrees();
    long long low, high;
    if (mode == SearchMode::EdgeMagic) {
        std::vector<int> weights = degrees;
        weights.insert(weights.end(), static_cast<std::size_t>(m), 1);
        std::tie(low, high) = rearrangement_bounds(weights, 1);
    }
    else {
        auto [vlow, vhigh] = rearrangement_bounds(degrees, 1);
        long long edges = 0;
        for (int label = n + 1; label <= total; ++label)
            edges += label;
        low = vlow + edges;
        high = vhigh + edges;
    }
    long long k_low = std::max<long long>(6, ceil_div(low, m));
    long long k_high = std::min<long long>(3LL * total - 3, floor_div(high, m));
    if (mode == SearchMode::SuperEdgeMagic) {
        // k = a + n + m with a the minimal vertex sum, 3 <= a <= 2n - m.
        k_low = std::max<long long>(k_low, 3 + total);
        k_high = std::min<long long>(k_high, 2LL * n - m + total);
    }
    return {static_cast<int>(k_low), static_cast<int>(k_high)};
}

namespace {
    using Clock = std::chrono::steady_clock;

    struct Problem {
        const ForestGraph * g;
        int n, m, total;
        SearchMode mode;
        int max_vertex_label;
        int min_edge_label;
        std::vector<int> order;
        // Per position: already-placed neighbors (vertex, edge index).
        std::vector<std::vector<std::pair<int, int>>> back_edges;
        // Per position: already-placed vertices this one must be below (true) or above (false).
        std::vector<std::vector<std::pair<int, bool>>> back_precedence;
    };

    std::vector<std::pair<int, int>> symmetry_pairs(const ForestGraph & g)
    {
        std::vector<std::pair<int, int>> less; // f(first) < f(second), 0-based vertices
        auto degrees = g.degrees();
        std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(g.n));
        for (auto & e : g.edges) {
            adjacent[e.u - 1].push_back(e.v - 1);
            adjacent[e.v - 1].push_back(e.u - 1);
        }

        // Pendant leaves sharing a neighbor of degree >= 2.
        for (int v = 0; v < g.n; ++v) {
            if (degrees[v] < 2)
                continue;
            std::vector<int> leaves;
            for (int w : adjacent[v])
                if (degrees[w] == 1)
                    leaves.push_back(w);
            std::sort(leaves.begin(), leaves.end());
            for (std::size_t j = 1; j < leaves.size(); ++j)
                less.emplace_back(leaves[j - 1], leaves[j]);
        }

        // Star components grouped by size, ordered by center label.
        auto component = g.components();
        const int count = g.n == 0 ? 0 : *std::max_element(component.begin(), component.end()) + 1;
        std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
        for (int v = 0; v < g.n; ++v)
            members[component[v]].push_back(v);
        std::map<int, std::vector<int>> centers_by_size;
        for (auto & vs : members) {
            int hubs = 0, center = vs.front();
            for (int v : vs)
                if (degrees[v] >= 2) {
                    ++hubs;
                    center = v;
                }
            if (hubs > 1)
                continue;
            const int size = static_cast<int>(vs.size()) - 1;
            if (size == 1)
                less.emplace_back(vs[0], vs[1]);
            centers_by_size[size].push_back(center);
        }
        for (auto & [size, centers] : centers_by_size) {
            std::sort(centers.begin(), centers.end());
            for (std::size_t j = 1; j < centers.size(); ++j)
                less.emplace_back(centers[j - 1], centers[j]);
        }
        return less;
    }

    Problem make_problem(const ForestGraph & g, SearchMode mode, bool symmetry_breaking)
    {
        Problem problem{&g, g.n, g.m(), g.n + g.m(), mode, 0, 1, {}, {}, {}};
        problem.max_vertex_label = mode == SearchMode::SuperEdgeMagic ? g.n : problem.total;
        problem.min_edge_label = mode == SearchMode::SuperEdgeMagic ? g.n + 1 : 1;

        auto degrees = g.degrees();
        auto component = g.components();
        std::vector<int> component_size(static_cast<std::size_t>(g.n), 0);
        for (int v = 0; v < g.n; ++v)
            ++component_size[component[v]];

        problem.order.resize(static_cast<std::size_t>(g.n));
        std::iota(problem.order.begin(), problem.order.end(), 0);
        std::stable_sort(problem.order.begin(), problem.order.end(), [&](int a, int b) {
            if (degrees[a] != degrees[b])
                return degrees[a] > degrees[b];
            return component_size[component[a]] > component_size[component[b]];
        });

        std::vector<int> position(static_cast<std::size_t>(g.n));
        for (int d = 0; d < g.n; ++d)
            position[problem.order[d]] = d;

        problem.back_edges.resize(static_cast<std::size_t>(g.n));
        for (int e = 0; e < g.m(); ++e) {
            int a = g.edges[e].u - 1, b = g.edges[e].v - 1;
            if (position[a] < position[b])
                std::swap(a, b);
            problem.back_edges[position[a]].emplace_back(b, e);
        }

        problem.back_precedence.resize(static_cast<std::size_t>(g.n));
        if (symmetry_breaking)
            for (auto [low, high] : symmetry_pairs(g)) {
                if (position[low] > position[high])
                    problem.back_precedence[position[low]].emplace_back(high, true);
                else
                    problem.back_precedence[position[high]].emplace_back(low, false);
            }
        return problem;
    }

    struct Task {
        std::size_t constant_index;
        int first_label;
    };

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    struct Shared {
        const Problem & problem;
        const SearchBudget & budget;
        bool all_constants;
        std::vector<int> constants;
        std::vector<Task> tasks;
        Clock::time_point deadline;
        std::uint64_t flush_interval;

        std::atomic<std::size_t> next_task{0};
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> out_of_budget{false};
        std::atomic<std::size_t> first_found_task{none};
        std::vector<std::atomic<std::size_t>> found_task;        // per constant
        std::vector<std::atomic<std::uint64_t>> constant_nodes;  // per constant
        std::vector<std::atomic<bool>> constant_incomplete;      // per constant

        std::mutex witness_mutex;
        std::map<std::size_t, TotalLabeling> witnesses; // by task index

        Shared(const Problem & p, const SearchBudget & b, bool all, std::vector<int> ks) :
            problem(p),
            budget(b),
            all_constants(all),
            constants(std::move(ks)),
            deadline(Clock::now() + b.max_time),
            flush_interval(std::clamp<std::uint64_t>(b.max_nodes / 16, 1, 1024)),
            found_task(constants.size()),
            constant_nodes(constants.size()),
            constant_incomplete(constants.size())
        {
            for (std::size_t c = 0; c < constants.size(); ++c) {
                found_task[c] = none;
                constant_nodes[c] = 0;
                constant_incomplete[c] = false;
                for (int label = 1; label <= problem.max_vertex_label; ++label)
                    tasks.push_back({c, label});
            }
        }

        // True when a task at this index can no longer change the result.
        bool superseded(std::size_t task_index) const
        {
            if (all_constants)
                return found_task[tasks[task_index].constant_index].load(std::memory_order_relaxed) < task_index;
            return first_found_task.load(std::memory_order_relaxed) < task_index;
        }

        void record_found(std::size_t task_index, TotalLabeling labeling)
        {
            {
                std::lock_guard lock(witness_mutex);
                witnesses.emplace(task_index, std::move(labeling));
            }
            auto lower = [](std::atomic<std::size_t> & slot, std::size_t value) {
                auto current = slot.load();
                while (value < current && ! slot.compare_exchange_weak(current, value)) {
                }
            };
            lower(found_task[tasks[task_index].constant_index], task_index);
            lower(first_found_task, task_index);
        }
    };

    class Worker {
    public:
        explicit Worker(Shared & shared) :
            _shared(shared),
            _problem(shared.problem),
            _vertex(static_cast<std::size_t>(_problem.n), 0),
            _edge(static_cast<std::size_t>(_problem.m), 0),
            _used(static_cast<std::size_t>(_problem.total + 1), false)
        {
        }

        void run()
        {
            for (;;) {
                auto index = _shared.next_task.fetch_add(1);
                if (index >= _shared.tasks.size())
                    break;
                auto & task = _shared.tasks[index];
                if (_shared.out_of_budget.load(std::memory_order_relaxed)) {
                    _shared.constant_incomplete[task.constant_index] = true;
                    continue;
                }
                if (_shared.superseded(index))
                    continue;
                run_task(index, task);
            }
        }

    private:
        enum class Stop { No, Budget, Superseded };

        void run_task(std::size_t index, const Task & task)
        {
            _task_index = index;
            _k = _shared.constants[task.constant_index];
            _pending = 0;
            _task_nodes = 0;
            _stop = Stop::No;

            bool found = place(0, task.first_label) && descend(1);
            flush();
            _shared.constant_nodes[task.constant_index] += _task_nodes;
            if (found) {
                TotalLabeling labeling;
                labeling.vertex_labels = _vertex;
                labeling.edge_labels = _edge;
                labeling.magic_constant = _k;
                _shared.record_found(index, std::move(labeling));
            }
            else if (_stop == Stop::Budget)
                _shared.constant_incomplete[task.constant_index] = true;
            std::fill(_used.begin(), _used.end(), false);
        }

        // Labels order[depth] with `label` and derives the edges it closes.
        bool place(int depth, int label)
        {
            if (_used[label])
                return false;
            const int v = _problem.order[depth];
            for (auto [other, below] : _problem.back_precedence[depth])
                if (below ? label > _vertex[other] : label < _vertex[other])
                    return false;

            _used[label] = true;
            _vertex[v] = label;
            std::size_t derived = 0;
            auto & closing = _problem.back_edges[depth];
            for (; derived < closing.size(); ++derived) {
                auto [other, e] = closing[derived];
                int edge_label = _k - label - _vertex[other];
                if (edge_label < _problem.min_edge_label || edge_label > _problem.total || _used[edge_label])
                    break;
                _used[edge_label] = true;
                _edge[e] = edge_label;
            }
            if (derived < closing.size()) {
                unplace(depth, label, derived);
                return false;
            }
            ++_task_nodes;
            if (++_pending == _shared.flush_interval)
                flush();
            return true;
        }

        void unplace(int depth, int label, std::size_t derived)
        {
            auto & closing = _problem.back_edges[depth];
            for (std::size_t j = 0; j < derived; ++j)
                _used[_edge[closing[j].second]] = false;
            _used[label] = false;
        }

        bool descend(int depth)
        {
            if (depth == _problem.n)
                return true;
            if (_stop != Stop::No)
                return false;
            for (int label = 1; label <= _problem.max_vertex_label; ++label) {
                if (! place(depth, label))
                    continue;
                if (descend(depth + 1))
                    return true;
                unplace(depth, label, _problem.back_edges[depth].size());
                if (_stop != Stop::No)
                    return false;
            }
            return false;
        }

        void flush()
        {
            auto total = _shared.nodes.fetch_add(_pending) + _pending;
            _pending = 0;
            if (total > _shared.budget.max_nodes || Clock::now() > _shared.deadline)
                _shared.out_of_budget = true;
            if (_shared.out_of_budget.load(std::memory_order_relaxed))
                _stop = Stop::Budget;
            else if (_shared.superseded(_task_index))
                _stop = Stop::Superseded;
        }

        Shared & _shared;
        const Problem & _problem;
        std::vector<int> _vertex, _edge;
        std::vector<bool> _used;
        std::size_t _task_index = 0;
        int _k = 0;
        std::uint64_t _pending = 0, _task_nodes = 0;
        Stop _stop = Stop::No;
    };
}

SearchReport search_labeling(const ForestGraph & g, const SearchBudget & budget, const SearchOptions & options)
{
    auto started = Clock::now();
    if (auto why = forest_violation(g); ! why.empty())
        throw ForestError(ForestErrorKind::InvalidForest, why);
    if (budget.max_nodes == 0 || budget.max_time.count() <= 0)
        throw std::invalid_argument("search budget limits must be positive");

    SearchReport report;
    auto finish = [&] {
        report.millis = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        return report;
    };

    if (g.m() == 0) {
        TotalLabeling labeling;
        labeling.vertex_labels.resize(static_cast<std::size_t>(g.n));
        std::iota(labeling.vertex_labels.begin(), labeling.vertex_labels.end(), 1);
        report.outcome = SearchOutcome::Found;
        report.labeling = std::move(labeling);
        return finish();
    }
    // Necessary condition for super edge-magic graphs with edges.
    if (budget.mode == SearchMode::SuperEdgeMagic && g.m() > 2 * g.n - 3)
        return finish();

    auto [k_low, k_high] = magic_constant_bounds(g, budget.mode);
    std::vector<int> constants;
    for (int k = k_low; k <= k_high; ++k)
        if (! options.only_constant || *options.only_constant == k)
            constants.push_back(k);
    if (constants.empty())
        return finish();

    auto problem = make_problem(g, budget.mode, options.symmetry_breaking);
    Shared shared(problem, budget, options.all_constants, std::move(constants));

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1)
        Worker(shared).run();
    else {
        std::vector<std::jthread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back([&shared] { Worker(shared).run(); });
    }

    const std::size_t first = shared.first_found_task.load();
    const std::size_t last_constant = options.all_constants || first == none
        ? shared.constants.size() - 1
        : shared.tasks[first].constant_index;
    bool incomplete = false;
    for (std::size_t c = 0; c <= last_constant; ++c) {
        ConstantOutcome outcome{shared.constants[c], SearchOutcome::ExhaustedInfeasible, shared.constant_nodes[c].load()};
        if (shared.found_task[c].load() != none)
            outcome.outcome = SearchOutcome::Found;
        else if (shared.constant_incomplete[c].load()) {
            outcome.outcome = SearchOutcome::BudgetExceeded;
            incomplete = true;
        }
        report.per_constant.push_back(outcome);
    }
    report.nodes_visited = shared.nodes.load();
    if (first != none) {
        report.outcome = SearchOutcome::Found;
        report.labeling = shared.witnesses.at(first);
    }
    else
        report.outcome = incomplete ? SearchOutcome::BudgetExceeded : SearchOutcome::ExhaustedInfeasible;
    return finish();
}

SearchReport search_super_edge_magic(const ForestGraph & g, SearchBudget budget, const SearchOptions & options)
{
    budget.mode = SearchMode::SuperEdgeMagic;
    return search_labeling(g, budget, options);
}

SearchReport search_edge_magic(const ForestGraph & g, SearchBudget budget, const SearchOptions & options)
{
    budget.mode = SearchMode::EdgeMagic;
    return search_labeling(g, budget, options);
}

std::vector<ScanRecord> scan_lee_kong(int max_n, const SearchBudget & budget, const SearchOptions & options, int guard)
{
    if (max_n < 1 || max_n > guard)
        throw std::invalid_argument("scan max_n must lie in 1.." + std::to_string(guard));

    std::vector<ScanRecord> records;
    for (auto & instance : enumerate_odd_constellations(max_n)) {
        ScanRecord record;
        record.sizes = instance.sizes;
        record.symmetric = instance.symmetric;
        record.vertex_count = instance.vertex_count;

        // Any order of the stars gives an isomorphic forest; the symmetric
        // order is only needed for the construction.
        auto g = make_forest(0, {});
        if (instance.symmetric)
            g = build_constellation(symmetric_order(instance.sizes));
        else {
            std::vector<Edge> edges;
            const int p = static_cast<int>(instance.sizes.size());
            int next = p + 1;
            for (int i = 1; i <= p; ++i)
                for (int j = 0; j < instance.sizes[i - 1]; ++j)
                    edges.push_back({i, next++});
            g = make_forest(instance.vertex_count, std::move(edges));
        }

        SearchOptions first_hit = options;
        first_hit.all_constants = false;
        first_hit.only_constant.reset();
        auto report = search_super_edge_magic(g, budget, first_hit);
        record.outcome = report.outcome;
        record.magic_constant = report.magic_constant();
        record.nodes = report.nodes_visited;
        record.millis = report.millis;

        if (report.outcome == SearchOutcome::ExhaustedInfeasible) {
            SearchOptions plain = first_hit;
            plain.symmetry_breaking = false;
            record.reverified_infeasible = search_super_edge_magic(g, budget, plain).outcome == SearchOutcome::ExhaustedInfeasible;
        }

        if (instance.symmetric) {
            auto constellation = symmetric_order(instance.sizes);
            auto labeling = standard_labeling(constellation);
            auto verdict = verify_super_edge_magic(g, labeling);
            record.constructive_constant = labeling.magic_constant;
            bool agrees = verdict.ok();
            if (agrees && labeling.magic_constant) {
                SearchOptions targeted = first_hit;
                targeted.only_constant = labeling.magic_constant;
                agrees = search_super_edge_magic(g, budget, targeted).outcome == SearchOutcome::Found;
            }
            record.agrees = agrees && report.outcome == SearchOutcome::Found;
        }
        records.push_back(std::move(record));
    }
    return records;
}

} // namespace edgemagic
