#include "knights/search_oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "knights/metrics.hpp"

namespace kt {

namespace {

struct Graph {
    std::vector<Cell> cells;
    std::vector<std::vector<int>> adj;
    std::vector<char> boundary;
};

Graph make_graph(const BoardDims& dims, const Leaper& leaper, const std::vector<Cell>& missing) {
    if (dims.dim() != 2) throw UnsupportedDims("oracle works on 2D boards");
    Graph g;
    std::vector<int> id(static_cast<std::size_t>(dims.size()), -1);
    for (long long k = 0; k < dims.size(); ++k) {
        Cell c = dims.unlinear(k);
        if (std::find(missing.begin(), missing.end(), c) != missing.end()) continue;
        id[k] = static_cast<int>(g.cells.size());
        g.cells.push_back(c);
        g.boundary.push_back(c[0] == 0 || c[1] == 0 || c[0] == dims[0] - 1 || c[1] == dims[1] - 1);
    }
    g.adj.resize(g.cells.size());
    for (std::size_t i = 0; i < g.cells.size(); ++i)
        for (const Cell& n : neighbors(g.cells[i], dims, leaper))
            if (int j = id[dims.linear(n)]; j >= 0) g.adj[i].push_back(j);
    return g;
}

// Hamiltonian cycle backtracking through vertex 0.
class CycleSearch {
public:
    explicit CycleSearch(const Graph& g) : g_(g), n_(static_cast<int>(g.cells.size())), vis_(n_, 0) {}

    // visit(path) is called on every complete cycle; returning false stops the search
    template <class Visit, class Bound>
    bool run(long long budget, Visit&& visit, Bound&& prune) {
        budget_ = budget;
        if (n_ < 3) return true;
        path_ = {0};
        vis_[0] = 1;
        bool done = dfs(visit, prune);
        vis_[0] = 0;
        return done && !truncated_;
    }
    long long nodes() const { return nodes_; }
    bool truncated() const { return truncated_; }
    const std::vector<int>& path() const { return path_; }

private:
    int free_deg(int v) const {
        int d = 0;
        for (int u : g_.adj[v]) d += !vis_[u] || u == 0 || u == path_.back();
        return d;
    }
    bool feasible(int head) const {
        bool start_open = false;
        for (int u : g_.adj[0])
            if (!vis_[u]) start_open = true;
        if (!start_open) return false;
        for (int v : g_.adj[head])
            if (!vis_[v] && free_deg(v) < 2) return false;
        for (int v : g_.adj[path_[path_.size() - 2]])
            if (!vis_[v] && free_deg(v) < 2) return false;
        return true;
    }
    template <class Visit, class Bound>
    bool dfs(Visit& visit, Bound& prune) {
        if (++nodes_ > budget_) {
            truncated_ = true;
            return false;
        }
        int head = path_.back();
        if (static_cast<int>(path_.size()) == n_) {
            if (std::find(g_.adj[head].begin(), g_.adj[head].end(), 0) == g_.adj[head].end()) return true;
            return visit(path_);
        }
        std::vector<int> cand;
        for (int u : g_.adj[head])
            if (!vis_[u]) cand.push_back(u);
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return g_.adj[a].size() < g_.adj[b].size(); });
        for (int u : cand) {
            vis_[u] = 1;
            path_.push_back(u);
            bool go = (static_cast<int>(path_.size()) == n_ || feasible(u)) && !prune(path_);
            bool cont = go ? dfs(visit, prune) : true;
            path_.pop_back();
            vis_[u] = 0;
            if (!cont) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    std::vector<char> vis_;
    std::vector<int> path_;
    long long nodes_ = 0, budget_ = 0;
    bool truncated_ = false;
};

Tour to_tour(const Graph& g, const std::vector<int>& path, const BoardDims& dims, const Leaper& leaper) {
    Tour t{dims, leaper, {}, true};
    for (int v : path) t.cells.push_back(g.cells[v]);
    return t;
}

}  // namespace

long long forced_turns(const BoardDims& dims) {
    long long h = dims[0], w = dims[1];
    if (h <= 2 || w <= 2) return h * w;
    return 2 * (h + w) - 4;
}

std::optional<Tour> find_closed_tour(const BoardDims& dims, const Leaper& leaper,
                                     const std::vector<Cell>& allowed_missing, const OracleLimits& lim) {
    if (dims.size() - static_cast<long long>(allowed_missing.size()) > lim.max_cells_tour)
        throw std::invalid_argument("board too large for the oracle");
    Graph g = make_graph(dims, leaper, allowed_missing);
    if (g.cells.size() < 3) return std::nullopt;
    for (const auto& a : g.adj)
        if (a.size() < 2) return std::nullopt;
    CycleSearch s(g);
    std::optional<Tour> found;
    s.run(
        std::numeric_limits<long long>::max(),
        [&](const std::vector<int>& p) {
            found = to_tour(g, p, dims, leaper);
            return false;
        },
        [](const std::vector<int>&) { return false; });
    return found;
}

MetricResult min_metric_tour(const BoardDims& dims, Metric metric, long long node_budget, const Leaper& leaper,
                             const OracleLimits& lim) {
    if (dims.size() > lim.max_cells_metric) throw std::invalid_argument("board too large for the oracle");
    Graph g = make_graph(dims, leaper, {});
    MetricResult res;
    if (node_budget <= 0) return res;
    const int n = static_cast<int>(g.cells.size());
    auto pt = [&](int v) { return Point{g.cells[v][0], g.cells[v][1]}; };
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> best_path;
    // incremental partial cost, indexed by path length
    std::vector<long long> cost(n + 1, 0);
    std::vector<long long> unvisited_boundary(n + 1, 0);
    long long boundary_total = 0;
    for (char b : g.boundary) boundary_total += b;
    auto turn = [&](int a, int b, int c) {
        Point p = pt(a), q = pt(b), r = pt(c);
        return (q.r - p.r) * (r.c - q.c) - (q.c - p.c) * (r.r - q.r) != 0;
    };
    auto new_cost = [&](const std::vector<int>& p) {
        std::size_t k = p.size();
        if (metric == Metric::Turns) return cost[k - 1] + (k >= 3 && turn(p[k - 3], p[k - 2], p[k - 1]));
        Segment s{pt(p[k - 2]), pt(p[k - 1])};
        long long c = cost[k - 1];
        for (std::size_t i = 0; i + 2 < k - 1; ++i) c += segments_cross({pt(p[i]), pt(p[i + 1])}, s);
        return c;
    };
    auto closing_cost = [&](const std::vector<int>& p) {
        std::size_t k = p.size();
        if (metric == Metric::Turns)
            return cost[k] + turn(p[k - 2], p[k - 1], p[0]) + turn(p[k - 1], p[0], p[1]);
        Segment s{pt(p[k - 1]), pt(p[0])};
        long long c = cost[k];
        for (std::size_t i = 1; i + 2 < k; ++i) c += segments_cross({pt(p[i]), pt(p[i + 1])}, s);
        return c;
    };
    CycleSearch s(g);
    unvisited_boundary[1] = boundary_total - g.boundary[0];
    bool exhausted = s.run(
        node_budget,
        [&](const std::vector<int>& p) {
            long long c = closing_cost(p);
            if (c < best) {
                best = c;
                best_path = p;
            }
            return true;
        },
        [&](const std::vector<int>& p) {
            std::size_t k = p.size();
            cost[k] = new_cost(p);
            unvisited_boundary[k] = unvisited_boundary[k - 1] - g.boundary[p[k - 1]];
            long long lb = cost[k];
            // boundary cells strictly inside the path already carry their turn in cost
            if (metric == Metric::Turns) lb += unvisited_boundary[k];
            return lb >= best;
        });
    res.nodes = s.nodes();
    res.optimal = exhausted;
    if (!best_path.empty()) {
        res.best = to_tour(g, best_path, dims, leaper);
        res.value = best;
    }
    return res;
}

}  // namespace kt
