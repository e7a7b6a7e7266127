#include "knights/crossing_bound.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace kt {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    num = n / g;
    den = d / g;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num * b.num, a.den * b.den); }

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

std::vector<Segment> TripletConfig::segments(long long row0) const {
    return segments_for(row0, Leaper::knight());
}

std::string TripletConfig::str() const {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (i) s += ' ';
        s += 'D';
        s += static_cast<char>('1' + kDirPairs[pair[i]][0]);
        s += 'D';
        s += static_cast<char>('1' + kDirPairs[pair[i]][1]);
    }
    return s;
}

std::vector<Segment> TripletConfig::segments_for(long long row0, const Leaper& l) const {
    // left-edge moves of a general leaper: (+b,+a) (+a,+b) (-a,+b) (-b,+a)
    const long long a = l.a, b = l.b;
    const long long dirs[4][2] = {{b, a}, {a, b}, {-a, b}, {-b, a}};
    std::vector<Segment> out;
    for (int i = 0; i < 3; ++i)
        for (int k : kDirPairs[pair[i]]) {
            Point p{row0 + i, 0};
            out.push_back({p, {p.r + dirs[k][0], dirs[k][1]}});
        }
    return out;
}

ConfigGraph build_config_graph(const Leaper& leaper) {
    ConfigGraph g;
    g.n = 216;
    g.node_w.resize(216);
    g.edge_w.assign(216 * 216, 0);
    g.has_edge.assign(216 * 216, 1);
    std::vector<std::vector<Segment>> low(216), high(216);
    for (int id = 0; id < 216; ++id) {
        TripletConfig c = TripletConfig::from_id(id);
        low[id] = c.segments_for(0, leaper);
        high[id] = c.segments_for(3, leaper);
        g.node_w[id] = count_crossings_bruteforce(low[id]);
    }
    for (int u = 0; u < 216; ++u)
        for (int v = 0; v < 216; ++v) {
            long long w = 0;
            for (const Segment& s : low[u])
                for (const Segment& t : high[v]) w += segments_cross(s, t);
            g.edge_w[u * 216 + v] = w;
        }
    return g;
}

SplitGraph split_node_weights(const ConfigGraph& g) {
    SplitGraph s;
    s.original = g.n;
    s.n = 2 * g.n;
    for (int v = 0; v < g.n; ++v) s.edges.push_back({v, v + g.n, g.node_w[v]});
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.linked(u, v)) s.edges.push_back({u + g.n, v, g.edge(u, v)});
    return s;
}

std::pair<Rational, std::vector<int>> karp_min_mean(int n, const std::vector<WeightedEdge>& edges) {
    constexpr long long INF = std::numeric_limits<long long>::max() / 4;
    // D[k][v]: cheapest walk of exactly k edges ending at v, from any start
    std::vector<std::vector<long long>> D(n + 1, std::vector<long long>(n, INF));
    std::fill(D[0].begin(), D[0].end(), 0);
    for (int k = 1; k <= n; ++k)
        for (const WeightedEdge& e : edges) {
            if (D[k - 1][e.from] >= INF) continue;
            long long c = D[k - 1][e.from] + e.w;
            if (c < D[k][e.to]) D[k][e.to] = c;
        }
    bool have = false;
    Rational best;
    for (int v = 0; v < n; ++v) {
        if (D[n][v] >= INF) continue;
        bool set = false;
        Rational worst;
        for (int k = 0; k < n; ++k) {
            if (D[k][v] >= INF) continue;
            Rational r(D[n][v] - D[k][v], n - k);
            if (!set || worst < r) { worst = r; set = true; }
        }
        if (set && (!have || worst < best)) { best = worst; have = true; }
    }
    if (!have) throw std::invalid_argument("graph has no cycle");
    // weights shifted by the optimum have no negative cycle; a cycle of tight edges is optimal
    std::vector<long long> pot(n, 0);
    for (int it = 0; it < n; ++it) {
        bool changed = false;
        for (const WeightedEdge& e : edges) {
            long long c = pot[e.from] + e.w * best.den - best.num;
            if (c < pot[e.to]) { pot[e.to] = c; changed = true; }
        }
        if (!changed) break;
    }
    std::vector<std::vector<int>> tight(n);
    for (const WeightedEdge& e : edges)
        if (pot[e.from] + e.w * best.den - best.num == pot[e.to]) tight[e.from].push_back(e.to);
    std::vector<int> color(n, 0), stack, cycle;
    auto dfs = [&](auto&& self, int v) -> bool {
        color[v] = 1;
        stack.push_back(v);
        for (int u : tight[v]) {
            if (color[u] == 1) {
                auto it = std::find(stack.begin(), stack.end(), u);
                cycle.assign(it, stack.end());
                return true;
            }
            if (color[u] == 0 && self(self, u)) return true;
        }
        color[v] = 2;
        stack.pop_back();
        return false;
    };
    for (int v = 0; v < n && cycle.empty(); ++v)
        if (color[v] == 0) dfs(dfs, v);
    if (cycle.empty()) throw std::logic_error("no tight cycle");
    return {best, cycle};
}

MeanCycle min_mean_cycle(const SplitGraph& g) {
    auto [m, cyc] = karp_min_mean(g.n, g.edges);
    MeanCycle out;
    out.mean = m * Rational(2);
    for (int v : cyc)
        if (v < g.original) out.cycle.push_back(v);
    return out;
}

MeanCycle min_mean_cycle_bruteforce(const ConfigGraph& g) {
    if (g.n > 12) throw std::invalid_argument("graph too large for enumeration");
    bool have = false;
    MeanCycle best;
    std::vector<int> path;
    std::vector<char> on(g.n, 0);
    auto dfs = [&](auto&& self, int start, int v, long long w) -> void {
        for (int u = start; u < g.n; ++u) {
            if (!g.linked(v, u)) continue;
            if (u == start) {
                long long tot = w + g.edge(v, u);
                Rational r(tot, static_cast<long long>(path.size()));
                if (!have || r < best.mean) { best = {r, path}; have = true; }
            } else if (!on[u]) {
                on[u] = 1;
                path.push_back(u);
                self(self, start, u, w + g.edge(v, u) + g.node_w[u]);
                path.pop_back();
                on[u] = 0;
            }
        }
    };
    for (int s = 0; s < g.n; ++s) {
        path = {s};
        on[s] = 1;
        dfs(dfs, s, s, g.node_w[s]);
        on[s] = 0;
    }
    if (!have) throw std::invalid_argument("graph has no cycle");
    return best;
}

BoundReport crossing_lower_bound() {
    ConfigGraph g = build_config_graph();
    MeanCycle mc = min_mean_cycle(split_node_weights(g));
    BoundReport r;
    r.nodes = g.n;
    r.mean = mc.mean;
    for (int v : mc.cycle) r.witness.push_back(TripletConfig::from_id(v));
    r.per_row_per_edge = mc.mean * Rational(1, 3);
    r.coefficient = r.per_row_per_edge * Rational(4);
    return r;
}

}  // namespace kt
