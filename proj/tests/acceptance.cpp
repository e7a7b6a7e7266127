// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "knights/builder2d.hpp"
#include "knights/crossing_bound.hpp"
#include "knights/gadgets.hpp"
#include "knights/giraffe.hpp"
#include "knights/matching.hpp"
#include "knights/metrics.hpp"
#include "knights/multidim.hpp"
#include "knights/odd_symmetric.hpp"
#include "knights/search_oracle.hpp"
#include "knights/validator.hpp"

using namespace kt;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("[%s] %d %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string fmt(const char* f, double a, double b = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

void validity_sweep() {
    auto t0 = Clock::now();
    int bad = 0, boards = 0;
    for (int w = 16; w <= 64; w += 2)
        for (int h = 12; h <= 64; ++h, ++boards)
            if (!validate(build(BoardDims::wh(w, h))).ok()) ++bad;
    double s = seconds_since(t0);
    report(1, bad == 0 && s < 30.0,
           std::to_string(boards) + " boards, " + std::to_string(bad) + " invalid, " + fmt("%.2f s (limit 30 s)", s));
}

void linear_rates(int id, const char* what, std::function<long long(const MetricsReport&)> get, double rate,
                  long long dw) {
    std::vector<double> x, y;
    for (int n = 40; n <= 120; n += 8) {
        x.push_back(n);
        y.push_back(static_cast<double>(get(measure(build(BoardDims::wh(n, n))))));
    }
    double s = slope(x, y);
    std::set<long long> deltas;
    for (int w = 40; w <= 64; w += 2)
        for (int h : {40, 41, 42, 43}) {
            long long a = get(measure(build(BoardDims::wh(w, h))));
            long long b = get(measure(build(BoardDims::wh(w + 8, h))));
            deltas.insert(b - a);
        }
    bool ok = std::abs(s - rate) <= 0.05 && deltas == std::set<long long>{dw};
    std::string d;
    for (long long v : deltas) d += std::to_string(v) + " ";
    report(id, ok, std::string(what) + fmt(" slope %.4f (target %.1f +- 0.05)", s, rate) + ", width+8 deltas { " + d +
                       "} (target " + std::to_string(dw) + ")");
}

void heel() {
    MetricsReport r = sequence_metrics(heel_moves(), FMove::d(-1, 2), FMove::d(1, -2));
    report(4, r.turns == 22 && r.crossings == 32,
           "heel turns " + std::to_string(r.turns) + " (22), crossings " + std::to_string(r.crossings) + " (32)");
}

void lower_bound() {
    ConfigGraph g = build_config_graph();
    MeanCycle m = min_mean_cycle(split_node_weights(g));
    std::mt19937 rng(99);
    int agree = 0;
    for (int it = 0; it < 100; ++it) {
        ConfigGraph r;
        r.n = 2 + static_cast<int>(rng() % 6);
        r.node_w.resize(r.n);
        r.edge_w.assign(static_cast<std::size_t>(r.n) * r.n, 0);
        r.has_edge.assign(static_cast<std::size_t>(r.n) * r.n, 0);
        for (auto& w : r.node_w) w = static_cast<long long>(rng() % 7);
        for (int u = 0; u < r.n; ++u)
            for (int v = 0; v < r.n; ++v)
                if (rng() % 3 == 0) {
                    r.has_edge[u * r.n + v] = 1;
                    r.edge_w[u * r.n + v] = static_cast<long long>(rng() % 9) - 2;
                }
        r.has_edge[(r.n - 1) * r.n] = 1;
        r.has_edge[0 * r.n + r.n - 1] = 1;
        if (min_mean_cycle(split_node_weights(r)).mean == min_mean_cycle_bruteforce(r).mean) ++agree;
    }
    report(5, g.n == 216 && m.mean == Rational(3) && agree == 100,
           std::to_string(g.n) + " nodes, min mean " + m.mean.str() + " (3), Karp agrees on " + std::to_string(agree) +
               "/100 random graphs");
}

void algebra() {
    const char* table[6][6] = {
        {"D", "V", "H", "VH", "HV", "VHV"},  {"V", "D", "VH", "H", "VHV", "HV"},  {"H", "HV", "D", "VHV", "V", "VH"},
        {"VH", "VHV", "V", "HV", "D", "H"},  {"HV", "H", "VHV", "D", "VH", "V"},  {"VHV", "VH", "HV", "V", "H", "D"},
    };
    auto t = cayley_table();
    int match = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) match += t[i][j].word() == table[i][j];
    std::multiset<int> orders;
    for (const auto& e : group_elements()) orders.insert(e.order());
    std::string w = compose(parse_word("VVHHVHHV")).word();
    report(6, match == 36 && w == "D" && orders == std::multiset<int>{1, 2, 2, 2, 3, 3},
           std::to_string(match) + "/36 table entries, VVHHVHHV -> " + w + ", orders {1,2,2,2,3,3} " +
               (orders == std::multiset<int>{1, 2, 2, 2, 3, 3} ? "yes" : "no"));
}

double query_ns(const TourPlan& p, int queries) {
    std::mt19937_64 rng(17);
    std::vector<long long> ks(queries);
    for (auto& k : ks) k = static_cast<long long>(rng() % p.length());
    long long sink = 0;
    auto t0 = Clock::now();
    for (long long k : ks) sink += index_of(p, cell_at(p, k));
    double s = seconds_since(t0);
    if (sink == -1) std::puts("");
    return s * 1e9 / queries;
}

void indexing() {
    bool agree = true;
    for (auto [w, h] : {std::pair{30, 30}, {48, 40}}) {
        TourPlan p = plan(BoardDims::wh(w, h));
        Tour t = build(p);
        for (long long k = 0; k < p.length(); ++k)
            if (cell_at(p, k) != t.cells[k] || index_of(p, t.cells[k]) != k) agree = false;
    }
    TourPlan small = plan(BoardDims::wh(30, 30)), big = plan(BoardDims::wh(300, 300));
    double a = 1e18, b = 1e18;
    for (int rep = 0; rep < 5; ++rep) {
        a = std::min(a, query_ns(small, 200000));
        b = std::min(b, query_ns(big, 200000));
    }
    report(7, agree && b <= 3 * a,
           std::string("materialized agreement ") + (agree ? "yes" : "no") +
               fmt(", query %.0f ns on 30x30, %.0f ns on 300x300", a, b) + fmt(" (ratio %.2f, limit 3)", b / a));
}

void extensions() {
    std::string d;
    bool ok = true;
    auto check = [&](const char* name, bool v) {
        ok = ok && v;
        d += std::string(name) + (v ? " ok " : " BAD ");
    };
    check("12x16x5", validate(build_multidim(BoardDims({12, 16, 5}))).ok());
    check("26^3", validate(build_multidim(BoardDims({26, 26, 26}))).ok());
    Tour odd = build_odd(BoardDims::wh(17, 13));
    bool edge = false;
    for (std::size_t i = 0; i < odd.size(); ++i) {
        const Cell& a = odd.cells[i];
        const Cell& b = odd.cells[(i + 1) % odd.size()];
        edge = edge || (a == Cell(0, 1) && b == Cell(2, 0)) || (a == Cell(2, 0) && b == Cell(0, 1));
    }
    check("odd 17x13", validate(odd, {Cell(0, 0)}).ok() && edge);
    Tour sym = build_symmetric(38);
    check("symmetric 38", validate(sym).ok() && quarter_turn_symmetric(sym));
    check("giraffe 52x30", validate(build_giraffe(BoardDims::wh(52, 30))).ok());
    report(8, ok, d);
}

void oracle() {
    int boards = 0, agree = 0;
    for (int w = 16; w <= 40; w += 2)
        for (int h = 12; h <= 40; ++h, ++boards) {
            Tour t = build(BoardDims::wh(w, h));
            agree += count_crossings(t) == count_crossings_bruteforce(t);
        }
    std::mt19937 rng(4);
    int paths = 0;
    const int d[8][2] = {{1, 2}, {2, 1}, {-1, 2}, {-2, 1}, {1, -2}, {2, -1}, {-1, -2}, {-2, -1}};
    for (int i = 0; i < 200; ++i) {
        Tour t = build(BoardDims::wh(16, 12));
        std::vector<Segment> segs;
        Point p{0, 0};
        for (int s = 0; s < 100; ++s) {
            const int* m = d[rng() % 8];
            Point q{mod(p.r + m[0], 12), mod(p.c + m[1], 16)};
            if (q.r != p.r + m[0] || q.c != p.c + m[1]) continue;
            segs.push_back({p, q});
            p = q;
        }
        auto base = tour_segments(t);
        for (int k = 0; k < 8; ++k) std::swap(base[rng() % base.size()], base[rng() % base.size()]);
        segs.insert(segs.end(), base.begin(), base.begin() + 40);
        paths += count_crossings(segs) == count_crossings_bruteforce(segs);
    }
    bool none46 = !find_closed_tour(BoardDims::wh(6, 4)).has_value();
    bool none36 = !find_closed_tour(BoardDims::wh(6, 3)).has_value();
    report(9, agree == boards && paths == 200 && none46 && none36,
           "fast = quadratic on " + std::to_string(agree) + "/" + std::to_string(boards) + " tours and " +
               std::to_string(paths) + "/200 random paths; no tour on 4x6 " + (none46 ? "yes" : "no") +
               ", 3x6 " + (none36 ? "yes" : "no"));
}

}  // namespace

int main() {
    validity_sweep();
    linear_rates(2, "turns", [](const MetricsReport& m) { return m.turns; }, 9.5, 44);
    linear_rates(3, "crossings", [](const MetricsReport& m) { return m.crossings; }, 13.0, 64);
    heel();
    lower_bound();
    algebra();
    indexing();
    extensions();
    oracle();
    return failures ? 1 : 0;
}
