#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "knights/builder2d.hpp"
#include "knights/crossing_bound.hpp"
#include "knights/giraffe.hpp"
#include "knights/io.hpp"
#include "knights/metrics.hpp"
#include "knights/multidim.hpp"
#include "knights/odd_symmetric.hpp"
#include "knights/search_oracle.hpp"
#include "knights/validator.hpp"

using namespace kt;
using nlohmann::json;

namespace {

struct Invalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw Invalid("not an integer list: " + s);
        }
        if (used != tok.size()) throw Invalid("not an integer list: " + s);
        out.push_back(v);
    }
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Invalid("cannot write " + path);
    f << text;
}

struct BuildArgs {
    int width = 0, height = 0;
    std::string dims, leaper = "1,2", format = "json", out;
    bool odd = false, symmetric = false, metrics = false, mark = false;
    int cell_size = 12;
};

BoardDims board_of(int width, int height, const std::string& dims) {
    if (!dims.empty()) {
        if (width || height) throw Invalid("use either --dims or --width/--height");
        auto v = int_list(dims);
        if (v.size() < 2) throw Invalid("--dims needs at least two values");
        for (int x : v)
            if (x <= 0) throw Invalid("dimensions must be positive");
        return BoardDims(v);
    }
    if (width <= 0 || height <= 0) throw Invalid("board size missing: give --width and --height, or --dims");
    return BoardDims::wh(width, height);
}

Leaper leaper_of(const std::string& s) {
    auto v = int_list(s);
    if (v.size() != 2 || v[0] <= 0 || v[1] <= 0) throw Invalid("--leaper takes a,b with positive a, b");
    return Leaper(v[0], v[1]);
}

int run_build(const BuildArgs& a) {
    const BoardDims dims = board_of(a.width, a.height, a.dims);
    const Leaper l = leaper_of(a.leaper);
    TourFile f;
    if (l == Leaper::giraffe()) {
        if (a.odd || a.symmetric) throw Invalid("--odd-missing-corner and --symmetric are knight options");
        f.tour = build_giraffe(dims);
    } else if (l == Leaper::knight()) {
        if (a.odd && a.symmetric) throw Invalid("--odd-missing-corner and --symmetric exclude each other");
        if (a.symmetric) {
            if (dims.dim() != 2 || dims.width() != dims.height()) throw Invalid("--symmetric needs a square board");
            f.tour = build_symmetric(dims.width());
        } else if (a.odd) {
            f.tour = build_odd(dims);
            f.missing = {Cell(0, 0)};
        } else if (dims.dim() > 2) {
            f.tour = build_multidim(dims);
        } else {
            if (dims.width() % 2 && dims.height() % 2)
                throw UnsupportedDims("odd x odd boards have no closed tour; try --odd-missing-corner");
            f.tour = build(dims);
        }
    } else {
        throw UnsupportedDims("no construction for leaper " + a.leaper);
    }
    if (a.metrics) f.metrics = measure(f.tour);
    if (a.format == "json") emit(to_json(f).dump() + "\n", a.out);
    else if (a.format == "text") emit(to_text(f.tour), a.out);
    else emit(to_svg(f.tour, {a.cell_size, a.mark}), a.out);
    return 0;
}

int run_verify(const std::string& path, bool as_json) {
    json j;
    try {
        if (path.empty() || path == "-") j = json::parse(std::cin);
        else {
            std::ifstream f(path);
            if (!f) throw Invalid("cannot read " + path);
            j = json::parse(f);
        }
    } catch (const json::exception& e) {
        throw Invalid(std::string("bad json: ") + e.what());
    }
    TourFile f = tour_from_json(j);
    const Verdict v = validate(f.tour, f.missing);
    MetricsReport m;
    if (v.ok()) m = measure(f.tour);
    if (as_json) {
        json r{{"ok", v.ok()}, {"violation", name(v.kind)}};
        if (!v.ok()) {
            r["index"] = v.index;
            r["message"] = v.message();
        } else {
            r["metrics"]["turns"] = m.turns;
            r["metrics"]["crossings"] = m.crossings >= 0 ? json(m.crossings) : json(nullptr);
        }
        std::cout << r.dump() << "\n";
    } else if (v.ok()) {
        std::cout << "OK " << f.tour.size() << " cells, turns " << m.turns << ", crossings "
                  << (m.crossings >= 0 ? std::to_string(m.crossings) : "n/a") << "\n";
    } else {
        std::cout << "INVALID " << v.message() << "\n";
    }
    return v.ok() ? 0 : 1;
}

int run_bound(bool as_json) {
    const BoundReport r = crossing_lower_bound();
    if (as_json) {
        json w = json::array();
        for (const auto& c : r.witness) w.push_back(c.str());
        std::cout << json{{"nodes", r.nodes},
                          {"mean", r.mean.str()},
                          {"per_row_per_edge", r.per_row_per_edge.str()},
                          {"coefficient", r.coefficient.str()},
                          {"witness", w}}
                         .dump()
                  << "\n";
        return 0;
    }
    std::cout << "configurations: " << r.nodes << "\n";
    std::cout << "minimum mean crossings per triplet: " << r.mean.str() << "\n";
    std::cout << "witness cycle:";
    for (const auto& c : r.witness) std::cout << ' ' << c.str();
    std::cout << "\n";
    std::cout << "per row per edge: " << r.per_row_per_edge.str() << "\n";
    std::cout << "bound: crossings >= " << r.coefficient.str() << "n - O(1) on an n x n board\n";
    return 0;
}

struct OracleArgs {
    int width = 0, height = 0;
    std::string leaper = "1,2", metric;
    long long budget = 2000000;
    bool json_out = false;
};

int run_oracle(const OracleArgs& a) {
    const BoardDims dims = board_of(a.width, a.height, "");
    const Leaper l = leaper_of(a.leaper);
    json r{{"dims", dims.dims()}};
    if (a.metric.empty()) {
        auto t = find_closed_tour(dims, l);
        r["exists"] = t.has_value();
        if (t) {
            json cells = json::array();
            for (const Cell& c : t->cells) cells.push_back(c.coords());
            r["cells"] = cells;
        }
        if (!a.json_out) {
            std::cout << (t ? "closed tour found" : "no closed tour") << "\n";
            return 0;
        }
    } else {
        if (a.metric != "turns" && a.metric != "crossings") throw Invalid("--metric is turns or crossings");
        auto res = min_metric_tour(dims, a.metric == "turns" ? Metric::Turns : Metric::Crossings, a.budget, l);
        r["metric"] = a.metric;
        r["value"] = res.best ? json(res.value) : json(nullptr);
        r["optimal"] = res.optimal;
        r["nodes"] = res.nodes;
        if (!a.json_out) {
            if (res.best) std::cout << a.metric << " " << res.value << (res.optimal ? " (optimal)" : " (budget hit)") << "\n";
            else std::cout << "no tour found" << (res.optimal ? "" : " (budget hit)") << "\n";
            return 0;
        }
    }
    std::cout << r.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed leaper tours with few turns and crossings"};
    app.require_subcommand(1);

    BuildArgs b;
    auto* build_cmd = app.add_subcommand("build", "construct a closed tour");
    build_cmd->add_option("--width", b.width, "board width");
    build_cmd->add_option("--height", b.height, "board height");
    build_cmd->add_option("--dims", b.dims, "d1,d2,... rows first");
    build_cmd->add_option("--leaper", b.leaper, "a,b (1,2 knight, 1,4 giraffe)");
    build_cmd->add_flag("--odd-missing-corner", b.odd, "odd x odd board without cell (0,0)");
    build_cmd->add_flag("--symmetric", b.symmetric, "tour unchanged by a quarter turn");
    build_cmd->add_option("--format", b.format)->check(CLI::IsMember({"json", "text", "svg"}));
    build_cmd->add_flag("--metrics", b.metrics, "include turns and crossings");
    build_cmd->add_option("--out", b.out, "output file");
    build_cmd->add_option("--cell-size", b.cell_size, "svg pixels per cell")->check(CLI::PositiveNumber);
    build_cmd->add_flag("--mark-crossings", b.mark, "svg: circle every crossing");

    std::string verify_path;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "check a tour file");
    verify_cmd->add_option("file", verify_path, "tour json, - for stdin");
    verify_cmd->add_flag("--json", verify_json);

    bool bound_json = false;
    auto* bound_cmd = app.add_subcommand("bound", "lower bound computations");
    auto* crossings_cmd = bound_cmd->add_subcommand("crossings", "minimum mean crossings along an edge");
    crossings_cmd->add_flag("--json", bound_json);
    bound_cmd->require_subcommand(1);

    OracleArgs o;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search on small boards");
    oracle_cmd->add_option("--width", o.width)->required();
    oracle_cmd->add_option("--height", o.height)->required();
    oracle_cmd->add_option("--leaper", o.leaper);
    oracle_cmd->add_option("--metric", o.metric, "turns or crossings; omit for existence");
    oracle_cmd->add_option("--budget", o.budget, "node limit for --metric");
    oracle_cmd->add_flag("--json", o.json_out);

    int iw = 0, ih = 0;
    long long at = -1;
    std::string cell;
    auto* index_cmd = app.add_subcommand("index", "position lookups without building the tour");
    index_cmd->add_option("--width", iw)->required();
    index_cmd->add_option("--height", ih)->required();
    auto* at_opt = index_cmd->add_option("--at", at, "cell at step K");
    auto* cell_opt = index_cmd->add_option("--cell", cell, "step of cell r,c");
    at_opt->excludes(cell_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*build_cmd) return run_build(b);
        if (*verify_cmd) return run_verify(verify_path, verify_json);
        if (*bound_cmd) return run_bound(bound_json);
        if (*oracle_cmd) return run_oracle(o);
        if (*index_cmd) {
            if (at < 0 && cell.empty()) throw Invalid("give --at K or --cell r,c");
            const TourPlan p = plan(BoardDims::wh(iw, ih));
            if (!cell.empty()) {
                auto v = int_list(cell);
                if (v.size() != 2) throw Invalid("--cell takes r,c");
                std::cout << index_of(p, Cell(v[0], v[1])) << "\n";
            } else {
                const Cell c = cell_at(p, at);
                std::cout << c[0] << ',' << c[1] << "\n";
            }
            return 0;
        }
    } catch (const UnsupportedDims& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
