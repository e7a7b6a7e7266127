#include "knights/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace kt {

using nlohmann::json;

namespace {

json cell_json(const Cell& c) { return c.coords(); }

Cell cell_from(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) throw std::invalid_argument("cell must have " + std::to_string(dim) + " coordinates");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("cell coordinates must be integers");
        v.push_back(x.get<int>());
    }
    return Cell(v);
}

}  // namespace

json to_json(const TourFile& f) {
    json j;
    j["dims"] = f.tour.dims.dims();
    j["leaper"] = {f.tour.leaper.a, f.tour.leaper.b};
    j["closed"] = f.tour.closed;
    json cells = json::array();
    for (const Cell& c : f.tour.cells) cells.push_back(cell_json(c));
    j["cells"] = std::move(cells);
    json missing = json::array();
    for (const Cell& c : f.missing) missing.push_back(cell_json(c));
    j["missing"] = std::move(missing);
    if (f.metrics) {
        j["metrics"]["turns"] = f.metrics->turns;
        if (f.metrics->crossings >= 0) j["metrics"]["crossings"] = f.metrics->crossings;
        else j["metrics"]["crossings"] = nullptr;
    }
    return j;
}

TourFile tour_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("tour document must be an object");
    for (const char* key : {"dims", "leaper", "cells"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing key: ") + key);
    TourFile f;
    std::vector<int> dims;
    for (const auto& x : j.at("dims")) {
        if (!x.is_number_integer() || x.get<int>() <= 0) throw std::invalid_argument("dims must be positive integers");
        dims.push_back(x.get<int>());
    }
    if (dims.size() < 2 || dims.size() > static_cast<std::size_t>(kMaxDim)) throw std::invalid_argument("bad dimension count");
    f.tour.dims = BoardDims(dims);
    const auto& l = j.at("leaper");
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
        throw std::invalid_argument("leaper must be [a, b]");
    f.tour.leaper = Leaper(l[0].get<int>(), l[1].get<int>());
    f.tour.closed = j.value("closed", true);
    const int d = f.tour.dims.dim();
    for (const auto& c : j.at("cells")) f.tour.cells.push_back(cell_from(c, d));
    if (j.contains("missing"))
        for (const auto& c : j.at("missing")) f.missing.push_back(cell_from(c, d));
    if (j.contains("metrics") && j["metrics"].is_object()) {
        MetricsReport m;
        m.turns = j["metrics"].value("turns", 0LL);
        const auto& c = j["metrics"]["crossings"];
        m.crossings = c.is_number_integer() ? c.get<long long>() : -1;
        f.metrics = m;
    }
    return f;
}

std::string to_text(const Tour& t) {
    std::ostringstream out;
    out << "# dims";
    for (int x : t.dims.dims()) out << ' ' << x;
    out << " leaper " << t.leaper.a << ',' << t.leaper.b << (t.closed ? " closed" : " open") << '\n';
    if (t.dims.dim() != 2) {
        for (const Cell& c : t.cells) {
            for (int k = 0; k < c.dim; ++k) out << (k ? " " : "") << c[k];
            out << '\n';
        }
        return out.str();
    }
    const int h = t.dims.height(), w = t.dims.width();
    std::vector<long long> step(static_cast<std::size_t>(h) * w, -1);
    for (std::size_t i = 0; i < t.cells.size(); ++i)
        if (t.dims.contains(t.cells[i])) step[t.dims.linear(t.cells[i])] = static_cast<long long>(i);
    const int width = static_cast<int>(std::to_string(std::max<long long>(1, t.cells.size())).size());
    for (int r = h - 1; r >= 0; --r) {
        for (int c = 0; c < w; ++c) {
            const long long s = step[static_cast<std::size_t>(r) * w + c];
            if (c) out << ' ';
            if (s < 0) out << std::setw(width) << '.';
            else out << std::setw(width) << s;
        }
        out << '\n';
    }
    return out.str();
}

std::string to_svg(const Tour& t, const SvgOptions& opt) {
    if (t.dims.dim() != 2) throw std::invalid_argument("svg output is 2D only");
    if (opt.cell_size <= 0) throw std::invalid_argument("cell size must be positive");
    const int h = t.dims.height(), w = t.dims.width(), s = opt.cell_size;
    auto x = [&](double c) { return (c + 0.5) * s; };
    auto y = [&](double r) { return (h - 0.5 - r) * s; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * s << "\" height=\"" << h * s << "\" viewBox=\"0 0 "
        << w * s << ' ' << h * s << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << std::max(1, s / 10) << "\" points=\"";
    for (std::size_t i = 0; i < t.cells.size(); ++i) out << (i ? " " : "") << x(t.cells[i][1]) << ',' << y(t.cells[i][0]);
    if (t.closed && !t.cells.empty()) out << ' ' << x(t.cells[0][1]) << ',' << y(t.cells[0][0]);
    out << "\"/>\n";
    if (opt.mark_crossings) {
        const auto segs = tour_segments(t);
        for (auto [i, j] : crossing_pairs(segs)) {
            const Segment &a = segs[i], &b = segs[j];
            const double d1r = a.second.r - a.first.r, d1c = a.second.c - a.first.c;
            const double d2r = b.second.r - b.first.r, d2c = b.second.c - b.first.c;
            const double den = d1c * d2r - d1r * d2c;
            const double u = ((b.first.c - a.first.c) * d2r - (b.first.r - a.first.r) * d2c) / den;
            out << "<circle cx=\"" << x(a.first.c + u * d1c) << "\" cy=\"" << y(a.first.r + u * d1r) << "\" r=\""
                << std::max(1.0, s / 5.0) << "\" fill=\"white\" stroke=\"red\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace kt
