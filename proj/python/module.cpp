#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knights/builder2d.hpp"
#include "knights/crossing_bound.hpp"
#include "knights/giraffe.hpp"
#include "knights/io.hpp"
#include "knights/matching.hpp"
#include "knights/metrics.hpp"
#include "knights/multidim.hpp"
#include "knights/odd_symmetric.hpp"
#include "knights/search_oracle.hpp"
#include "knights/validator.hpp"

namespace py = pybind11;
using namespace kt;

namespace {

using Coords = std::vector<std::vector<int>>;

Coords coords(const Tour& t) {
    Coords out;
    out.reserve(t.cells.size());
    for (const Cell& c : t.cells) out.push_back(c.coords());
    return out;
}

Tour tour_of(const std::vector<int>& dims, const Coords& cells, std::pair<int, int> leaper, bool closed) {
    Tour t{BoardDims(dims), Leaper(leaper.first, leaper.second), {}, closed};
    for (const auto& c : cells) t.cells.push_back(Cell(c));
    return t;
}

py::dict tour_dict(const Tour& t) {
    py::dict d;
    d["dims"] = t.dims.dims();
    d["leaper"] = std::make_pair(t.leaper.a, t.leaper.b);
    d["closed"] = t.closed;
    d["cells"] = coords(t);
    return d;
}

}  // namespace

PYBIND11_MODULE(_knights, m) {
    m.doc() = "closed leaper tours with few turns and crossings";

    py::register_exception<UnsupportedDims>(m, "UnsupportedDims", PyExc_ValueError);

    m.def("build", [](int width, int height) { return tour_dict(build(BoardDims::wh(width, height))); },
          py::arg("width"), py::arg("height"));
    m.def("build_multidim", [](const std::vector<int>& dims) { return tour_dict(build_multidim(BoardDims(dims))); },
          py::arg("dims"));
    m.def("build_odd", [](int width, int height) { return tour_dict(build_odd(BoardDims::wh(width, height))); },
          py::arg("width"), py::arg("height"));
    m.def("build_symmetric", [](int n) { return tour_dict(build_symmetric(n)); }, py::arg("n"));
    m.def("build_giraffe", [](int width, int height) { return tour_dict(build_giraffe(BoardDims::wh(width, height))); },
          py::arg("width"), py::arg("height"));

    m.def(
        "validate",
        [](const std::vector<int>& dims, const Coords& cells, std::pair<int, int> leaper, bool closed,
           const Coords& missing) {
            std::vector<Cell> miss;
            for (const auto& c : missing) miss.push_back(Cell(c));
            Verdict v = validate(tour_of(dims, cells, leaper, closed), miss);
            return py::make_tuple(v.ok(), v.message());
        },
        py::arg("dims"), py::arg("cells"), py::arg("leaper") = std::make_pair(1, 2), py::arg("closed") = true,
        py::arg("missing") = Coords{});
    m.def(
        "metrics",
        [](const std::vector<int>& dims, const Coords& cells, std::pair<int, int> leaper, bool closed) {
            MetricsReport r = measure(tour_of(dims, cells, leaper, closed));
            py::dict d;
            d["turns"] = r.turns;
            if (r.crossings >= 0) d["crossings"] = r.crossings;
            else d["crossings"] = py::none();
            return d;
        },
        py::arg("dims"), py::arg("cells"), py::arg("leaper") = std::make_pair(1, 2), py::arg("closed") = true);

    m.def("compose", [](const std::string& word) { return GroupElement::from_word(word).word(); }, py::arg("word"));

    m.def("crossing_bound", [] {
        BoundReport r = crossing_lower_bound();
        py::dict d;
        d["nodes"] = r.nodes;
        d["mean"] = std::make_pair(r.mean.num, r.mean.den);
        d["coefficient"] = std::make_pair(r.coefficient.num, r.coefficient.den);
        return d;
    });

    py::class_<TourPlan>(m, "Plan")
        .def(py::init([](int width, int height) { return plan(BoardDims::wh(width, height)); }), py::arg("width"),
             py::arg("height"))
        .def("__len__", &TourPlan::length)
        .def("cell_at", [](const TourPlan& p, long long k) { return cell_at(p, k).coords(); }, py::arg("index"))
        .def("index_of", [](const TourPlan& p, int r, int c) { return index_of(p, Cell(r, c)); }, py::arg("row"),
             py::arg("col"));

    m.def(
        "find_closed_tour",
        [](int width, int height, std::pair<int, int> leaper) -> py::object {
            auto t = find_closed_tour(BoardDims::wh(width, height), Leaper(leaper.first, leaper.second));
            if (!t) return py::none();
            return tour_dict(*t);
        },
        py::arg("width"), py::arg("height"), py::arg("leaper") = std::make_pair(1, 2));

    m.def("giraffe_effect", [](const std::string& seq) {
        if (seq == "U") return giraffe_state_effect(GiraffeSeq::U);
        if (seq == "HEEL") return giraffe_state_effect(GiraffeSeq::Heel);
        if (seq == "FLIPPED_HEEL") return giraffe_state_effect(GiraffeSeq::FlippedHeel);
        throw py::value_error("sequence is U, HEEL or FLIPPED_HEEL");
    });
}
