#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arcnum/arcs.hpp"
#include "arcnum/diagram.hpp"
#include "arcnum/oracle.hpp"
#include "arcnum/render.hpp"
#include "arcnum/stars.hpp"

namespace py = pybind11;

namespace {

arcnum::ChordDiagram parse(const std::string& word) {
    return arcnum::parse_gauss_word(word);
}

py::dict witness_dict(const arcnum::StarWitness& w) {
    py::dict out;
    out["t"] = w.params.t;
    out["a"] = w.params.a;
    out["chords"] = w.crossings;
    out["star"] =
        arcnum::canonical_form(arcnum::subdiagram(w.host, w.crossings).diagram);
    return out;
}

}  // namespace

PYBIND11_MODULE(_arcnum, m) {
    m.doc() = "Arc numbers, minimal embedded partitions and star subdiagram "
              "witnesses for chord diagrams given as Gauss words.";

    m.def("relabel", [](const std::string& word) {
        return arcnum::to_gauss_word(parse(word));
    }, py::arg("word"),
       "Re-emit a Gauss word with chords relabeled by first occurrence.");

    m.def("canonical_form", [](const std::string& word) {
        return arcnum::canonical_form(parse(word));
    }, py::arg("word"),
       "Lexicographically least relabeled rotation; equal iff diagrams are "
       "equivalent.");

    m.def("is_equivalent", [](const std::string& a, const std::string& b) {
        return arcnum::is_equivalent(parse(a), parse(b));
    }, py::arg("a"), py::arg("b"));

    m.def("subdiagram",
          [](const std::string& word, const std::vector<std::string>& chords) {
              const arcnum::Subdiagram sub = arcnum::subdiagram(parse(word), chords);
              return py::make_tuple(arcnum::to_gauss_word(sub.diagram),
                                    sub.position_map);
          },
          py::arg("word"), py::arg("chords"),
          "Induced subdiagram on the named chords; returns (word, position_map).");

    m.def("reach_table", [](const std::string& word) {
        return arcnum::reach_table(parse(word));
    }, py::arg("word"),
       "reach[g]: end gap of the front-maximal properly embedded arc after gap g.");

    m.def("greedy_partition", [](const std::string& word, int start) {
        return arcnum::greedy_partition(parse(word), start).partition.cuts;
    }, py::arg("word"), py::arg("start"),
       "Cut gaps of the greedy partition from the given start gap, in "
       "generation order.");

    m.def("arc_number", [](const std::string& word) {
        return arcnum::arc_number(parse(word));
    }, py::arg("word"),
       "Minimum number of arcs over all embedded partitions.");

    m.def("minimal_partition", [](const std::string& word) {
        return arcnum::sorted_cuts(arcnum::minimal_partition(parse(word)));
    }, py::arg("word"),
       "Sorted cut gaps of a minimal embedded partition.");

    m.def("is_embedded_partition",
          [](const std::string& word, const std::vector<int>& cuts) {
              return arcnum::is_embedded_partition(parse(word), cuts);
          },
          py::arg("word"), py::arg("cuts"));

    m.def("make_star", [](int t, int a) {
        return arcnum::to_gauss_word(arcnum::make_star(t, a));
    }, py::arg("t"), py::arg("a"), "Gauss word of the star S(t,a).");

    m.def("star_truncation", [](int t, int a, int n) {
        return arcnum::to_gauss_word(arcnum::star_truncation(t, a, n));
    }, py::arg("t"), py::arg("a"), py::arg("n"),
       "First n crossings of the star ordering of S(t,a).");

    m.def("make_truncated_star", [](int a, int n) {
        return arcnum::to_gauss_word(arcnum::make_truncated_star(a, n));
    }, py::arg("a"), py::arg("n"),
       "Truncated star on n crossings (independent of t for n <= (a+1)t).");

    m.def("is_star", [](const std::string& word) -> py::object {
        const auto params = arcnum::is_star(parse(word));
        if (!params) return py::none();
        return py::make_tuple(params->t, params->a);
    }, py::arg("word"), "The (t, a) with the diagram equivalent to S(t,a), or None.");

    m.def("extract_star", [](const std::string& word) {
        return witness_dict(arcnum::extract_star(parse(word)));
    }, py::arg("word"),
       "Star subdiagram witness {t, a, chords, star} for a diagram of arc "
       "number >= 3.");

    m.def("verify_witness",
          [](const std::string& word, int t, int a,
             const std::vector<std::string>& chords) {
              arcnum::StarWitness w{arcnum::StarParams{t, a}, chords, parse(word)};
              return arcnum::verify_witness(w);
          },
          py::arg("word"), py::arg("t"), py::arg("a"), py::arg("chords"));

    m.def("brute_force_arc_number", [](const std::string& word) {
        return arcnum::brute_force_arc_number(parse(word));
    }, py::arg("word"), "Reference arc number by exhaustive cut search (n <= 8).");

    m.def("brute_force_find_star",
          [](const std::string& word, int a) -> py::object {
              const auto w = arcnum::brute_force_find_star(parse(word), a);
              if (!w) return py::none();
              return witness_dict(*w);
          },
          py::arg("word"), py::arg("a"),
          "Reference star search by exhaustive subset scan (n <= 8).");

    m.def("enumerate_diagrams", [](int n, bool dedupe) {
        std::vector<std::string> words;
        for (const auto& d : arcnum::enumerate_diagrams(n, dedupe))
            words.push_back(arcnum::to_gauss_word(d));
        return words;
    }, py::arg("n"), py::arg("dedupe") = false,
       "All (2n-1)!! perfect matchings of 2n positions as Gauss words.");

    m.def("random_diagram", [](int n, std::uint64_t seed) {
        return arcnum::to_gauss_word(arcnum::random_diagram(n, seed));
    }, py::arg("n"), py::arg("seed"));

    m.def("render_svg",
          [](const std::string& word, bool cuts, bool witness, bool labels,
             int size) {
              arcnum::RenderOptions opt;
              opt.show_cuts = cuts;
              opt.show_witness = witness;
              opt.show_labels = labels;
              opt.size = size;
              return arcnum::render_svg(parse(word), opt);
          },
          py::arg("word"), py::arg("cuts") = false, py::arg("witness") = false,
          py::arg("labels") = true, py::arg("size") = 480);
}
