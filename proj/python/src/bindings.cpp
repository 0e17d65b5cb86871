#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylkit/acceptance.hpp"
#include "weylkit/cosetgraph.hpp"
#include "weylkit/facto.hpp"
#include "weylkit/io.hpp"
#include "weylkit/modrep.hpp"
#include "weylkit/numtheory.hpp"
#include "weylkit/parabolic.hpp"
#include "weylkit/torus.hpp"

namespace py = pybind11;
using namespace weylkit;

namespace {

// Python ints are unbounded, so BigInt crosses the boundary as decimal text.
py::int_ to_py(BigInt const &n)
{
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}
BigInt from_py(py::int_ const &n) { return BigInt(n.attr("__str__")().cast<std::string>()); }

py::list to_py(std::vector<BigInt> const &v)
{
  py::list out;
  for (auto const &x : v)
    out.append(to_py(x));
  return out;
}

PermGroup make_group(std::size_t degree, std::vector<std::string> const &gens)
{
  std::vector<Perm> ps;
  for (auto const &g : gens)
    ps.push_back(Perm::from_cycles(degree, g));
  return PermGroup(degree, ps);
}

char const *verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::irreducible:
    return "irreducible";
  case Verdict::reducible:
    return "reducible";
  default:
    return "inconclusive";
  }
}

Perm element(WeylGroup const &W, std::optional<std::string> const &word)
{
  if (!word || *word == "identity")
    return W.group().identity();
  if (*word == "longest")
    return W.longest_element();
  return W.word_to_element(*word);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Weyl groups, maximal tori, modular modules, factorizations and coset digraphs";

  // --- root systems and Weyl groups
  m.def("root_count", [](std::string const &type) { return RootSystem::of(type).size(); }, py::arg("type"));
  m.def("rootsys_json", [](std::string const &type) { return RootSystem::of(type).to_json().dump(); },
        py::arg("type"), "Root system data as a JSON string.");
  m.def("weyl_order", [](std::string const &type) { return to_py(WeylGroup::of(type).group().order()); },
        py::arg("type"));
  m.def(
      "reduced_word",
      [](std::string const &type, std::string const &word) {
        auto W = WeylGroup::of(type);
        return WeylGroup::word_string(W.element_to_word(W.word_to_element(word)));
      },
      py::arg("type"), py::arg("word"));
  m.def(
      "element_order",
      [](std::string const &type, std::string const &word) { return WeylGroup::of(type).word_to_element(word).order(); },
      py::arg("type"), py::arg("word"));

  m.def(
      "parabolic_table",
      [](std::string const &type, std::vector<int> const &J) {
        auto W = WeylGroup::of(type);
        auto datum = parabolic_datum(W, J);
        py::list rows;
        for (auto const &d : double_cosets(datum)) {
          py::dict row;
          row["word"] = WeylGroup::word_string(d.min_rep_word);
          row["self_paired"] = is_self_paired(d);
          row["length_poly"] = suborbit_polynomial(datum, d).to_string();
          row["m"] = d.triple_count;
          row["cosets"] = d.coset_count;
          rows.append(row);
        }
        return rows;
      },
      py::arg("type"), py::arg("J"), "One row per (W_J, W_J)-double coset.");

  // --- tori
  m.def(
      "torus_order_poly",
      [](std::string const &type, std::optional<std::string> const &word, bool twisted) {
        auto W = WeylGroup::of(type);
        return torus_order_poly(W, element(W, word), twisted).to_string();
      },
      py::arg("type"), py::arg("word") = py::none(), py::arg("twisted") = false,
      "word may also be \"longest\" or \"identity\".");
  m.def(
      "torus_invariant_factors",
      [](std::string const &type, std::optional<std::string> const &word, py::int_ const &q, bool twisted) {
        auto W = WeylGroup::of(type);
        return to_py(torus_structure(W, element(W, word), twisted, from_py(q)).invariant_factors);
      },
      py::arg("type"), py::arg("word"), py::arg("q"), py::arg("twisted") = false);

  m.def(
      "ppd",
      [](py::int_ const &q, unsigned n) {
        auto r = ppd(from_py(q), n);
        return py::make_tuple(to_py(r.primes), r.exception_reason ? py::cast(*r.exception_reason) : py::none());
      },
      py::arg("q"), py::arg("n"), "(primitive prime divisors of q^n - 1, exception name or None)");

  // --- modules
  m.def(
      "irreducible",
      [](std::uint64_t field, std::vector<IntMatrix> const &gens) {
        auto res = is_irreducible(make_module(field, gens));
        py::dict d;
        d["verdict"] = verdict_name(res.verdict);
        d["method"] = res.method;
        d["witness_dimension"] = res.witness ? py::cast(res.witness->basis.size()) : py::none();
        return d;
      },
      py::arg("field"), py::arg("generators"), "field 0 means the rationals.");
  m.def(
      "chop_dimensions",
      [](std::string const &group, std::uint64_t p) {
        std::vector<std::size_t> dims;
        for (auto const &f : chop_permutation_module(io::load_group(io::fixture_path(group)), p))
          dims.push_back(f.module.dimension);
        return dims;
      },
      py::arg("group"), py::arg("p"), "Composition factor dimensions of the permutation module.");

  // --- factorizations and digraphs
  m.def(
      "factorizations",
      [](std::string const &group, std::uint64_t min_order, bool sylow2) {
        auto H = io::load_group(io::fixture_path(group));
        py::list out;
        for (auto const &f : search_factorizations(H, min_order, sylow2 ? FactorPredicate(sylow2_isomorphic)
                                                                        : FactorPredicate{})) {
          py::dict d;
          d["A_order"] = to_py(f.A.order());
          d["B_order"] = to_py(f.B.order());
          d["intersection_order"] = to_py(f.intersection_order);
          d["homogeneity"] = f.homogeneity_tag();
          out.append(d);
        }
        return out;
      },
      py::arg("group"), py::arg("min_order") = 1, py::arg("sylow2") = false);
  m.def(
      "s_arc_transitive",
      [](std::size_t degree, std::vector<std::string> const &H, std::vector<std::string> const &Hv,
         std::string const &h, unsigned s) {
        CosetDigraph G(make_group(degree, H), make_group(degree, Hv), Perm::from_cycles(degree, h));
        auto r = s_arc_transitive(G, s);
        py::dict d;
        d["vertices"] = G.vertex_count();
        d["valency"] = G.valency();
        d["transitive"] = r.transitive;
        d["arc_count"] = to_py(r.arc_count);
        d["orbit_count"] = r.orbit_count ? py::cast(*r.orbit_count) : py::none();
        return d;
      },
      py::arg("degree"), py::arg("H"), py::arg("Hv"), py::arg("h"), py::arg("s"),
      "Groups are lists of generators in 1-based cycle notation.");
  m.def(
      "eliminate",
      [](py::int_ const &mr, py::int_ const &o, py::int_ const &hl, unsigned rank) {
        auto r = eliminate(from_py(mr), from_py(o), from_py(hl), rank);
        return py::make_tuple(to_py(r.witnesses), r.s_bound ? py::cast(*r.s_bound) : py::none());
      },
      py::arg("m"), py::arg("O_order"), py::arg("HL_order"), py::arg("rank") = 2);

  m.def(
      "run_criterion",
      [](int id) {
        auto c = run_criterion(id);
        py::dict d;
        d["id"] = c.id;
        d["title"] = c.title;
        d["pass"] = c.pass;
        d["failures"] = c.failures;
        d["notes"] = c.notes;
        return d;
      },
      py::arg("id"));
  m.attr("criterion_count") = kCriterionCount;

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
}
