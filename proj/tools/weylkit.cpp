// weylkit command-line front end.
//
// Exit status: 0 on success, 1 when a check fails, 2 on usage errors.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylkit/acceptance.hpp"
#include "weylkit/cosetgraph.hpp"
#include "weylkit/facto.hpp"
#include "weylkit/intmat.hpp"
#include "weylkit/io.hpp"
#include "weylkit/modrep.hpp"
#include "weylkit/numtheory.hpp"
#include "weylkit/parabolic.hpp"
#include "weylkit/torus.hpp"

using namespace weylkit;
using json = io::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * What every subcommand produces: the echoed inputs, a structured payload,
 * and named checks.  Text output is accumulated separately.
 */
struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json checks = json::array();
  std::ostringstream text;
  bool failed = false;
  bool soft_failed = false; // inconclusive or capped; fatal only with --strict

  void check(std::string const &name, json expected, json got)
  {
    bool pass = expected == got;
    checks.push_back({{"name", name}, {"expected", expected}, {"got", got}, {"pass", pass}});
    failed = failed || !pass;
  }
  void soft(std::string const &name, bool ok, std::string const &detail)
  {
    checks.push_back({{"name", name}, {"expected", "conclusive"}, {"got", detail}, {"pass", ok}, {"strict_only", true}});
    soft_failed = soft_failed || !ok;
  }
};

std::string fmt_matrix(IntMatrix const &m)
{
  std::string s;
  for (auto const &row : m) {
    s += "  [";
    for (std::size_t j = 0; j < row.size(); ++j)
      s += (j ? " " : "") + std::to_string(row[j]);
    s += "]\n";
  }
  return s;
}

std::vector<std::string> big_strings(std::vector<BigInt> const &v)
{
  std::vector<std::string> s;
  for (auto const &x : v)
    s.push_back(x.str());
  return s;
}

std::string join(std::vector<std::string> const &v, char const *sep = ", ")
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? sep : "") + v[i];
  return s;
}

std::vector<int> parse_int_list(std::string const &text)
{
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (std::exception const &) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

BigInt parse_big(std::string const &text, char const *what)
{
  try {
    BigInt v(text);
    return v;
  } catch (std::exception const &) {
    throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  }
}

// Words for restriction: "1,2;-1;" is three words, the last one empty.
std::vector<std::vector<int>> parse_words(std::string const &text)
{
  std::vector<std::vector<int>> words;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    words.push_back(parse_int_list(item));
  return words;
}

// ---------------------------------------------------------------------------

void cmd_rootsys(Report &r, std::string const &type)
{
  auto sys = RootSystem::of(type);
  r.inputs = {{"type", type}};
  r.results = json::parse(sys.to_json().dump());
  r.text << sys.datum().type_label << ", rank " << sys.rank() << ", " << sys.size() << " roots ("
         << sys.positive_count() << " positive)\n";
  r.text << "Cartan matrix:\n" << fmt_matrix(sys.datum().cartan);
  r.text << "highest root " << RootSystem::format(sys.highest_root()) << "\n";
  r.check("roots closed under negation", true, [&] {
    for (std::size_t k = 0; k < sys.size(); ++k)
      if (!sys.contains(sys.root(sys.negative_of(k))))
        return false;
    return true;
  }());
}

void cmd_weyl(Report &r, std::string const &type, std::string const &word, std::string const &show)
{
  auto W = WeylGroup::of(type);
  Perm w = W.word_to_element(word);
  std::vector<std::string> wanted;
  std::stringstream ss(show);
  for (std::string item; std::getline(ss, item, ',');)
    wanted.push_back(item);
  for (auto const &s : wanted)
    if (s != "order" && s != "matrix" && s != "action" && s != "group")
      throw UsageError("--show accepts order, matrix, action and group, got '" + s + "'");
  auto has = [&](char const *s) { return std::find(wanted.begin(), wanted.end(), s) != wanted.end(); };

  r.inputs = {{"type", type}, {"word", word}, {"show", wanted}};
  auto reduced = W.element_to_word(w);
  r.results["reduced_word"] = WeylGroup::word_string(reduced);
  r.results["length"] = W.length(w);
  r.text << "reduced word " << (reduced.empty() ? "(empty)" : WeylGroup::word_string(reduced)) << ", length "
         << W.length(w) << "\n";
  if (has("group")) {
    r.results["group_order"] = W.group().order().str();
    r.text << "|W(" << type << ")| = " << W.group().order().str() << "\n";
  }
  if (has("order")) {
    r.results["order"] = w.order();
    r.text << "order " << w.order() << "\n";
  }
  if (has("matrix")) {
    r.results["root_matrix"] = W.root_matrix(w);
    r.results["coroot_matrix"] = W.coroot_matrix(w);
    r.text << "root matrix (row j = image of alpha_j):\n" << fmt_matrix(W.root_matrix(w));
    r.text << "coroot matrix:\n" << fmt_matrix(W.coroot_matrix(w));
  }
  if (has("action")) {
    json act = json::array();
    for (int i = 1; i <= W.rank(); ++i) {
      IntVec a(static_cast<std::size_t>(W.rank()), 0);
      a[static_cast<std::size_t>(i - 1)] = 1;
      auto img = W.image(a, w);
      act.push_back(img);
      r.text << "alpha" << i << " -> " << RootSystem::format(img) << "\n";
    }
    r.results["simple_root_images"] = act;
  }
  r.check("reduced word evaluates to the element", true, W.word_to_element(reduced) == w);
}

void cmd_parabolic(Report &r, std::string const &type, std::string const &J_text, bool csv)
{
  auto W = WeylGroup::of(type);
  auto J = parse_int_list(J_text);
  auto datum = parabolic_datum(W, J);
  auto reports = double_cosets(datum);
  r.inputs = {{"type", type}, {"J", J}};
  json rows = json::array();
  std::size_t non_self = 0, total = 0;
  if (csv)
    r.text << "word,self_paired,length_poly,m,cosets\n";
  for (auto const &d : reports) {
    auto poly = suborbit_polynomial(datum, d);
    bool sp = is_self_paired(d);
    non_self += sp ? 0 : 1;
    total += d.coset_count;
    std::string word = WeylGroup::word_string(d.min_rep_word);
    rows.push_back({{"word", word}, {"self_paired", sp}, {"length_poly", poly.to_string()}, {"m", d.triple_count},
                    {"cosets", d.coset_count}});
    if (csv)
      r.text << word << "," << (sp ? "true" : "false") << ",\"" << poly.to_string() << "\"," << d.triple_count << ","
             << d.coset_count << "\n";
    else
      r.text << (word.empty() ? "(identity)" : word) << (sp ? "  self-paired    " : "  non-self-paired") << "  "
             << poly.to_string() << "  m = " << d.triple_count << "\n";
  }
  if (!csv)
    r.text << reports.size() << " double cosets, " << non_self << " non-self-paired, " << datum.coset_reps.size()
           << " cosets\n";
  r.results = {{"W_J_order", datum.W_J.order().str()},
               {"cosets", datum.coset_reps.size()},
               {"non_self_paired", non_self},
               {"classes", rows}};
  r.check("suborbit sizes sum to the number of cosets", datum.coset_reps.size(), total);
}

void cmd_torus(Report &r, std::string const &type, std::optional<std::string> const &word, bool longest, bool identity,
               bool twisted, std::optional<std::string> const &q_text)
{
  int chosen = (word ? 1 : 0) + (longest ? 1 : 0) + (identity ? 1 : 0);
  if (chosen != 1)
    throw UsageError("torus needs exactly one of --word, --longest, --identity");
  auto W = WeylGroup::of(type);
  Perm w = word ? W.word_to_element(*word) : longest ? W.longest_element() : W.group().identity();
  r.inputs = {{"type", type},
              {"element", word ? *word : longest ? "longest" : "identity"},
              {"twisted", twisted}};
  auto poly = torus_order_poly(W, w, twisted);
  r.results["order_poly"] = poly.to_string();
  r.text << "|T| = " << poly.to_string() << "\n";
  if (q_text) {
    BigInt q = parse_big(*q_text, "--q");
    if (q < 2)
      throw UsageError("--q must be at least 2");
    r.inputs["q"] = q.str();
    auto st = torus_structure(W, w, twisted, q);
    r.results["q"] = q.str();
    r.results["invariant_factors"] = big_strings(st.invariant_factors);
    r.results["order"] = st.order().str();
    r.text << "at q = " << q.str() << ": invariant factors (" << join(big_strings(st.invariant_factors)) << "), order "
           << st.order().str() << "\n";
    r.check("order polynomial at q equals the Smith normal form product", poly.eval(q).str(), st.order().str());
  }
}

void cmd_module(Report &r, std::optional<std::string> const &module_file, std::optional<std::string> const &group_file,
                std::optional<std::uint64_t> chop, std::optional<std::string> const &restrict_words,
                std::vector<std::string> const &restrict_groups)
{
  if (module_file.has_value() == group_file.has_value())
    throw UsageError("module needs exactly one of --module and --group");
  auto describe = [&](std::string const &label, MatModule const &m) {
    auto res = is_irreducible(m);
    std::size_t fixed = fixed_vectors(m);
    json j = {{"label", label},
              {"field", m.field_name()},
              {"dimension", m.dimension},
              {"verdict", res.irreducible() ? "irreducible"
                          : res.verdict == Verdict::reducible ? "reducible"
                                                              : "inconclusive"},
              {"method", res.method},
              {"fixed_space", fixed}};
    if (res.witness)
      j["witness_dimension"] = res.witness->basis.size();
    r.text << label << ": dimension " << m.dimension << " over " << m.field_name() << ", "
           << j["verdict"].get<std::string>() << " (" << res.method << "), fixed space " << fixed << "\n";
    r.soft(label + " verdict", res.verdict != Verdict::inconclusive, j["verdict"].get<std::string>());
    return j;
  };

  if (module_file) {
    auto m = io::load_module(io::fixture_path(*module_file));
    r.inputs = {{"module", *module_file}};
    if (restrict_words) {
      r.inputs["restrict"] = *restrict_words;
      m = restriction(m, parse_words(*restrict_words));
    }
    r.results["module"] = describe("module", m);
    return;
  }
  if (!chop)
    throw UsageError("--group needs --chop P");
  auto G = io::load_group(io::fixture_path(*group_file));
  r.inputs = {{"group", *group_file}, {"chop", *chop}, {"restrict_to", restrict_groups}};
  auto factors = chop_permutation_module(G, *chop);
  json fs = json::array();
  std::size_t sum = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    auto const &f = factors[k];
    sum += f.module.dimension;
    json j = describe("factor " + std::to_string(k + 1), f.module);
    json res = json::array();
    for (auto const &name : restrict_groups) {
      auto K = io::load_group(io::fixture_path(name));
      std::vector<RatMatrix> mats;
      for (auto const &g : K.generators())
        mats.push_back(permutation_matrix(g));
      res.push_back(describe("  restricted to " + name, f.apply(mats)));
    }
    j["restrictions"] = res;
    fs.push_back(j);
  }
  r.results["factors"] = fs;
  r.check("factor dimensions sum to the degree", G.degree(), sum);
}

void cmd_ppd(Report &r, std::string const &q_text, unsigned n)
{
  BigInt q = parse_big(q_text, "--q");
  if (q < 2 || n < 2)
    throw UsageError("ppd needs q >= 2 and n >= 2");
  auto res = ppd(q, n);
  r.inputs = {{"q", q.str()}, {"n", n}};
  r.results = {{"primes", big_strings(res.primes)},
               {"exception", res.exception_reason ? json(*res.exception_reason) : json(nullptr)}};
  r.text << "ppd(" << q.str() << ", " << n << ") = {" << join(big_strings(res.primes)) << "}";
  if (res.exception_reason)
    r.text << ", exception " << *res.exception_reason;
  r.text << "\n";
  bool ok = true;
  for (auto const &p : res.primes)
    ok = ok && multiplicative_order(q, p) == n;
  r.check("every prime has multiplicative order n", true, ok);
}

json group_summary(PermGroup const &G)
{
  return {{"order", G.order().str()}, {"generators", io::group_to_json(G)["generators"]}};
}

void cmd_factorize(Report &r, std::string const &group, std::uint64_t m, std::string const &predicate)
{
  FactorPredicate pred;
  if (predicate == "sylow2-isomorphic")
    pred = sylow2_isomorphic;
  else if (predicate != "none")
    throw UsageError("--predicate must be none or sylow2-isomorphic");
  auto H = io::load_group(io::fixture_path(group));
  r.inputs = {{"group", group}, {"min_order", m}, {"predicate", predicate}};
  auto recs = search_factorizations(H, m, pred);
  json list = json::array();
  r.text << "|H| = " << H.order().str() << ", " << recs.size() << " factorizations\n";
  for (auto const &f : recs) {
    list.push_back({{"A", group_summary(f.A)},
                    {"B", group_summary(f.B)},
                    {"intersection_order", f.intersection_order.str()},
                    {"proper", f.proper},
                    {"homogeneity", f.homogeneity_tag()}});
    r.text << "  |A| = " << f.A.order().str() << ", |B| = " << f.B.order().str() << ", |A cap B| = "
           << f.intersection_order.str() << ", " << f.homogeneity_tag() << "\n";
  }
  r.results = {{"group_order", H.order().str()}, {"count", recs.size()}, {"factorizations", list}};
  bool ok = true;
  for (auto const &f : recs)
    ok = ok && f.H.order() * f.intersection_order == f.A.order() * f.B.order();
  r.check("every record satisfies |H||A cap B| = |A||B|", true, ok);
}

void cmd_digraph(Report &r, std::string const &group, std::string const &stab, std::string const &elt, unsigned s)
{
  if (s < 1)
    throw UsageError("--s must be at least 1");
  auto H = io::load_group(io::fixture_path(group));
  auto Hv = io::load_group(io::fixture_path(stab));
  Perm h = Perm::from_cycles(H.degree(), elt);
  CosetDigraph G(H, Hv, h);
  r.inputs = {{"group", group}, {"stab", stab}, {"elt", elt}, {"s", s}};
  auto prim = G.vertex_primitive();
  r.results = {{"vertices", G.vertex_count()},
               {"valency", G.valency()},
               {"connected", G.connected()},
               {"core_free", G.core_free()},
               {"vertex_primitive", prim ? json(*prim) : json(nullptr)}};
  r.text << G.vertex_count() << " vertices, valency " << G.valency() << (G.connected() ? ", connected" : ", disconnected")
         << (G.core_free() ? ", core-free" : ", not core-free") << "\n";
  json series = json::array();
  for (unsigned k = 1; k <= s; ++k) {
    auto rep = s_arc_transitive(G, k);
    json j = {{"s", k},
              {"arc_count", rep.arc_count.str()},
              {"orbit_count", rep.orbit_count ? json(*rep.orbit_count) : json(nullptr)},
              {"transitive", rep.transitive},
              {"chain_orders", big_strings(rep.chain_orders)}};
    r.text << "s = " << k << ": " << (rep.transitive ? "transitive" : "not transitive") << ", "
           << rep.arc_count.str() << " arcs";
    if (rep.orbit_count)
      r.text << ", " << *rep.orbit_count << " orbit(s) from a vertex";
    r.text << ", chain orders " << join(big_strings(rep.chain_orders), " ") << "\n";
    r.soft("brute count at s = " + std::to_string(k), rep.orbit_count.has_value(), rep.orbit_count ? "done" : "capped");
    if (rep.transitive) {
      auto a = divisibility_audit(G, k);
      j["divisibility"] = {{"holds", a.holds}, {"lhs", a.lhs.str()}, {"rhs", a.rhs.str()}};
      r.check("|Hv|^(s-1) divides |Huv|^s at s = " + std::to_string(k), true, a.holds);
    }
    series.push_back(j);
  }
  r.results["series"] = series;
  if (G.connected()) {
    auto v = normalized_subgroup_probe(G);
    r.results["probe_violations"] = v.size();
    r.check("no normal subgroup of Hv is normalized by h", 0, v.size());
  }
}

void cmd_eliminate(Report &r, std::string const &m_text, std::string const &o_text, std::string const &hl_text,
                   unsigned rank)
{
  BigInt m = parse_big(m_text, "--mr"), o = parse_big(o_text, "--or"), hl = parse_big(hl_text, "--hl");
  if (m < 2 || o < 1 || hl < 1)
    throw UsageError("eliminate needs m >= 2, |O| >= 1 and |H/L| >= 1");
  if (rank != 1 && rank != 2)
    throw UsageError("--rank must be 1 or 2");
  auto res = eliminate(m, o, hl, rank);
  r.inputs = {{"m", m.str()}, {"O", o.str()}, {"HL", hl.str()}, {"rank", rank}};
  r.results = {{"witnesses", big_strings(res.witnesses)},
               {"s_bound", res.s_bound ? json(*res.s_bound) : json(nullptr)}};
  r.text << "primes r | m with |O|_r = 1 and |H/L|_r < m_r: {" << join(big_strings(res.witnesses)) << "}\n";
  if (res.s_bound)
    r.text << "s <= " << *res.s_bound << "\n";
  else
    r.text << "no bound\n";
}

void cmd_reproduce(Report &r, std::vector<int> const &only)
{
  std::vector<int> ids = only;
  if (ids.empty())
    for (int k = 1; k <= kCriterionCount; ++k)
      ids.push_back(k);
  for (int id : ids)
    if (id < 1 || id > kCriterionCount)
      throw UsageError("--only takes criterion numbers 1.." + std::to_string(kCriterionCount));
  r.inputs = {{"criteria", ids}};
  json list = json::array();
  for (int id : ids) {
    auto c = run_criterion(id);
    list.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"failures", c.failures}, {"notes", c.notes}});
    r.text << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << "\n";
    for (auto const &f : c.failures)
      r.text << "       failed: " << f << "\n";
    for (auto const &n : c.notes)
      r.text << "       note: " << n << "\n";
    r.check("criterion " + std::to_string(id), true, c.pass);
  }
  r.results["criteria"] = list;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"weylkit: Weyl groups, tori, modules, factorizations and coset digraphs"};
  app.require_subcommand(1);
  bool as_json = false, strict = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--strict", strict, "treat inconclusive or capped results as failures");

  std::string type = "F4", word, show = "order", J = "1,2,4", q_ppd, group, stab, elt, predicate = "none";
  std::string mr, o_order, hl;
  std::optional<std::string> t_word, t_q, mod_file, grp_file, restrict_words;
  std::optional<std::uint64_t> chop;
  std::vector<std::string> restrict_groups;
  bool longest = false, identity = false, twisted = false, csv = false;
  unsigned n = 0, s = 2, rank = 2;
  std::uint64_t min_order = 1;
  std::vector<int> only;

  auto *c_root = app.add_subcommand("rootsys", "root system data");
  c_root->add_option("--type", type, "type such as F4, E6, G2")->required();

  auto *c_weyl = app.add_subcommand("weyl", "a Weyl group element from a word");
  c_weyl->add_option("--type", type)->required();
  c_weyl->add_option("--word", word, "1-based digits, s_i1 applied first")->required();
  c_weyl->add_option("--show", show, "comma list of order, matrix, action, group");

  auto *c_par = app.add_subcommand("parabolic", "suborbits of W on the cosets of W_J");
  c_par->add_option("--type", type)->required();
  c_par->add_option("--J", J, "comma list of simple root labels")->required();
  c_par->add_flag("--csv", csv, "emit the suborbit table as CSV");

  auto *c_tor = app.add_subcommand("torus", "maximal torus order and structure");
  c_tor->add_option("--type", type)->required();
  c_tor->add_option("--word", t_word);
  c_tor->add_flag("--longest", longest);
  c_tor->add_flag("--identity", identity);
  c_tor->add_flag("--twisted", twisted);
  c_tor->add_option("--q", t_q, "prime power for the invariant factors");

  auto *c_mod = app.add_subcommand("module", "irreducibility, fixed spaces and chopping");
  c_mod->add_option("--module", mod_file, "module JSON file or fixture name");
  c_mod->add_option("--restrict", restrict_words, "words such as \"1,2;-1\" (module files)");
  c_mod->add_option("--group", grp_file, "group JSON file or fixture name");
  c_mod->add_option("--chop", chop, "prime for the permutation module");
  c_mod->add_option("--restrict-to", restrict_groups, "subgroup files to restrict each factor to");

  auto *c_ppd = app.add_subcommand("ppd", "primitive prime divisors of q^n - 1");
  c_ppd->add_option("--q", q_ppd)->required();
  c_ppd->add_option("--n", n)->required();

  auto *c_fac = app.add_subcommand("factorize", "factorizations H = AB over subgroup classes");
  c_fac->add_option("--group", group)->required();
  c_fac->add_option("--min-order", min_order, "factor orders must be multiples of this");
  c_fac->add_option("--predicate", predicate, "none or sylow2-isomorphic");

  auto *c_dig = app.add_subcommand("digraph", "s-arc-transitivity of a coset digraph");
  c_dig->add_option("--group", group)->required();
  c_dig->add_option("--stab", stab)->required();
  c_dig->add_option("--elt", elt, "connecting element in cycle notation")->required();
  c_dig->add_option("--s", s, "largest s to test");

  auto *c_eli = app.add_subcommand("eliminate", "prime witnesses bounding s for torus stabilizers");
  c_eli->add_option("--mr", mr, "m")->required();
  c_eli->add_option("--or", o_order, "|O|")->required();
  c_eli->add_option("--hl", hl, "|H/L|")->required();
  c_eli->add_option("--rank", rank, "rank of the cyclic part, 1 or 2");

  auto *c_rep = app.add_subcommand("reproduce", "run the reproduction suite");
  c_rep->add_option("--only", only, "criterion numbers")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return 2;
  }

  Report r;
  r.command = app.get_subcommands().front()->get_name();
  try {
    if (*c_root)
      cmd_rootsys(r, type);
    else if (*c_weyl)
      cmd_weyl(r, type, word, show);
    else if (*c_par)
      cmd_parabolic(r, type, J, csv);
    else if (*c_tor)
      cmd_torus(r, type, t_word, longest, identity, twisted, t_q);
    else if (*c_mod)
      cmd_module(r, mod_file, grp_file, chop, restrict_words, restrict_groups);
    else if (*c_ppd)
      cmd_ppd(r, q_ppd, n);
    else if (*c_fac)
      cmd_factorize(r, group, min_order, predicate);
    else if (*c_dig)
      cmd_digraph(r, group, stab, elt, s);
    else if (*c_eli)
      cmd_eliminate(r, mr, o_order, hl, rank);
    else if (*c_rep)
      cmd_reproduce(r, only);
  } catch (UsageError const &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (std::invalid_argument const &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (as_json) {
    json out = {{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"checks", r.checks}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text.str();
    for (auto const &c : r.checks)
      if (!c["pass"].get<bool>())
        std::cout << "check failed: " << c["name"].get<std::string>() << "\n";
  }
  if (r.failed || (strict && r.soft_failed))
    return 1;
  return 0;
}
