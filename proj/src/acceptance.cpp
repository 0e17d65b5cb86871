#include "weylkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "linalg.hpp"
#include "weylkit/cosetgraph.hpp"
#include "weylkit/facto.hpp"
#include "weylkit/io.hpp"
#include "weylkit/modrep.hpp"
#include "weylkit/numtheory.hpp"
#include "weylkit/parabolic.hpp"
#include "weylkit/smallgroup.hpp"
#include "weylkit/torus.hpp"

namespace weylkit {

namespace {

// Collects check outcomes for one criterion.
class Checker {
public:
  explicit Checker(CriterionResult &r) : _r(r) {}

  void check(bool ok, std::string const &what)
  {
    if (!ok)
      _r.failures.push_back(what);
  }
  template <class A, class B> void equal(A const &expected, B const &got, std::string const &what)
  {
    if (!(expected == got)) {
      std::ostringstream s;
      s << what << ": expected " << expected << ", got " << got;
      _r.failures.push_back(s.str());
    }
  }
  void note(std::string const &text) { _r.notes.push_back(text); }

private:
  CriterionResult &_r;
};

IntVec neg(IntVec v)
{
  for (auto &x : v)
    x = -x;
  return v;
}

IntVec unit(int rank, int i)
{
  IntVec v(static_cast<std::size_t>(rank), 0);
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

std::string verdict_name(Verdict v)
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

MatModule coroot_module(WeylGroup const &W, std::vector<Perm> const &elts, std::uint64_t field)
{
  std::vector<IntMatrix> mats;
  for (auto const &g : elts)
    mats.push_back(W.coroot_matrix(g));
  if (mats.empty())
    mats.push_back(W.coroot_matrix(W.group().identity()));
  return make_module(field, mats);
}

// ---------------------------------------------------------------------------

void criterion1(Checker &c)
{
  auto F4 = WeylGroup::of("F4");
  auto E6 = WeylGroup::of("E6");
  c.equal(std::size_t{48}, F4.system().size(), "|Phi(F4)|");
  c.equal(std::size_t{72}, E6.system().size(), "|Phi(E6)|");
  c.equal(BigInt(1152), F4.group().order(), "|W(F4)|");
  c.equal(BigInt(51840), E6.group().order(), "|W(E6)|");
  auto f = factor_integer(E6.group().order());
  std::map<BigInt, unsigned> expected{{BigInt(2), 7}, {BigInt(3), 4}, {BigInt(5), 1}};
  c.check(f == expected, "|W(E6)| factors as 2^7 * 3^4 * 5");
}

// ---------------------------------------------------------------------------

using RootMap = std::vector<std::pair<IntVec, IntVec>>;

// Group of permutations of {0..n-1} generated by gens, as a set of image vectors.
std::set<std::vector<std::size_t>> closure_of(std::vector<std::vector<std::size_t>> const &gens, std::size_t n)
{
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i)
    id[i] = i;
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> queue{id};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto const &g : gens) {
      std::vector<std::size_t> y(n);
      for (std::size_t i = 0; i < n; ++i)
        y[i] = g[queue[k][i]];
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  return seen;
}

std::string describe_induced(RelativeWeylGroup const &R)
{
  RootSystem const &sys = *R.subsystem.parent;
  std::ostringstream s;
  for (std::size_t g = 0; g < R.induced.size(); ++g) {
    s << (g ? "; " : "") << "gen" << g + 1 << ":";
    for (std::size_t k = 0; k < R.induced[g].size(); ++k)
      s << " " << RootSystem::format(sys.root(R.subsystem.simple_roots[k])) << "->"
        << RootSystem::format(sys.root(R.subsystem.simple_roots[R.induced[g][k]]));
  }
  return s.str();
}

// W_Delta is taken as the stabilizer of the base of Delta.  It must be a
// complement to W(Delta) in N_W(W(Delta)).
void check_normalizer_complement(Checker &c, WeylGroup const &W, std::string const &label, Subsystem const &delta,
                                 RelativeWeylGroup const &R)
{
  PermGroup WD = reflection_subgroup(W, delta);
  PermGroup N = normalizer(W.group(), WD);
  bool inside = R.group.is_subgroup_of(N);
  bool trivial_meet = intersection(R.group, WD).order() == 1;
  bool orders = N.order() == WD.order() * R.group.order();
  c.check(inside && trivial_meet && orders, label + ": base stabilizer is not a complement to W(Delta) in its normalizer");
  c.note(label + ": |N_W(W(Delta))| = " + N.order().str() + " = " + WD.order().str() + " * " + R.group.order().str());
}

// Expected maps permute the base: compare generated permutation groups.
void check_base_action(Checker &c, WeylGroup const &W, std::string const &label, std::vector<IntVec> const &seeds,
                       std::vector<RootMap> const &expected, std::size_t expected_order)
{
  auto const &sys = W.system();
  auto delta = closed_subsystem(sys, seeds);
  auto R = relative_weyl_group(W, delta);
  std::size_t const n = delta.simple_roots.size();
  auto position = [&](IntVec const &v) {
    std::size_t idx = sys.index_of(v);
    auto it = std::find(delta.simple_roots.begin(), delta.simple_roots.end(), idx);
    if (it == delta.simple_roots.end())
      throw std::invalid_argument(label + ": " + RootSystem::format(v) + " is not in the base");
    return static_cast<std::size_t>(it - delta.simple_roots.begin());
  };
  std::vector<std::vector<std::size_t>> want;
  for (auto const &m : expected) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = i;
    for (auto const &[from, to] : m)
      p[position(from)] = position(to);
    want.push_back(p);
  }
  auto got = closure_of(R.induced_group, n);
  auto exp = closure_of(want, n);
  c.equal(expected_order, R.group.order_u64(), label + " |W_Delta|");
  c.check(got == exp, label + " induced action on the base differs from the quoted generators (" +
                          describe_induced(R) + ")");
  c.note(label + ": |W_Delta| = " + R.group.order().str() + ", " + describe_induced(R));
  check_normalizer_complement(c, W, label, delta, R);
}

// Expected maps send the base to roots outside it.  When the base spans the
// root space such a map determines an element of W; it must normalize Delta
// and lie in the same W(Delta)-coset as a generator of W_Delta.
void check_signed_action(Checker &c, WeylGroup const &W, std::string const &label, std::vector<IntVec> const &seeds,
                         RootMap const &expected, std::size_t expected_order)
{
  auto const &sys = W.system();
  auto delta = closed_subsystem(sys, seeds);
  auto R = relative_weyl_group(W, delta);
  c.equal(expected_order, R.group.order_u64(), label + " |W_Delta|");
  c.note(label + ": |W_Delta| = " + R.group.order().str() + ", " + describe_induced(R));
  check_normalizer_complement(c, W, label, delta, R);

  std::size_t const l = static_cast<std::size_t>(W.rank());
  if (delta.simple_roots.size() != l)
    throw std::logic_error(label + ": the base must span the root space");
  la::RationalField Q;
  la::Mat<la::RationalField> B, I(l);
  for (auto k : delta.simple_roots) {
    la::Vec<la::RationalField> row;
    for (int x : sys.root(k))
      row.emplace_back(x);
    B.push_back(row);
  }
  std::map<IntVec, IntVec> image(expected.begin(), expected.end());
  for (std::size_t i = 0; i < l; ++i) {
    IntVec const &src = sys.root(delta.simple_roots[i]);
    auto it = image.find(src);
    if (it == image.end())
      throw std::invalid_argument(label + ": expected map misses a base root");
    for (int x : it->second)
      I[i].emplace_back(x);
  }
  auto Binv = la::inverse(Q, B);
  if (!Binv)
    throw std::logic_error(label + ": base is singular");
  auto M = la::matmul(Q, *Binv, I);
  IntMatrix Mi(l, IntVec(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (denominator(M[i][j]) != 1) {
        c.check(false, label + ": quoted map is not integral on the root lattice");
        return;
      }
      Mi[i][j] = static_cast<int>(numerator(M[i][j]));
    }
  std::optional<Perm> found;
  try {
    found = W.from_root_matrix(Mi);
  } catch (std::invalid_argument const &) {
    c.check(false, label + ": quoted map does not permute the roots");
    return;
  }
  Perm const &pi = *found;
  c.check(W.group().contains(pi), label + ": quoted map is not in W");
  std::set<std::size_t> members(delta.members.begin(), delta.members.end()), moved;
  for (auto k : delta.members)
    moved.insert(pi[static_cast<Point>(k)]);
  c.check(moved == members, label + ": quoted map does not normalize Delta");
  PermGroup WD = reflection_subgroup(W, delta);
  bool same_coset = false;
  for (auto const &g : R.group.generators())
    same_coset = same_coset || WD.contains(g.inverse() * pi);
  c.check(same_coset && !WD.contains(pi), label + ": quoted map is not the nontrivial class of N_W(Delta)/W(Delta)");
  c.note(label + ": the quoted map normalizes Delta and differs from the base-stabilizing generator by an element of W(Delta)");
}

void criterion2(Checker &c)
{
  {
    auto W = WeylGroup::of("F4");
    IntVec const a0 = W.system().highest_root();
    IntVec const b0{1, 2, 3, 2}; // highest short root
    auto a = [&](int i) { return unit(4, i); };
    check_signed_action(c, W, "F4/2C2", {a(2), a(3), neg(a0), b0},
                        {{a(2), a0}, {a0, a(2)}, {a(3), neg(b0)}, {neg(b0), a(3)}, {b0, neg(a(3))}, {neg(a(3)), b0},
                         {neg(a(2)), neg(a0)}, {neg(a0), neg(a(2))}},
                        2);
    check_base_action(c, W, "F4/2A2", {neg(a0), a(1), a(3), a(4)}, {{{neg(a0), a(1)}, {a(1), neg(a0)}, {a(3), a(4)}, {a(4), a(3)}}},
                      2);
  }
  {
    auto W = WeylGroup::of("E6");
    IntVec const a0 = W.system().highest_root();
    auto a = [&](int i) { return unit(6, i); };
    IntVec const ma0 = neg(a0);
    check_base_action(c, W, "E6/3A2", {a(1), a(3), a(5), a(6), a(2), ma0},
                      {{{a(1), a(5)}, {a(5), a(1)}, {a(2), ma0}, {ma0, a(2)}, {a(3), a(6)}, {a(6), a(3)}},
                       {{a(1), a(6)}, {a(6), ma0}, {ma0, a(1)}, {a(2), a(3)}, {a(3), a(5)}, {a(5), a(2)}}},
                      6);
    check_base_action(c, W, "E6/D4", {a(2), a(3), a(4), a(5)},
                      {{{a(2), a(3)}, {a(3), a(2)}}, {{a(2), a(5)}, {a(5), a(2)}}}, 6);
  }
}

// ---------------------------------------------------------------------------

void criterion3(Checker &c)
{
  auto W = WeylGroup::of("F4");
  auto datum = parabolic_datum(W, {1, 2, 4});
  auto reports = double_cosets(datum);
  auto const p7 = FactoredPolynomial::parse("q^7*(q^2+q+1)*(q+1)");
  auto const p10 = FactoredPolynomial::parse("q^10*(q^2+q+1)*(q+1)");
  std::size_t non_self = 0, n7 = 0, n10 = 0;
  for (auto const &r : reports) {
    if (is_self_paired(r))
      continue;
    ++non_self;
    auto poly = suborbit_polynomial(datum, r);
    c.note("non-self-paired class " + WeylGroup::word_string(r.min_rep_word) + ": " + poly.to_string() +
           ", m = " + std::to_string(r.triple_count));
    if (poly == p7) {
      ++n7;
      c.equal(std::size_t{14}, r.triple_count, "m for a q^7 suborbit");
    } else if (poly == p10) {
      ++n10;
      c.equal(std::size_t{10}, r.triple_count, "m for a q^10 suborbit");
    } else {
      c.check(false, "unexpected suborbit polynomial " + poly.to_string());
    }
  }
  c.equal(std::size_t{4}, non_self, "non-self-paired suborbits");
  c.equal(std::size_t{2}, n7, "suborbits q^7*(q^2+q+1)*(q+1)");
  c.equal(std::size_t{2}, n10, "suborbits q^10*(q^2+q+1)*(q+1)");
  for (auto [a, e, m] : {std::tuple{24u, 7u, 14u}, std::tuple{24u, 10u, 10u}}) {
    std::string const tag = "(" + std::to_string(a) + "," + std::to_string(e) + "," + std::to_string(m) + ")";
    c.check(rule_out_parabolic_all_q(a, e, m), "rule_out_parabolic_all_q" + tag);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u})
      for (unsigned f = 1; f <= 8; ++f)
        c.check(rule_out_parabolic(a, e, m, p, f),
                "rule_out_parabolic" + tag + " at q = " + std::to_string(p) + "^" + std::to_string(f));
  }
}

// ---------------------------------------------------------------------------

char const *const kE6Word = "123142314542314565423456";

void criterion4(Checker &c)
{
  auto F4 = WeylGroup::of("F4");
  auto E6 = WeylGroup::of("E6");
  auto expect_poly = [&](WeylGroup const &W, Perm const &w, bool tw, char const *text, std::string const &what) {
    auto got = torus_order_poly(W, w, tw);
    c.check(got == FactoredPolynomial::parse(text), what + ": expected " + text + ", got " + got.to_string());
  };
  expect_poly(F4, F4.longest_element(), false, "(q+1)^4", "F4 longest element");
  expect_poly(F4, F4.group().identity(), false, "(q-1)^4", "F4 identity");
  Perm const w = E6.word_to_element(kE6Word);
  expect_poly(E6, w, false, "(q^2+q+1)^3", "E6 word");
  expect_poly(E6, E6.group().identity(), true, "(q+1)^6", "twisted E6 identity");

  BigInt const cw = centralizer(E6.group(), w).order();
  c.note("|C_W(w)| = " + cw.str() + " for the E6 word; C_W(w) has order 648 = |GU3(2)|, while 216 = |SU3(2)|");
  c.equal(BigInt(216), cw, "|C_W(w)| for the E6 word");

  std::size_t classes = 0;
  for (auto const &x : conjugacy_class_reps(E6.group())) {
    ++classes;
    for (bool tw : {false, true}) {
      BigInt const poly = torus_order_poly(E6, x, tw).eval(BigInt(2));
      BigInt const snf = torus_structure(E6, x, tw, BigInt(2)).order();
      c.check(poly == snf, "E6 class " + WeylGroup::word_string(E6.element_to_word(x)) +
                               (tw ? " (twisted)" : "") + ": order polynomial at q = 2 is " + poly.str() +
                               ", SNF product " + snf.str());
    }
  }
  c.equal(std::size_t{25}, classes, "conjugacy classes of W(E6)");
}

// ---------------------------------------------------------------------------

std::string join(std::vector<BigInt> const &v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].str();
  return s + ")";
}

void criterion5(Checker &c)
{
  auto F4 = WeylGroup::of("F4");
  auto E6 = WeylGroup::of("E6");
  auto t1 = torus_structure(F4, F4.longest_element(), false, BigInt(4));
  c.equal(std::string("(5,5,5,5)"), join(t1.invariant_factors), "F4 longest at q = 4");
  auto t2 = torus_structure(E6, E6.word_to_element(kE6Word), false, BigInt(2));
  c.equal(std::string("(7,7,7)"), join(t2.invariant_factors), "E6 word at q = 2");
  for (auto const *W : {&F4, &E6})
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
      auto t = torus_structure(*W, W->group().identity(), false, BigInt(q));
      std::vector<BigInt> want(static_cast<std::size_t>(W->rank()), BigInt(q - 1));
      if (q == 2)
        want.clear();
      c.equal(join(want), join(t.invariant_factors),
              W->system().datum().type_label + " identity at q = " + std::to_string(q));
    }
}

// ---------------------------------------------------------------------------

void criterion6(Checker &c)
{
  auto F4 = WeylGroup::of("F4");
  auto V = coroot_module(F4, F4.group().generators(), 0);
  auto rv = is_irreducible(V);
  c.check(rv.irreducible(), "W(F4) coroot module over Q is " + verdict_name(rv.verdict));

  auto facs = search_factorizations(F4.group(), 16, sylow2_isomorphic);
  c.note(std::to_string(facs.size()) + " factorizations of W(F4) with isomorphic Sylow 2-subgroups, factors of order divisible by 16");
  c.check(!facs.empty(), "no factorizations of W(F4) found");
  std::map<std::uint64_t, std::size_t> failing;
  for (auto const &f : facs)
    for (std::uint64_t field : {0u, 2u, 5u})
      for (auto const *K : {&f.A, &f.B}) {
        auto r = is_irreducible(coroot_module(F4, K->generators(), field));
        if (!r.irreducible()) {
          ++failing[field];
          c.check(false, "W(F4) = " + f.A.order().str() + " * " + f.B.order().str() + ": factor of order " +
                             K->order().str() + " is " + verdict_name(r.verdict) + " over " +
                             (field ? "F" + std::to_string(field) : std::string("Q")));
        }
      }
  for (std::uint64_t field : {0u, 2u, 5u})
    c.note("W(F4) factor restrictions failing over " + (field ? "F" + std::to_string(field) : std::string("Q")) +
           ": " + std::to_string(failing[field]));

  // Same question for W(E6) and its derived subgroup, reported only.
  auto E6 = WeylGroup::of("E6");
  PermGroup D = derived_subgroup(E6.group());
  for (std::uint64_t field : {0u, 2u, 5u}) {
    auto r = is_irreducible(coroot_module(E6, D.generators(), field));
    c.note("W(E6)' (order " + D.order().str() + ") on the coroot module over " +
           (field ? "F" + std::to_string(field) : std::string("Q")) + ": " + verdict_name(r.verdict));
  }

  Perm const w = E6.word_to_element(kE6Word);
  for (std::uint64_t r : {7u, 13u}) {
    auto T = centralizer_torus_module(E6, w, r);
    std::vector<IntMatrix> mats;
    for (auto const &m : T.generator_matrices) {
      IntMatrix im;
      for (auto const &row : m)
        im.emplace_back(row.begin(), row.end());
      mats.push_back(im);
    }
    auto M = make_module(r, mats);
    auto res = is_irreducible(M);
    c.check(res.irreducible(), "C_W(w) on the 6-dimensional module mod " + std::to_string(r) + " is " +
                                   verdict_name(res.verdict) +
                                   (res.witness ? " (invariant subspace of dimension " +
                                                      std::to_string(res.witness->basis.size()) + ")"
                                                : std::string()));
    // r-torsion of the torus: kernel of qM - 1 with q of order 3 mod r
    std::int64_t const q = r == 7 ? 2 : 3;
    IntMatrix const mw = E6.coroot_matrix(w);
    auto const rr = static_cast<std::int64_t>(r);
    RatMatrix a(mw.size());
    for (std::size_t i = 0; i < mw.size(); ++i)
      for (std::size_t j = 0; j < mw.size(); ++j)
        a[i].emplace_back(((q * mw[i][j] - (i == j ? 1 : 0)) % rr + rr) % rr);
    auto K = kernel_submodule(M, a);
    auto rk = is_irreducible(K);
    c.note("r = " + std::to_string(r) + ": the r-torsion subgroup of the torus is " + std::to_string(K.dimension) +
           "-dimensional and C_W(w) acts on it " + (rk.irreducible() ? "irreducibly" : verdict_name(rk.verdict)));
  }
}

// ---------------------------------------------------------------------------

void criterion7(Checker &c)
{
  PermGroup const GU = io::load_group(io::fixture_path("gu32"));
  PermGroup const SU = io::load_group(io::fixture_path("su32"));
  auto recs = search_factorizations(GU, 8, sylow2_isomorphic);
  std::size_t bad = 0;
  for (auto const &f : recs) {
    bool ok = f.A.same_group(GU) || f.B.same_group(GU) || f.A.same_group(SU) || f.B.same_group(SU);
    if (!ok)
      ++bad;
  }
  c.equal(std::size_t{11}, recs.size(), "GU3(2) factorizations under the Sylow-2 predicate");
  c.equal(std::size_t{0}, bad, "records without GU3(2) or SU3(2) as a factor");
  if (recs.size() != 11 || bad)
    for (auto const &f : recs)
      c.check(false, "record: |A| = " + f.A.order().str() + ", |B| = " + f.B.order().str() +
                         ", |A cap B| = " + f.intersection_order.str());

  auto A6 = io::load_group(io::fixture_path("a6"));
  auto r1 = verify_factorization(A6, io::load_group(io::fixture_path("a5_point")),
                                 io::load_group(io::fixture_path("a5_transitive")));
  c.check(r1.has_value(), "A6 = A5 * A5");
  if (r1)
    c.equal(BigInt(10), r1->intersection_order, "A6 = A5 * A5 intersection order");
  auto M11 = io::load_group(io::fixture_path("m11"));
  auto r2 = verify_factorization(M11, io::load_group(io::fixture_path("m11_11_5")),
                                 io::load_group(io::fixture_path("m11_m9_2")));
  c.check(r2.has_value(), "M11 = (11:5) * (M9.2)");
  if (r2)
    c.equal(BigInt(1), r2->intersection_order, "M11 = (11:5) * (M9.2) intersection order");
}

// ---------------------------------------------------------------------------

// Order of q mod r by repeated multiplication, independent of multiplicative_order.
std::uint64_t slow_order(std::uint64_t q, std::uint64_t r)
{
  std::uint64_t x = q % r, k = 1;
  while (x != 1) {
    x = x * q % r;
    ++k;
  }
  return k;
}

void criterion8(Checker &c)
{
  std::set<std::pair<std::uint64_t, unsigned>> exceptions, expected;
  std::size_t checked = 0;
  for (std::uint64_t q = 2; q <= 64; ++q) {
    if (factor_integer(BigInt(q)).size() != 1)
      continue; // not a prime power
    for (unsigned n = 2; n <= 12; ++n) {
      auto r = ppd(BigInt(q), n);
      ++checked;
      if (r.primes.empty())
        exceptions.insert({q, n});
      for (auto const &p : r.primes) {
        auto const pr = static_cast<std::uint64_t>(p);
        c.check(pr % n == 1, "ppd(" + std::to_string(q) + "," + std::to_string(n) + ") prime " + p.str() + " is not 1 mod n");
        c.check(slow_order(q, pr) == n, "ppd(" + std::to_string(q) + "," + std::to_string(n) + ") prime " + p.str() +
                                            " has the wrong order");
      }
    }
    std::uint64_t const s = q + 1;
    if ((s & (s - 1)) == 0)
      expected.insert({q, 2u});
  }
  expected.insert({2u, 6u});
  c.check(exceptions == expected, "ppd exceptions differ from {(2,6)} and {(q,2) : q+1 a power of 2}");
  c.note(std::to_string(checked) + " pairs (q, n) swept, " + std::to_string(exceptions.size()) + " exceptions");
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (std::uint64_t f = 1; f <= 64; ++f)
      c.check(check_pf_bound(p, f), "p^f >= (f_p)^p at p = " + std::to_string(p) + ", f = " + std::to_string(f));
}

// ---------------------------------------------------------------------------

void criterion9(Checker &c)
{
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (p < 3)
      continue;
    auto G = directed_cycle(p);
    for (unsigned s = 1; s <= 10; ++s)
      c.check(s_arc_transitive(G, s).transitive, "directed " + std::to_string(p) + "-cycle at s = " + std::to_string(s));
  }
  auto P = paley_digraph(7);
  c.equal(std::size_t{3}, P.valency(), "Paley tournament valency");
  c.check(s_arc_transitive(P, 1).transitive, "Paley tournament is arc-transitive");
  c.check(!s_arc_transitive(P, 2).transitive, "Paley tournament is not 2-arc-transitive");

  auto corpus = digraph_corpus();
  std::size_t compared = 0, audits = 0, probes = 0, prop_checked = 0, prop_held = 0;
  for (auto const &[name, G] : corpus) {
    bool prev = true;
    for (unsigned s = 1; s <= 4; ++s) {
      SArcReport r;
      try {
        r = s_arc_transitive(G, s); // throws if the criterion and the brute count disagree
      } catch (std::logic_error const &e) {
        c.check(false, name + " at s = " + std::to_string(s) + ": " + e.what());
        continue;
      }
      if (r.orbit_count)
        ++compared;
      c.check(prev || !r.transitive, name + ": transitive at s = " + std::to_string(s) + " but not at s - 1");
      prev = r.transitive;
      if (r.transitive) {
        auto a = divisibility_audit(G, s);
        ++audits;
        c.check(a.holds, name + ": |Hv|^(s-1) does not divide |Huv|^s at s = " + std::to_string(s));
        c.check(a.valency_power_divides, name + ": valency^s does not divide |Hv| at s = " + std::to_string(s));
      }
    }
    if (G.connected()) {
      ++probes;
      auto v = normalized_subgroup_probe(G);
      c.check(v.empty(), name + ": a normal subgroup of Hv is normalized by h");
    }
    auto dich = G.valency_dichotomy_holds();
    c.check(!dich || *dich, name + ": vertex-primitive with valency 2");

    // normal vertex-transitive M: (H, s)-transitive implies (M, s-1)-transitive, reported only
    if (G.H().order() <= 500) {
      unsigned s = 1;
      while (s < 4 && s_arc_transitive(G, s + 1).transitive)
        ++s;
      if (s >= 2) {
        SmallGroup T(G.H());
        for (auto const &cl : subgroup_classes(T)) {
          if (cl.class_size != 1 || cl.order == T.order() || cl.order == 1)
            continue;
          PermGroup M = T.to_perm_group(cl.rep);
          PermGroup Mv = intersection(M, G.Hv());
          if (M.order() / Mv.order() != BigInt(G.vertex_count()))
            continue;
          ++prop_checked;
          auto orbits = brute_arc_orbits(G, Mv, s - 1);
          if (orbits && *orbits == 1)
            ++prop_held;
        }
      }
    }
  }
  c.check(corpus.size() >= 20, "corpus has fewer than 20 digraphs");
  c.check(compared >= 20, "fewer than 20 brute-force comparisons");
  c.note(std::to_string(corpus.size()) + " digraphs, " + std::to_string(compared) + " criterion/brute comparisons, " +
         std::to_string(audits) + " divisibility audits, " + std::to_string(probes) + " probes");
  c.note("normal vertex-transitive subgroups of s-arc-transitive instances (s >= 2): " + std::to_string(prop_held) +
         " of " + std::to_string(prop_checked) + " are (s-1)-arc-transitive");

  // negative control: Hv normal in H and <Hv, h> != H
  PermGroup H(9, {Perm::from_cycles(9, "(1,2,3)"), Perm::from_cycles(9, "(4,5,6)"), Perm::from_cycles(9, "(7,8,9)")});
  CosetDigraph N(H, PermGroup(9, {Perm::from_cycles(9, "(1,2,3)")}), Perm::from_cycles(9, "(4,5,6)"));
  c.check(!N.connected(), "negative control is connected");
  c.check(!normalized_subgroup_probe(N).empty(), "probe misses the violation in the negative control");
}

// ---------------------------------------------------------------------------

void criterion10(Checker &c)
{
  auto M12 = io::load_group(io::fixture_path("m12"));
  auto factors = chop_permutation_module(M12, 5);
  std::vector<std::size_t> dims;
  for (auto const &f : factors)
    dims.push_back(f.module.dimension);
  std::sort(dims.begin(), dims.end());
  c.check(dims == std::vector<std::size_t>{1, 11}, "composition factors of the M12 permutation module over F5");
  auto it = std::find_if(factors.begin(), factors.end(), [](auto const &f) { return f.module.dimension == 11; });
  if (it == factors.end())
    return;
  auto restrict_to = [&](PermGroup const &K) {
    std::vector<RatMatrix> mats;
    for (auto const &g : K.generators())
      mats.push_back(permutation_matrix(g));
    return it->apply(mats);
  };
  auto point = restrict_to(io::load_group(io::fixture_path("m11_point")));
  auto trans = restrict_to(io::load_group(io::fixture_path("m11_transitive")));
  std::size_t const fp = fixed_vectors(point), ft = fixed_vectors(trans);
  c.check(fp >= 1, "point stabilizer M11 has no fixed vector on the 11-dimensional factor");
  c.equal(std::size_t{0}, ft, "fixed space of the transitive M11");
  auto ri = is_irreducible(trans);
  c.check(ri.irreducible(), "transitive M11 on the 11-dimensional factor is " + verdict_name(ri.verdict));
  auto rp = is_irreducible(point);
  c.note("point stabilizer M11: fixed space dimension " + std::to_string(fp) + ", " + verdict_name(rp.verdict));
  bool perfect = derived_subgroup(M12).order() == M12.order();
  c.note(std::string("M12 is ") + (perfect ? "perfect, so twisting by linear characters gives no further 11-dimensional modules"
                                           : "not perfect"));
}

struct CriterionDef {
  char const *title;
  double limit;
  std::function<void(Checker &)> body;
};

std::vector<CriterionDef> const &definitions()
{
  // time limits in seconds
  static std::vector<CriterionDef> const s{
      {"root and Weyl group orders", 5.0, criterion1},
      {"relative Weyl groups of subsystems", 30.0, criterion2},
      {"parabolic suborbits of F4, J = {1,2,4}", 60.0, criterion3},
      {"maximal torus orders", 60.0, criterion4},
      {"torus structures via Smith normal form", 5.0, criterion5},
      {"irreducibility suite", 600.0, criterion6},
      {"factorization engine", 300.0, criterion7},
      {"primitive prime divisors", 5.0, criterion8},
      {"coset digraph suite", 600.0, criterion9},
      {"M12 permutation module over F5", 120.0, criterion10},
  };
  return s;
}

} // namespace

CriterionResult run_criterion(int id)
{
  if (id < 1 || id > kCriterionCount)
    throw std::out_of_range("criterion id must be between 1 and " + std::to_string(kCriterionCount));
  auto const &def = definitions()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = def.title;
  r.limit_seconds = def.limit;
  Checker c(r);
  auto const t0 = std::chrono::steady_clock::now();
  try {
    def.body(c);
  } catch (std::exception const &e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.limit_seconds)
    r.failures.push_back("time " + std::to_string(r.seconds) + " s exceeds the limit of " +
                         std::to_string(r.limit_seconds) + " s");
  r.pass = r.failures.empty();
  return r;
}

std::vector<CriterionResult> run_all_criteria()
{
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id));
  return out;
}

} // namespace weylkit
