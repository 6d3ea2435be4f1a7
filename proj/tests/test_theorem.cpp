#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "raag/io.hpp"
#include "raag/theorem.hpp"

using namespace raag;

namespace {

Graph p3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
Graph c4() { return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}); }
Graph free_xy() { return Graph({"x", "y"}); }

AmalgamSplitting free_split() { return AmalgamSplitting::from_separator(free_xy(), VertexSet{}, 0); }

Word w(const Graph& g, const char* text) { return io::parse_word(g, text); }

bool all_pass(const TheoremReport& r) {
  return std::all_of(r.checks.begin(), r.checks.end(),
                     [](const Check& c) { return c.status == Status::pass || c.status == Status::assumed; });
}

// The elliptic conclusion checked with oracles: Λ separates the chosen pair
// and every vertex of Λ maps into the witness edge stabilizer.
void check_elliptic_conclusion(const Action& a, const TheoremReport& r) {
  const Graph& src = a.source_graph();
  const auto& s = a.tree();
  REQUIRE(r.kind == Case::all_elliptic);
  REQUIRE(r.witness_edge.has_value());
  REQUIRE(r.separated.has_value());
  CHECK(oracle::separating(src, r.lambda.bits()));
  const auto [u, v] = *r.separated;
  CHECK_FALSE(r.lambda.contains(u));
  CHECK_FALSE(r.lambda.contains(v));
  CHECK(oracle::component_count(src, r.lambda.bits()) >= 2);
  const Word rep = r.witness_edge->rep.word();
  for (int x : r.lambda.members()) {
    const auto in = oracle::in_subgroup(s.ambient(), s.lambda(), rep.inverse() * a.image(x) * rep);
    REQUIRE(in.has_value());
    CHECK(*in);
  }
}

}  // namespace

TEST_CASE("direct action of P3 on its own splitting") {
  const auto s = AmalgamSplitting::from_separator(p3(), p3().set_of({"b"}), 0);
  const Action a = Action::direct(s);
  const auto r = verify_theorem(a);
  CHECK(r.kind == Case::all_elliptic);
  CHECK(r.lambda == p3().set_of({"b"}));
  CHECK(r.separated == std::optional<std::pair<int, int>>({0, 2}));
  CHECK(r.passed());
  CHECK(all_pass(r));
  check_elliptic_conclusion(a, r);
}

TEST_CASE("direct action of C4 on the {a,c} splitting") {
  const auto s = AmalgamSplitting::from_separator(c4(), c4().set_of({"a", "c"}), 1);
  const Action a = Action::direct(s);
  const auto r = verify_theorem(a);
  CHECK(r.kind == Case::all_elliptic);
  CHECK(r.passed());
  CHECK(c4().set_of({"a", "c"}).subset_of(r.lambda));
  check_elliptic_conclusion(a, r);
}

TEST_CASE("induced action of P3 onto a free product") {
  const Graph t = free_xy();
  const Action a = Action::induced(InducedAction(RaagHom{p3(), t, {w(t, "x"), Word{}, w(t, "y")}}, free_split()));
  const auto r = verify_theorem(a);
  CHECK(r.kind == Case::all_elliptic);
  CHECK(r.lambda == p3().set_of({"b"}));
  CHECK(r.passed());
  check_elliptic_conclusion(a, r);
}

TEST_CASE("hyperbolic generator gives a lambda-star splitting") {
  const Graph f2({"u", "w"});
  const Graph t = free_xy();
  const Action a = Action::induced(InducedAction(RaagHom{f2, t, {w(t, "x y"), w(t, "x")}}, free_split()));
  const auto r = verify_theorem(a);
  CHECK(r.kind == Case::some_hyperbolic);
  CHECK(r.lambda.empty());
  CHECK(r.passed());
  CHECK(all_pass(r));
}

TEST_CASE("line actions are excluded") {
  const Action a = Action::line(LineAction(p3(), IntegerVector::ones(3)));
  const auto r = verify_theorem(a);
  CHECK(r.kind == Case::line_excluded);
  CHECK(r.passed());
  CHECK_FALSE(r.witness_edge.has_value());
}

TEST_CASE("trivial action fails the precondition") {
  const Graph t = free_xy();
  const Action a = Action::induced(InducedAction(RaagHom{p3(), t, {Word{}, Word{}, Word{}}}, free_split()));
  const auto r = verify_theorem(a);
  CHECK(r.kind == Case::precondition_failed);
  CHECK_FALSE(r.passed());
}

TEST_CASE("an action preserving a line fails the precondition") {
  // Z^2 acting through two powers of the same hyperbolic element: both
  // generators translate one common axis.
  const Graph z2({"p", "q"}, {{"p", "q"}});
  const Graph t = free_xy();
  const Action a = Action::induced(InducedAction(RaagHom{z2, t, {w(t, "x y"), w(t, "x y x y")}}, free_split()));
  const auto r = verify_theorem(a);
  CHECK(r.kind == Case::precondition_failed);
  CHECK_FALSE(r.passed());
}

TEST_CASE("reports are deterministic across runs and execution modes") {
  const auto s = AmalgamSplitting::from_separator(c4(), c4().set_of({"b", "d"}), 0);
  CheckerConfig serial;
  serial.exec = Exec::serial;
  const auto x = verify_theorem(Action::direct(s), serial);
  const auto y = verify_theorem(Action::direct(s));
  const auto z = verify_theorem(Action::direct(s));
  CHECK(io::to_json(c4(), s.ambient(), x).dump() == io::to_json(c4(), s.ambient(), y).dump());
  CHECK(io::to_json(c4(), s.ambient(), y).dump() == io::to_json(c4(), s.ambient(), z).dump());
}

TEST_CASE("abelian splitting report") {
  const auto k3 = oracle::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto r = abelian_splitting_report(k3);
  CHECK(r.complete);
  CHECK_FALSE(r.splits);
  CHECK(r.cut_cliques.empty());
  const auto p = abelian_splitting_report(p3());
  CHECK(p.splits);
  CHECK(p.cut_cliques == std::vector<VertexSet>{p3().set_of({"b"})});
  const auto d = abelian_splitting_report(free_xy());
  CHECK(d.disconnected);
  CHECK(d.splits);
  CHECK_FALSE(abelian_splitting_report(c4()).splits);
}

TEST_CASE("commuting pair lemmas hold on generator and sampled pairs") {
  for (const Graph& g : {p3(), c4()}) {
    for (auto lam : minimal_separators(g)) {
      const auto s = AmalgamSplitting::from_separator(g, lam, (g.all() - lam).members().front());
      auto pairs = commuting_generator_pairs(g);
      const auto sampled = sample_commuting_pairs(g, 30, 7);
      pairs.insert(pairs.end(), sampled.begin(), sampled.end());
      int decided = 0;
      for (const auto& [x, y] : pairs) {
        CHECK(commute(g, x, y));
        const auto ball = lemma_ball(s, x, y, 4);
        const auto out = check_commuting_pair(ball, x, y);
        CAPTURE(out.detail);
        CHECK(out.status != Status::fail);
        if (out.status == Status::pass) ++decided;
      }
      CHECK(decided * 2 > static_cast<int>(pairs.size()));
    }
  }
}

TEST_CASE("sampled commuting pairs are reproducible") {
  CHECK(sample_commuting_pairs(c4(), 20, 3) == sample_commuting_pairs(c4(), 20, 3));
  CHECK(commuting_generator_pairs(p3()).size() == 2);
}

TEST_CASE("property: every minimal separator yields a passing elliptic report") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : oracle::graphs_up_to_iso(n)) {
      if (!oracle::connected(g)) continue;
      for (const auto& run : verify_all_separators(g)) {
        CAPTURE(run.separator.bits());
        CHECK(run.report.passed());
        CHECK(run.separator.subset_of(run.report.lambda));
        const auto s = AmalgamSplitting::from_separator(g, run.separator,
                                                        (g.all() - run.separator).members().front());
        check_elliptic_conclusion(Action::direct(s), run.report);
      }
    }
  }
}

TEST_CASE("property: nonzero maps to Z always give line exclusion") {
  oracle::Rng rng(41);
  for (const auto& g : oracle::graphs_up_to_iso(4)) {
    IntegerVector phi = IntegerVector::zeros(g.size());
    while (phi.is_zero())
      for (auto& x : phi.values) x = oracle::uniform(rng, -2, 2);
    const auto r = verify_theorem(Action::line(LineAction(g, phi)));
    CHECK(r.kind == Case::line_excluded);
    CHECK(r.passed());
  }
}
