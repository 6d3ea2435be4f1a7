#include "raag/theorem.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <random>
#include <stdexcept>

namespace raag {

const Graph& Action::source_graph() const {
  switch (variant()) {
    case Variant::direct: return std::get<AmalgamSplitting>(impl_).ambient();
    case Variant::induced: return std::get<InducedAction>(impl_).hom().source;
    case Variant::line: return std::get<LineAction>(impl_).ambient();
  }
  throw std::logic_error("unknown action variant");
}

const AmalgamSplitting& Action::tree() const {
  if (const auto* s = std::get_if<AmalgamSplitting>(&impl_)) return *s;
  if (const auto* ia = std::get_if<InducedAction>(&impl_)) return ia->base();
  throw InputError("a line action has no Bass-Serre tree of an amalgam");
}

Word Action::image(const Word& w) const {
  if (const auto* ia = std::get_if<InducedAction>(&impl_)) return ia->hom().apply(w);
  validate(source_graph(), w);
  return w;
}

bool TheoremReport::passed() const {
  if (kind == Case::precondition_failed || kind == Case::indeterminate) return false;
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == Status::fail || c.status == Status::indeterminate;
  });
}

std::string to_string(Case c) {
  switch (c) {
    case Case::all_elliptic: return "AllElliptic";
    case Case::some_hyperbolic: return "SomeHyperbolic";
    case Case::line_excluded: return "LineExcluded";
    case Case::precondition_failed: return "PreconditionFailed";
    case Case::indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::indeterminate: return "indeterminate";
    case Status::assumed: return "assumed";
  }
  return "?";
}

std::vector<Classification> classify_generators(const Action& a) {
  const AmalgamSplitting& s = a.tree();
  std::vector<Classification> out;
  for (int v = 0; v < a.source_graph().size(); ++v) out.push_back(classify(s, a.image(v)));
  return out;
}

AxisSegment axis_segment(const AmalgamSplitting& s, const Word& g, int bound, Exec exec) {
  const auto c = classify(s, g);
  if (c.kind != Kind::hyperbolic) throw InputError("elliptic elements have no axis");
  const Word forward = c.conjugator * c.core.pow(bound);
  const Word backward = c.conjugator * c.core.pow(-bound);
  BallOptions opts;
  opts.focus = {forward, backward};
  opts.margin = 0;
  opts.length = static_cast<int>(std::max(normal_form(s.ambient(), forward).size(),
                                          normal_form(s.ambient(), backward).size()));
  opts.exec = exec;
  const TreeBall ball = build_ball(s, opts);
  const auto from = ball.find(tree_vertex(s, Side::first, backward));
  const auto to = ball.find(tree_vertex(s, Side::first, forward));
  const auto center = ball.find(tree_vertex(s, Side::first, c.conjugator));
  if (!from || !to || !center) throw std::logic_error("axis segment endpoints missing from ball");
  const TreePath path = geodesic(ball, *from, *to);
  AxisSegment seg;
  seg.translation_length = c.translation_length;
  for (int v : path.vertices) seg.vertices.push_back(ball.vertex(v));
  for (int e : path.edges) seg.edges.push_back(ball.edge(e).edge);
  const auto it = std::find(path.vertices.begin(), path.vertices.end(), *center);
  if (it == path.vertices.end()) throw std::logic_error("base point is not on the axis segment");
  seg.center = static_cast<std::size_t>(it - path.vertices.begin());
  return seg;
}

bool on_axis(const AmalgamSplitting& s, const Word& g, int translation_length, const TreeVertex& v) {
  return tree_distance(s, v, act(s, g, v)) == translation_length;
}

TreeBall checker_ball(const Action& a, const CheckerConfig& config) {
  const AmalgamSplitting& s = a.tree();
  BallOptions opts;
  opts.length = config.ball_length;
  opts.margin = config.margin;
  opts.vertex_budget = config.vertex_budget;
  opts.exec = config.exec;
  for (int v = 0; v < a.source_graph().size(); ++v) {
    const Word img = a.image(v);
    const auto c = classify(s, img);
    opts.focus.push_back(img);
    opts.focus.push_back(c.conjugator);
    if (c.kind == Kind::hyperbolic) {
      opts.focus.push_back(c.conjugator * c.core.pow(config.axis_bound));
      opts.focus.push_back(c.conjugator * c.core.pow(-config.axis_bound));
    }
  }
  for (const Word& f : opts.focus)
    opts.length = std::max(opts.length, static_cast<int>(normal_form(s.ambient(), f).size()));
  return build_ball(s, opts);
}

bool PreconditionReport::trivial() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.name == "non_trivial" && c.status == Status::fail;
  });
}

bool PreconditionReport::line() const {
  return line_action || std::any_of(checks.begin(), checks.end(), [](const Check& c) {
           return c.name == "not_a_line" && c.status == Status::fail;
         });
}

bool PreconditionReport::indeterminate() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == Status::indeterminate; });
}

namespace {

// First pair in lexicographic order whose fixed sets are certified disjoint.
// `unknown` is set when some pair could not be decided inside the ball.
std::optional<std::pair<int, int>> first_disjoint_pair(const Action& a, const TreeBall& ball,
                                                       bool& unknown) {
  unknown = false;
  const int n = a.source_graph().size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto meet = fixed_sets_meet(ball, a.image(i), a.image(j));
      if (!meet) {
        unknown = true;
        continue;
      }
      if (!*meet) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

// Generator moving some vertex of the segment off Axis(g). Exact certificate.
std::optional<int> axis_breaker(const Action& a, const Word& g, const AxisSegment& seg) {
  const AmalgamSplitting& s = a.tree();
  for (int w = 0; w < a.source_graph().size(); ++w) {
    const Word img = a.image(w);
    for (const TreeVertex& y : seg.vertices)
      if (!on_axis(s, g, seg.translation_length, act(s, img, y))) return w;
  }
  return std::nullopt;
}

Check not_a_line_check(const Action& a, const Word& g, const std::string& what, const CheckerConfig& config) {
  const auto seg = axis_segment(a.tree(), g, config.axis_bound, config.exec);
  Check c{"not_a_line", Status::pass, config.axis_bound, ""};
  if (const auto w = axis_breaker(a, g, seg)) {
    c.detail = a.source_graph().label(*w) + " moves the axis of " + what + " off itself";
  } else {
    c.status = Status::fail;
    c.detail = "every generator preserves the axis of " + what + " on a segment of " +
               std::to_string(seg.edges.size()) + " edges";
  }
  return c;
}

bool conclusion_separating(const Graph& g, VertexSet lambda) {
  // Independent of is_separating: count components of the induced complement graph.
  return components(induced_subgraph(g, g.all() - lambda)).size() >= 2;
}

bool conclusion_stabilizes(const Action& a, VertexSet lambda, const TreeEdge& e) {
  const AmalgamSplitting& s = a.tree();
  const Word& r = e.rep.word();
  for (int v : lambda.members()) {
    // Membership through the retraction onto A(Λ) rather than through support.
    const Word conj = r.inverse() * a.image(v) * r;
    if (!equal(s.ambient(), retract(s.ambient(), s.lambda(), conj), conj)) return false;
  }
  return true;
}

std::string label_list(const Graph& g, VertexSet s) {
  std::string out = "{";
  for (const auto& l : g.labels_of(s)) out += (out.size() > 1 ? "," : "") + l;
  return out + "}";
}

}  // namespace

PreconditionReport check_preconditions(const Action& a, const TreeBall& ball,
                                       const CheckerConfig& config) {
  PreconditionReport out;
  if (a.variant() == Action::Variant::line) {
    out.line_action = true;
    out.checks.push_back({"not_a_line", Status::fail, std::nullopt,
                          "the action factors through a homomorphism to Z; the tree is a line"});
    return out;
  }
  const Graph& src = a.source_graph();
  const auto classes = classify_generators(a);
  const auto hyperbolic = std::find_if(classes.begin(), classes.end(),
                                       [](const Classification& c) { return c.kind == Kind::hyperbolic; });
  if (hyperbolic != classes.end()) {
    const int v = static_cast<int>(hyperbolic - classes.begin());
    out.checks.push_back({"non_trivial", Status::pass, std::nullopt,
                          src.label(v) + " acts hyperbolically, so no point is fixed by all of A(Γ)"});
    out.checks.push_back(not_a_line_check(a, a.image(v), src.label(v), config));
  } else {
    bool unknown = false;
    out.disjoint_pair = first_disjoint_pair(a, ball, unknown);
    if (out.disjoint_pair) {
      const auto [u, v] = *out.disjoint_pair;
      out.checks.push_back({"non_trivial", Status::pass, std::nullopt,
                            "Fix(" + src.label(u) + ") and Fix(" + src.label(v) + ") are disjoint"});
      out.checks.push_back(not_a_line_check(a, a.image(u) * a.image(v),
                                            src.label(u) + src.label(v), config));
    } else if (unknown) {
      out.checks.push_back({"non_trivial", Status::indeterminate, ball.length(),
                            "some fixed vertex lies outside the ball"});
    } else {
      out.checks.push_back({"non_trivial", Status::fail, std::nullopt,
                            "all generator fixed sets meet pairwise, so they share a fixed point"});
    }
  }
  out.checks.push_back({"minimal", Status::assumed, std::nullopt,
                        "minimality is not finitely decidable here"});
  return out;
}

TheoremReport run_elliptic_case(const Action& a, const TreeBall& ball) {
  const Graph& src = a.source_graph();
  const AmalgamSplitting& s = a.tree();
  bool unknown = false;
  const auto pair = first_disjoint_pair(a, ball, unknown);
  if (!pair) throw std::logic_error("no generator pair with disjoint fixed sets");
  const auto [u, v] = *pair;
  const Bridge bridge = bridge_edge(ball, a.image(u), a.image(v));
  const TreeEdge e = ball.edge(bridge.edge).edge;

  TheoremReport r;
  r.kind = Case::all_elliptic;
  r.witness_edge = e;
  r.separated = *pair;
  for (int w = 0; w < src.size(); ++w)
    if (fixes_edge(s, a.image(w), e)) r.lambda.insert(w);
  r.checks.push_back({"disjoint_fixed_sets", Status::pass, std::nullopt,
                      "fixed segments of " + src.label(u) + " and " + src.label(v) +
                          " on a geodesic of length " + std::to_string(bridge.path.edges.size()) +
                          " are disjoint"});
  const bool sep = separates(src, r.lambda, u, v);
  r.checks.push_back({"separates_pair", sep ? Status::pass : Status::fail, std::nullopt,
                      label_list(src, r.lambda) + (sep ? " separates " : " does not separate ") +
                          src.label(u) + " from " + src.label(v)});
  return r;
}

TheoremReport run_hyperbolic_case(const Action& a, int v, const CheckerConfig& config) {
  const Graph& src = a.source_graph();
  const AmalgamSplitting& s = a.tree();
  const Word g = a.image(v);
  const auto classes = classify_generators(a);
  if (classes.at(v).kind != Kind::hyperbolic) throw InputError("generator does not act hyperbolically");
  const auto seg = axis_segment(s, g, config.axis_bound, config.exec);

  TheoremReport r;
  r.kind = Case::some_hyperbolic;
  int by_lemma = 0;
  int by_bound = 0;
  bool lemma_consistent = true;
  for (int h = 0; h < src.size(); ++h) {
    if (h == v || classes[h].kind != Kind::elliptic) continue;
    const Word img = a.image(h);
    const bool fixes_segment = std::all_of(seg.vertices.begin(), seg.vertices.end(),
                                           [&](const TreeVertex& y) { return fixes_vertex(s, img, y); });
    if (src.adjacent(h, v)) {
      // Commuting elliptic elements fix the whole axis.
      ++by_lemma;
      lemma_consistent = lemma_consistent && fixes_segment;
      r.lambda.insert(h);
    } else if (fixes_segment) {
      ++by_bound;
      r.lambda.insert(h);
    }
  }
  r.witness_edge = seg.edges.at(seg.center);
  r.checks.push_back({"lambda_fixes_axis", lemma_consistent ? Status::pass : Status::fail,
                      by_bound > 0 ? std::optional<int>(config.axis_bound) : std::nullopt,
                      std::to_string(by_lemma) + " by commuting with " + src.label(v) + ", " +
                          std::to_string(by_bound) + " by fixing the axis segment"});

  const VertexSet comp = component_of(src, src.all() - r.lambda, v);
  bool shares_axis = true;
  for (int u : comp.members()) {
    const Word img = a.image(u);
    if (classes[u].kind != Kind::hyperbolic) {
      shares_axis = false;
      break;
    }
    for (const TreeVertex& y : seg.vertices)
      shares_axis = shares_axis && on_axis(s, img, classes[u].translation_length, y);
  }
  r.checks.push_back({"component_shares_axis", shares_axis ? Status::pass : Status::fail,
                      config.axis_bound,
                      "generators in the component " + label_list(src, comp) + " of " + src.label(v) +
                          " are hyperbolic along the same axis"});

  if (const auto w = axis_breaker(a, g, seg)) {
    r.separated = std::make_pair(v, *w);
    const bool sep = !r.lambda.contains(*w) && separates(src, r.lambda, v, *w);
    r.checks.push_back({"separates_pair", sep ? Status::pass : Status::fail, std::nullopt,
                        src.label(*w) + " does not preserve the axis of " + src.label(v) + "; " +
                            label_list(src, r.lambda) + (sep ? " separates them" : " does not separate them")});
  } else {
    r.checks.push_back({"separates_pair", Status::indeterminate, config.axis_bound,
                        "no generator moves the axis segment"});
  }
  return r;
}

TheoremReport verify_theorem(const Action& a, const CheckerConfig& config) {
  if (a.variant() == Action::Variant::line) {
    TheoremReport r;
    r.kind = Case::line_excluded;
    r.checks.push_back({"line_action", Status::pass, std::nullopt,
                        "actions through a homomorphism to Z are lines and lie outside the theorem"});
    return r;
  }
  const TreeBall ball = checker_ball(a, config);
  PreconditionReport pre = check_preconditions(a, ball, config);
  TheoremReport r;
  if (pre.trivial() || pre.line()) {
    r.kind = Case::precondition_failed;
    r.checks = std::move(pre.checks);
    return r;
  }
  if (pre.indeterminate()) {
    r.kind = Case::indeterminate;
    r.checks = std::move(pre.checks);
    return r;
  }
  const auto classes = classify_generators(a);
  const auto hyperbolic = std::find_if(classes.begin(), classes.end(),
                                       [](const Classification& c) { return c.kind == Kind::hyperbolic; });
  if (hyperbolic == classes.end())
    r = run_elliptic_case(a, ball);
  else
    r = run_hyperbolic_case(a, static_cast<int>(hyperbolic - classes.begin()), config);
  r.checks.insert(r.checks.begin(), pre.checks.begin(), pre.checks.end());

  const Graph& src = a.source_graph();
  const bool sep = conclusion_separating(src, r.lambda);
  r.checks.push_back({"conclusion_separating", sep ? Status::pass : Status::fail, std::nullopt,
                      label_list(src, r.lambda) + (sep ? " disconnects " : " does not disconnect ") + "the graph"});
  const bool stab = r.witness_edge && conclusion_stabilizes(a, r.lambda, *r.witness_edge);
  r.checks.push_back({"conclusion_edge_stabilizer", stab ? Status::pass : Status::fail, std::nullopt,
                      "A(" + label_list(src, r.lambda) + ") fixes the witness edge"});
  return r;
}

std::vector<SeparatorRun> verify_all_separators(const Graph& g, const CheckerConfig& config) {
  const auto seps = minimal_separators(g, kDefaultSeparatorBound, config.exec);
  std::vector<SeparatorRun> out(seps.size());
  std::vector<std::exception_ptr> errors(seps.size());
  CheckerConfig inner = config;
  inner.exec = Exec::serial;
  const auto n = static_cast<std::ptrdiff_t>(seps.size());
  auto run_one = [&](std::ptrdiff_t i) {
    try {
      const int pick = std::countr_zero((g.all() - seps[i]).bits());
      out[i] = {seps[i], verify_theorem(Action::direct(AmalgamSplitting::from_separator(g, seps[i], pick)), inner)};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (config.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) run_one(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) run_one(i);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

AbelianReport abelian_splitting_report(const Graph& g) {
  AbelianReport r;
  r.complete = is_complete(g);
  r.disconnected = components(g).size() >= 2;
  r.cut_cliques = cut_cliques(g);
  if (r.complete) {
    r.verdict = "excluded: complete graph";
  } else if (r.cut_cliques.empty()) {
    r.verdict = "no cut-clique: no abelian splitting";
  } else {
    r.splits = true;
    r.verdict = r.disconnected ? "abelian splitting exists (free product)" : "abelian splitting exists";
  }
  return r;
}

LemmaOutcome check_commuting_pair(const TreeBall& ball, const Word& g, const Word& h) {
  const AmalgamSplitting& s = ball.splitting();
  if (!commute(s.ambient(), g, h)) throw InputError("lemma harness needs commuting elements");
  const auto cg = classify(s, g);
  const auto ch = classify(s, h);
  LemmaOutcome out;
  if (cg.kind == Kind::elliptic && ch.kind == Kind::elliptic) {
    out.lemma = "fixed_sets_intersect";
    const auto meet = fixed_sets_meet(ball, g, h);
    if (!meet) {
      out.detail = "a fixed vertex lies outside the ball";
      return out;
    }
    out.status = *meet ? Status::pass : Status::fail;
    out.detail = *meet ? "fixed segments overlap" : "fixed segments are disjoint";
    return out;
  }
  if (cg.kind != ch.kind) {
    out.lemma = "axis_in_fixed_set";
    const Word& hyp = cg.kind == Kind::hyperbolic ? g : h;
    const Word& ell = cg.kind == Kind::hyperbolic ? h : g;
    const auto axis = axis_vertices(ball, hyp);
    if (axis.empty()) {
      out.detail = "no axis vertex inside the ball";
      return out;
    }
    const auto fixed = fixed_vertices(ball, ell);
    const bool ok = std::all_of(axis.begin(), axis.end(), [&](int v) {
      return std::binary_search(fixed.begin(), fixed.end(), v);
    });
    out.status = ok ? Status::pass : Status::fail;
    out.detail = std::to_string(axis.size()) + " axis vertices checked";
    return out;
  }
  out.lemma = "axes_coincide";
  int compared = 0;
  int on_g_axis = 0;
  bool ok = true;
  for (std::size_t i = 0; i < ball.vertex_count(); ++i) {
    const int v = static_cast<int>(i);
    const auto gv = ball.find(act(s, g, ball.vertex(v)));
    const auto hv = ball.find(act(s, h, ball.vertex(v)));
    if (!gv || !hv) continue;
    ++compared;
    const bool in_g = ball.distance(v, *gv) == cg.translation_length;
    const bool in_h = ball.distance(v, *hv) == ch.translation_length;
    on_g_axis += in_g;
    ok = ok && in_g == in_h;
  }
  if (on_g_axis == 0) {
    out.detail = "no axis vertex inside the ball";
    return out;
  }
  out.status = ok ? Status::pass : Status::fail;
  out.detail = std::to_string(compared) + " vertices compared, " + std::to_string(on_g_axis) + " on the axis";
  return out;
}

TreeBall lemma_ball(const AmalgamSplitting& s, const Word& g, const Word& h, int length,
                    std::size_t vertex_budget, Exec exec) {
  BallOptions opts;
  opts.length = length;
  opts.margin = 1;
  opts.vertex_budget = vertex_budget;
  opts.exec = exec;
  for (const Word* w : {&g, &h}) {
    const auto c = classify(s, *w);
    opts.focus.push_back(*w);
    opts.focus.push_back(c.conjugator);
    if (c.kind == Kind::hyperbolic) {
      opts.focus.push_back(c.conjugator * c.core.pow(2));
      opts.focus.push_back(c.conjugator * c.core.pow(-2));
    }
  }
  for (const Word& f : opts.focus)
    opts.length = std::max(opts.length, static_cast<int>(normal_form(s.ambient(), f).size()));
  return build_ball(s, opts);
}

std::vector<std::pair<Word, Word>> commuting_generator_pairs(const Graph& g) {
  std::vector<std::pair<Word, Word>> out;
  for (auto [u, v] : g.edges()) out.emplace_back(Word::generator(u), Word::generator(v));
  return out;
}

std::vector<std::pair<Word, Word>> sample_commuting_pairs(const Graph& g, std::size_t count,
                                                          std::uint64_t seed) {
  if (g.size() == 0) throw InputError("cannot sample words over an empty graph");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_word = [&](VertexSet over, int min_len, int max_len) {
    const auto gens = over.members();
    for (;;) {
      Word w;
      const int len = uniform(min_len, max_len);
      for (int i = 0; i < len; ++i)
        w.push_back({gens[uniform(0, static_cast<int>(gens.size()) - 1)], uniform(0, 1) ? 1 : -1});
      if (min_len == 0 || !normal_form(g, w).is_identity()) return w;
    }
  };
  auto exponent = [&] { return std::array<int, 4>{-2, -1, 1, 2}[uniform(0, 3)]; };

  std::vector<std::pair<Word, Word>> out;
  while (out.size() < count) {
    const Word u = random_word(g.all(), 0, 2);
    if (uniform(0, 1) == 0) {
      const Word w = random_word(g.all(), 1, 3);
      out.emplace_back(u * w.pow(exponent()) * u.inverse(), u * w.pow(exponent()) * u.inverse());
    } else {
      const int x = uniform(0, g.size() - 1);
      const Word z = random_word(g.neighbours(x) | VertexSet::single(x), 1, 3);
      out.emplace_back(u * Word::power(x, exponent()) * u.inverse(), u * z * u.inverse());
    }
  }
  return out;
}

}  // namespace raag
