#include "raag/bass_serre.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>

namespace raag {

std::string TreeVertex::key() const {
  return static_cast<char>('0' + static_cast<int>(side)) + rep.word().key();
}

TreeVertex tree_vertex(const AmalgamSplitting& s, Side side, const Word& rep) {
  if (side == Side::edge) throw InputError("tree vertices belong to side 1 or side 2");
  return {side, coset_representative(s.ambient(), s.vertex_group(side), rep)};
}

TreeEdge tree_edge(const AmalgamSplitting& s, const Word& rep) {
  return {coset_representative(s.ambient(), s.lambda(), rep)};
}

TreeVertex act(const AmalgamSplitting& s, const Word& g, const TreeVertex& v) {
  return tree_vertex(s, v.side, g * v.rep.word());
}

TreeEdge act(const AmalgamSplitting& s, const Word& g, const TreeEdge& e) {
  return tree_edge(s, g * e.rep.word());
}

bool fixes_vertex(const AmalgamSplitting& s, const Word& g, const TreeVertex& v) {
  const Word& r = v.rep.word();
  return in_special_subgroup(s.ambient(), s.vertex_group(v.side), r.inverse() * g * r);
}

bool fixes_edge(const AmalgamSplitting& s, const Word& g, const TreeEdge& e) {
  const Word& r = e.rep.word();
  return in_special_subgroup(s.ambient(), s.lambda(), r.inverse() * g * r);
}

int tree_distance(const AmalgamSplitting& s, const TreeVertex& a, const TreeVertex& b) {
  const Word k = a.rep.word().inverse() * b.rep.word();
  auto syl = syllable_decompose(s, k);
  std::size_t lo = 0;
  std::size_t hi = syl.size();
  if (hi == 1 && syl.front().side == Side::edge) hi = 0;
  // Leading syllables in A(side_a) fix a; trailing ones in A(side_b) are absorbed by b's coset.
  if (hi > lo && syl[lo].side == a.side) ++lo;
  if (hi > lo && syl[hi - 1].side == b.side) --hi;
  const auto rest = static_cast<int>(hi - lo);
  if (rest == 0) return a.side == b.side ? 0 : 1;
  return rest + 1;
}

std::optional<int> TreeBall::find(const TreeVertex& v) const {
  auto it = vertex_index_.find(v.key());
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> TreeBall::find(const TreeEdge& e) const {
  auto it = edge_index_.find(e.rep.word().key());
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int TreeBall::distance(int x, int y) const {
  int d = 0;
  while (x != y) {
    if (depth_[x] < depth_[y]) std::swap(x, y);
    x = parent_[x];
    ++d;
  }
  return d;
}

void TreeBall::index_tree() {
  const auto n = vertices_.size();
  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  depth_.assign(n, -1);
  std::deque<int> queue{0};
  depth_[0] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& inc : incident_[v]) {
      if (depth_[inc.other] >= 0) continue;
      depth_[inc.other] = depth_[v] + 1;
      parent_[inc.other] = v;
      parent_edge_[inc.other] = inc.edge;
      queue.push_back(inc.other);
    }
  }
}

namespace {

struct Cosets {
  NormalForm edge;
  NormalForm first;
  NormalForm second;
};

template <typename F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  }
}

bool rep_less(const NormalForm& a, const NormalForm& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TreeBall build_ball(const AmalgamSplitting& s, const BallOptions& opts) {
  if (opts.length < 0) throw InputError("ball length must be non-negative");
  const Graph& g = s.ambient();
  const int margin = opts.margin < 0 ? opts.length : opts.margin;
  const auto cap = static_cast<std::size_t>(opts.length);

  std::unordered_map<std::string, std::size_t> seen;
  std::vector<Word> elements;
  auto admit = [&](const Word& nf) {
    if (nf.size() > cap || !seen.emplace(nf.key(), elements.size()).second) return false;
    elements.push_back(nf);
    if (elements.size() > opts.element_budget)
      throw BudgetExceeded("ball enumeration exceeded " + std::to_string(opts.element_budget) +
                           " group elements");
    return true;
  };

  std::vector<Word> frontier;
  if (admit(Word{})) frontier.push_back(Word{});
  for (const Word& f : opts.focus) {
    const Word nf = normal_form(g, f).word();
    Word prefix;
    for (std::size_t i = 0; i <= nf.size(); ++i) {
      const Word p = normal_form(g, prefix).word();
      if (admit(p)) frontier.push_back(p);
      if (i < nf.size()) prefix.push_back(nf[i]);
    }
  }

  std::vector<Letter> alphabet;
  for (int v = 0; v < g.size(); ++v) {
    alphabet.push_back({v, 1});
    alphabet.push_back({v, -1});
  }
  for (int depth = 0; depth < margin && !frontier.empty(); ++depth) {
    std::vector<Word> candidates(frontier.size() * alphabet.size());
    for_each_index(candidates.size(), opts.exec, [&](std::size_t i) {
      Word w = frontier[i / alphabet.size()];
      w.push_back(alphabet[i % alphabet.size()]);
      candidates[i] = normal_form(g, w).word();
    });
    std::vector<Word> next;
    for (const Word& c : candidates)
      if (admit(c)) next.push_back(c);
    frontier = std::move(next);
  }

  // Literal prefixes keep the edge set connected: p and p·x share the vertex p·A(side of x).
  const std::size_t enumerated = elements.size();
  for (std::size_t i = 0; i < enumerated; ++i) {
    const Word full = elements[i];
    Word prefix;
    for (std::size_t k = 0; k + 1 < full.size(); ++k) {
      prefix.push_back(full[k]);
      admit(normal_form(g, prefix).word());
    }
  }

  std::vector<Cosets> cosets(elements.size());
  for_each_index(elements.size(), opts.exec, [&](std::size_t i) {
    cosets[i] = {coset_representative(g, s.lambda(), elements[i]),
                 coset_representative(g, s.side1(), elements[i]),
                 coset_representative(g, s.side2(), elements[i])};
  });

  std::unordered_map<std::string, Cosets> edge_map;
  std::unordered_map<std::string, TreeVertex> vertex_map;
  for (const Cosets& c : cosets) {
    if (!edge_map.emplace(c.edge.word().key(), c).second) continue;
    for (TreeVertex v : {TreeVertex{Side::first, c.first}, TreeVertex{Side::second, c.second}})
      vertex_map.emplace(v.key(), std::move(v));
    if (vertex_map.size() > opts.vertex_budget)
      throw BudgetExceeded("ball exceeded the vertex budget of " +
                           std::to_string(opts.vertex_budget));
  }

  TreeBall ball(s);
  ball.length_ = opts.length;
  for (auto& [key, v] : vertex_map) ball.vertices_.push_back(v);
  std::sort(ball.vertices_.begin(), ball.vertices_.end(), [](const TreeVertex& a, const TreeVertex& b) {
    if (a.rep == b.rep) return a.side < b.side;
    return rep_less(a.rep, b.rep);
  });
  for (std::size_t i = 0; i < ball.vertices_.size(); ++i)
    ball.vertex_index_.emplace(ball.vertices_[i].key(), static_cast<int>(i));

  std::vector<const Cosets*> edge_list;
  edge_list.reserve(edge_map.size());
  for (const auto& [key, c] : edge_map) edge_list.push_back(&c);
  std::sort(edge_list.begin(), edge_list.end(),
            [](const Cosets* a, const Cosets* b) { return rep_less(a->edge, b->edge); });
  ball.incident_.assign(ball.vertices_.size(), {});
  for (const Cosets* c : edge_list) {
    const int e = static_cast<int>(ball.edges_.size());
    const int a = ball.vertex_index_.at(TreeVertex{Side::first, c->first}.key());
    const int b = ball.vertex_index_.at(TreeVertex{Side::second, c->second}.key());
    ball.edges_.push_back({TreeEdge{c->edge}, a, b});
    ball.edge_index_.emplace(c->edge.word().key(), e);
    ball.incident_[a].push_back({e, b});
    ball.incident_[b].push_back({e, a});
  }
  ball.index_tree();
  if (std::any_of(ball.depth_.begin(), ball.depth_.end(), [](int d) { return d < 0; }))
    throw std::logic_error("enumerated ball is not connected");
  if (ball.edges_.size() + 1 != ball.vertices_.size())
    throw std::logic_error("enumerated ball is not a tree");
  return ball;
}

TreePath geodesic(const TreeBall& ball, int x, int y) {
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= ball.vertex_count() ||
      static_cast<std::size_t>(y) >= ball.vertex_count())
    throw InputError("geodesic endpoint outside the ball");
  std::vector<int> from_x{x};
  std::vector<int> from_y{y};
  std::vector<int> edges_x;
  std::vector<int> edges_y;
  while (from_x.back() != from_y.back()) {
    auto& verts = ball.depth(from_x.back()) >= ball.depth(from_y.back()) ? from_x : from_y;
    auto& edges = &verts == &from_x ? edges_x : edges_y;
    edges.push_back(ball.parent_edge(verts.back()));
    verts.push_back(ball.parent(verts.back()));
  }
  TreePath path;
  path.vertices = from_x;
  path.edges = edges_x;
  for (std::size_t i = from_y.size() - 1; i-- > 0;) path.vertices.push_back(from_y[i]);
  for (std::size_t i = edges_y.size(); i-- > 0;) path.edges.push_back(edges_y[i]);
  return path;
}

std::vector<int> fixed_vertices(const TreeBall& ball, const Word& g) {
  std::vector<int> out;
  for (std::size_t i = 0; i < ball.vertex_count(); ++i)
    if (fixes_vertex(ball.splitting(), g, ball.vertex(static_cast<int>(i))))
      out.push_back(static_cast<int>(i));
  return out;
}

TreeVertex witness_fixed_vertex(const AmalgamSplitting& s, const Classification& c) {
  if (c.kind != Kind::elliptic) throw InputError("hyperbolic elements fix no vertex");
  return tree_vertex(s, c.side == Side::edge ? Side::first : c.side, c.conjugator);
}

namespace {

struct Segments {
  TreePath path;
  std::size_t u_end = 0;
  std::size_t v_begin = 0;
};

std::optional<Segments> fixed_segments(const TreeBall& ball, const Word& u, const Word& v) {
  const AmalgamSplitting& s = ball.splitting();
  const auto cu = classify(s, u);
  const auto cv = classify(s, v);
  if (cu.kind != Kind::elliptic || cv.kind != Kind::elliptic)
    throw InputError("fixed segments need elliptic elements");
  const auto x = ball.find(witness_fixed_vertex(s, cu));
  const auto y = ball.find(witness_fixed_vertex(s, cv));
  if (!x || !y) return std::nullopt;
  Segments seg;
  seg.path = geodesic(ball, *x, *y);
  const auto& verts = seg.path.vertices;
  while (seg.u_end + 1 < verts.size() && fixes_vertex(s, u, ball.vertex(verts[seg.u_end + 1])))
    ++seg.u_end;
  seg.v_begin = verts.size() - 1;
  while (seg.v_begin > 0 && fixes_vertex(s, v, ball.vertex(verts[seg.v_begin - 1]))) --seg.v_begin;
  return seg;
}

}  // namespace

Bridge bridge_edge(const TreeBall& ball, const Word& u, const Word& v) {
  const auto seg = fixed_segments(ball, u, v);
  if (!seg) throw InputError("a fixed vertex lies outside the ball");
  if (seg->u_end >= seg->v_begin) throw InputError("fixed sets intersect; there is no bridge edge");
  Bridge b;
  b.edge = seg->path.edges[seg->u_end];
  b.path = seg->path;
  b.u_end = seg->u_end;
  b.v_begin = seg->v_begin;
  return b;
}

std::optional<bool> fixed_sets_meet(const TreeBall& ball, const Word& u, const Word& v) {
  const auto seg = fixed_segments(ball, u, v);
  if (!seg) return std::nullopt;
  return seg->u_end >= seg->v_begin;
}

int displacement(const TreeBall& ball, const Word& g) {
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < ball.vertex_count() && best > 0; ++i) {
    const auto image = ball.find(act(ball.splitting(), g, ball.vertex(static_cast<int>(i))));
    if (image) best = std::min(best, ball.distance(static_cast<int>(i), *image));
  }
  if (best == std::numeric_limits<int>::max())
    throw InputError("no ball vertex has its image inside the ball");
  return best;
}

std::vector<int> axis_vertices(const TreeBall& ball, const Word& g) {
  const auto c = classify(ball.splitting(), g);
  if (c.kind != Kind::hyperbolic) throw InputError("elliptic elements have no axis");
  std::vector<int> out;
  for (std::size_t i = 0; i < ball.vertex_count(); ++i) {
    const auto image = ball.find(act(ball.splitting(), g, ball.vertex(static_cast<int>(i))));
    if (image && ball.distance(static_cast<int>(i), *image) == c.translation_length)
      out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace raag
