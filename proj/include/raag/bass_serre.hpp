#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raag/splitting.hpp"

namespace raag {

/// The coset rep·A(side_i); `rep` is the shortest element of the coset.
struct TreeVertex {
  Side side = Side::first;
  NormalForm rep;

  std::string key() const;
  bool operator==(const TreeVertex&) const = default;
};

/// The coset rep·A(Λ), joining rep·A(side1) and rep·A(side2).
struct TreeEdge {
  NormalForm rep;

  bool operator==(const TreeEdge&) const = default;
};

TreeVertex tree_vertex(const AmalgamSplitting& s, Side side, const Word& rep);
TreeEdge tree_edge(const AmalgamSplitting& s, const Word& rep);

TreeVertex act(const AmalgamSplitting& s, const Word& g, const TreeVertex& v);
TreeEdge act(const AmalgamSplitting& s, const Word& g, const TreeEdge& e);

bool fixes_vertex(const AmalgamSplitting& s, const Word& g, const TreeVertex& v);
bool fixes_edge(const AmalgamSplitting& s, const Word& g, const TreeEdge& e);

/// Exact distance in the whole Bass-Serre tree, read off the syllable length
/// of a.rep^-1 · b.rep. No enumeration involved.
int tree_distance(const AmalgamSplitting& s, const TreeVertex& a, const TreeVertex& b);

struct BallOptions {
  /// Cap on the normal-form length of enumerated words.
  int length = 2;
  /// Word distance explored around each focus prefix; negative means `length`.
  int margin = -1;
  /// Without focus words the ball holds every edge u·A(Λ) with |u| <= length.
  /// With focus words it holds the edges of words within `margin` of a prefix
  /// of some focus word, closed under prefixes.
  std::vector<Word> focus;
  std::size_t vertex_budget = 100000;
  std::size_t element_budget = 2000000;
  Exec exec = Exec::parallel;
};

/// A finite subtree of the Bass-Serre tree containing the base edge A(Λ).
/// Vertices and edges are sorted by (rep length, rep, side); the base edge has
/// index 0 and the base vertices A(side1), A(side2) have indices 0 and 1.
class TreeBall {
 public:
  struct EdgeRecord {
    TreeEdge edge;
    int first = -1;
    int second = -1;
  };
  struct Incidence {
    int edge = -1;
    int other = -1;
  };

  const AmalgamSplitting& splitting() const { return splitting_; }
  int length() const { return length_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const TreeVertex& vertex(int i) const { return vertices_.at(i); }
  const EdgeRecord& edge(int i) const { return edges_.at(i); }
  const std::vector<Incidence>& incident(int v) const { return incident_.at(v); }

  std::optional<int> find(const TreeVertex& v) const;
  std::optional<int> find(const TreeEdge& e) const;
  int base_vertex(Side side) const { return side == Side::second ? 1 : 0; }

  /// Rooted at base vertex 0.
  int depth(int v) const { return depth_.at(v); }
  int parent(int v) const { return parent_.at(v); }
  int parent_edge(int v) const { return parent_edge_.at(v); }

  /// Path length inside the ball (the tree metric, since the ball is a subtree).
  int distance(int x, int y) const;

 private:
  friend TreeBall build_ball(const AmalgamSplitting&, const BallOptions&);
  explicit TreeBall(AmalgamSplitting s) : splitting_(std::move(s)) {}
  void index_tree();

  AmalgamSplitting splitting_;
  int length_ = 0;
  std::vector<TreeVertex> vertices_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<Incidence>> incident_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::vector<int> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
};

/// Throws BudgetExceeded when the vertex or element budget is exhausted.
TreeBall build_ball(const AmalgamSplitting& s, const BallOptions& opts);
inline TreeBall build_ball(const AmalgamSplitting& s, int length) {
  BallOptions opts;
  opts.length = length;
  return build_ball(s, opts);
}

struct TreePath {
  std::vector<int> vertices;
  std::vector<int> edges;
};

TreePath geodesic(const TreeBall& ball, int x, int y);

/// Ball vertices fixed by g, in index order.
std::vector<int> fixed_vertices(const TreeBall& ball, const Word& g);

/// A vertex fixed by an elliptic element, taken from its classification.
TreeVertex witness_fixed_vertex(const AmalgamSplitting& s, const Classification& c);

struct Bridge {
  int edge = -1;
  TreePath path;
  /// path.vertices[0..u_end] is Fix(u) ∩ path, path.vertices[v_begin..] is Fix(v) ∩ path.
  std::size_t u_end = 0;
  std::size_t v_begin = 0;
};

/// First edge of the unique path from Fix(u) to Fix(v). Disjoint fixed
/// segments on a geodesic between fixed points certify Fix(u) ∩ Fix(v) = ∅ in
/// the whole tree. Throws InputError when the segments overlap or a fixed
/// vertex is missing from the ball.
Bridge bridge_edge(const TreeBall& ball, const Word& u, const Word& v);

/// Fixed segments of u and v on the geodesic between fixed points overlap,
/// i.e. Fix(u) ∩ Fix(v) ≠ ∅. Empty when a witness vertex is outside the ball.
std::optional<bool> fixed_sets_meet(const TreeBall& ball, const Word& u, const Word& v);

/// min over ball vertices v with g·v in the ball of d(v, g·v). Throws when no
/// vertex is applicable.
int displacement(const TreeBall& ball, const Word& g);

/// Ball vertices v with g·v in the ball and d(v, g·v) equal to the translation
/// length. Throws InputError for elliptic g.
std::vector<int> axis_vertices(const TreeBall& ball, const Word& g);

}  // namespace raag
