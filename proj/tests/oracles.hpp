#pragma once

// Reference implementations used only by the tests. They read adjacency from
// raag::Graph and letters from raag::Word; the tree oracles also use act() and
// TreeBall::find to locate g·v, but measure distances on their own.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "raag/bass_serre.hpp"

namespace oracle {

using raag::Graph;
using raag::Letter;
using raag::VertexSet;
using raag::Word;

// ---- graphs ----

/// Number of connected components of g restricted to the vertices outside `removed`.
int component_count(const Graph& g, std::uint64_t removed);
bool separating(const Graph& g, std::uint64_t s);
bool clique(const Graph& g, std::uint64_t s);
/// Articulation points (lowlink) combined with the disconnected-graph rule.
std::uint64_t cut_vertices(const Graph& g);
/// Inclusion-minimal separating sets, checking every proper subset.
std::vector<std::uint64_t> minimal_separators(const Graph& g);
std::vector<std::uint64_t> cut_cliques(const Graph& g);
/// Sort masks by size, then by member list.
void canonical_sort(std::vector<std::uint64_t>& sets);

/// One representative per isomorphism class of graphs on n vertices, labelled
/// a, b, c, ... in a fixed order.
std::vector<Graph> graphs_up_to_iso(int n);
bool connected(const Graph& g);
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// ---- words ----

/// Integer reflection representation of a right-angled Coxeter group into
/// which A(Γ) embeds (vertex v goes to the product of two reflections).
/// A homomorphism, so distinct images prove distinct elements.
class ReflectionRep {
 public:
  explicit ReflectionRep(const Graph& g);
  /// True when w maps to the identity matrix.
  bool trivial(const Word& w) const;
  bool same(const Word& a, const Word& b) const;

 private:
  int dim_ = 0;
  std::vector<std::vector<int>> bilinear_;
  std::vector<int> reflections_of(const Word& w) const;
};

/// Best-first search over relator moves (swap commuting neighbours, delete or
/// insert x x^-1) from w to the empty word, never exceeding `cap` letters.
/// Returns true when reached, false when the search space under the cap is
/// exhausted, nullopt when `budget` states were visited first.
std::optional<bool> relator_search_trivial(const Graph& g, const Word& w, int cap = 14,
                                           std::size_t budget = 200000);

/// Equality decided by the reflection representation; equal verdicts must
/// also be confirmed by relator_search_trivial. nullopt when the search could
/// not confirm an equality the representation reports.
std::optional<bool> equal(const Graph& g, const Word& a, const Word& b, int cap = 14,
                          std::size_t budget = 200000);

/// Membership in A(lam): w equals its image under the retraction.
std::optional<bool> in_subgroup(const Graph& g, VertexSet lam, const Word& w);

// ---- random inputs ----

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
Word random_word(Rng& rng, int n, int max_len, int min_len = 0);
Word random_word_over(Rng& rng, VertexSet over, int max_len, int min_len = 0);
/// Applies one random relator move; insertions only when the result stays within max_len.
Word random_move(Rng& rng, const Graph& g, const Word& w, int max_len);
/// A random graph with between min_n and max_n vertices having a separator.
Graph random_separable_graph(Rng& rng, int min_n, int max_n);

// ---- trees ----

/// Path metric of a ball from its incidence lists: breadth-first parents
/// from vertex 0 and a naive common-ancestor climb.
class BallMetric {
 public:
  explicit BallMetric(const raag::TreeBall& ball);
  int distance(int x, int y) const;
  const raag::TreeBall& ball() const { return *ball_; }
  /// Every vertex reached and edges + 1 = vertices.
  bool is_tree() const { return tree_; }

 private:
  const raag::TreeBall* ball_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  bool tree_ = true;
};

/// min over ball vertices v with g·v in the ball of d(v, g·v).
std::optional<int> displacement(const BallMetric& m, const Word& g);
/// Ball vertices with g·v = v, tested by locating g·v in the ball.
std::vector<int> fixed_by(const raag::TreeBall& ball, const Word& g);
/// Ball vertices v with g·v in the ball realizing the minimal displacement.
std::vector<int> min_displaced(const BallMetric& m, const Word& g);

}  // namespace oracle
