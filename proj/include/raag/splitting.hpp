#pragma once

#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/words.hpp"

namespace raag {

/// Which piece of an amalgam a syllable or tree vertex belongs to. `edge`
/// marks elements of the edge group A(Λ), which lie in both factors.
enum class Side : int { edge = 0, first = 1, second = 2 };

/// A(Γ) = A(side1) *_{A(Λ)} A(side2), with side1 ∩ side2 = Λ and no edge of Γ
/// joining side1∖Λ to side2∖Λ.
class AmalgamSplitting {
 public:
  /// side1 is the component of `pick` in Γ∖Λ together with Λ.
  static AmalgamSplitting from_separator(const Graph& g, VertexSet lam, int pick);
  /// Validates an explicit descriptor.
  static AmalgamSplitting from_sides(const Graph& g, VertexSet lam, VertexSet side1,
                                     VertexSet side2);

  const Graph& ambient() const { return ambient_; }
  VertexSet lambda() const { return lambda_; }
  VertexSet side1() const { return side1_; }
  VertexSet side2() const { return side2_; }
  VertexSet vertex_group(Side s) const {
    return s == Side::first ? side1_ : s == Side::second ? side2_ : lambda_;
  }

 private:
  AmalgamSplitting(Graph g, VertexSet lam, VertexSet s1, VertexSet s2)
      : ambient_(std::move(g)), lambda_(lam), side1_(s1), side2_(s2) {}

  Graph ambient_;
  VertexSet lambda_;
  VertexSet side1_;
  VertexSet side2_;
};

struct Syllable {
  Side side = Side::edge;
  Word word;
};

/// Reduced alternating factorization of w read off its normal form. Λ-letters
/// join the currently open syllable. Only a lone syllable may lie in A(Λ),
/// in which case its side is `edge`.
std::vector<Syllable> syllable_decompose(const AmalgamSplitting& s, const Word& w);

enum class Kind { elliptic, hyperbolic };

/// w = conjugator · core · conjugator^-1. For elliptic elements core lies in
/// the vertex group `side`, so conjugator·A(side) is a fixed vertex (an
/// `edge` side means the edge conjugator·A(Λ) is fixed). For hyperbolic
/// elements core is cyclically reduced and translation_length is its
/// syllable length.
struct Classification {
  Kind kind = Kind::elliptic;
  int translation_length = 0;
  Side side = Side::first;
  Word conjugator;
  Word core;
};

Classification classify(const AmalgamSplitting& s, const Word& w);

/// Action on a line through a homomorphism A(Γ) -> Z.
class LineAction {
 public:
  LineAction(Graph g, IntegerVector phi);
  const Graph& ambient() const { return ambient_; }
  const IntegerVector& phi() const { return phi_; }

 private:
  Graph ambient_;
  IntegerVector phi_;
};

std::int64_t line_translation(const LineAction& l, const Word& w);

/// A(source) -> A(target) given by generator images.
struct RaagHom {
  Graph source;
  Graph target;
  std::vector<Word> images;

  static RaagHom identity(const Graph& g);
  Word apply(const Word& w) const;
};

struct HomCheck {
  bool ok = true;
  /// Source edges whose images fail to commute.
  std::vector<std::pair<int, int>> violations;
};

HomCheck check_hom(const RaagHom& h);

/// The action of hom.source on the Bass-Serre tree of `base` through hom.
class InducedAction {
 public:
  InducedAction(RaagHom hom, AmalgamSplitting base);
  const RaagHom& hom() const { return hom_; }
  const AmalgamSplitting& base() const { return base_; }

 private:
  RaagHom hom_;
  AmalgamSplitting base_;
};

Classification induced_classify(const InducedAction& ia, const Word& w);

/// Source vertices whose image lies in A(Λ) of the base splitting.
VertexSet lambda_from_hom(const InducedAction& ia);

/// True when `kernel_word` certifies that A(lambda_from_hom) is a proper
/// subgroup of f^-1(A(Λ)): f(kernel_word) = 1 but kernel_word ∉ A(lambda_from_hom).
bool certifies_proper_edge_group(const InducedAction& ia, const Word& kernel_word);

}  // namespace raag
