#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// A generator (by vertex index) or its inverse.
struct Letter {
  int vertex = 0;
  int sign = 1;

  Letter inverse() const { return {vertex, -sign}; }
  bool operator==(const Letter&) const = default;
  /// Vertex declaration order first, then x before x^-1.
  std::strong_ordering operator<=>(const Letter& o) const {
    if (auto c = vertex <=> o.vertex; c != 0) return c;
    return o.sign <=> sign;
  }
};

/// A spelling of an element of A(Γ). Words are never normalized implicitly.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int v, int sign = 1) { return Word({Letter{v, sign}}); }
  /// v^k; negative k gives powers of the inverse.
  static Word power(int v, int k);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(int k) const;
  void push_back(Letter l) { letters_.push_back(l); }
  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  /// Compact byte encoding, used as a hash key.
  std::string key() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word& o) const { return letters_ <=> o.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// Canonical representative of a group element: reduced, and the
/// lexicographically least word among its commutation rearrangements.
class NormalForm {
 public:
  NormalForm() = default;

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  bool operator==(const NormalForm&) const = default;
  auto operator<=>(const NormalForm& o) const { return word_ <=> o.word_; }

 private:
  explicit NormalForm(Word w) : word_(std::move(w)) {}
  friend NormalForm normal_form(const Graph&, const Word&);
  friend NormalForm coset_representative(const Graph&, VertexSet, const Word&);

  Word word_;
};

/// Exponent sums per vertex: the image in the abelianization Z^n.
struct IntegerVector {
  std::vector<std::int64_t> values;

  static IntegerVector zeros(int n) { return {std::vector<std::int64_t>(n, 0)}; }
  static IntegerVector ones(int n) { return {std::vector<std::int64_t>(n, 1)}; }
  bool is_zero() const;
  bool operator==(const IntegerVector&) const = default;
};

/// Throws InputError if a letter names a vertex outside g.
void validate(const Graph& g, const Word& w);

/// Cancels x^e ... x^-e pairs whose intervening letters all commute with x.
Word reduce(const Graph& g, const Word& w);

NormalForm normal_form(const Graph& g, const Word& w);

bool equal(const Graph& g, const Word& a, const Word& b);
bool commute(const Graph& g, const Word& a, const Word& b);

VertexSet support(const Graph& g, const Word& w);

/// Membership in the special subgroup A(lam).
bool in_special_subgroup(const Graph& g, VertexSet lam, const Word& w);

/// Deletes letters outside lam: the retraction A(Γ) -> A(lam).
Word retract(const Graph& g, VertexSet lam, const Word& w);

IntegerVector abelianization(const Graph& g, const Word& w);
std::int64_t z_image(const Graph& g, const IntegerVector& phi, const Word& w);

/// The unique shortest element of the left coset w·A(side), in normal form.
/// Two words lie in the same coset iff their representatives agree.
NormalForm coset_representative(const Graph& g, VertexSet side, const Word& w);

}  // namespace raag
