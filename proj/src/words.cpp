#include "raag/words.hpp"

#include <algorithm>
#include <cstdlib>

namespace raag {

Word Word::power(int v, int k) {
  std::vector<Letter> letters(static_cast<std::size_t>(std::abs(k)), Letter{v, k < 0 ? -1 : 1});
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::pow(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

Word& Word::operator*=(const Word& o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

std::string Word::key() const {
  std::string out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(static_cast<char>(2 * l.vertex + (l.sign < 0)));
  return out;
}

bool IntegerVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::int64_t x) { return x == 0; });
}

void validate(const Graph& g, const Word& w) {
  for (const auto& l : w.letters())
    if (l.vertex < 0 || l.vertex >= g.size() || (l.sign != 1 && l.sign != -1))
      throw InputError("word contains a letter outside the graph");
}

namespace {

// Distinct commuting generators.
bool independent(const Graph& g, const Letter& a, const Letter& b) {
  return a.vertex != b.vertex && g.adjacent(a.vertex, b.vertex);
}

// Lexicographically least linearization of the trace of a reduced word.
// At each step the smallest letter that can be shuffled to the front is taken.
std::vector<Letter> least_rearrangement(const Graph& g, std::vector<Letter> rest) {
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (!(rest[i] < rest[best])) continue;
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j) free = independent(g, rest[j], rest[i]);
      if (free) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

Word reduce(const Graph& g, const Word& w) {
  validate(g, w);
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& x : w.letters()) {
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      const Letter& y = out[j];
      if (y.vertex == x.vertex) {
        if (y.sign == -x.sign) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!g.adjacent(y.vertex, x.vertex)) break;
    }
    if (!cancelled) out.push_back(x);
  }
  return Word(std::move(out));
}

NormalForm normal_form(const Graph& g, const Word& w) {
  return NormalForm(Word(least_rearrangement(g, reduce(g, w).letters())));
}

bool equal(const Graph& g, const Word& a, const Word& b) {
  return reduce(g, a * b.inverse()).empty();
}

bool commute(const Graph& g, const Word& a, const Word& b) { return equal(g, a * b, b * a); }

VertexSet support(const Graph& g, const Word& w) {
  VertexSet s;
  const Word r = reduce(g, w);
  for (const auto& l : r.letters()) s.insert(l.vertex);
  return s;
}

bool in_special_subgroup(const Graph& g, VertexSet lam, const Word& w) {
  if (!lam.subset_of(g.all())) throw InputError("subgroup vertex set is not contained in the graph");
  return support(g, w).subset_of(lam);
}

Word retract(const Graph& g, VertexSet lam, const Word& w) {
  validate(g, w);
  if (!lam.subset_of(g.all())) throw InputError("retraction vertex set is not contained in the graph");
  std::vector<Letter> out;
  for (const auto& l : w.letters())
    if (lam.contains(l.vertex)) out.push_back(l);
  return Word(std::move(out));
}

IntegerVector abelianization(const Graph& g, const Word& w) {
  validate(g, w);
  auto out = IntegerVector::zeros(g.size());
  for (const auto& l : w.letters()) out.values[l.vertex] += l.sign;
  return out;
}

std::int64_t z_image(const Graph& g, const IntegerVector& phi, const Word& w) {
  if (phi.values.size() != static_cast<std::size_t>(g.size()))
    throw InputError("homomorphism to Z must assign one integer per vertex");
  const auto ab = abelianization(g, w);
  std::int64_t total = 0;
  for (int v = 0; v < g.size(); ++v) total += phi.values[v] * ab.values[v];
  return total;
}

NormalForm coset_representative(const Graph& g, VertexSet side, const Word& w) {
  std::vector<Letter> r = reduce(g, w).letters();
  // Strip letters of `side` that can be shuffled to the right end.
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = r.size(); i-- > 0;) {
      if (!side.contains(r[i].vertex)) continue;
      bool terminal = true;
      for (std::size_t j = i + 1; j < r.size() && terminal; ++j) terminal = independent(g, r[i], r[j]);
      if (terminal) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        again = true;
        break;
      }
    }
  }
  return NormalForm(Word(least_rearrangement(g, std::move(r))));
}

}  // namespace raag
