#include "raag/splitting.hpp"

#include <stdexcept>
#include <string>

namespace raag {

AmalgamSplitting AmalgamSplitting::from_separator(const Graph& g, VertexSet lam, int pick) {
  if (!lam.subset_of(g.all())) throw InputError("separator is not contained in the graph");
  if (pick < 0 || pick >= g.size()) throw InputError("pick vertex out of range");
  if (lam.contains(pick)) throw InputError("pick vertex '" + g.label(pick) + "' lies in the separator");
  if (!is_separating(g, lam)) throw InputError("vertex set does not separate the graph");
  const VertexSet rest = g.all() - lam;
  const VertexSet comp = component_of(g, rest, pick);
  return AmalgamSplitting(g, lam, comp | lam, (rest - comp) | lam);
}

AmalgamSplitting AmalgamSplitting::from_sides(const Graph& g, VertexSet lam, VertexSet side1,
                                              VertexSet side2) {
  if (!(side1 | side2).subset_of(g.all()) || (side1 | side2) != g.all())
    throw InputError("splitting sides must cover the vertex set");
  if ((side1 & side2) != lam) throw InputError("splitting sides must intersect exactly in lambda");
  const VertexSet only1 = side1 - lam;
  const VertexSet only2 = side2 - lam;
  if (only1.empty() || only2.empty()) throw InputError("splitting sides must both extend lambda");
  for (int v : only1.members())
    if (!(g.neighbours(v) & only2).empty())
      throw InputError("edge " + g.label(v) + " joins the two sides outside lambda");
  return AmalgamSplitting(g, lam, side1, side2);
}

std::vector<Syllable> syllable_decompose(const AmalgamSplitting& s, const Word& w) {
  const NormalForm nf = normal_form(s.ambient(), w);
  std::vector<Syllable> out;
  for (const Letter& l : nf.word().letters()) {
    Side side = Side::edge;
    if (!s.lambda().contains(l.vertex)) side = s.side1().contains(l.vertex) ? Side::first : Side::second;
    if (out.empty()) {
      out.push_back({side, Word({l})});
      continue;
    }
    Syllable& open = out.back();
    if (side == Side::edge || open.side == Side::edge || open.side == side) {
      if (open.side == Side::edge) open.side = side;
      open.word.push_back(l);
    } else {
      out.push_back({side, Word({l})});
    }
  }
  return out;
}

Classification classify(const AmalgamSplitting& s, const Word& w) {
  const Graph& g = s.ambient();
  Word current = normal_form(g, w).word();
  Word conjugator;
  auto syllables = syllable_decompose(s, current);
  const std::size_t cap = syllables.size();
  for (std::size_t iter = 0;; ++iter) {
    if (syllables.size() <= 1) {
      Classification c;
      c.kind = Kind::elliptic;
      c.side = syllables.empty() ? Side::first : syllables.front().side;
      c.conjugator = normal_form(g, conjugator).word();
      c.core = current;
      return c;
    }
    if (syllables.front().side != syllables.back().side) {
      Classification c;
      c.kind = Kind::hyperbolic;
      c.translation_length = static_cast<int>(syllables.size());
      c.side = syllables.front().side;
      c.conjugator = normal_form(g, conjugator).word();
      c.core = current;
      return c;
    }
    // Each conjugation merges the outer syllables, so the count strictly drops.
    if (iter >= cap) throw std::logic_error("cyclic reduction did not terminate");
    const Word last = syllables.back().word;
    current = normal_form(g, last * current * last.inverse()).word();
    conjugator *= last.inverse();
    syllables = syllable_decompose(s, current);
  }
}

LineAction::LineAction(Graph g, IntegerVector phi) : ambient_(std::move(g)), phi_(std::move(phi)) {
  if (phi_.values.size() != static_cast<std::size_t>(ambient_.size()))
    throw InputError("line action needs one integer per vertex");
  if (phi_.is_zero()) throw InputError("the zero homomorphism gives a trivial line action");
}

std::int64_t line_translation(const LineAction& l, const Word& w) {
  return z_image(l.ambient(), l.phi(), w);
}

RaagHom RaagHom::identity(const Graph& g) {
  RaagHom h{g, g, {}};
  for (int v = 0; v < g.size(); ++v) h.images.push_back(Word::generator(v));
  return h;
}

Word RaagHom::apply(const Word& w) const {
  validate(source, w);
  Word out;
  for (const Letter& l : w.letters()) out *= l.sign > 0 ? images[l.vertex] : images[l.vertex].inverse();
  return out;
}

HomCheck check_hom(const RaagHom& h) {
  if (h.images.size() != static_cast<std::size_t>(h.source.size()))
    throw InputError("homomorphism needs one image per source vertex");
  for (const Word& img : h.images) validate(h.target, img);
  HomCheck out;
  for (const auto& [u, v] : h.source.edges()) {
    if (!commute(h.target, h.images[u], h.images[v])) {
      out.ok = false;
      out.violations.emplace_back(u, v);
    }
  }
  return out;
}

InducedAction::InducedAction(RaagHom hom, AmalgamSplitting base)
    : hom_(std::move(hom)), base_(std::move(base)) {
  if (!(hom_.target == base_.ambient()))
    throw InputError("homomorphism target differs from the splitting's graph");
  const HomCheck check = check_hom(hom_);
  if (!check.ok) {
    const auto [u, v] = check.violations.front();
    throw InputError("images of adjacent vertices " + hom_.source.label(u) + " and " +
                     hom_.source.label(v) + " do not commute");
  }
}

Classification induced_classify(const InducedAction& ia, const Word& w) {
  return classify(ia.base(), ia.hom().apply(w));
}

VertexSet lambda_from_hom(const InducedAction& ia) {
  VertexSet out;
  for (int v = 0; v < ia.hom().source.size(); ++v)
    if (in_special_subgroup(ia.hom().target, ia.base().lambda(), ia.hom().images[v])) out.insert(v);
  return out;
}

bool certifies_proper_edge_group(const InducedAction& ia, const Word& kernel_word) {
  const Word image = ia.hom().apply(kernel_word);
  if (!reduce(ia.hom().target, image).empty()) return false;
  return !in_special_subgroup(ia.hom().source, lambda_from_hom(ia), kernel_word);
}

}  // namespace raag
