#include "raag/graph.hpp"

#include <algorithm>
#include <cstddef>

namespace raag {

bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Lexicographic on sorted members: the lowest differing bit decides.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int low = std::countr_zero(diff);
  return a.contains(low);
}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxVertices))
    throw InputError("graph has more than " + std::to_string(kMaxVertices) + " vertices");
  neighbours_.assign(labels_.size(), VertexSet{});
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty vertex label");
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
      throw InputError("duplicate vertex label '" + labels_[i] + "'");
  }
}

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : Graph(std::move(labels)) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

int Graph::index(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw InputError("unknown vertex label '" + std::string(label) + "'");
  return it->second;
}

bool Graph::has_label(std::string_view label) const {
  return index_.contains(std::string(label));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("loop at vertex '" + labels_[u] + "'");
  neighbours_[u].insert(v);
  neighbours_[v].insert(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& n : neighbours_) twice += n.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : neighbours_[u].members())
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::set_of(const std::vector<std::string>& labels) const {
  VertexSet s;
  for (const auto& l : labels) s.insert(index(l));
  return s;
}

std::vector<std::string> Graph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  for (int v : s.members()) out.push_back(labels_.at(v));
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.all())) throw InputError("vertex set is not contained in the graph");
  const auto keep = s.members();
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int v : keep) labels.push_back(g.label(v));
  Graph out(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

VertexSet component_of(const Graph& g, VertexSet within, int v) {
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier.members()) next = next | (g.neighbours(u) & within);
    frontier = next - seen;
    seen = seen | frontier;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.all();
  while (!left.empty()) {
    const VertexSet c = component_of(g, within, std::countr_zero(left.bits()));
    out.push_back(c);
    left = left - c;
  }
  return out;
}

namespace {

bool disconnected(const Graph& g, VertexSet within) {
  if (within.empty()) return false;
  return component_of(g, within, std::countr_zero(within.bits())) != within;
}

void check_subset(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.all())) throw InputError("vertex set is not contained in the graph");
}

void sort_canonical(std::vector<VertexSet>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
}

}  // namespace

bool is_separating(const Graph& g, VertexSet s) {
  check_subset(g, s);
  return disconnected(g, g.all() - s);
}

bool separates(const Graph& g, VertexSet s, int u, int v) {
  check_subset(g, s);
  if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) throw InputError("vertex out of range");
  if (s.contains(u) || s.contains(v))
    throw InputError("separated vertices must lie outside the separator");
  return !component_of(g, g.all() - s, u).contains(v);
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s.members())
    if (!(s - VertexSet::single(v)).subset_of(g.neighbours(v))) return false;
  return true;
}

bool is_complete(const Graph& g) { return is_clique(g, g.all()); }

VertexSet cut_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.size(); ++v)
    if (is_separating(g, VertexSet::single(v))) out.insert(v);
  return out;
}

namespace {

void extend_cliques(const Graph& g, VertexSet current, VertexSet candidates,
                    std::vector<VertexSet>& out) {
  out.push_back(current);
  for (int v : candidates.members()) {
    // Only larger indices are added so each clique is produced once.
    const VertexSet later(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
    extend_cliques(g, current | VertexSet::single(v), later & g.neighbours(v), out);
  }
}

std::vector<char> separating_flags(const Graph& g, const std::vector<VertexSet>& sets, Exec exec) {
  std::vector<char> flags(sets.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(sets.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) flags[i] = disconnected(g, g.all() - sets[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) flags[i] = disconnected(g, g.all() - sets[i]);
  }
  return flags;
}

}  // namespace

std::vector<VertexSet> cut_cliques(const Graph& g, Exec exec) {
  std::vector<VertexSet> cliques;
  extend_cliques(g, VertexSet{}, g.all(), cliques);
  const auto flags = separating_flags(g, cliques, exec);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    if (flags[i]) out.push_back(cliques[i]);
  sort_canonical(out);
  return out;
}

std::vector<VertexSet> minimal_separators(const Graph& g, int bound, Exec exec) {
  const int n = g.size();
  if (n > bound)
    throw BudgetExceeded("separator enumeration is bounded to " + std::to_string(bound) +
                         " vertices, graph has " + std::to_string(n));
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> sep(count, 0);
  const auto total = static_cast<std::int64_t>(count);
  const VertexSet all = g.all();
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t m = 0; m < total; ++m)
      sep[m] = disconnected(g, all - VertexSet(static_cast<std::uint64_t>(m)));
  } else {
    for (std::int64_t m = 0; m < total; ++m)
      sep[m] = disconnected(g, all - VertexSet(static_cast<std::uint64_t>(m)));
  }
  // below[m]: some proper subset of m is separating.
  std::vector<char> below(count, 0);
  for (std::uint64_t m = 1; m < count; ++m) {
    for (std::uint64_t b = m; b != 0; b &= b - 1) {
      const std::uint64_t sub = m & ~(b & -b);
      if (sep[sub] || below[sub]) {
        below[m] = 1;
        break;
      }
    }
  }
  std::vector<VertexSet> out;
  for (std::uint64_t m = 0; m < count; ++m)
    if (sep[m] && !below[m]) out.emplace_back(m);
  sort_canonical(out);
  return out;
}

}  // namespace raag
