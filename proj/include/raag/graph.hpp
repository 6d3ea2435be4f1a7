#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raag {

/// Raised for malformed graphs, unknown labels and violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration exceeds its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serial reference or OpenMP kernel. Both produce identical, order-normalized results.
enum class Exec { serial, parallel };

inline constexpr int kMaxVertices = 64;

/// Subset of the vertices of a graph, as a bitmask over declaration indices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Members in increasing index order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Size first, then lexicographic on the sorted member indices.
bool canonical_less(VertexSet a, VertexSet b);

/// Finite simple graph with labelled vertices kept in declaration order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);
  Graph(std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }

  /// Index of a label; throws InputError when absent.
  int index(std::string_view label) const;
  bool has_label(std::string_view label) const;

  void add_edge(int u, int v);
  void add_edge(std::string_view u, std::string_view v) { add_edge(index(u), index(v)); }

  bool adjacent(int u, int v) const { return neighbours_[u].contains(v); }
  VertexSet neighbours(int v) const { return neighbours_[v]; }
  VertexSet all() const { return VertexSet::first(size()); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  VertexSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(VertexSet s) const;

  bool operator==(const Graph& o) const {
    return labels_ == o.labels_ && neighbours_ == o.neighbours_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> neighbours_;
  std::unordered_map<std::string, int> index_;
};

/// Same labels restricted to `s`, in the ambient declaration order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Connected components of the subgraph induced on `within` (all vertices by
/// default), ordered by least member index.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.all()); }

/// The component of `within` containing v.
VertexSet component_of(const Graph& g, VertexSet within, int v);

/// Γ∖s has at least two components. The full vertex set is never separating.
bool is_separating(const Graph& g, VertexSet s);

/// u and v lie in different components of Γ∖s. Throws when u or v is in s.
bool separates(const Graph& g, VertexSet s, int u, int v);

bool is_complete(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);

VertexSet cut_vertices(const Graph& g);

/// Complete separating vertex sets, including ∅ for disconnected graphs.
/// Sorted by size then lexicographically.
std::vector<VertexSet> cut_cliques(const Graph& g, Exec exec = Exec::parallel);

inline constexpr int kDefaultSeparatorBound = 16;

/// Inclusion-minimal separating sets by exhaustive subset scan.
std::vector<VertexSet> minimal_separators(const Graph& g, int bound = kDefaultSeparatorBound,
                                          Exec exec = Exec::parallel);

}  // namespace raag
