#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "raag/bass_serre.hpp"

namespace raag {

/// How the generators of a source graph act on a tree: directly on the
/// Bass-Serre tree of one of its own amalgams, through a homomorphism onto
/// another RAAG's amalgam, or on a line through a map to Z.
class Action {
 public:
  enum class Variant { direct, induced, line };

  static Action direct(AmalgamSplitting s) { return Action(std::move(s)); }
  static Action induced(InducedAction ia) { return Action(std::move(ia)); }
  static Action line(LineAction l) { return Action(std::move(l)); }

  Variant variant() const { return static_cast<Variant>(impl_.index()); }
  const Graph& source_graph() const;
  /// The amalgam whose tree is acted on; throws for line actions.
  const AmalgamSplitting& tree() const;
  const LineAction& line_action() const { return std::get<LineAction>(impl_); }
  /// Image of a source word in the group acting on the tree.
  Word image(const Word& w) const;
  Word image(int v) const { return image(Word::generator(v)); }

 private:
  template <typename T>
  explicit Action(T value) : impl_(std::move(value)) {}

  std::variant<AmalgamSplitting, InducedAction, LineAction> impl_;
};

struct CheckerConfig {
  int ball_length = 6;
  int axis_bound = 8;
  int margin = 1;
  std::size_t vertex_budget = 100000;
  Exec exec = Exec::parallel;
};

enum class Status { pass, fail, indeterminate, assumed };

struct Check {
  std::string name;
  Status status = Status::pass;
  std::optional<int> bound;
  std::string detail;
};

enum class Case { all_elliptic, some_hyperbolic, line_excluded, precondition_failed, indeterminate };

struct TheoremReport {
  Case kind = Case::indeterminate;
  VertexSet lambda;
  std::optional<TreeEdge> witness_edge;
  std::optional<std::pair<int, int>> separated;
  std::vector<Check> checks;

  /// A conclusive case whose checks all passed (or were assumed).
  bool passed() const;
};

std::string to_string(Case c);
std::string to_string(Status s);

std::vector<Classification> classify_generators(const Action& a);

/// Finite stretch of an axis: the geodesic from g^-N·x to g^N·x for a vertex
/// x on Axis(g). `center` indexes x in `vertices`.
struct AxisSegment {
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
  std::size_t center = 0;
  int translation_length = 0;
};

AxisSegment axis_segment(const AmalgamSplitting& s, const Word& g, int bound, Exec exec = Exec::parallel);

/// Exact: d(v, g·v) equals the translation length of g.
bool on_axis(const AmalgamSplitting& s, const Word& g, int translation_length, const TreeVertex& v);

/// The ball the checker works in: focused on the generator images, their
/// fixed-vertex witnesses and axis segments.
TreeBall checker_ball(const Action& a, const CheckerConfig& config);

struct PreconditionReport {
  std::vector<Check> checks;
  /// Generator pair with certified disjoint fixed sets (all-elliptic actions).
  std::optional<std::pair<int, int>> disjoint_pair;
  bool line_action = false;

  bool trivial() const;
  bool line() const;
  bool indeterminate() const;
};

PreconditionReport check_preconditions(const Action& a, const TreeBall& ball,
                                       const CheckerConfig& config);

TheoremReport run_elliptic_case(const Action& a, const TreeBall& ball);
TheoremReport run_hyperbolic_case(const Action& a, int v, const CheckerConfig& config);

TheoremReport verify_theorem(const Action& a, const CheckerConfig& config = {});

struct SeparatorRun {
  VertexSet separator;
  TheoremReport report;
};

/// verify_theorem on the direct amalgam of every minimal separator.
std::vector<SeparatorRun> verify_all_separators(const Graph& g, const CheckerConfig& config = {});

struct AbelianReport {
  std::vector<VertexSet> cut_cliques;
  bool complete = false;
  bool disconnected = false;
  bool splits = false;
  std::string verdict;
};

AbelianReport abelian_splitting_report(const Graph& g);

/// Outcome of one commuting-pair check. Which statement is tested depends on
/// the pair's types: both elliptic (fixed sets meet), one hyperbolic (its axis
/// lies in the other's fixed set), both hyperbolic (same axis).
struct LemmaOutcome {
  std::string lemma;
  Status status = Status::indeterminate;
  std::string detail;
};

/// g and h must commute. Indeterminate when the ball holds no evidence.
LemmaOutcome check_commuting_pair(const TreeBall& ball, const Word& g, const Word& h);

/// Ball around the fixed-vertex witnesses and axis stretches of g and h, with
/// word length at least `length`.
TreeBall lemma_ball(const AmalgamSplitting& s, const Word& g, const Word& h, int length,
                    std::size_t vertex_budget = 100000, Exec exec = Exec::parallel);

/// Pairs of adjacent generators.
std::vector<std::pair<Word, Word>> commuting_generator_pairs(const Graph& g);

/// Random commuting pairs of two shapes: (u·w^a·u^-1, u·w^b·u^-1), and
/// (u·x·u^-1, u·z·u^-1) with z supported on the star of the generator x.
std::vector<std::pair<Word, Word>> sample_commuting_pairs(const Graph& g, std::size_t count,
                                                          std::uint64_t seed);

}  // namespace raag
