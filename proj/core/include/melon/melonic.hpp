#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "melon/graph.hpp"
#include "melon/poly.hpp"

namespace melon::melonic {

/// One replacement step: an edge of banana `parent_banana` (1-based) created in
/// stage `parent_stage` (0 = the initial single edge) is replaced by a string
/// of bananas with the given edge counts.
struct Stage {
  std::vector<int> banana_sizes;
  int parent_stage = 0;
  int parent_banana = 1;

  friend bool operator==(const Stage&, const Stage&) = default;
};

/// Ordered list of stages; stage s of the usual 1-based numbering is
/// stages[s - 1].
struct MelonicConstruction {
  std::vector<Stage> stages;

  int depth() const noexcept { return static_cast<int>(stages.size()); }
  const Stage& stage(int s) const { return stages.at(static_cast<std::size_t>(s - 1)); }
  Stage& stage(int s) { return stages.at(static_cast<std::size_t>(s - 1)); }

  /// Edges of the resulting graph: 1 + sum over stages of (sum(sizes) - 1).
  int edge_count() const;

  friend bool operator==(const MelonicConstruction&, const MelonicConstruction&) = default;
};

/// Single-stage constructions for common shapes.
MelonicConstruction banana(int n);
MelonicConstruction banana_string(std::vector<int> sizes);
/// G_{m,n}: ((m+1), 0, 1), ((m, ..., m), 1, 1) with n-1 copies of m.
MelonicConstruction necklace(int m, int n);
/// G'_{m,n}: ((2), 0, 1), ((m, ..., m), 1, 1) with n-1 copies of m; the
/// remaining edge of the 2-banana is the clasp.
MelonicConstruction clasped_necklace(int m, int n);

struct Violation {
  int condition = 0;  // 1..4, the numbered condition of the definition
  int stage = 0;      // 1-based offending stage
  std::string message;
};

/// Every violated condition, in stage order. Empty means valid.
std::vector<Violation> validate(const MelonicConstruction& c);

/// True iff no stage with parent_stage >= 1 targets a 1-banana.
bool is_reduced(const MelonicConstruction& c);

/// Splices every stage that targets a 1-banana into its parent's tuple until
/// none is left. Requires a valid construction; the result is valid, reduced,
/// and describes an isomorphic graph.
MelonicConstruction normalize(const MelonicConstruction& c);

/// Folds a single-banana stage ((a), p, k) into banana k of stage p (which
/// gains a-1 edges) and re-points the stage's children there. Requires a valid
/// construction and a stage with exactly one banana and p >= 1.
MelonicConstruction merge_single_banana_stage(const MelonicConstruction& c, int stage);

/// Serialization that is invariant under reordering stages that hang off the
/// same or different bananas: the construction read as a rooted tree with
/// sorted children.
std::string canonical_key(const MelonicConstruction& c);

/// Stages reordered to the pre-order of the canonical tree.
MelonicConstruction canonicalize(const MelonicConstruction& c);

/// Short human-readable form, e.g. "[((3),0,1), ((2,2),1,1)]".
std::string to_string(const MelonicConstruction& c);

/// Explicit multigraph. Vertices 0 and 1 are the endpoints of the initial
/// edge; replaced edges are dropped and surviving edges keep creation order.
graph::Multigraph to_graph(const MelonicConstruction& c);

/// Which banana of the last stage the deletion-contraction step expands when
/// several share the maximal size.
enum class TieBreak { LowestIndex, HighestIndex };

/// Grothendieck class via the four-case recursion, memoised on canonical keys
/// of reduced constructions. Not thread-safe; use one instance per thread.
class ClassCalculator {
 public:
  explicit ClassCalculator(TieBreak tie_break = TieBreak::LowestIndex) : tie_break_(tie_break) {}

  /// Class in the S basis. Throws std::invalid_argument on invalid input.
  ClassPoly class_of(const MelonicConstruction& c);

  std::size_t cache_size() const noexcept { return memo_.size(); }

 private:
  IntPoly reduced_class(const MelonicConstruction& c);

  TieBreak tie_break_;
  std::unordered_map<std::string, IntPoly> memo_;
};

/// One-shot convenience wrapper around ClassCalculator.
ClassPoly class_of(const MelonicConstruction& c);

struct EnumerationOptions {
  /// Only emit reduced constructions.
  bool reduced_only = true;
};

/// Every valid construction (reduced unless asked otherwise) with at most
/// max_edges edges, one per canonical key, sorted by canonical key. Stages
/// after the first always add at least one edge, so ((1), p, k) steps that
/// leave the graph unchanged are not produced.
std::vector<MelonicConstruction> enumerate_constructions(int max_edges, EnumerationOptions options = {});

/// Construction JSON:
///   {"stages":[{"bananas":[3],"parent_stage":0,"parent_banana":1}, ...]}
/// Throws std::invalid_argument on malformed input (shape only; call validate
/// for the definition's conditions).
MelonicConstruction construction_from_json(std::string_view text);
std::string construction_to_json(const MelonicConstruction& c);

}  // namespace melon::melonic
