#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "monoquiv/quiver.hpp"
#include "monoquiv/report.hpp"

namespace monoquiv {

// Replacement of arrow b (degree > 1) by b': s(b) -> z of degree 1 and
// b'': z -> t(b) of degree deg(b) - 1. In the split quiver b' takes b's
// index, b'' the next one, later arrows move up by one and z is appended
// as the last vertex.
struct SplitStep {
  std::string arrow;
  ArrowIndex arrow_index = 0;
  int arrow_degree = 0;
  std::string new_vertex;
  VertexIndex new_vertex_index = 0;
  std::string b_prime;
  std::string b_dblprime;

  ArrowIndex b_prime_index() const { return arrow_index; }
  ArrowIndex b_dblprime_index() const { return arrow_index + 1; }
  bool operator==(const SplitStep&) const = default;
};

using SplitTrace = std::vector<SplitStep>;

// D(kQ) = sum of arrow degrees - number of arrows.
long weight_discrepancy(const WeightedQuiver& q);

// Throws ValidationError for an unknown arrow or one of degree 1. An empty
// `new_vertex` picks the first unused name z1, z2, ...
std::pair<WeightedQuiver, SplitStep> split_arrow(const WeightedQuiver& q,
                                                 const std::string& arrow,
                                                 std::string new_vertex = {});

enum class SplitOrder { LowestIndexFirst, HighestIndexFirst };

struct Normalization {
  WeightedQuiver quiver;
  SplitTrace trace;
  // quivers[i] is the quiver trace[i] was applied to; quivers.back() is the
  // result.
  std::vector<WeightedQuiver> quivers;
};

// Splits until every arrow has degree 1. New vertices are named z1, z2, ...
// in split order (skipping names already in use).
Normalization normalize_to_degree_one(const WeightedQuiver& q,
                                      SplitOrder order = SplitOrder::LowestIndexFirst);

// Image of an arrow of Q in Q': b becomes b'b'', others are renumbered.
std::vector<ArrowIndex> transfer_arrow(const SplitStep& step, ArrowIndex a);
// Path of Q -> path of Q' replacing every b by b'b''.
Path transfer_path(const SplitStep& step, const Path& p);

nlohmann::json to_json(const SplitTrace& trace);
// Re-applies a serialized trace to `q` and returns the resolved steps.
// Throws ParseError/ValidationError when it does not replay.
SplitTrace replay_trace(const WeightedQuiver& q, const nlohmann::json& doc);

// Verifies a normalization of q: each step lowers D by exactly one and adds
// one vertex and one arrow; every path of degree <= max_degree transfers to
// a path with the same ends and degree in `result`; per-degree path counts
// between old vertices agree; |Q0|+D and |Q1|+D vertices/arrows; and a
// second split order yields the same counts. `result` defaults to the
// computed normalization; pass a stored quiver to audit it.
SuiteReport check_split_suite(const WeightedQuiver& q, long max_degree,
                              const WeightedQuiver* result = nullptr);

}  // namespace monoquiv
