#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace monoquiv {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string name;
  VertexIndex source;
  VertexIndex target;
  int degree;

  bool operator==(const Arrow&) const = default;
};

// A path in a quiver: a start vertex plus a composable arrow sequence.
// Composition follows traversal order, so p·q exists when t(p) = s(q).
// The start vertex is what distinguishes the length-0 paths e_v.
struct Path {
  VertexIndex start = 0;
  std::vector<ArrowIndex> arrows;

  std::size_t length() const { return arrows.size(); }
  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

// Finite directed multigraph with a positive integer degree on every arrow.
// Immutable once constructed; the constructor enforces the invariants.
class WeightedQuiver {
 public:
  WeightedQuiver() = default;
  WeightedQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  // Builds from vertex names in the arrow records. Throws ValidationError.
  struct NamedArrow {
    std::string name;
    std::string source;
    std::string target;
    int degree;
  };
  static WeightedQuiver from_names(std::vector<std::string> vertices,
                                   const std::vector<NamedArrow>& arrows);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }

  std::optional<VertexIndex> find_vertex(const std::string& name) const;
  std::optional<ArrowIndex> find_arrow(const std::string& name) const;

  // Arrows leaving / entering each vertex, in arrow order.
  const std::vector<ArrowIndex>& out_arrows(VertexIndex v) const {
    return out_.at(v);
  }
  const std::vector<ArrowIndex>& in_arrows(VertexIndex v) const {
    return in_.at(v);
  }

  bool all_degree_one() const;
  int max_degree() const;

  bool operator==(const WeightedQuiver& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::unordered_map<std::string, ArrowIndex> arrow_index_;
  std::vector<std::vector<ArrowIndex>> out_;
  std::vector<std::vector<ArrowIndex>> in_;
};

VertexIndex path_source(const WeightedQuiver& q, const Path& p);
VertexIndex path_target(const WeightedQuiver& q, const Path& p);
long path_degree(const WeightedQuiver& q, const Path& p);
bool is_valid_path(const WeightedQuiver& q, const Path& p);

// Concatenation p·q; nullopt when t(p) != s(q).
std::optional<Path> compose(const WeightedQuiver& q, const Path& lhs,
                            const Path& rhs);

// "e_v" for length 0, otherwise arrow names joined by '.'.
std::string format_path(const WeightedQuiver& q, const Path& p);

// Every path with degree <= max_degree, grouped by nothing in particular:
// depth-first from each vertex in index order. Intended for small quivers
// and oracles; throws BudgetExceeded past `budget` paths.
std::vector<Path> enumerate_paths(const WeightedQuiver& q, long max_degree,
                                  std::size_t budget = 1'000'000);

// Same, bounded by length instead of degree.
std::vector<Path> enumerate_paths_by_length(const WeightedQuiver& q,
                                            std::size_t max_length,
                                            std::size_t budget = 1'000'000);

}  // namespace monoquiv
