#include "monoquiv/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "monoquiv/error.hpp"

namespace monoquiv {

WeightedQuiver::WeightedQuiver(std::vector<std::string> vertices,
                               std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      throw ValidationError("vertices[" + std::to_string(v) +
                            "]: duplicate vertex id \"" + vertices_[v] + "\"");
    }
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (ArrowIndex a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    std::string where = "arrows[" + std::to_string(a) + "]";
    if (arr.source >= vertices_.size() || arr.target >= vertices_.size()) {
      throw ValidationError(where + ": unknown vertex");
    }
    if (arr.degree < 1) {
      throw ValidationError(where + ": degree must be ≥ 1");
    }
    if (!arrow_index_.emplace(arr.name, a).second) {
      throw ValidationError(where + ": duplicate arrow id \"" + arr.name +
                            "\"");
    }
    out_[arr.source].push_back(a);
    in_[arr.target].push_back(a);
  }
}

WeightedQuiver WeightedQuiver::from_names(
    std::vector<std::string> vertices, const std::vector<NamedArrow>& arrows) {
  std::unordered_map<std::string, VertexIndex> index;
  for (VertexIndex v = 0; v < vertices.size(); ++v) index.emplace(vertices[v], v);
  std::vector<Arrow> resolved;
  resolved.reserve(arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const NamedArrow& na = arrows[i];
    auto s = index.find(na.source);
    auto t = index.find(na.target);
    if (s == index.end() || t == index.end()) {
      const std::string& missing = s == index.end() ? na.source : na.target;
      throw ValidationError("arrows[" + std::to_string(i) +
                            "]: unknown vertex \"" + missing + "\"");
    }
    resolved.push_back({na.name, s->second, t->second, na.degree});
  }
  return WeightedQuiver(std::move(vertices), std::move(resolved));
}

std::optional<VertexIndex> WeightedQuiver::find_vertex(
    const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowIndex> WeightedQuiver::find_arrow(
    const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

bool WeightedQuiver::all_degree_one() const {
  return std::all_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.degree == 1; });
}

int WeightedQuiver::max_degree() const {
  int m = 0;
  for (const Arrow& a : arrows_) m = std::max(m, a.degree);
  return m;
}

VertexIndex path_source(const WeightedQuiver&, const Path& p) {
  return p.start;
}

VertexIndex path_target(const WeightedQuiver& q, const Path& p) {
  return p.arrows.empty() ? p.start : q.arrow(p.arrows.back()).target;
}

long path_degree(const WeightedQuiver& q, const Path& p) {
  long d = 0;
  for (ArrowIndex a : p.arrows) d += q.arrow(a).degree;
  return d;
}

bool is_valid_path(const WeightedQuiver& q, const Path& p) {
  if (p.start >= q.num_vertices()) return false;
  VertexIndex at = p.start;
  for (ArrowIndex a : p.arrows) {
    if (a >= q.num_arrows() || q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return true;
}

std::optional<Path> compose(const WeightedQuiver& q, const Path& lhs,
                            const Path& rhs) {
  if (path_target(q, lhs) != rhs.start) return std::nullopt;
  Path out = lhs;
  out.arrows.insert(out.arrows.end(), rhs.arrows.begin(), rhs.arrows.end());
  return out;
}

std::string format_path(const WeightedQuiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertex(p.start);
  std::ostringstream os;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) os << '.';
    os << q.arrow(p.arrows[i]).name;
  }
  return os.str();
}

namespace {

template <typename Fits>
std::vector<Path> enumerate_impl(const WeightedQuiver& q, std::size_t budget,
                                 Fits fits) {
  std::vector<Path> out;
  Path current;
  auto push = [&](const Path& p) {
    if (out.size() >= budget) {
      throw BudgetExceeded("path enumeration exceeded " +
                           std::to_string(budget) + " paths");
    }
    out.push_back(p);
  };
  // Explicit DFS; `degree` tracks the running path degree.
  auto recurse = [&](auto&& self, VertexIndex at, long degree) -> void {
    push(current);
    for (ArrowIndex a : q.out_arrows(at)) {
      long next = degree + q.arrow(a).degree;
      if (!fits(current.arrows.size() + 1, next)) continue;
      current.arrows.push_back(a);
      self(self, q.arrow(a).target, next);
      current.arrows.pop_back();
    }
  };
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    current.start = v;
    current.arrows.clear();
    recurse(recurse, v, 0);
  }
  return out;
}

}  // namespace

std::vector<Path> enumerate_paths(const WeightedQuiver& q, long max_degree,
                                  std::size_t budget) {
  if (max_degree < 0) return {};
  return enumerate_impl(q, budget, [max_degree](std::size_t, long degree) {
    return degree <= max_degree;
  });
}

std::vector<Path> enumerate_paths_by_length(const WeightedQuiver& q,
                                            std::size_t max_length,
                                            std::size_t budget) {
  return enumerate_impl(q, budget, [max_length](std::size_t length, long) {
    return length <= max_length;
  });
}

}  // namespace monoquiv
