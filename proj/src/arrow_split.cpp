#include "monoquiv/arrow_split.hpp"

#include <algorithm>

#include "monoquiv/error.hpp"
#include "monoquiv/hilbert.hpp"

namespace monoquiv {

long weight_discrepancy(const WeightedQuiver& q) {
  long d = 0;
  for (const Arrow& a : q.arrows()) d += a.degree - 1;
  return d;
}

namespace {

std::string fresh_vertex(const WeightedQuiver& q, long& counter) {
  for (;;) {
    std::string name = "z" + std::to_string(counter++);
    if (!q.find_vertex(name)) return name;
  }
}

}  // namespace

std::pair<WeightedQuiver, SplitStep> split_arrow(const WeightedQuiver& q,
                                                 const std::string& arrow,
                                                 std::string new_vertex) {
  auto b = q.find_arrow(arrow);
  if (!b) throw ValidationError("split: unknown arrow \"" + arrow + "\"");
  const Arrow& old = q.arrow(*b);
  if (old.degree <= 1) {
    throw ValidationError("split: arrow \"" + arrow + "\" has degree 1");
  }
  if (new_vertex.empty()) {
    long counter = 1;
    new_vertex = fresh_vertex(q, counter);
  } else if (q.find_vertex(new_vertex)) {
    throw ValidationError("split: vertex \"" + new_vertex + "\" already exists");
  }

  SplitStep step;
  step.arrow = arrow;
  step.arrow_index = *b;
  step.arrow_degree = old.degree;
  step.new_vertex = new_vertex;
  step.new_vertex_index = q.num_vertices();
  step.b_prime = arrow + "'";
  step.b_dblprime = arrow + "''";
  for (int n = 1; q.find_arrow(step.b_prime) || q.find_arrow(step.b_dblprime); ++n) {
    step.b_prime = arrow + "'#" + std::to_string(n);
    step.b_dblprime = arrow + "''#" + std::to_string(n);
  }

  std::vector<std::string> vertices = q.vertices();
  vertices.push_back(new_vertex);
  std::vector<Arrow> arrows;
  arrows.reserve(q.num_arrows() + 1);
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    if (a != *b) {
      arrows.push_back(q.arrow(a));
      continue;
    }
    arrows.push_back({step.b_prime, old.source, step.new_vertex_index, 1});
    arrows.push_back({step.b_dblprime, step.new_vertex_index, old.target, old.degree - 1});
  }
  return {WeightedQuiver(std::move(vertices), std::move(arrows)), std::move(step)};
}

Normalization normalize_to_degree_one(const WeightedQuiver& q, SplitOrder order) {
  Normalization out{q, {}, {q}};
  long counter = 1;
  for (;;) {
    const auto& arrows = out.quiver.arrows();
    auto heavy = [](const Arrow& a) { return a.degree > 1; };
    std::optional<ArrowIndex> pick;
    if (order == SplitOrder::LowestIndexFirst) {
      auto it = std::find_if(arrows.begin(), arrows.end(), heavy);
      if (it != arrows.end()) pick = static_cast<ArrowIndex>(it - arrows.begin());
    } else {
      auto it = std::find_if(arrows.rbegin(), arrows.rend(), heavy);
      if (it != arrows.rend()) pick = static_cast<ArrowIndex>(arrows.rend() - it - 1);
    }
    if (!pick) break;
    std::string z = fresh_vertex(out.quiver, counter);
    auto [next, step] = split_arrow(out.quiver, arrows[*pick].name, z);
    out.quiver = std::move(next);
    out.trace.push_back(std::move(step));
    out.quivers.push_back(out.quiver);
  }
  return out;
}

std::vector<ArrowIndex> transfer_arrow(const SplitStep& step, ArrowIndex a) {
  if (a < step.arrow_index) return {a};
  if (a == step.arrow_index) return {step.b_prime_index(), step.b_dblprime_index()};
  return {a + 1};
}

Path transfer_path(const SplitStep& step, const Path& p) {
  Path out{p.start, {}};
  out.arrows.reserve(p.arrows.size() + 1);
  for (ArrowIndex a : p.arrows) {
    for (ArrowIndex t : transfer_arrow(step, a)) out.arrows.push_back(t);
  }
  return out;
}

nlohmann::json to_json(const SplitTrace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const SplitStep& s : trace) {
    out.push_back({{"arrow", s.arrow},
                   {"new_vertex", s.new_vertex},
                   {"b_prime", s.b_prime},
                   {"b_dblprime", s.b_dblprime}});
  }
  return out;
}

SplitTrace replay_trace(const WeightedQuiver& q, const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("trace: expected an array");
  SplitTrace out;
  WeightedQuiver current = q;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "trace[" + std::to_string(i) + "]";
    const auto& e = doc[i];
    for (const char* key : {"arrow", "new_vertex", "b_prime", "b_dblprime"}) {
      if (!e.is_object() || !e.contains(key) || !e[key].is_string()) {
        throw ParseError(where + ": missing string field \"" + key + "\"");
      }
    }
    auto [next, step] = split_arrow(current, e["arrow"].get<std::string>(),
                                    e["new_vertex"].get<std::string>());
    if (step.b_prime != e["b_prime"].get<std::string>() ||
        step.b_dblprime != e["b_dblprime"].get<std::string>()) {
      throw ValidationError(where + ": arrow names do not match the split");
    }
    out.push_back(std::move(step));
    current = std::move(next);
  }
  return out;
}

namespace {

std::vector<VertexIndex> first_vertices(std::size_t n) {
  std::vector<VertexIndex> out(n);
  for (VertexIndex v = 0; v < n; ++v) out[v] = v;
  return out;
}

// Compares per-degree u -> v counts over the vertices of `q`, located by
// name in `other`. Returns an empty string on agreement.
std::string compare_old_vertex_counts(const WeightedQuiver& q, const WeightedQuiver& other,
                                      long max_degree) {
  const auto n = static_cast<std::size_t>(max_degree);
  PathCountTable before = path_counts(q, n);
  PathCountTable after = path_counts(other, n);
  for (VertexIndex u = 0; u < q.num_vertices(); ++u) {
    auto u2 = other.find_vertex(q.vertex(u));
    if (!u2) return "vertex " + q.vertex(u) + " missing after split";
    for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
      auto v2 = other.find_vertex(q.vertex(v));
      if (!v2) return "vertex " + q.vertex(v) + " missing after split";
      for (std::size_t d = 0; d <= n; ++d) {
        if (before.count(u, v, d) != after.count(*u2, *v2, d)) {
          return q.vertex(u) + " -> " + q.vertex(v) + " degree " + std::to_string(d) +
                 ": " + before.count(u, v, d).get_str() + " paths before, " +
                 after.count(*u2, *v2, d).get_str() + " after";
        }
      }
    }
  }
  return {};
}

}  // namespace

SuiteReport check_split_suite(const WeightedQuiver& q, long max_degree,
                              const WeightedQuiver* result) {
  SuiteReport rep{"split"};
  const Normalization norm = normalize_to_degree_one(q);
  const WeightedQuiver& final_q = result ? *result : norm.quiver;
  const long D = weight_discrepancy(q);

  Check& steps = rep.add("D drops by exactly 1 per step; |Q0|, |Q1| grow by 1");
  for (std::size_t i = 0; i < norm.trace.size(); ++i) {
    ++steps.cases;
    const WeightedQuiver& a = norm.quivers[i];
    const WeightedQuiver& b = norm.quivers[i + 1];
    if (weight_discrepancy(b) != weight_discrepancy(a) - 1 ||
        b.num_vertices() != a.num_vertices() + 1 || b.num_arrows() != a.num_arrows() + 1) {
      steps.fail("step " + std::to_string(i) + " splitting " + norm.trace[i].arrow);
    }
  }
  if (norm.trace.size() != static_cast<std::size_t>(D)) {
    steps.fail("trace length " + std::to_string(norm.trace.size()) + " != D = " +
               std::to_string(D));
  }

  Check& step_counts = rep.add("per-step path counts between old vertices invariant");
  for (std::size_t i = 0; i < norm.trace.size(); ++i) {
    ++step_counts.cases;
    std::string diff = compare_old_vertex_counts(norm.quivers[i], norm.quivers[i + 1], max_degree);
    if (!diff.empty()) step_counts.fail("step " + norm.trace[i].arrow + ": " + diff);
  }

  Check& shape = rep.add("result: all degrees 1, |Q0|+D vertices, |Q1|+D arrows");
  ++shape.cases;
  if (!final_q.all_degree_one() ||
      final_q.num_vertices() != q.num_vertices() + static_cast<std::size_t>(D) ||
      final_q.num_arrows() != q.num_arrows() + static_cast<std::size_t>(D)) {
    shape.fail(std::to_string(final_q.num_vertices()) + " vertices, " +
               std::to_string(final_q.num_arrows()) + " arrows, degree-one: " +
               (final_q.all_degree_one() ? "yes" : "no"));
  }

  Check& transfer = rep.add("every path of degree <= " + std::to_string(max_degree) +
                            " transfers with ends and degree kept");
  try {
    for (const Path& p : enumerate_paths(q, max_degree, 200'000)) {
      ++transfer.cases;
      Path t = p;
      for (const SplitStep& s : norm.trace) t = transfer_path(s, t);
      // Resolve by name in the audited quiver.
      const WeightedQuiver& canon = norm.quiver;
      Path resolved;
      std::string problem;
      auto start = final_q.find_vertex(q.vertex(p.start));
      if (!start) {
        problem = "start vertex missing";
      } else {
        resolved.start = *start;
        for (ArrowIndex a : t.arrows) {
          auto r = final_q.find_arrow(canon.arrow(a).name);
          if (!r) {
            problem = "arrow " + canon.arrow(a).name + " missing";
            break;
          }
          resolved.arrows.push_back(*r);
        }
      }
      if (problem.empty() && !is_valid_path(final_q, resolved)) problem = "not composable";
      if (problem.empty() &&
          final_q.vertex(path_target(final_q, resolved)) != q.vertex(path_target(q, p))) {
        problem = "ends at " + final_q.vertex(path_target(final_q, resolved));
      }
      if (problem.empty() && path_degree(final_q, resolved) != path_degree(q, p)) {
        problem = "degree changed";
      }
      if (!problem.empty()) {
        transfer.fail("path " + format_path(q, p) + " -> " + format_path(canon, t) + ": " +
                      problem);
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    transfer.note = "path enumeration capped; transfer checked on counts only";
  }

  Check& counts = rep.add("path counts between old vertices: Q vs result, degree <= " +
                          std::to_string(max_degree));
  ++counts.cases;
  if (auto diff = compare_old_vertex_counts(q, final_q, max_degree); !diff.empty()) {
    counts.fail(diff);
  }

  Check& orders = rep.add("highest-index-first order gives the same counts");
  ++orders.cases;
  const Normalization other = normalize_to_degree_one(q, SplitOrder::HighestIndexFirst);
  if (other.quiver.num_vertices() != norm.quiver.num_vertices() ||
      other.quiver.num_arrows() != norm.quiver.num_arrows() ||
      other.trace.size() != norm.trace.size()) {
    orders.fail("vertex/arrow counts differ between split orders");
  } else {
    const auto n = static_cast<std::size_t>(max_degree);
    auto old = first_vertices(q.num_vertices());
    if (!(path_counts(norm.quiver, n).by_degree(old) ==
          path_counts(other.quiver, n).by_degree(old))) {
      orders.fail("old-vertex degree series differ between split orders");
    }
  }
  return rep;
}

}  // namespace monoquiv
