#include "monoquiv/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "monoquiv/error.hpp"
#include "monoquiv/graded_reps.hpp"
#include "monoquiv/hilbert.hpp"
#include "monoquiv/legal_words.hpp"
#include "monoquiv/ufn_graph.hpp"

namespace monoquiv {

namespace {

constexpr std::size_t kMaxPipelineSteps = 8;
constexpr std::size_t kRoundTripLength = 6;
constexpr std::size_t kMaxWordLength = 4;
constexpr std::size_t kMaxBijectionLength = 8;
constexpr int kMaxWindow = 8;

bool has_relations(const AlgebraInput& in) {
  const auto* a = std::get_if<QuiverMonomialAlgebra>(&in);
  return a != nullptr && !a->relations.empty();
}

const WeightedQuiver& quiver_of(const AlgebraInput& in) {
  if (const auto* q = std::get_if<WeightedQuiver>(&in)) return *q;
  return std::get<QuiverMonomialAlgebra>(in).quiver;
}

QuiverMonomialAlgebra as_algebra(const AlgebraInput& in) {
  if (const auto* q = std::get_if<WeightedQuiver>(&in)) return QuiverMonomialAlgebra(*q, {});
  return std::get<QuiverMonomialAlgebra>(in);
}

std::size_t unsigned_degree(long n) { return n < 0 ? 0 : static_cast<std::size_t>(n); }

PipelineStep make_step(std::string op, std::string basis, AlgebraInput result, SuiteReport report) {
  AlgebraClass cls = classify(result);
  return PipelineStep{std::move(op), std::move(basis), std::move(result), std::move(cls),
                      std::nullopt, std::move(report)};
}

PipelineStep step_connectify(const AlgebraInput& current, const SuiteOptions& opts) {
  QuiverMonomialAlgebra alg = as_algebra(current);
  MonomialPresentation b = connectify(alg);
  if (opts.reduce_forbidden) b = reduce_forbidden(b);
  SuiteReport report = check_connectify(alg, b, opts.max_degree);
  return make_step("connectify", "k + A_{>=1} with one generator per arrow", std::move(b),
                   std::move(report));
}

PipelineStep step_ufgraph(const MonomialPresentation& p, const SuiteOptions& opts) {
  UfnGraph g(p);
  SuiteReport report = ufgraph_suite(p, opts);
  return make_step("ufgraph", "weighted Ufnarovskii graph Q(A)", g.quiver(), std::move(report));
}

PipelineStep step_normalize(const WeightedQuiver& q, const SuiteOptions& opts) {
  Normalization n = normalize_to_degree_one(q);
  SuiteReport report = check_split_suite(q, opts.max_degree, &n.quiver);
  PipelineStep step = make_step("normalize", "arrow splitting down to degree one", n.quiver,
                                std::move(report));
  step.trace = std::move(n.trace);
  return step;
}

}  // namespace

bool PipelineReport::passed() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const PipelineStep& s) { return s.report.passed(); });
}

nlohmann::json PipelineReport::to_json() const {
  nlohmann::json out = {{"input_class", input_class.describe()},
                        {"target", monoquiv::to_string(target)},
                        {"passed", passed()}};
  nlohmann::json steps_json = nlohmann::json::array();
  for (const PipelineStep& s : steps) {
    nlohmann::json j = {{"op", s.op},
                        {"basis", s.basis},
                        {"class", s.result_class.describe()},
                        {"artifact", monoquiv::to_json(s.result)},
                        {"verification", s.report.to_json()}};
    if (s.trace) j["trace"] = monoquiv::to_json(*s.trace);
    steps_json.push_back(std::move(j));
  }
  out["steps"] = std::move(steps_json);
  out["output"] = monoquiv::to_json(output());
  return out;
}

std::string PipelineReport::to_text() const {
  std::ostringstream os;
  os << "input class: " << input_class.describe() << '\n'
     << "target: " << monoquiv::to_string(target) << '\n'
     << "steps: " << steps.size() << '\n';
  std::size_t i = 0;
  for (const PipelineStep& s : steps) {
    os << "step " << ++i << ": " << s.op << " (" << s.basis << ") -> "
       << s.result_class.describe() << '\n';
    if (const auto* q = std::get_if<WeightedQuiver>(&s.result)) {
      os << "  quiver: " << q->num_vertices() << " vertices, " << q->num_arrows() << " arrows\n";
    } else if (const auto* p = std::get_if<MonomialPresentation>(&s.result)) {
      os << "  presentation: " << p->num_letters() << " generators, " << p->forbidden().size()
         << " forbidden words\n";
    }
    if (s.trace) os << "  splits: " << s.trace->size() << '\n';
    std::istringstream lines(s.report.to_text());
    for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
  }
  os << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

PipelineReport run_pipeline(const AlgebraInput& input, AlgebraClassLabel target,
                            const SuiteOptions& opts) {
  PipelineReport report{input, classify(input), target, {}};
  AlgebraInput current = input;
  if (opts.reduce_forbidden) {
    if (const auto* p = std::get_if<MonomialPresentation>(&current)) current = reduce_forbidden(*p);
  }
  while (!classify(current).has(target)) {
    if (report.steps.size() == kMaxPipelineSteps) {
      throw ValidationError("target class " + to_string(target) + " is not reachable");
    }
    PipelineStep step = [&] {
      if (const auto* p = std::get_if<MonomialPresentation>(&current)) return step_ufgraph(*p, opts);
      if (has_relations(current)) return step_connectify(current, opts);
      const WeightedQuiver& q = quiver_of(current);
      switch (target) {
        case AlgebraClassLabel::PA1:
          return step_normalize(q, opts);
        case AlgebraClassLabel::CMA1:
          return weight_discrepancy(q) > 0 ? step_normalize(q, opts) : step_connectify(current, opts);
        default:
          return step_connectify(current, opts);
      }
    }();
    current = step.result;
    report.steps.push_back(std::move(step));
  }
  return report;
}

SuiteReport check_connectify(const QuiverMonomialAlgebra& alg, const MonomialPresentation& b,
                             long max_degree) {
  SuiteReport rep{"connectify"};
  const WeightedQuiver& q = alg.quiver;
  Check& gens = rep.add("one generator per arrow, same degree");
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    ++gens.cases;
    if (a >= b.num_letters() || b.degree(Word{a}) != q.arrow(a).degree) {
      gens.fail("arrow " + q.arrow(a).name);
    }
  }
  if (b.num_letters() != q.num_arrows()) gens.fail("generator count differs from arrow count");

  Check& dims = rep.add("dim B_d = dim (kQ/I)_d for 1 <= d <= " + std::to_string(max_degree));
  std::vector<mpz_class> paths(unsigned_degree(max_degree) + 1);
  try {
    for (const Path& p : enumerate_paths(q, max_degree)) {
      if (p.arrows.empty()) continue;
      const bool killed = std::any_of(alg.relations.begin(), alg.relations.end(),
                                      [&](const Path& r) { return contains_factor(p.arrows, r.arrows); });
      if (!killed) ++paths[static_cast<std::size_t>(path_degree(q, p))];
    }
  } catch (const BudgetExceeded&) {
    dims.note = "path enumeration over budget; not checked";
    return rep;
  }
  DegreeSeries words = count_by_degree(FactorAutomaton(b), unsigned_degree(max_degree));
  for (std::size_t d = 1; d < paths.size(); ++d) {
    ++dims.cases;
    if (paths[d] != words[d]) {
      dims.fail("degree " + std::to_string(d) + ": " + paths[d].get_str() + " paths vs " +
                words[d].get_str() + " words");
    }
  }
  return rep;
}

SuiteReport ufgraph_suite(const MonomialPresentation& p, const SuiteOptions& opts) {
  UfnGraph g(p);
  SuiteReport rep{"ufgraph"};
  rep.append(check_bijection(g, kMaxBijectionLength, kRoundTripLength));
  rep.append(check_f_is_graded_hom(g, opts.trials, kMaxWordLength, opts.seed));
  rep.append(check_graded_generation(g, opts.max_degree));
  return rep;
}

SuiteReport hilbert_suite(const AlgebraInput& input, const SuiteOptions& opts) {
  SuiteReport rep{"hilbert"};
  const std::size_t n = unsigned_degree(opts.max_degree);
  auto check_counts = [&](const WeightedQuiver& q, const std::string& what) {
    Check& c = rep.add("path counts of " + what + " match enumeration, N = " + std::to_string(n));
    PathCountTable table = path_counts(q, n);
    std::vector<mpz_class> brute(q.num_vertices() * q.num_vertices() * (n + 1));
    try {
      for (const Path& p : enumerate_paths(q, opts.max_degree)) {
        const std::size_t d = static_cast<std::size_t>(path_degree(q, p));
        ++brute[(path_source(q, p) * q.num_vertices() + path_target(q, p)) * (n + 1) + d];
      }
    } catch (const BudgetExceeded&) {
      c.note = "path enumeration over budget; not checked";
      return;
    }
    for (VertexIndex u = 0; u < q.num_vertices(); ++u) {
      for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
        for (std::size_t d = 0; d <= n; ++d) {
          ++c.cases;
          const mpz_class& want = brute[(u * q.num_vertices() + v) * (n + 1) + d];
          if (table.count(u, v, d) != want) {
            c.fail(q.vertex(u) + " -> " + q.vertex(v) + " degree " + std::to_string(d) + ": " +
                   table.count(u, v, d).get_str() + " vs " + want.get_str());
          }
        }
      }
    }
  };
  if (const auto* p = std::get_if<MonomialPresentation>(&input)) {
    SeriesComparison cmp = compare_series(*p, n);
    rep.append(cmp.bijection);
    check_counts(UfnGraph(*p).quiver(), "Q(A)");
  } else {
    check_counts(quiver_of(input), "the quiver");
  }
  return rep;
}

SuiteReport adjunction_suite(const WeightedQuiver& q, const SuiteOptions& opts) {
  SuiteReport rep{"adjunction"};
  Normalization n = normalize_to_degree_one(q);
  const int window =
      static_cast<int>(std::clamp<long>(opts.max_degree, 1, kMaxWindow));
  if (n.trace.empty()) {
    Check& c = rep.add("adjunction for every split");
    c.note = "all arrows have degree 1; nothing to split";
    return rep;
  }
  for (std::size_t i = 0; i < n.trace.size(); ++i) {
    SuiteReport one = check_adjunction(n.quivers[i], n.trace[i].arrow, opts.trials, window,
                                       opts.seed + i);
    for (Check& c : one.checks) c.name = n.trace[i].arrow + ": " + c.name;
    rep.append(one);
  }
  return rep;
}

SuiteReport run_suite(const AlgebraInput& input, const std::string& suite,
                      const SuiteOptions& opts, const WeightedQuiver* golden) {
  if (suite == "ufgraph") {
    const auto* p = std::get_if<MonomialPresentation>(&input);
    if (p == nullptr) throw ValidationError("suite ufgraph needs a monomial presentation");
    return ufgraph_suite(opts.reduce_forbidden ? reduce_forbidden(*p) : *p, opts);
  }
  if (suite == "hilbert") return hilbert_suite(input, opts);
  if (std::holds_alternative<MonomialPresentation>(input) || has_relations(input)) {
    throw ValidationError("suite " + suite + " needs a weighted quiver without relations");
  }
  const WeightedQuiver& q = quiver_of(input);
  if (suite == "split") {
    SuiteReport rep = check_split_suite(q, opts.max_degree, golden);
    return rep;
  }
  if (suite == "adjunction") return adjunction_suite(q, opts);
  throw ValidationError("unknown suite \"" + suite + "\"");
}

}  // namespace monoquiv
