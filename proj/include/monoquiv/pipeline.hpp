#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "monoquiv/algebra_model.hpp"
#include "monoquiv/arrow_split.hpp"
#include "monoquiv/report.hpp"

namespace monoquiv {

struct SuiteOptions {
  long max_degree = 8;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool reduce_forbidden = false;
};

struct PipelineStep {
  std::string op;     // "connectify", "ufgraph" or "normalize"
  std::string basis;  // the construction the step realizes
  AlgebraInput result;
  AlgebraClass result_class;
  std::optional<SplitTrace> trace;
  SuiteReport report;
};

struct PipelineReport {
  AlgebraInput input;
  AlgebraClass input_class;
  AlgebraClassLabel target;
  std::vector<PipelineStep> steps;

  bool passed() const;
  const AlgebraInput& output() const { return steps.empty() ? input : steps.back().result; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Applies connectify / ufgraph / normalize until the artifact lies in the
// target class, verifying each step.
PipelineReport run_pipeline(const AlgebraInput& input, AlgebraClassLabel target,
                            const SuiteOptions& opts = {});

// Graded dimensions of kQ/(relations) in degrees 1..N against the
// presentation produced by connectify.
SuiteReport check_connectify(const QuiverMonomialAlgebra& alg, const MonomialPresentation& b,
                             long max_degree);

SuiteReport ufgraph_suite(const MonomialPresentation& p, const SuiteOptions& opts);
SuiteReport hilbert_suite(const AlgebraInput& input, const SuiteOptions& opts);
// One adjunction run per split of the lowest-index-first normalization.
SuiteReport adjunction_suite(const WeightedQuiver& q, const SuiteOptions& opts);

// Named suite: "ufgraph", "split", "adjunction" or "hilbert". `golden` is a
// stored normalization audited by the split suite. Throws ValidationError
// when the input kind does not fit the suite.
SuiteReport run_suite(const AlgebraInput& input, const std::string& suite,
                      const SuiteOptions& opts, const WeightedQuiver* golden = nullptr);

}  // namespace monoquiv
