#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "monoquiv/arrow_split.hpp"
#include "monoquiv/hilbert.hpp"
#include "monoquiv/rep_sampling.hpp"
#include "monoquiv/ufn_graph.hpp"
#include "oracles.hpp"

using namespace monoquiv;

TEST_SUITE("hilbert") {

TEST_CASE("path counts match enumeration") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = trial_rng(41, t);
    WeightedQuiver q = random_weighted_quiver(rng, {3, 4, 3, false});
    PathCountTable table = path_counts(q, 7);
    auto want = oracle::path_counts(q, 7);
    for (VertexIndex u = 0; u < q.num_vertices(); ++u) {
      for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
        for (std::size_t d = 0; d <= 7; ++d) CHECK(table.count(u, v, d) == want[u][v][d]);
      }
    }
    if (q.all_degree_one()) CHECK(table.by_degree() == table.by_length());
    for (std::size_t r = 0; r <= 5; ++r) {
      long n = 0;
      for (const Path& p : oracle::all_paths(q, r)) n += p.length() == r;
      CHECK(path_counts_by_length(q, r) == n);
    }
  }
}

TEST_CASE("small quivers") {
  CHECK(path_counts(WeightedQuiver({"u", "v"}, {{"a", 0, 1, 1}}), 3).by_degree().to_string() ==
        "[2,1,0,0]");
  CHECK(path_counts(WeightedQuiver({"u"}, {{"a", 0, 0, 2}}), 5).by_degree().to_string() ==
        "[1,0,1,0,1,0]");
  WeightedQuiver q = UfnGraph(testing::xy_weighted()).quiver();
  CHECK(path_counts(q, 4).by_degree().to_string() == "[3,2,2,1,2]");
  CHECK(path_counts_by_length(q, 2) == 3);
  CHECK(path_counts_by_length(q, 0) == 3);
  CHECK(path_counts_by_length(UfnGraph(testing::xyz_y4()).quiver(), 1) == 8);
}

TEST_CASE("series comparison") {
  SeriesComparison c = compare_series(testing::xy_weighted(), 6);
  CHECK(c.algebra.to_string() == "[1,1,2,1,2,1,2]");
  CHECK(c.path_algebra.to_string() == "[3,2,2,1,2,1,2]");
  CHECK(c.bijection.passed());
  auto free2 = testing::presentation(R"({"kind":"monomial","generators":[{"name":"x","degree":1},
    {"name":"y","degree":1}]})");
  SeriesComparison f = compare_series(free2, 5);
  CHECK(f.algebra.to_string() == "[1,2,4,8,16,32]");
  CHECK(f.algebra == f.path_algebra);
}

TEST_CASE("split invariance on old vertices") {
  WeightedQuiver q = UfnGraph(testing::xy_weighted()).quiver();
  WeightedQuiver qp = normalize_to_degree_one(q).quiver;
  std::vector<VertexIndex> old = {0, 1, 2};
  CHECK(path_counts(q, 6).by_degree(old) == path_counts(qp, 6).by_degree(old));
}

TEST_CASE("counts beyond 64 bits") {
  WeightedQuiver q({"u"}, {{"a", 0, 0, 1}, {"b", 0, 0, 1}, {"c", 0, 0, 1}});
  mpz_class want = 1;
  for (int i = 0; i < 60; ++i) want *= 3;
  CHECK(path_counts(q, 60).by_degree()[60] == want);
}

TEST_CASE("table formatting") {
  std::string t = format_series_table({{"A", {1, 1, 2}}, {"kQ(A)", {3, 2, 2}}});
  CHECK(t.find("kQ(A)") != std::string::npos);
  CHECK(t.find('\n') != std::string::npos);
}

}  // TEST_SUITE
