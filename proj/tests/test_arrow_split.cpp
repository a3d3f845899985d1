#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "monoquiv/arrow_split.hpp"
#include "monoquiv/error.hpp"
#include "monoquiv/rep_sampling.hpp"
#include "oracles.hpp"

using namespace monoquiv;

TEST_SUITE("arrow_split") {

TEST_CASE("single split") {
  WeightedQuiver q({"u", "v"}, {{"a", 0, 1, 3}, {"b", 1, 0, 1}});
  auto [qp, step] = split_arrow(q, "a");
  CHECK(weight_discrepancy(q) == 2);
  CHECK(weight_discrepancy(qp) == 1);
  CHECK(qp.vertices() == std::vector<std::string>{"u", "v", "z1"});
  CHECK(qp.arrow(0) == Arrow{"a'", 0, 2, 1});
  CHECK(qp.arrow(1) == Arrow{"a''", 2, 1, 2});
  CHECK(qp.arrow(2) == Arrow{"b", 1, 0, 1});
  CHECK(step.new_vertex == "z1");
  CHECK(transfer_arrow(step, 0) == std::vector<ArrowIndex>{0, 1});
  CHECK(transfer_arrow(step, 1) == std::vector<ArrowIndex>{2});
  Path p{0, {0, 1, 0}};
  Path tp = transfer_path(step, p);
  CHECK(format_path(qp, tp) == "a'.a''.b.a'.a''");
  CHECK(path_degree(qp, tp) == path_degree(q, p));
  CHECK_THROWS_AS(split_arrow(q, "b"), ValidationError);
  CHECK_THROWS_AS(split_arrow(q, "c"), ValidationError);
}

TEST_CASE("fresh names avoid collisions") {
  WeightedQuiver q({"z1", "u"}, {{"a", 0, 1, 2}, {"a'", 1, 0, 1}});
  auto [qp, step] = split_arrow(q, "a");
  CHECK(step.new_vertex == "z2");
  CHECK(step.b_prime != "a'");
  CHECK(qp.find_arrow(step.b_prime));
  CHECK(qp.find_arrow(step.b_dblprime));
}

TEST_CASE("loops of degree 1, 2, 3") {
  Normalization n = normalize_to_degree_one(testing::loops_123());
  const WeightedQuiver& q = n.quiver;
  CHECK(n.trace.size() == 3);
  CHECK(q.num_vertices() == 4);
  CHECK(q.num_arrows() == 6);
  CHECK(q.all_degree_one());
  // One loop at o, a 2-cycle and a 3-cycle through o.
  std::vector<std::size_t> cycle_lengths;
  for (ArrowIndex a : q.out_arrows(0)) {
    std::size_t len = 1;
    VertexIndex v = q.arrow(a).target;
    while (v != 0) {
      REQUIRE(q.out_arrows(v).size() == 1);
      v = q.arrow(q.out_arrows(v).front()).target;
      ++len;
    }
    cycle_lengths.push_back(len);
  }
  std::sort(cycle_lengths.begin(), cycle_lengths.end());
  CHECK(cycle_lengths == std::vector<std::size_t>{1, 2, 3});
  CHECK(check_split_suite(testing::loops_123(), 10).passed());
}

TEST_CASE("normalization over random quivers") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = trial_rng(31, t);
    WeightedQuiver q = random_weighted_quiver(rng);
    const long d = weight_discrepancy(q);
    for (SplitOrder order : {SplitOrder::LowestIndexFirst, SplitOrder::HighestIndexFirst}) {
      Normalization n = normalize_to_degree_one(q, order);
      CHECK(static_cast<long>(n.trace.size()) == d);
      CHECK(n.quiver.num_vertices() == q.num_vertices() + static_cast<std::size_t>(d));
      CHECK(n.quiver.num_arrows() == q.num_arrows() + static_cast<std::size_t>(d));
      CHECK(n.quiver.all_degree_one());
      // Old-vertex path counts against brute force on both sides.
      auto before = oracle::path_counts(q, 5);
      auto after = oracle::path_counts(n.quiver, 5);
      for (VertexIndex u = 0; u < q.num_vertices(); ++u) {
        for (VertexIndex v = 0; v < q.num_vertices(); ++v) CHECK(before[u][v] == after[u][v]);
      }
    }
    CHECK(check_split_suite(q, 8).passed());
  }
}

TEST_CASE("trace round trip") {
  Normalization n = normalize_to_degree_one(testing::loops_123());
  CHECK(replay_trace(testing::loops_123(), to_json(n.trace)) == n.trace);
  nlohmann::json bad = to_json(n.trace);
  bad[0]["arrow"] = "nope";
  CHECK_THROWS(replay_trace(testing::loops_123(), bad));
}

TEST_CASE("a retargeted arrow is caught with a named path") {
  WeightedQuiver q = testing::loops_123();
  WeightedQuiver good = normalize_to_degree_one(q).quiver;
  std::vector<Arrow> arrows = good.arrows();
  arrows.back().target = 1;
  WeightedQuiver bad(good.vertices(), arrows);
  CHECK(check_split_suite(q, 6, &good).passed());
  SuiteReport r = check_split_suite(q, 6, &bad);
  CHECK_FALSE(r.passed());
  bool named = false;
  for (const Check& c : r.checks) named = named || c.witness.find("path ") != std::string::npos;
  CHECK(named);
}

}  // TEST_SUITE
