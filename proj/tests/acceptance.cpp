// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "monoquiv/algebra_model.hpp"
#include "monoquiv/arrow_split.hpp"
#include "monoquiv/graded_reps.hpp"
#include "monoquiv/hilbert.hpp"
#include "monoquiv/rep_sampling.hpp"
#include "monoquiv/ufn_graph.hpp"
#include "oracles.hpp"

using namespace monoquiv;

namespace {

AlgebraInput load(const std::string& name) {
  std::ifstream in(std::string(MONOQUIV_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(std::string_view(ss.str()));
}

// Collects failure reasons for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: untimed
  std::function<void(Outcome&)> body;
};

std::vector<MonomialPresentation> random_corpus(std::size_t n) {
  std::vector<MonomialPresentation> out;
  for (std::size_t t = 0; t < n; ++t) {
    auto rng = trial_rng(2024, t);
    out.push_back(oracle::random_presentation(rng));
  }
  return out;
}

// At least three arrows and a cycle, so paths of every degree exist.
std::vector<WeightedQuiver> random_quivers(std::size_t n) {
  std::vector<WeightedQuiver> out;
  for (std::size_t t = 0; out.size() < n; ++t) {
    auto rng = trial_rng(4096, t);
    WeightedQuiver q = random_weighted_quiver(rng, {3, 5, 3, true});
    Growth g = classify_growth(q);
    if (q.num_arrows() >= 3 && (g.exponential || g.degree > 0)) out.push_back(std::move(q));
  }
  return out;
}

void four_letter_graph(Outcome& o) {
  auto p = std::get<MonomialPresentation>(load("xyz_y4.json"));
  UfnGraph g(p);
  const WeightedQuiver& q = g.quiver();
  o.expect(g.ell() == 3, "ell = " + std::to_string(g.ell()));
  std::set<std::string> verts(q.vertices().begin(), q.vertices().end());
  o.expect(verts == std::set<std::string>{"xyy", "xyz", "yyz", "yzx", "zxy", "yyy"}, "vertex set");
  std::set<std::string> arrows;
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    arrows.insert(arr.name + ":" + p.generators()[g.label(a)].name);
    o.expect(q.vertex(arr.source) == arr.name.substr(0, 3), arr.name + " source");
    o.expect(q.vertex(arr.target) == arr.name.substr(1), arr.name + " target");
  }
  o.expect(arrows == std::set<std::string>{"zxyy:z", "zxyz:z", "xyyz:x", "xyyy:x", "xyzx:x",
                                           "yyyz:y", "yyzx:y", "yzxy:y"},
           "arrows and labels");
  o.detail = std::to_string(q.num_vertices()) + " vertices, " + std::to_string(q.num_arrows()) + " arrows";
}

void weighted_chain(Outcome& o) {
  auto p = std::get<MonomialPresentation>(load("xy_weighted.json"));
  UfnGraph g(p);
  const WeightedQuiver& q = g.quiver();
  std::vector<int> degrees;
  for (const Arrow& a : q.arrows()) degrees.push_back(a.degree);
  std::sort(degrees.begin(), degrees.end());
  o.expect(q.num_vertices() == 3 && q.num_arrows() == 3, "Q(A) size");
  o.expect(degrees == std::vector<int>{1, 1, 2}, "Q(A) degrees");
  Normalization n = normalize_to_degree_one(q);
  o.expect(n.quiver.num_vertices() == 4 && n.quiver.num_arrows() == 4, "normalized size");
  o.expect(n.quiver.all_degree_one(), "normalized degrees");
  o.expect(static_cast<long>(n.trace.size()) == weight_discrepancy(q) && n.trace.size() == 1,
           "trace length");
  MonomialPresentation b = connectify(n.quiver);
  o.expect(b.num_letters() == 4, "generator count");
  // x1..x4 follow the arrow order xxy, xyy, yyy', yyy''.
  std::vector<std::string> order = {"xxy", "xyy", "yyy'", "yyy''"};
  for (std::size_t i = 0; i < 4; ++i) {
    o.expect(b.generators()[i].name == order[i], "generator " + std::to_string(i + 1));
  }
  std::set<Word> want = {{0, 0}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 3},
                         {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 3}};
  o.expect(std::set<Word>(b.forbidden().begin(), b.forbidden().end()) == want &&
               b.forbidden().size() == 12,
           "forbidden quadratic words");
  o.detail = "B has " + std::to_string(b.forbidden().size()) + " relations";
}

void three_loops(Outcome& o) {
  auto q = std::get<WeightedQuiver>(load("free_123.json"));
  o.expect(weight_discrepancy(q) == 3, "D");
  Normalization n = normalize_to_degree_one(q);
  const WeightedQuiver& r = n.quiver;
  o.expect(n.trace.size() == 3, "trace length");
  o.expect(r.num_vertices() == 4 && r.num_arrows() == 6 && r.all_degree_one(), "normalized size");
  std::multiset<std::size_t> cycles;
  const VertexIndex root = *r.find_vertex("o");
  for (ArrowIndex a : r.out_arrows(root)) {
    std::size_t len = 1;
    VertexIndex v = r.arrow(a).target;
    while (v != root && len < 10) {
      if (r.out_arrows(v).size() != 1) break;
      v = r.arrow(r.out_arrows(v).front()).target;
      ++len;
    }
    cycles.insert(v == root ? len : 0);
  }
  o.expect(cycles == std::multiset<std::size_t>{1, 2, 3}, "one loop, one 2-cycle, one 3-cycle");
  o.detail = "cycles 1, 2, 3";
}

void bijection(Outcome& o) {
  auto corpus = random_corpus(60);
  std::size_t oracle_cases = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    UfnGraph g(corpus[i]);
    SuiteReport r = check_bijection(g, 8, 6);
    for (const Check& c : r.checks) {
      o.expect(c.passed, "presentation " + std::to_string(i) + ": " + c.name + " " + c.witness);
    }
    // Independent count of legal words against path counts by length.
    for (std::size_t r2 = 0; r2 <= 8 && r2 + g.ell() <= 9; ++r2) {
      ++oracle_cases;
      o.expect(path_counts_by_length(g.quiver(), r2) == oracle::legal_words(corpus[i], r2 + g.ell()).size(),
               "presentation " + std::to_string(i) + ": oracle count at r=" + std::to_string(r2));
    }
  }
  o.detail = std::to_string(corpus.size()) + " presentations, " + std::to_string(oracle_cases) +
             " brute-force counts";
}

void homomorphism(Outcome& o) {
  auto corpus = random_corpus(60);
  corpus.push_back(std::get<MonomialPresentation>(load("xyz_y4.json")));
  corpus.push_back(std::get<MonomialPresentation>(load("xy_weighted.json")));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    UfnGraph g(corpus[i]);
    SuiteReport hom = check_f_is_graded_hom(g, 1000, 4, i);
    SuiteReport gen = check_graded_generation(g, 8);
    hom.append(gen);
    for (const Check& c : hom.checks) {
      o.expect(c.passed, "presentation " + std::to_string(i) + ": " + c.name + " " + c.witness);
      if (c.name.rfind("f(u)f(v)", 0) == 0) pairs += c.cases;
    }
  }
  o.expect(pairs >= 1000 * corpus.size(), "pair count");
  o.detail = std::to_string(corpus.size()) + " presentations, " + std::to_string(pairs) + " pairs";
}

void split(Outcome& o) {
  std::vector<WeightedQuiver> qs = random_quivers(12);
  qs.push_back(std::get<WeightedQuiver>(load("free_123.json")));
  qs.push_back(UfnGraph(std::get<MonomialPresentation>(load("xy_weighted.json"))).quiver());
  std::size_t transferred = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    SuiteReport r = check_split_suite(qs[i], 10);
    for (const Check& c : r.checks) {
      o.expect(c.passed, "quiver " + std::to_string(i) + ": " + c.name + " " + c.witness);
      if (c.name.rfind("every path", 0) == 0) transferred += c.cases;
    }
  }
  o.detail = std::to_string(qs.size()) + " quivers, N = 10, two split orders, " +
             std::to_string(transferred) + " paths transferred";
}

void adjunction(Outcome& o) {
  std::vector<WeightedQuiver> qs = random_quivers(12);
  std::size_t samples = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Normalization n = normalize_to_degree_one(qs[i]);
    for (std::size_t s = 0; s < n.trace.size(); ++s) {
      SuiteReport r = check_adjunction(n.quivers[s], n.trace[s].arrow, 10, 8, i * 100 + s);
      samples += 10;
      for (const Check& c : r.checks) {
        o.expect(c.passed, "quiver " + std::to_string(i) + " split " + n.trace[s].arrow + ": " +
                               c.name + " " + c.witness);
      }
    }
  }
  o.expect(samples >= 100, "sample count");
  o.detail = std::to_string(qs.size()) + " quivers, " + std::to_string(samples) +
             " sampled reps, window [0, 8], dims <= 4";
}

void negative_controls(Outcome& o) {
  // Perturb one entry of an identity morphism at a spot an outgoing map reads.
  bool found = false;
  std::string witness;
  for (std::uint64_t t = 0; t < 200 && !found; ++t) {
    auto rng = trial_rng(77, t);
    auto q = std::make_shared<const WeightedQuiver>(random_weighted_quiver(rng));
    TruncatedGradedRep m = sample_rep(q, 0, 6, rng);
    for (ArrowIndex a = 0; a < q->num_arrows() && !found; ++a) {
      for (int d = 0; m.has_map(a, d) && !found; ++d) {
        Matrix n = m.map(a, d);
        for (std::size_t c = 0; c < n.cols() && !found; ++c) {
          for (std::size_t r = 0; r < n.rows() && !found; ++r) {
            if (n(r, c) == 0) continue;
            RepMorphism phi = RepMorphism::identity(m);
            phi.component(q->arrow(a).source, d)(c, 0) += 1;
            auto w = phi.validate();
            o.expect(w.has_value(), "perturbed morphism accepted");
            if (w) witness = w->describe();
            found = true;
          }
        }
      }
    }
  }
  o.expect(found && !witness.empty(), "perturbation witness");

  auto q = std::get<WeightedQuiver>(load("free_123.json"));
  WeightedQuiver good = normalize_to_degree_one(q).quiver;
  std::vector<Arrow> arrows = good.arrows();
  arrows.back().target = *good.find_vertex("z1");
  WeightedQuiver bad(good.vertices(), arrows);
  SuiteReport r = check_split_suite(q, 8, &bad);
  std::string split_witness;
  for (const Check& c : r.checks) {
    if (!c.passed && split_witness.empty()) split_witness = c.witness;
  }
  o.expect(!r.passed(), "retargeted arrow accepted");
  o.expect(split_witness.find("path ") != std::string::npos, "split witness names a path");
  o.detail = "morphism: " + witness + "; split: " + split_witness;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Ufnarovskii graph of the four-letter presentation", 1.0, four_letter_graph},
      {2, "weighted presentation: graph, normalization, connectification", 1.0, weighted_chain},
      {3, "loops of degree 1, 2, 3 normalize to a loop, a 2-cycle and a 3-cycle", 0.0, three_loops},
      {4, "length bijection and path reconstruction on random presentations", 30.0, bijection},
      {5, "f is a graded homomorphism and generates in each degree", 30.0, homomorphism},
      {6, "split suite: invariant counts, D steps, two orders", 0.0, split},
      {7, "adjunction identities on sampled representations", 60.0, adjunction},
      {8, "negative controls are caught with witnesses", 0.0, negative_controls},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      std::ostringstream os;
      os << "took " << secs << " s, limit " << c.limit_seconds << " s";
      o.failures.push_back(os.str());
    }
    const bool ok = o.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed
              << std::setprecision(3) << secs << " s)";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << '\n';
    for (std::size_t i = 0; i < o.failures.size() && i < 5; ++i) {
      std::cout << "    " << o.failures[i] << '\n';
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
