#include "monoquiv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "monoquiv/algebra_model.hpp"
#include "monoquiv/arrow_split.hpp"
#include "monoquiv/error.hpp"
#include "monoquiv/hilbert.hpp"
#include "monoquiv/pipeline.hpp"
#include "monoquiv/ufn_graph.hpp"

namespace monoquiv {

namespace {

struct Flags {
  std::string path;
  bool dot = false;
  bool json = false;
  std::string out;
  bool reduce = false;
  std::string to;
  long max_degree = 8;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string suite;
  std::string golden;
  std::string trace;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError(path + ": cannot write file");
  f << text;
}

AlgebraInput load(const std::string& path) {
  const std::string text = read_file(path);
  return parse_input(std::string_view(text));
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

MonomialPresentation require_presentation(const AlgebraInput& in, const char* cmd) {
  if (const auto* p = std::get_if<MonomialPresentation>(&in)) return *p;
  throw ValidationError(std::string(cmd) + " needs a monomial presentation (kind \"monomial\")");
}

WeightedQuiver require_plain_quiver(const AlgebraInput& in, const char* cmd) {
  if (const auto* q = std::get_if<WeightedQuiver>(&in)) return *q;
  throw ValidationError(std::string(cmd) + " needs a weighted quiver without relations");
}

std::string describe_presentation(const MonomialPresentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (const Generator& g : p.generators()) os << ' ' << g.name << ':' << g.degree;
  os << "\nforbidden (" << p.forbidden().size() << "):";
  for (const Word& w : p.forbidden()) os << ' ' << p.format(w);
  os << '\n';
  return os.str();
}

std::string describe_quiver(const WeightedQuiver& q) {
  std::ostringstream os;
  os << "vertices (" << q.num_vertices() << "):";
  for (const std::string& v : q.vertices()) os << ' ' << v;
  os << "\narrows (" << q.num_arrows() << "):\n";
  for (const Arrow& a : q.arrows()) {
    os << "  " << a.name << ": " << q.vertex(a.source) << " -> " << q.vertex(a.target)
       << " deg " << a.degree << '\n';
  }
  return os.str();
}

std::vector<mpz_class> coefficients(const DegreeSeries& s) { return s.coefficients; }

int cmd_check(const Flags& f, std::string& text) {
  AlgebraInput in = load(f.path);
  AlgebraClass cls = classify(in);
  if (f.json) {
    text = dump({{"valid", true}, {"class", to_string(cls.most_specific)}, {"describe", cls.describe()}});
  } else {
    text = "class: " + cls.describe() + "\n";
  }
  return kExitOk;
}

int cmd_classify(const Flags& f, std::string& text) {
  AlgebraInput in = load(f.path);
  AlgebraClass cls = classify(in);
  nlohmann::json labels = nlohmann::json::array();
  for (AlgebraClassLabel l : cls.labels) labels.push_back(to_string(l));
  if (f.json) {
    text = dump({{"class", to_string(cls.most_specific)}, {"labels", labels}});
  } else {
    std::ostringstream os;
    os << "class: " << cls.describe() << '\n';
    if (const auto* q = std::get_if<WeightedQuiver>(&in)) {
      os << "weight discrepancy: " << weight_discrepancy(*q) << '\n';
    }
    text = os.str();
  }
  return kExitOk;
}

int cmd_ufgraph(const Flags& f, std::string& text) {
  MonomialPresentation p = require_presentation(load(f.path), "ufgraph");
  if (f.reduce) p = reduce_forbidden(p);
  UfnGraph g(p);
  if (f.dot) {
    text = to_dot(g);
  } else if (f.json) {
    text = dump(to_json(g.quiver()));
  } else {
    std::ostringstream os;
    os << "ell: " << g.ell() << '\n' << "vertices (" << g.quiver().num_vertices() << "):";
    for (const std::string& v : g.quiver().vertices()) os << ' ' << v;
    os << "\narrows (" << g.quiver().num_arrows() << "):\n";
    for (ArrowIndex a = 0; a < g.quiver().num_arrows(); ++a) {
      const Arrow& arr = g.quiver().arrow(a);
      os << "  " << arr.name << ": " << g.quiver().vertex(arr.source) << " -> "
         << g.quiver().vertex(arr.target) << " label " << p.generators()[g.label(a)].name << " deg "
         << arr.degree << '\n';
    }
    os << "growth: " << classify_growth(g.quiver()).to_string() << '\n';
    text = os.str();
  }
  return kExitOk;
}

int cmd_normalize(const Flags& f, std::string& text) {
  WeightedQuiver q = require_plain_quiver(load(f.path), "normalize");
  Normalization n = normalize_to_degree_one(q);
  if (!f.trace.empty()) write_file(f.trace, dump(to_json(n.trace)));
  if (f.json) {
    text = dump({{"quiver", to_json(n.quiver)}, {"trace", to_json(n.trace)}});
  } else if (f.dot) {
    std::ostringstream os;
    os << "digraph normalized {\n";
    for (VertexIndex v = 0; v < n.quiver.num_vertices(); ++v) {
      os << "  n" << v << " [label=\"" << n.quiver.vertex(v) << "\"];\n";
    }
    for (const Arrow& a : n.quiver.arrows()) {
      os << "  n" << a.source << " -> n" << a.target << " [label=\"" << a.name << "\"];\n";
    }
    os << "}\n";
    text = os.str();
  } else {
    std::ostringstream os;
    os << "weight discrepancy: " << weight_discrepancy(q) << '\n'
       << "splits (" << n.trace.size() << "):\n";
    for (const SplitStep& s : n.trace) {
      os << "  " << s.arrow << " (deg " << s.arrow_degree << ") -> " << s.b_prime << ", "
         << s.b_dblprime << " via " << s.new_vertex << '\n';
    }
    os << describe_quiver(n.quiver);
    text = os.str();
  }
  return kExitOk;
}

int cmd_connectify(const Flags& f, std::string& text) {
  AlgebraInput in = load(f.path);
  MonomialPresentation b = [&] {
    if (const auto* q = std::get_if<WeightedQuiver>(&in)) return connectify(*q);
    if (const auto* a = std::get_if<QuiverMonomialAlgebra>(&in)) return connectify(*a);
    throw ValidationError("connectify needs a quiver (kind \"quiver\")");
  }();
  if (f.reduce) b = reduce_forbidden(b);
  text = f.json ? dump(to_json(b)) : describe_presentation(b);
  return kExitOk;
}

int cmd_hilbert(const Flags& f, std::string& text) {
  AlgebraInput in = load(f.path);
  const std::size_t n = static_cast<std::size_t>(std::max(0L, f.max_degree));
  if (auto* p = std::get_if<MonomialPresentation>(&in)) {
    MonomialPresentation pres = f.reduce ? reduce_forbidden(*p) : *p;
    SeriesComparison cmp = compare_series(pres, n);
    text = f.json ? dump(cmp.to_json()) : cmp.to_text();
    return cmp.bijection.passed() ? kExitOk : kExitVerificationFailed;
  }
  const WeightedQuiver& q = std::holds_alternative<WeightedQuiver>(in)
                                ? std::get<WeightedQuiver>(in)
                                : std::get<QuiverMonomialAlgebra>(in).quiver;
  PathCountTable t = path_counts(q, n);
  if (f.json) {
    text = dump({{"by_degree", to_json(t.by_degree())}, {"by_length", to_json(t.by_length())}});
  } else {
    text = format_series_table({{"paths by degree", coefficients(t.by_degree())},
                                {"paths by length", coefficients(t.by_length())}});
    if (!std::holds_alternative<WeightedQuiver>(in)) {
      text += "note: relations ignored; counts are for the path algebra\n";
    }
  }
  return kExitOk;
}

SuiteOptions suite_options(const Flags& f) {
  return SuiteOptions{f.max_degree, f.trials, f.seed, f.reduce};
}

int cmd_pipeline(const Flags& f, std::string& text) {
  AlgebraInput in = load(f.path);
  auto target = parse_class_label(f.to);
  if (!target) throw ValidationError("unknown target class \"" + f.to + "\"");
  PipelineReport r = run_pipeline(in, *target, suite_options(f));
  text = f.json ? dump(r.to_json()) : r.to_text();
  return r.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Flags& f, std::string& text) {
  AlgebraInput in = load(f.path);
  std::optional<WeightedQuiver> golden;
  if (!f.golden.empty()) {
    AlgebraInput g = load(f.golden);
    golden = require_plain_quiver(g, "--golden");
  }
  SuiteReport r = run_suite(in, f.suite, suite_options(f), golden ? &*golden : nullptr);
  text = f.json ? dump(r.to_json()) : r.to_text();
  return r.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial algebras, weighted quivers and their normal forms"};
  app.name("monoquiv");
  app.require_subcommand(1);
  Flags f;

  auto add_path = [&](CLI::App* c) { c->add_option("path", f.path, "input JSON file")->required(); };
  auto add_output = [&](CLI::App* c) {
    c->add_flag("--json", f.json, "JSON output");
    c->add_option("--out", f.out, "write output to FILE");
  };
  auto add_reduce = [&](CLI::App* c) {
    c->add_flag("--reduce-forbidden", f.reduce, "drop forbidden words with a forbidden factor");
  };
  auto add_suite_opts = [&](CLI::App* c) {
    c->add_option("--max-degree", f.max_degree, "degree bound N")->check(CLI::NonNegativeNumber);
    c->add_option("--trials", f.trials, "random trials / samples");
    c->add_option("--seed", f.seed, "RNG seed");
  };

  std::vector<std::pair<CLI::App*, std::function<int(const Flags&, std::string&)>>> cmds;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Flags&, std::string&)) {
    CLI::App* c = app.add_subcommand(name, help);
    add_path(c);
    add_output(c);
    cmds.emplace_back(c, fn);
    return c;
  };

  sub("check", "parse, validate and classify", cmd_check);
  sub("classify", "print the algebra classes", cmd_classify);
  CLI::App* uf = sub("ufgraph", "build the Ufnarovskii graph", cmd_ufgraph);
  uf->add_flag("--dot", f.dot, "Graphviz output");
  add_reduce(uf);
  CLI::App* norm = sub("normalize", "split arrows down to degree one", cmd_normalize);
  norm->add_flag("--dot", f.dot, "Graphviz output");
  norm->add_option("--trace", f.trace, "also write the split trace to FILE");
  CLI::App* conn = sub("connectify", "presentation of k + A_{>=1}", cmd_connectify);
  add_reduce(conn);
  CLI::App* hil = sub("hilbert", "graded dimension tables", cmd_hilbert);
  hil->add_option("--max-degree", f.max_degree, "degree bound N")->check(CLI::NonNegativeNumber);
  add_reduce(hil);
  CLI::App* pipe = sub("pipeline", "run the chain of constructions", cmd_pipeline);
  pipe->add_option("--to", f.to, "target class: PA1, WPA, MA, CMA or CMA1")->required();
  add_suite_opts(pipe);
  add_reduce(pipe);
  CLI::App* ver = sub("verify", "run a verification suite", cmd_verify);
  ver->add_option("--suite", f.suite, "ufgraph, split, adjunction or hilbert")
      ->required()
      ->check(CLI::IsMember({"ufgraph", "split", "adjunction", "hilbert"}));
  ver->add_option("--golden", f.golden, "stored normalized quiver audited by the split suite");
  add_suite_opts(ver);
  add_reduce(ver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  for (auto& [c, fn] : cmds) {
    if (!c->parsed()) continue;
    try {
      std::string text;
      int code = fn(f, text);
      if (f.out.empty()) {
        out << text;
      } else {
        write_file(f.out, text);
      }
      return code;
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << '\n';
      return kExitParseError;
    } catch (const ValidationError& e) {
      err << "validation error: " << e.what() << '\n';
      return kExitValidationError;
    } catch (const BudgetExceeded& e) {
      err << "budget exceeded: " << e.what() << '\n';
      return kExitBudgetExceeded;
    }
  }
  return kExitParseError;
}

}  // namespace monoquiv
