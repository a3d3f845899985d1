#include "monoquiv/ufn_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace monoquiv {

std::size_t ell(const MonomialPresentation& p) {
  std::size_t longest = 1;
  for (const Word& w : p.forbidden()) longest = std::max(longest, w.size());
  return longest - 1;
}

UfnGraph::UfnGraph(MonomialPresentation p, std::size_t budget)
    : presentation_(std::move(p)),
      automaton_(presentation_),
      ell_(monoquiv::ell(presentation_)) {
  vertex_words_ = enumerate_by_length(automaton_, ell_, budget);
  arrow_words_ = enumerate_by_length(automaton_, ell_ + 1, budget);

  std::vector<std::string> vertex_ids;
  for (VertexIndex v = 0; v < vertex_words_.size(); ++v) {
    vertex_index_.emplace(vertex_words_[v], v);
    vertex_ids.push_back(presentation_.format(vertex_words_[v]));
  }
  std::vector<Arrow> arrows;
  for (ArrowIndex a = 0; a < arrow_words_.size(); ++a) {
    const Word& w = arrow_words_[a];
    Word prefix(w.begin(), w.end() - 1);
    Word suffix(w.begin() + 1, w.end());
    // Factors of legal words are legal, so both lookups succeed.
    arrows.push_back({presentation_.format(w), vertex_index_.at(prefix),
                      vertex_index_.at(suffix),
                      presentation_.letter_degree(w.front())});
    labels_.push_back(w.front());
    arrow_index_.emplace(w, a);
  }
  quiver_ = WeightedQuiver(std::move(vertex_ids), std::move(arrows));

  const std::size_t k = presentation_.num_letters();
  out_labeled_.assign(quiver_.num_vertices() * k, {});
  for (ArrowIndex a = 0; a < quiver_.num_arrows(); ++a) {
    out_labeled_[quiver_.arrow(a).source * k + labels_[a]].push_back(a);
  }
}

std::optional<VertexIndex> UfnGraph::vertex_of(const Word& w) const {
  auto it = vertex_index_.find(w);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowIndex> UfnGraph::arrow_of(const Word& w) const {
  auto it = arrow_index_.find(w);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

UfnGraph build_ufnarovskii(const MonomialPresentation& p, std::size_t budget) {
  return UfnGraph(p, budget);
}

Word path_label(const UfnGraph& g, const Path& p) {
  Word out;
  out.reserve(p.arrows.size());
  for (ArrowIndex a : p.arrows) out.push_back(g.label(a));
  return out;
}

LabeledPath labeled(const UfnGraph& g, const Path& p) {
  const WeightedQuiver& q = g.quiver();
  return {p, path_label(g, p), path_degree(q, p), p.start, path_target(q, p)};
}

std::optional<Path> path_from_label_target(const UfnGraph& g, const Word& label,
                                           VertexIndex v) {
  for (Letter x : label) {
    if (x >= g.presentation().num_letters()) {
      throw std::invalid_argument("label uses a letter outside the alphabet");
    }
  }
  const Word& end = g.vertex_word(v);
  Word full = label;
  full.insert(full.end(), end.begin(), end.end());
  const std::size_t r = label.size();
  const std::size_t l = g.ell();
  Path p;
  p.arrows.resize(r);
  // Arrow i spells full[i .. i+l], walked from the end so the target is fixed.
  for (std::size_t i = r; i-- > 0;) {
    Word w(full.begin() + i, full.begin() + i + l + 1);
    auto a = g.arrow_of(w);
    if (!a) return std::nullopt;
    p.arrows[i] = *a;
  }
  if (r == 0) {
    p.start = v;
  } else {
    p.start = g.quiver().arrow(p.arrows.front()).source;
  }
  return p;
}

void PathSum::add(const Path& p, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PathSum PathSum::times_idempotent(const WeightedQuiver& q, VertexIndex v) const {
  PathSum out;
  for (const auto& [p, c] : terms_) {
    if (path_target(q, p) == v) out.terms_.emplace(p, c);
  }
  return out;
}

std::vector<long> PathSum::degrees(const WeightedQuiver& q) const {
  std::set<long> ds;
  for (const auto& [p, c] : terms_) ds.insert(path_degree(q, p));
  return {ds.begin(), ds.end()};
}

std::string PathSum::format(const WeightedQuiver& q) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << format_path(q, p);
  }
  return os.str();
}

PathSum multiply(const WeightedQuiver& q, const PathSum& lhs, const PathSum& rhs) {
  PathSum out;
  for (const auto& [p, c] : lhs.terms()) {
    for (const auto& [r, d] : rhs.terms()) {
      if (auto pr = compose(q, p, r)) out.add(*pr, c * d);
    }
  }
  return out;
}

PathSum apply_f(const UfnGraph& g, const Word& w) {
  const WeightedQuiver& q = g.quiver();
  for (Letter x : w) {
    if (x >= g.presentation().num_letters()) {
      throw std::invalid_argument("word uses a letter outside the alphabet");
    }
  }
  std::vector<Path> frontier;
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) frontier.push_back({v, {}});
  for (Letter x : w) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (ArrowIndex a : g.out_labeled(path_target(q, p), x)) {
        Path e = p;
        e.arrows.push_back(a);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  PathSum out;
  for (const Path& p : frontier) out.add(p, 1);
  return out;
}

namespace {

Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  Word w(len(rng));
  if (letters == 0) return {};
  std::uniform_int_distribution<Letter> pick(0, letters - 1);
  for (Letter& x : w) x = pick(rng);
  return w;
}

}  // namespace

SuiteReport check_f_is_graded_hom(const UfnGraph& g, std::size_t trials,
                                  std::size_t max_len, std::uint64_t seed) {
  const WeightedQuiver& q = g.quiver();
  const MonomialPresentation& p = g.presentation();
  SuiteReport rep{"f-homomorphism"};

  Check& mult = rep.add("f(u)f(v) = f(uv)");
  Check& degree = rep.add("f(w) homogeneous of degree deg(w)");
  auto check_degree = [&](const Word& w, const PathSum& fw) {
    ++degree.cases;
    auto ds = fw.degrees(q);
    if (ds.size() > 1 || (ds.size() == 1 && ds[0] != p.degree(w))) {
      degree.fail("f(" + p.format(w) + ") = " + fw.format(q));
    }
  };
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    Word u = random_word(rng, p.num_letters(), max_len);
    Word v = random_word(rng, p.num_letters(), max_len);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    PathSum fu = apply_f(g, u), fv = apply_f(g, v), fuv = apply_f(g, uv);
    ++mult.cases;
    if (!(multiply(q, fu, fv) == fuv)) {
      mult.fail("u=" + p.format(u) + " v=" + p.format(v) + ": f(u)f(v) = " +
                multiply(q, fu, fv).format(q) + " but f(uv) = " + fuv.format(q));
    }
    check_degree(uv, fuv);
  }

  Check& relations = rep.add("f(w) = 0 for forbidden w");
  for (const Word& w : p.forbidden()) {
    ++relations.cases;
    PathSum fw = apply_f(g, w);
    if (!fw.is_zero()) relations.fail("f(" + p.format(w) + ") = " + fw.format(q));
    check_degree(w, fw);
  }

  Check& unit = rep.add("f(1)f(x) = f(x) = f(x)f(1)");
  PathSum one = apply_f(g, {});
  for (Letter x = 0; x < p.num_letters(); ++x) {
    ++unit.cases;
    PathSum fx = apply_f(g, {x});
    if (!(multiply(q, one, fx) == fx) || !(multiply(q, fx, one) == fx)) {
      unit.fail("x=" + p.generators()[x].name);
    }
    check_degree({x}, fx);
  }
  return rep;
}

SuiteReport check_graded_generation(const UfnGraph& g, long max_degree) {
  const WeightedQuiver& q = g.quiver();
  SuiteReport rep{"graded-generation"};
  Check& c = rep.add("f(label(p))·e_t(p) = p for deg(p) <= " +
                     std::to_string(max_degree));
  c.note = "each path is determined by its label and its target";
  for (const Path& path : enumerate_paths(q, max_degree)) {
    ++c.cases;
    PathSum got = apply_f(g, path_label(g, path)).times_idempotent(q, path_target(q, path));
    if (!(got == PathSum::single(path))) {
      c.fail("p=" + format_path(q, path) + " gives " + got.format(q));
    }
  }
  return rep;
}

SuiteReport check_bijection(const UfnGraph& g, std::size_t max_r,
                            std::size_t round_trip_len) {
  const WeightedQuiver& q = g.quiver();
  const MonomialPresentation& p = g.presentation();
  SuiteReport rep{"ufnarovskii-bijection"};

  Check& labels = rep.add("arrow label = first letter, deg(arrow) = deg(label)");
  Check& ends = rep.add("s(w) = prefix, t(w) = suffix");
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    ++labels.cases;
    ++ends.cases;
    const Word& w = g.arrow_word(a);
    if (g.label(a) != w.front() || q.arrow(a).degree != p.letter_degree(w.front())) {
      labels.fail("arrow " + q.arrow(a).name);
    }
    Word prefix(w.begin(), w.end() - 1), suffix(w.begin() + 1, w.end());
    if (g.vertex_word(q.arrow(a).source) != prefix ||
        g.vertex_word(q.arrow(a).target) != suffix) {
      ends.fail("arrow " + q.arrow(a).name);
    }
  }

  Check& counts = rep.add("#paths of length r = |L_{r+ell}|, r <= " + std::to_string(max_r));
  DegreeSeries legal = count_by_length(g.automaton(), max_r + g.ell());
  std::vector<mpz_class> ending(q.num_vertices(), 1);
  for (std::size_t r = 0; r <= max_r; ++r) {
    ++counts.cases;
    mpz_class total = 0;
    for (const auto& c : ending) total += c;
    if (total != legal[r + g.ell()]) {
      counts.fail("r=" + std::to_string(r) + ": " + total.get_str() + " paths vs " +
                  legal[r + g.ell()].get_str() + " legal words");
    }
    std::vector<mpz_class> next(q.num_vertices(), 0);
    for (const Arrow& a : q.arrows()) next[a.target] += ending[a.source];
    ending = std::move(next);
  }

  Check& image = rep.add("p -> label(p)·t(p) injective onto L_{r+ell}, r <= " +
                         std::to_string(round_trip_len));
  Check& round = rep.add("path_from_label_target(label(p), t(p)) = p");
  std::vector<std::set<Word>> images(round_trip_len + 1);
  for (const Path& path : enumerate_paths_by_length(q, round_trip_len)) {
    ++image.cases;
    ++round.cases;
    Word lab = path_label(g, path);
    VertexIndex t = path_target(q, path);
    Word full = lab;
    full.insert(full.end(), g.vertex_word(t).begin(), g.vertex_word(t).end());
    if (!is_legal(g.automaton(), full)) {
      image.fail(format_path(q, path) + " spells illegal " + p.format(full));
    }
    if (!images[path.length()].insert(full).second) {
      image.fail(format_path(q, path) + " spells a word already seen: " + p.format(full));
    }
    auto back = path_from_label_target(g, lab, t);
    if (!back || !(*back == path)) round.fail(format_path(q, path));
  }
  for (std::size_t r = 0; r <= round_trip_len; ++r) {
    if (legal.size() > r + g.ell() && images[r].size() != legal[r + g.ell()]) {
      image.fail("r=" + std::to_string(r) + ": image has " +
                 std::to_string(images[r].size()) + " words");
    }
  }
  return rep;
}

std::string Growth::to_string() const {
  if (exponential) return "exponential";
  return "polynomial(" + std::to_string(degree) + ")";
}

Growth classify_growth(const WeightedQuiver& q) {
  const std::size_t n = q.num_vertices();
  // Tarjan's algorithm.
  std::vector<long> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexIndex> stack;
  long counter = 0, components = 0;
  std::function<void(VertexIndex)> connect = [&](VertexIndex v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (ArrowIndex a : q.out_arrows(v)) {
      VertexIndex w = q.arrow(a).target;
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      VertexIndex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (VertexIndex v = 0; v < n; ++v) {
    if (index[v] < 0) connect(v);
  }

  std::vector<long> size(components, 0), internal(components, 0);
  for (VertexIndex v = 0; v < n; ++v) ++size[comp[v]];
  for (const Arrow& a : q.arrows()) {
    if (comp[a.source] == comp[a.target]) ++internal[comp[a.source]];
  }
  for (long c = 0; c < components; ++c) {
    if (internal[c] > size[c]) return {true, 0};
  }
  // Tarjan numbers components in reverse topological order, so every arrow
  // between components goes from a higher number to a lower one.
  std::vector<std::size_t> chain(components, 0);
  for (long c = 0; c < components; ++c) {
    std::size_t best = 0;
    for (const Arrow& a : q.arrows()) {
      if (comp[a.source] == c && comp[a.target] != c) {
        best = std::max(best, chain[comp[a.target]]);
      }
    }
    chain[c] = best + (internal[c] > 0 ? 1 : 0);
  }
  std::size_t d = 0;
  for (std::size_t c : chain) d = std::max(d, c);
  return {false, d};
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const UfnGraph& g) {
  const WeightedQuiver& q = g.quiver();
  std::ostringstream os;
  os << "digraph ufnarovskii {\n";
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    os << "  n" << v << " [label=\"" << dot_escape(q.vertex(v)) << "\"];\n";
  }
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    os << "  n" << arr.source << " -> n" << arr.target << " [label=\""
       << dot_escape(arr.name + "/" + g.presentation().generators()[g.label(a)].name +
                     ":" + std::to_string(arr.degree))
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace monoquiv
