// Brute-force reference implementations. Deliberately naive: nothing here
// shares code with the library beyond its value types.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "monoquiv/presentation.hpp"
#include "monoquiv/quiver.hpp"

namespace oracle {

using monoquiv::Letter;
using monoquiv::Word;

inline bool has_factor(const Word& w, const Word& f) {
  if (f.size() > w.size()) return false;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < f.size(); ++j) hit = hit && w[i + j] == f[j];
    if (hit) return true;
  }
  return false;
}

inline bool legal(const Word& w, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    if (has_factor(w, f)) return false;
  }
  return true;
}

// Every word of length n over k letters, lexicographic.
inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (Letter x = 0; x < k; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Word> legal_words(const monoquiv::MonomialPresentation& p, std::size_t n) {
  std::vector<Word> out;
  for (Word& w : all_words(p.num_letters(), n)) {
    if (legal(w, p.forbidden())) out.push_back(std::move(w));
  }
  return out;
}

inline long word_degree(const monoquiv::MonomialPresentation& p, const Word& w) {
  long d = 0;
  for (Letter x : w) d += p.generators()[x].degree;
  return d;
}

// Legal words of degree exactly d for d <= n, by exhaustive generation.
inline std::vector<long> legal_by_degree(const monoquiv::MonomialPresentation& p, std::size_t n) {
  std::vector<long> out(n + 1, 0);
  for (std::size_t len = 0; len <= n; ++len) {
    for (const Word& w : all_words(p.num_letters(), len)) {
      const long d = word_degree(p, w);
      if (d <= static_cast<long>(n) && legal(w, p.forbidden())) ++out[static_cast<std::size_t>(d)];
    }
  }
  return out;
}

// Every composable arrow sequence of length <= max_len, from every start.
inline std::vector<monoquiv::Path> all_paths(const monoquiv::WeightedQuiver& q,
                                             std::size_t max_len) {
  std::vector<monoquiv::Path> out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) out.push_back({v, {}});
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const Word& seq : all_words(q.num_arrows(), len)) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        ok = ok && q.arrow(seq[i]).target == q.arrow(seq[i + 1]).source;
      }
      if (ok) out.push_back({q.arrow(seq[0]).source, seq});
    }
  }
  return out;
}

inline long degree_of(const monoquiv::WeightedQuiver& q, const monoquiv::Path& p) {
  long d = 0;
  for (auto a : p.arrows) d += q.arrow(a).degree;
  return d;
}

inline std::size_t end_of(const monoquiv::WeightedQuiver& q, const monoquiv::Path& p) {
  return p.arrows.empty() ? p.start : q.arrow(p.arrows.back()).target;
}

// counts[u][v][d]: paths u -> v of degree d <= n. Arrows have degree >= 1,
// so length <= n suffices.
inline std::vector<std::vector<std::vector<long>>> path_counts(
    const monoquiv::WeightedQuiver& q, std::size_t n) {
  std::vector<std::vector<std::vector<long>>> c(
      q.num_vertices(), std::vector<std::vector<long>>(q.num_vertices(), std::vector<long>(n + 1)));
  for (const auto& p : all_paths(q, n)) {
    const long d = degree_of(q, p);
    if (d <= static_cast<long>(n)) ++c[p.start][end_of(q, p)][static_cast<std::size_t>(d)];
  }
  return c;
}

// Alphabet of 1..3 letters with degrees 1..max_degree and up to four
// forbidden words of length 1..4.
inline monoquiv::MonomialPresentation random_presentation(std::mt19937_64& rng,
                                                          int max_degree = 2) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int k = pick(1, 3);
  std::vector<monoquiv::Generator> gens;
  for (int i = 0; i < k; ++i) gens.push_back({std::string(1, static_cast<char>('a' + i)), pick(1, max_degree)});
  std::vector<Word> forbidden;
  const int nf = pick(0, 4);
  for (int i = 0; i < nf; ++i) {
    Word w;
    const int len = pick(1, 4);
    for (int j = 0; j < len; ++j) w.push_back(static_cast<Letter>(pick(0, k - 1)));
    forbidden.push_back(std::move(w));
  }
  return monoquiv::MonomialPresentation(std::move(gens), std::move(forbidden));
}

}  // namespace oracle
