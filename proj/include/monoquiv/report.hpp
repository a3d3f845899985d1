#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <deque>
#include <vector>

#include "json.hpp"

namespace monoquiv {

// One named property checked over `cases` instances. A failing check keeps
// the first counterexample it met as `witness`.
struct Check {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness{};
  std::string note{};

  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
};

struct SuiteReport {
  std::string suite;
  std::deque<Check> checks{};  // deque: add() references stay valid
  std::vector<std::string> notes{};

  bool passed() const;
  Check& add(std::string name);
  void append(const SuiteReport& other);
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Independent, schedule-free RNG stream for trial `trial` under `seed`.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace monoquiv
