#include "monoquiv/report.hpp"

#include <algorithm>
#include <sstream>

namespace monoquiv {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

Check& SuiteReport::add(std::string name) {
  checks.push_back(Check{std::move(name)});
  return checks.back();
}

void SuiteReport::append(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.note.empty()) j["note"] = c.note;
    cs.push_back(std::move(j));
  }
  nlohmann::json out = {{"suite", suite}, {"passed", passed()}, {"checks", std::move(cs)}};
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  for (const Check& c : checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << " ("
       << c.cases << " cases)";
    if (!c.note.empty()) os << " -- " << c.note;
    os << '\n';
    if (!c.witness.empty()) os << "      witness: " << c.witness << '\n';
  }
  for (const std::string& n : notes) os << "  note: " << n << '\n';
  return os.str();
}

}  // namespace monoquiv
