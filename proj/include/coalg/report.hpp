#pragma once

#include <string>
#include <vector>

namespace coalg {

enum class CheckStatus { pass, fail, skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

// Ordered list of named check outcomes. Skipped entries mark work that a
// cap kept out of reach; they never count as passes.
struct Report {
  std::vector<Check> checks;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({name, ok ? CheckStatus::pass : CheckStatus::fail, detail});
  }
  void skip(const std::string& name, const std::string& detail = "") {
    checks.push_back({name, CheckStatus::skipped, detail});
  }

  bool any_failed() const {
    for (const Check& c : checks)
      if (c.status == CheckStatus::fail) return true;
    return false;
  }
  bool any_skipped() const {
    for (const Check& c : checks)
      if (c.status == CheckStatus::skipped) return true;
    return false;
  }

  const Check* find(const std::string& name) const {
    for (const Check& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string to_text() const {
    std::string out;
    for (const Check& c : checks) {
      out += c.name;
      out += ": ";
      out += c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIPPED";
      if (!c.detail.empty()) {
        out += "  (";
        out += c.detail;
        out += ")";
      }
      out += "\n";
    }
    return out;
  }
};

}  // namespace coalg
