#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace poincare {

enum class Severity { Hard, Soft };

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // both sides of the equation on failure
  Severity severity = Severity::Hard;
};

/// Ordered pass/fail list. Soft checks are reported but never fail the report.
class CheckReport {
public:
  void add(std::string name, bool passed, std::string detail = {}, Severity severity = Severity::Hard) {
    checks_.push_back({std::move(name), passed, std::move(detail), severity});
  }

  [[nodiscard]] bool ok() const {
    for (const auto& c : checks_) {
      if (!c.passed && c.severity == Severity::Hard) return false;
    }
    return true;
  }

  [[nodiscard]] std::optional<Check> first_failure() const {
    for (const auto& c : checks_) {
      if (!c.passed && c.severity == Severity::Hard) return c;
    }
    return std::nullopt;
  }

  [[nodiscard]] std::vector<Check> warnings() const {
    std::vector<Check> out;
    for (const auto& c : checks_) {
      if (!c.passed && c.severity == Severity::Soft) out.push_back(c);
    }
    return out;
  }

  [[nodiscard]] const Check* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  [[nodiscard]] const std::vector<Check>& checks() const noexcept { return checks_; }

  friend std::ostream& operator<<(std::ostream& os, const CheckReport& r) {
    for (const auto& c : r.checks_) {
      os << (c.passed ? "  ok   " : (c.severity == Severity::Hard ? "  FAIL " : "  warn ")) << c.name;
      if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
      os << '\n';
    }
    return os;
  }

private:
  std::vector<Check> checks_;
};

}  // namespace poincare
