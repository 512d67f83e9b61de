#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace qgalois {

/// One named property, evaluated over many cases. Only the first few
/// failure descriptions are kept.
class Check {
 public:
  static constexpr std::size_t kMaxDetails = 8;

  Check(std::string name, std::string reference) : name_(std::move(name)), reference_(std::move(reference)) {}

  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok) {
      ++failures_;
      if (details_.size() < kMaxDetails) details_.push_back(describe());
    }
    return ok;
  }
  bool expect(bool ok) {
    return expect(ok, [] { return std::string("failed"); });
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  const std::string& name() const { return name_; }
  const std::string& reference() const { return reference_; }
  std::size_t cases() const { return cases_; }
  std::size_t failures() const { return failures_; }
  bool passed() const { return failures_ == 0 && cases_ > 0; }
  const std::vector<std::string>& details() const { return details_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::string name_;
  std::string reference_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> details_;
  std::vector<std::string> notes_;
};

struct Report {
  std::string suite;
  std::deque<Check> checks;

  explicit Report(std::string name = {}) : suite(std::move(name)) {}

  Check& add(std::string name, std::string reference) {
    checks.emplace_back(std::move(name), std::move(reference));
    return checks.back();
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  bool passed() const {
    if (checks.empty()) return false;
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
  std::size_t cases() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.cases();
    return n;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures();
    return n;
  }
};

}  // namespace qgalois
