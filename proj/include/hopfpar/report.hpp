#pragma once

#include <string>
#include <vector>

namespace hopfpar {

enum class CheckStatus { pass, fail, skipped };

struct CheckItem {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // basis tuple / value description on failure
  std::string value;    // exact value string where meaningful
};

/// Outcome of a verification suite. All values are exact strings; a suite
/// with any failing item has overall status fail.
struct Report {
  std::string suite;
  std::vector<CheckItem> items;
  long timing_ms = 0;

  bool passed() const {
    for (const auto& it : items)
      if (it.status == CheckStatus::fail) return false;
    return true;
  }

  void add(const std::string& id, bool ok, const std::string& witness = "",
           const std::string& value = "") {
    items.push_back({id, ok ? CheckStatus::pass : CheckStatus::fail, witness, value});
  }

  void skip(const std::string& id, const std::string& why) {
    items.push_back({id, CheckStatus::skipped, why, ""});
  }

  void merge(const Report& other, const std::string& prefix = "");

  const CheckItem* find(const std::string& id) const;

  /// Deterministic text rendering; timing excluded from byte-stability
  /// guarantees (callers diff everything above the timing line).
  std::string render() const;
};

}  // namespace hopfpar
