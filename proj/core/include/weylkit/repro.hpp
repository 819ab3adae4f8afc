#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace weylkit {

enum class CaseStatus { Pass, Fail, Discrepancy };

std::string_view to_string(CaseStatus status);

struct ReproCase {
  std::string id;
  std::string reference;
  CaseStatus status = CaseStatus::Fail;
  std::string computed;
  std::string expected;
  std::string notes;
};

struct ReproReport {
  std::vector<ReproCase> cases;

  std::size_t count(CaseStatus status) const;
  /// No case failed; discrepancies are allowed.
  bool ok() const { return count(CaseStatus::Fail) == 0; }
};

/// Suites: "all", "geb", "takenawa", "os", "secondvar", "examples".
/// Throws InvalidArgument for anything else.
ReproReport reproduce(std::string_view suite);

std::vector<std::string> repro_suites();

}  // namespace weylkit
