#pragma once

#include "nodal_hodge/mumford.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nodal_hodge {

enum class CheckStatus { pass, fail, skipped, info };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyOptions {
  int genus = 2;
  /// Checks that need cohomological degree above this are skipped.
  std::optional<int> max_degree;
  /// Seed for the randomized round-trip checks; 0 if unset.
  std::optional<std::uint64_t> seed;
  mumford::ZetaRecursion recursion;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  /// One line per check, `STATUS name: detail`, then a summary line.
  std::string to_string() const;
};

VerifyReport run_verify(const VerifyOptions& options);

} // namespace nodal_hodge
