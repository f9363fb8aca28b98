#pragma once

#include "nodal_hodge/serialize.hpp"
#include "nodal_hodge/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace nodal_hodge::cli {

enum class Space { smooth, base, gieseker, simpson, limit };

struct RunConfig {
  Space space = Space::smooth;
  int genus = 2;
  Format format = Format::text;
  std::optional<int> max_degree_override;
  std::optional<std::uint64_t> seed;
  bool force = false;
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

/// Highest genus accepted without --force.
constexpr int kGenusCap = 8;

std::string space_name(Space s);

int cmd_hpoly(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
/// `recursion` lets tests inject a faulty zeta recursion.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const mumford::ZetaRecursion& recursion = {});

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nodal_hodge::cli
