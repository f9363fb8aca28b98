#include "nodal_hodge/cli.hpp"

#include "nodal_hodge/closed_forms.hpp"
#include "nodal_hodge/degeneration.hpp"
#include "nodal_hodge/errors.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <map>
#include <ostream>
#include <sstream>

namespace nodal_hodge::cli {

namespace {

const std::map<std::string, Space> kSpaces = {{"smooth", Space::smooth},
                                              {"base", Space::base},
                                              {"gieseker", Space::gieseker},
                                              {"simpson", Space::simpson},
                                              {"limit", Space::limit}};

const std::map<std::string, Format> kFormats = {
    {"json", Format::json}, {"csv", Format::csv}, {"markdown", Format::markdown}, {"text", Format::text}};

bool genus_ok(const RunConfig& c, std::ostream& err) {
  if (c.genus < 2) {
    err << fmt::format("error: genus must be >= 2 for {}, got {}\n", space_name(c.space), c.genus);
    return false;
  }
  if (c.genus > kGenusCap && !c.force) {
    err << fmt::format("error: genus {} exceeds {}; pass --force to run anyway\n", c.genus, kGenusCap);
    return false;
  }
  return true;
}

// Runs body, mapping invariant violations to exit code 3. Output is
// buffered so a failure never leaves a partial rendering on `out`.
template <typename Body>
int guarded(std::ostream& out, std::ostream& err, Body body) {
  std::ostringstream buffer;
  try {
    const int code = body(buffer);
    out << buffer.str();
    return code;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

} // namespace

std::string space_name(Space s) {
  for (const auto& [name, value] : kSpaces) {
    if (value == s) return name;
  }
  return "?";
}

int cmd_hpoly(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.space == Space::limit) {
    err << "error: the limit space has no closed form; use `table --space limit`\n";
    return kExitUsage;
  }
  if (!genus_ok(c, err)) return kExitUsage;
  return guarded(out, err, [&](std::ostream& buf) {
    BiPoly hp;
    switch (c.space) {
    case Space::smooth: hp = closed_forms::smooth_hp(c.genus); break;
    case Space::base: hp = closed_forms::base_hp(c.genus); break;
    case Space::gieseker: hp = closed_forms::gieseker_hp(c.genus); break;
    case Space::simpson: hp = closed_forms::simpson_hp(c.genus); break;
    case Space::limit: break;
    }
    buf << render_hpoly(space_name(c.space), c.genus, hp, c.format);
    return kExitOk;
  });
}

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.space != Space::limit && c.space != Space::gieseker && c.space != Space::simpson) {
    err << fmt::format("error: no mixed table for {}; use `hpoly` for pure spaces\n", space_name(c.space));
    return kExitUsage;
  }
  if (!genus_ok(c, err)) return kExitUsage;
  return guarded(out, err, [&](std::ostream& buf) {
    MixedTable t;
    switch (c.space) {
    case Space::limit: t = degeneration::limit_mixed_table(c.genus); break;
    case Space::gieseker: t = degeneration::gieseker_mixed_table(c.genus); break;
    default: t = degeneration::simpson_mixed_table(c.genus); break;
    }
    buf << render_table(space_name(c.space), c.genus, t, c.format);
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err, const mumford::ZetaRecursion& recursion) {
  if (!genus_ok(c, err)) return kExitUsage;
  return guarded(out, err, [&](std::ostream& buf) {
    VerifyOptions o;
    o.genus = c.genus;
    o.max_degree = c.max_degree_override;
    o.seed = c.seed;
    o.recursion = recursion;
    const VerifyReport report = run_verify(o);
    buf << report.to_string();
    return report.passed() ? kExitOk : kExitInternal;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hodge numbers of rank 2 moduli spaces over a nodal curve"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* sub, bool with_space) {
    if (with_space) {
      sub->add_option("--space", config.space, "smooth, base, gieseker, simpson or limit")
          ->required()
          ->transform(CLI::CheckedTransformer(kSpaces, CLI::ignore_case));
    }
    sub->add_option("--genus", config.genus, "genus of the nodal curve")->required();
    sub->add_option("--format", config.format, "json, csv, markdown or text")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--max-degree-override", config.max_degree_override, "skip checks above this degree")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", config.seed, "seed for randomized checks");
    sub->add_flag("--force", config.force, "allow genus above the default cap");
  };

  auto* hpoly = app.add_subcommand("hpoly", "print a closed-form Hodge-Poincare polynomial");
  add_common(hpoly, true);
  auto* table = app.add_subcommand("table", "export a mixed Hodge table");
  add_common(table, true);
  auto* verify = app.add_subcommand("verify", "run the consistency checks for one genus");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (hpoly->parsed()) return cmd_hpoly(config, out, err);
  if (table->parsed()) return cmd_table(config, out, err);
  return cmd_verify(config, out, err);
}

} // namespace nodal_hodge::cli
