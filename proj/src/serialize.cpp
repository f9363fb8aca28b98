#include "nodal_hodge/serialize.hpp"

#include <fmt/core.h>
#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodal_hodge {

namespace {

using nlohmann::ordered_json;

std::string markdown_grid(const std::string& corner, int rows, int cols, const auto& cell) {
  std::string out = "| " + corner + " |";
  for (int c = 0; c < cols; ++c) out += fmt::format(" {} |", c);
  out += "\n|---|";
  for (int c = 0; c < cols; ++c) out += "---|";
  out += "\n";
  for (int r = 0; r < rows; ++r) {
    out += fmt::format("| {} |", r);
    for (int c = 0; c < cols; ++c) out += fmt::format(" {} |", cell(r, c));
    out += "\n";
  }
  return out;
}

} // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "markdown") return Format::markdown;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + s);
}

std::string render_hpoly(const std::string& space, int genus, const BiPoly& hp, Format format) {
  const UniPoly diag = diagonal(hp);
  switch (format) {
  case Format::json: {
    ordered_json j;
    j["space"] = space;
    j["genus"] = genus;
    j["hp"] = hp.to_string();
    j["diagonal"] = diag.to_string();
    j["terms"] = ordered_json::array();
    for (const auto& [e, c] : hp.terms()) {
      j["terms"].push_back({{"p", e.p}, {"q", e.q}, {"coeff", c.to_string()}});
    }
    return j.dump(2) + "\n";
  }
  case Format::csv: {
    std::string out = "p,q,coeff\n";
    for (const auto& [e, c] : hp.terms()) out += fmt::format("{},{},{}\n", e.p, e.q, c.to_string());
    return out;
  }
  case Format::markdown: {
    const int size = std::max(hp.total_degree() + 1, 1);
    return markdown_grid("p \\ q", size, size, [&](int p, int q) { return hp.coefficient(p, q).to_string(); });
  }
  case Format::text:
    return fmt::format("hp: {}\ndiagonal: {}\n", hp.to_string(), diag.to_string());
  }
  throw std::logic_error("render_hpoly: bad format");
}

std::string render_table(const std::string& space, int genus, const MixedTable& table, Format format) {
  switch (format) {
  case Format::json: {
    ordered_json j;
    j["space"] = space;
    j["genus"] = genus;
    j["entries"] = ordered_json::array();
    for (const auto& [k, d] : table.entries()) {
      j["entries"].push_back({{"n", k.n}, {"w", k.w}, {"p", k.p}, {"q", k.q}, {"dim", d}});
    }
    return j.dump(2) + "\n";
  }
  case Format::csv: {
    std::string out = "n,w,p,q,dim\n";
    for (const auto& [k, d] : table.entries()) out += fmt::format("{},{},{},{},{}\n", k.n, k.w, k.p, k.q, d);
    return out;
  }
  case Format::markdown: {
    const WeightedDims m = table.marginals();
    int top_n = 0;
    int top_w = 0;
    for (const auto& [nw, d] : m.entries()) {
      top_n = std::max(top_n, nw.first);
      top_w = std::max(top_w, nw.second);
    }
    return markdown_grid("n \\ w", top_n + 1, top_w + 1, [&](int n, int w) { return m.get(n, w); });
  }
  case Format::text: {
    std::string out;
    for (const auto& [k, d] : table.entries()) {
      out += fmt::format("H^{} Gr^W_{} h^{{{},{}}} = {}\n", k.n, k.w, k.p, k.q, d);
    }
    return out;
  }
  }
  throw std::logic_error("render_table: bad format");
}

} // namespace nodal_hodge
