#pragma once

#include "nodal_hodge/polynomial.hpp"
#include "nodal_hodge/tables.hpp"

#include <string>

namespace nodal_hodge {

enum class Format { json, csv, markdown, text };

/// Parses "json", "csv", "markdown" or "text"; throws std::invalid_argument.
Format parse_format(const std::string& s);

/// Closed-form output. Every rendering ends with a newline.
std::string render_hpoly(const std::string& space, int genus, const BiPoly& hp, Format format);

/// {"space", "genus", "entries": [{n, w, p, q, dim}]} sorted by (n, w, p, q);
/// CSV with header n,w,p,q,dim; markdown (n, w) grid; text one line per entry.
std::string render_table(const std::string& space, int genus, const MixedTable& table, Format format);

} // namespace nodal_hodge
