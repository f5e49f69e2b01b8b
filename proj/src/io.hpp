#pragma once

// Hypergraph text format:
//
//   # comment lines start with '#'
//   n r g            g is "cgh" or "abstract"
//   v1 v2 ... vr     one edge per line, ascending
//
// to_text() writes the header followed by the edges in lexicographic order,
// so equal hypergraphs always produce identical bytes.

#include <string>
#include <string_view>

#include <json.hpp>

#include "core.hpp"

namespace tightpath {

Hypergraph parse_hypergraph(std::string_view text);
std::string to_text(const Hypergraph& h);

Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_file(const Hypergraph& h, const std::string& path);

nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

}  // namespace tightpath
