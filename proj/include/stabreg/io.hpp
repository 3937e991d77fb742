#pragma once

#include "stabreg/graph.hpp"

#include <filesystem>
#include <iosfwd>

namespace stabreg {

/// Edge-list text: a header line "n <count>", then one "u v" pair per line,
/// 0-indexed. Blank lines are skipped. Loops, out-of-range vertices and
/// n = 0 are rejected with InputError.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

/// Canonical form: header, then unordered edges u < v in increasing order.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace stabreg
