#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sparking/graphs.hpp"
#include "sparking/matroid.hpp"
#include "sparking/set_system.hpp"

namespace sparking {

/// Set-system text format:
///
///     k m
///     [weights w_1 .. w_m]
///     <k lines of element ids>
///
/// Elements are 1..m. A blank line or a lone `-` is an empty set; lines
/// starting with `#` are skipped. Input starting with `{` is read as the
/// JSON mirror `{"sets": [[...]], "weights": {"id": w}, "universe_size": m}`.
SetSystem parse_set_system(std::string_view text);

/// `ground n r`, then one basis per line over elements 1..n.
Matroid parse_matroid(std::string_view text);

/// `vertices n+1`, then one `id u v` line per edge.
Multigraph parse_graph(std::string_view text);

/// One set per line; `-` is an empty set; `#` lines and blank lines skipped.
std::vector<std::vector<ElementId>> parse_set_list(std::string_view text);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace sparking
