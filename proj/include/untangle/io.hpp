#pragma once

#include <string>
#include <string_view>

#include "untangle/drawing.hpp"
#include "untangle/reductions.hpp"

namespace untangle {

/// Parses a drawing file. Vertex indices follow the `order` line.
/// Throws ParseError (with the offending line number).
CircularDrawing parse_drawing(std::string_view text);
/// Canonical form: optional comment lines, `vertices`, `order`, then edges
/// sorted by the positions of their endpoints.
std::string serialize_drawing(const CircularDrawing& d, std::string_view comment = {});

/// `move <v> after <u>` lines; names are resolved against `g`. Throws ParseError.
Untangling parse_moves(std::string_view text, const Graph& g);
/// Moves followed by a `# moved=<k> fixed=<a,b,...>` summary (fixed vertices
/// in drawing order).
std::string serialize_moves(const CircularDrawing& d, const Untangling& u);

/// `3p m K a_1 ... a_3m`. Throws ParseError.
ThreePartitionInstance parse_3p(std::string_view text);
std::string serialize_3p(const ThreePartitionInstance& inst);

/// `icor M` followed by `chunk <ranks...>` lines. Throws ParseError.
DistIcorInstance parse_icor(std::string_view text);
std::string serialize_icor(const DistIcorInstance& inst);

/// Reads a whole file. Throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace untangle
