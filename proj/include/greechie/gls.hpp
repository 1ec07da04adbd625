#pragma once

// Reader and writer for the line-oriented .gls logic format:
//
//   # comment
//   dim 3
//   atom A 1 r2 -1          # label followed by `dim` components, or nothing
//   context a A B C         # label followed by member atom labels
//
// component := term (('+'|'-') term)?
// term      := rational 'r2'? | 'r2'
// rational  := '-'? integer ('/' positive-integer)?

#include "greechie/logic.hpp"
#include "greechie/quad.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace greechie {

/// Parses and validates a document. Throws ParseError carrying a 1-based
/// line and column.
Logic parse_logic(std::string_view text);

/// Reads a file and parses it. Throws Error if the file cannot be read.
Logic load_logic(const std::filesystem::path& path);

/// Canonical text: atoms sorted by label, contexts in declared order,
/// components as canonical tokens, LF line endings.
std::string serialize_logic(const Logic& logic);

/// Parses a single component token. Throws ParseError positioned on line 1.
Quad parse_component(std::string_view token);

}  // namespace greechie
