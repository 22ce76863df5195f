#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "finring/construct.hpp"

namespace finring {

/// Parses one construction expression.  Grammar:
///
///   expr    := zn | "M" INT "(" expr ")" | "T" INT "(" expr ")"
///            | "K" "(" expr "," INT ")"
///            | "prod" "(" expr { "," expr } ")"
///            | "quot" "(" expr "," "{" [ INT { "," INT } ] "}" ")"
///            | "corner" "(" expr "," INT ")"
///            | "GR" "(" expr "," group ")"
///   zn      := "Z" INT
///   group   := "C" INT | "C2xC2" | "S3" | "D4" | "Q8" | "@" FILEPATH
///
/// M2, T3, Z4 are written without spaces between the letter and the
/// number.  Throws ParseError with a byte offset and expected tokens.
ConstructionAst parse_ring_expr(std::string_view text);

/// Splits a catalog manifest: one expression per line, '#' comments.
std::vector<std::string> parse_catalog_text(std::string_view text);

/// Convenience: parse then eval.
BuiltRing build_from_expr(std::string_view text);

}  // namespace finring
