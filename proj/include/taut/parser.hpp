#pragma once

#include <string_view>

#include "taut/element.hpp"

namespace taut {

/// Parses the expression grammar
///
///   expr   := ["-"] term { ("+" | "-") term }
///   term   := factor { "*" factor }
///   factor := primary [ "^" int ]
///   primary:= int [ "/" int ] | gen | "(" expr ")"
///   gen    := a_i | b_{j,k} | d_{j,k} | E_{i,...} | E0 | D_{i,...} | psi_i
///
/// and validates every generator against the ambient marking count n
/// (n >= 2). psi_i expands to the boundary sum over D_I with i in I.
/// Throws ParseError or IndexError.
Element parse_expression(std::string_view text, int ambient_n);

}  // namespace taut
