#pragma once

#include <optional>
#include <set>
#include <string>

#include "gl2/ratfunc.hpp"

namespace gl2 {

/// Parses the scalar grammar shared by all text inputs:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-'|'+')* base ('^' uint)?
///   base   := uint | 'i' | 'i' '(' expr ')' | ident | '(' expr ')'
///
/// "3/4" is division, so rational text parses to the expected value; the
/// imaginary unit 'i' may be directly followed by a parenthesised group
/// (the canonical complex rendering "(3/4)+i(1/2)"). Whitespace is free.
///
/// If `allowed_vars` is given, any other identifier raises
/// std::invalid_argument (unknown variable).
RatFunc parse_scalar(const std::string& text,
                     const std::optional<std::set<std::string>>& allowed_vars = std::nullopt);

/// parse_scalar restricted to constants (no variables at all).
GaussRational parse_gauss(const std::string& text);

}  // namespace gl2
