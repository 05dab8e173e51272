#pragma once

#include <string>
#include <string_view>

#include "homeo/map.hpp"

namespace homeo {

// Expression grammar for plane homeomorphisms (whitespace-insensitive):
//
//   expr    := atom { "." atom }            "." composes, right operand first
//   atom    := base [ "^-1" ]
//   base    := "id" | "conj"
//            | "translate(" complex ")"
//            | "rotate(" real ")"
//            | "scale(" real ")"
//            | "bump(center=" complex ",rho=" real ",delta=" real ",eta=" real ")"
//            | "planebump(center=" complex ",rho=" real ",delta=" real ",eta=" real ")"
//            | "(" expr ")"
//   complex := real [ ("+" | "-") real "i" ]
//
// bump(...) is the radial bump acting directly on the plane (identity
// chart); planebump(...) is the same bump acting inside the unit disk and
// transported to the plane through the radial stretch.

/// Parses an expression. Throws ParseError (with byte offset) on syntax
/// errors and DomainError on invalid parameters (scale <= 0, bump
/// constraints violated).
Homeo parse_expr(std::string_view text);

/// Canonical text form; parse_expr(print_expr(h)) reproduces the tree
/// structurally for every parseable h. Trees with no grammar form (disk
/// transports of composite disk maps, bumps with a nonidentity chart) are
/// printed as equivalent compositions of printable atoms.
std::string print_expr(const Homeo& h);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double x);

/// Complex literal in grammar form ("1.5", "0+1i", "2-0.25i").
std::string format_complex(Complex z);

} // namespace homeo
