#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "permkit/perm.hpp"

namespace permkit {

/// Parses cycle notation such as "(0 1 2)(3 4)" or "(0,1,2)".
///
///   text   := ws cycle (ws cycle)* ws | ws "()" ws
///   cycle  := "(" ws point (sep point)* ws ")"
///   sep    := ws | ws "," ws
///   point  := decimal digits
///
/// "()" denotes the identity and must stand alone. Throws ParseError on
/// text that does not match and MalformedCycle if a cycle repeats a point.
Perm parse_cycles(std::string_view text);

/// Canonical cycle notation: "()" for the identity, otherwise the cycles()
/// decomposition with points separated by single spaces, e.g. "(0 1 2)(3 4)".
/// parse_cycles(to_cycle_text(p)) == p for every p.
std::string to_cycle_text(const Perm& p);

std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace permkit
