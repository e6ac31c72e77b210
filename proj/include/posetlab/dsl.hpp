#pragma once

#include <string>
#include <string_view>

#include "posetlab/ladder.hpp"

namespace posetlab {

// poset := "poset" IDENT "{" section* "}"
// section := "base" IDENT+ ";" | "ladder" IDENT+ ";"
//          | "order" "{" (IDENT "<" IDENT ";")* "}" | "rel" "{" (relstmt ";")* "}"
// relstmt := IDENT "<=" IDENT ("from" NAT | "upto" NAT | "always" | "shift" INT | "tail" NAT)
// '#' starts a comment that runs to the end of the line.
RawPresentation parse_presentation(std::string_view text);
LadderPresentation parse_and_validate(std::string_view text);

std::string print_presentation(const RawPresentation& raw);

// Hasse diagram of the truncation at the given depth.
std::string export_dot(const LadderPresentation& p, Index depth = 4);

}  // namespace posetlab
