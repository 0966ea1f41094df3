#pragma once

#include "sitcalc/diagnostic.hpp"
#include "sitcalc/world.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace sitcalc {

// World files (.world) share the statement-language lexer:
//
//   instances a, b, c;
//   situations s0, s1;
//   rel fragile(a, s0);        one table row per line
//   fun drop(a, b);
//
// `situations` must list s0 first; table rows may only mention declared
// instance/situation names (checked here, reported as E010).

struct WorldParseResult {
    std::optional<World> world;
    std::vector<Diagnostic> diagnostics;
};

WorldParseResult parse_world(std::string_view source, std::string name = "<world>");

} // namespace sitcalc
