#pragma once

#include "abideal/fibers.hpp"
#include "abideal/ideals.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace abideal {

using nlohmann::json;

/// Coordinate string over the simple roots: compact digits ("2431") when all
/// coordinates are single digits and the rank is at most 9, otherwise a
/// comma-separated "(c1,c2,...)".
std::string coord_string(const RootSystem& rs, const Root& x);

/// Classical label when one exists: "(i,j)" in type A, epsilon form
/// ("e1-e2", "2e3", "e4") in types B/C/D; falls back to coord_string.
std::string root_label(const RootSystem& rs, const Root& x);

enum class RootParse { Auto, Coords, Label };

/// Accepts coordinate digits ("2431", "(2 4 3 1)", "2,4,3,1") and classical
/// labels; throws std::invalid_argument when nothing parses (or when both
/// parse differently under Auto).
Root parse_root(const RootSystem& rs, const std::string& text,
                RootParse mode = RootParse::Auto);

WeylWord parse_word(const std::string& text);  // "s2 s3 s4 s0"

json poset_json(const RootSystem& rs, const IdealPoset& poset);
/// Rebuilds (roots, word) pairs from poset_json output; throws on schema or
/// content mismatch against rs.
IdealPoset poset_from_json(const RootSystem& rs, const json& j);

json fiber_json(const RootSystem& rs, const IdealPoset& poset, const FiberReport& report);

/// DOT rendering: one node per ideal labeled "dim|rootlet", cover edges
/// pointing upward.
std::string poset_dot(const RootSystem& rs, const IdealPoset& poset);

std::string enumerate_text(const RootSystem& rs, const IdealPoset& poset);
std::string fiber_text(const RootSystem& rs, const IdealPoset& poset, const FiberReport& report);
std::string hasse_text(const RootSystem& rs, const IdealPoset& poset);

/// Type-dependent reference tables: the F4 ideal table, the E-series fiber
/// histograms and membership classes, the type A fiber-size triangle, the G2
/// list. Deterministic, suitable for golden-file tests.
std::string tables_text(const RootSystem& rs, const IdealPoset& poset, const FiberAnalysis& fa);

}  // namespace abideal
