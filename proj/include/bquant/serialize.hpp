#pragma once

// JSON and plain-text forms of characters, polyhedra and check reports.
// Output is deterministic: keys appear in a fixed order and weights are
// sorted lexicographically.

#include "bquant/character.hpp"
#include "bquant/errors.hpp"
#include "bquant/polyhedron.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace bquant {

/// {"rank": n, "multiplicities": [{"weight": [...], "mult": m}, ...]}.
/// Multiplicities beyond 64 bits are written as decimal strings.
nlohmann::ordered_json to_json(const VirtualCharacter& c);
/// Throws ParseError.
VirtualCharacter character_from_json(const nlohmann::json& j);

/// {"rank": n, "inequalities": [{"normal": [...], "bound": "p/q"}, ...]}
nlohmann::ordered_json to_json(const LatticePolyhedron& p);

/// "weight | multiplicity" followed by one row per support weight.
std::string to_table(const VirtualCharacter& c);
/// "dim = <signed dimension>, support size = <count>"
std::string summary_line(const VirtualCharacter& c);

namespace io {

using nlohmann::json;

ParseError semantic(const std::string& path, const std::string& what);
void require_fields(const json& j, const std::string& path, const std::set<std::string>& required,
                    const std::set<std::string>& optional = {});
Integer read_integer(const json& j, const std::string& path);
Rational read_rational(const json& j, const std::string& path);
IntVector read_int_vector(const json& j, const std::string& path, Index expected_length);
LatticePolyhedron read_polyhedron(const json& j, const std::string& path, Index expected_rank);

}  // namespace io

}  // namespace bquant
