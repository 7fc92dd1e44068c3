#include "bquant/serialize.hpp"

#include <limits>

namespace bquant {

namespace {

nlohmann::ordered_json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

nlohmann::ordered_json vector_json(const IntVector& v) {
  auto out = nlohmann::ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(integer_json(v(i)));
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const VirtualCharacter& c) {
  nlohmann::ordered_json j;
  j["rank"] = c.rank();
  j["multiplicities"] = nlohmann::ordered_json::array();
  for (const auto& [w, m] : c.multiplicities()) {
    nlohmann::ordered_json entry;
    entry["weight"] = vector_json(w.coords());
    entry["mult"] = integer_json(m);
    j["multiplicities"].push_back(std::move(entry));
  }
  return j;
}

VirtualCharacter character_from_json(const nlohmann::json& j) {
  io::require_fields(j, "", {"rank", "multiplicities"});
  const Integer rank = io::read_integer(j["rank"], "/rank");
  if (rank < 0) throw io::semantic("/rank", "negative rank");
  const Index n = rank.convert_to<Index>();
  const auto& rows = j["multiplicities"];
  if (!rows.is_array()) throw io::semantic("/multiplicities", "expected an array");
  VirtualCharacter c(n);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string path = "/multiplicities/" + std::to_string(k);
    io::require_fields(rows[k], path, {"weight", "mult"});
    c.accumulate(Weight(io::read_int_vector(rows[k]["weight"], path + "/weight", n)),
                 io::read_integer(rows[k]["mult"], path + "/mult"));
  }
  return c;
}

nlohmann::ordered_json to_json(const LatticePolyhedron& p) {
  nlohmann::ordered_json j;
  j["rank"] = p.rank();
  j["inequalities"] = nlohmann::ordered_json::array();
  for (const auto& row : p.inequalities()) {
    nlohmann::ordered_json entry;
    entry["normal"] = vector_json(row.normal);
    entry["bound"] = to_string(row.bound);
    j["inequalities"].push_back(std::move(entry));
  }
  return j;
}

std::string to_table(const VirtualCharacter& c) {
  std::string out = "weight | multiplicity\n";
  for (const auto& [w, m] : c.multiplicities()) out += w.to_string() + " | " + m.str() + "\n";
  return out;
}

std::string summary_line(const VirtualCharacter& c) {
  return "dim = " + dimension(c).str() + ", support size = " + std::to_string(c.support_size());
}

namespace io {

ParseError semantic(const std::string& path, const std::string& what) {
  return ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

void require_fields(const json& j, const std::string& path, const std::set<std::string>& required,
                    const std::set<std::string>& optional) {
  if (!j.is_object()) throw semantic(path, "expected an object");
  for (const auto& item : j.items()) {
    if (!required.count(item.key()) && !optional.count(item.key()))
      throw semantic(path, "unknown field \"" + item.key() + "\"");
  }
  for (const auto& key : required)
    if (!j.contains(key)) throw semantic(path, "missing field \"" + key + "\"");
}

Integer read_integer(const json& j, const std::string& path) {
  if (j.is_number_float()) throw semantic(path, "non-exact numeric literal " + j.dump());
  if (j.is_number_integer() || j.is_number_unsigned()) return Integer(j.dump());
  if (j.is_string()) {
    Rational q;
    try {
      q = parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw semantic(path, e.what());
    }
    if (!is_integer(q)) throw semantic(path, "expected an integer, got " + j.dump());
    return mp::numerator(q);
  }
  throw semantic(path, "expected an integer, got " + j.dump());
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_float()) throw semantic(path, "non-exact numeric literal " + j.dump());
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw semantic(path, e.what());
    }
  }
  throw semantic(path, "expected an exact rational, got " + j.dump());
}

IntVector read_int_vector(const json& j, const std::string& path, Index expected_length) {
  if (!j.is_array()) throw semantic(path, "expected an array of integers");
  if (static_cast<Index>(j.size()) != expected_length)
    throw semantic(path, "expected length " + std::to_string(expected_length) + ", got " + std::to_string(j.size()));
  IntVector v(expected_length);
  for (Index i = 0; i < expected_length; ++i)
    v(i) = read_integer(j[static_cast<std::size_t>(i)], path + "/" + std::to_string(i));
  return v;
}

LatticePolyhedron read_polyhedron(const json& j, const std::string& path, Index expected_rank) {
  require_fields(j, path, {"rank", "inequalities"});
  const Integer rank = read_integer(j["rank"], path + "/rank");
  if (rank != expected_rank)
    throw semantic(path + "/rank", "expected rank " + std::to_string(expected_rank) + ", got " + rank.str());
  const json& rows = j["inequalities"];
  if (!rows.is_array()) throw semantic(path + "/inequalities", "expected an array");
  std::vector<Inequality> inequalities;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string row_path = path + "/inequalities/" + std::to_string(k);
    require_fields(rows[k], row_path, {"normal", "bound"});
    inequalities.push_back({read_int_vector(rows[k]["normal"], row_path + "/normal", expected_rank),
                            read_rational(rows[k]["bound"], row_path + "/bound")});
  }
  try {
    return LatticePolyhedron(expected_rank, std::move(inequalities));
  } catch (const InvalidPolyhedron& e) {
    throw semantic(path, e.what());
  }
}

}  // namespace io

}  // namespace bquant
