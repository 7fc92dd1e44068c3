#include "bquant/description.hpp"

#include "bquant/errors.hpp"
#include "bquant/lattice.hpp"
#include "bquant/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bquant {

namespace {

using namespace io;

std::size_t read_index(const json& j, const std::string& path) {
  const Integer z = read_integer(j, path);
  if (z < 0) throw semantic(path, "negative index");
  return z.convert_to<std::size_t>();
}

Index read_rank(const json& j) {
  const Integer rank = read_integer(j, "/rank");
  if (rank < 0 || rank > 64) throw semantic("/rank", "rank out of range");
  return rank.convert_to<Index>();
}

CompactToricSpace read_compact(const json& j) {
  require_fields(j, "", {"schema", "kind", "rank", "polytope"});
  CompactToricSpace m;
  m.rank = read_rank(j["rank"]);
  m.polytope = read_polyhedron(j["polytope"], "/polytope", m.rank);
  return m;
}

BSpaceDescription read_b_toric(const json& j) {
  require_fields(j, "", {"schema", "kind", "rank", "components", "hypersurfaces"});
  BSpaceDescription d;
  d.rank = read_rank(j["rank"]);
  if (d.rank < 1) throw semantic("/rank", "b-toric descriptions need rank >= 1");

  const json& components = j["components"];
  if (!components.is_array()) throw semantic("/components", "expected an array");
  for (std::size_t k = 0; k < components.size(); ++k) {
    const std::string path = "/components/" + std::to_string(k);
    require_fields(components[k], path, {"sign", "polyhedron"});
    const Integer sign = read_integer(components[k]["sign"], path + "/sign");
    if (sign != 1 && sign != -1) throw semantic(path + "/sign", "sign must be 1 or -1");
    d.components.push_back({sign.convert_to<int>(), read_polyhedron(components[k]["polyhedron"], path + "/polyhedron", d.rank)});
  }

  const json& hypersurfaces = j["hypersurfaces"];
  if (!hypersurfaces.is_array()) throw semantic("/hypersurfaces", "expected an array");
  for (std::size_t k = 0; k < hypersurfaces.size(); ++k) {
    const std::string path = "/hypersurfaces/" + std::to_string(k);
    const json& h = hypersurfaces[k];
    require_fields(h, path, {"modular_weight", "splitting", "leaf", "adjacent"});
    HypersurfaceRecord record;
    record.modular_weight = read_int_vector(h["modular_weight"], path + "/modular_weight", d.rank);
    record.splitting = read_int_vector(h["splitting"], path + "/splitting", d.rank);
    record.leaf = read_polyhedron(h["leaf"], path + "/leaf", d.rank - 1);
    const json& adjacent = h["adjacent"];
    if (!adjacent.is_array() || adjacent.size() != 2)
      throw semantic(path + "/adjacent", "expected [positive_side, negative_side]");
    record.positive_side = read_index(adjacent[0], path + "/adjacent/0");
    record.negative_side = read_index(adjacent[1], path + "/adjacent/1");
    for (std::size_t side : {record.positive_side, record.negative_side}) {
      if (side >= d.components.size())
        throw semantic(path + "/adjacent", "component index " + std::to_string(side) + " out of range");
    }
    d.hypersurfaces.push_back(std::move(record));
  }
  return d;
}

}  // namespace

Description parse_description(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what(),
                     line, column);
  }
  if (!j.is_object()) throw semantic("", "expected a JSON object");
  if (!j.contains("schema") || j["schema"] != "bquant/1")
    throw semantic("/schema", "expected \"bquant/1\"");
  if (!j.contains("kind") || !j["kind"].is_string()) throw semantic("/kind", "missing kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "compact_toric") return read_compact(j);
  if (kind == "b_toric") return read_b_toric(j);
  throw semantic("/kind", "unknown kind \"" + kind + "\"");
}

Description load_description(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_description(buffer.str());
}

IntVector normalize_splitting(const IntVector& v, const IntVector& x) {
  if (v.size() != x.size()) throw DimensionError("normalize_splitting: length mismatch");
  if (v.dot(x) != 1)
    throw PairingNotOne("<v, X> = " + Integer(v.dot(x)).str() + " for v = " + to_string(v) + ", X = " + to_string(x));
  const IntMatrix kernel = integer_kernel_basis(v);
  IntVector out = x;
  for (Index k = 0; k < kernel.rows(); ++k) {
    Index pivot = 0;
    while (kernel(k, pivot) == 0) ++pivot;
    const Integer h = kernel(k, pivot);
    Integer q = out(pivot) / h;
    if (out(pivot) % h != 0 && out(pivot) < 0) q -= 1;
    if (q != 0) out -= q * IntVector(kernel.row(k).transpose());
  }
  return out;
}

IntMatrix leaf_basis(const IntVector& splitting) { return integer_kernel_basis(splitting).transpose(); }

std::string MappingTorus::describe() const {
  if (leaf.rank() == 0) return "S^1 x {pt}";
  return "S^1 x (toric space of " + to_string(leaf) + ")";
}

MappingTorus mapping_torus(const HypersurfaceRecord& h) {
  const Index leaf_rank = h.leaf.rank();
  return {h.splitting, h.leaf, IntMatrix::Identity(leaf_rank, leaf_rank)};
}

Integer tail_threshold(const BSpaceDescription& d, std::size_t hypersurface) {
  if (hypersurface >= d.hypersurfaces.size())
    throw IndexOutOfRange("hypersurface index " + std::to_string(hypersurface) + " out of range (" +
                          std::to_string(d.hypersurfaces.size()) + " hypersurfaces)");
  const auto& h = d.hypersurfaces[hypersurface];
  const RatVector x = h.splitting.cast<Rational>();
  Rational extent(0);
  for (std::size_t j : {h.positive_side, h.negative_side}) {
    for (const auto& p : generators(d.components.at(j).polyhedron).points)
      extent = std::max(extent, Rational(mp::abs(p.dot(x))));
  }
  return ceil(extent) + 1;
}

LatticePolyhedron tail_region(const LatticePolyhedron& p, const IntVector& splitting, const Integer& threshold) {
  if (content(splitting) == 0) throw DimensionError("tail_region: zero splitting vector");
  return intersect(p, LatticePolyhedron::half_space(splitting, Rational(-threshold)));
}

}  // namespace bquant
