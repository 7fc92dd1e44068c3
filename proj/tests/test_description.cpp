#include <doctest.h>

#include <bquant/description.hpp>
#include <bquant/errors.hpp>
#include <bquant/lattice.hpp>

#include "corpus.hpp"

#include <random>

using namespace bquant;

TEST_CASE("every corpus file parses") {
  for (const auto& f : corpus::files()) {
    CAPTURE(f.string());
    CHECK_NOTHROW(load_description(f));
  }
}

TEST_CASE("compact and b-toric documents") {
  const auto d = parse_description(corpus::interval(0, 3).dump());
  REQUIRE(std::holds_alternative<CompactToricSpace>(d));
  CHECK(rank_of(d) == 1);

  const auto b = parse_description(corpus::b_sphere(2, -1).dump());
  REQUIRE(std::holds_alternative<BSpaceDescription>(b));
  const auto& bs = std::get<BSpaceDescription>(b);
  CHECK(bs.components.size() == 2);
  CHECK(bs.components[1].sign == -1);
  CHECK(bs.hypersurfaces[0].leaf.rank() == 0);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_description("{\n  \"schema\": \"bquant/1\",\n  oops\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 3);
  }
  CHECK_THROWS_AS(load_description(corpus::invalid_dir() / "malformed.json"), ParseError);
  CHECK_THROWS_AS(load_description(corpus::dir() / "missing.json"), IoError);
}

TEST_CASE("semantic errors") {
  auto doc = corpus::b_sphere(2, -1);
  auto bad = doc;
  bad["schema"] = "bquant/2";
  CHECK_THROWS_AS(parse_description(bad.dump()), ParseError);
  bad = doc;
  bad["extra"] = 1;
  CHECK_THROWS_AS(parse_description(bad.dump()), ParseError);
  bad = doc;
  bad["components"][0]["sign"] = 2;
  CHECK_THROWS_AS(parse_description(bad.dump()), ParseError);
  bad = doc;
  bad["hypersurfaces"][0]["adjacent"] = {0, 5};
  CHECK_THROWS_AS(parse_description(bad.dump()), ParseError);
  bad = doc;
  bad["hypersurfaces"][0]["leaf"]["rank"] = 1;
  CHECK_THROWS_AS(parse_description(bad.dump()), ParseError);
  bad = doc;
  bad["components"][0]["polyhedron"]["inequalities"][0]["normal"] = {0};
  CHECK_THROWS_AS(parse_description(bad.dump()), ParseError);
  bad = doc;
  bad["components"][0]["polyhedron"]["inequalities"][0]["bound"] = 2.5;
  CHECK_THROWS_AS(parse_description(bad.dump()), ParseError);
  bad = doc;
  bad["components"][0]["polyhedron"]["inequalities"][0]["bound"] = "5/2";
  CHECK_NOTHROW(parse_description(bad.dump()));
  bad = doc;
  bad["rank"] = 0;
  CHECK_THROWS_AS(parse_description(bad.dump()), ParseError);
}

TEST_CASE("normalized splitting") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(-5, 5);
  int tested = 0;
  for (int trial = 0; trial < 20000 && tested < 80; ++trial) {
    const IntVector v = vector_of<Integer>({d(rng), d(rng), d(rng)});
    const IntVector x = vector_of<Integer>({d(rng), d(rng), d(rng)});
    if (v.dot(x) != 1) continue;
    ++tested;
    const IntVector y = normalize_splitting(v, x);
    CHECK(v.dot(y) == 1);
    // y - x lies in the kernel lattice of v
    const IntVector diff = y - x;
    CHECK(v.dot(diff) == 0);
    CHECK(equal(normalize_splitting(v, y), y));
    // adding a kernel vector does not change the representative
    const IntMatrix k = integer_kernel_basis(v);
    const IntVector moved = x + IntVector(3 * k.row(0).transpose());
    CHECK(equal(normalize_splitting(v, moved), y));
  }
  CHECK(tested > 10);
  CHECK_THROWS_AS(normalize_splitting(vector_of<Integer>({2}), vector_of<Integer>({1})), PairingNotOne);
}

TEST_CASE("leaf basis") {
  const IntMatrix b = leaf_basis(vector_of<Integer>({1, 0}));
  REQUIRE(b.cols() == 1);
  CHECK(equal(IntVector(b.col(0)), vector_of<Integer>({0, 1})));
  const IntMatrix t = leaf_basis(vector_of<Integer>({2, 3, 5}));
  CHECK(t.cols() == 2);
  for (Index c = 0; c < t.cols(); ++c) CHECK(vector_of<Integer>({2, 3, 5}).dot(t.col(c)) == 0);
}

TEST_CASE("mapping torus") {
  const auto d = std::get<BSpaceDescription>(corpus::parse(corpus::b_sphere(2, -1)));
  const auto m = mapping_torus(d.hypersurfaces[0]);
  CHECK(m.describe() == "S^1 x {pt}");
  CHECK(m.monodromy.rows() == 0);
  const auto d2 = std::get<BSpaceDescription>(corpus::parse(corpus::b_sphere_x_interval(2, -1, 3)));
  const auto m2 = mapping_torus(d2.hypersurfaces[0]);
  CHECK(m2.monodromy == IntMatrix::Identity(1, 1));
  CHECK(m2.describe().rfind("S^1 x (toric space of", 0) == 0);
}

TEST_CASE("tail threshold and region") {
  const auto d = std::get<BSpaceDescription>(corpus::parse(corpus::b_sphere(2, -1)));
  CHECK(tail_threshold(d, 0) == 3);
  CHECK_THROWS_AS(tail_threshold(d, 1), IndexOutOfRange);
  const auto tail = tail_region(d.components[0].polyhedron, d.hypersurfaces[0].splitting, Integer(3));
  CHECK(tail.contains(Weight{-3}));
  CHECK_FALSE(tail.contains(Weight{-2}));
}

TEST_CASE("canonical splitting examples") {
  CHECK(equal(normalize_splitting(vector_of<Integer>({1}), vector_of<Integer>({1})), vector_of<Integer>({1})));
  CHECK(equal(normalize_splitting(vector_of<Integer>({1, 0}), vector_of<Integer>({1, 7})), vector_of<Integer>({1, 0})));
  // representatives (1, 0) + t (2, -1) all reduce to the same vector
  const IntVector canonical = normalize_splitting(vector_of<Integer>({1, 2}), vector_of<Integer>({1, 0}));
  for (long t = -3; t <= 3; ++t) {
    const IntVector x = vector_of<Integer>({1 + 2 * t, -t});
    CHECK(equal(normalize_splitting(vector_of<Integer>({1, 2}), x), canonical));
  }
  CHECK(equal(canonical, vector_of<Integer>({1, 0})));
}
