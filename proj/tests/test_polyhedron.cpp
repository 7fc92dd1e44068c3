#include <doctest.h>

#include <bquant/errors.hpp>
#include <bquant/lattice.hpp>
#include <bquant/polyhedron.hpp>

#include "oracles.hpp"

#include <random>

using namespace bquant;

namespace {

struct RandomPolygon {
  LatticePolyhedron poly;
  std::vector<oracle::Row> rows;
};

/// Random inequalities intersected with the box [-6, 6]^n.
RandomPolygon random_polyhedron(std::mt19937& rng, Index n, int extra_rows) {
  std::uniform_int_distribution<int> coef(-3, 3), bound(-4, 8), den(1, 3);
  std::vector<Inequality> rows;
  std::vector<oracle::Row> plain;
  for (Index i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      IntVector e = IntVector::Zero(n);
      e(i) = s;
      rows.push_back({e, Rational(6)});
      oracle::Point pe(n, 0);
      pe[i] = s;
      plain.push_back({pe, 6, 1});
    }
  }
  for (int k = 0; k < extra_rows; ++k) {
    IntVector a(n);
    oracle::Point pa(n);
    for (Index i = 0; i < n; ++i) pa[i] = coef(rng), a(i) = pa[i];
    if (content(a) == 0) continue;
    const long long b = bound(rng), q = den(rng);
    rows.push_back({a, Rational(b, q)});
    plain.push_back({pa, b, q});
  }
  return {LatticePolyhedron(n, rows), plain};
}

std::vector<oracle::Point> as_points(const std::vector<Weight>& ws) {
  std::vector<oracle::Point> out;
  for (const auto& w : ws) {
    oracle::Point p;
    for (Index i = 0; i < w.rank(); ++i) p.push_back(w[i].convert_to<long long>());
    out.push_back(p);
  }
  return out;
}

RatVector rat(std::initializer_list<long> v) { return vector_of<Rational>(v); }

}  // namespace

TEST_CASE("construction rejects malformed rows") {
  CHECK_THROWS_AS(LatticePolyhedron(2, {{vector_of<Integer>({0, 0}), Rational(1)}}), InvalidPolyhedron);
  CHECK_THROWS_AS(LatticePolyhedron(2, {{vector_of<Integer>({1}), Rational(1)}}), InvalidPolyhedron);
}

TEST_CASE("canonical form merges parallel rows and scales normals") {
  const LatticePolyhedron a(1, {{vector_of<Integer>({2}), Rational(5)}, {vector_of<Integer>({1}), Rational(3)}});
  REQUIRE(a.inequalities().size() == 1);
  CHECK(equal(a.inequalities()[0].normal, vector_of<Integer>({1})));
  CHECK(a.inequalities()[0].bound == Rational(5, 2));
  const LatticePolyhedron b(1, {{vector_of<Integer>({1}), Rational(5, 2)}});
  CHECK(a == b);
}

TEST_CASE("contradictory zero rows give the empty set") {
  const auto p = LatticePolyhedron::from_rational(2, {{rat({0, 0}), Rational(-1)}});
  CHECK(p.trivially_empty());
  CHECK(is_empty(p));
  CHECK(lattice_points(p).empty());
  const auto q = LatticePolyhedron::from_rational(2, {{rat({0, 0}), Rational(1)}});
  CHECK(q == LatticePolyhedron::whole_space(2));
}

TEST_CASE("lattice points match brute force on random polyhedra") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const Index n = 1 + trial % 3;
    const auto rp = random_polyhedron(rng, n, 1 + trial % 4);
    std::vector<oracle::Point> expected;
    oracle::for_each_point(oracle::constant(n, -6), oracle::constant(n, 6), [&](const oracle::Point& x) {
      if (oracle::inside(rp.rows, x)) expected.push_back(x);
    });
    const auto got = lattice_points(rp.poly);
    CHECK(as_points(got) == expected);
    CHECK(is_empty(rp.poly) == (dimension(rp.poly) == -1));
    for (const auto& w : got) CHECK(rp.poly.contains(w));
  }
}

TEST_CASE("rank zero") {
  const auto p = LatticePolyhedron::whole_space(0);
  CHECK(lattice_points(p).size() == 1);
  CHECK(is_bounded(p));
  CHECK(vertices(p).size() == 1);
  CHECK(is_delzant(p));
}

TEST_CASE("unbounded input is refused by lattice_points") {
  CHECK_THROWS_AS(lattice_points(LatticePolyhedron::half_space(vector_of<Integer>({1}), Rational(0))),
                  UnboundedPolyhedron);
}

TEST_CASE("vertices and rays of simple shapes") {
  const auto sq = LatticePolyhedron::box(vector_of<Integer>({0, 0}), vector_of<Integer>({1, 1}));
  CHECK(vertices(sq).size() == 4);
  CHECK(recession_rays(sq).empty());
  CHECK(is_bounded(sq));
  CHECK(dimension(sq) == 2);

  const auto half = LatticePolyhedron::half_space(vector_of<Integer>({1, 0}), Rational(2));
  CHECK(vertices(half).empty());
  const auto rays = recession_rays(half);
  // (-1, 0) and the line through (0, 1)
  REQUIRE(rays.size() == 3);
  CHECK(equal(rays[0].direction, vector_of<Integer>({-1, 0})));

  const auto line = LatticePolyhedron::whole_space(1);
  const auto lr = recession_rays(line);
  REQUIRE(lr.size() == 2);
  CHECK(equal(lr[0].direction, vector_of<Integer>({-1})));
  CHECK(equal(lr[1].direction, vector_of<Integer>({1})));

  const auto cone = LatticePolyhedron(2, {{vector_of<Integer>({1, -1}), Rational(0)}, {vector_of<Integer>({-1, 1}), Rational(1)},
                                          {vector_of<Integer>({1, 0}), Rational(2)}});
  const auto cr = recession_rays(cone);
  REQUIRE(cr.size() == 1);
  CHECK(equal(cr[0].direction, vector_of<Integer>({-1, -1})));
  CHECK(vertices(cone).size() == 2);

  CHECK_THROWS_AS(vertices(LatticePolyhedron::from_rational(1, {{rat({0}), Rational(-1)}})), EmptyPolyhedron);
}

TEST_CASE("generators reconstruct the polyhedron") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + trial % 3;
    const auto rp = random_polyhedron(rng, n, 2);
    if (is_empty(rp.poly)) continue;
    const auto g = generators(rp.poly);
    CHECK(g.rays.empty());
    CHECK(g.lineality.empty());
    for (const auto& v : g.points) CHECK(contains_point(rp.poly, v));
  }
}

TEST_CASE("delzant test") {
  const auto triangle = LatticePolyhedron(2, {{vector_of<Integer>({-1, 0}), Rational(0)},
                                              {vector_of<Integer>({0, -1}), Rational(0)},
                                              {vector_of<Integer>({1, 1}), Rational(2)}});
  CHECK(is_delzant(triangle));
  const auto bad = LatticePolyhedron(2, {{vector_of<Integer>({-1, 0}), Rational(0)},
                                         {vector_of<Integer>({0, -1}), Rational(0)},
                                         {vector_of<Integer>({2, 1}), Rational(2)}});
  CHECK_FALSE(is_delzant(bad));
  const auto v = delzant_violation(bad);
  REQUIRE(v);
  CHECK(equal(*v, rat({1, 0})));
  // Four facets through the apex of a square pyramid.
  const auto pyramid = LatticePolyhedron(3, {{vector_of<Integer>({0, 0, -1}), Rational(0)},
                                             {vector_of<Integer>({1, 0, 1}), Rational(1)},
                                             {vector_of<Integer>({-1, 0, 1}), Rational(1)},
                                             {vector_of<Integer>({0, 1, 1}), Rational(1)},
                                             {vector_of<Integer>({0, -1, 1}), Rational(1)}});
  CHECK_FALSE(is_delzant(pyramid));
  const auto point = LatticePolyhedron::box(vector_of<Integer>({0}), vector_of<Integer>({0}));
  CHECK(is_delzant(point));
  CHECK_THROWS_AS(is_delzant(LatticePolyhedron::whole_space(1)), NoVertices);
}

TEST_CASE("lattice polytopes") {
  const LatticePolyhedron p(1, {{vector_of<Integer>({-1}), Rational(0)}, {vector_of<Integer>({1}), Rational(5, 2)}});
  CHECK_FALSE(is_lattice_polytope(p));
  const auto v = non_integral_vertex(p);
  REQUIRE(v);
  CHECK((*v)(0) == Rational(5, 2));
  CHECK_THROWS_AS(is_lattice_polytope(LatticePolyhedron::whole_space(1)), UnboundedPolyhedron);
}

TEST_CASE("products, translates and unimodular images preserve counts") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_polyhedron(rng, 1, 1).poly;
    const auto b = random_polyhedron(rng, 2, 2).poly;
    const auto ab = product(a, b);
    CHECK(ab.rank() == 3);
    CHECK(lattice_points(ab).size() == lattice_points(a).size() * lattice_points(b).size());

    const auto t = translate(b, rat({3, -2}));
    CHECK(lattice_points(t).size() == lattice_points(b).size());
    for (const auto& w : lattice_points(b)) CHECK(t.contains(w + Weight{3, -2}));

    IntMatrix u(2, 2);
    u << 1, 2, 0, 1;
    const auto img = unimodular_image(b, u, rat({0, 1}));
    CHECK(lattice_points(img).size() == lattice_points(b).size());
  }
}

TEST_CASE("inclusion and equivalence") {
  const auto big = LatticePolyhedron::box(vector_of<Integer>({0, 0}), vector_of<Integer>({3, 3}));
  const auto small = LatticePolyhedron::box(vector_of<Integer>({1, 1}), vector_of<Integer>({2, 2}));
  CHECK(includes(big, small));
  CHECK_FALSE(includes(small, big));
  CHECK(equivalent(intersect(big, small), small));
  // Same set written with a redundant row.
  const auto redundant = intersect(small, LatticePolyhedron::half_space(vector_of<Integer>({1, 1}), Rational(10)));
  CHECK(equivalent(redundant, small));
  const auto half = LatticePolyhedron::half_space(vector_of<Integer>({1, 0}), Rational(0));
  CHECK(includes(LatticePolyhedron::whole_space(2), half));
  CHECK_FALSE(includes(half, LatticePolyhedron::whole_space(2)));
}

TEST_CASE("printing") {
  const auto p = LatticePolyhedron(1, {{vector_of<Integer>({1}), Rational(5, 2)}});
  CHECK(to_string(p) == "{ (1).x <= 5/2 }");
}

TEST_CASE("small worked examples") {
  const auto square = LatticePolyhedron::box(vector_of<Integer>({0, 0}), vector_of<Integer>({1, 1}));
  CHECK(contains_point(square, rat({0, 0})));
  CHECK_FALSE(contains_point(square, rat({2, 0})));
  CHECK(contains_point(LatticePolyhedron::half_space(vector_of<Integer>({1}), Rational(-1)), rat({-1})));
  CHECK(lattice_points(square) == std::vector<Weight>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  const auto segment = LatticePolyhedron::box(vector_of<Integer>({0}), vector_of<Integer>({3}));
  CHECK(lattice_points(segment) == std::vector<Weight>{{0}, {1}, {2}, {3}});
  CHECK(vertices(segment) == std::vector<RatVector>{rat({0}), rat({3})});
  const auto half = LatticePolyhedron::half_space(vector_of<Integer>({1}), Rational(2));
  CHECK(vertices(half) == std::vector<RatVector>{rat({2})});
  CHECK(vertices(LatticePolyhedron::whole_space(1)).empty());
  REQUIRE(recession_rays(half).size() == 1);
  CHECK(equal(recession_rays(half)[0].direction, vector_of<Integer>({-1})));

  const auto quadrant = LatticePolyhedron(2, {{vector_of<Integer>({1, 0}), Rational(0)}, {vector_of<Integer>({0, 1}), Rational(0)}});
  const auto qr = recession_rays(quadrant);
  REQUIRE(qr.size() == 2);
  CHECK(equal(qr[0].direction, vector_of<Integer>({-1, 0})));
  CHECK(equal(qr[1].direction, vector_of<Integer>({0, -1})));

  CHECK(is_delzant(square));
  CHECK(is_lattice_polytope(square));

  const auto rect = product(LatticePolyhedron::box(vector_of<Integer>({0}), vector_of<Integer>({1})),
                            LatticePolyhedron::box(vector_of<Integer>({0}), vector_of<Integer>({2})));
  CHECK(rect.inequalities().size() == 4);
  CHECK(equivalent(rect, LatticePolyhedron::box(vector_of<Integer>({0, 0}), vector_of<Integer>({1, 2}))));
  CHECK(product(segment, LatticePolyhedron::whole_space(0)) == segment);
  const auto strip = product(half, LatticePolyhedron::box(vector_of<Integer>({0}), vector_of<Integer>({1})));
  CHECK(strip.inequalities().size() == 3);
  CHECK(strip.contains(Weight{-100, 1}));

  const auto unit = LatticePolyhedron::box(vector_of<Integer>({0}), vector_of<Integer>({1}));
  CHECK(translate(unit, rat({3})) == LatticePolyhedron::box(vector_of<Integer>({3}), vector_of<Integer>({4})));
  CHECK(translate(unit, rat({0})) == unit);
  const RatVector v = rat({5, -7});
  CHECK(translate(translate(square, v), RatVector(-v)) == square);
}
