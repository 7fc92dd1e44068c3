#include "bquant/polyhedron.hpp"

#include "bquant/errors.hpp"
#include "bquant/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace bquant {

namespace {

template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& visit) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    visit(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational dot(const IntVector& a, const RatVector& x) {
  Rational sum(0);
  for (Index i = 0; i < a.size(); ++i) sum += Rational(a(i)) * x(i);
  return sum;
}

void require_rank(const LatticePolyhedron& p, Index rank, const char* what) {
  if (p.rank() != rank)
    throw DimensionError(std::string(what) + ": polyhedron rank " + std::to_string(p.rank()) +
                         " does not match rank " + std::to_string(rank));
}

void push_unique(std::vector<RatVector>& out, RatVector v) {
  for (const auto& w : out)
    if (equal(w, v)) return;
  out.push_back(std::move(v));
}

void sort_lex(std::vector<RatVector>& v) {
  std::sort(v.begin(), v.end(), [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
}

Index span_rank(const std::vector<RatVector>& vectors, Index n) {
  if (vectors.empty()) return 0;
  RatMatrix m(static_cast<Index>(vectors.size()), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) m.row(static_cast<Index>(i)) = vectors[i].transpose();
  return rank(m);
}

/// Dimension of the face cut out by one inequality (or of P itself when
/// `face` is null), from generator data.
Index face_dimension(const Generators& g, Index n, const Inequality* face) {
  std::vector<RatVector> tight_points;
  for (const auto& pt : g.points)
    if (!face || dot(face->normal, pt) == face->bound) tight_points.push_back(pt);
  if (tight_points.empty()) return -1;
  std::vector<RatVector> directions;
  for (std::size_t i = 1; i < tight_points.size(); ++i)
    directions.push_back(tight_points[i] - tight_points[0]);
  for (const auto& r : g.rays)
    if (!face || dot(face->normal, r) == 0) directions.push_back(r);
  for (const auto& l : g.lineality) directions.push_back(l);
  return span_rank(directions, n);
}

}  // namespace

// --- construction ----------------------------------------------------------

LatticePolyhedron::LatticePolyhedron(Index rank, std::vector<Inequality> inequalities)
    : rank_(rank), inequalities_(std::move(inequalities)) {
  for (const auto& ineq : inequalities_) {
    if (ineq.normal.size() != rank_)
      throw InvalidPolyhedron("normal " + to_string(ineq.normal) + " does not have length " +
                              std::to_string(rank_));
    if (content(ineq.normal) == 0) throw InvalidPolyhedron("zero normal vector");
  }
  canonicalize();
}

LatticePolyhedron LatticePolyhedron::from_rational(
    Index rank, const std::vector<std::pair<RatVector, Rational>>& rows) {
  LatticePolyhedron p;
  p.rank_ = rank;
  for (const auto& [normal, bound] : rows) {
    if (normal.size() != rank) throw InvalidPolyhedron("normal of wrong length");
    IntVector scaled = primitive_direction(normal);
    if (content(scaled) == 0) {
      if (bound < 0) p.infeasible_ = true;
      continue;
    }
    // primitive_direction scaled `normal` by a positive factor; recover it.
    Index k = 0;
    while (scaled(k) == 0) ++k;
    const Rational factor = Rational(scaled(k)) / normal(k);
    p.inequalities_.push_back({std::move(scaled), bound * factor});
  }
  p.canonicalize();
  return p;
}

LatticePolyhedron LatticePolyhedron::box(const IntVector& lo, const IntVector& hi) {
  if (lo.size() != hi.size()) throw DimensionError("box corners have different lengths");
  std::vector<Inequality> rows;
  for (Index i = 0; i < lo.size(); ++i) {
    IntVector e = IntVector::Zero(lo.size());
    e(i) = 1;
    rows.push_back({e, Rational(hi(i))});
    rows.push_back({IntVector(-e), Rational(-lo(i))});
  }
  return LatticePolyhedron(lo.size(), std::move(rows));
}

LatticePolyhedron LatticePolyhedron::half_space(const IntVector& normal, const Rational& bound) {
  return LatticePolyhedron(normal.size(), {{normal, bound}});
}

void LatticePolyhedron::canonicalize() {
  for (auto& ineq : inequalities_) {
    const Integer g = content(ineq.normal);
    if (g > 1) {
      ineq.normal = primitive(ineq.normal);
      ineq.bound /= Rational(g);
    }
  }
  std::sort(inequalities_.begin(), inequalities_.end(), [](const Inequality& a, const Inequality& b) {
    if (equal(a.normal, b.normal)) return a.bound < b.bound;
    return lex_less(a.normal, b.normal);
  });
  inequalities_.erase(std::unique(inequalities_.begin(), inequalities_.end(),
                                  [](const Inequality& a, const Inequality& b) {
                                    return equal(a.normal, b.normal);
                                  }),
                      inequalities_.end());
  if (infeasible_) {
    inequalities_.clear();
    if (rank_ > 0) {
      IntVector e = IntVector::Zero(rank_);
      e(0) = 1;
      inequalities_.push_back({IntVector(-e), Rational(-1)});
      inequalities_.push_back({e, Rational(-1)});
    }
  }
  lattice_bounds_.clear();
  for (const auto& ineq : inequalities_) lattice_bounds_.push_back(floor(ineq.bound));
}

bool LatticePolyhedron::contains(const RatVector& x) const {
  if (x.size() != rank_)
    throw DimensionError("point of length " + std::to_string(x.size()) + " tested against rank " +
                         std::to_string(rank_) + " polyhedron");
  if (infeasible_) return false;
  for (const auto& ineq : inequalities_)
    if (dot(ineq.normal, x) > ineq.bound) return false;
  return true;
}

bool LatticePolyhedron::contains(const Weight& w) const {
  if (w.rank() != rank_)
    throw DimensionError("weight of rank " + std::to_string(w.rank()) + " tested against rank " +
                         std::to_string(rank_) + " polyhedron");
  if (infeasible_) return false;
  const IntVector& x = w.coords();
  for (std::size_t k = 0; k < inequalities_.size(); ++k) {
    const IntVector& a = inequalities_[k].normal;
    Integer sum(0);
    for (Index i = 0; i < rank_; ++i) sum += a(i) * x(i);
    if (sum > lattice_bounds_[k]) return false;
  }
  return true;
}

bool operator==(const LatticePolyhedron& a, const LatticePolyhedron& b) {
  if (a.rank_ != b.rank_ || a.infeasible_ != b.infeasible_) return false;
  if (a.inequalities_.size() != b.inequalities_.size()) return false;
  for (std::size_t i = 0; i < a.inequalities_.size(); ++i) {
    if (!equal(a.inequalities_[i].normal, b.inequalities_[i].normal)) return false;
    if (a.inequalities_[i].bound != b.inequalities_[i].bound) return false;
  }
  return true;
}

// --- generators ------------------------------------------------------------

Generators generators(const LatticePolyhedron& p) {
  Generators g;
  if (p.trivially_empty()) return g;
  const Index n = p.rank();
  const auto& rows = p.inequalities();
  const std::size_t m = rows.size();

  RatMatrix a(static_cast<Index>(m), n);
  RatVector b(static_cast<Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    a.row(static_cast<Index>(i)) = rows[i].normal.cast<Rational>().transpose();
    b(static_cast<Index>(i)) = rows[i].bound;
  }
  const RatMatrix lineality = m == 0 ? RatMatrix(RatMatrix::Identity(n, n)) : nullspace(a);
  const Index lin_dim = lineality.cols();
  const Index pointed_dim = n - lin_dim;

  auto satisfies = [&](const RatVector& x) {
    for (std::size_t i = 0; i < m; ++i)
      if (dot(rows[i].normal, x) > rows[i].bound) return false;
    return true;
  };

  // Points: vertices of P restricted to the complement of the lineality space.
  for_each_subset(m, static_cast<std::size_t>(pointed_dim), [&](const std::vector<std::size_t>& idx) {
    RatMatrix system(lin_dim + pointed_dim, n);
    RatVector rhs = RatVector::Zero(lin_dim + pointed_dim);
    system.topRows(lin_dim) = lineality.transpose();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      system.row(lin_dim + static_cast<Index>(k)) = a.row(static_cast<Index>(idx[k]));
      rhs(lin_dim + static_cast<Index>(k)) = b(static_cast<Index>(idx[k]));
    }
    auto x = solve_unique(system, rhs);
    if (x && satisfies(*x)) push_unique(g.points, std::move(*x));
  });
  sort_lex(g.points);
  if (g.points.empty()) return g;

  for (Index k = 0; k < lin_dim; ++k) g.lineality.push_back(lineality.col(k));

  // Rays: one-dimensional solutions of (pointed_dim - 1) tight cone constraints.
  if (pointed_dim >= 1) {
    for_each_subset(m, static_cast<std::size_t>(pointed_dim - 1), [&](const std::vector<std::size_t>& idx) {
      RatMatrix system(lin_dim + static_cast<Index>(idx.size()), n);
      system.topRows(lin_dim) = lineality.transpose();
      for (std::size_t k = 0; k < idx.size(); ++k)
        system.row(lin_dim + static_cast<Index>(k)) = a.row(static_cast<Index>(idx[k]));
      const RatMatrix kernel = nullspace(system);
      if (kernel.cols() != 1) return;
      for (int sign : {1, -1}) {
        const RatVector r = kernel.col(0) * Rational(sign);
        bool in_cone = true;
        for (std::size_t i = 0; i < m && in_cone; ++i)
          if (dot(rows[i].normal, r) > 0) in_cone = false;
        if (in_cone) push_unique(g.rays, primitive_direction(r).cast<Rational>());
      }
    });
    sort_lex(g.rays);
  }
  return g;
}

bool is_empty(const LatticePolyhedron& p) { return generators(p).points.empty(); }

bool is_bounded(const LatticePolyhedron& p) {
  const auto g = generators(p);
  return g.points.empty() || (g.rays.empty() && g.lineality.empty());
}

Index dimension(const LatticePolyhedron& p) { return face_dimension(generators(p), p.rank(), nullptr); }

bool contains_point(const LatticePolyhedron& p, const RatVector& x) { return p.contains(x); }

// --- enumeration -----------------------------------------------------------

std::vector<Weight> lattice_points(const LatticePolyhedron& p) {
  const auto g = generators(p);
  if (g.points.empty()) return {};
  if (!g.rays.empty() || !g.lineality.empty())
    throw UnboundedPolyhedron("lattice_points: polyhedron is unbounded: " + to_string(p));
  const Index n = p.rank();
  if (n == 0) return {Weight(IntVector(0))};

  IntVector lo(n), hi(n);
  for (Index i = 0; i < n; ++i) {
    Rational mn = g.points.front()(i), mx = mn;
    for (const auto& pt : g.points) {
      mn = std::min(mn, pt(i));
      mx = std::max(mx, pt(i));
    }
    lo(i) = ceil(mn);
    hi(i) = floor(mx);
    if (lo(i) > hi(i)) return {};
  }

  // Odometer over the first n-1 coordinates; the last coordinate's range is
  // solved exactly from the inequalities.
  std::vector<Weight> out;
  const auto& rows = p.inequalities();
  IntVector x = lo;
  while (true) {
    Integer last_lo = lo(n - 1), last_hi = hi(n - 1);
    bool feasible = true;
    for (const auto& row : rows) {
      Integer partial(0);
      for (Index i = 0; i + 1 < n; ++i) partial += row.normal(i) * x(i);
      const Rational rest = row.bound - Rational(partial);
      const Integer& coeff = row.normal(n - 1);
      if (coeff > 0) {
        last_hi = std::min(last_hi, floor(rest / Rational(coeff)));
      } else if (coeff < 0) {
        last_lo = std::max(last_lo, ceil(rest / Rational(coeff)));
      } else if (rest < 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      for (Integer t = last_lo; t <= last_hi; ++t) {
        x(n - 1) = t;
        out.emplace_back(x);
      }
    }
    Index k = n - 2;
    while (k >= 0 && x(k) == hi(k)) {
      x(k) = lo(k);
      --k;
    }
    if (k < 0) break;
    ++x(k);
  }
  return out;
}

std::vector<RatVector> vertices(const LatticePolyhedron& p) {
  auto g = generators(p);
  if (g.points.empty()) throw EmptyPolyhedron("vertices: polyhedron is empty");
  if (!g.lineality.empty()) return {};
  return std::move(g.points);
}

std::vector<RecessionRay> recession_rays(const LatticePolyhedron& p) {
  const auto g = generators(p);
  if (g.points.empty()) throw EmptyPolyhedron("recession_rays: polyhedron is empty");
  std::vector<RecessionRay> out;
  auto add = [&](const RatVector& v) {
    RecessionRay ray{primitive_direction(v)};
    if (std::find(out.begin(), out.end(), ray) == out.end()) out.push_back(std::move(ray));
  };
  for (const auto& r : g.rays) add(r);
  for (const auto& l : g.lineality) {
    add(l);
    add(RatVector(-l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- smoothness and integrality -------------------------------------------

std::optional<RatVector> delzant_violation(const LatticePolyhedron& p) {
  const auto g = generators(p);
  if (g.points.empty()) throw EmptyPolyhedron("is_delzant: polyhedron is empty");
  if (!g.lineality.empty()) throw NoVertices("is_delzant: polyhedron contains a line");
  const Index n = p.rank();
  const Index dim = face_dimension(g, n, nullptr);
  if (dim == 0) return std::nullopt;
  if (dim < n) return g.points.front();

  std::vector<const Inequality*> facets;
  for (const auto& row : p.inequalities())
    if (face_dimension(g, n, &row) == n - 1) facets.push_back(&row);

  for (const auto& v : g.points) {
    std::vector<const Inequality*> tight;
    for (const auto* f : facets)
      if (dot(f->normal, v) == f->bound) tight.push_back(f);
    if (static_cast<Index>(tight.size()) != n) return v;
    IntMatrix normals(n, n);
    for (Index i = 0; i < n; ++i) normals.row(i) = tight[static_cast<std::size_t>(i)]->normal.transpose();
    const Integer det = determinant<Integer>(normals);
    if (det != 1 && det != -1) return v;
  }
  return std::nullopt;
}

bool is_delzant(const LatticePolyhedron& p) { return !delzant_violation(p).has_value(); }

std::optional<RatVector> non_integral_vertex(const LatticePolyhedron& p) {
  for (const auto& v : generators(p).points) {
    for (Index i = 0; i < v.size(); ++i)
      if (!is_integer(v(i))) return v;
  }
  return std::nullopt;
}

bool is_lattice_polytope(const LatticePolyhedron& p) {
  const auto g = generators(p);
  if (g.points.empty()) throw EmptyPolyhedron("is_lattice_polytope: polyhedron is empty");
  if (!g.rays.empty() || !g.lineality.empty())
    throw UnboundedPolyhedron("is_lattice_polytope: polyhedron is unbounded");
  return !non_integral_vertex(p).has_value();
}

// --- constructions ---------------------------------------------------------

LatticePolyhedron product(const LatticePolyhedron& p, const LatticePolyhedron& q) {
  const Index n = p.rank() + q.rank();
  std::vector<std::pair<RatVector, Rational>> rows;
  for (const auto& row : p.inequalities()) {
    RatVector normal = RatVector::Zero(n);
    normal.head(p.rank()) = row.normal.cast<Rational>();
    rows.emplace_back(std::move(normal), row.bound);
  }
  for (const auto& row : q.inequalities()) {
    RatVector normal = RatVector::Zero(n);
    normal.tail(q.rank()) = row.normal.cast<Rational>();
    rows.emplace_back(std::move(normal), row.bound);
  }
  if (p.trivially_empty() || q.trivially_empty()) rows.emplace_back(RatVector::Zero(n), Rational(-1));
  return LatticePolyhedron::from_rational(n, rows);
}

LatticePolyhedron translate(const LatticePolyhedron& p, const RatVector& v) {
  require_rank(p, v.size(), "translate");
  std::vector<std::pair<RatVector, Rational>> rows;
  for (const auto& row : p.inequalities())
    rows.emplace_back(row.normal.cast<Rational>(), row.bound + dot(row.normal, v));
  if (p.trivially_empty()) rows.emplace_back(RatVector::Zero(p.rank()), Rational(-1));
  return LatticePolyhedron::from_rational(p.rank(), rows);
}

LatticePolyhedron intersect(const LatticePolyhedron& p, const LatticePolyhedron& q) {
  require_rank(q, p.rank(), "intersect");
  std::vector<std::pair<RatVector, Rational>> rows;
  for (const auto* side : {&p, &q}) {
    for (const auto& row : side->inequalities()) rows.emplace_back(row.normal.cast<Rational>(), row.bound);
    if (side->trivially_empty()) rows.emplace_back(RatVector::Zero(p.rank()), Rational(-1));
  }
  return LatticePolyhedron::from_rational(p.rank(), rows);
}

LatticePolyhedron unimodular_image(const LatticePolyhedron& p, const IntMatrix& u, const RatVector& shift) {
  require_rank(p, u.rows(), "unimodular_image");
  const auto inverse = unimodular_inverse(u);
  if (!inverse) throw DimensionError("unimodular_image: matrix is not unimodular");
  std::vector<std::pair<RatVector, Rational>> rows;
  for (const auto& row : p.inequalities()) {
    const IntVector normal = inverse->transpose() * row.normal;
    rows.emplace_back(normal.cast<Rational>(), row.bound + dot(normal, shift));
  }
  if (p.trivially_empty()) rows.emplace_back(RatVector::Zero(p.rank()), Rational(-1));
  return LatticePolyhedron::from_rational(p.rank(), rows);
}

bool includes(const LatticePolyhedron& outer, const LatticePolyhedron& inner) {
  require_rank(inner, outer.rank(), "includes");
  const auto g = generators(inner);
  if (g.points.empty()) return true;
  if (outer.trivially_empty()) return false;
  for (const auto& pt : g.points)
    if (!outer.contains(pt)) return false;
  for (const auto& row : outer.inequalities()) {
    for (const auto& r : g.rays)
      if (dot(row.normal, r) > 0) return false;
    for (const auto& l : g.lineality)
      if (dot(row.normal, l) != 0) return false;
  }
  return true;
}

bool equivalent(const LatticePolyhedron& p, const LatticePolyhedron& q) {
  return includes(p, q) && includes(q, p);
}

std::string to_string(const LatticePolyhedron& p) {
  if (p.trivially_empty() && p.rank() == 0) return "{ empty }";
  if (p.inequalities().empty()) return "{ R^" + std::to_string(p.rank()) + " }";
  std::string out = "{ ";
  for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
    if (i > 0) out += " ; ";
    out += to_string(p.inequalities()[i].normal) + ".x <= " + to_string(p.inequalities()[i].bound);
  }
  return out + " }";
}

}  // namespace bquant
