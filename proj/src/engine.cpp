#include "bquant/engine.hpp"

#include "bquant/errors.hpp"
#include "bquant/lattice.hpp"

#include <algorithm>
#include <thread>

namespace bquant {

namespace {

/// Runs body(begin, end) over contiguous chunks of [0, count).
template <typename Body>
void parallel_chunks(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

std::vector<Weight> box_points(Index n, const Integer& radius) {
  const IntVector lo = IntVector::Constant(n, Integer(-radius));
  const IntVector hi = IntVector::Constant(n, radius);
  return lattice_points(LatticePolyhedron::box(lo, hi));
}

Integer extent(const std::vector<Weight>& weights) {
  Integer r(1);
  for (const auto& w : weights)
    for (Index i = 0; i < w.rank(); ++i) r = std::max(r, Integer(mp::abs(w[i])));
  return r;
}

/// Evaluates `f` at every point of the box [-radius, radius]^n and returns
/// the first point (lexicographic) where `expected` disagrees.
template <typename Eval>
std::optional<Weight> first_disagreement(Index n, const Integer& radius, const VirtualCharacter& expected,
                                         unsigned threads, Eval&& eval) {
  const auto points = box_points(n, radius);
  std::vector<char> agrees(points.size(), 1);
  parallel_chunks(points.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      agrees[k] = eval(points[k]) == weight_multiplicity(expected, points[k]) ? 1 : 0;
  });
  for (std::size_t k = 0; k < points.size(); ++k)
    if (!agrees[k]) return points[k];
  return std::nullopt;
}

}  // namespace

VirtualCharacter quantize_compact_toric(const CompactToricSpace& m) {
  require_valid(Description{m});
  VirtualCharacter q(m.rank);
  for (const auto& w : lattice_points(m.polytope)) q.accumulate(w, Integer(1));
  return q;
}

ReducedSpaceResult reduced_space_quantization(const Description& d, const Weight& alpha) {
  const Index n = rank_of(d);
  if (alpha.rank() != n)
    throw DimensionError("weight " + alpha.to_string() + " does not have rank " + std::to_string(n));
  ReducedSpaceResult result{alpha, Integer(0), {}};
  if (const auto* m = std::get_if<CompactToricSpace>(&d)) {
    const int inside = m->polytope.contains(alpha) ? 1 : 0;
    result.count = inside;
    result.contributions.push_back(inside);
    return result;
  }
  for (const auto& c : std::get<BSpaceDescription>(d).components) {
    const int contribution = c.polyhedron.contains(alpha) ? c.sign : 0;
    result.count += contribution;
    result.contributions.push_back(contribution);
  }
  return result;
}

PolyhedralCharacter polyhedral_character(const BSpaceDescription& d) {
  PolyhedralCharacter c(d.rank);
  for (const auto& comp : d.components) c.add_term(comp.sign, comp.polyhedron);
  return c;
}

TailMatching tail_matching(const BSpaceDescription& d) {
  TailMatching ends;
  for (std::size_t i = 0; i < d.hypersurfaces.size(); ++i) {
    const auto& h = d.hypersurfaces[i];
    ends.push_back({i, h.positive_side, h.negative_side, h.splitting, tail_threshold(d, i)});
  }
  return ends;
}

VirtualCharacter collapse_signed_tails(const PolyhedralCharacter& c, const TailMatching& ends,
                                       const EngineOptions& options) {
  const Index n = c.rank();
  const auto& terms = c.terms();
  std::vector<std::vector<std::pair<RatVector, Rational>>> cuts(terms.size());

  for (const auto& end : ends) {
    const std::string where = "hypersurface " + std::to_string(end.hypersurface);
    if (end.positive_term >= terms.size() || end.negative_term >= terms.size())
      throw NotFinite(where + ": matched term index out of range");
    if (end.splitting.size() != n || content(end.splitting) == 0)
      throw NotFinite(where + ": invalid splitting vector");
    const auto& plus = terms[end.positive_term];
    const auto& minus = terms[end.negative_term];
    if (end.positive_term == end.negative_term || plus.sign == minus.sign)
      throw NotFinite(where + ": matched tails do not carry opposite signs");
    if (!equivalent(tail_region(plus.polyhedron, end.splitting, end.threshold),
                    tail_region(minus.polyhedron, end.splitting, end.threshold)))
      throw NotFinite(where + ": matched tails differ beyond s0 = " + end.threshold.str());
    // Integer points off the tail satisfy <x, X> >= 1 - s0.
    const RatVector cut = -end.splitting.cast<Rational>();
    for (std::size_t t : {end.positive_term, end.negative_term})
      cuts[t].emplace_back(cut, Rational(end.threshold - 1));
  }

  VirtualCharacter result(n);
  std::vector<Weight> core_points;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto slab = intersect(terms[t].polyhedron, LatticePolyhedron::from_rational(n, cuts[t]));
    if (!is_bounded(slab)) {
      const auto rays = recession_rays(slab);
      throw NotFinite("term " + std::to_string(t) + " has an unmatched tail along " +
                      to_string(rays.front().direction));
    }
    for (auto& w : lattice_points(slab)) {
      result.accumulate(w, Integer(terms[t].sign));
      core_points.push_back(std::move(w));
    }
  }

  const Integer radius = 2 * extent(core_points);
  auto mismatch = first_disagreement(n, radius, result, options.threads,
                                     [&](const Weight& w) { return weight_multiplicity(c, w); });
  if (mismatch)
    throw NotFinite("collapsed character disagrees with pointwise evaluation at " + mismatch->to_string());
  return result;
}

VirtualCharacter quantize_b(const BSpaceDescription& d, const EngineOptions& options) {
  const auto dichotomy = check_modular_dichotomy(d);
  if (!dichotomy.passed) throw ZeroModularWeight(dichotomy.message);
  require_valid(Description{d});
  return collapse_signed_tails(polyhedral_character(d), tail_matching(d), options);
}

VirtualCharacter quantize(const Description& d, const EngineOptions& options) {
  if (const auto* m = std::get_if<CompactToricSpace>(&d)) return quantize_compact_toric(*m);
  return quantize_b(std::get<BSpaceDescription>(d), options);
}

std::optional<Weight> pointwise_disagreement(const Description& d, const VirtualCharacter& q,
                                             const EngineOptions& options) {
  std::vector<Weight> support;
  for (const auto& [w, m] : q.multiplicities()) support.push_back(w);
  return first_disagreement(rank_of(d), 2 * extent(support), q, options.threads,
                            [&](const Weight& w) { return reduced_space_quantization(d, w).count; });
}

std::vector<Weight> boundary_weights(const Description& d, const VirtualCharacter& q) {
  std::vector<const LatticePolyhedron*> pieces;
  if (const auto* m = std::get_if<CompactToricSpace>(&d)) {
    pieces.push_back(&m->polytope);
  } else {
    for (const auto& c : std::get<BSpaceDescription>(d).components) pieces.push_back(&c.polyhedron);
  }
  std::vector<Weight> out;
  for (const auto& [w, m] : q.multiplicities()) {
    bool on_facet = false;
    for (const auto* p : pieces) {
      if (!p->contains(w)) continue;
      for (const auto& row : p->inequalities())
        if (Rational(row.normal.dot(w.coords())) == row.bound) on_facet = true;
    }
    if (on_facet) out.push_back(w);
  }
  return out;
}

QrVerification verify_qr_product(const VirtualCharacter& qm, const Description& m, const CompactToricSpace& n) {
  if (rank_of(m) != n.rank || qm.rank() != n.rank)
    throw DimensionError("verify_qr_product: ranks " + std::to_string(rank_of(m)) + " and " +
                         std::to_string(n.rank) + " differ");
  const VirtualCharacter qn = quantize_compact_toric(n);

  QrVerification out;
  out.left = invariant_part(tensor_product(qm, qn));

  std::vector<int> signs;
  std::vector<LatticePolyhedron> products;
  if (const auto* compact = std::get_if<CompactToricSpace>(&m)) {
    signs.push_back(1);
    products.push_back(product(compact->polytope, n.polytope));
  } else {
    for (const auto& c : std::get<BSpaceDescription>(m).components) {
      signs.push_back(c.sign);
      products.push_back(product(c.polyhedron, n.polytope));
    }
  }

  // Zero fiber of (x, y) -> x + y: the points (-y, y) with y a lattice point of N.
  std::vector<std::pair<Weight, Integer>> right_terms;
  out.right = 0;
  for (const auto& y : lattice_points(n.polytope)) {
    IntVector joint(2 * n.rank);
    joint.head(n.rank) = -y.coords();
    joint.tail(n.rank) = y.coords();
    const Weight point(joint);
    Integer count(0);
    for (std::size_t k = 0; k < products.size(); ++k)
      if (products[k].contains(point)) count += signs[k];
    out.right += count;
    right_terms.emplace_back(-y, count);
  }
  std::sort(right_terms.begin(), right_terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Weight> candidates;
  for (const auto& [alpha, count] : right_terms) candidates.push_back(alpha);
  for (const auto& [alpha, mult] : qm.multiplicities())
    if (weight_multiplicity(qn, -alpha) != 0) candidates.push_back(alpha);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& alpha : candidates) {
    const Integer left_alpha = weight_multiplicity(qm, alpha) * weight_multiplicity(qn, -alpha);
    auto it = std::lower_bound(right_terms.begin(), right_terms.end(), alpha,
                               [](const auto& term, const Weight& w) { return term.first < w; });
    const Integer right_alpha = (it != right_terms.end() && it->first == alpha) ? it->second : Integer(0);
    if (left_alpha != right_alpha) {
      out.first_mismatch = alpha;
      break;
    }
  }
  out.verified = out.left == out.right && !out.first_mismatch;
  return out;
}

QrVerification verify_qr_product(const Description& m, const CompactToricSpace& n, const EngineOptions& options) {
  if (rank_of(m) != n.rank)
    throw DimensionError("verify_qr_product: ranks " + std::to_string(rank_of(m)) + " and " +
                         std::to_string(n.rank) + " differ");
  return verify_qr_product(quantize(m, options), m, n);
}

VirtualCharacter quantize_local_model(const LocalModel& lm) {
  const Index n = lm.splitting.size();
  const auto window =
      LatticePolyhedron::half_space(IntVector(-lm.splitting), Rational(2 * lm.threshold));
  VirtualCharacter q(n);
  for (const auto* side : {&lm.positive, &lm.negative}) {
    for (const auto& w : lattice_points(intersect(side->tail, window))) q.accumulate(w, Integer(side->sign));
  }
  return q;
}

}  // namespace bquant
