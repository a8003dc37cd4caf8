#include "mrees/newton.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "mrees/kernels.hpp"

namespace mrees {

namespace {

using Vec3 = std::array<Exponent, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) {
  return {checked_add(a[0], -b[0]), checked_add(a[1], -b[1]), checked_add(a[2], -b[2])};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {checked_add(checked_mul(a[1], b[2]), -checked_mul(a[2], b[1])),
          checked_add(checked_mul(a[2], b[0]), -checked_mul(a[0], b[2])),
          checked_add(checked_mul(a[0], b[1]), -checked_mul(a[1], b[0]))};
}

Exponent dot(const Vec3& n, const Vec3& v) {
  return checked_add(checked_add(checked_mul(n[0], v[0]), checked_mul(n[1], v[1])), checked_mul(n[2], v[2]));
}

// Primitive representative with all entries >= 0, or nullopt when the normal
// is zero or has entries of both signs (such planes never bound NP).
std::optional<Vec3> orient(Vec3 n) {
  bool pos = false, neg = false;
  for (Exponent c : n) {
    pos |= c > 0;
    neg |= c < 0;
  }
  if (pos == neg) return std::nullopt;
  Exponent g = 0;
  for (Exponent& c : n) {
    if (neg) c = -c;
    g = std::gcd(g, c);
  }
  for (Exponent& c : n) c /= g;
  return n;
}

// For each distinct oriented normal, min over generators of n·g, computed once.
class Candidates {
 public:
  explicit Candidates(const std::vector<Vec3>& points) : points_(points) {}

  // Registers the plane with normal n through `through`.
  void offer(const Vec3& raw, const Vec3& through) {
    const auto n = orient(raw);
    if (!n) return;
    auto it = planes_.find(*n);
    if (it == planes_.end()) {
      Exponent lo = dot(*n, points_.front());
      for (const auto& p : points_) lo = std::min(lo, dot(*n, p));
      it = planes_.emplace(*n, Plane{lo, false}).first;
    }
    if (dot(*n, through) == it->second.min) it->second.supporting = true;
  }

  std::vector<Facet> facets(int dimension) const {
    std::vector<Facet> out;
    for (const auto& [n, plane] : planes_) {
      if (!plane.supporting) continue;
      out.push_back({ExponentVector(std::span<const Exponent>(n.data(), static_cast<std::size_t>(dimension))),
                     plane.min});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Plane {
    Exponent min;
    bool supporting;
  };
  const std::vector<Vec3>& points_;
  std::map<Vec3, Plane> planes_;
};

// Candidate facets of conv(points) + orthant; d = 3 uses cross products of
// point differences and coordinate directions.
std::vector<Facet> enumerate_facets(const std::vector<Vec3>& pts, int d) {
  Candidates cand(pts);
  const std::size_t g = pts.size();
  for (int axis = 0; axis < d; ++axis) {
    Vec3 e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = 1;
    for (const auto& p : pts) cand.offer(e, p);
  }
  if (d == 2) {
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = i + 1; j < g; ++j) {
        const Vec3 u = sub(pts[j], pts[i]);
        cand.offer({-u[1], u[0], 0}, pts[i]);
      }
    }
  } else if (d == 3) {
    static constexpr std::array<Vec3, 3> kAxes{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = i + 1; j < g; ++j) {
        const Vec3 u = sub(pts[j], pts[i]);
        for (const auto& e : kAxes) cand.offer(cross(u, e), pts[i]);
        for (std::size_t k = j + 1; k < g; ++k) cand.offer(cross(u, sub(pts[k], pts[i])), pts[i]);
      }
    }
  }
  return cand.facets(d);
}

kernels::ColumnHalfspace to_column(const ExponentVector& n, Exponent offset, int d) {
  switch (d) {
    case 1:
      return {0, 0, n[0], offset};
    case 2:
      return {n[0], 0, n[1], offset};
    default:
      return {n[0], n[1], n[2], offset};
  }
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError("Newton polyhedron of the zero ideal");
  std::vector<Vec3> pts;
  pts.reserve(ideal.size());
  for (const auto& gen : ideal.generators()) pts.push_back(gen.padded());
  return {ideal.ring(), enumerate_facets(pts, ideal.dimension()), generator_box(ideal)};
}

bool np_contains(const NewtonPolyhedron& np, const ExponentVector& v) {
  if (v.size() != np.ring.dimension()) throw DimensionMismatch("point length differs from polyhedron dimension");
  for (const auto& f : np.facets) {
    if (dot(f.normal.padded(), v.padded()) < f.offset) return false;
  }
  return true;
}

MonomialIdeal lattice_closure(const RingContext& ring, std::span<const Facet> facets, const ExponentVector& box) {
  const int d = ring.dimension();
  if (box.size() != d) throw DimensionMismatch("box length differs from ring dimension");
  // Prefix coordinates span the grid, the last coordinate is the column.
  kernels::ColumnGrid grid;
  if (d >= 2) grid.extent0 = checked_add(box[0], 1);
  if (d == 3) grid.extent1 = checked_add(box[1], 1);
  grid.zcap = box[d - 1];

  std::vector<kernels::ColumnHalfspace> hs;
  hs.reserve(facets.size());
  for (const auto& f : facets) hs.push_back(to_column(f.normal, f.offset, d));
  std::vector<std::int64_t> height(static_cast<std::size_t>(checked_mul(grid.extent0, grid.extent1)));
  kernels::halfspace_heights(hs, grid, height);

  // (p, h(p)) is a minimal generator iff both prefix predecessors sit strictly
  // higher; iterating p in lex order yields the canonical order directly.
  std::vector<ExponentVector> gens;
  for (std::int64_t p0 = 0; p0 < grid.extent0; ++p0) {
    for (std::int64_t p1 = 0; p1 < grid.extent1; ++p1) {
      const std::int64_t h = height[static_cast<std::size_t>(p0 * grid.extent1 + p1)];
      if (h == kernels::kNoHeight) continue;
      if (p0 > 0 && height[static_cast<std::size_t>((p0 - 1) * grid.extent1 + p1)] <= h) continue;
      if (p1 > 0 && height[static_cast<std::size_t>(p0 * grid.extent1 + p1 - 1)] <= h) continue;
      const std::array<Exponent, 3> v{p0, p1, h};
      switch (d) {
        case 1:
          gens.push_back(ExponentVector{h});
          break;
        case 2:
          gens.push_back(ExponentVector{p0, h});
          break;
        default:
          gens.push_back(ExponentVector(std::span<const Exponent>(v.data(), 3)));
      }
    }
  }
  return from_canonical(ring, std::move(gens));
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const NewtonPolyhedron np = newton_polyhedron(ideal);
  return lattice_closure(np.ring, np.facets, np.source_box);
}

bool is_complete(const MonomialIdeal& ideal) { return integral_closure(ideal) == ideal; }

CheckReport is_normal_up_to(const MonomialIdeal& ideal, Exponent bound) {
  if (!is_m_primary(ideal)) throw NotMPrimary("normality check needs an m-primary ideal");
  if (bound < 1) throw PreconditionError("bound must be positive");
  CheckReport report;
  report.check = "normal";
  report.bound = bound;
  ProductClosure closures({ideal});
  PowerCache powers(ideal);
  for (Exponent n = 1; n <= bound; ++n) {
    const MonomialIdeal& in = powers.power(n);
    const MonomialIdeal cl = closures.closure(std::array<Exponent, 1>{n});
    if (cl != in) {
      report.fail({{n}, generator_not_in(cl, in), "power is not complete"});
      break;
    }
  }
  return report;
}

ProductClosure::ProductClosure(std::vector<MonomialIdeal> ideals) : ideals_(std::move(ideals)) {
  if (ideals_.empty()) throw PreconditionError("ProductClosure needs at least one ideal");
  ring_ = ideals_.front().ring();
  MonomialIdeal product = MonomialIdeal::unit(ring_);
  for (const auto& ideal : ideals_) {
    if (!(ideal.ring() == ring_)) throw DimensionMismatch("ideals live in different rings");
    if (ideal.is_zero()) throw ZeroIdealError("closure filtration of the zero ideal");
    product = multiply(product, ideal);
    boxes_.push_back(generator_box(ideal));
  }
  for (const auto& f : newton_polyhedron(product).facets) normals_.push_back(f.normal);
  for (const auto& ideal : ideals_) {
    std::vector<Exponent> h;
    h.reserve(normals_.size());
    for (const auto& n : normals_) {
      Exponent lo = dot(n.padded(), ideal.generators().front().padded());
      for (const auto& gen : ideal.generators()) lo = std::min(lo, dot(n.padded(), gen.padded()));
      h.push_back(lo);
    }
    support_.push_back(std::move(h));
  }
}

MonomialIdeal ProductClosure::closure(std::span<const Exponent> exponents) const {
  if (exponents.size() != ideals_.size()) throw DimensionMismatch("exponent tuple length differs from arity");
  std::vector<Facet> facets;
  facets.reserve(normals_.size());
  for (std::size_t f = 0; f < normals_.size(); ++f) {
    Exponent offset = 0;
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
      if (exponents[i] < 0) throw PreconditionError("negative filtration exponent");
      offset = checked_add(offset, checked_mul(exponents[i], support_[i][f]));
    }
    facets.push_back({normals_[f], offset});
  }
  ExponentVector box = ExponentVector::zero(ring_.dimension());
  for (std::size_t i = 0; i < ideals_.size(); ++i) box = box + exponents[i] * boxes_[i];
  return lattice_closure(ring_, facets, box);
}

}  // namespace mrees
