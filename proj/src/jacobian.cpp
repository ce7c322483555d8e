#include "pdisk/jacobian.hpp"

#include <algorithm>
#include <stdexcept>

#include "pdisk/skein.hpp"

namespace pdisk {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

TriangulationModel::TriangulationModel(const Triangulation& t) : tri_(t) {
  tri_.disk.require_algebraic();
  build();
}

Side TriangulationModel::canonical(const Side& s) const {
  long k = floor_div(s.lo, n());
  return s.shifted(-k * n());
}

bool TriangulationModel::is_side(const Side& s) const {
  Side c = canonical(s);
  if (c.ray) return std::find(rays_.begin(), rays_.end(), c.lo) != rays_.end();
  if (c.hi - c.lo == 1) return true;
  if (is_fork() && c.lo == fork_base_ && c.hi == fork_base_ + n()) return true;
  return peri_.count({c.lo, c.hi}) > 0;
}

std::optional<std::size_t> TriangulationModel::radial_vertex(int at, Tag t) const {
  if (flipped_) t = flip(t);
  return tri_.index_of(TaggedArc::radial(tri_.disk, at, t));
}

std::vector<std::size_t> TriangulationModel::side_vertices(const Side& s) const {
  Side c = canonical(s);
  if (c.ray) {
    if (is_fork()) return {};
    auto v = radial_vertex(static_cast<int>(c.lo), Tag::plain);
    if (!v) throw InvariantViolation("ray without radial arc");
    return {*v};
  }
  if (c.hi - c.lo == 1) return {};
  if (is_fork() && c.lo == fork_base_ && c.hi == fork_base_ + n())
    return {*radial_vertex(static_cast<int>(fork_base_), Tag::plain),
            *radial_vertex(static_cast<int>(fork_base_), Tag::notched)};
  auto it = peri_.find({c.lo, c.hi});
  if (it == peri_.end()) throw InvariantViolation("not a side of the triangulation");
  return {it->second};
}

std::vector<Side> TriangulationModel::crossed_sides(const Side& curve) const {
  std::vector<Side> semis;
  for (const auto& [key, v] : peri_) semis.push_back(Side{false, key.first, key.second});
  if (is_fork()) semis.push_back(Side{false, fork_base_, fork_base_ + n()});
  long lo = curve.lo, hi = curve.ray ? curve.lo : curve.hi;
  std::vector<Side> out;
  for (long k = floor_div(lo, n()) - 3; k <= floor_div(hi, n()) + 2; ++k) {
    for (const auto& s : semis) {
      Side t = s.shifted(k * n());
      bool hit = curve.ray ? (t.lo < lo && lo < t.hi)
                           : ((t.lo < lo && lo < t.hi && t.hi < hi) || (lo < t.lo && t.lo < hi && hi < t.hi));
      if (hit) out.push_back(t);
    }
    if (!curve.ray)
      for (long r : rays_) {
        long x = r + k * n();
        if (lo < x && x < hi) out.push_back(Side{true, x, x});
      }
  }
  return out;
}

std::size_t TriangulationModel::add_arrow(std::size_t from, std::size_t to) {
  arrow_ends_.emplace_back(from, to);
  return arrow_ends_.size() - 1;
}

void TriangulationModel::build() {
  const int nn = n();
  std::vector<TaggedArc> radials;
  for (const auto& a : tri_.arcs)
    if (a.is_radial()) radials.push_back(a);
  if (is_fork()) {
    fork_base_ = radials[0].a;
    rays_ = {fork_base_};
  } else {
    flipped_ = radials[0].tag == Tag::notched;
    for (const auto& r : radials) rays_.push_back(r.a);
    std::sort(rays_.begin(), rays_.end());
  }
  for (std::size_t i = 0; i < tri_.arcs.size(); ++i) {
    const auto& a = tri_.arcs[i];
    if (a.is_peripheral()) {
      Lift l = lift(a);
      peri_[{l.lo, l.hi}] = i;
    }
  }

  // Triangles with the puncture as a vertex.
  const bool degree_two = !is_fork() && rays_.size() == 2;
  std::vector<bool> at_infinity;
  if (!is_fork()) {
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      long u = rays_[k];
      long v = k + 1 < rays_.size() ? rays_[k + 1] : rays_[0] + nn;
      Side base{false, u, v};
      if (!is_side(base)) throw InvariantViolation("missing side between consecutive radial arcs");
      triangles_.push_back({base, Side{true, v, v}, Side{true, u, u}});
      at_infinity.push_back(true);
    }
  }
  // Triangles below every semicircle side of length >= 2.
  std::vector<Side> semis;
  for (const auto& [key, v] : peri_) semis.push_back(Side{false, key.first, key.second});
  if (is_fork()) semis.push_back(Side{false, fork_base_, fork_base_ + nn});
  for (const auto& s : semis) {
    std::optional<long> w;
    for (long x = s.lo + 1; x < s.hi && !w; ++x)
      if (is_side(Side{false, s.lo, x}) && is_side(Side{false, x, s.hi})) w = x;
    if (!w) throw InvariantViolation("no triangle below a side");
    triangles_.push_back({Side{false, s.lo, *w}, Side{false, *w, s.hi}, s});
    at_infinity.push_back(false);
  }

  // Arrows between consecutive internal sides.
  struct Made {
    std::size_t from, to, arrow;
  };
  std::vector<std::vector<std::vector<Made>>> made(triangles_.size());
  std::vector<std::size_t> removed;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    made[t].resize(3);
    for (std::size_t i = 0; i < 3; ++i) {
      const Side& sx = tri[i];
      const Side& sy = tri[(i + 1) % 3];
      for (auto x : side_vertices(sx))
        for (auto y : side_vertices(sy)) {
          std::size_t id = add_arrow(x, y);
          made[t][i].push_back({x, y, id});
          if (degree_two && sx.ray && sy.ray) removed.push_back(id);
          Side cx = sx, cy = sy;
          long k = floor_div(std::min(cx.lo, cy.lo), nn);
          cx = cx.shifted(-k * nn);
          cy = cy.shifted(-k * nn);
          by_pair_[{cx, cy}].push_back({cx, cy, x, y, id});
          by_pair_[{cy, cx}].push_back({cx, cy, x, y, id});
        }
    }
  }

  // Final arrow numbering skips removed arrows.
  std::vector<std::optional<std::size_t>> renum(arrow_ends_.size());
  std::vector<Arrow> arrows;
  for (std::size_t id = 0; id < arrow_ends_.size(); ++id) {
    if (std::find(removed.begin(), removed.end(), id) != removed.end()) continue;
    renum[id] = arrows.size();
    arrows.push_back({"a" + std::to_string(arrows.size() + 1), static_cast<int>(arrow_ends_[id].first + 1),
                      static_cast<int>(arrow_ends_[id].second + 1)});
  }
  for (auto& [key, list] : by_pair_) {
    std::vector<TriangleArrow> kept;
    for (auto ta : list)
      if (renum[ta.arrow]) {
        ta.arrow = *renum[ta.arrow];
        kept.push_back(ta);
      }
    list = std::move(kept);
  }

  std::vector<int> vlabels;
  for (std::size_t i = 0; i < tri_.arcs.size(); ++i) vlabels.push_back(static_cast<int>(i + 1));
  qp_.quiver = Quiver(vlabels, arrows);
  const Field q = Field::rationals();

  // One 3-cycle per internal triangle and per choice of vertex on a doubled side.
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    if (degree_two && at_infinity[t]) continue;
    for (const auto& m0 : made[t][0])
      for (const auto& m1 : made[t][1])
        for (const auto& m2 : made[t][2])
          if (m0.to == m1.from && m1.to == m2.from && m2.to == m0.from)
            qp_.potential.add(qp_.quiver, Scalar::one(q), {*renum[m0.arrow], *renum[m1.arrow], *renum[m2.arrow]});
  }
  if (is_fork()) return;
  if (!degree_two) {
    // Around the puncture: ray v -> ray u in each triangle at infinity, decreasing.
    Path cyc;
    for (std::size_t k = rays_.size(); k-- > 0;) {
      std::size_t id = made[k][1].at(0).arrow;
      cyc.push_back(*renum[id]);
    }
    qp_.potential.add(qp_.quiver, Scalar(q, -1), cyc);
    return;
  }
  // Degree two: the 2-cycle between the radial arcs is removed by reduction,
  // leaving the product of the two remaining paths through the bases.
  if (made[0][0].empty() || made[1][0].empty()) return;
  Path cyc = {*renum[made[0][2].at(0).arrow], *renum[made[0][0].at(0).arrow], *renum[made[1][2].at(0).arrow],
              *renum[made[1][0].at(0).arrow]};
  qp_.potential.add(qp_.quiver, Scalar::one(q), cyc);
}

std::optional<TriangulationModel::ArrowRef> TriangulationModel::arrow_between(const Side& sx, std::size_t x,
                                                                              const Side& sy, std::size_t y) const {
  long k = floor_div(std::min(sx.lo, sy.lo), n());
  Side cx = sx.shifted(-k * n()), cy = sy.shifted(-k * n());
  auto it = by_pair_.find({cx, cy});
  if (it == by_pair_.end()) return std::nullopt;
  for (const auto& ta : it->second) {
    if (ta.from_side == cx && ta.to_side == cy && ta.from == x && ta.to == y) return ArrowRef{ta.arrow, true};
    if (ta.from_side == cy && ta.to_side == cx && ta.from == y && ta.to == x) return ArrowRef{ta.arrow, false};
  }
  return std::nullopt;
}

QuiverWithPotential quiver_from_triangulation(const Triangulation& t) { return TriangulationModel(t).qp(); }

LemmaFixture linear_D_fixture(int n, int r, int s, int i, const Field& field) {
  if (!(1 < r && r < s && s < i && i < n - 1))
    throw std::invalid_argument("lemma fixture needs 1 < r < s < i < n-1, got n=" + std::to_string(n) +
                                " r=" + std::to_string(r) + " s=" + std::to_string(s) + " i=" + std::to_string(i));
  field.require_char_not_2("lemma fixture");
  const Field& F = field;
  std::vector<int> verts;
  for (int k = 1; k <= n; ++k) verts.push_back(k);
  std::vector<Arrow> arrows;
  for (int k = 1; k <= n - 3; ++k) arrows.push_back({"b" + std::to_string(k), k + 1, k});
  arrows.push_back({"b" + std::to_string(n - 2), n - 1, n - 2});
  arrows.push_back({"b" + std::to_string(n - 1), n, n - 2});
  Quiver q(verts, arrows);

  auto M = [&](std::vector<std::vector<long>> rows, std::size_t cols = 0) { return Matrix::from_ints(F, rows, cols); };
  const Scalar half = Scalar::ratio(F, 1, 2);

  auto build = [&](auto dim_of, auto chain_map, Matrix arm_a, Matrix arm_b) {
    Representation rep{F, {}, {}};
    for (int k = 1; k <= n; ++k) rep.dims.push_back(dim_of(k));
    for (int k = 1; k <= n - 3; ++k) rep.mats.push_back(chain_map(k));  // k+1 -> k
    rep.mats.push_back(arm_a);
    rep.mats.push_back(arm_b);
    rep.check(q);
    return rep;
  };

  // Y
  auto ydim = [&](int k) -> std::size_t {
    if (k <= r) return 1;
    if (k <= s) return 2;
    if (k <= i) return 3;
    if (k <= n - 2) return 2;
    return 1;
  };
  const Matrix A = M({{0, 0}, {1, 0}, {0, 1}});
  auto ychain = [&](int k) -> Matrix {
    if (k < r) return M({{1}});
    if (k == r) return M({{1, 0}});
    if (k < s) return Matrix::identity(F, 2);
    if (k == s) return M({{0, 1, 0}, {0, 0, 1}});
    if (k < i) return Matrix::identity(F, 3);
    if (k == i) return A;
    return Matrix::identity(F, 2);
  };
  Matrix ya = M({{1}, {0}}), yb = M({{1}, {1}});
  if (i == n - 2) {
    ya = A * ya;
    yb = A * yb;
  }
  Representation Y = build(ydim, ychain, ya, yb);

  // M_beta
  auto bdim = [&](int k) -> std::size_t {
    if (k <= r) return 0;
    if (k <= s) return 1;
    if (k <= n - 2) return 2;
    return 1;
  };
  auto bchain = [&](int k) -> Matrix {
    if (k < r) return Matrix(F, 0, 0);
    if (k == r) return Matrix(F, 0, 1);
    if (k < s) return M({{1}});
    if (k == s) return M({{1, 0}});
    return Matrix::identity(F, 2);
  };
  Representation Mb = build(bdim, bchain, M({{1}, {0}}), M({{1}, {1}}));

  // M_i
  auto idim = [&](int k) -> std::size_t { return k <= i ? 1 : 0; };
  auto ichain = [&](int k) -> Matrix {
    if (k < i) return M({{1}});
    if (k == i) return Matrix(F, 1, 0);
    return Matrix(F, 0, 0);
  };
  Representation Mi = build(idim, ichain, Matrix(F, idim(n - 2), 0), Matrix(F, idim(n - 2), 0));

  Morphism f, g;
  for (int k = 1; k <= n; ++k) {
    Matrix fk(F, Y.dims[k - 1], Mi.dims[k - 1]);
    Matrix gk(F, Mb.dims[k - 1], Y.dims[k - 1]);
    if (k <= r) {
      fk(0, 0) = Scalar::one(F);
    } else if (k <= s) {
      fk(0, 0) = Scalar::one(F);
      fk(1, 0) = half;
      gk = M({{1, -2}});
    } else if (k <= i) {
      fk(0, 0) = half;
      fk(1, 0) = Scalar::one(F);
      fk(2, 0) = half;
      gk = M({{0, 1, -2}, {1, 0, -1}});
    } else if (k <= n - 2) {
      gk = M({{1, -2}, {0, -1}});
    } else {
      gk = M({{k == n - 1 ? 1L : -1L}});
    }
    f.comps.push_back(fk);
    g.comps.push_back(gk);
  }
  return LemmaFixture{q, Mi, Y, Mb, f, g};
}

}  // namespace pdisk
