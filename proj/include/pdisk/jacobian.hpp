#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pdisk/disk.hpp"
#include "pdisk/qp.hpp"

namespace pdisk {

struct QuiverWithPotential {
  Quiver quiver;
  Potential potential;
};

// A side of an ideal triangle in the cover: a semicircle (lo, hi) or a ray at lo.
struct Side {
  bool ray = false;
  long lo = 0;
  long hi = 0;
  auto operator<=>(const Side&) const = default;
  Side shifted(long by) const { return Side{ray, lo + by, hi + by}; }
};

// Triangulation lifted to the cover, with its triangles and arrows. The
// quiver's vertex labels are 1-based positions in Triangulation::arcs.
class TriangulationModel {
 public:
  explicit TriangulationModel(const Triangulation& t);

  const Triangulation& triangulation() const { return tri_; }
  const QuiverWithPotential& qp() const { return qp_; }
  int n() const { return tri_.disk.n; }

  // Tags were flipped to make all radials plain (all-notched configuration).
  bool flipped() const { return flipped_; }
  bool is_fork() const { return tri_.config == Triangulation::Config::fork; }
  long fork_base() const { return fork_base_; }
  const std::vector<long>& ray_positions() const { return rays_; }

  // Vertex indices carried by a side; empty for boundary segments.
  std::vector<std::size_t> side_vertices(const Side& s) const;
  // Cover sides of the triangulation crossed transversally by a semicircle or ray.
  std::vector<Side> crossed_sides(const Side& curve) const;

  // Arrow between vertex x on side sx and vertex y on side sy inside the
  // triangle containing both sides; nullopt if there is none (or it was
  // removed from the quiver).
  struct ArrowRef {
    std::size_t arrow;
    bool forward;  // x -> y
  };
  std::optional<ArrowRef> arrow_between(const Side& sx, std::size_t x, const Side& sy, std::size_t y) const;

  // Vertex of a radial arc of the (possibly flipped) triangulation at a position.
  std::optional<std::size_t> radial_vertex(int at, Tag t) const;

 private:
  struct TriangleArrow {
    Side from_side, to_side;
    std::size_t from, to;
    std::size_t arrow;
  };

  void build();
  bool is_side(const Side& s) const;
  Side canonical(const Side& s) const;
  std::size_t add_arrow(std::size_t from, std::size_t to);

  Triangulation tri_;
  bool flipped_ = false;
  long fork_base_ = -1;
  std::vector<long> rays_;                         // in [0, n)
  std::map<std::pair<long, long>, std::size_t> peri_;  // canonical (lo, hi) -> vertex
  std::vector<std::vector<Side>> triangles_;       // cover-CCW side order, canonical translate
  // (canonical pair of sides) -> arrows living in the triangle they span
  std::map<std::pair<Side, Side>, std::vector<TriangleArrow>> by_pair_;
  std::vector<std::pair<std::size_t, std::size_t>> arrow_ends_;
  QuiverWithPotential qp_;
};

QuiverWithPotential quiver_from_triangulation(const Triangulation& t);

struct LemmaFixture {
  Quiver quiver;
  Representation bottom;  // M_i
  Representation middle;  // Y
  Representation top;     // M_beta
  Morphism f;
  Morphism g;
};

// Linearly oriented D_n quiver (arrows k+1 -> k, n-1 -> n-2, n -> n-2) with
// the explicit extension family for 1 < r < s < i < n-1.
LemmaFixture linear_D_fixture(int n, int r, int s, int i, const Field& field);

}  // namespace pdisk
