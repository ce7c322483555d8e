#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdisk {

// Boundary points are labelled 0..n-1 clockwise. Clockwise is the increasing
// direction of the lift coordinate on the universal cover.
struct PuncturedDisk {
  int n = 0;

  explicit PuncturedDisk(int n_points);
  PuncturedDisk() = default;

  int mod(long x) const;
  void check_index(int a) const;
  // Algebra-facing operations need a type D_n quiver, n >= 4.
  void require_algebraic() const;

  auto operator<=>(const PuncturedDisk&) const = default;
};

enum class Tag : std::uint8_t { plain, notched };

inline Tag flip(Tag t) { return t == Tag::plain ? Tag::notched : Tag::plain; }
std::string tag_name(Tag t);

struct TaggedArc {
  enum class Kind : std::uint8_t { peripheral, radial };

  Kind kind = Kind::radial;
  int n = 0;
  int a = 0;
  int b = 0;  // peripheral only; 0 for radials
  Tag tag = Tag::plain;  // radial only

  static TaggedArc peripheral(const PuncturedDisk& d, int from, int to);
  static TaggedArc radial(const PuncturedDisk& d, int at, Tag t);

  bool is_radial() const { return kind == Kind::radial; }
  bool is_peripheral() const { return kind == Kind::peripheral; }
  PuncturedDisk disk() const { return PuncturedDisk(n); }
  std::string str() const;

  auto operator<=>(const TaggedArc&) const = default;
};

// Curves that may appear transiently during smoothing.
struct Curve {
  enum class Kind : std::uint8_t { arc, noose, puncture_loop, boundary_segment };

  Kind kind = Kind::arc;
  TaggedArc arc{};
  int base = 0;  // noose only

  static Curve of(const TaggedArc& a) { return Curve{Kind::arc, a, 0}; }
  static Curve noose(int at) { return Curve{Kind::noose, {}, at}; }
  static Curve puncture_loop() { return Curve{Kind::puncture_loop, {}, 0}; }
  static Curve boundary_segment() { return Curve{Kind::boundary_segment, {}, 0}; }
  std::string str() const;

  auto operator<=>(const Curve&) const = default;
};

// Lift of a curve to the universal cover: an interval (lo, hi) or a ray at lo.
struct Lift {
  bool ray = false;
  long lo = 0;
  long hi = 0;

  auto operator<=>(const Lift&) const = default;
};

int cw_distance(const PuncturedDisk& d, int a, int b);

Lift lift(const TaggedArc& arc);
Lift noose_lift(const PuncturedDisk& d, int at);

// Number of k with L1 and L2 + k n crossing. Shared endpoints never count.
int lift_crossings(const Lift& l1, const Lift& l2, int n);

int crossing_number(const TaggedArc& alpha, const TaggedArc& beta);

struct Triangulation {
  PuncturedDisk disk;
  std::vector<TaggedArc> arcs;

  // Tag configuration at the puncture.
  enum class Config : std::uint8_t { same_tag, fork };
  Config config = Config::same_tag;

  std::optional<std::size_t> index_of(const TaggedArc& a) const;
  bool contains(const TaggedArc& a) const { return index_of(a).has_value(); }
};

class TriangulationError : public std::runtime_error {
 public:
  enum class Kind : std::uint8_t { disk_mismatch, duplicate, count, crossing, tags };
  TriangulationError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

Triangulation validate_triangulation(const std::vector<TaggedArc>& arcs, const PuncturedDisk& d);

std::vector<int> crossing_vector(const TaggedArc& gamma, const Triangulation& t);
int total_dimension(const std::vector<TaggedArc>& multicurve, const Triangulation& t);

std::vector<TaggedArc> enumerate_tagged_arcs(const PuncturedDisk& d);

TaggedArc tau_rotate(const TaggedArc& arc);
TaggedArc shift(const TaggedArc& arc);
TaggedArc flip_tag(const TaggedArc& arc);

}  // namespace pdisk
