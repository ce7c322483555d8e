#include "pdisk/disk.hpp"

#include <algorithm>
#include <set>

namespace pdisk {

PuncturedDisk::PuncturedDisk(int n_points) : n(n_points) {
  if (n < 2) throw std::invalid_argument("disk needs n >= 2 marked points, got " + std::to_string(n));
}

int PuncturedDisk::mod(long x) const {
  long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void PuncturedDisk::check_index(int a) const {
  if (a < 0 || a >= n)
    throw std::out_of_range("boundary index " + std::to_string(a) + " outside 0.." + std::to_string(n - 1));
}

void PuncturedDisk::require_algebraic() const {
  if (n < 4) throw std::invalid_argument("algebraic operations need n >= 4, got n=" + std::to_string(n));
}

std::string tag_name(Tag t) { return t == Tag::plain ? "plain" : "notched"; }

TaggedArc TaggedArc::peripheral(const PuncturedDisk& d, int from, int to) {
  d.check_index(from);
  d.check_index(to);
  if (cw_distance(d, from, to) < 2)
    throw std::invalid_argument("peripheral arc P(" + std::to_string(from) + "," + std::to_string(to) +
                                ") cuts out an unpunctured monogon or bigon");
  return TaggedArc{Kind::peripheral, d.n, from, to, Tag::plain};
}

TaggedArc TaggedArc::radial(const PuncturedDisk& d, int at, Tag t) {
  d.check_index(at);
  return TaggedArc{Kind::radial, d.n, at, 0, t};
}

std::string TaggedArc::str() const {
  if (is_peripheral()) return "P(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return "R(" + std::to_string(a) + (tag == Tag::plain ? ",•)" : ",⋈)");
}

std::string Curve::str() const {
  switch (kind) {
    case Kind::arc: return arc.str();
    case Kind::noose: return "Noose(" + std::to_string(base) + ")";
    case Kind::puncture_loop: return "PunctureLoop";
    case Kind::boundary_segment: return "BoundarySegment";
  }
  return "?";
}

int cw_distance(const PuncturedDisk& d, int a, int b) {
  d.check_index(a);
  d.check_index(b);
  return d.mod(static_cast<long>(b) - a);
}

Lift lift(const TaggedArc& arc) {
  if (arc.is_radial()) return Lift{true, arc.a, arc.a};
  PuncturedDisk d(arc.n);
  return Lift{false, arc.a, static_cast<long>(arc.a) + cw_distance(d, arc.a, arc.b)};
}

Lift noose_lift(const PuncturedDisk& d, int at) {
  d.check_index(at);
  return Lift{false, at, static_cast<long>(at) + d.n};
}

namespace {

bool links(const Lift& x, const Lift& y) {
  if (x.ray && y.ray) return false;
  if (x.ray) return y.lo < x.lo && x.lo < y.hi;
  if (y.ray) return x.lo < y.lo && y.lo < x.hi;
  return (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) || (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int lift_crossings(const Lift& l1, const Lift& l2, int n) {
  if (l1.ray && l2.ray) return 0;
  // Translates of l2 that can meet l1 lie in a bounded window.
  long k_lo = floor_div(l1.lo - l2.hi, n) - 1;
  long k_hi = floor_div(l1.hi - l2.lo, n) + 1;
  int count = 0;
  for (long k = k_lo; k <= k_hi; ++k) {
    Lift t{l2.ray, l2.lo + k * n, l2.hi + k * n};
    if (links(l1, t)) ++count;
  }
  return count;
}

int crossing_number(const TaggedArc& alpha, const TaggedArc& beta) {
  if (alpha.n != beta.n)
    throw std::invalid_argument("arcs live on different disks (n=" + std::to_string(alpha.n) + " vs n=" +
                                std::to_string(beta.n) + ")");
  PuncturedDisk d(alpha.n);
  if (alpha.is_radial() && beta.is_radial()) {
    if (alpha.tag == beta.tag) return 0;
    const TaggedArc& notched = alpha.tag == Tag::notched ? alpha : beta;
    const TaggedArc& plain = alpha.tag == Tag::notched ? beta : alpha;
    return lift_crossings(noose_lift(d, notched.a), lift(plain), d.n);
  }
  return lift_crossings(lift(alpha), lift(beta), d.n);
}

std::optional<std::size_t> Triangulation::index_of(const TaggedArc& a) const {
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i] == a) return i;
  return std::nullopt;
}

Triangulation validate_triangulation(const std::vector<TaggedArc>& arcs, const PuncturedDisk& d) {
  using K = TriangulationError::Kind;
  for (const auto& a : arcs)
    if (a.n != d.n) throw TriangulationError(K::disk_mismatch, "arc " + a.str() + " is not on the n=" + std::to_string(d.n) + " disk");
  std::set<TaggedArc> seen;
  for (const auto& a : arcs)
    if (!seen.insert(a).second) throw TriangulationError(K::duplicate, "duplicate arc " + a.str());
  if (static_cast<int>(arcs.size()) != d.n)
    throw TriangulationError(K::count, "count " + std::to_string(arcs.size()) + " ≠ " + std::to_string(d.n));
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (int e = crossing_number(arcs[i], arcs[j]); e != 0)
        throw TriangulationError(K::crossing, "crossing pair " + arcs[i].str() + " × " + arcs[j].str() +
                                                  " (e=" + std::to_string(e) + ")");
  std::vector<TaggedArc> radials;
  for (const auto& a : arcs)
    if (a.is_radial()) radials.push_back(a);
  Triangulation t{d, arcs, Triangulation::Config::same_tag};
  bool same_tag = radials.size() >= 2 && std::all_of(radials.begin(), radials.end(),
                                                     [&](const TaggedArc& r) { return r.tag == radials[0].tag; });
  if (same_tag) return t;
  if (radials.size() == 2 && radials[0].a == radials[1].a && radials[0].tag != radials[1].tag) {
    t.config = Triangulation::Config::fork;
    return t;
  }
  throw TriangulationError(K::tags, "illegal tag configuration at the puncture (" + std::to_string(radials.size()) +
                                        " radial arcs)");
}

std::vector<int> crossing_vector(const TaggedArc& gamma, const Triangulation& t) {
  std::vector<int> v;
  v.reserve(t.arcs.size());
  for (const auto& a : t.arcs) v.push_back(crossing_number(gamma, a));
  return v;
}

int total_dimension(const std::vector<TaggedArc>& multicurve, const Triangulation& t) {
  int s = 0;
  for (const auto& g : multicurve)
    for (int e : crossing_vector(g, t)) s += e;
  return s;
}

std::vector<TaggedArc> enumerate_tagged_arcs(const PuncturedDisk& d) {
  std::vector<TaggedArc> out;
  for (int a = 0; a < d.n; ++a)
    for (int b = 0; b < d.n; ++b)
      if (cw_distance(d, a, b) >= 2) out.push_back(TaggedArc::peripheral(d, a, b));
  for (int a = 0; a < d.n; ++a) {
    out.push_back(TaggedArc::radial(d, a, Tag::plain));
    out.push_back(TaggedArc::radial(d, a, Tag::notched));
  }
  return out;
}

TaggedArc tau_rotate(const TaggedArc& arc) {
  PuncturedDisk d(arc.n);
  if (arc.is_peripheral()) return TaggedArc::peripheral(d, d.mod(arc.a + 1), d.mod(arc.b + 1));
  return TaggedArc::radial(d, d.mod(arc.a + 1), flip(arc.tag));
}

TaggedArc shift(const TaggedArc& arc) { return tau_rotate(arc); }

TaggedArc flip_tag(const TaggedArc& arc) {
  if (arc.is_peripheral()) return arc;
  TaggedArc r = arc;
  r.tag = flip(arc.tag);
  return r;
}

}  // namespace pdisk
