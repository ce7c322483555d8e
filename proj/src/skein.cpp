#include "pdisk/skein.hpp"

#include <algorithm>

namespace pdisk {

Multicurve make_multicurve(std::vector<TaggedArc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::string multicurve_str(const Multicurve& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + m[i].str();
  return s + "}";
}

void FormalSum::add(long coeff, Multicurve m) {
  m = make_multicurve(std::move(m));
  auto it = std::find_if(terms.begin(), terms.end(), [&](const FormalTerm& t) { return t.curves == m; });
  if (it == terms.end()) {
    if (coeff != 0) terms.push_back({coeff, std::move(m)});
  } else {
    it->coeff += coeff;
    if (it->coeff == 0) terms.erase(it);
  }
  std::sort(terms.begin(), terms.end(),
            [](const FormalTerm& a, const FormalTerm& b) { return a.curves < b.curves; });
}

FormalSum normalize(const std::vector<Curve>& raw, long coeff) {
  Multicurve out;
  for (const auto& c : raw) {
    switch (c.kind) {
      case Curve::Kind::arc:
        out.push_back(c.arc);
        break;
      case Curve::Kind::noose: {
        // The noose's disk size is taken from any arc in the list; nooses
        // never appear alone.
        auto ref = std::find_if(raw.begin(), raw.end(), [](const Curve& x) { return x.kind == Curve::Kind::arc; });
        if (ref == raw.end()) throw InvariantViolation("noose without disk context");
        PuncturedDisk d(ref->arc.n);
        out.push_back(TaggedArc::radial(d, c.base, Tag::notched));
        out.push_back(TaggedArc::radial(d, c.base, Tag::plain));
        break;
      }
      case Curve::Kind::puncture_loop:
        coeff *= 2;
        break;
      case Curve::Kind::boundary_segment:
        break;
    }
  }
  FormalSum s;
  s.add(coeff, std::move(out));
  return s;
}

Curve classify_segment(const PuncturedDisk& d, long lo, long hi) {
  long len = hi - lo;
  if (len <= 0 || len > d.n)
    throw InvariantViolation("segment (" + std::to_string(lo) + "," + std::to_string(hi) + ") is not a simple curve");
  if (len == 1) return Curve::boundary_segment();
  if (len == d.n) return Curve::noose(d.mod(lo));
  return Curve::of(TaggedArc::peripheral(d, d.mod(lo), d.mod(hi)));
}

namespace {

// A piece of a smoothed curve in the cover.
struct Piece {
  bool ray = false;
  long lo = 0;
  long hi = 0;
  Tag tag = Tag::plain;
};

// Nooses expand in place (within an existing multicurve the disk is known).
void append_curve(const PuncturedDisk& d, const Curve& c, Multicurve& out) {
  if (c.kind == Curve::Kind::arc) {
    out.push_back(c.arc);
  } else if (c.kind == Curve::Kind::noose) {
    out.push_back(TaggedArc::radial(d, c.base, Tag::notched));
    out.push_back(TaggedArc::radial(d, c.base, Tag::plain));
  } else if (c.kind != Curve::Kind::boundary_segment) {
    throw InvariantViolation("unexpected closed curve " + c.str());
  }
}

// Right-turn recombination of lifts a and b at their (unique) crossing.
std::vector<Piece> turn_right(const Lift& a, Tag ta, const Lift& b, Tag tb) {
  if (a.ray) return {Piece{false, b.lo, a.lo, {}}, Piece{true, b.hi, b.hi, ta}};
  if (b.ray) return {Piece{true, a.lo, a.lo, tb}, Piece{false, b.lo, a.hi, {}}};
  if (a.lo < b.lo) return {Piece{false, a.lo, b.hi, {}}, Piece{false, b.lo, a.hi, {}}};
  return {Piece{false, b.lo, a.lo, {}}, Piece{false, b.hi, a.hi, {}}};
}

bool links(const Lift& x, const Lift& y) {
  if (x.ray) return y.lo < x.lo && x.lo < y.hi;
  if (y.ray) return x.lo < y.lo && y.lo < x.hi;
  return (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) || (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi);
}

// Resolves the pieces produced at one crossing into multicurves.
std::vector<Multicurve> resolve(const PuncturedDisk& d, const std::vector<Piece>& pieces) {
  Multicurve rest;
  std::optional<Piece> kink;
  for (const auto& p : pieces) {
    if (p.ray) {
      rest.push_back(TaggedArc::radial(d, d.mod(p.lo), p.tag));
    } else if (p.hi - p.lo > d.n) {
      if (kink) throw InvariantViolation("two self-crossing pieces at one point");
      if (p.hi - p.lo >= 2 * d.n) throw InvariantViolation("curve with more than one self-crossing");
      kink = p;
    } else {
      append_curve(d, classify_segment(d, p.lo, p.hi), rest);
    }
  }
  if (!kink) return {make_multicurve(rest)};
  // Loop term opened at the puncture on both sides, then the right term.
  long s = kink->lo, t = kink->hi - d.n;
  Multicurve m1 = rest, m2 = rest, m3 = rest;
  m1.push_back(TaggedArc::radial(d, d.mod(s), Tag::notched));
  m1.push_back(TaggedArc::radial(d, d.mod(t), Tag::plain));
  m2.push_back(TaggedArc::radial(d, d.mod(s), Tag::plain));
  m2.push_back(TaggedArc::radial(d, d.mod(t), Tag::notched));
  append_curve(d, classify_segment(d, t, s + d.n), m3);
  return {make_multicurve(m1), make_multicurve(m2), make_multicurve(m3)};
}

void plus_side(const TaggedArc& alpha, const TaggedArc& beta, std::vector<Multicurve>& out,
               std::vector<std::string>& origin) {
  PuncturedDisk d(alpha.n);
  if (alpha.is_radial() && beta.is_radial()) {
    // Crossing at the puncture; avoid it on the right.
    Multicurve m;
    append_curve(d, classify_segment(d, beta.a, beta.a + cw_distance(d, beta.a, alpha.a)), m);
    out.push_back(make_multicurve(m));
    origin.emplace_back("p");
    return;
  }
  Lift la = lift(alpha), lb = lift(beta);
  struct Hit {
    Lift b;
    double x;
  };
  std::vector<Hit> hits;
  for (long k = -3; k <= 3; ++k) {
    Lift t{lb.ray, lb.lo + k * d.n, lb.hi + k * d.n};
    if (!links(la, t)) continue;
    // Position of the crossing along the cover; only the order matters.
    double x;
    if (la.ray)
      x = static_cast<double>(la.lo);
    else if (t.ray)
      x = static_cast<double>(t.lo);
    else
      x = static_cast<double>(t.lo * t.hi - la.lo * la.hi) / static_cast<double>(t.lo + t.hi - la.lo - la.hi);
    hits.push_back({t, x});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.x < b.x; });
  static const char* names[] = {"x", "y"};
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (auto& m : resolve(d, turn_right(la, alpha.tag, hits[i].b, beta.tag))) {
      out.push_back(std::move(m));
      origin.emplace_back(names[i]);
    }
  }
}

}  // namespace

SelfSmoothing smooth_self_sides(const PuncturedDisk& d, const OrientedSegment& kink) {
  long lo = std::min(kink.from, kink.to), hi = std::max(kink.from, kink.to);
  long len = hi - lo;
  if (len <= d.n || len >= 2 * d.n)
    throw std::invalid_argument("segment of length " + std::to_string(len) + " does not have exactly one self-crossing");
  SelfSmoothing r;
  r.left = {Curve::puncture_loop(), classify_segment(d, lo, hi - d.n)};
  r.right = {classify_segment(d, hi - d.n, lo + d.n)};
  if (kink.from > kink.to) std::swap(r.left, r.right);
  return r;
}

FormalSum smooth_self(const PuncturedDisk& d, const OrientedSegment& kink) {
  auto sides = smooth_self_sides(d, kink);
  FormalSum s;
  for (const auto* side : {&sides.left, &sides.right})
    for (const auto& t : normalize(*side, 1).terms) s.add(t.coeff, t.curves);
  return s;
}

SmoothingResult smooth_pair(const TaggedArc& alpha, const TaggedArc& beta) {
  int e = crossing_number(alpha, beta);
  if (e == 0) throw NoCrossingError("arcs " + alpha.str() + " and " + beta.str() + " do not cross");
  SmoothingResult r;
  plus_side(alpha, beta, r.plus, r.plus_origin);
  plus_side(beta, alpha, r.minus, r.minus_origin);
  std::size_t expect = e == 1 ? 1 : 4;
  if (r.plus.size() != expect || r.minus.size() != expect)
    throw InvariantViolation("smoothing " + alpha.str() + " × " + beta.str() + " produced " +
                             std::to_string(r.plus.size()) + "/" + std::to_string(r.minus.size()) + " multicurves");
  return r;
}

}  // namespace pdisk
