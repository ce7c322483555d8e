#pragma once

#include <string>
#include <vector>

#include "pdisk/disk.hpp"

namespace pdisk {

// Sorted multiset of tagged arcs.
using Multicurve = std::vector<TaggedArc>;

Multicurve make_multicurve(std::vector<TaggedArc> arcs);
std::string multicurve_str(const Multicurve& m);

struct FormalTerm {
  long coeff = 0;
  Multicurve curves;
  bool operator==(const FormalTerm&) const = default;
};

// Nonzero coefficients, distinct sorted terms.
struct FormalSum {
  std::vector<FormalTerm> terms;

  void add(long coeff, Multicurve m);
  bool operator==(const FormalSum&) const = default;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoCrossingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

FormalSum normalize(const std::vector<Curve>& raw, long coeff);

// A lifted open curve from `from` to `to`; |to - from| = L. Lengths in
// (n, 2n) describe a curve with a single self-crossing.
struct OrientedSegment {
  long from = 0;
  long to = 0;
};

// Classifies a lifted segment of length <= n.
Curve classify_segment(const PuncturedDisk& d, long lo, long hi);

struct SelfSmoothing {
  std::vector<Curve> left;
  std::vector<Curve> right;
};

SelfSmoothing smooth_self_sides(const PuncturedDisk& d, const OrientedSegment& kink);
FormalSum smooth_self(const PuncturedDisk& d, const OrientedSegment& kink);

struct SmoothingResult {
  std::vector<Multicurve> plus;
  std::vector<Multicurve> minus;
  // Crossing point ("x", "y", or "p" at the puncture) each entry came from.
  std::vector<std::string> plus_origin;
  std::vector<std::string> minus_origin;
};

SmoothingResult smooth_pair(const TaggedArc& alpha, const TaggedArc& beta);

}  // namespace pdisk
