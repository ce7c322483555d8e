#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdisk/arcrep.hpp"

namespace pdisk {

// All tagged triangulations of the disk, found by backtracking over
// pairwise compatible arcs.
std::vector<Triangulation> enumerate_triangulations(const PuncturedDisk& d);

int ext_dimension(const TaggedArc& alpha, const TaggedArc& beta);
SmoothingResult middle_term_candidates(const TaggedArc& alpha, const TaggedArc& beta);

struct CandidateReport {
  Multicurve curve;
  std::string side;    // "plus" or "minus"
  std::string origin;  // crossing point the candidate came from
  int d_c = 0;
  int d_pair = 0;
  bool ses = false;  // d_c == d_pair
  Representation start, middle, end;
  std::optional<ShortExactSequence> sequence;
  std::optional<bool> non_split;
};

struct ExtensionReport {
  TaggedArc alpha, beta;
  int e = 0;
  Representation m_alpha, m_beta;
  std::vector<CandidateReport> candidates;
};

class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws SearchFailure when a candidate passes the dimension criterion but
// no sequence is found, unless `strict` is false.
ExtensionReport analyze_extension(const TriangulationModel& m, const TaggedArc& alpha, const TaggedArc& beta,
                                  const Field& f = Field::rationals(), const SesSearch& search = {},
                                  bool strict = true);

struct TriangleTriple {
  TaggedArc alpha;
  Multicurve middle;
  TaggedArc beta;
  std::string origin;
  bool operator==(const TriangleTriple&) const = default;
};

std::vector<TriangleTriple> enumerate_triangles(const PuncturedDisk& d);

struct MiddleConstraintReport {
  bool socle_ok = false;  // (i) socle supported on the allowed vertices
  bool top_ok = false;    // (i) top supported on the allowed vertices
  bool hom_ok = false;    // (ii) Hom(bottom, middle) and Hom(middle, top) nonzero
  bool dims_ok = false;   // (iii) dim middle = dim bottom + dim top
  std::vector<std::size_t> socle, top;
  std::size_t hom_in = 0, hom_out = 0;
  bool all() const { return socle_ok && top_ok && hom_ok && dims_ok; }
};

// Vertex sets are vertex indices of the quiver.
MiddleConstraintReport validate_middle_constraints(const Quiver& q, const Representation& bottom,
                                                   const Representation& middle, const Representation& top,
                                                   const std::set<std::size_t>& socle_allowed,
                                                   const std::set<std::size_t>& top_allowed);

}  // namespace pdisk
