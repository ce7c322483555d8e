#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdisk/jacobian.hpp"
#include "pdisk/skein.hpp"

namespace pdisk {

class ArcInTriangulation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One basis vector of the arc representation: a crossing of the effective
// curve with a side of the triangulation, carried by one vertex.
struct IntersectionEvent {
  std::size_t vertex = 0;
  std::size_t point_id = 0;  // position along the effective curve
  Side in_side;              // side entered (equal to out_side except at the fork)
  Side out_side;
  std::string parameter;     // exact crossing coordinate along the curve
};

struct ArcRepPlan {
  enum class Effective { arc, noose, truncated_noose };
  Effective effective = Effective::arc;
  Side curve;                            // lifted effective curve
  std::vector<IntersectionEvent> events;  // after truncation, q0 removed
  std::optional<std::size_t> q1;         // event index on the base side
  std::optional<std::size_t> r1;         // event index of the detour start
  std::optional<std::string> q0_parameter;
};

ArcRepPlan plan_arc(const TaggedArc& j, const TriangulationModel& m);
std::vector<IntersectionEvent> intersection_sequence(const TaggedArc& j, const TriangulationModel& m);

Representation arc_representation(const TaggedArc& j, const TriangulationModel& m, const Field& f = Field::rationals());

// Members in the triangulation contribute the zero module when `tau_members_vanish`.
Representation multicurve_representation(const Multicurve& c, const TriangulationModel& m,
                                         const Field& f = Field::rationals(), bool tau_members_vanish = false);

}  // namespace pdisk
