#pragma once

#include <map>
#include <string>
#include <vector>

#include "pdisk/io.hpp"

namespace pdisk::io {

// One line of a verification report.
struct Check {
  std::string item;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const;
  Json to_json() const;
  std::string text() const;
};

// Documents consumed by verify-qp.
struct QpData {
  Quiver quiver;
  Potential potential;
  std::map<std::string, Representation> reps;  // by name
  struct Sequence {
    std::string name, start, middle, end;
    Morphism f, g;
  };
  std::vector<Sequence> sequences;
};

QpData qp_data_from_json(const Json& quiver, const Json& potential, const Json& reps, const Json& sequences,
                         const Field& fallback = Field::rationals());

// check_relations on every representation, then exactness and non-splitting
// of every sequence. Sequences are expected to be non-split.
VerifyReport verify_qp(const QpData& d);

struct CandidateExpectation {
  std::string label;
  Multicurve arcs;
  int d_c = 0;
  std::string verdict;
  std::vector<std::size_t> middle_dims;  // empty when not given
};

struct FixtureBundle {
  std::string name;
  Triangulation triangulation;
  TaggedArc alpha, beta;
  std::size_t vertices = 0, arrows = 0;
  int e = 0;
  int d_pair = 0;
  std::vector<std::size_t> dims_alpha, dims_beta;
  std::vector<CandidateExpectation> plus;
};

FixtureBundle bundle_from_json(const Json& j);

// Runs the full pipeline on the bundle and compares with its expectations.
VerifyReport check_bundle(const FixtureBundle& b, const Field& f = Field::rationals(), const SesSearch& search = {});

// Verdict lines for a lemma fixture: relations, exactness, non-splitting.
VerifyReport check_lemma(const LemmaFixture& fx);

}  // namespace pdisk::io
