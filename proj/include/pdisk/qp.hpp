#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdisk/matrix.hpp"

namespace pdisk {

struct Arrow {
  std::string label;
  int from = 0;
  int to = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<int> vertices, std::vector<Arrow> arrows);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  std::size_t vertex_index(int label) const;
  std::size_t arrow_index(const std::string& label) const;
  std::size_t source(std::size_t arrow) const { return src_[arrow]; }
  std::size_t target(std::size_t arrow) const { return dst_[arrow]; }

  bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

 private:
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> src_, dst_;
  std::map<int, std::size_t> vindex_;
  std::map<std::string, std::size_t> aindex_;
};

// Arrow indices; a path a1 a2 ... ad is traversed a1 first.
using Path = std::vector<std::size_t>;

struct PathTerm {
  Scalar coeff;
  Path path;
};

struct Potential {
  std::vector<PathTerm> terms;  // cycles in canonical rotation

  // Validates the cycle, rotates it to canonical form, merges like terms.
  void add(const Quiver& q, const Scalar& coeff, Path cycle);
  bool empty() const { return terms.empty(); }
};

Path canonical_rotation(const Path& cycle);

// Sum over occurrences of `arrow` of the rotated remainder path.
std::vector<PathTerm> cyclic_derivative(const Quiver& q, const Potential& p, std::size_t arrow);

struct Representation {
  Field field;
  std::vector<std::size_t> dims;  // by vertex index
  std::vector<Matrix> mats;       // by arrow index, dims[target] x dims[source]

  static Representation zero(const Quiver& q, const Field& f);
  void check(const Quiver& q) const;
  std::size_t total_dim() const;
  Representation direct_sum(const Representation& o) const;
  bool operator==(const Representation&) const = default;
};

Representation simple_module(const Quiver& q, const Field& f, std::size_t vertex);

// Composite map of a path; the empty path at `start` is the identity.
Matrix evaluate_path(const Quiver& q, const Representation& m, const Path& path, std::size_t start = 0);

struct RelationFailure {
  std::string arrow;
  Matrix residual;
};

struct RelationReport {
  bool ok = true;
  std::vector<RelationFailure> failures;
};

RelationReport check_relations(const Representation& m, const Quiver& q, const Potential& p);

struct Morphism {
  std::vector<Matrix> comps;  // by vertex index, dims_N[i] x dims_M[i]
  bool operator==(const Morphism&) const = default;
};

Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& from, const Representation& to);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism combine(const std::vector<Morphism>& basis, const std::vector<Scalar>& coeffs);

bool is_morphism(const Quiver& q, const Representation& m, const Representation& n, const Morphism& f);
std::vector<Morphism> hom_space(const Quiver& q, const Representation& m, const Representation& n);

bool verify_exact(const Representation& a, const Representation& e, const Representation& c, const Morphism& f,
                  const Morphism& g);
bool is_split_mono(const Quiver& q, const Representation& m, const Representation& e, const Morphism& f);
// Some invertible morphism m -> n, if any.
bool is_isomorphic(const Quiver& q, const Representation& m, const Representation& n);

// True when sampled endomorphisms (a basis plus random combinations) are all
// scalar plus nilpotent, so End(m) is local and m indecomposable. A false
// answer means some sampled endomorphism is not of that form.
bool has_local_endomorphisms(const Quiver& q, const Representation& m);

struct SesSearch {
  std::uint64_t seed = 0x5eed;
  int budget = 1000;
  int min_entry = -3;
  int max_entry = 3;
  // Search even when the dimension precondition fails.
  bool ignore_dimensions = false;
};

struct ShortExactSequence {
  Morphism f;
  Morphism g;
};

std::optional<ShortExactSequence> find_ses(const Quiver& q, const Representation& a, const Representation& e,
                                           const Representation& c, const SesSearch& opts = {});

std::vector<std::size_t> socle_dims(const Quiver& q, const Representation& m);
std::vector<std::size_t> top_dims(const Quiver& q, const Representation& m);

}  // namespace pdisk
