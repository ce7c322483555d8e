#include "pdisk/qp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pdisk {

Quiver::Quiver(std::vector<int> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vindex_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex " + std::to_string(vertices_[i]));
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& ar = arrows_[a];
    if (!aindex_.emplace(ar.label, a).second) throw std::invalid_argument("duplicate arrow label " + ar.label);
    src_.push_back(vertex_index(ar.from));
    dst_.push_back(vertex_index(ar.to));
  }
}

std::size_t Quiver::vertex_index(int label) const {
  auto it = vindex_.find(label);
  if (it == vindex_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(label));
  return it->second;
}

std::size_t Quiver::arrow_index(const std::string& label) const {
  auto it = aindex_.find(label);
  if (it == aindex_.end()) throw std::invalid_argument("unknown arrow " + label);
  return it->second;
}

Path canonical_rotation(const Path& cycle) {
  Path best = cycle;
  for (std::size_t r = 1; r < cycle.size(); ++r) {
    Path rot(cycle.begin() + static_cast<long>(r), cycle.end());
    rot.insert(rot.end(), cycle.begin(), cycle.begin() + static_cast<long>(r));
    best = std::min(best, rot);
  }
  return best;
}

void Potential::add(const Quiver& q, const Scalar& coeff, Path cycle) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle in potential");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] >= q.arrow_count()) throw std::invalid_argument("cycle uses unknown arrow");
    std::size_t next = cycle[(i + 1) % cycle.size()];
    if (q.target(cycle[i]) != q.source(next))
      throw std::invalid_argument("potential term is not a cycle at arrow " + q.arrows()[cycle[i]].label);
  }
  cycle = canonical_rotation(cycle);
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->path != cycle) continue;
    it->coeff += coeff;
    if (it->coeff.is_zero()) terms.erase(it);
    return;
  }
  if (!coeff.is_zero()) terms.push_back({coeff, std::move(cycle)});
}

std::vector<PathTerm> cyclic_derivative(const Quiver& q, const Potential& p, std::size_t arrow) {
  if (arrow >= q.arrow_count()) throw std::invalid_argument("unknown arrow index " + std::to_string(arrow));
  std::vector<PathTerm> out;
  for (const auto& t : p.terms) {
    const Path& c = t.path;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != arrow) continue;
      Path rest(c.begin() + static_cast<long>(i) + 1, c.end());
      rest.insert(rest.end(), c.begin(), c.begin() + static_cast<long>(i));
      auto it = std::find_if(out.begin(), out.end(), [&](const PathTerm& x) { return x.path == rest; });
      if (it == out.end())
        out.push_back({t.coeff, std::move(rest)});
      else
        it->coeff += t.coeff;
    }
  }
  std::erase_if(out, [](const PathTerm& x) { return x.coeff.is_zero(); });
  return out;
}

Representation Representation::zero(const Quiver& q, const Field& f) {
  Representation r{f, std::vector<std::size_t>(q.vertex_count(), 0), {}};
  for (std::size_t a = 0; a < q.arrow_count(); ++a) r.mats.emplace_back(f, 0, 0);
  return r;
}

void Representation::check(const Quiver& q) const {
  if (dims.size() != q.vertex_count()) throw std::invalid_argument("representation has wrong vertex count");
  if (mats.size() != q.arrow_count()) throw std::invalid_argument("representation has wrong arrow count");
  for (std::size_t a = 0; a < mats.size(); ++a) {
    const auto& m = mats[a];
    if (!(m.field() == field)) throw FieldError("matrix of arrow " + q.arrows()[a].label + " over another field");
    if (m.rows() != dims[q.target(a)] || m.cols() != dims[q.source(a)])
      throw std::invalid_argument("matrix of arrow " + q.arrows()[a].label + " is " + std::to_string(m.rows()) +
                                  "x" + std::to_string(m.cols()) + ", expected " + std::to_string(dims[q.target(a)]) +
                                  "x" + std::to_string(dims[q.source(a)]));
  }
}

std::size_t Representation::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

Representation Representation::direct_sum(const Representation& o) const {
  if (!(field == o.field)) throw FieldError("direct sum over different fields");
  if (dims.size() != o.dims.size() || mats.size() != o.mats.size())
    throw std::invalid_argument("direct sum of representations of different quivers");
  Representation r{field, dims, {}};
  for (std::size_t i = 0; i < dims.size(); ++i) r.dims[i] += o.dims[i];
  for (std::size_t a = 0; a < mats.size(); ++a) r.mats.push_back(mats[a].block_diag(o.mats[a]));
  return r;
}

Representation simple_module(const Quiver& q, const Field& f, std::size_t vertex) {
  Representation r = Representation::zero(q, f);
  r.dims.at(vertex) = 1;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) r.mats[a] = Matrix(f, r.dims[q.target(a)], r.dims[q.source(a)]);
  return r;
}

Matrix evaluate_path(const Quiver& q, const Representation& m, const Path& path, std::size_t start) {
  if (path.empty()) return Matrix::identity(m.field, m.dims.at(start));
  Matrix acc = Matrix::identity(m.field, m.dims.at(q.source(path[0])));
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0 && q.target(path[i - 1]) != q.source(path[i]))
      throw std::invalid_argument("path not composable at arrow " + q.arrows()[path[i]].label);
    acc = m.mats.at(path[i]) * acc;
  }
  return acc;
}

RelationReport check_relations(const Representation& m, const Quiver& q, const Potential& p) {
  m.check(q);
  RelationReport rep;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    Matrix res(m.field, m.dims[q.source(a)], m.dims[q.target(a)]);
    for (const auto& t : cyclic_derivative(q, p, a))
      res = res + evaluate_path(q, m, t.path, q.target(a)).scaled(Scalar::parse(m.field, t.coeff.str()));
    if (!res.is_zero()) {
      rep.ok = false;
      rep.failures.push_back({q.arrows()[a].label, res});
    }
  }
  return rep;
}

Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (auto d : m.dims) f.comps.push_back(Matrix::identity(m.field, d));
  return f;
}

Morphism zero_morphism(const Representation& from, const Representation& to) {
  Morphism f;
  for (std::size_t i = 0; i < from.dims.size(); ++i) f.comps.emplace_back(from.field, to.dims[i], from.dims[i]);
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.comps.size() != f.comps.size()) throw std::invalid_argument("composing morphisms of different quivers");
  Morphism h;
  for (std::size_t i = 0; i < f.comps.size(); ++i) h.comps.push_back(g.comps[i] * f.comps[i]);
  return h;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<Scalar>& coeffs) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  Morphism h = basis[0];
  for (auto& c : h.comps) c = c.scaled(coeffs[0]);
  for (std::size_t k = 1; k < basis.size(); ++k)
    for (std::size_t i = 0; i < h.comps.size(); ++i) h.comps[i] = h.comps[i] + basis[k].comps[i].scaled(coeffs[k]);
  return h;
}

namespace {

void check_shapes(const Representation& m, const Representation& n, const Morphism& f, const char* what) {
  if (f.comps.size() != m.dims.size() || m.dims.size() != n.dims.size())
    throw std::invalid_argument(std::string(what) + ": vertex count mismatch");
  for (std::size_t i = 0; i < f.comps.size(); ++i)
    if (f.comps[i].rows() != n.dims[i] || f.comps[i].cols() != m.dims[i])
      throw std::invalid_argument(std::string(what) + ": component " + std::to_string(i) + " is " +
                                  std::to_string(f.comps[i].rows()) + "x" + std::to_string(f.comps[i].cols()) +
                                  ", expected " + std::to_string(n.dims[i]) + "x" + std::to_string(m.dims[i]));
}

void same_setting(const Representation& m, const Representation& n) {
  if (!(m.field == n.field)) throw FieldError("representations over different fields");
  if (m.dims.size() != n.dims.size() || m.mats.size() != n.mats.size())
    throw std::invalid_argument("representations of different quivers");
}

}  // namespace

bool is_morphism(const Quiver& q, const Representation& m, const Representation& n, const Morphism& f) {
  check_shapes(m, n, f, "is_morphism");
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (!(f.comps[q.target(a)] * m.mats[a] == n.mats[a] * f.comps[q.source(a)])) return false;
  return true;
}

std::vector<Morphism> hom_space(const Quiver& q, const Representation& m, const Representation& n) {
  same_setting(m, n);
  const Field& fld = m.field;
  std::size_t nv = q.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) off[i + 1] = off[i] + n.dims[i] * m.dims[i];
  std::size_t unknowns = off[nv];
  if (unknowns == 0) return {};
  std::size_t eqs = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) eqs += n.dims[q.target(a)] * m.dims[q.source(a)];
  Matrix sys(fld, eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::size_t s = q.source(a), t = q.target(a);
    const Matrix& pm = m.mats[a];
    const Matrix& pn = n.mats[a];
    for (std::size_t r = 0; r < n.dims[t]; ++r)
      for (std::size_t c = 0; c < m.dims[s]; ++c, ++row) {
        // (h_t pm)[r][c] - (pn h_s)[r][c]
        for (std::size_t k = 0; k < m.dims[t]; ++k)
          if (!pm(k, c).is_zero()) sys(row, off[t] + r * m.dims[t] + k) += pm(k, c);
        for (std::size_t k = 0; k < n.dims[s]; ++k)
          if (!pn(r, k).is_zero()) sys(row, off[s] + k * m.dims[s] + c) -= pn(r, k);
      }
  }
  Matrix ker = sys.kernel();
  std::vector<Morphism> basis;
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    Morphism h;
    for (std::size_t i = 0; i < nv; ++i) {
      Matrix c(fld, n.dims[i], m.dims[i]);
      for (std::size_t r = 0; r < n.dims[i]; ++r)
        for (std::size_t k = 0; k < m.dims[i]; ++k) c(r, k) = ker(off[i] + r * m.dims[i] + k, b);
      h.comps.push_back(std::move(c));
    }
    basis.push_back(std::move(h));
  }
  return basis;
}

bool verify_exact(const Representation& a, const Representation& e, const Representation& c, const Morphism& f,
                  const Morphism& g) {
  check_shapes(a, e, f, "verify_exact(f)");
  check_shapes(e, c, g, "verify_exact(g)");
  for (std::size_t i = 0; i < e.dims.size(); ++i) {
    std::size_t rf = f.comps[i].rank(), rg = g.comps[i].rank();
    if (rf != a.dims[i] || rg != c.dims[i] || rf + rg != e.dims[i]) return false;
    if (!(g.comps[i] * f.comps[i]).is_zero()) return false;
  }
  return true;
}

bool is_split_mono(const Quiver& q, const Representation& m, const Representation& e, const Morphism& f) {
  check_shapes(m, e, f, "is_split_mono");
  for (std::size_t i = 0; i < f.comps.size(); ++i)
    if (f.comps[i].rank() != m.dims[i]) throw std::invalid_argument("is_split_mono: f is not injective");
  if (m.total_dim() == 0) return true;
  auto rs = hom_space(q, e, m);
  // Solve sum_k c_k (r_k f) = id as a linear system on the flattened components.
  std::size_t len = 0;
  for (auto d : m.dims) len += d * d;
  Matrix sys(m.field, len, rs.size());
  Matrix rhs(m.field, len, 1);
  for (std::size_t k = 0; k <= rs.size(); ++k) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
      Matrix blk = k < rs.size() ? rs[k].comps[i] * f.comps[i] : Matrix::identity(m.field, m.dims[i]);
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c, ++row) (k < rs.size() ? sys(row, k) : rhs(row, 0)) = blk(r, c);
    }
  }
  return sys.solve(rhs).has_value();
}

bool is_isomorphic(const Quiver& q, const Representation& m, const Representation& n) {
  same_setting(m, n);
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  auto basis = hom_space(q, m, n);
  if (basis.empty()) return false;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<Scalar> cs;
    for (std::size_t k = 0; k < basis.size(); ++k) cs.emplace_back(m.field, dist(rng));
    Morphism h = combine(basis, cs);
    bool inv = true;
    for (std::size_t i = 0; i < h.comps.size() && inv; ++i) inv = h.comps[i].rank() == m.dims[i];
    if (inv) return true;
  }
  return false;
}

bool has_local_endomorphisms(const Quiver& q, const Representation& m) {
  const std::size_t dim = m.total_dim();
  if (dim == 0) return false;
  Scalar sdim(m.field, static_cast<long>(dim));
  if (sdim == Scalar::zero(m.field)) throw FieldError("dimension " + std::to_string(dim) + " vanishes in " + m.field.name());
  auto basis = hom_space(q, m, m);
  std::vector<Morphism> samples = basis;
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int k = 0; k < 8; ++k) {
    std::vector<Scalar> cs;
    for (std::size_t i = 0; i < basis.size(); ++i) cs.emplace_back(m.field, dist(rng));
    samples.push_back(combine(basis, cs));
  }
  for (const auto& h : samples) {
    Scalar tr = Scalar::zero(m.field);
    for (std::size_t i = 0; i < h.comps.size(); ++i)
      for (std::size_t r = 0; r < m.dims[i]; ++r) tr += h.comps[i](r, r);
    Scalar lambda = tr / sdim;
    // h - lambda must be nilpotent at every vertex.
    for (std::size_t i = 0; i < h.comps.size(); ++i) {
      if (m.dims[i] == 0) continue;
      Matrix x = h.comps[i] - Matrix::identity(m.field, m.dims[i]).scaled(lambda);
      Matrix p = x;
      for (std::size_t e = 1; e < m.dims[i]; ++e) p = p * x;
      if (!p.is_zero()) return false;
    }
  }
  return true;
}

std::optional<ShortExactSequence> find_ses(const Quiver& q, const Representation& a, const Representation& e,
                                           const Representation& c, const SesSearch& opts) {
  same_setting(a, e);
  same_setting(e, c);
  if (!opts.ignore_dimensions)
    for (std::size_t i = 0; i < e.dims.size(); ++i)
      if (e.dims[i] != a.dims[i] + c.dims[i]) return std::nullopt;
  auto fs = hom_space(q, a, e);
  auto gs = hom_space(q, e, c);
  auto accept = [&](const Morphism& f, const Morphism& g) {
    return verify_exact(a, e, c, f, g) && !is_split_mono(q, a, e, f);
  };
  auto zero_f = zero_morphism(a, e), zero_g = zero_morphism(e, c);
  std::vector<Morphism> fcands = fs.empty() ? std::vector<Morphism>{zero_f} : fs;
  std::vector<Morphism> gcands = gs.empty() ? std::vector<Morphism>{zero_g} : gs;
  for (const auto& f : fcands)
    for (const auto& g : gcands)
      if (accept(f, g)) return ShortExactSequence{f, g};
  if (fs.empty() && gs.empty()) return std::nullopt;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> dist(opts.min_entry, opts.max_entry);
  auto random_in = [&](const std::vector<Morphism>& basis, const Morphism& zero) {
    if (basis.empty()) return zero;
    std::vector<Scalar> cs;
    for (std::size_t k = 0; k < basis.size(); ++k) cs.emplace_back(a.field, dist(rng));
    return combine(basis, cs);
  };
  // Morphisms g in span(gs) with g f = 0, as a basis.
  auto annihilators = [&](const Morphism& f) {
    std::vector<Morphism> prods;
    for (const auto& g : gs) prods.push_back(compose(g, f));
    std::size_t len = 0;
    for (const auto& c : prods[0].comps) len += c.rows() * c.cols();
    Matrix sys(a.field, len, gs.size());
    for (std::size_t k = 0; k < gs.size(); ++k) {
      std::size_t row = 0;
      for (const auto& c : prods[k].comps)
        for (std::size_t r = 0; r < c.rows(); ++r)
          for (std::size_t cc = 0; cc < c.cols(); ++cc, ++row) sys(row, k) = c(r, cc);
    }
    Matrix ker = sys.kernel();
    std::vector<Morphism> out;
    for (std::size_t b = 0; b < ker.cols(); ++b) {
      std::vector<Scalar> cs;
      for (std::size_t k = 0; k < gs.size(); ++k) cs.push_back(ker(k, b));
      out.push_back(combine(gs, cs));
    }
    return out;
  };
  auto injective = [&](const Morphism& f) {
    for (std::size_t i = 0; i < f.comps.size(); ++i)
      if (f.comps[i].rank() != a.dims[i]) return false;
    return true;
  };
  for (int t = 0; t < opts.budget; ++t) {
    Morphism f = random_in(fs, zero_f);
    if (gs.empty() || !injective(f)) {
      Morphism g = random_in(gs, zero_g);
      if (accept(f, g)) return ShortExactSequence{f, g};
      continue;
    }
    auto ann = annihilators(f);
    if (ann.empty()) continue;
    Morphism g = random_in(ann, zero_g);
    if (accept(f, g)) return ShortExactSequence{f, g};
  }
  return std::nullopt;
}

std::vector<std::size_t> socle_dims(const Quiver& q, const Representation& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    Matrix stack(m.field, 0, m.dims[i]);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.source(a) == i) stack = stack.vstack(m.mats[a]);
    out.push_back(m.dims[i] - stack.rank());
  }
  return out;
}

std::vector<std::size_t> top_dims(const Quiver& q, const Representation& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    Matrix stack(m.field, m.dims[i], 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.target(a) == i) stack = stack.hstack(m.mats[a]);
    out.push_back(m.dims[i] - stack.rank());
  }
  return out;
}

}  // namespace pdisk
