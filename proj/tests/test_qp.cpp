#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "pdisk/arcrep.hpp"

using namespace pdisk;

namespace {

const Field Q = Field::rationals();

Matrix M(const std::vector<std::vector<long>>& rows, std::size_t cols = 0) { return Matrix::from_ints(Q, rows, cols); }

std::size_t arrow_by_ends(const Quiver& q, int from, int to) {
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (q.arrows()[a].from == from && q.arrows()[a].to == to) return a;
  throw std::out_of_range("no arrow");
}

bool mentions(const std::vector<PathTerm>& terms, std::size_t arrow) {
  for (const auto& t : terms)
    for (auto a : t.path)
      if (a == arrow) return true;
  return false;
}

Matrix flatten(const Morphism& m) {
  std::vector<Scalar> v;
  for (const auto& c : m.comps)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) v.push_back(c(r, k));
  Matrix out(Q, v.size(), 1);
  for (std::size_t k = 0; k < v.size(); ++k) out(k, 0) = v[k];
  return out;
}

bool in_span(const std::vector<Morphism>& basis, const Morphism& target) {
  Matrix t = flatten(target);
  Matrix a(Q, t.rows(), 0);
  for (const auto& b : basis) a = a.hstack(flatten(b));
  return a.solve(t).has_value();
}

// Random invertible matrix: a product of elementary operations.
Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  Matrix g = Matrix::identity(Q, n);
  std::uniform_int_distribution<long> val(-3, 3);
  std::uniform_int_distribution<std::size_t> idx(0, n ? n - 1 : 0);
  for (int step = 0; step < 6 && n > 1; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Matrix e = Matrix::identity(Q, n);
    e(i, j) = Scalar(Q, val(rng));
    g = g * e;
  }
  for (std::size_t i = 0; i < n; ++i) {
    long s = val(rng);
    Matrix e = Matrix::identity(Q, n);
    e(i, i) = Scalar(Q, s == 0 ? 2 : s);
    g = g * e;
  }
  return g;
}

Representation conjugate(const Quiver& q, const Representation& m, const std::vector<Matrix>& g) {
  Representation out = m;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto inv = g[q.source(a)].solve(Matrix::identity(Q, m.dims[q.source(a)]));
    out.mats[a] = g[q.target(a)] * m.mats[a] * *inv;
  }
  return out;
}

}  // namespace

TEST(Field, ParseAndArithmetic) {
  EXPECT_TRUE(Field::parse("q").is_rational());
  EXPECT_EQ(Field::parse("fp:7").characteristic(), 7);
  EXPECT_THROW(Field::parse("fp:4"), FieldError);
  EXPECT_THROW(Field::parse("r"), FieldError);
  EXPECT_EQ(Scalar::parse(Q, "3/6").str(), "1/2");
  EXPECT_EQ(Scalar::parse(Q, "4/-6").str(), "-2/3");
  EXPECT_EQ(Scalar::parse(Q, "-0").str(), "0");
  Field f7 = Field::prime(7);
  EXPECT_EQ(Scalar::parse(f7, "1/2").str(), "4");
  EXPECT_THROW(Scalar::parse(f7, "1/7"), FieldError);
  EXPECT_THROW(Scalar(Q, 1) + Scalar(f7, 1), FieldError);
  EXPECT_EQ((Scalar::ratio(Q, 1, 3) + Scalar::ratio(Q, 1, 6)).str(), "1/2");
}

TEST(Matrix, RankKernelSolve) {
  Matrix a = M({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(a.rank(), 2u);
  Matrix k = a.kernel();
  EXPECT_EQ(k.cols(), 1u);
  EXPECT_TRUE((a * k).is_zero());
  auto x = a.solve(M({{6}, {12}, {2}}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, M({{6}, {12}, {2}}));
  EXPECT_FALSE(a.solve(M({{1}, {0}, {0}})).has_value());
  EXPECT_EQ(Matrix(Q, 0, 3).rank(), 0u);
}

TEST(CyclicDerivative, Basic) {
  Quiver tri({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}});
  Potential p;
  p.add(tri, Scalar(Q, 1), {0, 1, 2});
  auto da = cyclic_derivative(tri, p, 0);
  ASSERT_EQ(da.size(), 1u);
  EXPECT_EQ(da[0].path, (Path{1, 2}));

  Quiver loops({1}, {{"a", 1, 1}, {"b", 1, 1}});
  Potential aba;
  aba.add(loops, Scalar(Q, 1), {0, 1, 0});
  auto d = cyclic_derivative(loops, aba, 0);
  std::vector<Path> got;
  for (auto& t : d) got.push_back(t.path);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<Path>{{0, 1}, {1, 0}}));

  Quiver with_d({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}, {"d", 1, 3}});
  Potential p2;
  p2.add(with_d, Scalar(Q, 1), {0, 1, 2});
  EXPECT_TRUE(cyclic_derivative(with_d, p2, 3).empty());
  EXPECT_THROW(p2.add(with_d, Scalar(Q, 1), {0, 3}), std::invalid_argument);
}

TEST(CyclicDerivative, RotationInvariant) {
  TriangulationModel m(testing_support::example1_tau());
  const auto& q = m.qp().quiver;
  const auto& base = m.qp().potential;
  Potential rotated;
  for (const auto& t : base.terms) {
    Path r(t.path.begin() + 1, t.path.end());
    r.push_back(t.path.front());
    rotated.add(q, t.coeff, r);
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto x = cyclic_derivative(q, base, a), y = cyclic_derivative(q, rotated, a);
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      EXPECT_EQ(x[k].path, y[k].path);
      EXPECT_EQ(x[k].coeff, y[k].coeff);
    }
  }
}

TEST(Paths, Evaluate) {
  TriangulationModel m(testing_support::example1_tau());
  const auto& q = m.qp().quiver;
  auto ma = arc_representation(TaggedArc::peripheral(PuncturedDisk(7), 5, 3), m);
  // 2 -> 4 -> 6 passes through vertex 6 where M_alpha vanishes.
  Matrix p = evaluate_path(q, ma, {arrow_by_ends(q, 2, 4), arrow_by_ends(q, 4, 6)});
  EXPECT_EQ(p.rows(), 0u);
  EXPECT_EQ(p.cols(), 1u);
  EXPECT_EQ(evaluate_path(q, ma, {}, q.vertex_index(2)), Matrix::identity(Q, 1));
  std::size_t a1 = arrow_by_ends(q, 2, 1);
  EXPECT_EQ(evaluate_path(q, ma, {a1}), ma.mats[a1]);
  EXPECT_THROW(evaluate_path(q, ma, {arrow_by_ends(q, 2, 4), a1}), std::invalid_argument);
}

TEST(Relations, PerturbationIsLocalised) {
  TriangulationModel m(testing_support::example1_tau());
  const auto& qp = m.qp();
  // M_alpha vanishes at 3 and 6, and every relation passes through one of
  // them, so use the middle term (a) which has full support
  PuncturedDisk d7(7);
  auto ma = multicurve_representation(
      make_multicurve({TaggedArc::radial(d7, 5, Tag::notched), TaggedArc::radial(d7, 6, Tag::plain), TaggedArc::peripheral(d7, 1, 3)}), m);
  ASSERT_EQ(ma.dims, (std::vector<std::size_t>{1, 2, 1, 1, 2, 1, 1}));
  ASSERT_TRUE(check_relations(ma, qp.quiver, qp.potential).ok);
  EXPECT_TRUE(check_relations(Representation::zero(qp.quiver, Q), qp.quiver, qp.potential).ok);
  int failing = 0;
  for (std::size_t a = 0; a < qp.quiver.arrow_count(); ++a)
    for (std::size_t r = 0; r < ma.mats[a].rows(); ++r)
      for (std::size_t c = 0; c < ma.mats[a].cols(); ++c) {
        Representation bad = ma;
        bad.mats[a](r, c) += Scalar(Q, 1);
        auto rep = check_relations(bad, qp.quiver, qp.potential);
        if (!rep.ok) ++failing;
        for (const auto& f : rep.failures) {
          std::size_t b = qp.quiver.arrow_index(f.arrow);
          EXPECT_TRUE(mentions(cyclic_derivative(qp.quiver, qp.potential, b), a))
              << "perturbing " << qp.quiver.arrows()[a].label << " broke " << f.arrow;
          EXPECT_FALSE(f.residual.is_zero());
        }
      }
  EXPECT_GT(failing, 0);
}

TEST(Hom, BasicFacts) {
  TriangulationModel m(testing_support::example1_tau());
  const auto& q = m.qp().quiver;
  auto ma = arc_representation(TaggedArc::peripheral(PuncturedDisk(7), 5, 3), m);
  auto ends = hom_space(q, ma, ma);
  ASSERT_FALSE(ends.empty());
  EXPECT_TRUE(in_span(ends, identity_morphism(ma)));
  EXPECT_TRUE(is_morphism(q, ma, ma, identity_morphism(ma)));
  EXPECT_TRUE(has_local_endomorphisms(q, ma));
  EXPECT_FALSE(has_local_endomorphisms(q, ma.direct_sum(ma)));

  // vertices 1 and 3 are not adjacent
  auto s1 = simple_module(q, Q, q.vertex_index(1)), s3 = simple_module(q, Q, q.vertex_index(3));
  EXPECT_TRUE(hom_space(q, s1, s3).empty());
}

TEST(Hom, BaseChangeInvariance) {
  std::mt19937_64 rng(7);
  for (auto tau : {testing_support::example1_tau(), testing_support::example2_tau()}) {
    TriangulationModel m(tau);
    const auto& q = m.qp().quiver;
    auto arcs = enumerate_tagged_arcs(tau.disk);
    std::vector<Representation> reps;
    for (const auto& j : arcs)
      if (!tau.contains(j) && reps.size() < 6) reps.push_back(arc_representation(j, m));
    for (const auto& a : reps)
      for (const auto& b : reps) {
        std::vector<Matrix> ga, gb;
        for (auto d : a.dims) ga.push_back(random_invertible(rng, d));
        for (auto d : b.dims) gb.push_back(random_invertible(rng, d));
        auto a2 = conjugate(q, a, ga), b2 = conjugate(q, b, gb);
        EXPECT_EQ(hom_space(q, a, b).size(), hom_space(q, a2, b2).size());
        EXPECT_TRUE(is_isomorphic(q, a, a2));
      }
  }
}

TEST(Sequences, TrivialCases) {
  TriangulationModel m(testing_support::example1_tau());
  const auto& q = m.qp().quiver;
  auto ma = arc_representation(TaggedArc::peripheral(PuncturedDisk(7), 5, 3), m);
  auto mb = arc_representation(TaggedArc::peripheral(PuncturedDisk(7), 1, 6), m);
  auto zero = Representation::zero(q, Q);
  EXPECT_TRUE(verify_exact(ma, ma, zero, identity_morphism(ma), zero_morphism(ma, zero)));
  EXPECT_TRUE(is_split_mono(q, ma, ma, identity_morphism(ma)));

  // inclusion into M (+) X has the projection as retraction
  auto sum = ma.direct_sum(mb);
  Morphism inc = zero_morphism(ma, sum);
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (std::size_t k = 0; k < ma.dims[i]; ++k) inc.comps[i](k, k) = Scalar::one(Q);
  EXPECT_TRUE(is_split_mono(q, ma, sum, inc));
  EXPECT_THROW(is_split_mono(q, ma, zero, zero_morphism(ma, zero)), std::invalid_argument);

  EXPECT_FALSE(find_ses(q, zero, zero, zero).has_value());
  EXPECT_FALSE(find_ses(q, ma, ma, mb).has_value());  // dimensions do not add up
  EXPECT_THROW(verify_exact(ma, mb, ma, identity_morphism(ma), identity_morphism(ma)), std::invalid_argument);
}

TEST(SocleTop, Simples) {
  TriangulationModel m(testing_support::example1_tau());
  const auto& q = m.qp().quiver;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    auto s = simple_module(q, Q, i);
    std::vector<std::size_t> e(q.vertex_count(), 0);
    e[i] = 1;
    EXPECT_EQ(socle_dims(q, s), e);
    EXPECT_EQ(top_dims(q, s), e);
  }
  auto z = Representation::zero(q, Q);
  EXPECT_EQ(socle_dims(q, z), std::vector<std::size_t>(q.vertex_count(), 0));
  EXPECT_EQ(top_dims(q, z), std::vector<std::size_t>(q.vertex_count(), 0));
}

TEST(LemmaFixture, ExactNonSplit) {
  auto fx = linear_D_fixture(8, 2, 4, 6, Q);
  EXPECT_TRUE(verify_exact(fx.bottom, fx.middle, fx.top, fx.f, fx.g));
  EXPECT_TRUE(is_morphism(fx.quiver, fx.bottom, fx.middle, fx.f));
  EXPECT_TRUE(is_morphism(fx.quiver, fx.middle, fx.top, fx.g));
  EXPECT_FALSE(is_split_mono(fx.quiver, fx.bottom, fx.middle, fx.f));
}

TEST(LemmaFixture, AllParametersAndPrimeFields) {
  for (const Field& f : {Q, Field::prime(3), Field::prime(5)})
    for (int n = 6; n <= 10; ++n)
      for (int r = 2; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          for (int i = s + 1; i < n - 1; ++i) {
            auto fx = linear_D_fixture(n, r, s, i, f);
            auto rep = pdisk::io::check_lemma(fx);
            EXPECT_TRUE(rep.ok()) << f.name() << " " << n << " " << r << " " << s << " " << i << "\n" << rep.text();
          }
}

TEST(LemmaFixture, Errors) {
  EXPECT_THROW(linear_D_fixture(8, 2, 4, 6, Field::prime(2)), FieldError);
  EXPECT_THROW(linear_D_fixture(8, 4, 2, 6, Q), std::invalid_argument);
  EXPECT_THROW(linear_D_fixture(8, 2, 4, 7, Q), std::invalid_argument);
}

TEST(LemmaFixture, MiddleConstraints) {
  const int n = 8, r = 2, s = 4, i = 6;
  auto fx = linear_D_fixture(n, r, s, i, Q);
  const auto& q = fx.quiver;
  auto idx = [&](int label) { return q.vertex_index(label); };
  std::set<std::size_t> soc = {idx(1), idx(r + 1), idx(s + 1)};
  std::set<std::size_t> top = {idx(i), idx(n - 1), idx(n)};
  auto rep = validate_middle_constraints(q, fx.bottom, fx.middle, fx.top, soc, top);
  EXPECT_TRUE(rep.socle_ok);
  EXPECT_TRUE(rep.top_ok);
  EXPECT_TRUE(rep.hom_ok);
  EXPECT_TRUE(rep.dims_ok);

  // The split middle term passes the same necessary conditions, yet no
  // non-split sequence through it exists.
  auto split = fx.bottom.direct_sum(fx.top);
  auto srep = validate_middle_constraints(q, fx.bottom, split, fx.top, soc, top);
  EXPECT_TRUE(srep.all());
  EXPECT_FALSE(find_ses(q, fx.bottom, split, fx.top).has_value());

  auto wrong = validate_middle_constraints(q, fx.bottom, fx.bottom, fx.top, soc, top);
  EXPECT_FALSE(wrong.dims_ok);
}
