#include <doctest.h>

#include "support.hpp"

using namespace apolar;
using namespace testing;

namespace {

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PointSet six_points() {
  Scalar i = Scalar::imaginary_unit();
  PointSet p(VarAlphabet{1, 2, 0});
  for (auto q : {pt({0, 1, 0}), pt({i, 1, 0}), pt({-i, 1, 0}), pt({0, 0, 1}), pt({1, 0, 1}), pt({-1, 0, 1})}) p.add(q);
  return p;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("ideals of points") {
    VarAlphabet y{0, 3, 0};
    PointSet coords(y);
    coords.add(pt({1, 0, 0}));
    coords.add(pt({0, 1, 0}));
    coords.add(pt({0, 0, 1}));
    CHECK(ideal_equal(ideal_of_points(coords), ideal(y, {"Y1*Y2", "Y1*Y3", "Y2*Y3"})));

    VarAlphabet a{1, 2, 0};
    PointSet one(a);
    one.add(pt({1, 0, 0}));
    CHECK(ideal_equal(ideal_of_points(one), ideal(a, {"Y1", "Y2"})));

    CHECK(ideal_equal(ideal_of_points(six_points()), ideal(a, {"Y1*Y2", "X1^3+X1*(Y1^2-Y2^2)"})));
  }

  TEST_CASE("random points have generic hilbert functions") {
    std::mt19937_64 rng(51);
    VarAlphabet a{1, 2, 0};
    for (int r = 1; r <= 8; ++r) {
      PointSet p(a);
      while (static_cast<int>(p.size()) < r) p.add(ProjPoint::exact({rand_scalar(rng), rand_scalar(rng), rand_scalar(rng)}));
      std::vector<long> hf = hf_of_points(p, 4);
      for (int d = 0; d <= 4; ++d) CHECK(hf[static_cast<std::size_t>(d)] == std::min<long>(binom(d + 2, 2), r));
      CHECK(degree_of_points(ideal_of_points(p)) == r);
    }
  }

  TEST_CASE("approximate and exact sets agree") {
    PointSet p = six_points();
    CHECK(hf_of_points(p, 4) == hf_of_points(p.to_approx(), 4));
  }

  TEST_CASE("projections") {
    VarAlphabet a{1, 2, 0};
    PointSet one(a);
    one.add(pt({1, 2, 3}));
    PointSet w = project_coordinates(one, {0});
    REQUIRE(w.size() == 1);
    CHECK(w.points()[0].equals(pt({1, Scalar::rational(3, 2)})));

    for (int m = 1; m <= 2; ++m) {
      for (int n = 2; n <= 5; ++n) {
        FamilySpec s = m == 1 ? FamilySpec::m1(n) : FamilySpec::m2(n);
        PointSet pts = family_points(s, PointMode::kExact).points;
        PointSet y = project_points(pts, Block::kX);
        CHECK(y.size() == static_cast<std::size_t>(n));
        CHECK(y.size() <= pts.size());
        CHECK(hf_of_points(y, 2) == std::vector<long>{1, n, n});
      }
      PointSet m2pts = family_points(FamilySpec::m2(3), PointMode::kExact).points;
      PointSet x = project_points(m2pts, Block::kY);
      CHECK(x.size() % 2 == 0);
      CHECK(x.size() <= 6);
    }
    // The m1 hub direction collapses onto the dropped block.
    CHECK_THROWS_AS(project_points(six_points(), Block::kY), Error);
  }

  TEST_CASE("projection agrees with elimination") {
    PointSet p = six_points();
    VarAlphabet a = p.alphabet();
    PointSet w = project_points(p, Block::kX);
    PointSet lifted(a);
    for (const auto& q : w.points()) lifted.add(ProjPoint::exact({0, q.coords()[0], q.coords()[1]}));
    Ideal elim = elimination_ideal(ideal_of_points(p), {1, 2});
    CHECK(ideal_equal(ideal_of_points(lifted), ideal_sum(ideal(a, {"X1"}), elim)));
  }

  TEST_CASE("cayley transform") {
    CHECK(cayley_orthogonal({Scalar(0), Scalar(0), Scalar(0)}, 3).is_identity());
    ScalarMatrix o = cayley_orthogonal({Scalar(1)}, 2);
    bool pattern = (o == ScalarMatrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}})) ||
                   (o == ScalarMatrix::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}}));
    CHECK(pattern);
    for (std::uint64_t seed : {42ull, 1ull, 2ull, 3ull}) {
      for (int n = 2; n <= 5; ++n) {
        ScalarMatrix q = cayley_orthogonal(random_cayley_params(n, seed), n);
        CHECK(is_orthogonal(q));
        CHECK((q * q.transpose()).is_identity());
        PointSet cols = orthogonal_to_apolar_set(q);
        CHECK(is_apolar(ideal_of_points(cols), sum_of_squares(VarAlphabet{0, n, 0}, true, Side::kForm)));
      }
    }
  }

  TEST_CASE("orthogonal columns give a decomposition of the quadric") {
    VarAlphabet y{0, 2, 0};
    ScalarMatrix o = ScalarMatrix::from_rows({{Scalar::rational(3, 5), Scalar::rational(4, 5)},
                                              {Scalar::rational(-4, 5), Scalar::rational(3, 5)}});
    PointSet cols = orthogonal_to_apolar_set(o);
    CHECK(cols.contains(pt({Scalar::rational(3, 5), Scalar::rational(-4, 5)})));
    CHECK(cols.contains(pt({Scalar::rational(4, 5), Scalar::rational(3, 5)})));
    CHECK(form("(3/5*y1-4/5*y2)^2+(4/5*y1+3/5*y2)^2", y) == form("y1^2+y2^2", y));
    CHECK(orthogonal_to_apolar_set(ScalarMatrix::identity(3)).size() == 3);
  }

  TEST_CASE("generic rotation") {
    PointSet p = six_points();
    Polynomial f = form("x^2*(y1^2+y2^2)", p.alphabet());
    RotationResult r = rotate_generic(p, f, 42);
    REQUIRE(r.points.size() == 6);
    for (const auto& q : r.points.points()) {
      CHECK_FALSE(q.coords()[1].is_zero());
      CHECK_FALSE(q.coords()[2].is_zero());
    }
    CHECK(is_apolar(ideal_of_points(r.points), f));
    CHECK_THROWS_AS(rotate_generic(PointSet(p.alphabet()), f, 1), Error);
  }

  TEST_CASE("incidence structure") {
    IncidenceReport r1 = incidence_structure(six_points(), FamilySpec::m1(2));
    CHECK(r1.passed);
    REQUIRE(r1.carriers.size() == 2);
    CHECK(r1.carriers[0].count == 3);
    CHECK(r1.carriers[1].count == 3);

    IncidenceReport r2 = incidence_structure(family_points(FamilySpec::m2(3), PointMode::kExact).points, FamilySpec::m2(3));
    CHECK(r2.passed);
    REQUIRE(r2.carriers.size() == 3);
    for (const auto& c : r2.carriers) {
      CHECK(c.count == 4);
      CHECK(c.line_counts == std::vector<std::size_t>{2, 2});
    }

    PointSet six = six_points();
    PointSet moved(six.alphabet());
    for (const auto& q : six.points()) {
      if (q.equals(pt({Scalar::imaginary_unit(), 1, 0}))) {
        moved.add(pt({5, 1, 1}));
      } else {
        moved.add(q);
      }
    }
    IncidenceReport bad = incidence_structure(moved, FamilySpec::m1(2));
    CHECK_FALSE(bad.passed);
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations[0].find("expected 2") != std::string::npos);
  }

  TEST_CASE("transforms") {
    PointSet p = six_points();
    ScalarMatrix rot = block_diag(ScalarMatrix::identity(1), ScalarMatrix::from_rows({{Scalar::rational(3, 5), Scalar::rational(-4, 5)},
                                                                                        {Scalar::rational(4, 5), Scalar::rational(3, 5)}}));
    PointSet q = transform_points(p, rot);
    CHECK(ideal_equal(ideal_of_points(q), transform_ideal(ideal_of_points(p), rot)));
  }
}
