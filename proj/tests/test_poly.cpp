#include <doctest.h>

#include "support.hpp"

using namespace apolar;
using namespace testing;

TEST_SUITE("scalar") {
  TEST_CASE("gaussian rational arithmetic") {
    Scalar i = Scalar::imaginary_unit();
    CHECK(i * i == Scalar(-1));
    Scalar z(mpq_class(3, 4), mpq_class(-1, 2));
    CHECK(z * z.inverse() == Scalar(1));
    CHECK((z / z) == Scalar(1));
    CHECK(z.conj() * z == Scalar(z.norm()));
    CHECK(Scalar(2).pow(10) == Scalar(1024));
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
  }

  TEST_CASE("parse and print") {
    CHECK(parse_scalar("3/4") == Scalar::rational(3, 4));
    CHECK(parse_scalar("-i") == -Scalar::imaginary_unit());
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
      Scalar s = rand_scalar(rng);
      CHECK(parse_scalar(s.to_string()) == s);
    }
  }

  TEST_CASE("exact square roots and rationalization") {
    CHECK(exact_sqrt(Scalar::rational(9, 4)) == Scalar::rational(3, 2));
    CHECK(exact_sqrt(Scalar(-1)).has_value());
    CHECK_FALSE(exact_sqrt(Scalar(2)).has_value());
    auto r = rationalize(0.6, 1000, 1e-12);
    REQUIRE(r);
    CHECK(*r == mpq_class(3, 5));
    CHECK_FALSE(rationalize(std::sqrt(2.0), 1000, 1e-12).has_value());
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("parsing") {
    VarAlphabet a{1, 2, 0};
    Polynomial f = form("x1^2*(y1^2+y2^2)", a);
    CHECK(f.num_terms() == 2);
    CHECK(f.homogeneous_degree() == 4);
    CHECK(f.coefficient(Monomial{2, 2, 0}) == Scalar(1));
    CHECK(f.coefficient(Monomial{2, 0, 2}) == Scalar(1));

    Polynomial zero = form("0", a);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.homogeneous_degree().has_value());

    VarAlphabet b{2, 0, 0};
    CHECK(form("(x1+i*x2)*(x1-i*x2)", b) == form("x1^2+x2^2", b));
    CHECK(form("x*x", a) == form("x1^2", a));
    CHECK_THROWS_AS(form("x1*Y1", a), Error);
    CHECK_THROWS_AS(form("x3", a), Error);
    CHECK_THROWS_AS(form("x1^", a), Error);
  }

  TEST_CASE("printing round trips") {
    std::mt19937_64 rng(11);
    VarAlphabet a{2, 3, 0};
    for (int k = 0; k < 40; ++k) {
      Polynomial f = rand_homogeneous(rng, a, 1 + k % 4, Side::kForm);
      CHECK(form(f.to_string(true), a) == f);
      Polynomial g = rand_homogeneous(rng, a, 1 + k % 3, Side::kOperator);
      CHECK(op(g.to_string(true), a) == g);
    }
  }

  TEST_CASE("differentiation") {
    VarAlphabet a1{1, 0, 0};
    CHECK(apply_diff(op("X1", a1), form("x1^2", a1)) == form("2*x1", a1));

    VarAlphabet a{1, 2, 0};
    CHECK(apply_diff(op("Y1*Y2", a), form("x^2*(y1^2+y2^2)", a)).is_zero());

    VarAlphabet b{2, 2, 0};
    Polynomial f = form("(x1^2+x2^2)*(y1^2+y2^2)", b);
    CHECK(apply_diff(op("X1*Y1", b), f) == form("4*x1*y1", b));
  }

  TEST_CASE("differentiation agrees with the term-wise oracle") {
    std::mt19937_64 rng(5);
    VarAlphabet a{2, 2, 0};
    for (int k = 0; k < 60; ++k) {
      Polynomial f = rand_homogeneous(rng, a, 3 + k % 3, Side::kForm);
      Polynomial g = rand_homogeneous(rng, a, 1 + k % 3, Side::kOperator, 3);
      CHECK(apply_diff(g, f) == diff_oracle(g, f));
    }
  }

  TEST_CASE("differentiation is bilinear and composes") {
    std::mt19937_64 rng(9);
    VarAlphabet a{1, 3, 0};
    for (int k = 0; k < 30; ++k) {
      Polynomial f = rand_homogeneous(rng, a, 4, Side::kForm);
      Polynomial f2 = rand_homogeneous(rng, a, 4, Side::kForm);
      Polynomial g = rand_homogeneous(rng, a, 1, Side::kOperator, 3);
      Polynomial h = rand_homogeneous(rng, a, 2, Side::kOperator, 3);
      Scalar c = rand_scalar(rng);
      CHECK(apply_diff(g, f + f2 * c) == apply_diff(g, f) + apply_diff(g, f2) * c);
      CHECK(apply_diff(g + h * c, f) == apply_diff(g, f) + apply_diff(h, f) * c);
      CHECK(apply_diff(g * h, f) == apply_diff(g, apply_diff(h, f)));
      CHECK(apply_diff(rand_homogeneous(rng, a, 5, Side::kOperator), f).is_zero());
    }
  }

  TEST_CASE("evaluation") {
    VarAlphabet b{2, 0, 0};
    std::vector<Scalar> p{Scalar(1), Scalar::imaginary_unit()};
    CHECK(form("x1^2+x2^2", b).evaluate(p).is_zero());
    VarAlphabet a{1, 2, 0};
    std::vector<Scalar> q{Scalar(0), Scalar(1), Scalar::imaginary_unit()};
    CHECK(op("Y1^2+Y2^2", a).evaluate(q).is_zero());
    std::vector<Scalar> r{Scalar(2), Scalar(0), Scalar(0)};
    CHECK(op("X1^3", a).evaluate(r) == Scalar(8));
  }

  TEST_CASE("monomials") {
    Monomial m{2, 1, 0}, n{1, 3, 1};
    CHECK(m.lcm(n) == Monomial{2, 3, 1});
    CHECK((m * n) == Monomial{3, 4, 1});
    CHECK(Monomial{1, 1, 0}.divides(m));
    CHECK_FALSE(m.divides(n));
    CHECK(monomials_of_degree(4, 3).size() == 20);
    CHECK(monomials_of_degree(6, 4).size() == 126);
  }
}

TEST_SUITE("linear algebra") {
  TEST_CASE("substitution") {
    VarAlphabet b{2, 0, 0};
    Scalar i = Scalar::imaginary_unit();
    Polynomial f = form("x1*x2", b);
    CHECK(linear_substitute(f, ScalarMatrix::identity(2)) == f);
    ScalarMatrix a = ScalarMatrix::from_rows({{Scalar(1), i}, {Scalar(1), -i}});
    CHECK(linear_substitute(f, a) == form("x1^2+x2^2", b));
    CHECK(linear_substitute(linear_substitute(f, a), inverse(a)) == f);
  }

  TEST_CASE("orthogonal substitution fixes the quadric") {
    VarAlphabet a{1, 2, 0};
    Polynomial f = form("x^2*(y1^2+y2^2)", a);
    ScalarMatrix rot = ScalarMatrix::from_rows({{Scalar::rational(3, 5), Scalar::rational(-4, 5)},
                                                {Scalar::rational(4, 5), Scalar::rational(3, 5)}});
    ScalarMatrix full = block_diag(ScalarMatrix::identity(1), rot);
    CHECK(linear_substitute(f, full) == f);
  }

  TEST_CASE("rank, kernel, inverse") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
      std::size_t r = 2 + k % 3, c = 3 + k % 2;
      ScalarMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_scalar(rng);
      }
      if (k % 4 == 0) {
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Scalar(2);
      }
      ScalarMatrix ker = kernel(m);
      CHECK(rank(m) + ker.rows() == c);
      ScalarMatrix prod = m * ker.transpose();
      for (std::size_t i = 0; i < prod.rows(); ++i) {
        for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
      }
    }
    ScalarMatrix sq = ScalarMatrix::from_rows({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar::imaginary_unit()}});
    CHECK((sq * inverse(sq)).is_identity());
    CHECK(determinant(sq) == Scalar(2) * Scalar::imaginary_unit() - Scalar(1));
    CHECK_THROWS_AS(inverse(ScalarMatrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}})), Error);
  }

  TEST_CASE("linear systems") {
    ScalarMatrix a = ScalarMatrix::from_rows({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}, {Scalar(2), Scalar(0)}});
    LinearSolution s = solve(a, {Scalar(3), Scalar(1), Scalar(4)});
    CHECK(s.unique);
    CHECK(s.x == std::vector<Scalar>{Scalar(2), Scalar(1)});
    CHECK_THROWS_AS(solve(a, {Scalar(3), Scalar(1), Scalar(5)}), Error);
  }

  TEST_CASE("univariate polynomials") {
    // z^3 - 2z = z(z^2 - 2) is squarefree, z^2(z-1) is not.
    UniPoly p({Scalar(0), Scalar(-2), Scalar(0), Scalar(1)});
    CHECK(is_squarefree(p));
    UniPoly q({Scalar(0), Scalar(0), Scalar(-1), Scalar(1)});
    CHECK_FALSE(is_squarefree(q));
    CHECK(poly_gcd(q, q.derivative()).monic() == UniPoly({Scalar(0), Scalar(1)}));
    // det(zI - A) for A = [[1,2],[3,4]] is z^2 - 5z - 2.
    ScalarMatrix a = ScalarMatrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}});
    CHECK(charpoly(a) == UniPoly({Scalar(-2), Scalar(-5), Scalar(1)}));
  }
}
