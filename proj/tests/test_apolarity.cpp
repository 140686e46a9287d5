#include <doctest.h>

#include "support.hpp"

using namespace apolar;
using namespace testing;

namespace {

Polynomial product_form(int m, int n) {
  VarAlphabet a{m, n, 0};
  if (m == 1) return Polynomial::variable(a, Side::kForm, 0).pow(2) * sum_of_squares(a, true, Side::kForm);
  return sum_of_squares(a, false, Side::kForm) * sum_of_squares(a, true, Side::kForm);
}

}  // namespace

TEST_SUITE("apolarity") {
  TEST_CASE("catalecticant rank equals the derivative span") {
    std::mt19937_64 rng(31);
    VarAlphabet a{1, 2, 0};
    for (int k = 0; k < 20; ++k) {
      Polynomial f = rand_homogeneous(rng, a, 4, Side::kForm, 4);
      for (int d = 0; d <= 4; ++d) {
        CatalecticantSlice c = catalecticant(f, d);
        CHECK(static_cast<long>(c.rank) == derivative_space(f, static_cast<unsigned>(d)));
        for (const auto& g : c.kernel_basis) CHECK(apply_diff(g, f).is_zero());
      }
    }
  }

  TEST_CASE("closed form annihilators") {
    VarAlphabet a{1, 2, 0};
    CHECK(strings(annihilator(form("x^2*(y1^2+y2^2)", a))) == std::vector<std::string>{"X1^3", "Y1^2-Y2^2", "Y1*Y2"});
    VarAlphabet b{2, 2, 0};
    CHECK(ideal_equal(annihilator(form("(x1^2+x2^2)*(y1^2+y2^2)", b)), ideal(b, {"X1*X2", "X1^2-X2^2", "Y1*Y2", "Y1^2-Y2^2"})));
    VarAlphabet c{1, 0, 0};
    CHECK(ideal_equal(annihilator(form("x1^2", c)), ideal(c, {"X1^3"})));

    VarAlphabet d{1, 3, 0};
    CHECK(ideal_equal(annihilator_closed_form(1, 3), ideal(d, {"X1^3", "Y1^2-Y2^2", "Y1^2-Y3^2", "Y1*Y2", "Y1*Y3", "Y2*Y3"})));
    CHECK(ideal_equal(annihilator_closed_form(2, 2), ideal(b, {"X1*X2", "X1^2-X2^2", "Y1*Y2", "Y1^2-Y2^2"})));
    VarAlphabet e{3, 2, 0};
    CHECK(ideal_equal(annihilator_closed_form(3, 2),
                      ideal(e, {"X1^2-X2^2", "X1^2-X3^2", "X1*X2", "X1*X3", "X2*X3", "Y1^2-Y2^2", "Y1*Y2"})));
  }

  TEST_CASE("annihilator table over the family range") {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 2; n <= 5; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        Polynomial f = product_form(m, n);
        Ideal perp = annihilator(f);
        CHECK(is_apolar(perp, f));
        CHECK(ideal_equal(perp, annihilator_closed_form(m, n)));
        HilbertFunction hf = hilbert_function_auto(perp);
        for (unsigned d = 0; d <= 4; ++d) CHECK(hf.at(static_cast<int>(d)) == derivative_space(f, d));
        CHECK(hf.at(2) == n * m + 2);
      }
    }
  }

  TEST_CASE("annihilators are minimally generated") {
    for (auto [m, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 2}}) {
      Ideal perp = annihilator(product_form(m, n));
      for (std::size_t k = 0; k < perp.generators.size(); ++k) {
        std::vector<Polynomial> fewer = perp.generators;
        fewer.erase(fewer.begin() + static_cast<long>(k));
        CHECK_FALSE(ideal_equal(Ideal(perp.alphabet, fewer), perp));
      }
    }
  }

  TEST_CASE("gorenstein symmetry on random forms") {
    std::mt19937_64 rng(41);
    VarAlphabet a{2, 2, 0};
    for (int k = 0; k < 8; ++k) {
      Polynomial f = rand_homogeneous(rng, a, 3 + k % 2, Side::kForm, 6);
      int d = *f.homogeneous_degree();
      HilbertFunction hf = hilbert_function_auto(annihilator(f));
      for (int i = 0; i <= d; ++i) CHECK(hf.at(i) == hf.at(d - i));
    }
  }

  TEST_CASE("apolarity tests") {
    VarAlphabet a{1, 2, 0};
    Polynomial f = form("x^2*(y1^2+y2^2)", a);
    CHECK(is_apolar(ideal(a, {"Y1*Y2", "X1^3+X1*(Y1^2-Y2^2)"}), f));
    CHECK_FALSE(is_apolar(ideal(a, {"X1^2"}), f));
    CHECK(is_apolar(ideal(a, {"Y1*Y2", "X1^3+Y1^3-Y2^3"}), form("x*(y1^3+y2^3)", a)));
  }

  TEST_CASE("colon by a linear form") {
    VarAlphabet a{1, 2, 0};
    Polynomial f = form("x^2*(y1^2+y2^2)", a);
    Ideal c = perp_colon_linear(f, op("Y1", a));
    CHECK(ideal_equal(c, ideal(a, {"X1^3", "Y1^2", "Y2"})));
    CHECK(ideal_equal(c, annihilator(form("2*x^2*y1", a))));

    VarAlphabet b{2, 2, 0};
    Polynomial g = form("x1*x2*(y1^2+y2^2)", b);
    CHECK(ideal_equal(perp_colon_linear(g, op("Y1+Y2", b)), annihilator(form("2*x1*x2*(y1+y2)", b))));

    VarAlphabet c1{1, 0, 0};
    CHECK(ideal_equal(perp_colon_linear(form("x1^3", c1), op("X1", c1)), ideal(c1, {"X1^3"})));
  }

  TEST_CASE("colon routes agree for random t") {
    std::mt19937_64 rng(43);
    VarAlphabet a{2, 3, 0};
    Polynomial f = form("(x1^2+x2^2)*(y1^2+y2^2+y3^2)", a);
    for (int k = 0; k < 20; ++k) {
      Polynomial t = rand_homogeneous(rng, a, 1, Side::kOperator, 3);
      if (apply_diff(t, f).is_zero()) continue;
      Ideal c = perp_colon_linear(f, t);
      CHECK(ideal_equal(c, annihilator(apply_diff(t, f))));
    }
  }

  TEST_CASE("inputs are validated") {
    VarAlphabet a{1, 2, 0};
    CHECK_THROWS_AS(annihilator(form("x^2+y1", a)), Error);
    CHECK_THROWS_AS(is_apolar(ideal(VarAlphabet{2, 1, 0}, {"X1"}), form("x^2", a)), Error);
  }
}
