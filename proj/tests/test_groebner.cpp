#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace apolar;
using namespace testing;

namespace {

Ideal m2_ideal(int n) { return construct_minimal_apolar(FamilySpec::m2(n)); }

Ideal random_homogeneous_ideal(std::mt19937_64& rng, const VarAlphabet& a) {
  std::vector<Polynomial> gens;
  for (int k = 0; k < 3; ++k) gens.push_back(rand_homogeneous(rng, a, 2 + k % 2, Side::kOperator, 3));
  return Ideal(a, gens);
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("normal forms") {
    VarAlphabet a{0, 2, 0};
    MonomialOrder lex = MonomialOrder::lex(2);
    CHECK(normal_form(op("Y1*Y2", a), buchberger(ideal(a, {"Y1*Y2"}), lex)).is_zero());

    VarAlphabet x{1, 0, 0};
    CHECK(normal_form(op("X1^3", x), buchberger(ideal(x, {"X1^2"}), MonomialOrder::lex(1))).is_zero());
    GroebnerBasis single = buchberger(ideal(x, {"X1"}), MonomialOrder::lex(1));
    REQUIRE(single.size() == 1);
    CHECK(single.basis()[0] == op("X1", x));

    Ideal i = m2_ideal(3);
    GroebnerBasis g = buchberger(i, MonomialOrder::lex(i.alphabet.size()));
    Polynomial q1 = i.generators[i.generators.size() - 2], q2 = i.generators.back();
    VarAlphabet b = i.alphabet;
    Polynomial f = op("X2^2", b) * q1 - op("X1^2", b) * q2;
    CHECK(normal_form(f, g).is_zero());
  }

  TEST_CASE("the m2 generators are a reduced lex basis") {
    for (int n = 2; n <= 5; ++n) {
      Ideal i = m2_ideal(n);
      GroebnerBasis g = buchberger(i, MonomialOrder::lex(i.alphabet.size()));
      CHECK(g.basis() == i.canonical().generators);
      std::vector<std::string> init = strings(initial_ideal(g));
      CHECK(std::count_if(init.begin(), init.end(), [](const std::string& s) { return s[0] == 'Y'; }) == n * (n - 1) / 2);
      CHECK(std::find(init.begin(), init.end(), "X1^2") != init.end());
      CHECK(std::find(init.begin(), init.end(), "X2^2") != init.end());
      CHECK(init.size() == static_cast<std::size_t>(n * (n - 1) / 2 + 2));
    }
  }

  TEST_CASE("hand computed annihilator bases") {
    VarAlphabet a{1, 2, 0};
    Ideal perp = ideal(a, {"X1^3", "Y1^2-Y2^2", "Y1*Y2"});
    // Y2*(Y1^2-Y2^2) - Y1*(Y1*Y2) = -Y2^3 is a new leading term in both orders.
    Ideal full = ideal(a, {"X1^3", "Y1^2-Y2^2", "Y1*Y2", "Y2^3"});
    GroebnerBasis g = buchberger(perp, MonomialOrder::grevlex(3));
    std::vector<std::string> got = strings(Ideal(a, g.basis())), want = strings(full);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    GroebnerBasis l = buchberger(perp, MonomialOrder::lex(3));
    CHECK(l.basis() == full.canonical().generators);
    CHECK(strings(initial_ideal(l)) == std::vector<std::string>{"X1^3", "Y1^2", "Y1*Y2", "Y2^3"});
  }

  TEST_CASE("reduced basis does not depend on the generating set") {
    std::mt19937_64 rng(21);
    VarAlphabet a{1, 2, 0};
    for (int k = 0; k < 15; ++k) {
      Ideal i = random_homogeneous_ideal(rng, a);
      MonomialOrder o = k % 2 ? MonomialOrder::lex(3) : MonomialOrder::grevlex(3);
      GroebnerBasis g = buchberger(i, o);
      std::vector<Polynomial> shuffled = i.generators;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      Scalar c = rand_scalar(rng);
      if (c.is_zero()) c = Scalar(3);
      shuffled[0] = shuffled[0] * c + shuffled[1] * rand_homogeneous(rng, a, 1, Side::kOperator, 2);
      shuffled.push_back(shuffled[1] * rand_homogeneous(rng, a, 2, Side::kOperator, 2));
      CHECK(buchberger(Ideal(a, shuffled), o).basis() == g.basis());
    }
  }

  TEST_CASE("membership by construction") {
    std::mt19937_64 rng(4);
    VarAlphabet a{1, 3, 0};
    for (int k = 0; k < 10; ++k) {
      Ideal i = random_homogeneous_ideal(rng, a);
      GroebnerBasis g = buchberger(i, MonomialOrder::grevlex(a.size()));
      Polynomial f(a, Side::kOperator);
      for (const auto& gen : i.generators) {
        f += gen * rand_homogeneous(rng, a, 2, Side::kOperator, 2) * rand_scalar(rng);
      }
      CHECK(ideal_member(f, g));
      Polynomial r = rand_homogeneous(rng, a, 2, Side::kOperator, 4);
      CHECK(normal_form(f + r, g) == normal_form(r, g));
    }
  }

  TEST_CASE("hilbert functions of monomial ideals match direct counting") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 15; ++k) {
      std::size_t nv = 3 + k % 2;
      VarAlphabet a{1, static_cast<int>(nv) - 1, 0};
      std::vector<Monomial> monos;
      std::vector<Polynomial> gens;
      for (int g = 0; g < 3; ++g) {
        std::vector<Monomial> pool = monomials_of_degree(nv, 2 + (g + k) % 3);
        Monomial m = pool[rng() % pool.size()];
        monos.push_back(m);
        gens.push_back(Polynomial::monomial(a, Side::kOperator, m));
      }
      HilbertFunction hf = hilbert_function(Ideal(a, gens), MonomialOrder::grevlex(nv), 7);
      for (unsigned d = 0; d <= 7; ++d) CHECK(hf.values[d] == standard_count(monos, nv, d));
    }
  }

  TEST_CASE("hilbert function does not depend on the order") {
    std::mt19937_64 rng(13);
    VarAlphabet a{1, 2, 0};
    for (int k = 0; k < 10; ++k) {
      Ideal i = random_homogeneous_ideal(rng, a);
      CHECK(hilbert_function(i, MonomialOrder::grevlex(3), 7).values == hilbert_function(i, MonomialOrder::lex(3), 7).values);
    }
    Ideal m2 = m2_ideal(3);
    std::size_t nv = m2.alphabet.size();
    CHECK(hilbert_function(m2, MonomialOrder::grevlex(nv), 6).values == hilbert_function(m2, MonomialOrder::lex(nv), 6).values);
  }

  TEST_CASE("hilbert tables") {
    VarAlphabet a{2, 3, 0};
    HilbertFunction perp = hilbert_function_auto(annihilator(form("(x1^2+x2^2)*(y1^2+y2^2+y3^2)", a)));
    CHECK(perp.values == std::vector<long>{1, 5, 8, 5, 1, 0});

    HilbertFunction m1 = hilbert_function_auto(construct_minimal_apolar(FamilySpec::m1(3)));
    CHECK(m1.values == std::vector<long>{1, 4, 7, 9});
    CHECK(m1.stable_value == 9);

    HilbertFunction m2 = hilbert_function_auto(m2_ideal(3));
    CHECK(m2.values == std::vector<long>{1, 5, 10, 12});
    CHECK(m2.stable_value == 12);
    CHECK(m2.stabilized_at == 3);
  }

  TEST_CASE("degree of points") {
    CHECK(degree_of_points(construct_minimal_apolar(FamilySpec::m1(2))) == 6);
    CHECK(degree_of_points(construct_minimal_apolar(FamilySpec::m3(2))) == 12);
    VarAlphabet a{1, 2, 0};
    CHECK(degree_of_points(ideal(a, {"Y1", "Y2"})) == 1);
    CHECK_THROWS_AS(degree_of_points(ideal(a, {"Y1"})), Error);
    CHECK(krull_dimension(buchberger(ideal(a, {"Y1"}), MonomialOrder::grevlex(3))) == 2);
  }

  TEST_CASE("elimination") {
    VarAlphabet a{1, 2, 0};
    CHECK(ideal_equal(elimination_ideal(ideal(a, {"X1", "Y1-Y2"}), {1, 2}), ideal(a, {"Y1-Y2"})));

    Ideal m1 = construct_minimal_apolar(FamilySpec::m1(2));
    Ideal e = elimination_ideal(m1, {1, 2});
    for (const auto& g : e.generators) {
      CHECK_FALSE(g.involves(0));
      if (g.homogeneous_degree() == 2) CHECK(g.monic() == op("Y1*Y2", a));
    }
    CHECK(ideal_member(op("Y1*Y2", a), buchberger(e, MonomialOrder::grevlex(3))));

    Ideal m2 = construct_minimal_apolar(FamilySpec::m2(2, {Scalar(1)}, {Scalar(1)}));
    VarAlphabet b = m2.alphabet;
    Ideal ey = elimination_ideal(m2, {2, 3});
    GroebnerBasis gy = buchberger(ey, MonomialOrder::grevlex(b.size()));
    CHECK(ideal_member(op("Y1*Y2", b), gy));
    CHECK(ideal_member(op("X1^2-X2^2", b), buchberger(m2, MonomialOrder::grevlex(b.size()))));
  }

  TEST_CASE("block order eliminates") {
    VarAlphabet a{1, 2, 0};
    Ideal i = ideal(a, {"X1-Y1", "X1^2-Y2^2"});
    GroebnerBasis g = buchberger(i, MonomialOrder::block(3, {0}));
    bool found = false;
    for (const auto& p : g.basis()) found = found || (!p.involves(0) && p.monic() == op("Y1^2-Y2^2", a));
    CHECK(found);
  }

  TEST_CASE("intersection") {
    VarAlphabet a{1, 1, 0};
    CHECK(ideal_equal(ideal_intersect(ideal(a, {"X1"}), ideal(a, {"Y1"})), ideal(a, {"X1*Y1"})));

    VarAlphabet y{0, 3, 0};
    Ideal all = ideal_intersect(ideal_intersect(ideal(y, {"Y2", "Y3"}), ideal(y, {"Y1", "Y3"})), ideal(y, {"Y1", "Y2"}));
    CHECK(ideal_equal(all, ideal(y, {"Y1*Y2", "Y1*Y3", "Y2*Y3"})));
  }

  TEST_CASE("monomial intersections are generated by lcms") {
    std::mt19937_64 rng(17);
    VarAlphabet a{1, 2, 0};
    for (int k = 0; k < 10; ++k) {
      std::vector<Monomial> pool = monomials_of_degree(3, 2);
      Monomial p = pool[rng() % pool.size()], q = pool[rng() % pool.size()], r = pool[rng() % pool.size()];
      Ideal i(a, {Polynomial::monomial(a, Side::kOperator, p), Polynomial::monomial(a, Side::kOperator, q)});
      Ideal j(a, {Polynomial::monomial(a, Side::kOperator, r)});
      Ideal expected(a, {Polynomial::monomial(a, Side::kOperator, p.lcm(r)), Polynomial::monomial(a, Side::kOperator, q.lcm(r))});
      CHECK(ideal_equal(ideal_intersect(i, j), expected));
    }
  }

  TEST_CASE("colon") {
    VarAlphabet a{1, 1, 0};
    CHECK(ideal_equal(colon(ideal(a, {"X1*Y1"}), ideal(a, {"X1"})), ideal(a, {"Y1"})));

    std::mt19937_64 rng(23);
    VarAlphabet b{1, 2, 0};
    for (int k = 0; k < 8; ++k) {
      Ideal i = random_homogeneous_ideal(rng, b);
      Ideal j(b, {rand_homogeneous(rng, b, 1, Side::kOperator, 2)});
      Ideal c = colon(i, j);
      CHECK(ideal_contains(c, i));
      CHECK(ideal_contains(colon(c, j), c));
    }
  }

  TEST_CASE("degree cap is reported") {
    Ideal i = construct_minimal_apolar(FamilySpec::m2(3));
    GroebnerOptions opts;
    opts.max_degree = 2;
    CHECK_THROWS_AS(buchberger(i, MonomialOrder::lex(i.alphabet.size()), opts), Error);
    try {
      buchberger(i, MonomialOrder::lex(i.alphabet.size()), opts);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kDegreeCap);
    }
  }

  TEST_CASE("mismatched alphabets are rejected") {
    VarAlphabet a{1, 2, 0}, b{2, 1, 0};
    CHECK_THROWS_AS(ideal_sum(ideal(a, {"X1"}), ideal(b, {"X2"})), Error);
  }
}
