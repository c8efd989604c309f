#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("prime field arithmetic") {
  GF f;
  CHECK(f.modulus() == 32003);
  CHECK(f.mul(f.inv(5), 5) == 1);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_string(f.from_int(-3)) == "-3");
  CHECK(f.from_string("32004") == 1);
  CHECK(f.from_ratio("1", "2") == 16002);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS(GF(32004));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(32003ULL * 32003ULL));
}

TEST_CASE("rational field arithmetic") {
  QQ q;
  auto half = q.from_ratio("1", "2");
  CHECK(q.to_string(q.add(half, half)) == "1");
  CHECK(q.to_string(q.from_ratio("-6", "4")) == "-3/2");
  CHECK_THROWS_AS(q.inv(q.zero()), std::domain_error);
}

TEST_CASE("monomial basics") {
  auto a = Monomial::from_exponents(std::vector<int>{2, 0, 1});
  auto b = Monomial::from_exponents(std::vector<int>{1, 1, 0});
  CHECK(a.degree() == 3);
  CHECK((a * b).degree() == 5);
  CHECK(lcm(a, b) == Monomial::from_exponents(std::vector<int>{2, 1, 1}));
  CHECK(gcd(a, b) == Monomial::variable(0));
  CHECK(b.divides(a * b));
  CHECK_FALSE(b.divides(a));
  CHECK((a * b) / b == a);
  CHECK(a.support() == 0b101);
  CHECK_THROWS_AS(Monomial::variable(0, 200) * Monomial::variable(0, 100), std::overflow_error);
}

TEST_CASE("monomial orders") {
  auto m = [](std::vector<int> e) { return Monomial::from_exponents(e); };
  auto drl = MonomialOrder::degrevlex();
  auto lex = MonomialOrder::lex();
  // x1 x3 vs x2^2 in degree 2: degrevlex prefers x2^2, lex prefers x1 x3.
  CHECK(drl.compare(m({0, 2, 0}), m({1, 0, 1})) > 0);
  CHECK(lex.compare(m({1, 0, 1}), m({0, 2, 0})) > 0);
  CHECK(drl.compare(m({0, 0, 3}), m({1, 0, 0})) > 0);
  CHECK(lex.compare(m({1, 0, 0}), m({0, 0, 3})) > 0);
  auto elim = MonomialOrder::block_elimination(1);
  CHECK(elim.compare(m({1, 0, 0}), m({0, 5, 5})) > 0);
  CHECK(elim.compare(m({0, 2, 0}), m({0, 1, 1})) > 0);
  CHECK(elim.compare(m({1, 0, 0}), m({1, 0, 0})) == 0);
}

TEST_CASE("monomial orders are total and multiplicative") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 3);
  auto draw = [&] {
    std::vector<int> v(5);
    for (auto& x : v) x = e(rng);
    return Monomial::from_exponents(v);
  };
  for (const auto& order : {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                            MonomialOrder::block_elimination(2)}) {
    for (int k = 0; k < 300; ++k) {
      auto a = draw(), b = draw(), c = draw();
      CHECK(order.compare(a, b) == -order.compare(b, a));
      CHECK(order.compare(a * c, b * c) == order.compare(a, b));
      if (order.compare(a, b) > 0 && order.compare(b, c) > 0) CHECK(order.compare(a, c) > 0);
      if (!c.is_one()) CHECK(order.compare(a * c, a) > 0);
    }
  }
}

TEST_CASE("parse and print round trip") {
  auto R = ring_x(4);
  auto p = P(R, "X1*X3 - X2^2");
  CHECK(p.to_string() == "-X2^2 + X1*X3");
  CHECK(P(R, p.to_string()) == p);
  CHECK(P(R, "3*X1 + 2*X1 - 5*X1").is_zero());
  CHECK(P(R, " - X4 ").to_string() == "-X4");
  CHECK(P(R, "7").is_constant());
  CHECK(P(R, "1/2*X1") + P(R, "1/2*X1") == P(R, "X1"));
  CHECK_THROWS_AS(P(R, "X5"), ParseError);
  CHECK_THROWS_AS(P(R, ""), ParseError);
  CHECK_THROWS_AS(P(R, "X1^"), ParseError);
  CHECK_THROWS_AS(P(R, "X1 +"), ParseError);
  CHECK_THROWS_AS(P(R, "1/0"), ParseError);
}

TEST_CASE("polynomial arithmetic") {
  auto R = ring_x(3);
  auto x = P(R, "X1"), y = P(R, "X2");
  CHECK((x + y) * (x - y) == P(R, "X1^2 - X2^2"));
  CHECK((x + y).pow(3) == P(R, "X1^3 + 3*X1^2*X2 + 3*X1*X2^2 + X2^3"));
  CHECK(P(R, "X1^2*X2 + X3").derivative(0) == P(R, "2*X1*X2"));
  CHECK(P(R, "X1^2 - X2^2").divide_exact(x + y) == x - y);
  CHECK_FALSE(P(R, "X1^2 + X2^2").divide_exact(x + y).has_value());
  CHECK(P(R, "X1^2*X2").is_homogeneous());
  CHECK_FALSE(P(R, "X1^2 + X2").is_homogeneous());
  CHECK(Polynomial<GF>(R).degree() == -1);
  CHECK(P(R, "X1*X2^3 + X1").degree_in(1) == 3);
  CHECK(P(R, "2*X1 + 4*X2").normalized() == P(R, "X1 + 2*X2"));
  CHECK(*scalar_ratio(P(R, "2*X1 + 4*X2"), P(R, "X1 + 2*X2")) == 2);
  CHECK_FALSE(scalar_ratio(P(R, "X1"), P(R, "X2")).has_value());
  auto S = ring_x(3);
  CHECK(same_ring(R, S));
  auto T = ring_x(4);
  CHECK_THROWS_AS(P(R, "X1") + P(T, "X1"), std::invalid_argument);
}

TEST_CASE("rational polynomials") {
  auto R = ring_x<QQ>(2);
  auto p = P(R, "1/3*X1 + X2");
  CHECK((p * P(R, "3")).to_string() == "X1 + 3*X2");
  CHECK(p.normalized().to_string() == "X1 + 3*X2");
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(2024);
  auto R = ring_x(4);
  auto S = make_ring(GF{}, {"Y1", "Y2", "Y3"});
  for (int k = 0; k < 60; ++k) {
    std::vector<std::optional<Polynomial<GF>>> images;
    for (int i = 0; i < 4; ++i) images.emplace_back(random_polynomial(S, rng, 3, 2));
    auto a = random_polynomial(R, rng, 5, 3);
    auto b = random_polynomial(R, rng, 5, 3);
    auto phi = [&](const Polynomial<GF>& p) { return p.substitute(images, S); };
    CHECK(phi(a * b) == phi(a) * phi(b));
    CHECK(phi(a + b) == phi(a) + phi(b));
    // Oracle: evaluate both sides at a random point.
    std::vector<std::uint32_t> pt(3), img(4);
    for (auto& v : pt) v = R->field().sample(rng);
    for (int i = 0; i < 4; ++i) img[i] = evaluate(*images[i], pt);
    CHECK(evaluate(phi(a), pt) == evaluate(a, img));
  }
}

TEST_CASE("substitution requires images of occurring variables") {
  auto R = ring_x(2);
  std::vector<std::optional<Polynomial<GF>>> images{P(R, "X2"), std::nullopt};
  CHECK(P(R, "X1^2").substitute(images, R) == P(R, "X2^2"));
  CHECK_THROWS(P(R, "X2").substitute(images, R));
}

TEST_CASE("ring validation") {
  CHECK_THROWS(make_ring(GF{}, {"a", "a"}));
  CHECK_THROWS(make_ring(GF{}, indexed_names("X", 49)));
  auto R = make_ring(GF{}, {"t", "X1"});
  CHECK(R->index_of("X1") == 1);
  CHECK(R->fresh_name("t") != "t");
}
