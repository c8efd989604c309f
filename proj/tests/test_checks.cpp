#include <doctest.h>

#include "catlab/checks.hpp"
#include "support.hpp"

using namespace testing;

namespace {

FamilyInstance<GF> instance(Family f, int m, int n, int r = 0, std::optional<std::uint64_t> seed = {}) {
  FamilySpec s{f, m, n, r};
  s.seed = seed;
  return build_family(GF{}, s);
}

FamilyInstance<GF> hankel32() { return instance(Family::catalecticant, 3, 0, 1); }

PolyMatrix<GF> negative_control() {
  auto R = ring_x(2);
  return matrix(R, {{"X2", "0"}, {"-X1", "X2"}, {"0", "-X1"}});
}

}  // namespace

TEST_CASE("height profiles of the documented examples") {
  auto h = check_height_profile(hankel32().matrix);
  CHECK(h.passed());
  CHECK(h.data["heights"]["1"] == 4);
  CHECK(h.data["heights"]["2"] == 2);
  auto s = check_height_profile(instance(Family::sub_hankel, 4, 5).matrix);
  CHECK(s.passed());
  CHECK(s.data["heights"]["1"] == 5);
  CHECK(s.data["heights"]["2"] >= 4);
  CHECK(s.data["heights"]["3"] == 2);
}

TEST_CASE("semi-Hankel with n = m cannot meet the t = 1 bound") {
  auto s = check_height_profile(instance(Family::semi_hankel, 4, 4, 0, 1).matrix);
  CHECK(s.verdict == Verdict::fail);
  CHECK(s.data["heights"]["1"] == 4);
  CHECK(s.data["heights"]["2"] == 4);
  CHECK(s.data["heights"]["3"] == 2);
  REQUIRE(s.data["violations"].size() == 1);
  CHECK(s.data["violations"][0].get<std::string>().find("bound exceeds") != std::string::npos);
}

TEST_CASE("one-genericity") {
  auto hankel = check_one_generic(hankel32().matrix);
  CHECK(hankel.passed());
  CHECK(hankel.data["mode"] == "certified");
  CHECK(check_one_generic(instance(Family::catalecticant, 4, 0, 2).matrix).passed());
  auto sub = check_one_generic(instance(Family::sub_hankel, 4, 5).matrix);
  CHECK(sub.verdict == Verdict::fail);
  REQUIRE(sub.witnesses.size() == 1);
  CHECK(sub.witnesses[0] == "u = (0, 0, 0, 1), v = (0, 0, 1)");
  // A matrix whose generalized entry X1 - X1 vanishes without a zero entry.
  auto R = ring_x(2);
  auto degenerate = check_one_generic(matrix(R, {{"X1", "X2"}, {"X1", "X2"}}));
  CHECK(degenerate.verdict == Verdict::fail);
  CHECK(check_one_generic(hankel32().matrix, {false, 100, 3}).passed());
  auto random_fail = check_one_generic(matrix(R, {{"X1", "X1"}, {"X1", "X1"}}), {false, 100000, 3});
  CHECK(random_fail.verdict == Verdict::fail);
  CHECK(random_fail.data["mode"] == "randomized");
}

TEST_CASE("one-genericity downgrades when the certified budget runs out") {
  Budget tiny;
  tiny.max_basis = 1;
  auto r = check_one_generic(hankel32().matrix, {}, tiny);
  CHECK(r.passed());
  CHECK(r.data["mode"] == "randomized");
  CHECK(r.data["note"].get<std::string>().find("downgraded") != std::string::npos);
}

TEST_CASE("linear type and the negative control") {
  CHECK(check_linear_type(hankel32().matrix).passed());
  CHECK(check_linear_type(instance(Family::sub_hankel, 4, 5).matrix).passed());
  auto neg = check_linear_type(negative_control());
  CHECK(neg.verdict == Verdict::fail);
  REQUIRE_FALSE(neg.witnesses.empty());
  auto R = make_ring(GF{}, {"X1", "X2", "Y1", "Y2", "Y3"});
  CHECK(scalar_ratio(P(R, neg.witnesses[0]), P(R, "Y1*Y3 - Y2^2")).has_value());
}

TEST_CASE("linear type verdict does not depend on the variable order") {
  for (const auto& m : {hankel32().matrix, instance(Family::sub_hankel, 4, 5).matrix, negative_control()}) {
    CHECK(check_linear_type(m, {}, false).verdict == check_linear_type(m, {}, true).verdict);
  }
}

TEST_CASE("normal torsionfreeness evidence") {
  auto h = check_normally_torsionfree(hankel32().matrix, 3);
  CHECK(h.passed());
  CHECK(h.data["powers"].size() == 2);
  CHECK(check_normally_torsionfree(instance(Family::sub_hankel, 4, 5).matrix, 2).passed());
}

TEST_CASE("semi-Hankel cube picks up the inversion factor") {
  auto r = check_normally_torsionfree(instance(Family::semi_hankel, 4, 4, 0, 7).matrix, 3);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(r.witnesses.size() == 1);
  auto R = ring_x(4);
  auto w = P(R, r.witnesses[0].substr(r.witnesses[0].find(": ") + 2));
  CHECK(w.degree() == 8);
  CHECK(r.data["powers"][0]["stable_at_X"] == true);
}

TEST_CASE("normality dichotomy") {
  auto a = check_normality(instance(Family::sub_hankel, 4, 5));
  CHECK(a.verdict == Verdict::fail);
  CHECK(a.data["branch"] == "A");
  CHECK(a.data["delta_in_P2"] == true);
  REQUIRE(a.witnesses.size() == 1);
  CHECK(a.witnesses[0].rfind("Delta_3", 0) == 0);
  auto b = check_normality(instance(Family::sub_hankel, 5, 7));
  CHECK(b.passed());
  CHECK(b.data["branch"] == "B");
  CHECK(check_normality(hankel32()).passed());
  CHECK(check_normality(instance(Family::sub_hankel, 5, 6)).data["branch"] == "A");
}

TEST_CASE("budget exhaustion is a verdict, not an error") {
  Budget tiny;
  tiny.max_basis = 1;
  auto r = check_normally_torsionfree(hankel32().matrix, 2, tiny);
  CHECK(r.verdict == Verdict::budget_exceeded);
  CHECK(r.data.contains("reason"));
}

TEST_CASE("check results round-trip through JSON") {
  auto r = check_normality(instance(Family::sub_hankel, 4, 5));
  nlohmann::json j = r;
  auto back = j.get<CheckResult>();
  CHECK(back.check == r.check);
  CHECK(back.verdict == r.verdict);
  CHECK(back.witnesses == r.witnesses);
  CHECK(back.data == r.data);
}

TEST_CASE("rational field gives the same verdicts") {
  FamilySpec s{Family::sub_hankel, 4, 5};
  auto inst = build_family(QQ{}, s);
  CHECK(check_height_profile(inst.matrix).passed());
  CHECK(check_linear_type(inst.matrix).passed());
  CHECK(check_normality(inst).verdict == Verdict::fail);
}
