#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hurwitz/reports.hpp"

using namespace hurwitz;

namespace {
Monomial M(const char* text) { return Monomial::parse(text); }
const Convention kIndex{DotWeight::Index};
const Convention kTwice{DotWeight::TwiceIndex};
}  // namespace

TEST_CASE("literal rule diff: empty range is empty") {
  Engine engine(kIndex);
  CHECK(literal_rule_diff(engine, 0, 0).empty());
}

TEST_CASE("literal rule diff under Index flags only the interior self-pairs") {
  Engine engine(kIndex);
  const auto diffs = literal_rule_diff(engine, 2, 1);
  for (const auto& d : diffs) CHECK(d.rule == "interior-step");
  // No entry for the acute-step dot term at b = G1 under Index.
  for (const auto& d : diffs) CHECK(!(d.rule == "acute-step" && d.b == M("G1")));
}

TEST_CASE("literal rule diff under TwiceIndex flags the acute-step dot term") {
  Engine engine(kTwice);
  const auto diffs = literal_rule_diff(engine, 2, 1);
  const auto hit = std::find_if(diffs.begin(), diffs.end(), [](const RuleDiff& d) {
    return d.rule == "acute-step" && d.b == M("G1");
  });
  REQUIRE(hit != diffs.end());
  CHECK(hit->normative == 2 * hit->literal);  // table i/2 vs normative w(i)/2
  CHECK(hit->family == "acute-dot-term");
}

TEST_CASE("route commutation report") {
  Engine engine(kIndex);
  const auto routes = route_commutation_report(engine, 2);
  for (const auto& r : routes) {
    if (r.b == M("B1")) CHECK(r.difference == 0);
    if (r.b == Monomial{}) CHECK(r.difference == 0);
  }
  // The routes genuinely differ in this system; the report records it.
  Engine engine3(kIndex);
  const auto routes3 = route_commutation_report(engine3, 3);
  const auto b1g1 = std::find_if(routes3.begin(), routes3.end(),
                                 [](const RouteDiff& r) { return r.b == M("B1*G1"); });
  REQUIRE(b1g1 != routes3.end());
  CHECK(b1g1->boundary_first == Rational(3, 2));
  CHECK(b1g1->interior_first == 3);
}

TEST_CASE("route report at degree 0 holds only the empty monomial") {
  Engine engine(kIndex);
  const auto routes = route_commutation_report(engine, 0);
  REQUIRE(routes.size() == 1);
  CHECK(routes[0].b == Monomial{});
  CHECK(routes[0].difference == 0);
}

TEST_CASE("consistency report under Index flags exactly the known families") {
  const ConsistencyReport report = consistency_report(kIndex, 4, 2);
  CHECK(!report.has_unclassified());
  const auto fams = report.families_present();
  CHECK(fams == std::vector<std::string>{"beta-dot-term", "initial-condition",
                                         "interior-diagonal-self-pair"});
  // The beta diff is the dot term with ratio 2.
  for (const auto& d : report.operator_diffs)
    if (d.op == "beta") {
      CHECK(d.family == "beta-dot-term");
      CHECK(d.literal == 2 * d.derived);
    }
  // Gamma is clean.
  for (const auto& d : report.operator_diffs) CHECK(d.op != "gamma");
  // Alpha diffs are the fully diagonal self-pairs, ratio 2.
  for (const auto& d : report.operator_diffs)
    if (d.op == "alpha") {
      CHECK(d.multiplier == d.derivatives);
      CHECK(d.literal == 2 * d.derived);
    }
}

TEST_CASE("consistency report is byte stable") {
  const std::string a = consistency_report(kIndex, 3, 2).text();
  const std::string b = consistency_report(kIndex, 3, 2).text();
  CHECK(a == b);
  CHECK(a.find("dot-weight convention: index") != std::string::npos);
}

TEST_CASE("initial condition slice lists both readings") {
  const ConsistencyReport report = consistency_report(kIndex, 3, 1);
  const auto hit = std::find_if(
      report.initial_condition_diffs.begin(), report.initial_condition_diffs.end(),
      [](const InitialConditionDiff& d) { return d.b == M("B2"); });
  REQUIRE(hit != report.initial_condition_diffs.end());
  CHECK(hit->product_reading == 1);
  CHECK(hit->exponential_reading == 0);
  const auto d1 = std::find_if(
      report.initial_condition_diffs.begin(), report.initial_condition_diffs.end(),
      [](const InitialConditionDiff& d) { return d.b == M("D1"); });
  REQUIRE(d1 != report.initial_condition_diffs.end());
  CHECK(d1->product_reading == 1);
  CHECK(d1->exponential_reading == Rational(1, 2));
}
