#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hurwitz/monomial.hpp"

using namespace hurwitz;

namespace {
Monomial M(const char* text) { return Monomial::parse(text); }
const Convention kIndex{DotWeight::Index};
const Convention kTwice{DotWeight::TwiceIndex};
}  // namespace

TEST_CASE("generator lengths") {
  CHECK(length({Family::Bar, 2}) == 3);
  CHECK(length({Family::Acute, 1}) == 2);
  CHECK(length({Family::Dot, 3}) == 6);
  CHECK(length({Family::Grave, 4}) == 8);
}

TEST_CASE("degree") {
  CHECK(Monomial{}.degree() == 0);
  CHECK(M("B1^2*D1").degree() == 4);
  CHECK(M("A2*G1").degree() == 6);
}

TEST_CASE("star involution") {
  CHECK(Monomial{}.star() == Monomial{});
  CHECK(M("A3*B2").star() == M("G3*B2"));
  for (int k = 0; k <= 6; ++k)
    for (const Monomial& b : enumerate_degree(k)) {
      CHECK(b.star().star() == b);
      CHECK(b.star().degree() == b.degree());
      CHECK(b.star().aut_order(kIndex) == b.aut_order(kIndex));
    }
}

TEST_CASE("aut order") {
  CHECK(Monomial{}.aut_order(kIndex) == 1);
  CHECK(M("G2^2*B1").aut_order(kIndex) == 8);
  CHECK(M("D2").aut_order(kIndex) == 2);
  CHECK(M("D2").aut_order(kTwice) == 4);
  CHECK(M("A1").aut_order(kIndex) == 2);
  CHECK(M("B1^3").aut_order(kIndex) == 6);
}

TEST_CASE("aut order multiplicative on disjoint supports") {
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = 1; k2 <= 4; ++k2)
      for (const Monomial& b : enumerate_degree(k1))
        for (const Monomial& c : enumerate_degree(k2)) {
          bool disjoint = true;
          for (const auto& t : b.terms())
            if (c.multiplicity(t.family, t.index) > 0) disjoint = false;
          if (!disjoint) continue;
          CHECK(b.times(c).aut_order(kIndex) ==
                b.aut_order(kIndex) * c.aut_order(kIndex));
        }
}

TEST_CASE("min length") {
  CHECK(M("B1*A2").min_length() == 1);
  CHECK(M("D2").min_length() == 4);
  CHECK_THROWS_AS(Monomial{}.min_length(), std::domain_error);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_degree(0) == std::vector<Monomial>{Monomial{}});
  CHECK(enumerate_degree(1) == std::vector<Monomial>{M("B1")});
  CHECK(enumerate_degree(2).size() == 4);
  CHECK(enumerate_degree(4).size() == 14);
  for (int k = 0; k <= 10; ++k) {
    const auto all = enumerate_degree(k);
    std::set<Monomial> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    for (const Monomial& b : all) CHECK(b.degree() == k);
  }
}

TEST_CASE("parse and format round trip") {
  CHECK(M("B1^2*D1") == Monomial{}.with({Family::Bar, 1}, 2).with({Family::Dot, 1}));
  CHECK(M("1") == Monomial{});
  CHECK(Monomial{}.text() == "1");
  for (int k = 0; k <= 10; ++k)
    for (const Monomial& b : enumerate_degree(k))
      CHECK(Monomial::parse(b.text()) == b);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Monomial::parse("B0"), ParseError);
  CHECK_THROWS_AS(Monomial::parse("X1"), ParseError);
  CHECK_THROWS_AS(Monomial::parse("B1*"), ParseError);
  CHECK_THROWS_AS(Monomial::parse("B1^0"), ParseError);
  CHECK_THROWS_AS(Monomial::parse(""), ParseError);
  try {
    Monomial::parse("B1*Q2");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("divide") {
  CHECK(M("B1^2").divide(M("B1")) == M("B1"));
  CHECK(M("A1").divide(M("G1")) == std::nullopt);
  CHECK(M("A1*B2").divide(Monomial{}) == M("A1*B2"));
}
