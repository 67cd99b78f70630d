#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz/correlators.hpp"
#include "hurwitz/engine.hpp"

using namespace hurwitz;

namespace {
Monomial M(const char* text) { return Monomial::parse(text); }
const Convention kIndex{DotWeight::Index};
const Convention kTwice{DotWeight::TwiceIndex};

std::map<Monomial, Rational> base_layer(int degree, const Convention& conv) {
  std::map<Monomial, Rational> layer;
  for (const Monomial& b : enumerate_degree(degree))
    layer[b] = Engine::base(b, conv);
  return layer;
}
}  // namespace

TEST_CASE("two point pairing") {
  CHECK(two_point(M("G1"), M("A1"), kIndex) == Rational(1, 2));
  CHECK(two_point(M("A1"), M("A1"), kIndex) == 0);
  CHECK(two_point(M("B2"), M("B2"), kIndex) == 1);
  for (int k = 0; k <= 5; ++k)
    for (const Monomial& c : enumerate_degree(k))
      for (const Monomial& b : enumerate_degree(k))
        CHECK(two_point(c, b, kIndex) == two_point(b, c, kIndex));
}

TEST_CASE("boundary three point: table values") {
  CHECK(three_point_boundary(M("D1"), SimpleKind::AcuteSimple, M("G1"), kIndex) ==
        Rational(1, 2));
  CHECK(three_point_boundary(M("A2"), SimpleKind::AcuteSimple, M("G1^2"), kIndex) ==
        Rational(1, 2));
  CHECK(three_point_boundary(M("B1*A1"), SimpleKind::GraveSimple, M("B2"), kIndex) ==
        1);
  CHECK(three_point_boundary(M("B2"), SimpleKind::AcuteSimple, M("B2"), kIndex) == 0);
}

TEST_CASE("boundary three point: star flip closure") {
  for (int k = 0; k <= 6; ++k)
    for (const Monomial& c : enumerate_degree(k))
      for (const Monomial& b : enumerate_degree(k))
        CHECK(three_point_boundary(c, SimpleKind::AcuteSimple, b, kIndex) ==
              three_point_boundary(b.star(), SimpleKind::GraveSimple, c.star(),
                                   kIndex));
}

TEST_CASE("interior three point: table values") {
  CHECK(three_point_interior(M("B1^2"), M("B1^2"), kIndex) == Rational(1, 2));
  CHECK(three_point_interior(M("D1*B1"), M("B2"), kIndex) == 1);
  CHECK(three_point_interior(M("D1*G1"), M("A2"), kIndex) == 2);
  CHECK(three_point_interior(M("A1"), M("G1"), kIndex) == 0);
}

TEST_CASE("interior three point: symmetric and star-flip closed") {
  for (int k = 0; k <= 6; ++k)
    for (const Monomial& c : enumerate_degree(k))
      for (const Monomial& b : enumerate_degree(k)) {
        const Rational v = three_point_interior(c, b, kIndex);
        CHECK(v == three_point_interior(b, c, kIndex));
        CHECK(v == three_point_interior(b.star(), c.star(), kIndex));
      }
}

TEST_CASE("interior three point: within-family multi-instance sums") {
  // (B1^2 B2, B1^2 B2) matches the bar-bar family twice: d = B2 with the
  // {1,1} split and d = B1 with the {1,2} split.
  const Monomial b = M("B1^2*B2");
  CHECK(three_point_interior(b, b, kIndex) == Rational(1, 2) + 1);
}

TEST_CASE("degree mismatch gives zero") {
  CHECK(three_point_boundary(M("B1"), SimpleKind::AcuteSimple, M("G1"), kIndex) == 0);
  CHECK(three_point_interior(M("B1"), M("B2"), kIndex) == 0);
}

TEST_CASE("boundary case families are exclusive for degree <= 6") {
  for (const Convention& conv : {kIndex, kTwice})
    for (int k = 0; k <= 6; ++k)
      for (const Monomial& c : enumerate_degree(k))
        for (const Monomial& b : enumerate_degree(k)) {
          CHECK_NOTHROW(three_point_boundary(c, SimpleKind::AcuteSimple, b, conv));
          CHECK_NOTHROW(three_point_boundary(c, SimpleKind::GraveSimple, b, conv));
        }
}

TEST_CASE("interior families overlap from degree 4 on and sum") {
  // Bar-pair exchange (d = A1, value 1/4) plus bar-acute exchange through
  // the swapped orientation (d = B1, value 1).
  CHECK(three_point_interior(M("A1*B1^2"), M("G1*B1^2"), kIndex) ==
        Rational(1, 4) + 1);
  CHECK(three_point_interior(M("G1*B1^2"), M("A1*B1^2"), kIndex) ==
        Rational(1, 4) + 1);
}

TEST_CASE("two point matrix inverts to the star-diagonal aut matrix") {
  // F with F[p][q] = delta(beta_p = beta_q*) |Aut(beta_p)| satisfies
  // sum_q <(beta_p, beta_q)> F[q][r] = delta_pr.
  for (const Convention& conv : {kIndex, kTwice})
    for (int k = 0; k <= 5; ++k) {
      const auto basis = enumerate_degree(k);
      for (std::size_t p = 0; p < basis.size(); ++p)
        for (std::size_t r = 0; r < basis.size(); ++r) {
          Rational sum;
          for (std::size_t q = 0; q < basis.size(); ++q) {
            if (basis[q] != basis[r].star()) continue;
            sum += two_point(basis[p], basis[q], conv) *
                   Rational(basis[q].aut_order(conv));
          }
          CHECK(sum == (p == r ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("contraction step on base layers") {
  CHECK(contraction_step(base_layer(2, kIndex), SimpleKind::InteriorSimple,
                         M("B1^2"), kIndex) == Rational(1, 2));
  CHECK(contraction_step(base_layer(2, kIndex), SimpleKind::InteriorSimple,
                         M("D1"), kIndex) == 0);
  CHECK(contraction_step(base_layer(2, kIndex), SimpleKind::AcuteSimple, M("G1"),
                         kIndex) == Rational(1, 2));
  CHECK(contraction_step(base_layer(2, kTwice), SimpleKind::AcuteSimple, M("G1"),
                         kTwice) == Rational(1, 2));
}
