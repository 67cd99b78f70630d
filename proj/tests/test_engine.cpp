#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hurwitz/engine.hpp"
#include "hurwitz/literal.hpp"

using namespace hurwitz;

namespace {
Monomial M(const char* text) { return Monomial::parse(text); }
const Convention kIndex{DotWeight::Index};
const Convention kTwice{DotWeight::TwiceIndex};
}  // namespace

TEST_CASE("base case") {
  CHECK(Engine::base(M("B1^2"), kIndex) == Rational(1, 2));
  CHECK(Engine::base(M("A1"), kIndex) == 0);
  CHECK(Engine::base(Monomial{}, kIndex) == 1);
  CHECK(Engine::base(M("D2"), kIndex) == Rational(1, 2));
  CHECK(Engine::base(M("D2"), kTwice) == Rational(1, 4));
}

TEST_CASE("refined golden values") {
  for (const Convention& conv : {kIndex, kTwice}) {
    Engine engine(conv);
    CHECK(engine.refined(0, 0, 1, M("A1")).h_grave == Rational(1, 2));
    CHECK(engine.refined(0, 1, 0, M("G1")).h_acute == Rational(1, 2));
    CHECK(engine.refined(0, 1, 0, M("A1")).h_acute == 0);
  }
}

TEST_CASE("interior step golden values") {
  Engine engine(kIndex);
  CHECK(engine.value(1, 0, 0, M("B1^2")) == Rational(1, 2));
  CHECK(engine.value(1, 0, 0, M("D1")) == 0);
  CHECK(engine.value(1, 0, 0, M("B1")) == 0);
}

TEST_CASE("totals") {
  Engine engine(kIndex);
  CHECK(engine.total(0, 0, M("B1^2")) == Rational(1, 2));
  CHECK(engine.total(0, 1, M("A1")) == Rational(1, 2));
  CHECK(engine.total(5, 3, M("B1")) == 0);
}

TEST_CASE("refined split sums to the total") {
  Engine engine(kIndex);
  for (int k = 0; k <= 4; ++k)
    for (const Monomial& b : enumerate_degree(k))
      for (int m = 0; m <= 2; ++m)
        for (int a = 0; a <= 2; ++a)
          for (int g = 0; a + g <= 2; ++g)
            CHECK(engine.refined(m, a, g, b).total() == engine.value(m, a, g, b));
}

TEST_CASE("moves conserve degree") {
  for (int k = 0; k <= 8; ++k)
    for (const Monomial& b : enumerate_degree(k))
      for (SimpleKind kind : {SimpleKind::AcuteSimple, SimpleKind::GraveSimple,
                              SimpleKind::InteriorSimple})
        for (const Engine::Move& mv : Engine::moves(kind, b, kIndex))
          CHECK(mv.predecessor.degree() == b.degree());
}

TEST_CASE("fast path equals contraction (spot range)") {
  for (const Convention& conv : {kIndex, kTwice}) {
    Engine engine(conv);
    for (int k = 0; k <= 4; ++k)
      for (const Monomial& b : enumerate_degree(k))
        for (int m = 0; m <= 1; ++m)
          for (int a = 0; a + m <= 2; ++a)
            for (int g = 0; a + g + m <= 2; ++g)
              for (SimpleKind kind :
                   {SimpleKind::AcuteSimple, SimpleKind::GraveSimple,
                    SimpleKind::InteriorSimple})
                CHECK(engine.step_by_moves(kind, m, a, g, b) ==
                      engine.step_by_contraction(kind, m, a, g, b));
  }
}

TEST_CASE("totals satisfy the one-step boundary identity") {
  // h(m, points+1, b) equals the acute plus grave steps taken from the
  // point-total layer, for the default reduction order.
  Engine engine(kIndex);
  for (int k = 0; k <= 4; ++k)
    for (const Monomial& b : enumerate_degree(k))
      for (int m = 0; m <= 1; ++m)
        for (int points = 0; points + m <= 2; ++points)
          CHECK(engine.total(m, points + 1, b) ==
                engine.step_on_totals(SimpleKind::AcuteSimple, m, points, b) +
                    engine.step_on_totals(SimpleKind::GraveSimple, m, points, b));
}

TEST_CASE("memoization transparency") {
  Engine cold(kIndex);
  Engine warm(kIndex);
  // Warm one engine in a scrambled order, then compare everything.
  for (int k = 4; k >= 0; --k)
    for (const Monomial& b : enumerate_degree(k)) warm.total(1, 2, b);
  for (int k = 0; k <= 4; ++k)
    for (const Monomial& b : enumerate_degree(k)) {
      CHECK(cold.total(0, 2, b) == warm.total(0, 2, b));
      CHECK(cold.total(1, 1, b) == warm.total(1, 1, b));
      CHECK(cold.value(1, 1, 0, b) == warm.value(1, 1, 0, b));
    }
}

TEST_CASE("cache round trip and convention guard") {
  Engine engine(kIndex);
  for (int k = 0; k <= 3; ++k)
    for (const Monomial& b : enumerate_degree(k)) engine.total(1, 1, b);
  std::ostringstream out;
  engine.save_cache(out);

  Engine reloaded(kIndex);
  std::istringstream in(out.str());
  reloaded.load_cache(in);
  CHECK(reloaded.memo_size() == engine.memo_size());
  CHECK(reloaded.total(1, 1, M("B1*G1")) == engine.total(1, 1, M("B1*G1")));

  Engine wrong(kTwice);
  std::istringstream in2(out.str());
  CHECK_THROWS_AS(wrong.load_cache(in2), CacheError);

  Engine bad(kIndex);
  std::istringstream in3("not-a-cache 9 index\n");
  CHECK_THROWS_AS(bad.load_cache(in3), CacheError);
}

TEST_CASE("literal boundary rules match the normative step under Index") {
  Engine engine(kIndex);
  for (int k = 0; k <= 4; ++k)
    for (const Monomial& b : enumerate_degree(k))
      for (int m = 0; m <= 1; ++m)
        for (int a = 0; a + m <= 1; ++a) {
          const int g = 1 - m - a;
          if (g < 0) continue;
          CHECK(literal_acute_step(engine, m, a, g, b) ==
                engine.step_by_moves(SimpleKind::AcuteSimple, m, a, g, b));
          CHECK(literal_grave_step(engine, m, a, g, b) ==
                engine.step_by_moves(SimpleKind::GraveSimple, m, a, g, b));
        }
}

TEST_CASE("acute-step dot term diverges under TwiceIndex with ratio 2") {
  Engine engine(kTwice);
  const Monomial b = M("G1");
  const Rational lit = literal_acute_step(engine, 0, 0, 0, b);
  const Rational norm = engine.step_by_moves(SimpleKind::AcuteSimple, 0, 0, 0, b);
  CHECK(lit == Rational(1, 4));
  CHECK(norm == Rational(1, 2));
  CHECK(norm == 2 * lit);
}

TEST_CASE("boundary-step literal matches the normative totals step under Index") {
  Engine engine(kIndex);
  for (int k = 0; k <= 4; ++k)
    for (const Monomial& b : enumerate_degree(k))
      for (int m = 0; m <= 1; ++m)
        for (int points = 0; points + m <= 1; ++points)
          CHECK(literal_boundary_step(engine, m, points, b) ==
                engine.step_on_totals(SimpleKind::AcuteSimple, m, points, b) +
                    engine.step_on_totals(SimpleKind::GraveSimple, m, points, b));
}

TEST_CASE("interior-step literal diverges exactly by the diagonal self-pair delta") {
  for (const Convention& conv : {kIndex}) {
    Engine engine(conv);
    for (int k = 0; k <= 5; ++k)
      for (const Monomial& b : enumerate_degree(k))
        for (int m = 0; m <= 1; ++m)
          for (int points = 0; points + m <= 2; ++points) {
            const Rational lit = literal_interior_step(engine, m, points, b);
            const Rational norm =
                engine.step_on_totals(SimpleKind::InteriorSimple, m, points, b);
            CHECK(lit - norm == interior_diagonal_delta(engine, m, points, b));
          }
  }
}
