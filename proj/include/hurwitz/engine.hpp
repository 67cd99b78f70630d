#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "hurwitz/correlators.hpp"
#include "hurwitz/monomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

struct HurwitzIndex {
  int m = 0;       // interior simple critical values
  int acute = 0;   // acute-points
  int grave = 0;   // grave-points
  Monomial b;

  friend bool operator==(const HurwitzIndex&, const HurwitzIndex&) = default;
  friend auto operator<=>(const HurwitzIndex&, const HurwitzIndex&) = default;
};

struct RefinedValue {
  Rational h_acute;
  Rational h_grave;
  Rational total() const { return h_acute + h_grave; }
};

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Memoized evaluator for disk single Hurwitz numbers. Default reduction
// order removes boundary simple points first, then interior ones, down to
// the (0,0,0) base slice. Thread-safe; results are independent of query
// order and scheduling.
class Engine {
 public:
  explicit Engine(Convention conv) : conv_(conv) {}

  const Convention& convention() const { return conv_; }

  // h(0,0,b): nonzero only on Bar/Dot monomials, value 1/|Aut(b)|.
  static Rational base(const Monomial& b, const Convention& conv);

  // Refined-total h(m, acute, grave, b). Zero for negative arguments.
  Rational value(int m, int acute, int grave, const Monomial& b);

  // Split of value() into the acute-/grave-preceded parts. On the
  // (acute, grave) = (0, 0) slice the classification is vacuous and the
  // value is split half-half.
  RefinedValue refined(int m, int acute, int grave, const Monomial& b);

  // h(m, points, b) = sum of value(m, a, g, b) over a + g = points.
  Rational total(int m, int points, const Monomial& b);

  // All values of one memo layer at the given degree.
  std::map<Monomial, Rational> layer(int m, int acute, int grave, int degree);

  struct Move {
    Monomial predecessor;
    Rational coefficient;
  };
  static std::vector<Move> acute_moves(const Monomial& b, const Convention& conv);
  static std::vector<Move> grave_moves(const Monomial& b, const Convention& conv);
  static std::vector<Move> interior_moves(const Monomial& b, const Convention& conv);
  static std::vector<Move> moves(SimpleKind kind, const Monomial& b,
                                 const Convention& conv);

  // One recursion step from the layer at (m, acute, grave), both routes.
  // step_by_moves is the engine's fast path; step_by_contraction is the
  // normative oracle. They must agree exactly.
  Rational step_by_moves(SimpleKind kind, int m, int acute, int grave,
                         const Monomial& b);
  Rational step_by_contraction(SimpleKind kind, int m, int acute, int grave,
                               const Monomial& b);

  // Same steps taken from the point-total layer h(m, points, .).
  Rational step_on_totals(SimpleKind kind, int m, int points, const Monomial& b);

  // Memo cache, line oriented:
  //   hurwitz-memo 1 <index|twice-index>
  //   <m> <acute> <grave> <monomial> <num> <den>
  // Loading a cache written under a different convention is a CacheError.
  void save_cache(std::ostream& out) const;
  void load_cache(std::istream& in);

  std::size_t memo_size() const;

 private:
  Rational compute(int m, int acute, int grave, const Monomial& b);

  Convention conv_;
  mutable std::mutex mutex_;
  std::map<std::tuple<int, int, int, Monomial>, Rational> memo_;
};

}  // namespace hurwitz
