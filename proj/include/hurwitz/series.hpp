#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/engine.hpp"
#include "hurwitz/monomial.hpp"

namespace hurwitz {

struct SeriesBounds {
  int m_int = 0;   // max interior order (alpha)
  int m_acute = 0; // max acute order (beta)
  int m_grave = 0; // max grave order (gamma)
  int max_degree = 0;

  friend bool operator==(const SeriesBounds&, const SeriesBounds&) = default;
};

// Finite coefficient table of a generating function, graded by
// (m, acute, grave) and p-monomial. Absent coefficients are zero.
class TruncatedSeries {
 public:
  using Slice = std::array<int, 3>;

  TruncatedSeries() = default;
  explicit TruncatedSeries(SeriesBounds bounds) : bounds_(bounds) {}

  const SeriesBounds& bounds() const { return bounds_; }

  Rational get(int m, int a, int g, const Monomial& b) const;
  void set(int m, int a, int g, const Monomial& b, const Rational& value);
  void add(int m, int a, int g, const Monomial& b, const Rational& value);

  bool is_zero() const;
  std::size_t coefficient_count() const;

  const std::map<Slice, std::map<Monomial, Rational>>& slices() const {
    return data_;
  }

  TruncatedSeries plus(const TruncatedSeries& other) const;

  // JSON object keyed "m,acute,grave,monomial" -> {"num": "...", "den": "..."},
  // deterministic key order.
  std::string to_json() const;

 private:
  void check_bounds(int m, int a, int g, const Monomial& b) const;

  SeriesBounds bounds_;
  std::map<Slice, std::map<Monomial, Rational>> data_;
};

// Finite sum of multiply-and-differentiate terms. Every term preserves
// p-weight: degree(multiplier) == degree(derivatives).
struct OperatorTerm {
  Monomial multiplier;
  Monomial derivatives;
  Rational coefficient;
};

class PolyOperator {
 public:
  PolyOperator() = default;
  PolyOperator(int max_degree, std::vector<OperatorTerm> terms);

  int max_degree() const { return max_degree_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }

  // Canonically merged term list: unique (multiplier, derivatives) keys in
  // canonical order, zero coefficients dropped.
  static PolyOperator from_raw(int max_degree, std::vector<OperatorTerm> raw);

 private:
  int max_degree_ = 0;
  std::vector<OperatorTerm> terms_;
};

enum class OperatorKind {
  BetaLiteral,
  GammaLiteral,
  AlphaLiteral,
  BetaDerived,
  GammaDerived,
  AlphaDerived,
};

const char* operator_kind_name(OperatorKind k);

// Literal variants transcribe the closed-form operators term by term; derived
// variants are generated from the correlator tables so that applying them
// reproduces the contraction exactly. Index sums truncated to p-weight <= K.
PolyOperator build_operator(OperatorKind which, int max_degree,
                            const Convention& conv);

TruncatedSeries apply(const PolyOperator& op, const TruncatedSeries& s);

struct SeriesTriple {
  TruncatedSeries acute;  // refined by acute-point preceding
  TruncatedSeries grave;
  TruncatedSeries total;
};

SeriesTriple from_engine(Engine& engine, const SeriesBounds& bounds);

enum class Direction { Beta, Gamma, Alpha };

// Residual of the corresponding differential identity: the shifted series
// coefficient minus the coefficient of (op applied to total). Stored over
// all indices whose shifted index stays in bounds; zero residual = empty.
TruncatedSeries residual(Direction which, const SeriesTriple& series,
                         const PolyOperator& op);

}  // namespace hurwitz
