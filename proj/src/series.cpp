#include "hurwitz/series.hpp"

#include <sstream>
#include <stdexcept>

namespace hurwitz {

Rational TruncatedSeries::get(int m, int a, int g, const Monomial& b) const {
  const auto slice = data_.find(Slice{m, a, g});
  if (slice == data_.end()) return 0;
  const auto it = slice->second.find(b);
  return it == slice->second.end() ? Rational(0) : it->second;
}

void TruncatedSeries::check_bounds(int m, int a, int g, const Monomial& b) const {
  if (m < 0 || a < 0 || g < 0 || m > bounds_.m_int || a > bounds_.m_acute ||
      g > bounds_.m_grave || b.degree() > bounds_.max_degree)
    throw std::invalid_argument("series index out of bounds");
}

void TruncatedSeries::set(int m, int a, int g, const Monomial& b,
                          const Rational& value) {
  check_bounds(m, a, g, b);
  if (value == 0) {
    auto slice = data_.find(Slice{m, a, g});
    if (slice != data_.end()) slice->second.erase(b);
    return;
  }
  data_[Slice{m, a, g}][b] = value;
}

void TruncatedSeries::add(int m, int a, int g, const Monomial& b,
                          const Rational& value) {
  if (value == 0) return;
  check_bounds(m, a, g, b);
  auto& cell = data_[Slice{m, a, g}][b];
  cell += value;
  if (cell == 0) data_[Slice{m, a, g}].erase(b);
}

bool TruncatedSeries::is_zero() const {
  for (const auto& [slice, coeffs] : data_)
    if (!coeffs.empty()) return false;
  return true;
}

std::size_t TruncatedSeries::coefficient_count() const {
  std::size_t n = 0;
  for (const auto& [slice, coeffs] : data_) n += coeffs.size();
  return n;
}

TruncatedSeries TruncatedSeries::plus(const TruncatedSeries& other) const {
  if (!(bounds_ == other.bounds_))
    throw std::invalid_argument("series bounds mismatch");
  TruncatedSeries out = *this;
  for (const auto& [slice, coeffs] : other.data_)
    for (const auto& [b, v] : coeffs) out.add(slice[0], slice[1], slice[2], b, v);
  return out;
}

std::string TruncatedSeries::to_json() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [slice, coeffs] : data_) {
    for (const auto& [b, v] : coeffs) {
      if (!first) out << ",";
      first = false;
      out << "\"" << slice[0] << "," << slice[1] << "," << slice[2] << ","
          << b.text() << "\":{\"num\":\""
          << boost::multiprecision::numerator(v) << "\",\"den\":\""
          << boost::multiprecision::denominator(v) << "\"}";
    }
  }
  out << "}";
  return out.str();
}

PolyOperator::PolyOperator(int max_degree, std::vector<OperatorTerm> terms)
    : max_degree_(max_degree), terms_(std::move(terms)) {}

PolyOperator PolyOperator::from_raw(int max_degree,
                                    std::vector<OperatorTerm> raw) {
  std::map<std::pair<Monomial, Monomial>, Rational> merged;
  for (auto& t : raw) {
    if (t.multiplier.degree() != t.derivatives.degree())
      throw std::logic_error("operator term does not preserve p-weight");
    if (t.multiplier.degree() > max_degree) continue;
    merged[{t.multiplier, t.derivatives}] += t.coefficient;
  }
  std::vector<OperatorTerm> terms;
  for (auto& [key, coeff] : merged)
    if (coeff != 0) terms.push_back({key.first, key.second, coeff});
  return PolyOperator(max_degree, std::move(terms));
}

const char* operator_kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::BetaLiteral: return "L_beta(literal)";
    case OperatorKind::GammaLiteral: return "L_gamma(literal)";
    case OperatorKind::AlphaLiteral: return "L_alpha(literal)";
    case OperatorKind::BetaDerived: return "L_beta(derived)";
    case OperatorKind::GammaDerived: return "L_gamma(derived)";
    case OperatorKind::AlphaDerived: return "L_alpha(derived)";
  }
  return "?";
}

namespace {

Monomial mono(Generator g) { return Monomial{}.with(g); }
Monomial mono(Generator g, Generator h) { return Monomial{}.with(g).with(h); }

int min4(int a, int b, int c, int d) { return std::min(std::min(a, b), std::min(c, d)); }

// Literal transcriptions. Ordered sums land on canonical term keys
// and merge; truncation keeps term weight <= K.
void beta_literal_terms(int K, std::vector<OperatorTerm>& t) {
  for (int i = 1; 2 * i <= K; ++i)
    t.push_back({mono({Family::Grave, i}), mono({Family::Dot, i}), Rational(i)});
  for (int i = 1; i <= K; ++i)
    for (int j = 1; (2 * i - 1) + 2 * j <= K; ++j)
      t.push_back({mono({Family::Bar, i}, {Family::Grave, j}),
                   mono({Family::Bar, i + j}), Rational(1)});
  for (int i = 1; 2 * i <= K; ++i)
    for (int j = 1; 2 * i + 2 * j <= K; ++j)
      t.push_back({mono({Family::Grave, i}, {Family::Grave, j}),
                   mono({Family::Grave, i + j}), Rational(1)});
  for (int i = 1; 2 * i - 1 <= K; ++i)
    for (int j = 1; (2 * i - 1) + (2 * j - 1) <= K; ++j)
      t.push_back({mono({Family::Bar, i}, {Family::Bar, j}),
                   mono({Family::Acute, i + j - 1}), Rational(1)});
}

void gamma_literal_terms(int K, std::vector<OperatorTerm>& t) {
  for (int i = 1; 2 * i <= K; ++i)
    t.push_back({mono({Family::Dot, i}), mono({Family::Grave, i}), Rational(1)});
  for (int i = 1; i <= K; ++i)
    for (int j = 1; (2 * i - 1) + 2 * j <= K; ++j)
      t.push_back({mono({Family::Bar, i + j}),
                   mono({Family::Bar, i}, {Family::Grave, j}), Rational(2)});
  for (int i = 1; 2 * i <= K; ++i)
    for (int j = 1; 2 * i + 2 * j <= K; ++j)
      t.push_back({mono({Family::Grave, i + j}),
                   mono({Family::Grave, i}, {Family::Grave, j}), Rational(2)});
  for (int i = 1; 2 * i - 1 <= K; ++i)
    for (int j = 1; (2 * i - 1) + (2 * j - 1) <= K; ++j)
      t.push_back({mono({Family::Acute, i + j - 1}),
                   mono({Family::Bar, i}, {Family::Bar, j}), Rational(1, 2)});
}

void alpha_literal_terms(int K, std::vector<OperatorTerm>& t) {
  // Dot cut/join
  for (int i = 1; i <= K; ++i)
    for (int j = 1; 2 * i + 2 * j <= K; ++j) {
      t.push_back({mono({Family::Dot, i}, {Family::Dot, j}),
                   mono({Family::Dot, i + j}), Rational(i + j, 2)});
      t.push_back({mono({Family::Dot, i + j}),
                   mono({Family::Dot, i}, {Family::Dot, j}), Rational(i * j, 2)});
    }
  // Dot-bar
  for (int i = 1; i <= K; ++i)
    for (int j = 1; 2 * i + (2 * j - 1) <= K; ++j) {
      t.push_back({mono({Family::Dot, i}, {Family::Bar, j}),
                   mono({Family::Bar, i + j}), Rational(2 * j - 1)});
      t.push_back({mono({Family::Bar, i + j}),
                   mono({Family::Dot, i}, {Family::Bar, j}),
                   Rational(i) * (2 * j - 1)});
    }
  // Dot-acute and dot-grave
  for (int i = 1; i <= K; ++i)
    for (int j = 1; 2 * i + 2 * j <= K; ++j) {
      t.push_back({mono({Family::Dot, i}, {Family::Acute, j}),
                   mono({Family::Acute, i + j}), Rational(2) * (2 * j)});
      t.push_back({mono({Family::Acute, i + j}),
                   mono({Family::Dot, i}, {Family::Acute, j}),
                   Rational(2 * i) * (2 * j)});
      t.push_back({mono({Family::Dot, i}, {Family::Grave, j}),
                   mono({Family::Grave, i + j}), Rational(2) * (2 * j)});
      t.push_back({mono({Family::Grave, i + j}),
                   mono({Family::Dot, i}, {Family::Grave, j}),
                   Rational(2 * i) * (2 * j)});
    }
  // Bar-acute / bar-grave exchanges, i+j = k+l
  for (int i = 1; i <= K; ++i)
    for (int j = 1; (2 * i - 1) + 2 * j <= K; ++j)
      for (int k = 1; k <= i + j - 1; ++k) {
        const int l = i + j - k;
        const int mn = min4(2 * i - 1, 2 * j, 2 * k - 1, 2 * l);
        t.push_back({mono({Family::Bar, k}, {Family::Acute, l}),
                     mono({Family::Bar, i}, {Family::Acute, j}),
                     Rational(2 * mn)});
        t.push_back({mono({Family::Bar, k}, {Family::Grave, l}),
                     mono({Family::Bar, i}, {Family::Grave, j}),
                     Rational(2 * mn)});
      }
  // {A, G} derivative, bar-pair multiplier: i+j+1 = k+l
  for (int i = 1; i <= K; ++i)
    for (int j = 1; 2 * i + 2 * j <= K; ++j)
      for (int k = 1; k <= i + j; ++k) {
        const int l = i + j + 1 - k;
        const int sym = (k == l) ? 2 : 1;
        t.push_back({mono({Family::Bar, k}, {Family::Bar, l}),
                     mono({Family::Acute, i}, {Family::Grave, j}),
                     Rational(2 * sym) * min4(2 * i, 2 * j, 2 * k - 1, 2 * l - 1)});
      }
  // Bar-pair derivative, {A, G} multiplier: i+j = k+l+1
  for (int i = 1; i <= K; ++i)
    for (int j = 1; (2 * i - 1) + (2 * j - 1) <= K; ++j)
      for (int k = 1; k <= i + j - 2; ++k) {
        const int l = i + j - 1 - k;
        const int sym = (i == j) ? 2 : 1;
        t.push_back({mono({Family::Acute, k}, {Family::Grave, l}),
                     mono({Family::Bar, i}, {Family::Bar, j}),
                     Rational(sym, 2) * min4(2 * i - 1, 2 * j - 1, 2 * k, 2 * l)});
      }
  // Same-family exchanges with (1 + delta_ij)(1 + delta_kl)
  for (int i = 1; i <= K; ++i)
    for (int j = 1; (2 * i - 1) + (2 * j - 1) <= K; ++j)
      for (int k = 1; k <= i + j - 1; ++k) {
        const int l = i + j - k;
        const Rational sym((i == j ? 2 : 1) * (k == l ? 2 : 1));
        t.push_back({mono({Family::Bar, k}, {Family::Bar, l}),
                     mono({Family::Bar, i}, {Family::Bar, j}),
                     sym / 4 * min4(2 * i - 1, 2 * j - 1, 2 * k - 1, 2 * l - 1)});
      }
  for (int i = 1; i <= K; ++i)
    for (int j = 1; 2 * i + 2 * j <= K; ++j)
      for (int k = 1; k <= i + j - 1; ++k) {
        const int l = i + j - k;
        const Rational sym((i == j ? 2 : 1) * (k == l ? 2 : 1));
        const Rational mn(min4(2 * i, 2 * j, 2 * k, 2 * l));
        t.push_back({mono({Family::Acute, k}, {Family::Acute, l}),
                     mono({Family::Acute, i}, {Family::Acute, j}), sym * mn});
        t.push_back({mono({Family::Grave, k}, {Family::Grave, l}),
                     mono({Family::Grave, i}, {Family::Grave, j}), sym * mn});
      }
}

// Derived operators: one term per correlator case instance, coefficient
// equal to the per-component automorphism factor of the derivative pattern
// times the case value. Falling-factorial multiplicities produced by the
// derivatives then reproduce |Aut(pred)| / |Aut(d)|.
Rational unit_factor(const Monomial& pattern, const Convention& conv) {
  Rational u = 1;
  for (const auto& term : pattern.terms())
    for (int x = 0; x < term.mult; ++x) switch (term.family) {
        case Family::Acute:
        case Family::Grave: u *= 2; break;
        case Family::Bar: break;
        case Family::Dot: u *= Rational(conv.dot_aut(term.index)); break;
      }
  return u;
}

void push_case(std::vector<OperatorTerm>& t, const Convention& conv,
               const Monomial& consumed, const Monomial& produced,
               const Rational& value) {
  t.push_back({consumed, produced, unit_factor(produced, conv) * value});
}

void beta_derived_terms(int K, const Convention& conv,
                        std::vector<OperatorTerm>& t) {
  for (int i = 1; 2 * i <= K; ++i)
    push_case(t, conv, mono({Family::Grave, i}), mono({Family::Dot, i}),
              Rational(1, 2));
  for (int i = 1; i <= K; ++i)
    for (int j = 1; (2 * i - 1) + 2 * j <= K; ++j)
      push_case(t, conv, mono({Family::Bar, i}, {Family::Grave, j}),
                mono({Family::Bar, i + j}), Rational(1));
  for (int i = 1; 2 * i <= K; ++i)
    for (int j = i; 2 * i + 2 * j <= K; ++j)  // unordered {i, j}
      push_case(t, conv, mono({Family::Grave, i}, {Family::Grave, j}),
                mono({Family::Grave, i + j}),
                i == j ? Rational(1, 2) : Rational(1));
  for (int i = 1; 2 * i - 1 <= K; ++i)
    for (int j = i; (2 * i - 1) + (2 * j - 1) <= K; ++j)
      push_case(t, conv, mono({Family::Bar, i}, {Family::Bar, j}),
                mono({Family::Acute, i + j - 1}),
                i == j ? Rational(1, 2) : Rational(1));
}

void gamma_derived_terms(int K, const Convention& conv,
                         std::vector<OperatorTerm>& t) {
  for (int i = 1; 2 * i <= K; ++i)
    push_case(t, conv, mono({Family::Dot, i}), mono({Family::Grave, i}),
              Rational(1, 2));
  for (int n = 2; 2 * n - 1 <= K; ++n)
    for (int i = 1; i <= n - 1; ++i)
      push_case(t, conv, mono({Family::Bar, n}),
                mono({Family::Bar, i}, {Family::Grave, n - i}), Rational(1));
  for (int n = 2; 2 * n <= K; ++n)
    for (int i = 1; 2 * i <= n; ++i)
      push_case(t, conv, mono({Family::Grave, n}),
                mono({Family::Grave, i}, {Family::Grave, n - i}),
                i == n - i ? Rational(1, 2) : Rational(1));
  for (int n = 1; 2 * n <= K; ++n)
    for (int i = 1; 2 * i <= n + 1; ++i)
      push_case(t, conv, mono({Family::Acute, n}),
                mono({Family::Bar, i}, {Family::Bar, n + 1 - i}),
                i == n + 1 - i ? Rational(1, 2) : Rational(1));
}

void alpha_derived_terms(int K, const Convention& conv,
                         std::vector<OperatorTerm>& t) {
  // Dot join: consume D(n), produce {D(i), D(j)}; and the cut direction.
  for (int n = 2; 2 * n <= K; ++n)
    for (int i = 1; 2 * i <= n; ++i)
      push_case(t, conv, mono({Family::Dot, n}),
                mono({Family::Dot, i}, {Family::Dot, n - i}),
                i == n - i ? Rational(1, 2) : Rational(1));
  for (int i = 1; 2 * i <= K; ++i)
    for (int j = i; 2 * i + 2 * j <= K; ++j)
      push_case(t, conv, mono({Family::Dot, i}, {Family::Dot, j}),
                mono({Family::Dot, i + j}),
                i == j ? Rational(1, 2) : Rational(1));
  // Bar with dot
  for (int n = 2; 2 * n - 1 <= K; ++n)
    for (int i = 1; i <= n - 1; ++i)
      push_case(t, conv, mono({Family::Bar, n}),
                mono({Family::Dot, i}, {Family::Bar, n - i}),
                Rational(2 * (n - i) - 1));
  for (int i = 1; i <= K; ++i)
    for (int j = 1; 2 * i + (2 * j - 1) <= K; ++j)
      push_case(t, conv, mono({Family::Dot, i}, {Family::Bar, j}),
                mono({Family::Bar, i + j}), Rational(2 * j - 1));
  // Acute / grave with dot
  for (int n = 2; 2 * n <= K; ++n)
    for (int i = 1; i <= n - 1; ++i) {
      push_case(t, conv, mono({Family::Acute, n}),
                mono({Family::Dot, i}, {Family::Acute, n - i}),
                Rational(2 * (n - i)));
      push_case(t, conv, mono({Family::Grave, n}),
                mono({Family::Dot, i}, {Family::Grave, n - i}),
                Rational(2 * (n - i)));
    }
  for (int i = 1; i <= K; ++i)
    for (int j = 1; 2 * i + 2 * j <= K; ++j) {
      push_case(t, conv, mono({Family::Dot, i}, {Family::Acute, j}),
                mono({Family::Acute, i + j}), Rational(2 * j));
      push_case(t, conv, mono({Family::Dot, i}, {Family::Grave, j}),
                mono({Family::Grave, i + j}), Rational(2 * j));
    }
  // Bar-acute / bar-grave exchange
  for (int k = 1; k <= K; ++k)
    for (int l = 1; (2 * k - 1) + 2 * l <= K; ++l)
      for (int i = 1; i <= k + l - 1; ++i) {
        const int j = k + l - i;
        const Rational mn(min4(2 * i - 1, 2 * j, 2 * k - 1, 2 * l));
        push_case(t, conv, mono({Family::Bar, k}, {Family::Acute, l}),
                  mono({Family::Bar, i}, {Family::Acute, j}), mn);
        push_case(t, conv, mono({Family::Bar, k}, {Family::Grave, l}),
                  mono({Family::Bar, i}, {Family::Grave, j}), mn);
      }
  // {B, B} <-> {A, G}
  for (int k = 1; 2 * k - 1 <= K; ++k)
    for (int l = k; (2 * k - 1) + (2 * l - 1) <= K; ++l)
      for (int i = 1; i + 2 <= k + l; ++i) {
        const int j = k + l - 1 - i;
        push_case(t, conv, mono({Family::Bar, k}, {Family::Bar, l}),
                  mono({Family::Grave, i}, {Family::Acute, j}),
                  Rational(min4(2 * i, 2 * j, 2 * k - 1, 2 * l - 1)));
      }
  for (int i = 1; i <= K; ++i)
    for (int j = 1; 2 * i + 2 * j <= K; ++j)
      for (int k = 1; 2 * k <= i + j + 1; ++k) {
        const int l = i + j + 1 - k;
        push_case(t, conv, mono({Family::Acute, i}, {Family::Grave, j}),
                  mono({Family::Bar, k}, {Family::Bar, l}),
                  Rational(min4(2 * i, 2 * j, 2 * k - 1, 2 * l - 1)));
      }
  // Same-family exchanges; the bar-bar family in one orientation only.
  for (int k = 1; 2 * k <= K; ++k)
    for (int l = k; 2 * k + 2 * l <= K; ++l)
      for (int i = 1; 2 * i <= k + l; ++i) {
        const int j = k + l - i;
        const Rational sym =
            (i == j && k == l) ? Rational(1, 2) : Rational(1);
        const Rational mn(min4(2 * i, 2 * j, 2 * k, 2 * l));
        push_case(t, conv, mono({Family::Acute, k}, {Family::Acute, l}),
                  mono({Family::Acute, i}, {Family::Acute, j}), sym * mn);
        push_case(t, conv, mono({Family::Grave, k}, {Family::Grave, l}),
                  mono({Family::Grave, i}, {Family::Grave, j}), sym * mn);
      }
  for (int k = 1; 2 * k - 1 <= K; ++k)
    for (int l = k; (2 * k - 1) + (2 * l - 1) <= K; ++l)
      for (int i = 1; 2 * i <= k + l; ++i) {
        const int j = k + l - i;
        const Rational sym =
            (i == j && k == l) ? Rational(1, 2) : Rational(1);
        push_case(t, conv, mono({Family::Bar, k}, {Family::Bar, l}),
                  mono({Family::Bar, i}, {Family::Bar, j}),
                  sym * min4(2 * i - 1, 2 * j - 1, 2 * k - 1, 2 * l - 1));
      }
}

}  // namespace

PolyOperator build_operator(OperatorKind which, int max_degree,
                            const Convention& conv) {
  std::vector<OperatorTerm> raw;
  switch (which) {
    case OperatorKind::BetaLiteral: beta_literal_terms(max_degree, raw); break;
    case OperatorKind::GammaLiteral: gamma_literal_terms(max_degree, raw); break;
    case OperatorKind::AlphaLiteral: alpha_literal_terms(max_degree, raw); break;
    case OperatorKind::BetaDerived:
      beta_derived_terms(max_degree, conv, raw);
      break;
    case OperatorKind::GammaDerived:
      gamma_derived_terms(max_degree, conv, raw);
      break;
    case OperatorKind::AlphaDerived:
      alpha_derived_terms(max_degree, conv, raw);
      break;
  }
  return PolyOperator::from_raw(max_degree, std::move(raw));
}

namespace {

// Falling-factorial multiplicity of applying the derivative pattern.
Rational derivative_factor(const Monomial& mono, const Monomial& derivs) {
  Rational f = 1;
  for (const auto& t : derivs.terms()) {
    const int s = mono.multiplicity(t.family, t.index);
    if (s < t.mult) return 0;
    for (int x = 0; x < t.mult; ++x) f *= (s - x);
  }
  return f;
}

}  // namespace

TruncatedSeries apply(const PolyOperator& op, const TruncatedSeries& s) {
  if (op.max_degree() < s.bounds().max_degree)
    throw std::invalid_argument("operator truncated below series degree bound");
  TruncatedSeries out(s.bounds());
  for (const auto& [slice, coeffs] : s.slices()) {
    for (const auto& [b, v] : coeffs) {
      for (const OperatorTerm& term : op.terms()) {
        const Rational ff = derivative_factor(b, term.derivatives);
        if (ff == 0) continue;
        const Monomial target =
            b.divide(term.derivatives)->times(term.multiplier);
        out.add(slice[0], slice[1], slice[2], target, term.coefficient * ff * v);
      }
    }
  }
  return out;
}

SeriesTriple from_engine(Engine& engine, const SeriesBounds& bounds) {
  SeriesTriple out{TruncatedSeries(bounds), TruncatedSeries(bounds),
                   TruncatedSeries(bounds)};
  for (int m = 0; m <= bounds.m_int; ++m)
    for (int a = 0; a <= bounds.m_acute; ++a)
      for (int g = 0; g <= bounds.m_grave; ++g)
        for (int k = 0; k <= bounds.max_degree; ++k)
          for (const Monomial& b : enumerate_degree(k)) {
            const RefinedValue rv = engine.refined(m, a, g, b);
            out.acute.set(m, a, g, b, rv.h_acute);
            out.grave.set(m, a, g, b, rv.h_grave);
            out.total.set(m, a, g, b, rv.total());
          }
  return out;
}

TruncatedSeries residual(Direction which, const SeriesTriple& series,
                         const PolyOperator& op) {
  const SeriesBounds& bounds = series.total.bounds();
  const TruncatedSeries applied = apply(op, series.total);
  TruncatedSeries res(bounds);
  const int m_hi = which == Direction::Alpha ? bounds.m_int - 1 : bounds.m_int;
  const int a_hi = which == Direction::Beta ? bounds.m_acute - 1 : bounds.m_acute;
  const int g_hi = which == Direction::Gamma ? bounds.m_grave - 1 : bounds.m_grave;
  for (int m = 0; m <= m_hi; ++m)
    for (int a = 0; a <= a_hi; ++a)
      for (int g = 0; g <= g_hi; ++g)
        for (int k = 0; k <= bounds.max_degree; ++k)
          for (const Monomial& b : enumerate_degree(k)) {
            Rational shifted;
            switch (which) {
              case Direction::Beta: shifted = series.acute.get(m, a + 1, g, b); break;
              case Direction::Gamma: shifted = series.grave.get(m, a, g + 1, b); break;
              case Direction::Alpha: shifted = series.total.get(m + 1, a, g, b); break;
            }
            res.add(m, a, g, b, shifted - applied.get(m, a, g, b));
          }
  return res;
}

}  // namespace hurwitz
