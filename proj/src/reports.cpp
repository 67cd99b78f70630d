#include "hurwitz/reports.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hurwitz/literal.hpp"

namespace hurwitz {

namespace {

constexpr const char* kFamilyAcuteDot = "acute-dot-term";
constexpr const char* kFamilyBetaDot = "beta-dot-term";
constexpr const char* kFamilyInteriorDiagonal = "interior-diagonal-self-pair";
constexpr const char* kFamilyInteriorDot = "interior-dot-term";
constexpr const char* kFamilyInitial = "initial-condition";
constexpr const char* kFamilyUnclassified = "unclassified";

std::string classify_boundary_diff(Engine& engine, int m, int a, int g,
                                   const Monomial& b, const Rational& lit,
                                   const Rational& norm) {
  if (lit - norm == acute_dot_delta(engine, m, a, g, b))
    return kFamilyAcuteDot;
  return kFamilyUnclassified;
}

}  // namespace

std::vector<RuleDiff> literal_rule_diff(Engine& engine, int max_degree,
                                        int max_points) {
  std::vector<RuleDiff> out;
  for (int k = 0; k <= max_degree; ++k) {
    for (const Monomial& b : enumerate_degree(k)) {
      // Refined boundary rules: targets (m, a+1, g) and (m, a, g+1).
      for (int total = 1; total <= max_points; ++total)
        for (int m = 0; m < total; ++m)
          for (int a = 0; a <= total - m - 1; ++a) {
            const int g = total - m - 1 - a;
            {
              const Rational lit = literal_acute_step(engine, m, a, g, b);
              const Rational norm =
                  engine.step_by_moves(SimpleKind::AcuteSimple, m, a, g, b);
              if (lit != norm)
                out.push_back({"acute-step",
                               classify_boundary_diff(engine, m, a, g, b, lit, norm),
                               m, a + 1, g, -1, b, lit, norm});
            }
            {
              const Rational lit = literal_grave_step(engine, m, a, g, b);
              const Rational norm =
                  engine.step_by_moves(SimpleKind::GraveSimple, m, a, g, b);
              if (lit != norm)
                out.push_back({"grave-step", kFamilyUnclassified, m, a, g + 1, -1,
                               b, lit, norm});
            }
          }
      // Point-total rules: targets (m, points+1) and (m+1, points).
      for (int total = 1; total <= max_points; ++total)
        for (int m = 0; m < total; ++m) {
          const int points = total - m - 1;
          const Rational lit = literal_boundary_step(engine, m, points, b);
          const Rational norm =
              engine.step_on_totals(SimpleKind::AcuteSimple, m, points, b) +
              engine.step_on_totals(SimpleKind::GraveSimple, m, points, b);
          if (lit != norm) {
            // Classify against the dot-term delta computed on totals.
            Rational dot_delta;
            {
              const Convention conv = engine.convention();
              for (const auto& t : b.terms()) {
                if (t.family != Family::Grave) continue;
                const int i = t.index;
                dot_delta += (Rational(i, 2) - Rational(conv.dot_aut(i)) / 2) *
                             Rational(b.multiplicity(Family::Dot, i) + 1) *
                             engine.total(m, points,
                                          b.without({Family::Grave, i})
                                              .with({Family::Dot, i}));
              }
            }
            out.push_back({"boundary-step",
                           lit - norm == dot_delta ? kFamilyAcuteDot
                                                   : kFamilyUnclassified,
                           m, -1, -1, points + 1, b, lit, norm});
          }
        }
      for (int total = 1; total <= max_points; ++total)
        for (int m = 0; m < total; ++m) {
          const int points = total - m - 1;
          const Rational lit = literal_interior_step(engine, m, points, b);
          const Rational norm =
              engine.step_on_totals(SimpleKind::InteriorSimple, m, points, b);
          if (lit != norm) {
            const Rational diag = interior_diagonal_delta(engine, m, points, b);
            const std::string fam = (lit - norm == diag)
                                        ? kFamilyInteriorDiagonal
                                        : kFamilyInteriorDot;
            out.push_back(
                {"interior-step", fam, m + 1, -1, -1, points, b, lit, norm});
          }
        }
    }
  }
  return out;
}

std::vector<RouteDiff> route_commutation_report(Engine& engine,
                                                int max_degree) {
  std::vector<RouteDiff> out;
  for (int k = 0; k <= max_degree; ++k)
    for (const Monomial& b : enumerate_degree(k)) {
      const Rational boundary_first = engine.total(1, 1, b);
      const Rational interior_first =
          engine.step_on_totals(SimpleKind::InteriorSimple, 0, 1, b);
      out.push_back(
          {b, boundary_first, interior_first, boundary_first - interior_first});
    }
  return out;
}

namespace {

void operator_diffs_for(const char* name, OperatorKind literal,
                        OperatorKind derived, int K, const Convention& conv,
                        std::vector<OperatorDiff>& out) {
  const PolyOperator lit = build_operator(literal, K, conv);
  const PolyOperator der = build_operator(derived, K, conv);
  std::map<std::pair<Monomial, Monomial>, std::pair<Rational, Rational>> table;
  for (const auto& t : lit.terms())
    table[{t.multiplier, t.derivatives}].first = t.coefficient;
  for (const auto& t : der.terms())
    table[{t.multiplier, t.derivatives}].second = t.coefficient;
  for (const auto& [key, pair] : table) {
    if (pair.first == pair.second) continue;
    OperatorDiff d{name, kFamilyUnclassified, key.first, key.second,
                   pair.first, pair.second};
    const bool dot_term =
        key.second.family_count(Family::Dot) > 0 ||
        key.first.family_count(Family::Dot) > 0;
    if (std::string(name) == "beta" && dot_term) {
      d.family = kFamilyBetaDot;
    } else if (std::string(name) == "alpha") {
      // Fully diagonal self-pair terms: same pattern on both sides.
      if (key.first == key.second)
        d.family = kFamilyInteriorDiagonal;
      else if (dot_term)
        d.family = kFamilyInteriorDot;
    }
    out.push_back(std::move(d));
  }
}

Rational exp_reading_coefficient(const Monomial& b) {
  // Coefficient of p_b in exp(bar_p1 + dot_p1/2).
  for (const auto& t : b.terms())
    if (!(t.index == 1 &&
          (t.family == Family::Bar || t.family == Family::Dot)))
      return 0;
  const int s_bar = b.multiplicity(Family::Bar, 1);
  const int s_dot = b.multiplicity(Family::Dot, 1);
  Rational v = Rational(1) / Rational(factorial(s_bar));
  v /= Rational(factorial(s_dot));
  for (int i = 0; i < s_dot; ++i) v /= 2;
  return v;
}

}  // namespace

std::vector<std::string> ConsistencyReport::families_present() const {
  std::set<std::string> fams;
  for (const auto& d : operator_diffs) fams.insert(d.family);
  for (const auto& d : rule_diffs) fams.insert(d.family);
  if (!initial_condition_diffs.empty()) fams.insert(kFamilyInitial);
  return {fams.begin(), fams.end()};
}

bool ConsistencyReport::has_unclassified() const {
  for (const auto& d : operator_diffs)
    if (d.family == kFamilyUnclassified) return true;
  for (const auto& d : rule_diffs)
    if (d.family == kFamilyUnclassified) return true;
  return false;
}

std::string ConsistencyReport::text() const {
  std::ostringstream out;
  out << "consistency report\n";
  out << "dot-weight convention: " << convention.name() << "\n";
  out << "degree bound: " << max_degree << ", point bound: " << max_points
      << "\n\n";

  out << "[operators] literal vs derived-from-correlators, p-weight <= "
      << max_degree << "\n";
  if (operator_diffs.empty()) out << "  no differences\n";
  for (const auto& d : operator_diffs) {
    out << "  L_" << d.op << ": term " << d.multiplier.text() << " d/d["
        << d.derivatives.text() << "]  literal " << to_fraction(d.literal)
        << "  derived " << to_fraction(d.derived);
    if (d.derived != 0) out << "  ratio " << to_fraction(d.literal / d.derived);
    out << "  [" << d.family << "]\n";
  }
  out << "\n[recursions] literal single-step vs normative contraction\n";
  if (rule_diffs.empty()) out << "  no differences\n";
  for (const auto& d : rule_diffs) {
    out << "  " << d.rule << " at ";
    if (d.points >= 0)
      out << "(m=" << d.m << ", points=" << d.points;
    else
      out << "(m=" << d.m << ", acute=" << d.acute << ", grave=" << d.grave;
    out << ", b=" << d.b.text() << ")  literal " << to_fraction(d.literal)
        << "  normative " << to_fraction(d.normative) << "  [" << d.family
        << "]\n";
  }
  out << "\n[initial condition] product reading vs exp(bar_p1 + dot_p1/2) "
         "reading of the (0,0,0) slice\n";
  if (initial_condition_diffs.empty()) out << "  no differences\n";
  for (const auto& d : initial_condition_diffs)
    out << "  b=" << d.b.text() << "  product "
        << to_fraction(d.product_reading) << "  exponential "
        << to_fraction(d.exponential_reading) << "  [" << kFamilyInitial
        << "]\n";

  out << "\n[summary] families flagged:";
  const auto fams = families_present();
  if (fams.empty()) out << " none";
  for (const auto& f : fams) out << " " << f;
  out << "\n";
  return out.str();
}

ConsistencyReport consistency_report(const Convention& conv, int max_degree,
                                     int max_points) {
  ConsistencyReport report;
  report.convention = conv;
  report.max_degree = max_degree;
  report.max_points = max_points;

  operator_diffs_for("beta", OperatorKind::BetaLiteral,
                     OperatorKind::BetaDerived, max_degree, conv,
                     report.operator_diffs);
  operator_diffs_for("gamma", OperatorKind::GammaLiteral,
                     OperatorKind::GammaDerived, max_degree, conv,
                     report.operator_diffs);
  operator_diffs_for("alpha", OperatorKind::AlphaLiteral,
                     OperatorKind::AlphaDerived, max_degree, conv,
                     report.operator_diffs);

  Engine engine(conv);
  report.rule_diffs = literal_rule_diff(engine, max_degree, max_points);

  for (int k = 0; k <= max_degree; ++k)
    for (const Monomial& b : enumerate_degree(k)) {
      if (b.family_count(Family::Acute) > 0 || b.family_count(Family::Grave) > 0)
        continue;
      const Rational product = Engine::base(b, conv);
      const Rational exponential = exp_reading_coefficient(b);
      if (product != exponential)
        report.initial_condition_diffs.push_back({b, product, exponential});
    }
  return report;
}

std::string route_report_text(Engine& engine, int max_degree) {
  std::ostringstream out;
  out << "route commutation report\n";
  out << "dot-weight convention: " << engine.convention().name() << "\n";
  out << "h(1,1,b), boundary step outermost vs interior step outermost, "
         "degree <= "
      << max_degree << "\n\n";
  int nonzero = 0;
  for (const RouteDiff& d : route_commutation_report(engine, max_degree)) {
    out << "  b=" << d.b.text() << "  boundary-first "
        << to_fraction(d.boundary_first) << "  interior-first "
        << to_fraction(d.interior_first) << "  difference "
        << to_fraction(d.difference) << "\n";
    if (d.difference != 0) ++nonzero;
  }
  out << "\nnonzero differences: " << nonzero << "\n";
  return out.str();
}

}  // namespace hurwitz
