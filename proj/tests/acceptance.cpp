// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit status is the number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "hurwitz/classical.hpp"
#include "hurwitz/engine.hpp"
#include "hurwitz/literal.hpp"
#include "hurwitz/reports.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/table.hpp"

using namespace hurwitz;

namespace {

Monomial M(const char* text) { return Monomial::parse(text); }
const Convention kIndex{DotWeight::Index};
const Convention kTwice{DotWeight::TwiceIndex};

struct Failure {
  std::string message;
};

using Criterion = std::function<std::optional<Failure>()>;

int g_failures = 0;

void run(int number, const std::string& label, double time_budget_s,
         const Criterion& fn) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<Failure> failure;
  try {
    failure = fn();
  } catch (const std::exception& e) {
    failure = Failure{std::string("exception: ") + e.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream line;
  line << "[" << number << "] " << label << " ";
  if (!failure && time_budget_s > 0 && elapsed > time_budget_s)
    failure = Failure{"exceeded time budget of " +
                      std::to_string(time_budget_s) + " s"};
  if (failure) {
    ++g_failures;
    line << "FAIL";
  } else {
    line << "PASS";
  }
  line << " (" << elapsed << " s)";
  if (failure) line << " -- " << failure->message;
  std::cout << line.str() << std::endl;
}

Rational dot_weight_product(const Monomial& b, const Convention& conv) {
  Rational p = 1;
  for (const auto& t : b.terms())
    if (t.family == Family::Dot)
      for (int x = 0; x < t.mult; ++x) p *= Rational(conv.dot_aut(t.index));
  return p;
}

std::string idx_text(int m, int a, int g, const Monomial& b) {
  std::ostringstream s;
  s << "(m=" << m << ", acute=" << a << ", grave=" << g << ", b=" << b.text()
    << ")";
  return s.str();
}

}  // namespace

int main() {
  run(1, "base case, Bar/Dot monomials degree <= 8", 1.0,
      []() -> std::optional<Failure> {
        for (const Convention& conv : {kIndex, kTwice}) {
          Engine engine(conv);
          for (int k = 0; k <= 8; ++k)
            for (const Monomial& b : enumerate_degree(k)) {
              if (b.family_count(Family::Acute) > 0 ||
                  b.family_count(Family::Grave) > 0) {
                if (engine.value(0, 0, 0, b) != 0)
                  return Failure{"h(0,0," + b.text() + ") != 0"};
                continue;
              }
              Rational expected = 1;
              for (const auto& t : b.terms()) {
                expected /= Rational(factorial(t.mult));
                if (t.family == Family::Dot)
                  for (int x = 0; x < t.mult; ++x)
                    expected /= Rational(conv.dot_aut(t.index));
              }
              if (engine.value(0, 0, 0, b) != expected)
                return Failure{"h(0,0," + b.text() + ") != product formula (" +
                               conv.name() + ")"};
            }
          if (engine.value(0, 0, 0, M("B1^2")) != Rational(1, 2))
            return Failure{"h(0,0,B1^2) != 1/2"};
        }
        return std::nullopt;
      });

  run(2, "oracle equivalence, degree <= 5, m+acute+grave <= 3, both conventions",
      60.0, []() -> std::optional<Failure> {
        for (const Convention& conv : {kIndex, kTwice}) {
          Engine engine(conv);
          for (int k = 0; k <= 5; ++k)
            for (const Monomial& b : enumerate_degree(k))
              for (int m = 0; m <= 3; ++m)
                for (int a = 0; a + m <= 3; ++a)
                  for (int g = 0; a + g + m <= 3; ++g)
                    for (SimpleKind kind :
                         {SimpleKind::AcuteSimple, SimpleKind::GraveSimple,
                          SimpleKind::InteriorSimple}) {
                      const Rational fast = engine.step_by_moves(kind, m, a, g, b);
                      const Rational slow =
                          engine.step_by_contraction(kind, m, a, g, b);
                      if (fast != slow)
                        return Failure{std::string("moves vs contraction at ") +
                                       simple_kind_name(kind) + " " +
                                       idx_text(m, a, g, b) + ": " +
                                       to_fraction(fast) + " vs " +
                                       to_fraction(slow) + " (" + conv.name() +
                                       ")"};
                    }
        }
        return std::nullopt;
      });

  run(3, "golden values", 10.0, []() -> std::optional<Failure> {
    for (const Convention& conv : {kIndex, kTwice}) {
      Engine engine(conv);
      if (engine.total(0, 1, M("G1")) != Rational(1, 2))
        return Failure{std::string("h(0,1,G1) != 1/2 under ") + conv.name()};
      if (engine.total(0, 1, M("A1")) != Rational(1, 2))
        return Failure{std::string("h(0,1,A1) != 1/2 under ") + conv.name()};
      if (engine.total(1, 0, M("B1^2")) != Rational(1, 2))
        return Failure{std::string("h(1,0,B1^2) != 1/2 under ") + conv.name()};
      if (engine.total(1, 0, M("D1")) != 0)
        return Failure{std::string("h(1,0,D1) != 0 under ") + conv.name()};
      for (int m = 0; m <= 4; ++m)
        for (int points = 0; points + m <= 4; ++points) {
          if (m + points == 0) continue;
          if (engine.total(m, points, M("B1")) != 0)
            return Failure{"h(" + std::to_string(m) + "," +
                           std::to_string(points) + ",B1) != 0"};
        }
    }
    return std::nullopt;
  });

  run(4, "star symmetry, degree <= 5, m + points <= 3", 60.0,
      []() -> std::optional<Failure> {
        Engine engine(kIndex);
        long violations = 0;
        std::string first;
        for (int k = 0; k <= 5; ++k)
          for (const Monomial& b : enumerate_degree(k))
            for (int m = 0; m <= 3; ++m)
              for (int points = 0; points + m <= 3; ++points) {
                if (engine.total(m, points, b) !=
                    engine.total(m, points, b.star())) {
                  ++violations;
                  if (first.empty())
                    first = "h(" + std::to_string(m) + "," +
                            std::to_string(points) + "," + b.text() + ") = " +
                            to_fraction(engine.total(m, points, b)) +
                            " but star gives " +
                            to_fraction(engine.total(m, points, b.star()));
                }
                for (int a = 0; a <= points; ++a) {
                  const int g = points - a;
                  const RefinedValue lhs = engine.refined(m, a, g, b);
                  const RefinedValue rhs = engine.refined(m, g, a, b.star());
                  if (lhs.h_acute != rhs.h_grave) {
                    ++violations;
                    if (first.empty())
                      first = "h_acute" + idx_text(m, a, g, b) + " = " +
                              to_fraction(lhs.h_acute) +
                              " but mirrored h_grave = " +
                              to_fraction(rhs.h_grave);
                  }
                }
              }
        if (violations > 0)
          return Failure{std::to_string(violations) +
                         " violations; first: " + first};
        return std::nullopt;
      });

  run(5, "convention covariance, degree <= 5, m + points <= 3", 60.0,
      []() -> std::optional<Failure> {
        Engine index_engine(kIndex);
        Engine twice_engine(kTwice);
        long violations = 0;
        std::string first;
        for (int k = 0; k <= 5; ++k)
          for (const Monomial& b : enumerate_degree(k))
            for (int m = 0; m <= 3; ++m)
              for (int a = 0; a + m <= 3; ++a)
                for (int g = 0; a + g + m <= 3; ++g) {
                  const Rational lhs = index_engine.value(m, a, g, b) *
                                       dot_weight_product(b, kIndex);
                  const Rational rhs = twice_engine.value(m, a, g, b) *
                                       dot_weight_product(b, kTwice);
                  if (lhs != rhs) {
                    ++violations;
                    if (first.empty())
                      first = idx_text(m, a, g, b) + ": Index gives " +
                              to_fraction(lhs) + ", TwiceIndex gives " +
                              to_fraction(rhs) + " after dot-weight scaling";
                  }
                }
        if (violations > 0)
          return Failure{std::to_string(violations) +
                         " violations; first: " + first};
        return std::nullopt;
      });

  run(6, "PDE residuals, bounds M=2, K=6", 120.0,
      []() -> std::optional<Failure> {
        Engine engine(kIndex);
        const SeriesBounds bounds{2, 2, 2, 6};
        const SeriesTriple series = from_engine(engine, bounds);
        std::vector<std::string> problems;
        auto check = [&](const char* label, Direction dir, OperatorKind kind) {
          const TruncatedSeries res =
              residual(dir, series, build_operator(kind, bounds.max_degree, kIndex));
          if (!res.is_zero()) {
            const auto& [slice, coeffs] = *res.slices().begin();
            const auto& [b, v] = *coeffs.begin();
            problems.push_back(std::string(label) + " nonzero at (" +
                               std::to_string(slice[0]) + "," +
                               std::to_string(slice[1]) + "," +
                               std::to_string(slice[2]) + "," + b.text() +
                               ") = " + to_fraction(v) + " [" +
                               std::to_string(res.coefficient_count()) +
                               " entries]");
          }
        };
        check("residual(beta, derived)", Direction::Beta, OperatorKind::BetaDerived);
        check("residual(gamma, derived)", Direction::Gamma,
              OperatorKind::GammaDerived);
        check("residual(gamma, literal)", Direction::Gamma,
              OperatorKind::GammaLiteral);
        check("residual(alpha, derived)", Direction::Alpha,
              OperatorKind::AlphaDerived);
        if (!problems.empty()) {
          std::string msg;
          for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
          return Failure{msg};
        }
        return std::nullopt;
      });

  run(7, "literal-table diff snapshot under Index, degree <= 4", 120.0,
      []() -> std::optional<Failure> {
        const ConsistencyReport report = consistency_report(kIndex, 4, 2);
        if (report.has_unclassified())
          return Failure{"report contains unclassified divergences"};
        const auto fams = report.families_present();
        const std::vector<std::string> expected{"beta-dot-term", "initial-condition",
                                                "interior-diagonal-self-pair"};
        if (fams != expected) {
          std::string got;
          for (const auto& f : fams) got += f + " ";
          return Failure{"families flagged: " + got};
        }
        for (const auto& d : report.operator_diffs) {
          if (d.op == "gamma") return Failure{"L_gamma flagged"};
          if (d.op == "beta" && d.literal != 2 * d.derived)
            return Failure{"beta dot term ratio != 2"};
        }
        for (const auto& d : report.rule_diffs)
          if (d.rule != "interior-step")
            return Failure{"rule diff outside the interior step: " + d.rule};
        const std::string once = report.text();
        const std::string twice = consistency_report(kIndex, 4, 2).text();
        if (once != twice) return Failure{"report not byte-stable"};
        return std::nullopt;
      });

  run(8, "classical cut-and-join anchor, d <= 4, m <= 4", 30.0,
      []() -> std::optional<Failure> {
        const CutAndJoinReport report = cut_and_join_check(4, 4);
        if (report.mismatches != 0) {
          for (const auto& e : report.entries)
            if (e.evolved != e.bruteforce)
              return Failure{"mismatch at a=" + partition_text(e.a) +
                             ", m=" + std::to_string(e.m) + ": evolved " +
                             to_fraction(e.evolved) + " vs brute " +
                             to_fraction(e.bruteforce)};
        }
        return std::nullopt;
      });

  run(9, "table determinism across runs and thread counts", 60.0,
      []() -> std::optional<Failure> {
        for (OutputFormat format :
             {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv}) {
          std::string reference;
          for (int threads : {1, 4, 1}) {
            Engine engine(kIndex);
            const std::string rendered =
                render_table(engine, TableConfig{3, 2, format, threads});
            if (reference.empty())
              reference = rendered;
            else if (rendered != reference)
              return Failure{"table output differs across runs/threads"};
          }
        }
        return std::nullopt;
      });

  std::cout << (g_failures == 0
                    ? "all acceptance criteria passed"
                    : std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures;
}
