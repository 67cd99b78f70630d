#pragma once

#include <string>
#include <vector>

#include "hurwitz/engine.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

// One index where a literal coefficient table disagrees with the normative
// contraction value.
struct RuleDiff {
  std::string rule;     // acute-step | grave-step | boundary-step | interior-step
  std::string family;   // classification of the divergence
  int m = 0;
  int acute = -1;       // -1 for point-total rules
  int grave = -1;
  int points = -1;
  Monomial b;
  Rational literal;
  Rational normative;
};

// Evaluates the literal recursion tables a second time, single step on normative
// layers, for all b with degree <= max_degree and all target indices with
// at most max_points critical points. Deterministic order.
std::vector<RuleDiff> literal_rule_diff(Engine& engine, int max_degree,
                                        int max_points);

struct RouteDiff {
  Monomial b;
  Rational boundary_first;
  Rational interior_first;
  Rational difference;
};

// h(1, 1, b) evaluated with the boundary step outermost (default) vs the
// interior step outermost, for every b with degree <= max_degree.
std::vector<RouteDiff> route_commutation_report(Engine& engine, int max_degree);

struct OperatorDiff {
  std::string op;  // beta | gamma | alpha
  std::string family;
  Monomial multiplier;
  Monomial derivatives;
  Rational literal;
  Rational derived;
};

struct InitialConditionDiff {
  Monomial b;
  Rational product_reading;   // per-family product formula (engine base)
  Rational exponential_reading;  // exp(bar_p1 + dot_p1/2) coefficient
};

// Full cross-validation of the literal tables against the normative
// contraction: operator term diffs, rule value diffs, and the two readings
// of the (0,0,0) slice. Deterministic and byte-stable.
struct ConsistencyReport {
  Convention convention;
  int max_degree = 0;
  int max_points = 0;
  std::vector<OperatorDiff> operator_diffs;
  std::vector<RuleDiff> rule_diffs;
  std::vector<InitialConditionDiff> initial_condition_diffs;

  std::vector<std::string> families_present() const;
  bool has_unclassified() const;
  std::string text() const;
};

ConsistencyReport consistency_report(const Convention& conv, int max_degree,
                                     int max_points);

std::string route_report_text(Engine& engine, int max_degree);

}  // namespace hurwitz
