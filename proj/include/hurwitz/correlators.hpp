#pragma once

#include <map>

#include "hurwitz/monomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// The three simple-critical-value types that drive the one-step recursions.
enum class SimpleKind { InteriorSimple, AcuteSimple, GraveSimple };

const char* simple_kind_name(SimpleKind k);

// <(c, b)>: 1/|Aut(b)| when c = star(b), else 0.
Rational two_point(const Monomial& c, const Monomial& b, const Convention& conv);

// <(c, s, b)> for s an acute- or grave-simple type. The padding of s is
// degree-determined and never affects the value, so it is not an argument.
// Throws std::logic_error if more than one case family matches (never
// expected; exercised by tests).
Rational three_point_boundary(const Monomial& c, SimpleKind kind,
                              const Monomial& b, const Convention& conv);

// <a1^m a2, (c, b)>. Symmetric in (c, b): two boundary points have a single
// cyclic order. Instances matched in both orientations are deduplicated.
Rational three_point_interior(const Monomial& c, const Monomial& b,
                              const Convention& conv);

// Normative one-step recursion: sum over beta of
// layer(beta) * |Aut(beta)| * <(star(beta), kind, b)>.
// Every fast evaluation path must agree with this exactly.
Rational contraction_step(const std::map<Monomial, Rational>& layer,
                          SimpleKind kind, const Monomial& b,
                          const Convention& conv);

}  // namespace hurwitz
