#pragma once

#include "hurwitz/engine.hpp"

namespace hurwitz {

// Single-step evaluations of the closed-form recursion coefficient tables,
// reading all multiplicities from b and running every index sum in
// ordered form. Arguments are taken from the engine's normative layers, so
// a literal value differs from the normative step exactly where a table
// coefficient does.

// Boundary rules, refined layers: value at (m, acute+1, grave) resp.
// (m, acute, grave+1).
Rational literal_acute_step(Engine& engine, int m, int acute, int grave,
                         const Monomial& b);
Rational literal_grave_step(Engine& engine, int m, int acute, int grave,
                         const Monomial& b);

// Boundary rule on point totals: value at (m, points+1).
Rational literal_boundary_step(Engine& engine, int m, int points, const Monomial& b);

// Interior rule on point totals: value at (m+1, points). The literal rule
// has a repeated-argument typo in two terms; they are read as (m, points).
Rational literal_interior_step(Engine& engine, int m, int points, const Monomial& b);

// Sum of (literal - normative) over the interior rule's diagonal self-pair
// terms (terms whose h-argument is b itself). Every divergence of
// literal_interior_step from the normative step under the Index convention is
// accounted for by this delta.
Rational interior_diagonal_delta(Engine& engine, int m, int points,
                              const Monomial& b);

// Same idea for the acute-step dot terms, which diverge under TwiceIndex:
// sum of (table coefficient i/2 minus normative w(i)/2) contributions.
Rational acute_dot_delta(Engine& engine, int m, int acute, int grave,
                           const Monomial& b);

}  // namespace hurwitz
