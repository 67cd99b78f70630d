#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// The four families of connected boundary-value graphs, in canonical order.
enum class Family : std::uint8_t { Acute = 0, Grave = 1, Bar = 2, Dot = 3 };

char family_letter(Family f);

struct Generator {
  Family family;
  int index;  // >= 1

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Edge count of the connected graph: 2i-1 for Bar(i), 2i otherwise.
int length(Generator g);

// |Aut(dot_i)| is ambiguous between i and 2i; all dot-dependent arithmetic
// is parameterized by this knob.
enum class DotWeight { Index, TwiceIndex };

struct Convention {
  DotWeight dot_weight = DotWeight::Index;

  Int dot_aut(int index) const {
    return dot_weight == DotWeight::Index ? Int(index) : Int(2 * index);
  }
  const char* name() const {
    return dot_weight == DotWeight::Index ? "index" : "twice-index";
  }
  friend bool operator==(const Convention&, const Convention&) = default;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Canonical multiset of generators. Terms are kept sorted by (family, index)
// with positive multiplicities, so structural equality is multiset equality
// and operator<=> is a fixed total order.
class Monomial {
 public:
  struct Term {
    Family family;
    int index;
    int mult;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  Monomial() = default;

  static Monomial from_generators(const std::vector<Generator>& gens);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int degree() const;
  int multiplicity(Family f, int index) const;
  int multiplicity(Generator g) const { return multiplicity(g.family, g.index); }
  int family_count(Family f) const;

  // Minimum component length; undefined for the empty monomial.
  int min_length() const;

  // Boundary-orientation involution: Acute(i) <-> Grave(i).
  Monomial star() const;

  Int aut_order(const Convention& conv) const;

  Monomial with(Generator g, int k = 1) const;
  // Removes k copies; requires multiplicity(g) >= k.
  Monomial without(Generator g, int k = 1) const;

  std::optional<Monomial> divide(const Monomial& f) const;
  Monomial times(const Monomial& other) const;

  std::string text() const;
  static Monomial parse(const std::string& s);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Term> terms_;
};

// All monomials of degree exactly k, in canonical order. enumerate_degree(0)
// is the singleton {empty}.
std::vector<Monomial> enumerate_degree(int k);

std::size_t hash_value(const Monomial& m);

}  // namespace hurwitz

template <>
struct std::hash<hurwitz::Monomial> {
  std::size_t operator()(const hurwitz::Monomial& m) const {
    return hurwitz::hash_value(m);
  }
};
