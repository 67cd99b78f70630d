#include "hurwitz/correlators.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace hurwitz {

const char* simple_kind_name(SimpleKind k) {
  switch (k) {
    case SimpleKind::InteriorSimple: return "interior";
    case SimpleKind::AcuteSimple: return "acute";
    case SimpleKind::GraveSimple: return "grave";
  }
  return "?";
}

Rational two_point(const Monomial& c, const Monomial& b, const Convention& conv) {
  if (c != b.star()) return 0;
  return Rational(1) / Rational(b.aut_order(conv));
}

namespace {

Rational inv_aut(const Monomial& m, const Convention& conv) {
  return Rational(1) / Rational(m.aut_order(conv));
}

int min4(int a, int b, int c, int d) { return std::min(std::min(a, b), std::min(c, d)); }

// delta_ij realized as the factor (1 - delta/2).
Rational half_if_equal(int i, int j) {
  return i == j ? Rational(1, 2) : Rational(1);
}

template <typename F>
void for_family(const Monomial& b, Family fam, F&& fn) {
  for (const auto& t : b.terms())
    if (t.family == fam) fn(t.index, t.mult);
}

// Unordered pairs {X_i, X_j} contained in b (i == j needs multiplicity 2).
template <typename F>
void for_unordered_pairs(const Monomial& b, Family fam, F&& fn) {
  const auto& terms = b.terms();
  for (std::size_t p = 0; p < terms.size(); ++p) {
    if (terms[p].family != fam) continue;
    if (terms[p].mult >= 2) fn(terms[p].index, terms[p].index);
    for (std::size_t q = p + 1; q < terms.size(); ++q)
      if (terms[q].family == fam) fn(terms[p].index, terms[q].index);
  }
}

// Ordered pairs (X_i, Y_j) from two distinct families contained in b.
template <typename F>
void for_mixed_pairs(const Monomial& b, Family famX, Family famY, F&& fn) {
  for_family(b, famX, [&](int i, int) {
    for_family(b, famY, [&](int j, int) { fn(i, j); });
  });
}

// Acute-simple case table of the boundary three-point function, matched by
// decomposing b and solving for c. Returns per-family sums and the set of
// families that fired.
struct BoundaryMatch {
  Rational value;
  int families_hit = 0;
};

BoundaryMatch acute_cases(const Monomial& c, const Monomial& b,
                          const Convention& conv) {
  BoundaryMatch out;
  Rational v[4];

  // (D(i) d*, G(i) d) -> 1/2 / |Aut(d)|
  for_family(b, Family::Grave, [&](int i, int) {
    const Monomial d = b.without({Family::Grave, i});
    if (c == d.star().with({Family::Dot, i}))
      v[0] += Rational(1, 2) * inv_aut(d, conv);
  });
  // (B(i+j) d*, B(i) G(j) d) -> 1 / |Aut(d)|
  for_mixed_pairs(b, Family::Bar, Family::Grave, [&](int i, int j) {
    const Monomial d = b.without({Family::Bar, i}).without({Family::Grave, j});
    if (c == d.star().with({Family::Bar, i + j})) v[1] += inv_aut(d, conv);
  });
  // (A(i+j) d*, G(i) G(j) d) -> (1 - delta_ij/2) / |Aut(d)|
  for_unordered_pairs(b, Family::Grave, [&](int i, int j) {
    const Monomial d = b.without({Family::Grave, i}).without({Family::Grave, j});
    if (c == d.star().with({Family::Acute, i + j}))
      v[2] += half_if_equal(i, j) * inv_aut(d, conv);
  });
  // (G(i+j-1) d*, B(i) B(j) d) -> (1 - delta_ij/2) / |Aut(d)|
  for_unordered_pairs(b, Family::Bar, [&](int i, int j) {
    const Monomial d = b.without({Family::Bar, i}).without({Family::Bar, j});
    if (c == d.star().with({Family::Grave, i + j - 1}))
      v[3] += half_if_equal(i, j) * inv_aut(d, conv);
  });

  for (const Rational& f : v) {
    if (f != 0) ++out.families_hit;
    out.value += f;
  }
  return out;
}

}  // namespace

Rational three_point_boundary(const Monomial& c, SimpleKind kind,
                              const Monomial& b, const Convention& conv) {
  if (kind == SimpleKind::InteriorSimple)
    throw std::invalid_argument("three_point_boundary needs a boundary kind");
  if (c.degree() != b.degree()) return 0;
  // The grave table is the star mirror of the acute one.
  const BoundaryMatch m = kind == SimpleKind::AcuteSimple
                              ? acute_cases(c, b, conv)
                              : acute_cases(b.star(), c.star(), conv);
  if (m.families_hit > 1)
    throw std::logic_error("boundary correlator: conflicting case families for <" +
                           c.text() + ", " + simple_kind_name(kind) + ", " +
                           b.text() + ">");
  return m.value;
}

namespace {

// One matched interior instance, identified by what it removes from each
// argument slot. Slot order is normalized to the original (c, b) call.
using InteriorKey = std::tuple<int, Monomial, Monomial>;

struct InteriorAcc {
  Rational per_family[8];
  std::set<InteriorKey> seen;

  void add(int family, const Monomial& removed_c, const Monomial& removed_b,
           bool swapped, const Rational& value) {
    InteriorKey key = swapped ? InteriorKey{family, removed_b, removed_c}
                              : InteriorKey{family, removed_c, removed_b};
    if (seen.insert(std::move(key)).second) per_family[family] += value;
  }
};

Monomial mono_of(Generator g) { return Monomial{}.with(g); }
Monomial mono_of(Generator g, Generator h) { return Monomial{}.with(g).with(h); }

// Interior case table, one orientation: decompose `b`, solve for `c`.
void interior_collect(const Monomial& c, const Monomial& b,
                      const Convention& conv, bool swapped, InteriorAcc& acc) {
  // 1. (D(i) D(j) d*, D(n) d), i+j = n
  for_family(b, Family::Dot, [&](int n, int) {
    const Monomial d = b.without({Family::Dot, n});
    for (int i = 1; 2 * i <= n; ++i) {
      const int j = n - i;
      if (c == d.star().with({Family::Dot, i}).with({Family::Dot, j}))
        acc.add(0, mono_of({Family::Dot, i}, {Family::Dot, j}),
                mono_of({Family::Dot, n}), swapped,
                half_if_equal(i, j) * inv_aut(d, conv));
    }
  });
  // 2. (D(i) B(j) d*, B(n) d) -> |bar_j|, i+j = n
  for_family(b, Family::Bar, [&](int n, int) {
    const Monomial d = b.without({Family::Bar, n});
    for (int i = 1; i <= n - 1; ++i) {
      const int j = n - i;
      if (c == d.star().with({Family::Dot, i}).with({Family::Bar, j}))
        acc.add(1, mono_of({Family::Dot, i}, {Family::Bar, j}),
                mono_of({Family::Bar, n}), swapped,
                Rational(2 * j - 1) * inv_aut(d, conv));
    }
  });
  // 3. (D(i) G(j) d*, A(n) d) -> |hat_j| = 2j
  for_family(b, Family::Acute, [&](int n, int) {
    const Monomial d = b.without({Family::Acute, n});
    for (int i = 1; i <= n - 1; ++i) {
      const int j = n - i;
      if (c == d.star().with({Family::Dot, i}).with({Family::Grave, j}))
        acc.add(2, mono_of({Family::Dot, i}, {Family::Grave, j}),
                mono_of({Family::Acute, n}), swapped,
                Rational(2 * j) * inv_aut(d, conv));
    }
  });
  // 4. (D(i) A(j) d*, G(n) d) -> 2j
  for_family(b, Family::Grave, [&](int n, int) {
    const Monomial d = b.without({Family::Grave, n});
    for (int i = 1; i <= n - 1; ++i) {
      const int j = n - i;
      if (c == d.star().with({Family::Dot, i}).with({Family::Acute, j}))
        acc.add(3, mono_of({Family::Dot, i}, {Family::Acute, j}),
                mono_of({Family::Grave, n}), swapped,
                Rational(2 * j) * inv_aut(d, conv));
    }
  });
  // 5. (B(i) G(j) d*, B(k) A(l) d) -> min of the four lengths, i+j = k+l
  for_mixed_pairs(b, Family::Bar, Family::Acute, [&](int k, int l) {
    const Monomial d = b.without({Family::Bar, k}).without({Family::Acute, l});
    for (int i = 1; i <= k + l - 1; ++i) {
      const int j = k + l - i;
      if (c == d.star().with({Family::Bar, i}).with({Family::Grave, j}))
        acc.add(4, mono_of({Family::Bar, i}, {Family::Grave, j}),
                mono_of({Family::Bar, k}, {Family::Acute, l}), swapped,
                Rational(min4(2 * i - 1, 2 * j, 2 * k - 1, 2 * l)) *
                    inv_aut(d, conv));
    }
  });
  // 6. (A(i) G(j) d*, B(k) B(l) d), i+j+1 = k+l
  for_unordered_pairs(b, Family::Bar, [&](int k, int l) {
    const Monomial d = b.without({Family::Bar, k}).without({Family::Bar, l});
    for (int i = 1; i + 2 <= k + l; ++i) {
      const int j = k + l - 1 - i;
      if (c == d.star().with({Family::Acute, i}).with({Family::Grave, j}))
        acc.add(5, mono_of({Family::Acute, i}, {Family::Grave, j}),
                mono_of({Family::Bar, k}, {Family::Bar, l}), swapped,
                Rational(min4(2 * i, 2 * j, 2 * k - 1, 2 * l - 1)) *
                    inv_aut(d, conv));
    }
  });
  // 7. (G(i) G(j) d*, A(k) A(l) d) -> (1 - delta_ij delta_kl / 2) min
  for_unordered_pairs(b, Family::Acute, [&](int k, int l) {
    const Monomial d = b.without({Family::Acute, k}).without({Family::Acute, l});
    for (int i = 1; 2 * i <= k + l; ++i) {
      const int j = k + l - i;
      if (c == d.star().with({Family::Grave, i}).with({Family::Grave, j})) {
        const Rational sym = (i == j && k == l) ? Rational(1, 2) : Rational(1);
        acc.add(6, mono_of({Family::Grave, i}, {Family::Grave, j}),
                mono_of({Family::Acute, k}, {Family::Acute, l}), swapped,
                sym * Rational(min4(2 * i, 2 * j, 2 * k, 2 * l)) *
                    inv_aut(d, conv));
      }
    }
  });
  // 8. (B(i) B(j) d*, B(k) B(l) d) -> (1 - delta_ij delta_kl / 2) min
  for_unordered_pairs(b, Family::Bar, [&](int k, int l) {
    const Monomial d = b.without({Family::Bar, k}).without({Family::Bar, l});
    for (int i = 1; 2 * i <= k + l; ++i) {
      const int j = k + l - i;
      if (c == d.star().with({Family::Bar, i}).with({Family::Bar, j})) {
        const Rational sym = (i == j && k == l) ? Rational(1, 2) : Rational(1);
        acc.add(7, mono_of({Family::Bar, i}, {Family::Bar, j}),
                mono_of({Family::Bar, k}, {Family::Bar, l}), swapped,
                sym *
                    Rational(min4(2 * i - 1, 2 * j - 1, 2 * k - 1, 2 * l - 1)) *
                    inv_aut(d, conv));
      }
    }
  });
}

}  // namespace

Rational three_point_interior(const Monomial& c, const Monomial& b,
                              const Convention& conv) {
  if (c.degree() != b.degree()) return 0;
  InteriorAcc acc;
  interior_collect(c, b, conv, /*swapped=*/false, acc);
  interior_collect(b, c, conv, /*swapped=*/true, acc);
  // Distinct reconstruction channels contribute additively, including across
  // case families: from degree 4 on, the bar-pair exchange overlaps the
  // mixed bar-acute/bar-grave exchanges on the same (c, b), e.g.
  // <(A1 B1^2, G1 B1^2)>.
  Rational total;
  for (const Rational& f : acc.per_family) total += f;
  return total;
}

Rational contraction_step(const std::map<Monomial, Rational>& layer,
                          SimpleKind kind, const Monomial& b,
                          const Convention& conv) {
  Rational total;
  for (const Monomial& beta : enumerate_degree(b.degree())) {
    const auto it = layer.find(beta);
    if (it == layer.end() || it->second == 0) continue;
    const Rational corr =
        kind == SimpleKind::InteriorSimple
            ? three_point_interior(beta.star(), b, conv)
            : three_point_boundary(beta.star(), kind, b, conv);
    if (corr == 0) continue;
    total += it->second * Rational(beta.aut_order(conv)) * corr;
  }
  return total;
}

}  // namespace hurwitz
