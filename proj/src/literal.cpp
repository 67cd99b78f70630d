#include "hurwitz/literal.hpp"

#include <algorithm>

namespace hurwitz {

namespace {

int min4(int a, int b, int c, int d) { return std::min(std::min(a, b), std::min(c, d)); }

template <typename F>
void for_family(const Monomial& b, Family fam, F&& fn) {
  for (const auto& t : b.terms())
    if (t.family == fam) fn(t.index, t.mult);
}

// Ordered pairs (i, j) of removable generators of one family: the diagonal
// (i, i) appears once and needs multiplicity 2.
template <typename F>
void for_ordered_pairs(const Monomial& b, Family fam, F&& fn) {
  const auto& terms = b.terms();
  for (const auto& p : terms) {
    if (p.family != fam) continue;
    for (const auto& q : terms) {
      if (q.family != fam) continue;
      if (p.index == q.index) {
        if (&p == &q && p.mult >= 2) fn(p.index, p.index);
      } else {
        fn(p.index, q.index);
      }
    }
  }
}

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

Rational occupied(const Monomial& b, Family fam, int index, int shift = 1) {
  return Rational(b.multiplicity(fam, index) + shift);
}

// (s_i+1)(s_j+1) + delta_ij (s_i+1), multiplicities from b.
Rational pair_factor(const Monomial& b, Family fam, int i, int j) {
  const Rational si = occupied(b, fam, i);
  const Rational sj = occupied(b, fam, j);
  Rational out = si * sj;
  if (i == j) out += si;
  return out;
}

}  // namespace

Rational literal_acute_step(Engine& engine, int m, int acute, int grave,
                         const Monomial& b) {
  Rational v;
  auto H = [&](const Monomial& arg) { return engine.value(m, acute, grave, arg); };
  // sum_i (i/2)(dot_s_i + 1) H(b D_i / G_i)
  for_family(b, Family::Grave, [&](int i, int) {
    v += Rational(i, 2) * occupied(b, Family::Dot, i) *
         H(b.without({Family::Grave, i}).with({Family::Dot, i}));
  });
  // sum_ij (bar_s_{i+j} + 1) H(b B_{i+j} / (B_i G_j))
  for_family(b, Family::Bar, [&](int i, int) {
    for_family(b, Family::Grave, [&](int j, int) {
      v += occupied(b, Family::Bar, i + j) *
           H(b.without({Family::Bar, i})
                 .without({Family::Grave, j})
                 .with({Family::Bar, i + j}));
    });
  });
  // sum_ij (grave_s_{i+j} + 1) H(b G_{i+j} / (G_i G_j))
  for_ordered_pairs(b, Family::Grave, [&](int i, int j) {
    v += occupied(b, Family::Grave, i + j) *
         H(b.without({Family::Grave, i})
               .without({Family::Grave, j})
               .with({Family::Grave, i + j}));
  });
  // sum_ij (acute_s_{i+j-1} + 1) H(b A_{i+j-1} / (B_i B_j))
  for_ordered_pairs(b, Family::Bar, [&](int i, int j) {
    v += occupied(b, Family::Acute, i + j - 1) *
         H(b.without({Family::Bar, i})
               .without({Family::Bar, j})
               .with({Family::Acute, i + j - 1}));
  });
  return v;
}

Rational acute_dot_delta(Engine& engine, int m, int acute, int grave,
                           const Monomial& b) {
  Rational delta;
  const Convention conv = engine.convention();
  for_family(b, Family::Grave, [&](int i, int) {
    const Rational literal(i, 2);
    const Rational normative = Rational(conv.dot_aut(i)) / 2;
    delta += (literal - normative) * occupied(b, Family::Dot, i) *
             engine.value(m, acute, grave,
                          b.without({Family::Grave, i}).with({Family::Dot, i}));
  });
  return delta;
}

Rational literal_grave_step(Engine& engine, int m, int acute, int grave,
                         const Monomial& b) {
  Rational v;
  auto H = [&](const Monomial& arg) { return engine.value(m, acute, grave, arg); };
  // sum_i (grave_s_i + 1) H(b G_i / D_i)
  for_family(b, Family::Dot, [&](int i, int) {
    v += occupied(b, Family::Grave, i) *
         H(b.without({Family::Dot, i}).with({Family::Grave, i}));
  });
  // sum_ij 2 (bar_s_i + 1)(grave_s_j + 1) H(b B_i G_j / B_{i+j})
  for_family(b, Family::Bar, [&](int n, int) {
    const Monomial rest = b.without({Family::Bar, n});
    for (int i = 1; i <= n - 1; ++i)
      v += 2 * occupied(b, Family::Bar, i) * occupied(b, Family::Grave, n - i) *
           H(rest.with({Family::Bar, i}).with({Family::Grave, n - i}));
  });
  // sum_ij 2 ((grave_s_i+1)(grave_s_j+1) + delta (grave_s_i+1)) H(b G_i G_j / G_{i+j})
  for_family(b, Family::Grave, [&](int n, int) {
    const Monomial rest = b.without({Family::Grave, n});
    for (int i = 1; i <= n - 1; ++i)
      v += 2 * pair_factor(b, Family::Grave, i, n - i) *
           H(rest.with({Family::Grave, i}).with({Family::Grave, n - i}));
  });
  // sum_ij 1/2 ((bar_s_i+1)(bar_s_j+1) + delta (bar_s_i+1)) H(b B_i B_j / A_{i+j-1})
  for_family(b, Family::Acute, [&](int n, int) {
    const Monomial rest = b.without({Family::Acute, n});
    for (int i = 1; i <= n; ++i)
      v += Rational(1, 2) * pair_factor(b, Family::Bar, i, n + 1 - i) *
           H(rest.with({Family::Bar, i}).with({Family::Bar, n + 1 - i}));
  });
  return v;
}

namespace {

Rational boundary_literal_on_totals(Engine& engine, int m, int points,
                                    const Monomial& b) {
  // The acute- and grave-step right-hand sides with point totals as
  // arguments.
  Rational v;
  auto H = [&](const Monomial& arg) { return engine.total(m, points, arg); };
  for_family(b, Family::Grave, [&](int i, int) {
    v += Rational(i, 2) * Rational(b.multiplicity(Family::Dot, i) + 1) *
         H(b.without({Family::Grave, i}).with({Family::Dot, i}));
  });
  for_family(b, Family::Bar, [&](int i, int) {
    for_family(b, Family::Grave, [&](int j, int) {
      v += Rational(b.multiplicity(Family::Bar, i + j) + 1) *
           H(b.without({Family::Bar, i})
                 .without({Family::Grave, j})
                 .with({Family::Bar, i + j}));
    });
  });
  for_ordered_pairs(b, Family::Grave, [&](int i, int j) {
    v += Rational(b.multiplicity(Family::Grave, i + j) + 1) *
         H(b.without({Family::Grave, i})
               .without({Family::Grave, j})
               .with({Family::Grave, i + j}));
  });
  for_ordered_pairs(b, Family::Bar, [&](int i, int j) {
    v += Rational(b.multiplicity(Family::Acute, i + j - 1) + 1) *
         H(b.without({Family::Bar, i})
               .without({Family::Bar, j})
               .with({Family::Acute, i + j - 1}));
  });
  for_family(b, Family::Dot, [&](int i, int) {
    v += Rational(b.multiplicity(Family::Grave, i) + 1) *
         H(b.without({Family::Dot, i}).with({Family::Grave, i}));
  });
  for_family(b, Family::Bar, [&](int n, int) {
    const Monomial rest = b.without({Family::Bar, n});
    for (int i = 1; i <= n - 1; ++i)
      v += 2 * Rational(b.multiplicity(Family::Bar, i) + 1) *
           Rational(b.multiplicity(Family::Grave, n - i) + 1) *
           H(rest.with({Family::Bar, i}).with({Family::Grave, n - i}));
  });
  for_family(b, Family::Grave, [&](int n, int) {
    const Monomial rest = b.without({Family::Grave, n});
    for (int i = 1; i <= n - 1; ++i)
      v += 2 * pair_factor(b, Family::Grave, i, n - i) *
           H(rest.with({Family::Grave, i}).with({Family::Grave, n - i}));
  });
  for_family(b, Family::Acute, [&](int n, int) {
    const Monomial rest = b.without({Family::Acute, n});
    for (int i = 1; i <= n; ++i)
      v += Rational(1, 2) * pair_factor(b, Family::Bar, i, n + 1 - i) *
           H(rest.with({Family::Bar, i}).with({Family::Bar, n + 1 - i}));
  });
  return v;
}

}  // namespace

Rational literal_boundary_step(Engine& engine, int m, int points, const Monomial& b) {
  return boundary_literal_on_totals(engine, m, points, b);
}

Rational literal_interior_step(Engine& engine, int m, int points, const Monomial& b) {
  Rational v;
  auto H = [&](const Monomial& arg) { return engine.total(m, points, arg); };

  // Dot cut and join
  for_ordered_pairs(b, Family::Dot, [&](int i, int j) {
    v += Rational(i + j, 2) * occupied(b, Family::Dot, i + j) *
         H(b.without({Family::Dot, i})
               .without({Family::Dot, j})
               .with({Family::Dot, i + j}));
  });
  for_family(b, Family::Dot, [&](int n, int) {
    const Monomial rest = b.without({Family::Dot, n});
    for (int i = 1; i <= n - 1; ++i)
      v += Rational(i * (n - i), 2) * pair_factor(b, Family::Dot, i, n - i) *
           H(rest.with({Family::Dot, i}).with({Family::Dot, n - i}));
  });
  // Dot-bar
  for_family(b, Family::Dot, [&](int i, int) {
    for_family(b, Family::Bar, [&](int j, int) {
      v += Rational(2 * j - 1) * occupied(b, Family::Bar, i + j) *
           H(b.without({Family::Dot, i})
                 .without({Family::Bar, j})
                 .with({Family::Bar, i + j}));
    });
  });
  for_family(b, Family::Bar, [&](int n, int) {
    const Monomial rest = b.without({Family::Bar, n});
    for (int i = 1; i <= n - 1; ++i) {
      const int j = n - i;
      v += Rational(i) * Rational(2 * j - 1) * occupied(b, Family::Dot, i) *
           occupied(b, Family::Bar, j) *
           H(rest.with({Family::Dot, i}).with({Family::Bar, j}));
    }
  });
  // Dot-acute (the table's repeated-argument slip is read as (m, points))
  for_family(b, Family::Dot, [&](int i, int) {
    for_family(b, Family::Acute, [&](int j, int) {
      v += Rational(2) * Rational(2 * j) * occupied(b, Family::Acute, i + j) *
           H(b.without({Family::Dot, i})
                 .without({Family::Acute, j})
                 .with({Family::Acute, i + j}));
    });
  });
  for_family(b, Family::Acute, [&](int n, int) {
    const Monomial rest = b.without({Family::Acute, n});
    for (int i = 1; i <= n - 1; ++i) {
      const int j = n - i;
      v += Rational(2 * i) * Rational(2 * j) * occupied(b, Family::Dot, i) *
           occupied(b, Family::Acute, j) *
           H(rest.with({Family::Dot, i}).with({Family::Acute, j}));
    }
  });
  // Dot-grave
  for_family(b, Family::Dot, [&](int i, int) {
    for_family(b, Family::Grave, [&](int j, int) {
      v += Rational(2) * Rational(2 * j) * occupied(b, Family::Grave, i + j) *
           H(b.without({Family::Dot, i})
                 .without({Family::Grave, j})
                 .with({Family::Grave, i + j}));
    });
  });
  for_family(b, Family::Grave, [&](int n, int) {
    const Monomial rest = b.without({Family::Grave, n});
    for (int i = 1; i <= n - 1; ++i) {
      const int j = n - i;
      v += Rational(2 * i) * Rational(2 * j) * occupied(b, Family::Dot, i) *
           occupied(b, Family::Grave, j) *
           H(rest.with({Family::Dot, i}).with({Family::Grave, j}));
    }
  });
  // Bar-acute and bar-grave exchanges, i+j = k+l
  for_family(b, Family::Bar, [&](int k, int) {
    for_family(b, Family::Acute, [&](int l, int) {
      const Monomial rest = b.without({Family::Bar, k}).without({Family::Acute, l});
      for (int i = 1; i <= k + l - 1; ++i) {
        const int j = k + l - i;
        v += Rational(2) * Rational(min4(2 * i - 1, 2 * j, 2 * k - 1, 2 * l)) *
             occupied(b, Family::Bar, i) * occupied(b, Family::Acute, j) *
             H(rest.with({Family::Bar, i}).with({Family::Acute, j}));
      }
    });
  });
  for_family(b, Family::Bar, [&](int k, int) {
    for_family(b, Family::Grave, [&](int l, int) {
      const Monomial rest = b.without({Family::Bar, k}).without({Family::Grave, l});
      for (int i = 1; i <= k + l - 1; ++i) {
        const int j = k + l - i;
        v += Rational(2) * Rational(min4(2 * i - 1, 2 * j, 2 * k - 1, 2 * l)) *
             occupied(b, Family::Bar, i) * occupied(b, Family::Grave, j) *
             H(rest.with({Family::Bar, i}).with({Family::Grave, j}));
      }
    });
  });
  // {B(k), B(l)} -> {A(i), G(j)}, i+j+1 = k+l, ordered (k,l) with (1+delta_kl)
  for_ordered_pairs(b, Family::Bar, [&](int k, int l) {
    const Monomial rest = b.without({Family::Bar, k}).without({Family::Bar, l});
    const Rational sym = k == l ? Rational(2) : Rational(1);
    for (int i = 1; i + 2 <= k + l; ++i) {
      const int j = k + l - 1 - i;
      v += Rational(2) * sym * Rational(min4(2 * i, 2 * j, 2 * k - 1, 2 * l - 1)) *
           occupied(b, Family::Acute, i) * occupied(b, Family::Grave, j) *
           H(rest.with({Family::Acute, i}).with({Family::Grave, j}));
    }
  });
  // {A(k), G(l)} -> {B(i), B(j)}, i+j = k+l+1, ordered (i,j) with 1/2 (1+delta_ij)
  for_family(b, Family::Acute, [&](int k, int) {
    for_family(b, Family::Grave, [&](int l, int) {
      const Monomial rest =
          b.without({Family::Acute, k}).without({Family::Grave, l});
      for (int i = 1; i <= k + l; ++i) {
        const int j = k + l + 1 - i;
        const Rational sym = i == j ? Rational(2) : Rational(1);
        v += Rational(1, 2) * sym *
             Rational(min4(2 * i - 1, 2 * j - 1, 2 * k, 2 * l)) *
             pair_factor(b, Family::Bar, i, j) *
             H(rest.with({Family::Bar, i}).with({Family::Bar, j}));
      }
    });
  });
  // Same-family exchanges with (1+delta_ij)(1+delta_kl)
  for_ordered_pairs(b, Family::Bar, [&](int k, int l) {
    const Monomial rest = b.without({Family::Bar, k}).without({Family::Bar, l});
    const Rational sym_kl = k == l ? Rational(2) : Rational(1);
    for (int i = 1; i <= k + l - 1; ++i) {
      const int j = k + l - i;
      const Rational sym_ij = i == j ? Rational(2) : Rational(1);
      v += Rational(1, 4) * sym_ij * sym_kl *
           Rational(min4(2 * i - 1, 2 * j - 1, 2 * k - 1, 2 * l - 1)) *
           pair_factor(b, Family::Bar, i, j) *
           H(rest.with({Family::Bar, i}).with({Family::Bar, j}));
    }
  });
  for_ordered_pairs(b, Family::Acute, [&](int k, int l) {
    const Monomial rest = b.without({Family::Acute, k}).without({Family::Acute, l});
    const Rational sym_kl = k == l ? Rational(2) : Rational(1);
    for (int i = 1; i <= k + l - 1; ++i) {
      const int j = k + l - i;
      const Rational sym_ij = i == j ? Rational(2) : Rational(1);
      v += sym_ij * sym_kl * Rational(min4(2 * i, 2 * j, 2 * k, 2 * l)) *
           pair_factor(b, Family::Acute, i, j) *
           H(rest.with({Family::Acute, i}).with({Family::Acute, j}));
    }
  });
  for_ordered_pairs(b, Family::Grave, [&](int k, int l) {
    const Monomial rest = b.without({Family::Grave, k}).without({Family::Grave, l});
    const Rational sym_kl = k == l ? Rational(2) : Rational(1);
    for (int i = 1; i <= k + l - 1; ++i) {
      const int j = k + l - i;
      const Rational sym_ij = i == j ? Rational(2) : Rational(1);
      v += sym_ij * sym_kl * Rational(min4(2 * i, 2 * j, 2 * k, 2 * l)) *
           pair_factor(b, Family::Grave, i, j) *
           H(rest.with({Family::Grave, i}).with({Family::Grave, j}));
    }
  });
  return v;
}

Rational interior_diagonal_delta(Engine& engine, int m, int points,
                              const Monomial& b) {
  // Terms whose h-argument is b itself: {i,j} = {k,l} in the exchange
  // groups. Printed coefficients read multiplicities from b; the normative
  // ones come from |Aut(b)| / |Aut(d)|.
  Rational lit, norm;
  auto s = [&](Family f, int i) { return Rational(b.multiplicity(f, i)); };

  for_family(b, Family::Bar, [&](int k, int) {
    for_family(b, Family::Acute, [&](int l, int) {
      const Rational mn(std::min(2 * k - 1, 2 * l));
      lit += 2 * mn * (s(Family::Bar, k) + 1) * (s(Family::Acute, l) + 1);
      norm += 2 * mn * s(Family::Bar, k) * s(Family::Acute, l);
    });
  });
  for_family(b, Family::Bar, [&](int k, int) {
    for_family(b, Family::Grave, [&](int l, int) {
      const Rational mn(std::min(2 * k - 1, 2 * l));
      lit += 2 * mn * (s(Family::Bar, k) + 1) * (s(Family::Grave, l) + 1);
      norm += 2 * mn * s(Family::Bar, k) * s(Family::Grave, l);
    });
  });
  for_unordered_pairs(b, Family::Bar, [&](int k, int l) {
    const Rational mn(std::min(2 * k - 1, 2 * l - 1));
    lit += mn * pair_factor(b, Family::Bar, k, l);
    const Rational ff = k == l ? s(Family::Bar, k) * (s(Family::Bar, k) - 1)
                               : s(Family::Bar, k) * s(Family::Bar, l);
    norm += mn * (k == l ? Rational(1, 2) : Rational(1)) * ff;
  });
  for (Family fam : {Family::Acute, Family::Grave}) {
    for_unordered_pairs(b, fam, [&](int k, int l) {
      const Rational mn(std::min(2 * k, 2 * l));
      lit += 4 * mn * pair_factor(b, fam, k, l);
      const Rational ff = k == l ? s(fam, k) * (s(fam, k) - 1)
                                 : s(fam, k) * s(fam, l);
      norm += 4 * mn * (k == l ? Rational(1, 2) : Rational(1)) * ff;
    });
  }
  return (lit - norm) * engine.total(m, points, b);
}

}  // namespace hurwitz
