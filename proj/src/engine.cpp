#include "hurwitz/engine.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace hurwitz {

namespace {

Rational move_coefficient(const Monomial& pred, const Monomial& rest,
                          const Rational& case_value, const Convention& conv) {
  return Rational(pred.aut_order(conv)) * case_value /
         Rational(rest.aut_order(conv));
}

Rational half_if_equal(int i, int j) {
  return i == j ? Rational(1, 2) : Rational(1);
}

int min4(int a, int b, int c, int d) { return std::min(std::min(a, b), std::min(c, d)); }

template <typename F>
void for_family(const Monomial& b, Family fam, F&& fn) {
  for (const auto& t : b.terms())
    if (t.family == fam) fn(t.index);
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

template <typename F>
void for_mixed_pairs(const Monomial& b, Family famX, Family famY, F&& fn) {
  for_family(b, famX, [&](int i) { for_family(b, famY, [&](int j) { fn(i, j); }); });
}

}  // namespace

Rational Engine::base(const Monomial& b, const Convention& conv) {
  if (b.family_count(Family::Acute) > 0 || b.family_count(Family::Grave) > 0)
    return 0;
  return Rational(1) / Rational(b.aut_order(conv));
}

std::vector<Engine::Move> Engine::acute_moves(const Monomial& b,
                                              const Convention& conv) {
  std::vector<Move> out;
  // G(i) -> D(i), value 1/2
  for_family(b, Family::Grave, [&](int i) {
    const Monomial rest = b.without({Family::Grave, i});
    const Monomial pred = rest.with({Family::Dot, i});
    out.push_back({pred, move_coefficient(pred, rest, Rational(1, 2), conv)});
  });
  // {B(i), G(j)} -> B(i+j), value 1
  for_mixed_pairs(b, Family::Bar, Family::Grave, [&](int i, int j) {
    const Monomial rest = b.without({Family::Bar, i}).without({Family::Grave, j});
    const Monomial pred = rest.with({Family::Bar, i + j});
    out.push_back({pred, move_coefficient(pred, rest, Rational(1), conv)});
  });
  // {G(i), G(j)} -> G(i+j), value 1 - delta/2
  for_unordered_pairs(b, Family::Grave, [&](int i, int j) {
    const Monomial rest = b.without({Family::Grave, i}).without({Family::Grave, j});
    const Monomial pred = rest.with({Family::Grave, i + j});
    out.push_back({pred, move_coefficient(pred, rest, half_if_equal(i, j), conv)});
  });
  // {B(i), B(j)} -> A(i+j-1), value 1 - delta/2
  for_unordered_pairs(b, Family::Bar, [&](int i, int j) {
    const Monomial rest = b.without({Family::Bar, i}).without({Family::Bar, j});
    const Monomial pred = rest.with({Family::Acute, i + j - 1});
    out.push_back({pred, move_coefficient(pred, rest, half_if_equal(i, j), conv)});
  });
  return out;
}

std::vector<Engine::Move> Engine::grave_moves(const Monomial& b,
                                              const Convention& conv) {
  std::vector<Move> out;
  // D(i) -> G(i), value 1/2
  for_family(b, Family::Dot, [&](int i) {
    const Monomial rest = b.without({Family::Dot, i});
    const Monomial pred = rest.with({Family::Grave, i});
    out.push_back({pred, move_coefficient(pred, rest, Rational(1, 2), conv)});
  });
  // B(n) -> {B(i), G(j)}, i+j = n, value 1
  for_family(b, Family::Bar, [&](int n) {
    const Monomial rest = b.without({Family::Bar, n});
    for (int i = 1; i <= n - 1; ++i) {
      const Monomial pred =
          rest.with({Family::Bar, i}).with({Family::Grave, n - i});
      out.push_back({pred, move_coefficient(pred, rest, Rational(1), conv)});
    }
  });
  // G(n) -> {G(i), G(j)}, value 1 - delta/2
  for_family(b, Family::Grave, [&](int n) {
    const Monomial rest = b.without({Family::Grave, n});
    for (int i = 1; 2 * i <= n; ++i) {
      const int j = n - i;
      const Monomial pred =
          rest.with({Family::Grave, i}).with({Family::Grave, j});
      out.push_back({pred, move_coefficient(pred, rest, half_if_equal(i, j), conv)});
    }
  });
  // A(n) -> {B(i), B(j)}, i+j = n+1, value 1 - delta/2
  for_family(b, Family::Acute, [&](int n) {
    const Monomial rest = b.without({Family::Acute, n});
    for (int i = 1; 2 * i <= n + 1; ++i) {
      const int j = n + 1 - i;
      const Monomial pred = rest.with({Family::Bar, i}).with({Family::Bar, j});
      out.push_back({pred, move_coefficient(pred, rest, half_if_equal(i, j), conv)});
    }
  });
  return out;
}

std::vector<Engine::Move> Engine::interior_moves(const Monomial& b,
                                                 const Convention& conv) {
  std::vector<Move> out;
  auto emit = [&](const Monomial& pred, const Monomial& rest, Rational value) {
    out.push_back({pred, move_coefficient(pred, rest, value, conv)});
  };

  // Cut/join of dots: D(n) <-> {D(i), D(j)}
  for_family(b, Family::Dot, [&](int n) {
    const Monomial rest = b.without({Family::Dot, n});
    for (int i = 1; 2 * i <= n; ++i)
      emit(rest.with({Family::Dot, i}).with({Family::Dot, n - i}), rest,
           half_if_equal(i, n - i));
  });
  for_unordered_pairs(b, Family::Dot, [&](int i, int j) {
    const Monomial rest = b.without({Family::Dot, i}).without({Family::Dot, j});
    emit(rest.with({Family::Dot, i + j}), rest, half_if_equal(i, j));
  });
  // B(n) <-> {D(i), B(j)}, value |bar_j| = 2j-1
  for_family(b, Family::Bar, [&](int n) {
    const Monomial rest = b.without({Family::Bar, n});
    for (int i = 1; i <= n - 1; ++i)
      emit(rest.with({Family::Dot, i}).with({Family::Bar, n - i}), rest,
           Rational(2 * (n - i) - 1));
  });
  for_mixed_pairs(b, Family::Dot, Family::Bar, [&](int i, int j) {
    const Monomial rest = b.without({Family::Dot, i}).without({Family::Bar, j});
    emit(rest.with({Family::Bar, i + j}), rest, Rational(2 * j - 1));
  });
  // A(n) <-> {D(i), A(j)}, value |hat_j| = 2j
  for_family(b, Family::Acute, [&](int n) {
    const Monomial rest = b.without({Family::Acute, n});
    for (int i = 1; i <= n - 1; ++i)
      emit(rest.with({Family::Dot, i}).with({Family::Acute, n - i}), rest,
           Rational(2 * (n - i)));
  });
  for_mixed_pairs(b, Family::Dot, Family::Acute, [&](int i, int j) {
    const Monomial rest = b.without({Family::Dot, i}).without({Family::Acute, j});
    emit(rest.with({Family::Acute, i + j}), rest, Rational(2 * j));
  });
  // G(n) <-> {D(i), G(j)}, value 2j
  for_family(b, Family::Grave, [&](int n) {
    const Monomial rest = b.without({Family::Grave, n});
    for (int i = 1; i <= n - 1; ++i)
      emit(rest.with({Family::Dot, i}).with({Family::Grave, n - i}), rest,
           Rational(2 * (n - i)));
  });
  for_mixed_pairs(b, Family::Dot, Family::Grave, [&](int i, int j) {
    const Monomial rest = b.without({Family::Dot, i}).without({Family::Grave, j});
    emit(rest.with({Family::Grave, i + j}), rest, Rational(2 * j));
  });
  // {B(k), A(l)} -> {B(i), A(j)} and the mirrored {B, G} channel
  for_mixed_pairs(b, Family::Bar, Family::Acute, [&](int k, int l) {
    const Monomial rest = b.without({Family::Bar, k}).without({Family::Acute, l});
    for (int i = 1; i <= k + l - 1; ++i) {
      const int j = k + l - i;
      emit(rest.with({Family::Bar, i}).with({Family::Acute, j}), rest,
           Rational(min4(2 * i - 1, 2 * j, 2 * k - 1, 2 * l)));
    }
  });
  for_mixed_pairs(b, Family::Bar, Family::Grave, [&](int i, int j) {
    const Monomial rest = b.without({Family::Bar, i}).without({Family::Grave, j});
    for (int k = 1; k <= i + j - 1; ++k) {
      const int l = i + j - k;
      emit(rest.with({Family::Bar, k}).with({Family::Grave, l}), rest,
           Rational(min4(2 * i - 1, 2 * j, 2 * k - 1, 2 * l)));
    }
  });
  // {B(k), B(l)} -> {G(i), A(j)} with i+j+1 = k+l, and its inverse
  for_unordered_pairs(b, Family::Bar, [&](int k, int l) {
    const Monomial rest = b.without({Family::Bar, k}).without({Family::Bar, l});
    for (int i = 1; i + 2 <= k + l; ++i) {
      const int j = k + l - 1 - i;
      emit(rest.with({Family::Grave, i}).with({Family::Acute, j}), rest,
           Rational(min4(2 * i, 2 * j, 2 * k - 1, 2 * l - 1)));
    }
  });
  for_mixed_pairs(b, Family::Acute, Family::Grave, [&](int i, int j) {
    // consumed {A(i), G(j)}; predecessors {B(k), B(l)} with k+l = i+j+1
    const Monomial rest = b.without({Family::Acute, i}).without({Family::Grave, j});
    for (int k = 1; 2 * k <= i + j + 1; ++k) {
      const int l = i + j + 1 - k;
      emit(rest.with({Family::Bar, k}).with({Family::Bar, l}), rest,
           Rational(min4(2 * j, 2 * i, 2 * k - 1, 2 * l - 1)));
    }
  });
  // {A(k), A(l)} -> {A(i), A(j)}; {G(i), G(j)} -> {G(k), G(l)}
  for_unordered_pairs(b, Family::Acute, [&](int k, int l) {
    const Monomial rest = b.without({Family::Acute, k}).without({Family::Acute, l});
    for (int i = 1; 2 * i <= k + l; ++i) {
      const int j = k + l - i;
      const Rational sym = (i == j && k == l) ? Rational(1, 2) : Rational(1);
      emit(rest.with({Family::Acute, i}).with({Family::Acute, j}), rest,
           sym * Rational(min4(2 * i, 2 * j, 2 * k, 2 * l)));
    }
  });
  for_unordered_pairs(b, Family::Grave, [&](int i, int j) {
    const Monomial rest = b.without({Family::Grave, i}).without({Family::Grave, j});
    for (int k = 1; 2 * k <= i + j; ++k) {
      const int l = i + j - k;
      const Rational sym = (i == j && k == l) ? Rational(1, 2) : Rational(1);
      emit(rest.with({Family::Grave, k}).with({Family::Grave, l}), rest,
           sym * Rational(min4(2 * i, 2 * j, 2 * k, 2 * l)));
    }
  });
  // {B(k), B(l)} -> {B(i), B(j)} (one orientation only: the family is
  // symmetric, enumerating both directions would double count)
  for_unordered_pairs(b, Family::Bar, [&](int k, int l) {
    const Monomial rest = b.without({Family::Bar, k}).without({Family::Bar, l});
    for (int i = 1; 2 * i <= k + l; ++i) {
      const int j = k + l - i;
      const Rational sym = (i == j && k == l) ? Rational(1, 2) : Rational(1);
      emit(rest.with({Family::Bar, i}).with({Family::Bar, j}), rest,
           sym * Rational(min4(2 * i - 1, 2 * j - 1, 2 * k - 1, 2 * l - 1)));
    }
  });
  return out;
}

std::vector<Engine::Move> Engine::moves(SimpleKind kind, const Monomial& b,
                                        const Convention& conv) {
  switch (kind) {
    case SimpleKind::AcuteSimple: return acute_moves(b, conv);
    case SimpleKind::GraveSimple: return grave_moves(b, conv);
    case SimpleKind::InteriorSimple: return interior_moves(b, conv);
  }
  return {};
}

Rational Engine::value(int m, int acute, int grave, const Monomial& b) {
  if (m < 0 || acute < 0 || grave < 0) return 0;
  const std::tuple<int, int, int, Monomial> key{m, acute, grave, b};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const Rational v = compute(m, acute, grave, b);
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(key, v).first->second;
}

Rational Engine::compute(int m, int acute, int grave, const Monomial& b) {
  if (acute == 0 && grave == 0) {
    if (m == 0) return base(b, conv_);
    Rational v;
    for (const Move& mv : interior_moves(b, conv_))
      v += mv.coefficient * value(m - 1, 0, 0, mv.predecessor);
    return v;
  }
  Rational v;
  if (acute >= 1)
    for (const Move& mv : acute_moves(b, conv_))
      v += mv.coefficient * value(m, acute - 1, grave, mv.predecessor);
  if (grave >= 1)
    for (const Move& mv : grave_moves(b, conv_))
      v += mv.coefficient * value(m, acute, grave - 1, mv.predecessor);
  return v;
}

RefinedValue Engine::refined(int m, int acute, int grave, const Monomial& b) {
  if (acute == 0 && grave == 0) {
    const Rational half = value(m, 0, 0, b) / 2;
    return {half, half};
  }
  RefinedValue out;
  if (acute >= 1) out.h_acute = step_by_moves(SimpleKind::AcuteSimple, m, acute - 1, grave, b);
  if (grave >= 1) out.h_grave = step_by_moves(SimpleKind::GraveSimple, m, acute, grave - 1, b);
  return out;
}

Rational Engine::total(int m, int points, const Monomial& b) {
  if (m < 0 || points < 0) return 0;
  Rational v;
  for (int a = 0; a <= points; ++a) v += value(m, a, points - a, b);
  return v;
}

std::map<Monomial, Rational> Engine::layer(int m, int acute, int grave,
                                           int degree) {
  std::map<Monomial, Rational> out;
  for (const Monomial& b : enumerate_degree(degree))
    out.emplace(b, value(m, acute, grave, b));
  return out;
}

Rational Engine::step_by_moves(SimpleKind kind, int m, int acute, int grave,
                               const Monomial& b) {
  Rational v;
  for (const Move& mv : moves(kind, b, conv_))
    v += mv.coefficient * value(m, acute, grave, mv.predecessor);
  return v;
}

Rational Engine::step_by_contraction(SimpleKind kind, int m, int acute,
                                     int grave, const Monomial& b) {
  return contraction_step(layer(m, acute, grave, b.degree()), kind, b, conv_);
}

Rational Engine::step_on_totals(SimpleKind kind, int m, int points,
                                const Monomial& b) {
  Rational v;
  for (const Move& mv : moves(kind, b, conv_))
    v += mv.coefficient * total(m, points, mv.predecessor);
  return v;
}

void Engine::save_cache(std::ostream& out) const {
  std::lock_guard<std::mutex> lock(mutex_);
  out << "hurwitz-memo 1 " << conv_.name() << "\n";
  for (const auto& [key, val] : memo_) {
    const auto& [m, a, g, b] = key;
    out << m << ' ' << a << ' ' << g << ' ' << b.text() << ' '
        << boost::multiprecision::numerator(val) << ' '
        << boost::multiprecision::denominator(val) << "\n";
  }
}

void Engine::load_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CacheError("empty cache file");
  {
    std::istringstream header(line);
    std::string magic, convention;
    int version = 0;
    header >> magic >> version >> convention;
    if (magic != "hurwitz-memo") throw CacheError("not a memo cache file");
    if (version != 1)
      throw CacheError("unsupported cache version " + std::to_string(version));
    if (convention != conv_.name())
      throw CacheError("cache was built under dot-weight convention '" +
                       convention + "', engine uses '" + conv_.name() + "'");
  }
  std::map<std::tuple<int, int, int, Monomial>, Rational> loaded;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    int m, a, g;
    std::string btext, num, den;
    if (!(row >> m >> a >> g >> btext >> num >> den))
      throw CacheError("malformed cache record at line " + std::to_string(line_no));
    loaded.emplace(std::tuple{m, a, g, Monomial::parse(btext)},
                   Rational(Int(num), Int(den)));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  for (auto& [k, v] : loaded) memo_.emplace(k, std::move(v));
}

std::size_t Engine::memo_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

}  // namespace hurwitz
