#include "hurwitz/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hurwitz {

char family_letter(Family f) {
  switch (f) {
    case Family::Acute: return 'A';
    case Family::Grave: return 'G';
    case Family::Bar: return 'B';
    case Family::Dot: return 'D';
  }
  return '?';
}

int length(Generator g) {
  return g.family == Family::Bar ? 2 * g.index - 1 : 2 * g.index;
}

Monomial Monomial::from_generators(const std::vector<Generator>& gens) {
  Monomial m;
  for (Generator g : gens) m = m.with(g);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const Term& t : terms_) d += t.mult * length({t.family, t.index});
  return d;
}

int Monomial::multiplicity(Family f, int index) const {
  for (const Term& t : terms_)
    if (t.family == f && t.index == index) return t.mult;
  return 0;
}

int Monomial::family_count(Family f) const {
  int n = 0;
  for (const Term& t : terms_)
    if (t.family == f) n += t.mult;
  return n;
}

int Monomial::min_length() const {
  if (terms_.empty())
    throw std::domain_error("min_length of the empty monomial is undefined");
  int best = 0;
  bool first = true;
  for (const Term& t : terms_) {
    const int len = length({t.family, t.index});
    if (first || len < best) best = len;
    first = false;
  }
  return best;
}

Monomial Monomial::star() const {
  Monomial out;
  for (const Term& t : terms_) {
    Family f = t.family;
    if (f == Family::Acute)
      f = Family::Grave;
    else if (f == Family::Grave)
      f = Family::Acute;
    out = out.with({f, t.index}, t.mult);
  }
  return out;
}

Int Monomial::aut_order(const Convention& conv) const {
  Int order = 1;
  for (const Term& t : terms_) {
    Int per = 1;  // automorphisms of one component, class-preserving
    switch (t.family) {
      case Family::Acute:
      case Family::Grave: per = 2; break;
      case Family::Bar: per = 1; break;
      case Family::Dot: per = conv.dot_aut(t.index); break;
    }
    Int factor = factorial(t.mult);
    for (int i = 0; i < t.mult; ++i) factor *= per;
    order *= factor;
  }
  return order;
}

Monomial Monomial::with(Generator g, int k) const {
  if (g.index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (k <= 0) throw std::invalid_argument("multiplicity must be positive");
  Monomial out = *this;
  Term want{g.family, g.index, 0};
  auto it = std::lower_bound(out.terms_.begin(), out.terms_.end(), want,
                             [](const Term& a, const Term& b) {
                               return std::pair(a.family, a.index) <
                                      std::pair(b.family, b.index);
                             });
  if (it != out.terms_.end() && it->family == g.family && it->index == g.index)
    it->mult += k;
  else
    out.terms_.insert(it, Term{g.family, g.index, k});
  return out;
}

Monomial Monomial::without(Generator g, int k) const {
  Monomial out = *this;
  for (auto it = out.terms_.begin(); it != out.terms_.end(); ++it) {
    if (it->family == g.family && it->index == g.index) {
      if (it->mult < k)
        throw std::invalid_argument("removing more copies than present");
      it->mult -= k;
      if (it->mult == 0) out.terms_.erase(it);
      return out;
    }
  }
  throw std::invalid_argument("generator not present");
}

std::optional<Monomial> Monomial::divide(const Monomial& f) const {
  Monomial out = *this;
  for (const Term& t : f.terms_) {
    if (out.multiplicity(t.family, t.index) < t.mult) return std::nullopt;
    out = out.without({t.family, t.index}, t.mult);
  }
  return out;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out = *this;
  for (const Term& t : other.terms_) out = out.with({t.family, t.index}, t.mult);
  return out;
}

std::string Monomial::text() const {
  if (terms_.empty()) return "1";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += '*';
    s += family_letter(t.family);
    s += std::to_string(t.index);
    if (t.mult > 1) {
      s += '^';
      s += std::to_string(t.mult);
    }
  }
  return s;
}

namespace {

int parse_number(const std::string& s, std::size_t& pos, const char* what) {
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError(std::string("expected ") + what, start);
  if (pos - start > 6) throw ParseError(std::string(what) + " out of range", start);
  const int value = std::stoi(s.substr(start, pos - start));
  if (value < 1) throw ParseError(std::string(what) + " must be >= 1", start);
  return value;
}

}  // namespace

Monomial Monomial::parse(const std::string& s) {
  if (s == "1") return Monomial{};
  if (s.empty()) throw ParseError("empty monomial text", 0);
  std::map<std::pair<Family, int>, int> mults;
  std::size_t pos = 0;
  while (true) {
    Family fam;
    switch (pos < s.size() ? s[pos] : '\0') {
      case 'A': fam = Family::Acute; break;
      case 'G': fam = Family::Grave; break;
      case 'B': fam = Family::Bar; break;
      case 'D': fam = Family::Dot; break;
      default: throw ParseError("expected family letter A, G, B or D", pos);
    }
    ++pos;
    const int index = parse_number(s, pos, "index");
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      exp = parse_number(s, pos, "exponent");
    }
    mults[{fam, index}] += exp;
    if (pos == s.size()) break;
    if (s[pos] != '*') throw ParseError("expected '*' between terms", pos);
    ++pos;
  }
  Monomial out;
  for (const auto& [key, mult] : mults) out = out.with({key.first, key.second}, mult);
  return out;
}

std::vector<Monomial> enumerate_degree(int k) {
  if (k < 0) return {};
  std::vector<Generator> gens;
  for (Family f : {Family::Acute, Family::Grave, Family::Bar, Family::Dot})
    for (int i = 1; length({f, i}) <= k; ++i) gens.push_back({f, i});

  std::vector<Monomial> out;
  std::vector<Monomial::Term> current;
  auto dfs = [&](auto&& self, std::size_t at, int remaining) -> void {
    if (remaining == 0) {
      Monomial m;
      for (const auto& t : current) m = m.with({t.family, t.index}, t.mult);
      out.push_back(std::move(m));
      return;
    }
    if (at == gens.size()) return;
    const int len = length(gens[at]);
    self(self, at + 1, remaining);
    for (int mult = 1; mult * len <= remaining; ++mult) {
      current.push_back({gens[at].family, gens[at].index, mult});
      self(self, at + 1, remaining - mult * len);
      current.pop_back();
    }
  };
  dfs(dfs, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t hash_value(const Monomial& m) {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& t : m.terms()) {
    mix(static_cast<std::size_t>(t.family));
    mix(static_cast<std::size_t>(t.index));
    mix(static_cast<std::size_t>(t.mult));
  }
  return h;
}

}  // namespace hurwitz
