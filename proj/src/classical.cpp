#include "hurwitz/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

std::string partition_text(const Partition& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

namespace {

using Perm = std::vector<int>;

std::vector<Perm> all_perms(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& f, const Perm& g) {  // (f g)(x) = f(g(x))
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

Perm inverse(const Perm& f) {
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<int>(x);
  return out;
}

Partition cycle_type(const Perm& f) {
  Partition type;
  std::vector<bool> seen(f.size(), false);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(f[y])) {
      seen[y] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<std::size_t> transposition_ids(const std::vector<Perm>& perms,
                                           const std::map<Perm, std::size_t>& index,
                                           int d) {
  std::vector<std::size_t> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Perm t(d);
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[i], t[j]);
      out.push_back(index.at(t));
    }
  (void)perms;
  return out;
}

// counts[pi] = #{(tau_1..tau_m) : tau_m ... tau_1 = pi}
std::vector<Int> tuple_counts(int d, int m, const std::vector<Perm>& perms,
                              const std::map<Perm, std::size_t>& index) {
  std::vector<Int> counts(perms.size(), Int(0));
  Perm id(d);
  std::iota(id.begin(), id.end(), 0);
  counts[index.at(id)] = 1;
  const auto taus = transposition_ids(perms, index, d);
  for (int step = 0; step < m; ++step) {
    std::vector<Int> next(perms.size(), Int(0));
    for (std::size_t p = 0; p < perms.size(); ++p) {
      if (counts[p] == 0) continue;
      for (std::size_t t : taus) {
        const Perm prod = compose(perms[t], perms[p]);
        next[index.at(prod)] += counts[p];
      }
    }
    counts = std::move(next);
  }
  return counts;
}

}  // namespace

Rational classical_bruteforce(const Partition& a, int m) {
  const int d = std::accumulate(a.begin(), a.end(), 0);
  if (d < 1 || d > 5 || m < 0 || m > 6)
    throw std::invalid_argument("classical_bruteforce: out of desk-scale range");
  Partition sorted = a;
  std::sort(sorted.rbegin(), sorted.rend());
  for (int part : sorted)
    if (part < 1) throw std::invalid_argument("partition parts must be >= 1");

  const std::vector<Perm> perms = all_perms(d);
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const std::vector<Int> counts = tuple_counts(d, m, perms, index);

  Int total = 0;
  for (const Perm& sigma : perms)
    if (cycle_type(sigma) == sorted) total += counts[index.at(inverse(sigma))];
  return Rational(total) / Rational(factorial(d));
}

namespace {

using Coeffs = std::map<Partition, Rational>;

int multiplicity(const Partition& a, int part) {
  return static_cast<int>(std::count(a.begin(), a.end(), part));
}

Partition remove_part(Partition a, int part) {
  a.erase(std::find(a.begin(), a.end(), part));
  return a;
}

Partition add_part(Partition a, int part) {
  a.push_back(part);
  std::sort(a.rbegin(), a.rend());
  return a;
}

// One application of the cut-and-join operator
//   1/2 sum_ij (i+j) p_i p_j d/dp_{i+j} + sum_ij ij p_{i+j} d^2/dp_i dp_j
// to a weight-graded coefficient table.
Coeffs apply_cut_and_join(const Coeffs& phi) {
  Coeffs out;
  for (const auto& [a, v] : phi) {
    // cut: ordered (i,j) merged over unordered pairs
    for (int part : std::set<int>(a.begin(), a.end())) {
      for (int i = 1; 2 * i <= part; ++i) {
        const int j = part - i;
        const Rational coeff = (i == j) ? Rational(i) : Rational(i + j);
        out[add_part(add_part(remove_part(a, part), i), j)] +=
            coeff * Rational(multiplicity(a, part)) * v;
      }
    }
    // join: unordered {i, j} removed with falling factorials
    std::set<int> parts(a.begin(), a.end());
    for (int i : parts)
      for (int j : parts) {
        if (j < i) continue;
        Rational ways;
        if (i == j) {
          const int mi = multiplicity(a, i);
          if (mi < 2) continue;
          ways = Rational(mi) * Rational(mi - 1);
        } else {
          ways = Rational(multiplicity(a, i)) * Rational(multiplicity(a, j));
        }
        // Join coefficient carries the same global 1/2 as the cut part;
        // the brute-force anchor pins this normalization.
        const Rational coeff = (i == j) ? Rational(i * i, 2) : Rational(i * j);
        out[add_part(remove_part(remove_part(a, i), j), i + j)] +=
            coeff * ways * v;
      }
  }
  // prune zeros
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::string CutAndJoinReport::to_json() const {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (const auto& e : entries) {
    if (!first) out << ",";
    first = false;
    out << "{\"partition\":\"" << partition_text(e.a) << "\",\"m\":" << e.m
        << ",\"evolved\":\"" << to_fraction(e.evolved, true)
        << "\",\"bruteforce\":\"" << to_fraction(e.bruteforce, true) << "\"}";
  }
  out << "]";
  return out.str();
}

CutAndJoinReport cut_and_join_check(int d_max, int m_max) {
  if (d_max > 5 || m_max > 6)
    throw std::invalid_argument("cut_and_join_check: out of desk-scale range");
  CutAndJoinReport report;
  for (int d = 1; d <= d_max; ++d) {
    Coeffs phi;
    for (const Partition& a : partitions_of(d)) {
      const Rational v = classical_bruteforce(a, 0);
      if (v != 0) phi[a] = v;
    }
    for (int m = 0; m <= m_max; ++m) {
      for (const Partition& a : partitions_of(d)) {
        const auto it = phi.find(a);
        const Rational evolved = it == phi.end() ? Rational(0) : it->second;
        const Rational brute = classical_bruteforce(a, m);
        report.entries.push_back({a, m, evolved, brute});
        if (evolved != brute) ++report.mismatches;
      }
      if (m < m_max) phi = apply_cut_and_join(phi);
    }
  }
  return report;
}

}  // namespace hurwitz
