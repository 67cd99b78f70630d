#pragma once

#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Cycle type: weakly decreasing parts >= 1.
using Partition = std::vector<int>;

std::string partition_text(const Partition& a);
std::vector<Partition> partitions_of(int d);

// Possibly-disconnected classical single Hurwitz number <a>^m over the
// sphere: (1/d!) #{(sigma, tau_1..tau_m) : sigma of type a, tau_i
// transpositions, tau_m...tau_1 sigma = id}. Desk scale only.
Rational classical_bruteforce(const Partition& a, int m);

struct CutAndJoinEntry {
  Partition a;
  int m = 0;
  Rational evolved;
  Rational bruteforce;
};

struct CutAndJoinReport {
  std::vector<CutAndJoinEntry> entries;
  int mismatches = 0;
  std::string to_json() const;
};

// Evolves the m = 0 slice with the cut-and-join operator and compares every
// coefficient against the brute-force count.
CutAndJoinReport cut_and_join_check(int d_max, int m_max);

}  // namespace hurwitz
