#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hurwitz/classical.hpp"

using namespace hurwitz;

TEST_CASE("brute force examples") {
  CHECK(classical_bruteforce({1, 1}, 0) == Rational(1, 2));
  CHECK(classical_bruteforce({2}, 1) == Rational(1, 2));
  CHECK(classical_bruteforce({3}, 2) == 1);
  CHECK(classical_bruteforce({1}, 0) == 1);
}

TEST_CASE("d = 1 has no transpositions") {
  for (int m = 1; m <= 4; ++m) CHECK(classical_bruteforce({1}, m) == 0);
}

TEST_CASE("range guard") {
  CHECK_THROWS_AS(classical_bruteforce({6}, 0), std::invalid_argument);
  CHECK_THROWS_AS(classical_bruteforce({2}, 7), std::invalid_argument);
}

TEST_CASE("transposition parity") {
  for (int d = 1; d <= 4; ++d)
    for (const Partition& a : partitions_of(d))
      for (int m = 0; m <= 4; ++m) {
        const int parity = (d - static_cast<int>(a.size())) % 2;
        if (m % 2 != parity) CHECK(classical_bruteforce(a, m) == 0);
      }
}

TEST_CASE("cut-and-join evolution matches brute force") {
  const CutAndJoinReport report = cut_and_join_check(4, 4);
  CHECK(report.mismatches == 0);
  for (const auto& e : report.entries) CHECK(e.evolved == e.bruteforce);
}

TEST_CASE("empty range") {
  const CutAndJoinReport report = cut_and_join_check(0, 0);
  CHECK(report.entries.empty());
  CHECK(report.mismatches == 0);
}

TEST_CASE("json report shape") {
  const CutAndJoinReport report = cut_and_join_check(2, 1);
  const std::string json = report.to_json();
  CHECK(json.front() == '[');
  CHECK(json.back() == ']');
  CHECK(json.find("\"partition\":\"(1,1)\"") != std::string::npos);
  CHECK(json.find("\"bruteforce\":\"1/2\"") != std::string::npos);
}
