#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_fraction(const Rational& q, bool machine) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1 && !machine) return num.str();
  return num.str() + "/" + den.str();
}

Rational fraction_from(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

}  // namespace hurwitz
