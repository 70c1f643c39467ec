#include "branecharge/rational.hpp"

#include <algorithm>
#include <cctype>

#include "branecharge/error.hpp"

namespace branecharge {

namespace {

// Largest exponents a, b with den = 2^a 5^b; nullopt if den has other factors.
bool terminating(BigInt den, unsigned long& twos, unsigned long& fives) {
  twos = 0;
  fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  return den == 1;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
}

}  // namespace

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  unsigned long twos = 0;
  unsigned long fives = 0;
  if (!terminating(q.get_den(), twos, fives)) return q.get_str();

  const unsigned long places = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  BigInt scaled = abs(q.get_num()) * (scale / q.get_den());
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return (sgn(q) < 0 ? "-" : "") + digits;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d(std::string(den), 10);
    if (d == 0) bad(text);
    out = Rational(BigInt(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad(text);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = Rational(BigInt(std::string(whole) + std::string(frac), 10), scale);
  } else {
    if (!all_digits(body)) bad(text);
    out = Rational(BigInt(std::string(body), 10));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace branecharge
