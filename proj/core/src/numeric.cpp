#include "oagw/numeric.hpp"

#include <cctype>

namespace oagw {

Rational makeRational(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Integer parseInteger(std::string_view text, std::size_t base) {
  if (text.empty()) throw ParseError("expected digits", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected digit", base + i);
  }
  return Integer(std::string(text));
}

}  // namespace

Rational parseRational(std::string_view text) {
  bool negative = false;
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  auto slash = text.find('/', pos);
  Integer num = parseInteger(text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos), pos);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parseInteger(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  if (negative) num = -num;
  return makeRational(num, den);
}

std::string toString(const Rational& q) { return q.get_str(); }

std::string toString(const Integer& z) { return z.get_str(); }

unsigned padicValuation(const Integer& z, unsigned long p) {
  if (z == 0) throw PreconditionError("valuation of zero");
  Integer rest = z;
  unsigned count = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++count;
  }
  return count;
}

bool inLocalization(const Rational& q, unsigned long p) {
  return !mpz_divisible_ui_p(q.get_den_mpz_t(), p);
}

long padicValuation(const Rational& q, unsigned long p) {
  if (q == 0) throw PreconditionError("valuation of zero");
  return static_cast<long>(padicValuation(Integer(q.get_num()), p)) -
         static_cast<long>(padicValuation(Integer(q.get_den()), p));
}

}  // namespace oagw
