#include "superschur/scalar.hpp"

#include <cctype>

namespace superschur {

Scalar make_scalar(long numerator, long denominator) {
  Scalar x(numerator, denominator);
  x.canonicalize();
  return x;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool parse_scalar(std::string_view text, Scalar& out) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return false;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return false;
  if (negative) n = -n;
  out = Scalar(n, d);
  out.canonicalize();
  return true;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace superschur
