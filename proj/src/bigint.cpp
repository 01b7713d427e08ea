#include "mhg/bigint.hpp"

namespace mhg {

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

std::string to_decimal(const Rational& v, int digits) {
  BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (static_cast<int>(frac.size()) < digits) frac.insert(0, digits - frac.size(), '0');
  std::string out = negative ? "-" : "";
  out += whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace mhg
