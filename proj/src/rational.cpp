#include "valuix/rational.hpp"

#include <numeric>
#include <sstream>

namespace valuix {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw Error("malformed rational '" + std::string(text) + "'");
  Int d(std::string(den[0] == '+' ? den.substr(1) : den));
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Int n(std::string(num[0] == '+' ? num.substr(1) : num));
  return Rat(n, d);
}

std::string to_string(const Rat& r) { return r.str(); }

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ')';
  return os.str();
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Int floor_int(const Rat& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  Int q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Int ceil_int(const Rat& r) { return -floor_int(-r); }

std::int64_t to_int64(const Int& z) { return z.convert_to<std::int64_t>(); }

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) s += a[i] * b[i];
  return s;
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(x);
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in vector sum");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec scaled(const RatVec& a, const Rat& c) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

IntVec primitive(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(x)));
  std::vector<Int> z;
  z.reserve(v.size());
  Int g = 0;
  for (const auto& x : v) {
    Rat s = x * Rat(l);
    z.push_back(boost::multiprecision::numerator(s));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(z.back()));
  }
  if (g == 0) throw Error("primitive vector of zero vector");
  IntVec out;
  out.reserve(z.size());
  for (auto& x : z) out.push_back(to_int64(x / g));
  return out;
}

IntVec primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw Error("primitive vector of zero vector");
  IntVec out(v);
  for (auto& x : out) x /= g;
  return out;
}

bool all_nonnegative(const RatVec& v) {
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

bool all_positive(const RatVec& v) {
  for (const auto& x : v)
    if (x <= 0) return false;
  return true;
}

}  // namespace valuix
