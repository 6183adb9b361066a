#pragma once

// Exact scalars and vectors used throughout the library.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace valuix {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

using RatVec = std::vector<Rat>;
/// Integer exponent vector or primitive ray.
using IntVec = std::vector<std::int64_t>;
using Matrix = std::vector<RatVec>;

/// Raised for violated preconditions (bad dimensions, negative weights, ...).
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

Int floor_int(const Rat& r);
Int ceil_int(const Rat& r);
std::int64_t to_int64(const Int& z);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);
RatVec to_rat(const IntVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& a, const Rat& c);

/// Positive multiple of a nonzero vector with coprime integer entries.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

bool all_nonnegative(const RatVec& v);
bool all_positive(const RatVec& v);

/// Value of a valuation: a rational or +infinity (only for the zero function).
class Extended {
 public:
  Extended() = default;
  Extended(Rat v) : value_(std::move(v)) {}  // NOLINT(implicit)
  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }
  bool is_infinite() const { return infinite_; }
  const Rat& value() const {
    if (infinite_) throw Error("value of +infinity requested");
    return value_;
  }
  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(a.value_ + b.value_);
  }
  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rat value_{0};
  bool infinite_ = false;
};

}  // namespace valuix
