#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdisk {

// Exact coefficient field: the rationals, or F_p for a prime p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::int64_t p);
  // "q" or "fp:P"
  static Field parse(std::string_view spec);

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }
  std::string name() const;
  void require_char_not_2(const std::string& context) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const Field& f, long v);
  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar ratio(const Field& f, long num, long den);
  // "p/q" or "p"; over F_p the denominator is inverted.
  static Scalar parse(const Field& f, std::string_view text);

  Field field() const;
  bool is_zero() const;
  std::string str() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;

 private:
  void same_field(const Scalar& o) const;
  static std::int64_t reduce(std::int64_t v, std::int64_t p);
  static std::int64_t inverse(std::int64_t v, std::int64_t p);

  std::int64_t p_ = 0;
  mpq_class q_{0};
  std::int64_t v_ = 0;
};

}  // namespace pdisk
