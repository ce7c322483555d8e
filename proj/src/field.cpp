#include "pdisk/field.hpp"

#include <charconv>

namespace pdisk {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw FieldError("fp:" + std::to_string(p) + " is not a prime field");
  if (p > (std::int64_t{1} << 31)) throw FieldError("prime " + std::to_string(p) + " too large (limit 2^31)");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    std::int64_t p = 0;
    auto body = spec.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw FieldError("bad field characteristic in '" + std::string(spec) + "'");
    return prime(p);
  }
  throw FieldError("unknown field '" + std::string(spec) + "' (expected q or fp:P)");
}

std::string Field::name() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

void Field::require_char_not_2(const std::string& context) const {
  if (p_ == 2) throw FieldError(context + ": characteristic 2 field not allowed (entries 1/2 required)");
}

std::int64_t Scalar::reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t Scalar::inverse(std::int64_t v, std::int64_t p) {
  if (v == 0) throw std::domain_error("division by zero in " + Field::prime(p).name());
  std::int64_t r = 1, b = v, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Scalar::Scalar(const Field& f, long v) : p_(f.characteristic()) {
  if (p_ == 0)
    q_ = v;
  else
    v_ = reduce(v, p_);
}

Scalar Scalar::ratio(const Field& f, long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(f, num) / Scalar(f, den);
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    mpz_class z;
    if (part.empty() || z.set_str(part, 10) != 0) throw std::invalid_argument("bad scalar '" + s + "'");
    return z;
  };
  mpz_class num = parse_int(slash == std::string::npos ? s : s.substr(0, slash));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Scalar r;
  r.p_ = f.characteristic();
  if (r.p_ == 0) {
    r.q_ = mpq_class(num, den);
    r.q_.canonicalize();
    return r;
  }
  mpz_class p(static_cast<long>(r.p_));
  mpz_class nm = ((num % p) + p) % p, dm = ((den % p) + p) % p;
  if (dm == 0) throw FieldError("denominator of '" + s + "' vanishes in " + f.name());
  return Scalar(f, nm.get_si()) / Scalar(f, dm.get_si());
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : v_ == 0; }

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(v_);
  return q_.get_str();
}

void Scalar::same_field(const Scalar& o) const {
  if (p_ != o.p_) throw FieldError("mixed-field arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  same_field(o);
  Scalar r = *this;
  if (p_ == 0)
    r.q_ += o.q_;
  else
    r.v_ = (v_ + o.v_) % p_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  same_field(o);
  Scalar r = *this;
  if (p_ == 0)
    r.q_ *= o.q_;
  else
    r.v_ = v_ * o.v_ % p_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  same_field(o);
  Scalar r = *this;
  if (p_ == 0) {
    if (sgn(o.q_) == 0) throw std::domain_error("division by zero");
    r.q_ /= o.q_;
  } else {
    r.v_ = v_ * inverse(o.v_, p_) % p_;
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = -q_;
  else
    r.v_ = reduce(-v_, p_);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : v_ == o.v_;
}

}  // namespace pdisk
