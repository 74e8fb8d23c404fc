#pragma once

#include <cstdint>
#include <ostream>

#include "coha/error.hpp"

namespace coha {

bool is_prime(std::uint64_t n);

// Element of F_p for a prime p < 2^31.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return Fp::raw((a.v_ + b.v_) % a.p_, a.p_); }
  friend Fp operator-(Fp a, Fp b) { return Fp::raw((a.v_ + a.p_ - b.v_) % a.p_, a.p_); }
  friend Fp operator*(Fp a, Fp b) {
    return Fp::raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
  }
  Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp inverse() const;
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

inline std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.value(); }

}  // namespace coha
