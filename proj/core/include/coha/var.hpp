#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace coha {

// Layout of the dense exponent vector: t1, t2, hbar, then x(v, s) vertex-major.
inline constexpr int kMaxVertices = 7;
inline constexpr int kMaxSlots = 6;
inline constexpr int kParamCount = 3;
inline constexpr int kMaxVars = 48;
static_assert(kParamCount + kMaxVertices * kMaxSlots <= kMaxVars);

class VarId {
 public:
  enum class Kind : std::uint8_t { T1, T2, Hbar, X };

  static VarId t1() { return VarId(Kind::T1, 0, 0); }
  static VarId t2() { return VarId(Kind::T2, 0, 0); }
  static VarId hbar() { return VarId(Kind::Hbar, 0, 0); }
  // Throws InvalidArgument outside vertex < kMaxVertices, 1 <= slot <= kMaxSlots.
  static VarId x(int vertex, int slot);
  static VarId from_index(int index);
  // Inverse of name(): "t1", "t2", "hbar", "x:<vertex>:<slot>".
  static VarId parse(const std::string& name);

  Kind kind() const { return kind_; }
  int vertex() const { return vertex_; }
  int slot() const { return slot_; }
  int index() const;
  std::string name() const;

  friend bool operator==(const VarId& a, const VarId& b) { return a.index() == b.index(); }
  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
    return a.index() <=> b.index();
  }

 private:
  VarId(Kind k, int v, int s)
      : kind_(k), vertex_(static_cast<std::uint8_t>(v)), slot_(static_cast<std::uint8_t>(s)) {}

  Kind kind_;
  std::uint8_t vertex_;
  std::uint8_t slot_;
};

}  // namespace coha
