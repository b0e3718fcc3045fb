#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>

#include "bfun/errors.hpp"

namespace bfun {

/// Upper bound on the number of generators of any algebra.
inline constexpr int kMaxVars = 32;

/// Exponent multi-index x^a = x_1^{a_1} ... x_n^{a_n}. Entries past the
/// owning algebra's generator count stay zero.
struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};

  std::uint16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  std::uint16_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Mono& a, const Mono& b) {
    return std::memcmp(a.e.data(), b.e.data(), sizeof(a.e)) == 0;
  }

  static Mono var(int i, int power = 1) {
    Mono m;
    m[i] = static_cast<std::uint16_t>(power);
    return m;
  }

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  /// Bit i set iff x_i occurs.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<std::size_t>(i)]) s |= (1u << i);
    return s;
  }

  bool divides(const Mono& b) const {
    bool ok = true;
    for (int i = 0; i < kMaxVars; ++i) ok &= e[static_cast<std::size_t>(i)] <= b.e[static_cast<std::size_t>(i)];
    return ok;
  }

  /// Commutative product of exponent vectors.
  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    unsigned overflow = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e[i]) + unsigned(b.e[i]);
      overflow |= s;
      r.e[i] = static_cast<std::uint16_t>(s);
    }
    if (overflow > 0xffffu) throw ExponentOverflow("exponent exceeds 65535");
    return r;
  }

  /// a / b; requires b | a.
  friend Mono operator/(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return r;
  }

  static Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }

  static bool coprime(const Mono& a, const Mono& b) { return (a.support() & b.support()) == 0; }
};

/// Any fixed total order; used for hashing containers and canonical
/// grouping of term bags, never as a monomial ordering.
struct MonoBytesLess {
  bool operator()(const Mono& a, const Mono& b) const {
    return std::memcmp(a.e.data(), b.e.data(), sizeof(a.e)) < 0;
  }
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace bfun
