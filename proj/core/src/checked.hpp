// Overflow-checked 64-bit helpers for quasilattice coordinates.
#pragma once

#include <cstdint>
#include <stdexcept>

namespace quasitile::detail {

[[noreturn]] inline void coordinate_overflow() {
  throw std::overflow_error("quasilattice coordinate overflow (64-bit)");
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) coordinate_overflow();
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) coordinate_overflow();
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) coordinate_overflow();
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

}  // namespace quasitile::detail
