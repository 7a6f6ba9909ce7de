/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <compare>
#include <limits>
#include <ostream>

#include "holevo/errors.hpp"

namespace holevo {

/// A non-negative-capable real extended with a +infinity sentinel. Used for
/// divergences that diverge on support mismatch; the sentinel compares above
/// every finite value and never becomes NaN under weighting.
template <typename Real>
class Extended {
 public:
  constexpr Extended(Real v = Real(0)) : value_(v), infinite_(false) {}  // NOLINT(google-explicit-constructor)

  static constexpr Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Finite value; throws when infinite.
  Real value() const {
    if (infinite_) throw InvariantError("Extended::value: quantity is +infinity");
    return value_;
  }

  /// IEEE view for reporting only.
  constexpr Real to_ieee() const noexcept {
    return infinite_ ? std::numeric_limits<Real>::infinity() : value_;
  }

  /// w * this with 0 * infinity = 0.
  constexpr Extended weighted(Real w) const noexcept {
    if (w == Real(0)) return Extended(Real(0));
    return infinite_ ? infinity() : Extended(w * value_);
  }

  friend constexpr Extended operator+(Extended a, Extended b) noexcept {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(a.value_ + b.value_);
  }
  Extended& operator+=(Extended o) noexcept { return *this = *this + o; }

  friend constexpr bool operator==(Extended a, Extended b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::partial_ordering operator<=>(Extended a, Extended b) noexcept {
    if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
    if (a.infinite_) return std::partial_ordering::greater;
    if (b.infinite_) return std::partial_ordering::less;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, Extended e) {
    if (e.infinite_) return os << "inf";
    return os << e.value_;
  }

 private:
  Real value_;
  bool infinite_;
};

using ExtendedReal = Extended<double>;

}  // namespace holevo
