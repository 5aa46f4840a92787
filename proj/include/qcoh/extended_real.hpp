#pragma once

#include <limits>
#include <ostream>

namespace qcoh {

// A real number or +infinity. Divergences and the limits of convex generator
// functions never reach -infinity, so only the upper end is representable.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v) {}

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    r.value_ = std::numeric_limits<double>::infinity();
    return r;
  }

  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_infinite() const noexcept { return infinite_; }
  // +inf for the infinite case, so comparisons stay meaningful.
  constexpr double value() const noexcept { return value_; }

  // Multiplication by a non-negative weight with the 0 * inf := 0 convention.
  constexpr ExtendedReal scaled(double weight) const noexcept {
    if (weight == 0.0) return ExtendedReal(0.0);
    if (infinite_) return infinity();
    return ExtendedReal(value_ * weight);
  }

  constexpr ExtendedReal& operator+=(const ExtendedReal& o) noexcept {
    if (infinite_ || o.infinite_) {
      *this = infinity();
    } else {
      value_ += o.value_;
    }
    return *this;
  }
  friend constexpr ExtendedReal operator+(ExtendedReal a, const ExtendedReal& b) noexcept {
    return a += b;
  }
  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
    if (x.infinite_) return os << "inf";
    return os << x.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace qcoh
