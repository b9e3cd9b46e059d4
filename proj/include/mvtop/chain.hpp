#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "mvtop/error.hpp"

namespace mvtop {

/// A chain element k of the Lukasiewicz chain L_n, standing for k/n.
using Value = std::uint8_t;

inline constexpr int kMaxResolution = 255;

/// The finite Lukasiewicz chain L_n = {0, 1/n, ..., 1}, encoded as 0..n.
///
/// All operations validate their operands and throw InputError on
/// elements outside 0..n. The unchecked pointwise kernels used by the
/// fuzzy-set algebra live in MvAlgebra.
class Chain {
 public:
  explicit Chain(int n) : n_(n) {
    if (n < 1 || n > kMaxResolution) {
      throw InputError("chain resolution must be in 1.." +
                       std::to_string(kMaxResolution) + ", got " +
                       std::to_string(n));
    }
  }

  int resolution() const noexcept { return n_; }
  Value top() const noexcept { return static_cast<Value>(n_); }

  /// Validates an integer as a chain element.
  Value element(long long v) const {
    if (v < 0 || v > n_) {
      throw InputError("chain element " + std::to_string(v) +
                       " out of range 0.." + std::to_string(n_));
    }
    return static_cast<Value>(v);
  }

  Value oplus(Value a, Value b) const {
    check(a, b);
    return static_cast<Value>(std::min(n_, int{a} + int{b}));
  }
  Value odot(Value a, Value b) const {
    check(a, b);
    return static_cast<Value>(std::max(0, int{a} + int{b} - n_));
  }
  Value meet(Value a, Value b) const {
    check(a, b);
    return std::min(a, b);
  }
  Value join(Value a, Value b) const {
    check(a, b);
    return std::max(a, b);
  }
  Value neg(Value a) const {
    check(a, a);
    return static_cast<Value>(n_ - a);
  }
  /// k-fold truncated sum a + ... + a; 0 * a = 0.
  Value scale(long long k, Value a) const {
    check(a, a);
    if (k < 0) throw InputError("negative multiplicity " + std::to_string(k));
    if (k >= n_) return a == 0 ? Value{0} : top();
    return static_cast<Value>(std::min<long long>(n_, k * a));
  }

  bool operator==(const Chain&) const = default;

 private:
  void check(Value a, Value b) const {
    if (a > n_ || b > n_) {
      throw InputError("chain element out of range 0.." + std::to_string(n_));
    }
  }

  int n_;
};

}  // namespace mvtop
