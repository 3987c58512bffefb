#pragma once

#include <cmath>

#include "elliptica/complex_math.hpp"

namespace elliptica {

/// Neumaier's variant of Kahan summation, applied componentwise.
template <typename T>
class CompensatedSum {
 public:
  void add(const Complex<T>& value) {
    re_.add(value.real());
    im_.add(value.imag());
    max_term_ = std::max(max_term_, std::abs(value));
  }

  CompensatedSum& operator+=(const Complex<T>& value) {
    add(value);
    return *this;
  }

  Complex<T> value() const { return {re_.value(), im_.value()}; }

  /// Largest |term| seen so far; feeds the conditioning diagnostic.
  T max_term() const { return max_term_; }

 private:
  struct Real {
    T sum{0};
    T compensation{0};

    void add(T x) {
      using std::abs;
      const T t = sum + x;
      if (abs(sum) >= abs(x)) {
        compensation += (sum - t) + x;
      } else {
        compensation += (x - t) + sum;
      }
      sum = t;
    }

    T value() const { return sum + compensation; }
  };

  Real re_;
  Real im_;
  T max_term_{0};
};

}  // namespace elliptica
