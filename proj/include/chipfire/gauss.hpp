#pragma once

#include <ostream>
#include <vector>

#include "chipfire/int.hpp"

namespace chipfire {

/// Element re + im·i of the Gaussian integers.
struct GaussInt {
  Int re;
  Int im;

  GaussInt() = default;
  GaussInt(long real, long imag = 0) : re(real), im(imag) {}
  GaussInt(Int real, Int imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit GaussInt(Int real) : re(std::move(real)), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Int norm() const { return Int(re * re + im * im); }
  GaussInt conj() const { return {re, Int(-im)}; }
  GaussInt times_i() const { return {Int(-im), re}; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) {
    Int r = re * o.re - im * o.im;
    Int i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend GaussInt operator-(const GaussInt& a) { return {Int(-a.re), Int(-a.im)}; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using GaussVec = std::vector<GaussInt>;

/// Writes 3-6i, -i, 4, 1+i.
std::ostream& operator<<(std::ostream& os, const GaussInt& z);

}  // namespace chipfire
