#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "logsurf/rational.hpp"

namespace logsurf {

// A divisor class in coordinates of the ambient lattice basis.
class QVec {
 public:
  QVec() = default;
  explicit QVec(std::size_t n) : c_(n, Rat(0)) {}
  QVec(std::initializer_list<Rat> init) : c_(init) {}
  explicit QVec(std::vector<Rat> coords) : c_(std::move(coords)) {}

  std::size_t size() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend QVec operator+(const QVec& a, const QVec& b) {
    check_size(a, b);
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend QVec operator-(const QVec& a, const QVec& b) {
    check_size(a, b);
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend QVec operator-(const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }
  friend QVec operator*(const Rat& s, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
  }
  QVec& operator+=(const QVec& b) { return *this = *this + b; }
  QVec& operator-=(const QVec& b) { return *this = *this - b; }

  friend bool operator==(const QVec& a, const QVec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QVec& a, const QVec& b) { return !(a == b); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += rat_to_string(c_[i]);
    }
    return s;
  }

 private:
  static void check_size(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
      throw std::invalid_argument("QVec dimension mismatch");
  }
  std::vector<Rat> c_;
};

}  // namespace logsurf
