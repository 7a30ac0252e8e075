#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace invlearn {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double sq_dist(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(double c, Vec a) {
  for (double& x : a) x *= c;
  return a;
}

// max{0, a} componentwise
inline Vec pos_part(Vec a) {
  for (double& x : a) x = x > 0.0 ? x : 0.0;
  return a;
}

inline Vec cwise_min(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

inline Vec cwise_max(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

// a <= b + tol componentwise
inline bool leq(const Vec& a, const Vec& b, double tol = 0.0) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i] + tol) return false;
  return true;
}

inline double sum(const Vec& a) {
  double s = 0.0;
  for (double x : a) s += x;
  return s;
}

// prefix sums: (a1, a1+a2, ...)
inline Vec prefix_sum(const Vec& a) {
  Vec r(a.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i];
    r[i] = s;
  }
  return r;
}

}  // namespace invlearn
