#pragma once

// Fixed-capacity vectors and symmetric matrices for dimensions 1..3.
// Everything here is a plain value type; hot loops in the quadrature and
// finite-difference code rely on these staying inline and allocation-free.

#include <array>
#include <cmath>
#include <cstdint>

namespace segray {

inline constexpr int kMaxDim = 3;

struct Vec {
  int n = 0;
  std::array<double, kMaxDim> c{};

  Vec() = default;
  Vec(double x, double y) : n(2), c{x, y, 0.0} {}
  Vec(double x, double y, double z) : n(3), c{x, y, z} {}
  static Vec zero(int dim) {
    Vec v;
    v.n = dim;
    return v;
  }
  static Vec unit(int dim, int axis) {
    Vec v = zero(dim);
    v.c[axis] = 1.0;
    return v;
  }

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }
};

inline Vec operator+(Vec a, const Vec& b) {
  for (int i = 0; i < a.n; ++i) a.c[i] += b.c[i];
  return a;
}
inline Vec operator-(Vec a, const Vec& b) {
  for (int i = 0; i < a.n; ++i) a.c[i] -= b.c[i];
  return a;
}
inline Vec operator*(double s, Vec a) {
  for (int i = 0; i < a.n; ++i) a.c[i] *= s;
  return a;
}
inline Vec operator-(Vec a) {
  for (int i = 0; i < a.n; ++i) a.c[i] = -a.c[i];
  return a;
}
inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (int i = 0; i < a.n; ++i) s += a.c[i] * b.c[i];
  return s;
}
inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }
inline Vec normalized(const Vec& a) { return (1.0 / norm(a)) * a; }

// Dense symmetric n x n matrix, n <= 3.  Stored full for simple indexing.
struct SymMat {
  int n = 0;
  std::array<double, kMaxDim * kMaxDim> a{};

  static SymMat zero(int dim) {
    SymMat m;
    m.n = dim;
    return m;
  }
  static SymMat identity(int dim) {
    SymMat m = zero(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }

  double& at(int i, int j) { return a[i * kMaxDim + j]; }
  double at(int i, int j) const { return a[i * kMaxDim + j]; }
  void set_sym(int i, int j, double v) {
    at(i, j) = v;
    at(j, i) = v;
  }
  double contract(const Vec& u, const Vec& v) const {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += at(i, j) * u[i] * v[j];
    return s;
  }
  double max_asymmetry() const {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s = std::max(s, std::fabs(at(i, j) - at(j, i)));
    return s;
  }
};

inline SymMat operator+(SymMat x, const SymMat& y) {
  for (int i = 0; i < kMaxDim * kMaxDim; ++i) x.a[i] += y.a[i];
  return x;
}
inline SymMat operator-(SymMat x, const SymMat& y) {
  for (int i = 0; i < kMaxDim * kMaxDim; ++i) x.a[i] -= y.a[i];
  return x;
}
inline SymMat operator*(double s, SymMat x) {
  for (int i = 0; i < kMaxDim * kMaxDim; ++i) x.a[i] *= s;
  return x;
}
inline Vec operator*(const SymMat& m, const Vec& v) {
  Vec r = Vec::zero(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}
inline SymMat outer(const Vec& u) {
  SymMat m = SymMat::zero(u.n);
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) m.at(i, j) = u[i] * u[j];
  return m;
}

// Third- and fourth-order symmetric derivative stacks: index gamma (and
// gamma,delta) then the symmetric alpha-beta matrix.
struct Tensor3 {
  int n = 0;
  std::array<SymMat, kMaxDim> m{};
  SymMat& operator[](int g) { return m[g]; }
  const SymMat& operator[](int g) const { return m[g]; }
  static Tensor3 zero(int dim) {
    Tensor3 t;
    t.n = dim;
    for (int g = 0; g < dim; ++g) t.m[g] = SymMat::zero(dim);
    return t;
  }
};

struct Tensor4 {
  int n = 0;
  std::array<SymMat, kMaxDim * kMaxDim> m{};
  SymMat& at(int g, int d) { return m[g * kMaxDim + d]; }
  const SymMat& at(int g, int d) const { return m[g * kMaxDim + d]; }
  static Tensor4 zero(int dim) {
    Tensor4 t;
    t.n = dim;
    for (int g = 0; g < dim; ++g)
      for (int d = 0; d < dim; ++d) t.at(g, d) = SymMat::zero(dim);
    return t;
  }
};

// Smallest eigenvalue of a symmetric n x n matrix, n <= 3 (cyclic Jacobi).
double smallest_eigenvalue(const SymMat& m);

// Determinant of the matrix with the given columns (n <= 3).
double det_columns(const Vec* cols, int n);

} // namespace segray
