#pragma once

// Scalar fields with analytic derivatives.  Potentials q and the logarithms
// f = -log u of analytic positive functions are both represented here; a
// Hessian-type tensor field built from f needs f-derivatives up to order 4,
// so each implementation reports how many orders it can supply exactly.

#include <functional>
#include <memory>
#include <vector>

#include "segray/linalg.hpp"

namespace segray {

struct ConvexDomain;

class ScalarField {
public:
  virtual ~ScalarField() = default;
  virtual int dimension() const = 0;
  virtual int max_order() const = 0;  // highest exact derivative order

  virtual double value(const Vec& x) const = 0;
  virtual Vec gradient(const Vec& x) const = 0;
  virtual SymMat hessian(const Vec& x) const = 0;
  virtual Tensor3 d3(const Vec& x) const;  // throws OrderUnsupported by default
  virtual Tensor4 d4(const Vec& x) const;
};

using ScalarFieldPtr = std::shared_ptr<const ScalarField>;

// Multivariate polynomial, all derivative orders exact.
struct PolyTerm {
  double coeff = 0;
  std::array<int, kMaxDim> exp{};
};

class PolynomialField : public ScalarField {
public:
  PolynomialField(int dim, std::vector<PolyTerm> terms);
  int dimension() const override { return dim_; }
  int max_order() const override { return 64; }
  double value(const Vec& x) const override;
  Vec gradient(const Vec& x) const override;
  SymMat hessian(const Vec& x) const override;
  Tensor3 d3(const Vec& x) const override;
  Tensor4 d4(const Vec& x) const override;

private:
  double eval_derivative(const Vec& x, const std::array<int, kMaxDim>& order) const;
  int dim_;
  std::vector<PolyTerm> terms_;
};

// g(x) = amp * sin(k.x + phase); m-th derivatives are phase shifts by m*pi/2.
class PlaneWaveField : public ScalarField {
public:
  PlaneWaveField(Vec wavevector, double amplitude, double phase);
  int dimension() const override { return k_.n; }
  int max_order() const override { return 64; }
  double value(const Vec& x) const override;
  Vec gradient(const Vec& x) const override;
  SymMat hessian(const Vec& x) const override;
  Tensor3 d3(const Vec& x) const override;
  Tensor4 d4(const Vec& x) const override;

private:
  Vec k_;
  double amp_, phase_;
};

// f(x) = -log cos(a x_1), |a x_1| < pi/2; derivatives to order 4.
class LogCosField : public ScalarField {
public:
  LogCosField(int dim, double a);
  int dimension() const override { return dim_; }
  int max_order() const override { return 4; }
  double value(const Vec& x) const override;
  Vec gradient(const Vec& x) const override;
  SymMat hessian(const Vec& x) const override;
  Tensor3 d3(const Vec& x) const override;
  Tensor4 d4(const Vec& x) const override;

private:
  int dim_;
  double a_;
};

// f = -log phi for a convex domain's defining function; order 2 only (the
// domain carries phi, grad phi and hess phi).  Blows up at the boundary.
class NegLogDomainField : public ScalarField {
public:
  explicit NegLogDomainField(std::shared_ptr<const ConvexDomain> domain);
  int dimension() const override;
  int max_order() const override { return 2; }
  double value(const Vec& x) const override;
  Vec gradient(const Vec& x) const override;
  SymMat hessian(const Vec& x) const override;

private:
  std::shared_ptr<const ConvexDomain> domain_;
};

// Convenience constructors.
ScalarFieldPtr make_zero_field(int dim);
ScalarFieldPtr make_constant_field(int dim, double c);
// c * |x - center|^2
ScalarFieldPtr make_quadratic_radial(int dim, double c, const Vec& center);
ScalarFieldPtr make_polynomial(int dim, std::vector<PolyTerm> terms);
ScalarFieldPtr make_plane_wave(const Vec& wavevector, double amplitude, double phase);

// Even 1D potentials q(s) with derivatives, used by the interval model.
struct Potential1D {
  std::function<double(double)> value = [](double) { return 0.0; };
  std::function<double(double)> d1 = [](double) { return 0.0; };
  std::function<double(double)> d2 = [](double) { return 0.0; };
};

Potential1D make_zero_potential1d();
Potential1D make_quadratic_potential1d(double a);  // q(s) = a s^2

} // namespace segray
