#pragma once

// Symmetric (0,2)-tensor fields with analytic partial derivatives to second
// order.  The flat-space covariant derivative is the partial derivative, so
// d1 stacks d_gamma tau_ab and d2 stacks d_gamma d_delta tau_ab.

#include <memory>

#include "segray/linalg.hpp"
#include "segray/scalar_field.hpp"

namespace segray {

class TensorField {
public:
  virtual ~TensorField() = default;
  virtual int dimension() const = 0;
  // Number of exact derivative levels available (0, 1 or 2).
  virtual int derivative_order() const = 0;

  virtual SymMat value(const Vec& x) const = 0;
  virtual Tensor3 d1(const Vec& x) const = 0;
  virtual Tensor4 d2(const Vec& x) const = 0;
};

using TensorFieldPtr = std::shared_ptr<const TensorField>;

// tau = C (constant symmetric matrix).
TensorFieldPtr make_constant_tensor(const SymMat& c);
// tau = g(x) * identity.
TensorFieldPtr make_conformal_tensor(ScalarFieldPtr g);
// tau = Hessian of f; d1/d2 require f-derivatives of order 3/4.
TensorFieldPtr make_hessian_tensor(ScalarFieldPtr f);

// Directional-derivative tensor grad_e tau (order 1) or grad_e grad_e tau
// (order 2), evaluated through the parent's d1/d2 contractions.  |e| must be
// 1; throws OrderUnsupported for order > 2 or when the parent cannot supply
// the required derivatives.
TensorFieldPtr derived_tensor(TensorFieldPtr tau, const Vec& e, int order);

// Sum_ab tau_ab N_a N_b at a point; |N| must be 1 within 1e-10.
double contract_NN(const TensorField& tau, const Vec& point, const Vec& N);

} // namespace segray
