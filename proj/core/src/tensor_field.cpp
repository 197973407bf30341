#include "segray/tensor_field.hpp"

#include <cmath>

#include "segray/errors.hpp"

namespace segray {

namespace {

class ConstantTensor : public TensorField {
public:
  explicit ConstantTensor(const SymMat& c) : c_(c) {}
  int dimension() const override { return c_.n; }
  int derivative_order() const override { return 2; }
  SymMat value(const Vec&) const override { return c_; }
  Tensor3 d1(const Vec&) const override { return Tensor3::zero(c_.n); }
  Tensor4 d2(const Vec&) const override { return Tensor4::zero(c_.n); }

private:
  SymMat c_;
};

class ConformalTensor : public TensorField {
public:
  explicit ConformalTensor(ScalarFieldPtr g) : g_(std::move(g)) {}
  int dimension() const override { return g_->dimension(); }
  int derivative_order() const override { return 2; }
  SymMat value(const Vec& x) const override {
    return g_->value(x) * SymMat::identity(dimension());
  }
  Tensor3 d1(const Vec& x) const override {
    const Vec grad = g_->gradient(x);
    Tensor3 t = Tensor3::zero(dimension());
    for (int g = 0; g < dimension(); ++g)
      t[g] = grad[g] * SymMat::identity(dimension());
    return t;
  }
  Tensor4 d2(const Vec& x) const override {
    const SymMat h = g_->hessian(x);
    Tensor4 t = Tensor4::zero(dimension());
    for (int g = 0; g < dimension(); ++g)
      for (int d = 0; d < dimension(); ++d)
        t.at(g, d) = h.at(g, d) * SymMat::identity(dimension());
    return t;
  }

private:
  ScalarFieldPtr g_;
};

class HessianTensor : public TensorField {
public:
  explicit HessianTensor(ScalarFieldPtr f) : f_(std::move(f)) {}
  int dimension() const override { return f_->dimension(); }
  int derivative_order() const override {
    return std::max(0, std::min(2, f_->max_order() - 2));
  }
  SymMat value(const Vec& x) const override { return f_->hessian(x); }
  Tensor3 d1(const Vec& x) const override {
    if (f_->max_order() < 3)
      throw OrderUnsupported("hessian tensor: scalar field lacks order-3 derivatives");
    const Tensor3 t3 = f_->d3(x);
    Tensor3 t = Tensor3::zero(dimension());
    for (int g = 0; g < dimension(); ++g) t[g] = t3[g];
    return t;
  }
  Tensor4 d2(const Vec& x) const override {
    if (f_->max_order() < 4)
      throw OrderUnsupported("hessian tensor: scalar field lacks order-4 derivatives");
    return f_->d4(x);
  }

private:
  ScalarFieldPtr f_;
};

class DerivedTensor : public TensorField {
public:
  DerivedTensor(TensorFieldPtr parent, const Vec& e, int order)
      : parent_(std::move(parent)), e_(e), order_(order) {}
  int dimension() const override { return parent_->dimension(); }
  int derivative_order() const override {
    return std::max(0, parent_->derivative_order() - order_);
  }
  SymMat value(const Vec& x) const override {
    const int n = dimension();
    SymMat out = SymMat::zero(n);
    if (order_ == 1) {
      const Tensor3 t = parent_->d1(x);
      for (int g = 0; g < n; ++g) out = out + e_[g] * t[g];
    } else {
      const Tensor4 t = parent_->d2(x);
      for (int g = 0; g < n; ++g)
        for (int d = 0; d < n; ++d) out = out + (e_[g] * e_[d]) * t.at(g, d);
    }
    return out;
  }
  Tensor3 d1(const Vec& x) const override {
    if (order_ != 1 || parent_->derivative_order() < 2)
      throw OrderUnsupported("derived tensor: first derivatives unavailable");
    const int n = dimension();
    const Tensor4 t = parent_->d2(x);
    Tensor3 out = Tensor3::zero(n);
    for (int d = 0; d < n; ++d)
      for (int g = 0; g < n; ++g) out[d] = out[d] + e_[g] * t.at(g, d);
    return out;
  }
  Tensor4 d2(const Vec&) const override {
    throw OrderUnsupported("derived tensor: second derivatives unavailable");
  }

private:
  TensorFieldPtr parent_;
  Vec e_;
  int order_;
};

} // namespace

TensorFieldPtr make_constant_tensor(const SymMat& c) {
  return std::make_shared<ConstantTensor>(c);
}

TensorFieldPtr make_conformal_tensor(ScalarFieldPtr g) {
  return std::make_shared<ConformalTensor>(std::move(g));
}

TensorFieldPtr make_hessian_tensor(ScalarFieldPtr f) {
  return std::make_shared<HessianTensor>(std::move(f));
}

TensorFieldPtr derived_tensor(TensorFieldPtr tau, const Vec& e, int order) {
  if (order < 1 || order > 2)
    throw OrderUnsupported("derived_tensor: order must be 1 or 2");
  if (tau->derivative_order() < order)
    throw OrderUnsupported("derived_tensor: parent lacks the required derivatives");
  if (std::fabs(norm(e) - 1.0) > 1e-10)
    throw OrderUnsupported("derived_tensor: direction must be a unit vector");
  return std::make_shared<DerivedTensor>(std::move(tau), e, order);
}

double contract_NN(const TensorField& tau, const Vec& point, const Vec& N) {
  return tau.value(point).contract(N, N);
}

} // namespace segray
