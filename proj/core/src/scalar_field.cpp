#include "segray/scalar_field.hpp"

#include <cmath>

#include "segray/domain.hpp"
#include "segray/errors.hpp"

namespace segray {

Tensor3 ScalarField::d3(const Vec&) const {
  throw OrderUnsupported("scalar field does not supply third derivatives");
}
Tensor4 ScalarField::d4(const Vec&) const {
  throw OrderUnsupported("scalar field does not supply fourth derivatives");
}

// ---------------------------------------------------------------- polynomial

PolynomialField::PolynomialField(int dim, std::vector<PolyTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {}

namespace {
double pow_int(double x, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}
} // namespace

double PolynomialField::eval_derivative(const Vec& x,
                                        const std::array<int, kMaxDim>& order) const {
  double sum = 0;
  for (const auto& t : terms_) {
    double c = t.coeff;
    bool alive = true;
    for (int i = 0; i < dim_ && alive; ++i) {
      int e = t.exp[i];
      for (int k = 0; k < order[i]; ++k) {
        if (e == 0) {
          alive = false;
          break;
        }
        c *= e;
        --e;
      }
      if (alive) c *= pow_int(x[i], e);
    }
    if (alive) sum += c;
  }
  return sum;
}

double PolynomialField::value(const Vec& x) const {
  return eval_derivative(x, {0, 0, 0});
}

Vec PolynomialField::gradient(const Vec& x) const {
  Vec g = Vec::zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    std::array<int, kMaxDim> o{};
    o[i] = 1;
    g[i] = eval_derivative(x, o);
  }
  return g;
}

SymMat PolynomialField::hessian(const Vec& x) const {
  SymMat h = SymMat::zero(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      std::array<int, kMaxDim> o{};
      ++o[i];
      ++o[j];
      h.set_sym(i, j, eval_derivative(x, o));
    }
  return h;
}

Tensor3 PolynomialField::d3(const Vec& x) const {
  Tensor3 t = Tensor3::zero(dim_);
  for (int g = 0; g < dim_; ++g)
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) {
        std::array<int, kMaxDim> o{};
        ++o[g];
        ++o[i];
        ++o[j];
        t[g].set_sym(i, j, eval_derivative(x, o));
      }
  return t;
}

Tensor4 PolynomialField::d4(const Vec& x) const {
  Tensor4 t = Tensor4::zero(dim_);
  for (int g = 0; g < dim_; ++g)
    for (int d = 0; d < dim_; ++d)
      for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
          std::array<int, kMaxDim> o{};
          ++o[g];
          ++o[d];
          ++o[i];
          ++o[j];
          t.at(g, d).set_sym(i, j, eval_derivative(x, o));
        }
  return t;
}

// ---------------------------------------------------------------- plane wave

PlaneWaveField::PlaneWaveField(Vec wavevector, double amplitude, double phase)
    : k_(wavevector), amp_(amplitude), phase_(phase) {}

double PlaneWaveField::value(const Vec& x) const {
  return amp_ * std::sin(dot(k_, x) + phase_);
}

Vec PlaneWaveField::gradient(const Vec& x) const {
  const double c = amp_ * std::sin(dot(k_, x) + phase_ + M_PI_2);
  Vec g = Vec::zero(k_.n);
  for (int i = 0; i < k_.n; ++i) g[i] = c * k_[i];
  return g;
}

SymMat PlaneWaveField::hessian(const Vec& x) const {
  const double c = amp_ * std::sin(dot(k_, x) + phase_ + M_PI);
  SymMat h = SymMat::zero(k_.n);
  for (int i = 0; i < k_.n; ++i)
    for (int j = i; j < k_.n; ++j) h.set_sym(i, j, c * k_[i] * k_[j]);
  return h;
}

Tensor3 PlaneWaveField::d3(const Vec& x) const {
  const double c = amp_ * std::sin(dot(k_, x) + phase_ + 3.0 * M_PI_2);
  Tensor3 t = Tensor3::zero(k_.n);
  for (int g = 0; g < k_.n; ++g)
    for (int i = 0; i < k_.n; ++i)
      for (int j = i; j < k_.n; ++j)
        t[g].set_sym(i, j, c * k_[g] * k_[i] * k_[j]);
  return t;
}

Tensor4 PlaneWaveField::d4(const Vec& x) const {
  const double c = amp_ * std::sin(dot(k_, x) + phase_);
  Tensor4 t = Tensor4::zero(k_.n);
  for (int g = 0; g < k_.n; ++g)
    for (int d = 0; d < k_.n; ++d)
      for (int i = 0; i < k_.n; ++i)
        for (int j = i; j < k_.n; ++j)
          t.at(g, d).set_sym(i, j, c * k_[g] * k_[d] * k_[i] * k_[j]);
  return t;
}

// ------------------------------------------------------------------- log cos

LogCosField::LogCosField(int dim, double a) : dim_(dim), a_(a) {}

double LogCosField::value(const Vec& x) const {
  return -std::log(std::cos(a_ * x[0]));
}

Vec LogCosField::gradient(const Vec& x) const {
  Vec g = Vec::zero(dim_);
  g[0] = a_ * std::tan(a_ * x[0]);
  return g;
}

SymMat LogCosField::hessian(const Vec& x) const {
  SymMat h = SymMat::zero(dim_);
  const double sec2 = 1.0 / std::pow(std::cos(a_ * x[0]), 2);
  h.at(0, 0) = a_ * a_ * sec2;
  return h;
}

Tensor3 LogCosField::d3(const Vec& x) const {
  Tensor3 t = Tensor3::zero(dim_);
  const double u = a_ * x[0];
  const double sec2 = 1.0 / std::pow(std::cos(u), 2);
  t[0].at(0, 0) = 2.0 * a_ * a_ * a_ * sec2 * std::tan(u);
  return t;
}

Tensor4 LogCosField::d4(const Vec& x) const {
  Tensor4 t = Tensor4::zero(dim_);
  const double u = a_ * x[0];
  const double tn = std::tan(u);
  const double sec2 = 1.0 + tn * tn;
  t.at(0, 0).at(0, 0) = 2.0 * std::pow(a_, 4) * sec2 * (sec2 + 2.0 * tn * tn);
  return t;
}

// ----------------------------------------------------------- -log phi domain

NegLogDomainField::NegLogDomainField(std::shared_ptr<const ConvexDomain> domain)
    : domain_(std::move(domain)) {}

int NegLogDomainField::dimension() const { return domain_->dimension; }

double NegLogDomainField::value(const Vec& x) const {
  const double p = domain_->phi(x);
  if (p <= 0) throw NonPositiveValue("-log phi evaluated where phi <= 0");
  return -std::log(p);
}

Vec NegLogDomainField::gradient(const Vec& x) const {
  const double p = domain_->phi(x);
  if (p <= 0) throw NonPositiveValue("-log phi evaluated where phi <= 0");
  return (-1.0 / p) * domain_->grad(x);
}

SymMat NegLogDomainField::hessian(const Vec& x) const {
  const double p = domain_->phi(x);
  if (p <= 0) throw NonPositiveValue("-log phi evaluated where phi <= 0");
  const Vec g = domain_->grad(x);
  return (-1.0 / p) * domain_->hess(x) + (1.0 / (p * p)) * outer(g);
}

// -------------------------------------------------------------- constructors

ScalarFieldPtr make_zero_field(int dim) {
  return std::make_shared<PolynomialField>(dim, std::vector<PolyTerm>{});
}

ScalarFieldPtr make_constant_field(int dim, double c) {
  return std::make_shared<PolynomialField>(dim,
                                           std::vector<PolyTerm>{{c, {0, 0, 0}}});
}

ScalarFieldPtr make_quadratic_radial(int dim, double c, const Vec& center) {
  std::vector<PolyTerm> terms;
  for (int i = 0; i < dim; ++i) {
    std::array<int, kMaxDim> e2{};
    e2[i] = 2;
    terms.push_back({c, e2});
    if (center[i] != 0.0) {
      std::array<int, kMaxDim> e1{};
      e1[i] = 1;
      terms.push_back({-2.0 * c * center[i], e1});
      terms.push_back({c * center[i] * center[i], {0, 0, 0}});
    }
  }
  return std::make_shared<PolynomialField>(dim, std::move(terms));
}

ScalarFieldPtr make_polynomial(int dim, std::vector<PolyTerm> terms) {
  return std::make_shared<PolynomialField>(dim, std::move(terms));
}

ScalarFieldPtr make_plane_wave(const Vec& wavevector, double amplitude,
                               double phase) {
  return std::make_shared<PlaneWaveField>(wavevector, amplitude, phase);
}

Potential1D make_zero_potential1d() { return Potential1D{}; }

Potential1D make_quadratic_potential1d(double a) {
  Potential1D q;
  q.value = [a](double s) { return a * s * s; };
  q.d1 = [a](double s) { return 2.0 * a * s; };
  q.d2 = [a](double) { return 2.0 * a; };
  return q;
}

} // namespace segray
