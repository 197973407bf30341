#include "segray/segment.hpp"

#include <cmath>
#include <limits>

#include "segray/errors.hpp"

namespace segray {

SegmentFrame segment_frame(const Vec& x, const Vec& y) {
  SegmentFrame f;
  f.x = x;
  f.y = y;
  f.n = x.n;
  const Vec d = y - x;
  f.r = norm(d);
  if (f.r <= 1e-12)
    throw DegenerateSegment("segment_frame: |y - x| <= 1e-12");
  f.unit = (1.0 / f.r) * d;

  const int n = f.n;
  if (n == 1) {
    f.frame[0] = f.unit;
    return f;
  }

  // Skip the standard axis most parallel to N, Gram-Schmidt the rest in
  // index order against N and the accepted vectors.
  int skip = 0;
  double best = -1;
  for (int i = 0; i < n; ++i) {
    const double a = std::fabs(f.unit[i]);
    if (a > best) {
      best = a;
      skip = i;
    }
  }
  int out = 0;
  for (int i = 0; i < n; ++i) {
    if (i == skip) continue;
    Vec v = Vec::unit(n, i);
    v = v - dot(v, f.unit) * f.unit;
    for (int j = 0; j < out; ++j) v = v - dot(v, f.frame[j]) * f.frame[j];
    f.frame[out++] = normalized(v);
  }
  f.frame[n - 1] = f.unit;

  // Orientation: (N, e_1, ..., e_{n-1}) positively oriented; flip e_1 if not.
  Vec cols[kMaxDim];
  cols[0] = f.unit;
  for (int i = 0; i + 1 < n; ++i) cols[i + 1] = f.frame[i];
  if (det_columns(cols, n) < 0) f.frame[0] = -f.frame[0];
  return f;
}

namespace {

struct PairShift {
  Vec dx, dy;
};

Vec fd_vec(const SegmentFrame& f, const PairShift& sh, double h,
           Vec (*eval)(const Vec&, const Vec&, double), double s) {
  const Vec p = eval(f.x + h * sh.dx, f.y + h * sh.dy, s);
  const Vec m = eval(f.x - h * sh.dx, f.y - h * sh.dy, s);
  return (0.5 / h) * (p - m);
}

Vec fd2_vec(const SegmentFrame& f, const PairShift& sh, double h,
            Vec (*eval)(const Vec&, const Vec&, double), double s) {
  const Vec p = eval(f.x + h * sh.dx, f.y + h * sh.dy, s);
  const Vec c = eval(f.x, f.y, s);
  const Vec m = eval(f.x - h * sh.dx, f.y - h * sh.dy, s);
  return (1.0 / (h * h)) * (p - 2.0 * c + m);
}

double fd_scalar(const SegmentFrame& f, const PairShift& sh, double h,
                 double (*eval)(const Vec&, const Vec&)) {
  return (eval(f.x + h * sh.dx, f.y + h * sh.dy) -
          eval(f.x - h * sh.dx, f.y - h * sh.dy)) /
         (2.0 * h);
}

double fd2_scalar(const SegmentFrame& f, const PairShift& sh, double h,
                  double (*eval)(const Vec&, const Vec&)) {
  return (eval(f.x + h * sh.dx, f.y + h * sh.dy) - 2.0 * eval(f.x, f.y) +
          eval(f.x - h * sh.dx, f.y - h * sh.dy)) /
         (h * h);
}

double eval_r(const Vec& x, const Vec& y) { return norm(y - x); }
Vec eval_nvec(const Vec& x, const Vec& y, double) { return normalized(y - x); }
Vec eval_theta(const Vec& x, const Vec& y, double s) {
  return x + s * normalized(y - x);
}

} // namespace

double Lemma21Report::max_abs_err() const {
  double m = 0;
  for (const auto& r : residuals) m = std::max(m, r.abs_err);
  return m;
}

double Lemma21Report::max_abs_err(int item, const std::string& quantity) const {
  double m = 0;
  for (const auto& r : residuals)
    if (r.item == item && r.quantity == quantity) m = std::max(m, r.abs_err);
  return m;
}

Lemma21Report lemma21_check(const SegmentFrame& frame, double h) {
  if (!(h > 1e-8 && h < frame.r / 10.0))
    throw DegenerateSegment("lemma21_check: h outside (1e-8, r/10)");

  Lemma21Report rep;
  rep.h = h;
  const int n = frame.n;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double r0 = frame.r;

  std::array<double, 5> svals{};
  for (int k = 0; k < 5; ++k) svals[k] = r0 * k / 4.0;

  auto push_vec = [&](int item, const char* qty, int i, double s,
                      const Vec& fd, const Vec& formula) {
    rep.residuals.push_back({item, qty, i + 1, s, norm(fd), norm(formula),
                             norm(fd - formula)});
  };
  auto push_scalar = [&](int item, const char* qty, int i, double fd,
                         double formula) {
    rep.residuals.push_back({item, qty, i + 1, nan, fd, formula,
                             std::fabs(fd - formula)});
  };

  for (int i = 0; i < n; ++i) {
    const PairShift Ei{frame.e(i), frame.e(i)};
    const PairShift Ti{frame.e(i), -frame.e(i)};

    // (1) along E_i: dN = 0, dr = 0, dtheta = e_i.
    push_vec(1, "N", i, nan, fd_vec(frame, Ei, h, eval_nvec, 0), Vec::zero(n));
    push_scalar(1, "r", i, fd_scalar(frame, Ei, h, eval_r), 0.0);
    for (double s : svals)
      push_vec(1, "theta", i, s, fd_vec(frame, Ei, h, eval_theta, s), frame.e(i));

    if (i < n - 1) {
      // (2) along Etilde_i, i < n: dN = -(2/r) e_i, dr = 0,
      //     dtheta = (1 - 2s/r) e_i.
      push_vec(2, "N", i, nan, fd_vec(frame, Ti, h, eval_nvec, 0),
               (-2.0 / r0) * frame.e(i));
      push_scalar(2, "r", i, fd_scalar(frame, Ti, h, eval_r), 0.0);
      for (double s : svals)
        push_vec(2, "theta", i, s, fd_vec(frame, Ti, h, eval_theta, s),
                 (1.0 - 2.0 * s / r0) * frame.e(i));
    } else {
      // (3) along Etilde_n: dN = 0, dr = -2, dtheta = e_n.
      push_vec(3, "N", i, nan, fd_vec(frame, Ti, h, eval_nvec, 0), Vec::zero(n));
      push_scalar(3, "r", i, fd_scalar(frame, Ti, h, eval_r), -2.0);
      for (double s : svals)
        push_vec(3, "theta", i, s, fd_vec(frame, Ti, h, eval_theta, s), frame.e(i));
    }

    // (4) second derivatives along E_i all vanish.
    push_vec(4, "N", i, nan, fd2_vec(frame, Ei, h, eval_nvec, 0), Vec::zero(n));
    push_scalar(4, "r", i, fd2_scalar(frame, Ei, h, eval_r), 0.0);
    for (double s : svals)
      push_vec(4, "theta", i, s, fd2_vec(frame, Ei, h, eval_theta, s), Vec::zero(n));

    if (i == n - 1) {
      // (5) second derivatives along Etilde_n all vanish.
      push_vec(5, "N", i, nan, fd2_vec(frame, Ti, h, eval_nvec, 0), Vec::zero(n));
      push_scalar(5, "r", i, fd2_scalar(frame, Ti, h, eval_r), 0.0);
      for (double s : svals)
        push_vec(5, "theta", i, s, fd2_vec(frame, Ti, h, eval_theta, s), Vec::zero(n));
    }
  }
  return rep;
}

} // namespace segray
