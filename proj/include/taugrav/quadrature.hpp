#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "taugrav/errors.hpp"

namespace taugrav {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate
  std::size_t evaluations = 0;

  double relative_error() const {
    return value == 0.0 ? error : std::abs(error / value);
  }
};

namespace detail {

// Gauss-Kronrod 7/15 on [-1,1]
inline constexpr double kGK15X[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kGK15W[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kG7W[4] = {0.129484966168870, 0.279705391489277,
                                   0.381830050505119, 0.417959183673469};

struct GK {
  double integral;
  double error;
};

template <class F>
GK gk15(const F& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double m = 0.5 * (a + b);
  double resk = kGK15W[7] * f(m);
  double resg = kG7W[3] * f(m);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kGK15X[i];
    const double fsum = f(m - dx) + f(m + dx);
    resk += kGK15W[i] * fsum;
    if (i % 2 == 1) resg += kG7W[i / 2] * fsum;
  }
  return GK{resk * h, std::abs(resk - resg) * std::abs(h)};
}

}  // namespace detail

// Adaptive 1-D quadrature (Gauss-Kronrod 7/15 with bisection).
inline QuadResult integrate_1d(const std::function<double(double)>& f, double a,
                               double b, double rel_tol = 1e-10,
                               double abs_tol = 0.0, int max_depth = 50) {
  QuadResult out;
  struct Seg {
    double a, b, value, error;
    int depth;
  };
  auto eval = [&](double lo, double hi, int depth) {
    auto gk = detail::gk15(f, lo, hi);
    out.evaluations += 15;
    return Seg{lo, hi, gk.integral, gk.error, depth};
  };
  auto cmp = [](const Seg& x, const Seg& y) { return x.error < y.error; };
  std::priority_queue<Seg, std::vector<Seg>, decltype(cmp)> heap(cmp);
  Seg whole = eval(a, b, 0);
  double total = whole.value;
  double active_err = whole.error;
  double frozen_err = 0.0;  // error of segments refined to the depth limit
  heap.push(whole);
  while (!heap.empty()) {
    if (active_err + frozen_err <=
        std::max(abs_tol, rel_tol * std::abs(total)))
      break;
    Seg s = heap.top();
    heap.pop();
    if (s.depth >= max_depth || s.b - s.a <= std::abs(s.a) * 1e-15) {
      active_err -= s.error;
      frozen_err += s.error;
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    Seg l = eval(s.a, mid, s.depth + 1);
    Seg r = eval(mid, s.b, s.depth + 1);
    total += l.value + r.value - s.value;
    active_err += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
  }
  out.value = total;
  out.error = active_err + frozen_err;
  return out;
}

namespace detail {

inline constexpr double kGL5X[5] = {-0.9061798459386640, -0.5384693101056831,
                                    0.0, 0.5384693101056831,
                                    0.9061798459386640};
inline constexpr double kGL5W[5] = {0.2369268850561891, 0.4786286704993665,
                                    0.5688888888888889, 0.4786286704993665,
                                    0.2369268850561891};
inline constexpr double kGL3X[3] = {-0.7745966692414834, 0.0,
                                    0.7745966692414834};
inline constexpr double kGL3W[3] = {0.5555555555555556, 0.8888888888888888,
                                    0.5555555555555556};

template <int N, class F>
void tensor_rule(const F& f, const Eigen::Matrix<double, N, 1>& lo,
                 const Eigen::Matrix<double, N, 1>& hi, double& fine,
                 double& coarse, std::size_t& evals) {
  using Vec = Eigen::Matrix<double, N, 1>;
  const Vec h = 0.5 * (hi - lo);
  const Vec m = 0.5 * (hi + lo);
  const double jac = h.prod();
  fine = 0.0;
  coarse = 0.0;
  // fine: 5^N tensor Gauss-Legendre
  int idx[N] = {0};
  for (;;) {
    Vec x;
    double w = 1.0;
    for (int d = 0; d < N; ++d) {
      x[d] = m[d] + h[d] * kGL5X[idx[d]];
      w *= kGL5W[idx[d]];
    }
    fine += w * f(x);
    ++evals;
    int d = 0;
    while (d < N && ++idx[d] == 5) idx[d++] = 0;
    if (d == N) break;
  }
  // coarse: 3^N
  int jdx[N] = {0};
  for (;;) {
    Vec x;
    double w = 1.0;
    for (int d = 0; d < N; ++d) {
      x[d] = m[d] + h[d] * kGL3X[jdx[d]];
      w *= kGL3W[jdx[d]];
    }
    coarse += w * f(x);
    ++evals;
    int d = 0;
    while (d < N && ++jdx[d] == 3) jdx[d++] = 0;
    if (d == N) break;
  }
  fine *= jac;
  coarse *= jac;
}

}  // namespace detail

// Adaptive tensor-product quadrature over an axis-aligned cell in N
// dimensions. Cells are split along their longest edge, worst error first.
template <int N>
QuadResult integrate_cell(
    const std::function<double(const Eigen::Matrix<double, N, 1>&)>& f,
    const Eigen::Matrix<double, N, 1>& lo,
    const Eigen::Matrix<double, N, 1>& hi, double rel_tol = 1e-8,
    double abs_tol = 0.0, std::size_t max_cells = 400000) {
  using Vec = Eigen::Matrix<double, N, 1>;
  struct Cell {
    Vec lo, hi;
    double value, error;
  };
  QuadResult out;
  auto make_cell = [&](const Vec& clo, const Vec& chi) {
    double fine, coarse;
    detail::tensor_rule<N>(f, clo, chi, fine, coarse, out.evaluations);
    return Cell{clo, chi, fine, std::abs(fine - coarse)};
  };
  auto cmp = [](const Cell& a, const Cell& b) { return a.error < b.error; };
  std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> heap(cmp);
  Cell whole = make_cell(lo, hi);
  double total = whole.value;
  double err = whole.error;
  heap.push(whole);
  std::size_t cells = 1;
  while (!heap.empty() && cells < max_cells) {
    if (err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    Cell c = heap.top();
    heap.pop();
    int axis;
    (c.hi - c.lo).maxCoeff(&axis);
    const double mid = 0.5 * (c.lo[axis] + c.hi[axis]);
    Vec lhi = c.hi;
    lhi[axis] = mid;
    Vec rlo = c.lo;
    rlo[axis] = mid;
    Cell l = make_cell(c.lo, lhi);
    Cell r = make_cell(rlo, c.hi);
    total += l.value + r.value - c.value;
    err += l.error + r.error - c.error;
    heap.push(l);
    heap.push(r);
    ++cells;
  }
  out.value = total;
  out.error = err;
  return out;
}

inline QuadResult integrate_2d(
    const std::function<double(const Eigen::Vector2d&)>& f,
    const Eigen::Vector2d& lo, const Eigen::Vector2d& hi,
    double rel_tol = 1e-8, double abs_tol = 0.0,
    std::size_t max_cells = 400000) {
  return integrate_cell<2>(f, lo, hi, rel_tol, abs_tol, max_cells);
}

inline QuadResult integrate_3d(
    const std::function<double(const Eigen::Vector3d&)>& f,
    const Eigen::Vector3d& lo, const Eigen::Vector3d& hi,
    double rel_tol = 1e-8, double abs_tol = 0.0,
    std::size_t max_cells = 400000) {
  return integrate_cell<3>(f, lo, hi, rel_tol, abs_tol, max_cells);
}

// Default relative tolerance for volume quadrature; overridable through the
// TAUGRAV_QUAD_TOL environment variable (see README).
double default_quad_tol();

}  // namespace taugrav
