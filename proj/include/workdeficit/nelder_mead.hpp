#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "workdeficit/types.hpp"

namespace workdeficit {

struct NelderMeadOptions {
  int max_iters = 2000;
  double f_tol = 1e-10;
  double x_tol = 1e-8;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  RealVector x;
  double f = 0.0;
  int iterations = 0;
  long long evaluations = 0;
  bool converged = false;
};

// Downhill simplex with standard reflection/expansion/contraction/shrink
// coefficients (1, 2, 0.5, 0.5). Deterministic: no internal randomness.
template <typename F>
NelderMeadResult nelder_mead(F&& f, const RealVector& x0, const NelderMeadOptions& opt) {
  const int n = static_cast<int>(x0.size());
  std::vector<RealVector> xs(static_cast<std::size_t>(n) + 1, x0);
  std::vector<double> fs(static_cast<std::size_t>(n) + 1);
  long long evals = 0;
  auto eval = [&](const RealVector& x) {
    ++evals;
    return f(x);
  };
  for (int i = 1; i <= n; ++i) xs[static_cast<std::size_t>(i)][i - 1] += opt.initial_step;
  for (int i = 0; i <= n; ++i) fs[static_cast<std::size_t>(i)] = eval(xs[static_cast<std::size_t>(i)]);

  auto sort_simplex = [&] {
    std::vector<int> idx(static_cast<std::size_t>(n) + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return fs[static_cast<std::size_t>(a)] < fs[static_cast<std::size_t>(b)];
    });
    std::vector<RealVector> xs2;
    std::vector<double> fs2;
    xs2.reserve(idx.size());
    fs2.reserve(idx.size());
    for (int i : idx) {
      xs2.push_back(xs[static_cast<std::size_t>(i)]);
      fs2.push_back(fs[static_cast<std::size_t>(i)]);
    }
    xs = std::move(xs2);
    fs = std::move(fs2);
  };

  NelderMeadResult res;
  int iter = 0;
  for (; iter < opt.max_iters; ++iter) {
    sort_simplex();
    double x_spread = 0.0;
    for (int i = 1; i <= n; ++i)
      x_spread = std::max(
          x_spread, (xs[static_cast<std::size_t>(i)] - xs[0]).cwiseAbs().maxCoeff());
    if (fs[static_cast<std::size_t>(n)] - fs[0] <= opt.f_tol && x_spread <= opt.x_tol) {
      res.converged = true;
      break;
    }

    RealVector centroid = RealVector::Zero(n);
    for (int i = 0; i < n; ++i) centroid += xs[static_cast<std::size_t>(i)];
    centroid /= static_cast<double>(n);
    const RealVector& worst = xs[static_cast<std::size_t>(n)];
    const double f_worst = fs[static_cast<std::size_t>(n)];
    const double f_second = fs[static_cast<std::size_t>(n) - 1];

    const RealVector xr = centroid + (centroid - worst);
    const double fr = eval(xr);
    if (fr < fs[0]) {
      const RealVector xe = centroid + 2.0 * (centroid - worst);
      const double fe = eval(xe);
      if (fe < fr) {
        xs[static_cast<std::size_t>(n)] = xe;
        fs[static_cast<std::size_t>(n)] = fe;
      } else {
        xs[static_cast<std::size_t>(n)] = xr;
        fs[static_cast<std::size_t>(n)] = fr;
      }
      continue;
    }
    if (fr < f_second) {
      xs[static_cast<std::size_t>(n)] = xr;
      fs[static_cast<std::size_t>(n)] = fr;
      continue;
    }
    const bool outside = fr < f_worst;
    const RealVector xc =
        outside ? (centroid + 0.5 * (xr - centroid)).eval()
                : (centroid + 0.5 * (worst - centroid)).eval();
    const double fc = eval(xc);
    if (fc < std::min(fr, f_worst)) {
      xs[static_cast<std::size_t>(n)] = xc;
      fs[static_cast<std::size_t>(n)] = fc;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      xs[static_cast<std::size_t>(i)] = xs[0] + 0.5 * (xs[static_cast<std::size_t>(i)] - xs[0]);
      fs[static_cast<std::size_t>(i)] = eval(xs[static_cast<std::size_t>(i)]);
    }
  }
  sort_simplex();
  res.x = xs[0];
  res.f = fs[0];
  res.iterations = iter;
  res.evaluations = evals;
  return res;
}

}  // namespace workdeficit
