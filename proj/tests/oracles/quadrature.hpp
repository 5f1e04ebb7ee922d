#pragma once
// Tensorized Gauss-Legendre integration of the kernel over a generalized
// simplex. Simplex coordinates use the Duffy map from the unit cube; the ray
// coordinates use polar form with the radius mapped by s / (1 - s).
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

struct GaussRule {
  std::vector<double> nodes, weights;  // on [0, 1]
};

inline GaussRule gauss_legendre(int order) {
  GaussRule rule;
  for (int i = 1; i <= order; ++i) {
    double x = std::cos(M_PI * (i - 0.25) / (order + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      const double step = p1 / dp;
      x -= step;
      if (std::fabs(step) < 1e-16) break;
    }
    rule.nodes.push_back(0.5 * (1 - x));
    rule.weights.push_back(1.0 / ((1 - x * x) * dp * dp));
  }
  return rule;
}

// finite: vertices v_1..v_p (v_0 = 0 implied); rays: axis indices.
inline double integrate_kernel(const std::vector<std::vector<double>>& finite, const std::vector<std::size_t>& rays,
                               const std::vector<double>& x, double jacobian, int order = 48) {
  const std::size_t n = x.size(), p = finite.size(), q = rays.size(), dims = p + q;
  const GaussRule rule = gauss_legendre(order);
  double factorial = 1, px = 1;
  for (std::size_t i = 1; i <= n; ++i) factorial *= static_cast<double>(i);
  for (double v : x) px *= v;

  std::vector<std::size_t> idx(dims, 0);
  double total = 0;
  while (true) {
    double weight = 1, remaining = 1;
    std::vector<double> point(n, 0.0);
    for (std::size_t j = 0; j < p; ++j) {  // Duffy: beta_j = remaining * u_j
      const double u = rule.nodes[idx[j]];
      const double beta = remaining * u;
      weight *= rule.weights[idx[j]] * remaining;
      for (std::size_t i = 0; i < n; ++i) point[i] += beta * finite[j][i];
      remaining -= beta;
    }
    if (q > 0) {
      // Ray block in polar form: t = rho * w, w on the standard (q-1)-simplex
      // (Duffy again), rho = scale * s / (1 - s). dt = rho^{q-1} d rho dw.
      double scale = 0;
      for (auto axis : rays) scale += x[axis];
      scale = q / scale;
      const double s = rule.nodes[idx[p]];
      const double rho = scale * s / (1 - s);
      weight *= scale * rule.weights[idx[p]] / ((1 - s) * (1 - s)) * std::pow(rho, static_cast<double>(q - 1));
      double left = 1;
      for (std::size_t k = 0; k < q; ++k) {
        double w = left;
        if (k + 1 < q) {
          w = left * rule.nodes[idx[p + 1 + k]];
          weight *= rule.weights[idx[p + 1 + k]] * left;
        }
        point[rays[k]] += rho * w;
        left -= w;
      }
    }
    double lin = 1;
    for (std::size_t i = 0; i < n; ++i) lin += point[i] * x[i];
    total += weight * factorial * px / std::pow(lin, static_cast<double>(n + 1));

    std::size_t d = 0;
    while (d < dims && ++idx[d] == static_cast<std::size_t>(order)) idx[d++] = 0;
    if (d == dims) break;
  }
  return jacobian * total;
}

}  // namespace oracle
