#include "freudlab/tridiag.hpp"

#include <algorithm>

#include "freudlab/error.hpp"

namespace freudlab {

std::vector<Real> symtridiag_eigen(std::span<const Real> diag, std::span<const Real> offdiag,
                                   const Real& tol) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag.size() + 1 != n) {
    throw ParameterError("offdiag must have length diag.size() - 1");
  }

  Precision p = tol.precision();
  for (const auto& v : diag) p = std::max(p, v.precision());
  for (const auto& v : offdiag) p = std::max(p, v.precision());

  std::vector<Real> d;
  std::vector<Real> e;
  d.reserve(n);
  e.reserve(n);
  for (const auto& v : diag) d.push_back(v.with_precision(p));
  for (const auto& v : offdiag) e.push_back(v.with_precision(p));
  e.emplace_back(p);

  Real anorm(p);
  for (std::size_t i = 0; i < n; ++i) {
    anorm = max(anorm, abs(d[i]) + abs(e[i]) + (i > 0 ? abs(e[i - 1]) : Real(p)));
  }
  const Real eps = Real::epsilon(p);
  const Real floor_abs = max(eps * anorm, min(tol, eps * anorm * 16));

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        Real dd = abs(d[m]) + abs(d[m + 1]);
        Real em = abs(e[m]);
        if (em <= eps * dd || em <= floor_abs) break;
      }
      if (m != l) {
        if (++iter > 60) throw IterationError("tridiagonal QL did not converge", static_cast<int>(l));
        Real g = (d[l + 1] - d[l]) / (2 * e[l]);
        Real r = hypot(g, Real(1, p));
        g = d[m] - d[l] + e[l] / (g + (g.sign() >= 0 ? abs(r) : -abs(r)));
        Real s(1, p);
        Real c(1, p);
        Real q(p);
        bool underflow = false;
        std::size_t i = m;
        while (i-- > l) {
          Real f = s * e[i];
          Real b = c * e[i];
          r = hypot(f, g);
          e[i + 1] = r;
          if (r.is_zero()) {
            d[i + 1] -= q;
            e[m] = Real(p);
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - q;
          r = (d[i] - g) * s + 2 * c * b;
          q = s * r;
          d[i + 1] = g + q;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= q;
        e[l] = g;
        e[m] = Real(p);
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end(), [](const Real& a, const Real& b) { return a < b; });
  return d;
}

}  // namespace freudlab
