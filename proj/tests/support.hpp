#pragma once

#include <map>
#include <mpfr.h>

#include <gtest/gtest.h>

#include "freudlab/freud.hpp"
#include "freudlab/real.hpp"

namespace freudlab::test {

inline constexpr Precision P256{256};

inline Real R(const char* s, Precision p = P256) { return Real::from_string(s, p); }

inline Real newton_tol(Precision p, int n) { return Real::pow2(-(p.bits * 7) / 8, p) * n; }

/// Newton table shared across tests (built once per size and precision).
inline const FreudTable& freud(int n, Precision p = P256) {
  static std::map<std::pair<int, long>, FreudTable> cache;
  auto key = std::make_pair(n, p.bits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, string_newton(n, p, newton_tol(p, n))).first;
  return it->second;
}

/// Gamma(x) straight from MPFR, independent of the AGM route.
inline Real mpfr_gamma_of(long num, long den, Precision p) {
  Real x(num, p);
  x /= den;
  Real g(p);
  mpfr_gamma(g.get(), x.get(), MPFR_RNDN);
  return g;
}

}  // namespace freudlab::test

/// |a - b| <= tol, printing both values on failure.
#define EXPECT_REAL_NEAR(a, b, tol)                                                        \
  do {                                                                                     \
    const ::freudlab::Real& a_ = (a);                                                      \
    const ::freudlab::Real& b_ = (b);                                                      \
    EXPECT_TRUE(::freudlab::abs(a_ - b_) <= (tol)) << a_.to_string(30) << " vs " << b_.to_string(30); \
  } while (0)
