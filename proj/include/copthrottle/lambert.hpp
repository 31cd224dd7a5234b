#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "copthrottle/errors.hpp"

namespace copthrottle {

/// Principal branch W(x) for x >= 0, by Halley iteration in long double.
/// Residuals |W e^W - x| stay below 1e-12 up to x = 1e6 when evaluated in
/// long double; a double result could not meet that at the top of the range.
inline long double lambert_w(long double x) {
  if (std::isnan(x) || x < 0) throw InvalidInput("lambert_w: argument must be non-negative");
  if (x == 0) return 0;
  if (std::isinf(x)) return x;
  long double w = x < 3 ? std::log1p(x) : std::log(x) - std::log(std::log(x));
  for (int iter = 0; iter < 100; ++iter) {
    long double e = std::exp(w);
    long double f = w * e - x;
    long double d = e * (w + 1);
    long double step = f / (d - (w + 2) * f / (2 * w + 2));
    w -= step;
    if (std::fabs(step) <= 4 * std::numeric_limits<long double>::epsilon() * std::fmax(1.0L, std::fabs(w))) break;
  }
  // polish: the last ulp decides the residual at large x
  auto residual = [x](long double v) { return std::fabs(v * std::exp(v) - x); };
  for (int i = 0; i < 4; ++i) {
    long double up = std::nextafter(w, w + 1), down = std::nextafter(w, w - 1);
    long double here = residual(w);
    if (residual(up) < here) w = up;
    else if (residual(down) < here) w = down;
    else break;
  }
  return w;
}

struct LambertParams {
  int n = 0;
  long double tau = 0;
  long double beta = 0;
  // rounded combinatorial sizes for the staged decomposition
  int long_len = 0;    // ceil(beta tau)
  int guard_r1 = 0;    // ceil(tau)
  int star_deg = 0;    // ceil(tau)
  int mid_len = 0;     // ceil(tau^2)
  int guard_r2 = 0;    // ceil(tau)
};

/// tau = sqrt(ln n / W(ln n)), beta = tau^(tau^2), natural logarithm.
inline LambertParams lambert_params(int n) {
  if (n < 2) throw InvalidInput("lambert_params: need n >= 2");
  LambertParams p;
  p.n = n;
  long double ln = std::log(static_cast<long double>(n));
  p.tau = std::sqrt(ln / lambert_w(ln));
  p.beta = std::pow(p.tau, p.tau * p.tau);
  auto up = [](long double v) {
    long double c = std::ceil(v - 1e-12L);
    if (c > 1e9L) throw InvalidInput("lambert_params: parameter overflow");
    return std::max(1, static_cast<int>(c));
  };
  p.long_len = up(p.beta * p.tau);
  p.guard_r1 = up(p.tau);
  p.star_deg = up(p.tau);
  p.mid_len = up(p.tau * p.tau);
  p.guard_r2 = up(p.tau);
  return p;
}

}  // namespace copthrottle
