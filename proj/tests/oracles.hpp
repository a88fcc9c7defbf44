// Copyright 2026 The hrrp-mfn Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Slow, direct reference implementations used only by the tests. They are
// written from the definitions and share no code with the library.

#ifndef HRRP_TESTS_ORACLES_HPP_
#define HRRP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

// Box average, edge cells repeated. Summation runs from the leftmost tap so
// the result is bitwise comparable.
inline std::vector<double> box(const std::vector<double>& x, int window) {
  const int n = static_cast<int>(x.size());
  const int h = window / 2;
  std::vector<double> out(x.size());
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = i - h; k <= i + h; ++k) s += x[std::min(std::max(k, 0), n - 1)];
    out[i] = s / window;
  }
  return out;
}

// Fills every zero run that has a one on both sides and is shorter than gap.
inline std::vector<std::uint8_t> fill_gaps(std::vector<std::uint8_t> b,
                                           std::size_t gap) {
  std::size_t i = 0;
  const std::size_t n = b.size();
  while (i < n && !b[i]) ++i;  // leading run stays
  while (i < n) {
    if (b[i]) { ++i; continue; }
    std::size_t j = i;
    while (j < n && !b[j]) ++j;
    if (j < n && j - i < gap) std::fill(b.begin() + i, b.begin() + j, 1);
    i = j;
  }
  return b;
}

inline std::size_t first_run(const std::vector<std::uint8_t>& b) {
  std::size_t i = 0;
  while (i < b.size() && !b[i]) ++i;
  std::size_t len = 0;
  while (i < b.size() && b[i]) { ++i; ++len; }
  return len;
}

inline std::vector<std::uint8_t> coi(const std::vector<double>& x, int window,
                                     double frac, std::size_t gap) {
  if (window > static_cast<int>(x.size())) {
    window = static_cast<int>(x.size());
    if (window % 2 == 0) --window;
  }
  const auto s = box(x, window);
  const double peak = *std::max_element(s.begin(), s.end());
  std::vector<std::uint8_t> b(x.size(), 0);
  if (peak > 0.0) {
    for (std::size_t i = 0; i < x.size(); ++i) b[i] = s[i] >= frac * peak;
  }
  return fill_gaps(b, gap);
}

// Projected extent of the rectangle as the spread of its corner projections.
inline double extent(double asp_deg, double l, double w) {
  const double a = asp_deg * std::numbers::pi / 180.0;
  double lo = 1e300, hi = -1e300;
  for (int sx : {-1, 1}) {
    for (int sy : {-1, 1}) {
      const double p = 0.5 * sx * l * std::cos(a) + 0.5 * sy * w * std::sin(a);
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
  }
  return hi - lo;
}

// Distance to the nearest set cell by exhaustive search.
inline std::vector<double> soft_mask(const std::vector<std::uint8_t>& b,
                                     double decay) {
  std::vector<double> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    double best = 1e300;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j]) best = std::min(best, std::abs(double(i) - double(j)));
    }
    out[i] = std::exp(-decay * best);
  }
  return out;
}

inline std::vector<double> gauss(const std::vector<double>& x, double sigma) {
  const int r = static_cast<int>(std::ceil(4.0 * sigma));
  const int n = static_cast<int>(x.size());
  double norm = 0.0;
  for (int j = -r; j <= r; ++j) norm += std::exp(-(j * j) / (2 * sigma * sigma));
  std::vector<double> out(x.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = -r; j <= r; ++j) {
      const double w = std::exp(-(j * j) / (2 * sigma * sigma)) / norm;
      out[i] += w * x[std::min(std::max(i - j, 0), n - 1)];
    }
  }
  return out;
}

struct Parts {
  std::vector<double> m, f, n;
};

inline Parts mfn(const std::vector<double>& x, const std::vector<std::uint8_t>& b,
                 double sigma, double decay) {
  Parts p;
  const std::size_t n = x.size();
  std::size_t count = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i]) { sum += x[i]; ++count; }
  }
  if (count == 0) return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), x};
  p.m.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.m[i] = b[i] ? sum / count : 0.0;
  const auto soft = soft_mask(b, decay);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] * soft[i];
  p.f = gauss(y, sigma);
  p.n.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.n[i] = x[i] - p.f[i];
  return p;
}

// Centered cosine on the union of the two masks.
inline double cos_f(const std::vector<double>& f1, const std::vector<std::uint8_t>& b1,
                    const std::vector<double>& f2, const std::vector<std::uint8_t>& b2) {
  auto centre = [](const std::vector<double>& f, const std::vector<std::uint8_t>& b) {
    double s = 0.0;
    int c = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (b[i]) { s += f[i]; ++c; }
    }
    return s / c;
  };
  const double c1 = centre(f1, b1), c2 = centre(f2, b2);
  std::vector<double> u, v;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    if (b1[i] || b2[i]) {
      u.push_back(f1[i] - c1);
      v.push_back(f2[i] - c2);
    }
  }
  double uv = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    uv += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  return uv / std::sqrt(uu * vv);
}

}  // namespace oracle

#endif  // HRRP_TESTS_ORACLES_HPP_
