// Copyright 2026 The biozip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Reference implementations used only by tests. They follow the textbook
// definitions directly and share no code with the library.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "biozip/config.hpp"

namespace biozip::testing {

/// Orthonormal DCT-II by direct summation, accumulated in long double.
inline std::vector<double> direct_dct(std::span<const double> f) {
  const std::size_t n = f.size();
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<double> y(n);
  for (std::size_t u = 0; u < n; ++u) {
    long double sum = 0.0L;
    for (std::size_t x = 0; x < n; ++x) {
      sum += f[x] * std::cos(pi * (2.0L * x + 1.0L) * u / (2.0L * n));
    }
    const long double a = (u == 0) ? std::sqrt(1.0L / n) : std::sqrt(2.0L / n);
    y[u] = static_cast<double>(a * sum);
  }
  return y;
}

/// Inverse of direct_dct (DCT-III), also by direct summation.
inline std::vector<double> direct_idct(std::span<const double> y) {
  const std::size_t n = y.size();
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<double> f(n);
  for (std::size_t x = 0; x < n; ++x) {
    long double sum = 0.0L;
    for (std::size_t u = 0; u < n; ++u) {
      const long double a = (u == 0) ? std::sqrt(1.0L / n) : std::sqrt(2.0L / n);
      sum += a * y[u] * std::cos(pi * (2.0L * x + 1.0L) * u / (2.0L * n));
    }
    f[x] = static_cast<double>(sum);
  }
  return f;
}

/// Recursive Haar analysis written from the pairwise definition:
/// A[k] = (s[2k] + s[2k+1]) / sqrt(2), D[k] = (s[2k] - s[2k+1]) / sqrt(2).
inline std::vector<double> recursive_haar(std::vector<double> s, int levels) {
  if (levels == 0) return s;
  const std::size_t half = s.size() / 2;
  std::vector<double> a(half), d(half);
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < half; ++k) {
    a[k] = (s[2 * k] + s[2 * k + 1]) * r;
    d[k] = (s[2 * k] - s[2 * k + 1]) * r;
  }
  std::vector<double> out = recursive_haar(std::move(a), levels - 1);
  out.insert(out.end(), d.begin(), d.end());
  return out;
}

inline long double energy(std::span<const double> v) {
  long double e = 0.0L;
  for (double x : v) e += static_cast<long double>(x) * x;
  return e;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

inline double oracle_rmse(std::span<const double> x, std::span<const double> y) {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double d = static_cast<long double>(x[i]) - y[i];
    sum += d * d;
  }
  return static_cast<double>(std::sqrt(sum / x.size()));
}

inline double oracle_cr(std::uint64_t original, std::uint64_t compressed) {
  return static_cast<double>((static_cast<long double>(original) - compressed) /
                             original * 100.0L);
}

inline double oracle_t_min(const StageTimings& t) {
  double m = t.t_lossy;
  if (t.t_thr > m) m = t.t_thr;
  if (t.t_lossless > m) m = t.t_lossless;
  if (t.t_ilossless > m) m = t.t_ilossless;
  if (t.t_ilossy > m) m = t.t_ilossy;
  return m;
}

inline bool relative_close(double a, double b, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= tol * scale;
}

inline bool bit_equal(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
  }
  return true;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

/// A block shaped like thresholded transform output: a random fraction of
/// entries is +0.0, the rest spread over many magnitudes. Occasional -0.0,
/// subnormals and extreme finite values are mixed in.
inline std::vector<double> random_sparse_block(std::mt19937_64& rng, std::size_t n,
                                               double zero_fraction) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> exponent(-30, 30);
  std::vector<double> v(n);
  for (auto& x : v) {
    if (unit(rng) < zero_fraction) {
      x = 0.0;
      continue;
    }
    const double pick = unit(rng);
    if (pick < 0.01) {
      x = -0.0;
    } else if (pick < 0.02) {
      x = std::numeric_limits<double>::denorm_min() * (1 + static_cast<int>(unit(rng) * 1000));
    } else if (pick < 0.03) {
      x = (unit(rng) < 0.5 ? -1 : 1) * std::numeric_limits<double>::max();
    } else {
      x = (unit(rng) - 0.5) * std::ldexp(1.0, exponent(rng));
    }
  }
  return v;
}

}  // namespace biozip::testing
