// Copyright 2026 The Coopet Authors
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

#ifndef COOPET_NUMERIC_HPP
#define COOPET_NUMERIC_HPP

#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>
#include <vector>

#include "coopet/rational.hpp"

namespace coopet {

// The engine is templated on the scalar type: Rational for exact mode,
// double for float mode. The two instantiations never meet, so modes
// cannot mix silently.

template <class Num>
struct num_traits;

template <>
struct num_traits<Rational> {
  static constexpr bool exact = true;
  static const char* mode_name() { return "exact"; }
  static Rational from_int(long v) { return Rational(v); }
  static Rational ratio(long num, long den) { return Rational(num, den); }
  static Rational parse(const std::string& text) { return Rational::parse(text); }
  static std::string render(const Rational& v) { return v.str(); }
  static double to_double(const Rational& v) { return v.to_double(); }
  // Exact mode ignores tolerances.
  static bool near(const Rational& a, const Rational& b, double) { return a == b; }
};

template <>
struct num_traits<double> {
  static constexpr bool exact = false;
  static const char* mode_name() { return "float"; }
  static double from_int(long v) { return static_cast<double>(v); }
  static double ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return std::stod(text);
      return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
    } catch (const std::exception&) {
      throw parse_error("not a numeric literal: '" + text + "'");
    }
  }
  static std::string render(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }
  static double to_double(double v) { return v; }
  static bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
};

namespace detail {

// Factorial table over mpz, built once. 25! is the largest the engine needs
// (player cap 24, so n - s + 1 <= 25), but the table grows on demand.
// Returns a copy: the table may reallocate under another thread's growth.
inline mpz_class factorial_mpz(int k) {
  static std::vector<mpz_class> table{mpz_class(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    table.push_back(table.back() * static_cast<long>(table.size()));
  }
  return table[k];
}

}  // namespace detail

template <class Num>
Num factorial_of(int k);

template <>
inline Rational factorial_of<Rational>(int k) {
  return Rational(mpq_class(detail::factorial_mpz(k)));
}

template <>
inline double factorial_of<double>(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

template <class Num>
Num pow2_of(int k) {
  Num v = num_traits<Num>::from_int(1);
  const Num two = num_traits<Num>::from_int(2);
  for (int i = 0; i < k; ++i) v = v * two;
  return v;
}

template <class Num>
Num binomial_of(int n, int k) {
  if (k < 0 || k > n) return num_traits<Num>::from_int(0);
  return factorial_of<Num>(n) / (factorial_of<Num>(k) * factorial_of<Num>(n - k));
}

}  // namespace coopet

#endif  // COOPET_NUMERIC_HPP
