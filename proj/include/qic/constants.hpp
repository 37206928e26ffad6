// Copyright 2026 The QIC Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

#include "qic/errors.hpp"

namespace qic {

/// Golden-ratio constants of the Fibonacci model.
///
/// `z`, `x`, `y` are the entries of the rank-1 block [[z, x], [x, y]] that the
/// local projector carries on the two windows whose centre bit may flip
/// (z + y = 1 and z * y = x^2). `r_identity` and `r_tau` are the braid
/// eigenphases of the identity and tau fusion channels, `d` their difference.
/// `a` is the Kauffman bracket variable and `t` the Jones evaluation point.
template <typename Real = double>
struct GoldenConstants {
  using Complex = std::complex<Real>;

  Real phi;
  Real z;
  Real x;
  Real y;
  Complex r_identity;
  Complex r_tau;
  Complex d;
  Complex a;
  Complex t;

  static GoldenConstants make() {
    constexpr Real pi = std::numbers::pi_v<Real>;
    const Real phi = std::numbers::phi_v<Real>;
    GoldenConstants c{};
    c.phi = phi;
    c.z = Real(1) / (phi * phi);
    c.x = std::pow(phi, Real(-1.5));
    c.y = Real(1) / phi;
    c.r_identity = std::polar(Real(1), Real(4) * pi / Real(5));
    c.r_tau = std::polar(Real(1), Real(-3) * pi / Real(5));
    c.d = c.r_identity - c.r_tau;
    c.a = std::polar(Real(1), Real(3) * pi / Real(5));
    c.t = std::polar(Real(1), Real(-2) * pi / Real(5));
    return c;
  }
};

template <typename Real = double>
const GoldenConstants<Real>& golden() {
  static const GoldenConstants<Real> constants = GoldenConstants<Real>::make();
  return constants;
}

/// Which sign pattern the braid eigenphases use.
///
/// `Stated` is R_I = e^{4 pi i/5}, R_tau = e^{-3 pi i/5}, the pair that makes
/// P B = R_I P hold with R_I as written. `DisplayedExpression` flips both
/// exponents (R_I = e^{-4 pi i/5}, R_tau = e^{3 pi i/5}).
enum class PhaseConvention { Stated, DisplayedExpression };

/// Returns (R_I, R_tau) for the convention.
template <typename Real = double>
std::pair<std::complex<Real>, std::complex<Real>> braid_phases(
    PhaseConvention convention = PhaseConvention::Stated) {
  const auto& g = golden<Real>();
  if (convention == PhaseConvention::Stated) return {g.r_identity, g.r_tau};
  return {std::conj(g.r_identity), std::conj(g.r_tau)};
}

/// F_n with F_0 = 0, F_1 = 1. Exact for n <= 93.
inline std::uint64_t fibonacci(int n) {
  if (n < 0 || n > 93) throw BoundsError("fibonacci: index out of range");
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

}  // namespace qic
