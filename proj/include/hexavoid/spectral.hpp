// Copyright 2026 The hexavoid Authors
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

#ifndef HEXAVOID_SPECTRAL_HPP_
#define HEXAVOID_SPECTRAL_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "hexavoid/bigint.hpp"
#include "hexavoid/pattern_family.hpp"

namespace hexavoid {

// 113-bit significands: alpha_40 is ~1.9e20, beyond what a double can round
// to the right integer.
using Real = boost::multiprecision::cpp_bin_float_quad;
using Complex = boost::multiprecision::cpp_complex_quad;

// Closed form alpha_n = sum_i c_i R_i^(n-1) over the roots of the
// characteristic polynomial, fitted to alpha_1..alpha_order.
//
// `roots` lists the real roots in ascending order, then one representative
// per conjugate pair (the one with negative imaginary part); the partner's
// term is the conjugate of the representative's.
struct SpectralModel {
  FamilyName family;
  std::vector<std::int64_t> char_coeffs;  // leading coefficient first
  std::vector<Complex> roots;
  std::vector<Complex> coeffs;
  int real_root_count = 0;
  double residual_bound = 0;      // max |p(R_i)|
  double conjugate_mismatch = 0;  // max |c(conj R) - conj(c(R))| in the fit

  bool is_pair(std::size_t i) const {
    return static_cast<int>(i) >= real_root_count;
  }
  // Every root, conjugates included.
  std::vector<Complex> all_roots() const;
};

// x^d - a_1 x^(d-1) - ... - a_d for alpha_n = sum a_i alpha_{n-i}.
std::vector<std::int64_t> characteristic_polynomial(FamilyName family);

// Throws DegenerateSpectrum when the polynomial has a repeated root (HEX4).
SpectralModel solve_model(FamilyName family);

// Real part of the full spectral sum.
Real eval_exact_form(const SpectralModel& model, int n);

// Nearest integer to the sum over roots of modulus > 1. Throws
// PrecisionExhausted when that sum is more than 0.25 from an integer.
BigInt eval_rounded(const SpectralModel& model, int n);

// "x^6 - 6x^5 + ... - 1"
std::string polynomial_text(const std::vector<std::int64_t>& coeffs);

Complex eval_polynomial(const std::vector<std::int64_t>& coeffs,
                        const Complex& z);

// Roots and coefficients as printed in the literature to 5 decimals, in
// SpectralModel order.
struct PublishedSpectrum {
  std::vector<std::complex<double>> roots;
  std::vector<std::complex<double>> coeffs;
};
PublishedSpectrum published_spectrum(FamilyName family);

}  // namespace hexavoid

#endif  // HEXAVOID_SPECTRAL_HPP_
