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

#include "hexavoid/spectral.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_int.hpp>

#include "hexavoid/errors.hpp"
#include "hexavoid/recurrences.hpp"

namespace hexavoid {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Poly = std::vector<Rational>;  // leading coefficient first

void trim(Poly& p) {
  while (p.size() > 1 && p.front() == 0) p.erase(p.begin());
  if (p.empty()) p.push_back(0);
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    const Rational f = a[0] / b[0];
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    a.erase(a.begin());
    trim(a);
  }
  return a;
}

// Degree of gcd(p, p'); positive iff p has a repeated root.
int repeated_degree(const std::vector<std::int64_t>& coeffs) {
  Poly a(coeffs.begin(), coeffs.end());
  Poly b;
  const int d = static_cast<int>(coeffs.size()) - 1;
  for (int i = 0; i < d; ++i) b.push_back(Rational(coeffs[i] * (d - i)));
  trim(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}


std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char ch : std::to_string(k)) s += digits[ch - '0'];
  return s;
}

// Factorization over integer linear factors, e.g. "(x−1)³", or empty when
// the polynomial does not split that way.
std::string integer_factorization(std::vector<std::int64_t> c) {
  std::string out;
  int remaining = static_cast<int>(c.size()) - 1;
  while (remaining > 0) {
    const std::int64_t constant = c.back();
    bool found = false;
    const std::int64_t bound = constant < 0 ? -constant : constant;
    std::vector<std::int64_t> candidates{0};
    for (std::int64_t q = 1; q <= bound; ++q) {
      if (bound % q == 0) {
        candidates.push_back(q);
        candidates.push_back(-q);
      }
    }
    for (std::int64_t r : candidates) {
      int mult = 0;
      while (c.size() > 1) {
        // Synthetic division by (x - r).
        std::vector<std::int64_t> q{c[0]};
        for (std::size_t i = 1; i < c.size(); ++i) q.push_back(c[i] + r * q.back());
        if (q.back() != 0) break;
        q.pop_back();
        c = std::move(q);
        ++mult;
      }
      if (mult > 0) {
        std::string factor =
            r == 0 ? "x"
                   : (r > 0 ? "(x−" + std::to_string(r) + ")"
                            : "(x+" + std::to_string(-r) + ")");
        out += factor + (mult > 1 ? superscript(mult) : "");
        remaining -= mult;
        found = true;
        break;
      }
    }
    if (!found) return "";
  }
  return out;
}

Complex newton_polish(const std::vector<std::int64_t>& c, Complex z) {
  for (int iter = 0; iter < 100; ++iter) {
    Complex p = 0;
    Complex dp = 0;
    for (std::int64_t a : c) {
      dp = dp * z + p;
      p = p * z + Complex(Real(a));
    }
    if (abs(dp) == 0) break;
    const Complex step = p / dp;
    z -= step;
    if (abs(step) <= abs(z) * Real(1e-33)) break;
  }
  return z;
}

// Solves A c = b by Gaussian elimination with partial pivoting.
std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> a,
                                  std::vector<Complex> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

Complex power(const Complex& z, int e) {
  Complex result = 1;
  Complex base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Real term(const SpectralModel& model, std::size_t i, int n) {
  const Real t = (model.coeffs[i] * power(model.roots[i], n - 1)).real();
  return model.is_pair(i) ? 2 * t : t;
}

}  // namespace

std::string polynomial_text(const std::vector<std::int64_t>& c) {
  std::ostringstream out;
  const int d = static_cast<int>(c.size()) - 1;
  bool first = true;
  for (int i = 0; i <= d; ++i) {
    const std::int64_t a = c[i];
    if (a == 0) continue;
    const int power = d - i;
    const std::int64_t mag = a < 0 ? -a : a;
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    if (mag != 1 || power == 0) out << mag;
    if (power >= 1) out << "x";
    if (power >= 2) out << "^" << power;
    first = false;
  }
  return out.str();
}

std::vector<Complex> SpectralModel::all_roots() const {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.push_back(roots[i]);
    if (is_pair(i)) out.push_back(conj(roots[i]));
  }
  return out;
}

std::vector<std::int64_t> characteristic_polynomial(FamilyName family) {
  const RecurrenceSpec& spec = recurrence_for(family);
  std::vector<std::int64_t> c{1};
  for (std::int64_t a : spec.coefficients) c.push_back(-a);
  return c;
}

Complex eval_polynomial(const std::vector<std::int64_t>& coeffs,
                        const Complex& z) {
  Complex p = 0;
  for (std::int64_t a : coeffs) p = p * z + Complex(Real(a));
  return p;
}

SpectralModel solve_model(FamilyName family) {
  SpectralModel model;
  model.family = family;
  model.char_coeffs = characteristic_polynomial(family);
  const auto& c = model.char_coeffs;
  const int d = static_cast<int>(c.size()) - 1;

  const auto degenerate = [&] {
    std::string msg = "degenerate spectrum for " +
                      std::string(family_id(family)) +
                      ": characteristic polynomial " + polynomial_text(c);
    const std::string factors = integer_factorization(c);
    if (!factors.empty()) msg += " = " + factors;
    return DegenerateSpectrum(msg + " has a repeated root");
  };
  if (repeated_degree(c) > 0) throw degenerate();

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) {
    companion(i, d - 1) = -static_cast<double>(c[d - i]);
  }
  const Eigen::VectorXcd seeds = Eigen::EigenSolver<Eigen::MatrixXd>(
                                     companion, false)
                                     .eigenvalues();

  std::vector<Complex> real_roots;
  std::vector<Complex> pair_roots;
  for (int i = 0; i < d; ++i) {
    const std::complex<double> s = seeds[i];
    if (std::abs(s.imag()) < 1e-8) {
      real_roots.push_back(newton_polish(c, Complex(Real(s.real()))));
      real_roots.back() = Complex(real_roots.back().real());
    } else if (s.imag() < 0) {
      pair_roots.push_back(newton_polish(c, Complex(s.real(), s.imag())));
    }
  }
  if (real_roots.size() + 2 * pair_roots.size() != static_cast<std::size_t>(d)) {
    throw degenerate();
  }
  const auto by_real = [](const Complex& a, const Complex& b) {
    return a.real() < b.real();
  };
  std::sort(real_roots.begin(), real_roots.end(), by_real);
  std::sort(pair_roots.begin(), pair_roots.end(), by_real);
  model.real_root_count = static_cast<int>(real_roots.size());
  model.roots = real_roots;
  model.roots.insert(model.roots.end(), pair_roots.begin(), pair_roots.end());

  const std::vector<Complex> every = model.all_roots();
  for (std::size_t i = 0; i < every.size(); ++i) {
    for (std::size_t j = i + 1; j < every.size(); ++j) {
      if (abs(every[i] - every[j]) < Real(1e-6)) throw degenerate();
    }
  }
  Real residual = 0;
  for (const Complex& r : every) residual = std::max(residual, abs(eval_polynomial(c, r)));
  model.residual_bound = static_cast<double>(residual);

  const std::vector<BigInt> base = alpha_sequence(d, recurrence_for(family));
  std::vector<std::vector<Complex>> vandermonde(d, std::vector<Complex>(d));
  std::vector<Complex> rhs(d);
  for (int n = 1; n <= d; ++n) {
    for (int i = 0; i < d; ++i) vandermonde[n - 1][i] = power(every[i], n - 1);
    rhs[n - 1] = Complex(Real(base[n - 1]));
  }
  const std::vector<Complex> fitted = solve_linear(vandermonde, rhs);

  Real mismatch = 0;
  for (std::size_t i = 0, f = 0; i < model.roots.size(); ++i) {
    model.coeffs.push_back(fitted[f]);
    if (model.is_pair(i)) {
      mismatch = std::max(mismatch, abs(fitted[f + 1] - conj(fitted[f])));
      f += 2;
    } else {
      f += 1;
    }
  }
  model.conjugate_mismatch = static_cast<double>(mismatch);
  return model;
}

Real eval_exact_form(const SpectralModel& model, int n) {
  Real sum = 0;
  for (std::size_t i = 0; i < model.roots.size(); ++i) sum += term(model, i, n);
  return sum;
}

BigInt eval_rounded(const SpectralModel& model, int n) {
  Real sum = 0;
  for (std::size_t i = 0; i < model.roots.size(); ++i) {
    if (abs(model.roots[i]) > 1) sum += term(model, i, n);
  }
  const Real nearest = round(sum);
  // Error in R^(n-1) grows like n ulps of the sum; past 0.25 the fractional
  // part no longer means anything.
  const Real drift = abs(sum) * (n + 1) * 64 * std::numeric_limits<Real>::epsilon();
  if (drift > Real(0.25)) {
    throw PrecisionExhausted("closed form for " +
                             std::string(family_id(model.family)) + " at n=" +
                             std::to_string(n) + " exceeds working precision");
  }
  if (abs(sum - nearest) > Real(0.25)) {
    throw PrecisionExhausted("closed form for " +
                             std::string(family_id(model.family)) + " at n=" +
                             std::to_string(n) +
                             " is not within 0.25 of an integer");
  }
  return nearest.convert_to<BigInt>();
}

PublishedSpectrum published_spectrum(FamilyName family) {
  using C = std::complex<double>;
  switch (family) {
    case FamilyName::kHex8:
      return {{C(-0.49890), C(0.21989), C(1.95627), C(3.43526),
               C(0.44375, -1.07682)},
              {C(0.00164), C(0.13776), C(0.57156), C(0.24149),
               C(0.02378, 0.00080)}};
    case FamilyName::kHex6:
      return {{C(-0.49569), C(0.51154), C(3.03090), C(0.47662, -1.03635)},
              {C(0.63205), C(0.53110), C(0.50154), C(-0.19482, 0.11092)}};
    case FamilyName::kHex4:
      break;
  }
  return {};
}

}  // namespace hexavoid
