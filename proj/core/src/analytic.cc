// Copyright 2026 The lambdagen Authors
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

#include "lambdagen/analytic.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "lambdagen/errors.h"

namespace lambdagen {
namespace {

// Points sampled on (0, 1) to bracket the first sign change of Q.
constexpr int kRootScanPoints = 1000;
constexpr double kRootLow = 1e-6;
constexpr double kRootHigh = 1.0 - 1e-6;
// x this close to rho is evaluated at the singularity itself.
constexpr double kCriticalSlack = 1e-12;

double FindCriticalValue(const Polynomial& q) {
  double lo = kRootLow;
  if (!(q(lo) > 0.0)) throw DomainError("Q must be positive near 0");
  double hi = lo;
  bool bracketed = false;
  for (int i = 1; i <= kRootScanPoints; ++i) {
    const double x = kRootLow + (kRootHigh - kRootLow) * i / kRootScanPoints;
    if (q(x) <= 0.0) {
      hi = x;
      bracketed = true;
      break;
    }
    lo = x;
  }
  if (!bracketed) throw DomainError("Q has no sign change on (0, 1)");
  while (true) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (q(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return q(hi) == 0.0 ? hi : lo;
}

Polynomial Numerator(const Polynomial& p, const Polynomial& q) {
  const std::vector<double>& pc = p.coefficients();
  const std::vector<double>& qc = q.coefficients();
  std::vector<double> n(std::max(2 * pc.size(), qc.size()), 0.0);
  for (std::size_t i = 0; i < pc.size(); ++i) {
    for (std::size_t j = 0; j < pc.size(); ++j) n[i + j] += pc[i] * pc[j];
  }
  for (std::size_t i = 0; i < qc.size(); ++i) n[i] -= qc[i];
  return Polynomial(std::move(n));
}

void CheckSubcritical(const GFSpec& spec, double x) {
  if (!(x > 0.0) || !(x < spec.critical())) {
    throw DomainError("x must lie in (0, rho) with rho = " +
                      std::to_string(spec.critical()));
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0.0) {
    coefficients_.pop_back();
  }
}

double Polynomial::operator()(double x) const {
  double value = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * x + *it;
  }
  return value;
}

Polynomial Polynomial::Derivative() const {
  std::vector<double> d;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d.push_back(coefficients_[i] * static_cast<double>(i));
  }
  return Polynomial(std::move(d));
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kBinary:
      return "binary";
    case Family::kMotzkin:
      return "motzkin";
    case Family::kLambda:
      return "lambda";
    case Family::kCustom:
      return "custom";
  }
  return "custom";
}

GFSpec::GFSpec(Polynomial p, Polynomial q, Polynomial r, Family family)
    : p_(std::move(p)),
      q_(std::move(q)),
      r_(std::move(r)),
      dp_(p_.Derivative()),
      dq_(q_.Derivative()),
      dr_(r_.Derivative()),
      n_(Numerator(p_, q_)),
      dn_(n_.Derivative()),
      family_(family),
      critical_(FindCriticalValue(q_)) {}

GFSpec GFSpec::Binary() {
  static const GFSpec spec({1}, {1, 0, -4}, {0, 2}, Family::kBinary);
  return spec;
}

GFSpec GFSpec::Motzkin() {
  static const GFSpec spec({1, -1}, {1, -2, -3}, {0, 2}, Family::kMotzkin);
  return spec;
}

GFSpec GFSpec::Lambda() {
  // P = z^3 - z^2 - z + 1, Q = (z - 1)(z^5 + 3z^4 - 2z^3 + 2z^2 + z - 1),
  // R = 2 z^2 (1 - z).
  static const GFSpec spec({1, -1, -1, 1}, {1, -2, -1, 4, -5, 2, 1},
                           {0, 0, 2, -2}, Family::kLambda);
  return spec;
}

GFSpec GFSpec::Custom(Polynomial p, Polynomial q, Polynomial r) {
  return GFSpec(std::move(p), std::move(q), std::move(r), Family::kCustom);
}

double LambdaRho() {
  static const double rho = GFSpec::Lambda().critical();
  return rho;
}

double CriticalValue(const GFSpec& spec) { return spec.critical(); }

double EvalGF(const GFSpec& spec, double x) {
  if (!(x > 0.0) || x > spec.critical() + kCriticalSlack) {
    throw DomainError("x must lie in (0, rho] with rho = " +
                      std::to_string(spec.critical()));
  }
  double q = spec.q_(x);
  if (q < 0.0 || std::abs(x - spec.critical()) <= kCriticalSlack) q = 0.0;
  const double r = spec.r_(x);
  if (r == 0.0) throw DomainError("R vanishes at x");
  const double p = spec.p_(x);
  const double sq = std::sqrt(q);
  // The rationalized form avoids cancelling P against sqrt Q near 0.
  if (p > 0.0) return spec.n_(x) / (r * (p + sq));
  return (p - sq) / r;
}

double EvalGFDeriv(const GFSpec& spec, double x) {
  CheckSubcritical(spec, x);
  const double q = spec.q_(x);
  if (!(q > 0.0)) throw DomainError("Q vanishes at x");
  const double sq = std::sqrt(q);
  const double r = spec.r_(x);
  if (r == 0.0) throw DomainError("R vanishes at x");
  const double p = spec.p_(x);
  const double n = spec.n_(x);
  const double dsq = spec.dq_(x) / (2.0 * sq);
  if (p > 0.0 && n != 0.0) {
    // Logarithmic derivative of N / (R (P + sqrt Q)).
    const double d = p + sq;
    const double c = n / (r * d);
    return c * (spec.dn_(x) / n - spec.dr_(x) / r - (spec.dp_(x) + dsq) / d);
  }
  return (spec.dp_(x) - dsq) / r - (p - sq) * spec.dr_(x) / (r * r);
}

double MeanSize(const GFSpec& spec, double x) {
  return x * EvalGFDeriv(spec, x) / EvalGF(spec, x);
}

double StdDev(const GFSpec& spec, double x) {
  CheckSubcritical(spec, x);
  double h = std::max(1e-7 * x, 1e-10);
  h = std::min(h, (spec.critical() - x) / 4);
  const double c = EvalGF(spec, x);
  const double c1 = EvalGFDeriv(spec, x);
  const double c2 =
      (EvalGFDeriv(spec, x + h) - EvalGFDeriv(spec, x - h)) / (2.0 * h);
  const double mean = x * c1 / c;
  const double second = (x * x * c2 + x * c1) / c;
  return std::sqrt(std::max(second - mean * mean, 0.0));
}

double TuneForMean(const GFSpec& spec, double mean) {
  if (!std::isfinite(mean)) throw DomainError("mean must be finite");
  double lo = 1e-2 * spec.critical();
  double hi = spec.critical();
  if (!(MeanSize(spec, lo) < mean)) {
    throw DomainError("mean " + std::to_string(mean) +
                      " is not above the smallest attainable mean size");
  }
  while (true) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (MeanSize(spec, mid) < mean) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // hi may be rho itself, where the mean is infinite.
  if (hi >= spec.critical()) return lo;
  return std::abs(MeanSize(spec, lo) - mean) <=
                 std::abs(MeanSize(spec, hi) - mean)
             ? lo
             : hi;
}

BranchProbs ComputeBranchProbs(const GFSpec& spec, double x) {
  const double c = EvalGF(spec, x);
  switch (spec.family()) {
    case Family::kLambda: {
      const double x2 = x * x;
      if (std::abs(x - spec.critical()) <= kCriticalSlack) {
        return {{(1.0 - x2) / 2.0, x2, (1.0 - x2) / 2.0}};
      }
      return {{x2 / ((1.0 - x) * c), x2, x2 * c}};
    }
    case Family::kMotzkin:
      return {{x / c, x, x * c}};
    case Family::kBinary:
      return {{x / c, x * c}};
    case Family::kCustom:
      break;
  }
  throw DomainError("branch probabilities need a built-in family");
}

}  // namespace lambdagen
