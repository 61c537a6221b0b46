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

#ifndef LAMBDAGEN_ANALYTIC_H_
#define LAMBDAGEN_ANALYTIC_H_

// Floating-point analytics for generating functions of the form
//
//   C(x) = (P(x) - sqrt(Q(x))) / R(x)
//
// which covers binary trees, Motzkin trees and plain lambda terms. The
// critical value rho is the smallest positive root of Q; C(rho) is finite
// but C'(x) diverges as x -> rho.

#include <cstddef>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace lambdagen {

class Polynomial {
 public:
  Polynomial() = default;
  // coefficients[i] multiplies x^i. Trailing zeros are dropped.
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients)
      : Polynomial(std::vector<double>(coefficients)) {}

  double operator()(double x) const;
  Polynomial Derivative() const;

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coefficients_; }

 private:
  std::vector<double> coefficients_;
};

enum class Family { kBinary, kMotzkin, kLambda, kCustom };

std::string_view FamilyName(Family family);

class GFSpec {
 public:
  static GFSpec Binary();
  static GFSpec Motzkin();
  static GFSpec Lambda();
  // Throws DomainError if Q has no sign change on (0, 1).
  static GFSpec Custom(Polynomial p, Polynomial q, Polynomial r);

  const Polynomial& p() const { return p_; }
  const Polynomial& q() const { return q_; }
  const Polynomial& r() const { return r_; }
  Family family() const { return family_; }

  // Cached smallest root of Q in (0, 1).
  double critical() const { return critical_; }

 private:
  GFSpec(Polynomial p, Polynomial q, Polynomial r, Family family);

  Polynomial p_, q_, r_;
  Polynomial dp_, dq_, dr_;
  Polynomial n_, dn_;  // N = P^2 - Q, so C = N / (R (P + sqrt Q))
  Family family_;
  double critical_;

  friend double EvalGF(const GFSpec& spec, double x);
  friend double EvalGFDeriv(const GFSpec& spec, double x);
};

// The lambda critical value, 0.5093081270242373...
double LambdaRho();

// Smallest root of Q by bisection on (1e-6, 1 - 1e-6).
double CriticalValue(const GFSpec& spec);

// 0 < x <= rho (+1e-12). Throws DomainError outside.
double EvalGF(const GFSpec& spec, double x);

// C'(x) from the closed form, 0 < x < rho.
double EvalGFDeriv(const GFSpec& spec, double x);

// Boltzmann mean size x C'(x) / C(x).
double MeanSize(const GFSpec& spec, double x);

// Boltzmann size standard deviation; C'' by central difference on C'.
double StdDev(const GFSpec& spec, double x);

// x in (0, rho) with MeanSize(x) = mean. Throws DomainError if the mean is
// not above the family's smallest attainable mean.
double TuneForMean(const GFSpec& spec, double mean);

// Probabilities of each constructor at the root of a Boltzmann object:
//   lambda  (variable, abstraction, application)
//   Motzkin (leaf, unary, binary)
//   binary  (leaf, node)
struct BranchProbs {
  std::vector<double> probs;

  double operator[](std::size_t i) const { return probs[i]; }
  std::size_t size() const { return probs.size(); }
};

// 0 < x <= rho. For lambda at rho the exact simplification
// ((1 - rho^2)/2, rho^2, (1 - rho^2)/2) is used. Throws DomainError for
// custom specs, which carry no constructor structure.
BranchProbs ComputeBranchProbs(const GFSpec& spec, double x);

}  // namespace lambdagen

#endif  // LAMBDAGEN_ANALYTIC_H_
