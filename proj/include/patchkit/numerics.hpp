// SPDX-License-Identifier: Apache-2.0
//
// patchkit - rectangular microstrip patch antenna synthesis and analysis
// Copyright (C) 2026 The patchkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef PATCHKIT_NUMERICS_HPP
#define PATCHKIT_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <span>

namespace patchkit::numerics
{

using ScalarFn = std::function<double(double)>;

struct QuadratureOptions
{
    double abs_tol = 1e-9;
    int max_depth = 30;
    int initial_panels = 16; // coarse split before adaptation, guards against aliasing on oscillatory integrands
};

// Adaptive Simpson on [a, b]. Throws ModelError when a subinterval reaches
// max_depth without meeting its share of the tolerance.
double adaptive_simpson(const ScalarFn &f, double a, double b, const QuadratureOptions &opt = {});

// Composite Simpson with n panels (n rounded up to even).
double composite_simpson(const ScalarFn &f, double a, double b, std::size_t n);

// Composite trapezoid on n+1 equally spaced nodes.
double trapezoid(const ScalarFn &f, double a, double b, std::size_t n);

struct RootOptions
{
    double x_tol = 1e-12;
    int max_iter = 200;
};

// Bisection for a sign change of f on [lo, hi]. Throws ModelError if f(lo)
// and f(hi) share a sign or the iteration cap is hit before x_tol.
double bisect(const ScalarFn &f, double lo, double hi, const RootOptions &opt = {});

// Brent's method (inverse quadratic / secant / bisection), same contract as bisect.
double brent_root(const ScalarFn &f, double lo, double hi, const RootOptions &opt = {});

// Golden-section minimization of a unimodal function on [lo, hi].
double golden_section_min(const ScalarFn &f, double lo, double hi, double x_tol = 1e-9, int max_iter = 200);

// Neumaier-compensated summation.
class CompensatedSum
{
public:
    void add(double x);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

} // namespace patchkit::numerics

#endif
