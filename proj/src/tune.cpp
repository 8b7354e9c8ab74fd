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

#include "patchkit/tune.hpp"

#include "patchkit/network.hpp"
#include "patchkit/numerics.hpp"
#include "patchkit/random.hpp"

#include <algorithm>
#include <cmath>

namespace patchkit::tune
{

TlmSolution with_length(const TlmSolution &tlm, double l_patch_m)
{
    TlmSolution s = tlm;
    s.l_patch_m = l_patch_m;
    s.l_eff_m = l_patch_m + 2.0 * tlm.delta_l_m;
    return s;
}

TlmSolution tune_length(const DesignTarget &target, const Substrate &sub, const TlmSolution &tlm,
                        const TuneOptions &opt)
{
    validate_target(target);
    validate_substrate(sub);
    if (!(tlm.l_patch_m > 0.0 && tlm.w_patch_m > 0.0))
        throw InvalidArgument("tune_length: initial solution has nonpositive dimensions");

    const double ft = target.f_r_hz;
    auto f_res = [&](double l) { return network::patch_resonance(with_length(tlm, l), sub); };

    double lo = opt.bracket_lo * tlm.l_patch_m; // short patch, high resonance
    double hi = opt.bracket_hi * tlm.l_patch_m;
    double f_lo, f_hi;
    try
    {
        f_lo = f_res(lo);
        f_hi = f_res(hi);
    }
    catch (const std::exception &e)
    {
        throw ModelError(std::string("tune_length: cannot evaluate bracket ends: ") + e.what());
    }
    if (!(f_lo > f_hi))
        throw ModelError("tune_length: resonance is not decreasing in L across the bracket");
    if (!(f_lo > ft && ft > f_hi))
        throw ModelError("tune_length: target frequency not bracketed by f_res(" + std::to_string(opt.bracket_lo) +
                         " L) = " + std::to_string(f_lo) + " Hz and f_res(" + std::to_string(opt.bracket_hi) +
                         " L) = " + std::to_string(f_hi) + " Hz");

    for (int step = 0; step < opt.max_steps; ++step)
    {
        const double mid = 0.5 * (lo + hi);
        const double fm = f_res(mid);
        if (std::abs(fm - ft) <= opt.freq_tol_hz)
            return with_length(tlm, mid);
        if (fm > ft)
            lo = mid;
        else
            hi = mid;
    }
    throw ModelError("tune_length: no convergence within " + std::to_string(opt.max_steps) + " bisection steps");
}

double transformer_impedance(double r_model_ohm, double z0_ohm)
{
    if (!(r_model_ohm > 0.0))
        throw InvalidArgument("match_qwt: model resonant resistance must be positive");
    return synthesis::qwt_impedance(z0_ohm, r_model_ohm);
}

MatchResult match_qwt(const TlmSolution &tlm, const Substrate &sub, const DesignTarget &target)
{
    validate_target(target);
    MatchResult m;
    m.f_res_hz = network::patch_resonance(tlm, sub);
    m.r_model_ohm = network::input_impedance(tlm, sub, m.f_res_hz).real();
    m.z_qwt_ohm = transformer_impedance(m.r_model_ohm, target.z0_ohm);
    m.qwt = mstripline::qwt_section(m.z_qwt_ohm, target.f_r_hz, sub);
    return m;
}

void validate_tolerance_spec(const ToleranceSpec &spec)
{
    if (!std::isfinite(spec.rel_tol_dims) || spec.rel_tol_dims < 0.0)
        throw InvalidArgument("tolerance: dimension tolerance must be >= 0");
    if (!std::isfinite(spec.rel_tol_eps) || spec.rel_tol_eps < 0.0)
        throw InvalidArgument("tolerance: eps_r tolerance must be >= 0");
    if (spec.n_samples < 1)
        throw InvalidArgument("tolerance: need at least one sample");
}

SampleOutcome evaluate_sample(const PatchDesign &design, const ToleranceSpec &spec, std::size_t i)
{
    random::NormalStream z(spec.seed, i);
    auto dim = [&](double v) { return v * (1.0 + spec.rel_tol_dims * z.next_truncated(kTruncationSigma)); };

    // Fixed draw order: W, L, qwt width, qwt length, feed width, feed length, eps_r.
    const double w = dim(design.tlm.w_patch_m);
    const double l = dim(design.tlm.l_patch_m);
    const double qw = dim(design.qwt.width_m);
    const double ql = dim(design.qwt.length_m);
    const double fw = dim(design.feed.width_m);
    const double fl = dim(design.feed.length_m);
    Substrate sub = design.sub;
    sub.eps_r *= 1.0 + spec.rel_tol_eps * z.next_truncated(kTruncationSigma);

    SampleOutcome out;
    try
    {
        PatchDesign p = design;
        p.sub = sub;
        p.tlm = synthesis::solution_from_dimensions(design.target, sub, w, l);
        p.qwt = mstripline::line_from_width(qw, ql, sub);
        p.feed = mstripline::line_from_width(fw, fl, sub);
        out.f_res_hz = network::patch_resonance(p.tlm, sub);
        out.s11_at_fr_db = network::s11_db(network::reflection(p, design.target.f_r_hz));
        out.ok = std::isfinite(out.f_res_hz) && std::isfinite(out.s11_at_fr_db);
    }
    catch (const std::exception &)
    {
        out.ok = false;
    }
    return out;
}

namespace
{

SummaryStats stats_of(const std::vector<double> &v)
{
    SummaryStats s;
    const double x0 = v.front();
    numerics::CompensatedSum sum;
    s.min = s.max = x0;
    for (double x : v)
    {
        sum.add(x - x0);
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
    }
    const double n = static_cast<double>(v.size());
    const double shift = sum.value() / n;
    s.mean = x0 + shift;
    if (v.size() > 1)
    {
        numerics::CompensatedSum sq;
        for (double x : v)
        {
            const double d = (x - x0) - shift;
            sq.add(d * d);
        }
        s.std = std::sqrt(sq.value() / (n - 1.0));
    }
    return s;
}

} // namespace

ToleranceStats summarize(const std::vector<SampleOutcome> &outcomes, const ToleranceSpec &spec)
{
    ToleranceStats st;
    st.n_samples = outcomes.size();
    st.seed = spec.seed;
    st.generator = random::kGeneratorName;
    std::vector<double> f, s;
    for (const auto &o : outcomes)
    {
        if (!o.ok)
        {
            ++st.n_failed;
            continue;
        }
        f.push_back(o.f_res_hz);
        s.push_back(o.s11_at_fr_db);
    }
    if (f.empty())
        throw ModelError("tolerance: every sample failed to evaluate");
    st.f_res_hz = stats_of(f);
    st.s11_at_fr_db = stats_of(s);
    return st;
}

ToleranceStats tolerance_mc(const PatchDesign &design, const ToleranceSpec &spec)
{
    validate_tolerance_spec(spec);
    std::vector<SampleOutcome> out(spec.n_samples);
    const auto n = static_cast<std::ptrdiff_t>(spec.n_samples);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = evaluate_sample(design, spec, static_cast<std::size_t>(i));
    return summarize(out, spec);
}

} // namespace patchkit::tune

namespace patchkit::reference
{

tune::ToleranceStats tolerance_mc(const PatchDesign &design, const tune::ToleranceSpec &spec)
{
    tune::validate_tolerance_spec(spec);
    std::vector<tune::SampleOutcome> out(spec.n_samples);
    for (std::size_t i = 0; i < spec.n_samples; ++i)
        out[i] = tune::evaluate_sample(design, spec, i);
    return tune::summarize(out, spec);
}

} // namespace patchkit::reference
