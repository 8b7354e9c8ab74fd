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

#include "patchkit/network.hpp"

#include <cmath>
#include <limits>

namespace patchkit
{

namespace
{

using network::SweepResult;

SweepResult allocate(const BandSpec &band)
{
    SweepResult r;
    r.freqs_hz = network::band_frequencies(band);
    const std::size_t n = r.freqs_hz.size();
    r.gamma.assign(n, Complex(0.0, 0.0));
    r.s11_db.assign(n, 0.0);
    r.vswr.assign(n, 0.0);
    r.valid.assign(n, 0);
    return r;
}

void evaluate_point(const PatchDesign &d, SweepResult &r, std::size_t i)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try
    {
        const Complex g = network::reflection(d, r.freqs_hz[i]);
        if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
            throw ModelError("non-finite reflection");
        r.gamma[i] = g;
        r.s11_db[i] = network::s11_db(g);
        r.vswr[i] = network::vswr(g);
        r.valid[i] = 1;
    }
    catch (const std::exception &)
    {
        r.gamma[i] = Complex(nan, nan);
        r.s11_db[i] = nan;
        r.vswr[i] = nan;
        r.valid[i] = 0;
    }
}

} // namespace

namespace network
{

SweepResult evaluate_points(const PatchDesign &d, const BandSpec &band)
{
    SweepResult r = allocate(band);
    const auto n = static_cast<std::ptrdiff_t>(r.freqs_hz.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        evaluate_point(d, r, static_cast<std::size_t>(i));
    return r;
}

SweepResult sweep(const PatchDesign &d, const BandSpec &band, double threshold_db)
{
    SweepResult r = evaluate_points(d, band);
    const std::size_t n = r.freqs_hz.size();
    std::vector<double> mag(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
    {
        mag[i] = std::abs(r.gamma[i]);
        any = any || r.valid[i];
    }
    if (!any)
        throw ModelError("sweep: no valid points");

    r.f_res_hz = find_resonance(r.freqs_hz, mag, r.valid, [&d](double f) { return std::abs(reflection(d, f)); });
    r.s11_at_res_db = s11_db(reflection(d, r.f_res_hz));
    r.threshold_db = threshold_db;
    r.band = bandwidth(r.freqs_hz, r.s11_db, r.valid, r.f_res_hz, threshold_db);
    return r;
}

} // namespace network

namespace reference
{

network::SweepResult evaluate_points(const PatchDesign &d, const BandSpec &band)
{
    network::SweepResult r = allocate(band);
    for (std::size_t i = 0; i < r.freqs_hz.size(); ++i)
        evaluate_point(d, r, i);
    return r;
}

} // namespace reference
} // namespace patchkit
