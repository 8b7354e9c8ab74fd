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

#include "patchkit/format.hpp"

#include "patchkit/core.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace patchkit::fmt
{

namespace
{

bool non_finite(double x, std::string &out)
{
    if (std::isnan(x))
        out = "nan";
    else if (std::isinf(x))
        out = x > 0 ? "inf" : "-inf";
    else
        return false;
    return true;
}

std::string to_chars_fmt(double x, std::chars_format f, int precision)
{
    std::array<char, 512> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, f, precision);
    if (res.ec != std::errc())
        throw std::runtime_error("number formatting failed");
    std::string s(buf.data(), res.ptr);
    // Strip the sign from a value that rounds to zero.
    if (!s.empty() && s[0] == '-' && s.find_first_not_of("-0.e+") == std::string::npos)
        s.erase(0, 1);
    return s;
}

} // namespace

std::string trimmed(double x, int max_frac)
{
    std::string s;
    if (non_finite(x, s))
        return s;
    s = to_chars_fmt(x, std::chars_format::fixed, max_frac);
    const auto dot = s.find('.');
    if (dot == std::string::npos)
        return s + ".0";
    auto last = s.find_last_not_of('0');
    if (last == dot)
        ++last;
    s.erase(last + 1);
    return s;
}

std::string fixed(double x, int decimals)
{
    std::string s;
    if (non_finite(x, s))
        return s;
    return to_chars_fmt(x, std::chars_format::fixed, decimals);
}

std::string scientific(double x, int decimals)
{
    std::string s;
    if (non_finite(x, s))
        return s;
    return to_chars_fmt(x, std::chars_format::scientific, decimals);
}

std::string shortest(double x)
{
    std::string s;
    if (non_finite(x, s))
        return s;
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (res.ec != std::errc())
        throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), res.ptr);
}

double parse_double(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos)
        throw InvalidArgument("empty number");
    const char *first = s.data() + b;
    const char *last = s.data() + e + 1;
    if (*first == '+')
        ++first;
    double v = 0.0;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw InvalidArgument("malformed number '" + s + "'");
    return v;
}

} // namespace patchkit::fmt
