// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/complex.hpp"

#include <cctype>
#include <string>

#include "repsym/error.hpp"
#include "repsym/rational.hpp"

namespace repsym {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
    if (s.empty()) throw UsageError("malformed complex value '" + std::string(whole) + "'");
    if (s.find('/') != std::string_view::npos) return Rational::parse(s).to_double();
    std::string buf(s);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(buf, &used);
    } catch (const std::exception&) {
        throw UsageError("malformed complex value '" + std::string(whole) + "'");
    }
    if (used != buf.size()) throw UsageError("malformed complex value '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw UsageError("empty complex value");
    if (s.back() != 'i') return {parse_real(s, text), 0.0};
    s.remove_suffix(1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
    std::string_view im = split == std::string_view::npos ? s : s.substr(split);
    double imag;
    if (im == "+" || im.empty()) imag = 1.0;
    else if (im == "-") imag = -1.0;
    else imag = parse_real(im.front() == '+' ? im.substr(1) : im, text);
    double real = re.empty() ? 0.0 : parse_real(re, text);
    return {real, imag};
}

}  // namespace repsym
