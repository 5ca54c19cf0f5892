// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string_view>

namespace repsym {

using Complex = std::complex<double>;

/// Parses "a+bi", "a-bi", "bi", "a" where a and b are rationals or decimals
/// ("0.1+0.5i", "1/3-2/5i", "0+1i").
Complex parse_complex(std::string_view text);

}  // namespace repsym
