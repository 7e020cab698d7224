#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace lounesto::cli {

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i", "1e-3+2.5e2i". Whitespace is
/// not allowed; returns nullopt on anything else.
std::optional<std::complex<double>> parse_complex(std::string_view text);

} // namespace lounesto::cli
