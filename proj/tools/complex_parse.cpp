#include "complex_parse.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace lounesto::cli {

namespace {

std::optional<double> parse_real(std::string_view s) {
  if (s.empty())
    return std::nullopt;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.front() == '+' || s.front() == '-')
    return std::nullopt;
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    return std::nullopt;
  return negative ? -v : v;
}

/// Coefficient of i: "" or "+" -> 1, "-" -> -1.
std::optional<double> parse_imag_coefficient(std::string_view s) {
  if (s.empty() || s == "+")
    return 1.0;
  if (s == "-")
    return -1.0;
  return parse_real(s);
}

} // namespace

std::optional<std::complex<double>> parse_complex(std::string_view text) {
  if (text.empty())
    return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_real(text);
    if (!re)
      return std::nullopt;
    return std::complex<double>(*re, 0.0);
  }
  text.remove_suffix(1);

  // The split point is the last sign that is neither leading nor part of an
  // exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    const char c = text[k];
    if ((c == '+' || c == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = parse_imag_coefficient(text);
    if (!im)
      return std::nullopt;
    return std::complex<double>(0.0, *im);
  }
  const auto re = parse_real(text.substr(0, split));
  const auto im = parse_imag_coefficient(text.substr(split));
  if (!re || !im)
    return std::nullopt;
  return std::complex<double>(*re, *im);
}

} // namespace lounesto::cli
