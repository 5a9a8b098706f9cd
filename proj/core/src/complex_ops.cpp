#include "shellrange/complex_ops.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "shellrange/errors.hpp"

namespace shellrange {

Cplx principal_sqrt(Cplx z) {
  const double m = std::abs(z);
  const double re = std::sqrt(std::max(0.0, (m + z.real()) / 2.0));
  const double im = half_sgn(z.imag()) * std::sqrt(std::max(0.0, (m - z.real()) / 2.0));
  return {re, im};
}

bool is_finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace {

// Scans one signed float starting at pos. Returns false if none is present.
bool scan_number(std::string_view s, size_t& pos, double& out) {
  const char* begin = s.data() + pos;
  const char* end = s.data() + s.size();
  if (begin >= end) return false;
  auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{}) return false;
  pos = static_cast<size_t>(res.ptr - s.data());
  return true;
}

}  // namespace

Cplx parse_complex(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInput("empty complex literal");

  double re = 0.0, im = 0.0;
  size_t pos = 0;
  bool have_re = false, have_im = false;

  auto take_term = [&](void) {
    double sign = 1.0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1.0;
      ++pos;
    }
    double v;
    size_t num_end = pos;
    bool has_num = scan_number(s, num_end, v);
    if (has_num && num_end < s.size() && (s[num_end] == 'i' || s[num_end] == 'I')) {
      im += sign * v;
      pos = num_end + 1;
      have_im = true;
    } else if (has_num) {
      if (have_re) throw InvalidInput("complex literal has two real parts: " + s);
      re += sign * v;
      pos = num_end;
      have_re = true;
    } else if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
      im += sign;
      ++pos;
      have_im = true;
    } else {
      throw InvalidInput("malformed complex literal: " + s);
    }
  };

  take_term();
  if (pos < s.size()) take_term();
  if (pos != s.size()) throw InvalidInput("trailing characters in complex literal: " + s);
  if (!have_re && !have_im) throw InvalidInput("malformed complex literal: " + s);

  Cplx z(re, im);
  if (!is_finite(z)) throw InvalidInput("non-finite complex literal: " + s);
  return z;
}

std::string format_double(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_complex(Cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string im = format_double(z.imag()) + "i";
  if (z.real() == 0.0) return im;
  if (z.imag() > 0.0) return format_double(z.real()) + "+" + im;
  return format_double(z.real()) + im;
}

}  // namespace shellrange
