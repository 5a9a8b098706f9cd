#include "shellrange/mat2.hpp"

#include <cmath>

#include "shellrange/errors.hpp"

namespace shellrange {

Mat2C::Mat2C(Cplx m11, Cplx m12, Cplx m21, Cplx m22)
    : a11(m11), a12(m12), a21(m21), a22(m22) {
  if (!is_finite(m11) || !is_finite(m12) || !is_finite(m21) || !is_finite(m22))
    throw InvalidInput("Mat2C: non-finite entry");
}

Mat2C Mat2C::adjoint() const {
  return Mat2C(std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22));
}

double Mat2C::gram_trace() const {
  return std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22);
}

double Mat2C::frobenius_norm() const { return std::sqrt(gram_trace()); }

Mat2C Mat2C::inverse() const {
  const Cplx d = det();
  if (d == Cplx(0, 0)) throw SingularResolvent("Mat2C::inverse: singular matrix");
  const Cplx s = 1.0 / d;
  return Mat2C(s * a22, -s * a12, -s * a21, s * a11);
}

bool Mat2C::is_normal(double tol) const {
  const Mat2C c = adjoint() * (*this) - (*this) * adjoint();
  return c.frobenius_norm() <= tol * std::max(1.0, gram_trace());
}

Mat2C parse_mat2(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw InvalidInput("matrix literal must be bracketed: " + std::string(text));
  s = s.substr(1, s.size() - 2);

  const size_t semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
    throw InvalidInput("matrix literal needs exactly one ';': " + std::string(text));
  const std::string row1 = s.substr(0, semi), row2 = s.substr(semi + 1);

  auto split_row = [&](const std::string& row) {
    // The separating comma is the one at top level: entries themselves never
    // contain commas, so any comma splits the row.
    const size_t comma = row.find(',');
    if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos)
      throw InvalidInput("matrix row needs exactly one ',': " + std::string(text));
    return std::pair<std::string, std::string>(row.substr(0, comma), row.substr(comma + 1));
  };

  auto [e11, e12] = split_row(row1);
  auto [e21, e22] = split_row(row2);
  return Mat2C(parse_complex(e11), parse_complex(e12), parse_complex(e21), parse_complex(e22));
}

std::string format_mat2(const Mat2C& a) {
  return "[" + format_complex(a.a11) + "," + format_complex(a.a12) + ";" +
         format_complex(a.a21) + "," + format_complex(a.a22) + "]";
}

}  // namespace shellrange
