#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace shellrange {

using Cplx = std::complex<double>;

/// Half-sided sign: +1 on [0, inf), -1 on (-inf, 0).
inline double half_sgn(double x) { return x >= 0.0 ? 1.0 : -1.0; }

/// Square root cut along the half-line just below the negative reals:
///   sqrt(z) = sqrt((|z|+Re z)/2) + i * half_sgn(Im z) * sqrt((|z|-Re z)/2).
/// Differs from std::sqrt only in the treatment of signed zero imaginary
/// parts; the branch on the cut itself is the upper one.
Cplx principal_sqrt(Cplx z);

bool is_finite(Cplx z);

/// Parses a complex literal: "1.5+2i", "-3i", "2", "i", "1e-3-2.5e2i".
/// Throws InvalidInput on malformed text.
Cplx parse_complex(std::string_view text);

/// Shortest round-trip decimal form, "a+bi" / "a-bi" / "a" / "bi".
std::string format_complex(Cplx z);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace shellrange
