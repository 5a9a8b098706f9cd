#include "shellrange/models.hpp"

#include <cmath>

#include "shellrange/errors.hpp"

namespace shellrange {

std::string to_string(Model m) {
  switch (m) {
    case Model::CKBP: return "ckbp";
    case Model::CKB: return "ckb";
    case Model::PH: return "ph";
  }
  return "?";
}

namespace {

// Slack for admitting boundary points that violate the model inequality by
// rounding only.
constexpr double kDomainSlack = 1e-9;

double defect3(Model m, double x, double y, double z) {
  switch (m) {
    case Model::CKBP: return z - x * x - y * y;
    case Model::CKB: return 1.0 - x * x - y * y - z * z;
    case Model::PH: return z;
  }
  return 0;
}

double defect2(Model m, double x, double z) {
  switch (m) {
    case Model::CKBP: return z - x * x;
    case Model::CKB: return 1.0 - x * x - z * z;
    case Model::PH: return z;
  }
  return 0;
}

}  // namespace

HPoint3::HPoint3(Model m, double x_, double y_, double z_) : model(m), x(x_), y(y_), z(z_) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
    throw InvalidInput("HPoint3: non-finite coordinates");
  const double scale = 1.0 + x * x + y * y + z * z;
  if (defect3(m, x, y, z) < -kDomainSlack * scale)
    throw InvalidInput("HPoint3: outside the closed " + to_string(m) + " model");
}

HPoint3 HPoint3::at_infinity(Model m) {
  HPoint3 p;
  if (m == Model::CKB) {
    p = HPoint3(m, 0, 0, 1);
  } else {
    p.model = m;
    p.infinity = true;
  }
  return p;
}

bool HPoint3::interior(double tol) const {
  if (infinity) return false;
  return defect3(model, x, y, z) > tol;
}

bool HPoint3::asymptotic(double tol) const { return !interior(tol); }

std::array<double, 4> HPoint3::projective() const {
  if (infinity) return {0, 0, 1, 0};
  if (model == Model::PH) {
    const HPoint3 q = convert(*this, Model::CKBP);
    return {q.x, q.y, q.z, 1};
  }
  return {x, y, z, 1};
}

HPoint2::HPoint2(Model m, double x_, double z_) : model(m), x(x_), z(z_) {
  if (!std::isfinite(x) || !std::isfinite(z))
    throw InvalidInput("HPoint2: non-finite coordinates");
  const double scale = 1.0 + x * x + z * z;
  if (defect2(m, x, z) < -kDomainSlack * scale)
    throw InvalidInput("HPoint2: outside the closed " + to_string(m) + " model");
}

HPoint2 HPoint2::at_infinity(Model m) {
  HPoint2 p;
  if (m == Model::CKB) {
    p = HPoint2(m, 0, 1);
  } else {
    p.model = m;
    p.infinity = true;
  }
  return p;
}

bool HPoint2::interior(double tol) const {
  if (infinity) return false;
  return defect2(model, x, z) > tol;
}

bool HPoint2::asymptotic(double tol) const { return !interior(tol); }

namespace {

// Conversions route through CKBP. The CKB <-> CKBP correspondence is
//   (x, y, z)_CKB   -> (x, y, 1+z)/(1-z)      in CKBP,
//   (x, y, z)_CKBP  -> (2x, 2y, z-1)/(z+1)    in CKB,
// with CKB (0, 0, 1) playing the point at infinity of CKBP. PH attaches by
// z_CKBP = x^2 + y^2 + z_PH^2.

HPoint3 to_ckbp(const HPoint3& p) {
  switch (p.model) {
    case Model::CKBP: return p;
    case Model::CKB: {
      if (1.0 - p.z <= kDomainSlack * (1.0 + std::abs(p.z)) && std::abs(p.x) < 1e-6 &&
          std::abs(p.y) < 1e-6)
        return HPoint3::at_infinity(Model::CKBP);
      const double s = 1.0 / (1.0 - p.z);
      return HPoint3(Model::CKBP, p.x * s, p.y * s, (1.0 + p.z) * s);
    }
    case Model::PH: {
      if (p.infinity) return HPoint3::at_infinity(Model::CKBP);
      return HPoint3(Model::CKBP, p.x, p.y, p.x * p.x + p.y * p.y + p.z * p.z);
    }
  }
  return p;
}

HPoint3 from_ckbp(const HPoint3& p, Model target) {
  switch (target) {
    case Model::CKBP: return p;
    case Model::CKB: {
      if (p.infinity) return HPoint3(Model::CKB, 0, 0, 1);
      const double s = 1.0 / (p.z + 1.0);
      return HPoint3(Model::CKB, 2.0 * p.x * s, 2.0 * p.y * s, (p.z - 1.0) * s);
    }
    case Model::PH: {
      if (p.infinity) return HPoint3::at_infinity(Model::PH);
      return HPoint3(Model::PH, p.x, p.y, std::sqrt(std::max(0.0, p.z - p.x * p.x - p.y * p.y)));
    }
  }
  return p;
}

HPoint2 to_ckbp2(const HPoint2& p) {
  switch (p.model) {
    case Model::CKBP: return p;
    case Model::CKB: {
      if (1.0 - p.z <= kDomainSlack * (1.0 + std::abs(p.z)) && std::abs(p.x) < 1e-6)
        return HPoint2::at_infinity(Model::CKBP);
      const double s = 1.0 / (1.0 - p.z);
      return HPoint2(Model::CKBP, p.x * s, (1.0 + p.z) * s);
    }
    case Model::PH: {
      if (p.infinity) return HPoint2::at_infinity(Model::CKBP);
      return HPoint2(Model::CKBP, p.x, p.x * p.x + p.z * p.z);
    }
  }
  return p;
}

HPoint2 from_ckbp2(const HPoint2& p, Model target) {
  switch (target) {
    case Model::CKBP: return p;
    case Model::CKB: {
      if (p.infinity) return HPoint2(Model::CKB, 0, 1);
      const double s = 1.0 / (p.z + 1.0);
      return HPoint2(Model::CKB, 2.0 * p.x * s, (p.z - 1.0) * s);
    }
    case Model::PH: {
      if (p.infinity) return HPoint2::at_infinity(Model::PH);
      return HPoint2(Model::PH, p.x, std::sqrt(std::max(0.0, p.z - p.x * p.x)));
    }
  }
  return p;
}

}  // namespace

HPoint3 convert(const HPoint3& p, Model target, bool allow_infinity) {
  const HPoint3 q = from_ckbp(to_ckbp(p), target);
  if (q.infinity && !allow_infinity)
    throw InfinityNotRepresentable("point at infinity has no finite " + to_string(target) +
                                   " coordinates");
  return q;
}

HPoint2 convert(const HPoint2& p, Model target, bool allow_infinity) {
  const HPoint2 q = from_ckbp2(to_ckbp2(p), target);
  if (q.infinity && !allow_infinity)
    throw InfinityNotRepresentable("point at infinity has no finite " + to_string(target) +
                                   " coordinates");
  return q;
}

HPoint3 iota(Cplx l, Model model) {
  switch (model) {
    case Model::CKBP: return HPoint3(Model::CKBP, l.real(), l.imag(), std::norm(l));
    case Model::CKB: {
      const double s = 1.0 / (1.0 + std::norm(l));
      return HPoint3(Model::CKB, 2.0 * l.real() * s, 2.0 * l.imag() * s, (std::norm(l) - 1.0) * s);
    }
    case Model::PH: return HPoint3(Model::PH, l.real(), l.imag(), 0.0);
  }
  return {};
}

HPoint2 iota2(Cplx l, Model model) {
  switch (model) {
    case Model::CKBP: return HPoint2(Model::CKBP, l.real(), std::norm(l));
    case Model::CKB: {
      const double s = 1.0 / (1.0 + std::norm(l));
      return HPoint2(Model::CKB, 2.0 * l.real() * s, (std::norm(l) - 1.0) * s);
    }
    case Model::PH: return HPoint2(Model::PH, l.real(), std::abs(l.imag()));
  }
  return {};
}

double safe_acosh(double t) {
  if (t < 1.0) {
    if (t > 1.0 - 1e-12) return 0.0;
    throw Error("acosh argument below 1");
  }
  return std::acosh(t);
}

XReal distance3(const HPoint3& p, const HPoint3& q) {
  const HPoint3 b = q.model == p.model ? q : convert(q, p.model);
  if (p.asymptotic() || b.asymptotic()) return XReal::inf();
  switch (p.model) {
    case Model::CKB: {
      const double num = 1.0 - p.x * b.x - p.y * b.y - p.z * b.z;
      const double den = std::sqrt((1.0 - p.x * p.x - p.y * p.y - p.z * p.z) *
                                   (1.0 - b.x * b.x - b.y * b.y - b.z * b.z));
      return XReal(safe_acosh(num / den));
    }
    case Model::CKBP: {
      const double num = 0.5 * p.z + 0.5 * b.z - p.x * b.x - p.y * b.y;
      const double den =
          std::sqrt((p.z - p.x * p.x - p.y * p.y) * (b.z - b.x * b.x - b.y * b.y));
      return XReal(safe_acosh(num / den));
    }
    case Model::PH: {
      const double dd = (p.x - b.x) * (p.x - b.x) + (p.y - b.y) * (p.y - b.y) +
                        (p.z - b.z) * (p.z - b.z);
      return XReal(safe_acosh(1.0 + dd / (2.0 * p.z * b.z)));
    }
  }
  return XReal(0.0);
}

XReal distance2(const HPoint2& p, const HPoint2& q) {
  const HPoint2 b = q.model == p.model ? q : convert(q, p.model);
  if (p.asymptotic() || b.asymptotic()) return XReal::inf();
  switch (p.model) {
    case Model::CKB: {
      const double num = 1.0 - p.x * b.x - p.z * b.z;
      const double den = std::sqrt((1.0 - p.x * p.x - p.z * p.z) * (1.0 - b.x * b.x - b.z * b.z));
      return XReal(safe_acosh(num / den));
    }
    case Model::CKBP: {
      const double num = 0.5 * p.z + 0.5 * b.z - p.x * b.x;
      const double den = std::sqrt((p.z - p.x * p.x) * (b.z - b.x * b.x));
      return XReal(safe_acosh(num / den));
    }
    case Model::PH: {
      const double dd = (p.x - b.x) * (p.x - b.x) + (p.z - b.z) * (p.z - b.z);
      return XReal(safe_acosh(1.0 + dd / (2.0 * p.z * b.z)));
    }
  }
  return XReal(0.0);
}

double horo_distance(const HPoint3& p) {
  const HPoint3 q = convert(p, Model::CKBP);
  if (q.infinity) throw Error("horo_distance: point at infinity");
  return -std::log(std::sqrt(q.z - q.x * q.x - q.y * q.y));
}

double horo_distance(const HPoint2& p) {
  const HPoint2 q = convert(p, Model::CKBP);
  if (q.infinity) throw Error("horo_distance: point at infinity");
  return -std::log(std::sqrt(q.z - q.x * q.x));
}

double norm_distance(const HPoint3& p) {
  const HPoint3 q = convert(p, Model::CKBP);
  if (q.infinity) throw Error("norm_distance: point at infinity");
  return -0.5 * std::log(q.z);
}

double busemann_ckb2(const HPoint2& asym, const HPoint2& p) {
  const HPoint2 a = convert(asym, Model::CKB);
  const HPoint2 q = convert(p, Model::CKB);
  return std::log((1.0 - a.x * q.x - a.z * q.z) / std::sqrt(1.0 - q.x * q.x - q.z * q.z));
}

double hline_distance2(const HPoint2& p, const HPoint2& a, const HPoint2& b) {
  const HPoint2 pa = convert(a, Model::CKB), pb = convert(b, Model::CKB);
  const HPoint2 q = convert(p, Model::CKB);
  // Hyperboloid picture with bilinear form diag(1, 1, -1): the line spanned
  // by the null lifts of a, b has spacelike Minkowski normal n = J (a x b),
  // and sinh d = |<X, n>_M| / sqrt(<n, n>_M). With e = a x b Euclidean this
  // reads sinh d = |X . e| / sqrt(e1^2 + e2^2 - e3^2).
  const double ax = pa.x, az = pa.z, bx = pb.x, bz = pb.z;
  const double e1 = az * 1.0 - 1.0 * bz;
  const double e2 = 1.0 * bx - ax * 1.0;
  const double e3 = ax * bz - az * bx;
  const double nn = e1 * e1 + e2 * e2 - e3 * e3;
  if (nn <= 0) throw Error("hline_distance2: endpoints do not span a line");
  const double w = std::sqrt(std::max(1e-300, 1.0 - q.x * q.x - q.z * q.z));
  const double inner = (q.x * e1 + q.z * e2 + e3) / w;
  return std::asinh(std::abs(inner) / std::sqrt(nn));
}

}  // namespace shellrange
