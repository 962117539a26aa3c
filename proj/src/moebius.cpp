#include "thurston/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace thurston {

Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

std::string ExtendedReal::str() const {
  if (inf_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << v_;
  return os.str();
}

bool approx_equal(const ExtendedReal& a, const ExtendedReal& b, double tol) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  return std::fabs(a.value() - b.value()) <= tol;
}

bool circle_less(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return a.value() < b.value();
}

double circle_angle(const ExtendedReal& x) {
  constexpr double pi = 3.14159265358979323846;
  if (x.is_infinity()) return pi;
  return 2.0 * std::atan(x.value());
}

namespace {

// Canonical lift: trace > 0, with tr = 0 ties broken by c > 0, then b > 0.
void canonical_sign(double& a, double& b, double& c, double& d) {
  const double tr = a + d;
  bool flip = false;
  if (tr < 0.0) {
    flip = true;
  } else if (tr == 0.0) {
    if (c < 0.0 || (c == 0.0 && b < 0.0)) flip = true;
  }
  if (flip) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
}

MoebiusMap renormalized(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!std::isfinite(det) || det <= 0.0) {
    throw NonUnimodular("matrix determinant must be positive and finite, got " +
                        std::to_string(det));
  }
  const double s = std::sqrt(det);
  a /= s;
  b /= s;
  c /= s;
  d /= s;
  canonical_sign(a, b, c, d);
  return MoebiusMap{a, b, c, d};
}

}  // namespace

MoebiusMap MoebiusMap::from_entries(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw NonUnimodular("matrix entries must be finite");
  }
  return renormalized(a, b, c, d);
}

MoebiusMap MoebiusMap::translation(double t) { return renormalized(1.0, t, 0.0, 1.0); }

MoebiusMap MoebiusMap::scaling(double lambda) {
  if (!(lambda > 0.0)) throw NonUnimodular("scaling factor must be positive");
  const double s = std::sqrt(lambda);
  return renormalized(s, 0.0, 0.0, 1.0 / s);
}

MoebiusMap MoebiusMap::parabolic_with(double omega, const ExtendedReal& fixed_point) {
  if (omega == 0.0) throw NotParabolic("translation vector must be nonzero");
  if (fixed_point.is_infinity()) return renormalized(1.0, omega, 0.0, 1.0);
  // Normal form with 1/(g(z)-P) = 1/(z-P) + omega:
  //   [[1 + omega P, -omega P^2], [omega, 1 - omega P]]
  const double p = fixed_point.value();
  return renormalized(1.0 + omega * p, -omega * p * p, omega, 1.0 - omega * p);
}

MoebiusMap MoebiusMap::hyperbolic_with(double lambda, const ExtendedReal& attracting,
                                       const ExtendedReal& repelling) {
  if (!(lambda > 1.0)) throw NotHyperbolic("multiplier must exceed 1");
  if (attracting == repelling) throw NotHyperbolic("fixed points must be distinct");
  // Conjugate z -> lambda z (attracting inf, repelling 0) by V with
  // V(inf) = attracting, V(0) = repelling, det V > 0.
  MoebiusMap v;
  if (attracting.is_infinity()) {
    v = renormalized(1.0, repelling.value(), 0.0, 1.0);
  } else if (repelling.is_infinity()) {
    v = renormalized(attracting.value(), -1.0, 1.0, 0.0);
  } else {
    const double p = attracting.value(), n = repelling.value();
    if (p - n > 0.0) {
      v = renormalized(p, n, 1.0, 1.0);
    } else {
      v = renormalized(p, -n, 1.0, -1.0);
    }
  }
  return compose(v, compose(scaling(lambda), inverse(v)));
}

std::string MoebiusMap::str() const {
  std::ostringstream os;
  os.precision(17);
  os << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
  return os.str();
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
  return renormalized(f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                      f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d);
}

MoebiusMap inverse(const MoebiusMap& g) { return renormalized(g.d, -g.b, -g.c, g.a); }

MoebiusMap conjugate(const MoebiusMap& g, const MoebiusMap& h) {
  return compose(inverse(h), compose(g, h));
}

ExtendedReal apply(const MoebiusMap& g, const ExtendedReal& z) {
  // Homogeneous coordinates: (x : y) -> (a x + b y : c x + d y). The image
  // is infinity when the denominator vanishes relative to its own scale.
  double x, y;
  if (z.is_infinity()) {
    x = 1.0;
    y = 0.0;
  } else {
    x = z.value();
    y = 1.0;
  }
  const double num = g.a * x + g.b * y;
  const double den = g.c * x + g.d * y;
  const double den_scale = std::fabs(g.c * x) + std::fabs(g.d * y);
  if (std::fabs(den) <= 1e-13 * den_scale || den == 0.0) return ExtendedReal::infinity();
  const double w = num / den;
  if (!std::isfinite(w)) return ExtendedReal::infinity();
  return ExtendedReal(w);
}

bool approx_equal(const MoebiusMap& f, const MoebiusMap& g, double tol) {
  return std::fabs(f.a - g.a) <= tol && std::fabs(f.b - g.b) <= tol &&
         std::fabs(f.c - g.c) <= tol && std::fabs(f.d - g.d) <= tol;
}

const char* to_string(MapKind k) {
  switch (k) {
    case MapKind::Identity: return "identity";
    case MapKind::Elliptic: return "elliptic";
    case MapKind::Parabolic: return "parabolic";
    case MapKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

double multiplier(const MoebiusMap& g) {
  const double tr = std::fabs(g.trace());
  if (!(tr > 2.0)) throw NotHyperbolic("trace " + std::to_string(tr) + " is not > 2");
  const double half = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;  // lambda^(1/2)
  return half * half;
}

namespace {

// Signed translation vector of a parabolic whose canonical lift is given.
// For the tr = +2 lift with c != 0 the normal form gives omega = c; the
// defining relation evaluated at z = P + 1 settles the sign regardless.
double parabolic_omega_finite(const MoebiusMap& g, double p) {
  const ExtendedReal img = apply(g, ExtendedReal(p + 1.0));
  const double lhs = img.is_infinity() ? 0.0 : 1.0 / (img.value() - p);
  const double base = 1.0;  // 1/((P+1) - P)
  const double r_plus = std::fabs(lhs - (base + g.c));
  const double r_minus = std::fabs(lhs - (base - g.c));
  return r_plus <= r_minus ? g.c : -g.c;
}

}  // namespace

double translation_vector(const MoebiusMap& g) {
  const Tolerances& tol = tolerances();
  const double tr = g.trace();
  if (std::fabs(std::fabs(tr) - 2.0) > tol.cls) {
    throw NotParabolic("trace " + std::to_string(tr) + " outside the parabolic band");
  }
  const bool near_identity = std::fabs(g.a - 1.0) <= tol.cls && std::fabs(g.d - 1.0) <= tol.cls &&
                             std::fabs(g.b) <= tol.cls && std::fabs(g.c) <= tol.cls;
  if (near_identity) throw NotParabolic("identity has no translation vector");
  if (std::fabs(g.c) > tol.cls) {
    const double p = (g.a - g.d) / (2.0 * g.c);
    return parabolic_omega_finite(g, p);
  }
  if (std::fabs(g.b) > tol.cls) return g.b;  // fixed point at infinity, z -> z + b
  throw ClassifyAmbiguous("no discernible parabolic structure near the identity: " + g.str());
}

IsometryClass classify(const MoebiusMap& g) {
  const Tolerances& tol = tolerances();
  IsometryClass out;
  const double tr = g.trace();

  const bool near_identity = std::fabs(g.a - 1.0) <= tol.cls && std::fabs(g.d - 1.0) <= tol.cls &&
                             std::fabs(g.b) <= tol.cls && std::fabs(g.c) <= tol.cls;
  if (near_identity) {
    out.kind = MapKind::Identity;
    return out;
  }

  if (tr > 2.0 + tol.cls) {
    out.kind = MapKind::Hyperbolic;
    out.lambda = multiplier(g);
    // Fixed points solve c z^2 + (d - a) z - b = 0; the discriminant is
    // tr^2 - 4. Attracting iff |g'(z)| = 1/|c z + d|^2 < 1.
    const double disc = std::sqrt(tr * tr - 4.0);
    if (g.c == 0.0) {
      const ExtendedReal at_inf = ExtendedReal::infinity();
      const ExtendedReal finite(g.b / (g.d - g.a));
      if (std::fabs(g.a) > std::fabs(g.d)) {
        out.attracting = at_inf;
        out.repelling = finite;
      } else {
        out.attracting = finite;
        out.repelling = at_inf;
      }
    } else {
      const double bq = g.d - g.a;
      const double q = -(bq + std::copysign(disc, bq)) / 2.0;
      const double r1 = q / g.c;
      const double r2 = -g.b / q;
      // |c z + d| is sqrt(lambda) at the attracting root, 1/sqrt(lambda)
      // at the repelling one (their product is det = 1).
      const double m1 = std::fabs(g.c * r1 + g.d);
      if (m1 > 1.0) {
        out.attracting = ExtendedReal(r1);
        out.repelling = ExtendedReal(r2);
      } else {
        out.attracting = ExtendedReal(r2);
        out.repelling = ExtendedReal(r1);
      }
    }
    return out;
  }

  if (tr < 2.0 - tol.cls) {
    out.kind = MapKind::Elliptic;
    return out;
  }

  out.kind = MapKind::Parabolic;
  out.omega = translation_vector(g);  // may throw ClassifyAmbiguous
  if (std::fabs(g.c) > tol.cls) {
    out.fixed = ExtendedReal((g.a - g.d) / (2.0 * g.c));
  } else {
    out.fixed = ExtendedReal::infinity();
  }
  return out;
}

double cross_ratio(const ExtendedReal& p, const ExtendedReal& q, const ExtendedReal& r,
                   const ExtendedReal& s) {
  const double tol = tolerances().pt;
  const ExtendedReal pts[4] = {p, q, r, s};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (approx_equal(pts[i], pts[j], tol)) {
        throw DegenerateTuple("coincident points in cross-ratio: (" + p.str() + ", " + q.str() +
                              ", " + r.str() + ", " + s.str() + ")");
      }
    }
  }
  if (p.is_infinity()) return (q.value() - s.value()) / (q.value() - r.value());
  if (q.is_infinity()) return (p.value() - r.value()) / (p.value() - s.value());
  if (r.is_infinity()) return (q.value() - s.value()) / (p.value() - s.value());
  if (s.is_infinity()) return (p.value() - r.value()) / (q.value() - r.value());
  return (p.value() - r.value()) / (p.value() - s.value()) * (q.value() - s.value()) /
         (q.value() - r.value());
}

}  // namespace thurston
