#pragma once

#include <string>

#include "thurston/errors.hpp"

namespace thurston {

// All tolerance knobs live here; the CLI overrides them once at startup
// (--tol KEY=VAL), after which everything downstream is pure.
struct Tolerances {
  double det = 1e-9;   // determinant residual accepted on input matrices
  double cls = 1e-9;   // half-width of the |tr| = 2 classification band
  double pt = 1e-9;    // coincidence of boundary points
  double jorg = 1e-9;  // slack in the Jorgensen discreteness screen
  double cr = 1e-6;    // minimum |log cross-ratio| used as a denominator
};

Tolerances& tolerances();

// A point of the circle R u {inf} bounding the upper half-plane.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : v_(v) {}
  static constexpr ExtendedReal infinity() {
    ExtendedReal p;
    p.inf_ = true;
    return p;
  }

  constexpr bool is_infinity() const { return inf_; }
  constexpr double value() const { return v_; }  // meaningless if infinite

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.v_ == b.v_;
  }

  std::string str() const;

 private:
  double v_ = 0.0;
  bool inf_ = false;
};

bool approx_equal(const ExtendedReal& a, const ExtendedReal& b, double tol);

// Finite values in ascending order, infinity last. Total order used for
// sorting boundary data.
bool circle_less(const ExtendedReal& a, const ExtendedReal& b);

// Angle coordinate of the circle, 2*atan(x) with infinity -> pi. Increasing
// angle is the counter-clockwise direction on the boundary of H.
double circle_angle(const ExtendedReal& x);

// z -> (a z + b) / (c z + d), stored with det = 1 and the trace-positive
// lift (ties at tr = 0 broken by c > 0, then b > 0). The identity is
// a = d = 1, b = c = 0.
struct MoebiusMap {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static MoebiusMap identity() { return {}; }
  // Renormalizes an arbitrary positive-determinant matrix; throws
  // NonUnimodular on det <= 0 or non-finite entries.
  static MoebiusMap from_entries(double a, double b, double c, double d);
  static MoebiusMap translation(double t);            // z -> z + t
  static MoebiusMap scaling(double lambda);           // z -> lambda z, lambda > 0
  // The parabolic with translation vector omega fixing the given point.
  static MoebiusMap parabolic_with(double omega, const ExtendedReal& fixed_point);
  // The hyperbolic with multiplier lambda > 1 and the given (distinct)
  // attracting/repelling fixed points.
  static MoebiusMap hyperbolic_with(double lambda, const ExtendedReal& attracting,
                                    const ExtendedReal& repelling);

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  std::string str() const;
};

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);  // z -> f(g(z))
MoebiusMap inverse(const MoebiusMap& g);
MoebiusMap conjugate(const MoebiusMap& g, const MoebiusMap& h);  // h^-1 o g o h
ExtendedReal apply(const MoebiusMap& g, const ExtendedReal& z);
bool approx_equal(const MoebiusMap& f, const MoebiusMap& g, double tol);

enum class MapKind { Identity, Elliptic, Parabolic, Hyperbolic };

const char* to_string(MapKind k);

struct IsometryClass {
  MapKind kind = MapKind::Identity;
  double lambda = 1.0;     // multiplier; > 1 iff hyperbolic, else 1
  double omega = 0.0;      // translation vector, parabolic only
  ExtendedReal attracting; // hyperbolic only
  ExtendedReal repelling;  // hyperbolic only
  ExtendedReal fixed;      // parabolic only
};

// Trace-band classification. Throws ClassifyAmbiguous when the input sits
// in the |tr| ~ 2 band but carries no discernible parabolic structure.
IsometryClass classify(const MoebiusMap& g);

// Signed translation vector of a parabolic, defined by
//   1/(g(z) - P) = 1/(z - P) + omega        (finite fixed point P)
// and omega = b for the fixed point at infinity. The sign is verified
// against the defining relation at z = P + 1.
double translation_vector(const MoebiusMap& g);

// Multiplier of a hyperbolic map, from tr = lambda^1/2 + lambda^-1/2.
double multiplier(const MoebiusMap& g);

// (p,q,r,s) = (p-r)/(p-s) * (q-s)/(q-r); one infinite argument drops the
// two factors containing it. Throws DegenerateTuple on coincident points.
double cross_ratio(const ExtendedReal& p, const ExtendedReal& q,
                   const ExtendedReal& r, const ExtendedReal& s);

}  // namespace thurston
