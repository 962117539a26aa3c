#include "thurston/marked_group.hpp"

#include <cmath>

namespace thurston {

namespace {

MoebiusMap g0() { return MoebiusMap::translation(1.0); }

struct RawMat {
  double a, b, c, d;
};

RawMat raw_mul(const RawMat& f, const RawMat& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c,
          f.c * g.b + f.d * g.d};
}

RawMat raw_of(const MoebiusMap& m) { return {m.a, m.b, m.c, m.d}; }

RawMat raw_inv(const MoebiusMap& m) { return {m.d, -m.b, -m.c, m.a}; }

}  // namespace

MoebiusMap evaluate(const MarkedGroup& g, const std::vector<int>& letters) {
  MoebiusMap out = MoebiusMap::identity();
  for (int l : letters) {
    const int idx = l > 0 ? l : -l;
    if (idx < 1 || idx > g.rank) {
      throw InvalidGroup("letter " + std::to_string(l) + " outside rank " +
                         std::to_string(g.rank));
    }
    const MoebiusMap& m = g.generators[static_cast<std::size_t>(idx - 1)];
    out = compose(out, l > 0 ? m : inverse(m));
  }
  return out;
}

MoebiusMap evaluate(const MarkedGroup& g, const Word& w) { return evaluate(g, w.letters()); }

double commutator_trace(const MoebiusMap& A, const MoebiusMap& B) {
  const RawMat k = raw_mul(raw_of(A), raw_mul(raw_of(B), raw_mul(raw_inv(A), raw_inv(B))));
  return k.a + k.d;
}

double jorgensen_lhs(const MoebiusMap& A, const MoebiusMap& B) {
  const double trA = A.trace();  // squared below, so the lift is irrelevant
  return std::fabs(trA * trA - 4.0) + std::fabs(commutator_trace(A, B) - 2.0);
}

void validate(const MarkedGroup& g) {
  if (g.rank < 2) throw InvalidGroup("rank must be at least 2, got " + std::to_string(g.rank));
  if (static_cast<int>(g.generators.size()) != g.rank) {
    throw InvalidGroup("expected " + std::to_string(g.rank) + " generators, got " +
                       std::to_string(g.generators.size()));
  }
  if (g.peripherals.empty()) throw InvalidGroup("at least one peripheral word is required");

  for (std::size_t i = 0; i < g.peripherals.size(); ++i) {
    const MoebiusMap m = evaluate(g, g.peripherals[i]);
    const IsometryClass cls = classify(m);
    if (cls.kind != MapKind::Parabolic) {
      throw InvalidGroup("peripheral " + std::to_string(i) + " (" + g.peripherals[i].str() +
                         ") evaluates to a " + to_string(cls.kind) + " map");
    }
  }

  const MoebiusMap first = evaluate(g, g.peripherals[0]);
  if (!approx_equal(first, g0(), 1e-9)) {
    throw InvalidGroup("first peripheral does not evaluate to z -> z + 1; run normalize");
  }

  const double slack = tolerances().jorg;
  for (int i = 0; i < g.rank; ++i) {
    for (int j = 0; j < g.rank; ++j) {
      if (i == j) continue;
      const double lhs = jorgensen_lhs(g.generators[i], g.generators[j]);
      if (lhs < 1.0 - slack) {
        throw IndiscreteSuspected("Jorgensen screen failed for generator pair (" +
                                  std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                  "): " + std::to_string(lhs) + " < 1");
      }
    }
  }
}

MarkedGroup normalize(const MarkedGroup& g) {
  if (g.peripherals.empty()) throw InvalidGroup("no peripheral words");
  MarkedGroup out = g;

  MoebiusMap p = evaluate(out, out.peripherals[0]);
  IsometryClass cls = classify(p);
  if (cls.kind != MapKind::Parabolic) {
    throw NotParabolic("first peripheral evaluates to a " + std::string(to_string(cls.kind)) +
                       " map");
  }

  // Move the fixed point to infinity; U = -1/(z - P) for finite P.
  MoebiusMap u = MoebiusMap::identity();
  if (!cls.fixed.is_infinity()) {
    u = MoebiusMap::from_entries(0.0, -1.0, 1.0, -cls.fixed.value());
  }
  MoebiusMap at_inf = compose(u, compose(p, inverse(u)));
  double omega = at_inf.b;  // tr = +2 lift, so the map is z -> z + b

  // The horocyclic direction at a fixed point cannot be reversed inside
  // PSL(2,R); a negative translation means the inverse word is the one
  // conjugate to z -> z + 1.
  if (omega < 0.0) {
    out.peripherals[0] = out.peripherals[0].inverse();
    p = evaluate(out, out.peripherals[0]);
    at_inf = compose(u, compose(p, inverse(u)));
    omega = at_inf.b;
  }
  if (!(omega > 0.0)) throw NotParabolic("degenerate peripheral translation");

  const MoebiusMap t = compose(MoebiusMap::scaling(1.0 / omega), u);
  for (MoebiusMap& m : out.generators) m = compose(t, compose(m, inverse(t)));

  // One exact rescale so the peripheral's translation comes out bit-equal
  // to 1 when the residual c entry is below the classification band.
  const MoebiusMap res = evaluate(out, out.peripherals[0]);
  if (std::fabs(res.c) <= tolerances().cls && res.b > 0.0 && res.b != 1.0) {
    const MoebiusMap s = MoebiusMap::scaling(1.0 / res.b);
    for (MoebiusMap& m : out.generators) m = compose(s, compose(m, inverse(s)));
  }
  return out;
}

MarkedGroup punctured_torus(double x, double y, RootChoice root) {
  if (!(x > 2.0) || !(y > 2.0)) {
    throw InvalidGroup("trace coordinates must exceed 2, got x=" + std::to_string(x) +
                       " y=" + std::to_string(y));
  }
  const double disc = x * x * y * y - 4.0 * (x * x + y * y);
  if (disc < 0.0) {
    throw NonRealRoot("discriminant " + std::to_string(disc) +
                      " is negative; no real trace for AB");
  }
  const double z = (x * y + (root == RootChoice::Plus ? 1.0 : -1.0) * std::sqrt(disc)) / 2.0;

  // tr A = x, tr B = y, tr AB = z with xi + 1/xi = -z.
  const double xi = (-z + std::sqrt(z * z - 4.0)) / 2.0;
  MarkedGroup g;
  g.rank = 2;
  g.generators = {MoebiusMap::from_entries(x, 1.0, -1.0, 0.0),
                  MoebiusMap::from_entries(0.0, xi, -1.0 / xi, y)};
  // The commutator taken as B A B^-1 A^-1 translates in the positive
  // horocyclic direction for every x, y > 2, on both root branches.
  g.peripherals = {Word({2, 1, -2, -1})};
  g.label = "torus(" + std::to_string(x) + "," + std::to_string(y) + "," +
            (root == RootChoice::Plus ? "plus" : "minus") + ")";

  const double trk = commutator_trace(g.generators[0], g.generators[1]);
  if (std::fabs(trk + 2.0) > 1e-6) {
    throw InvalidGroup("constructed commutator trace " + std::to_string(trk) + " is not -2");
  }
  MarkedGroup out = normalize(g);
  validate(out);
  return out;
}

MarkedGroup thrice_punctured_sphere() {
  MarkedGroup g;
  g.rank = 2;
  g.generators = {MoebiusMap::from_entries(1.0, 1.0, 0.0, 1.0),
                  MoebiusMap::from_entries(1.0, 0.0, 4.0, 1.0)};
  g.peripherals = {Word({1}), Word({2}), Word({1, -2})};
  g.label = "thrice-punctured sphere";
  validate(g);
  return g;
}

MarkedIsomorphism make_isomorphism(MarkedGroup source, MarkedGroup target) {
  if (source.rank != target.rank) {
    throw InvalidMarking("rank mismatch: " + std::to_string(source.rank) + " vs " +
                         std::to_string(target.rank));
  }
  if (source.peripherals.size() != target.peripherals.size()) {
    throw InvalidMarking("peripheral count mismatch");
  }
  for (std::size_t i = 0; i < source.peripherals.size(); ++i) {
    if (source.peripherals[i] != target.peripherals[i]) {
      throw InvalidMarking("peripheral word " + std::to_string(i) +
                           " differs between source and target");
    }
  }
  for (const MarkedGroup* g : {&source, &target}) {
    if (!approx_equal(evaluate(*g, g->peripherals[0]), g0(), 1e-9)) {
      throw InvalidMarking("marking does not fix z -> z + 1; normalize both groups");
    }
  }
  return MarkedIsomorphism{std::move(source), std::move(target)};
}

MarkedIsomorphism identity_isomorphism(const MarkedGroup& g) {
  return MarkedIsomorphism{g, g};
}

}  // namespace thurston
