#pragma once

#include <string>
#include <vector>

#include "thurston/moebius.hpp"
#include "thurston/word.hpp"

namespace thurston {

// A marked Fuchsian representation of a punctured surface: generator
// matrices for a free group, plus the peripheral (cusp) words. After
// normalize() the first peripheral evaluates to z -> z + 1.
struct MarkedGroup {
  int rank = 0;
  std::vector<MoebiusMap> generators;
  std::vector<Word> peripherals;
  std::string label;
};

MoebiusMap evaluate(const MarkedGroup& g, const std::vector<int>& letters);
MoebiusMap evaluate(const MarkedGroup& g, const Word& w);

// Trace of the SL(2,R) commutator A B A^-1 B^-1. Unlike single-element
// traces this is independent of the sign choice of the lifts, so the
// raw product of the stored representatives computes it.
double commutator_trace(const MoebiusMap& A, const MoebiusMap& B);

// Left-hand side of the Jorgensen inequality for the pair (A, B):
// |tr^2 A - 4| + |tr [A,B] - 2|, computed on honest SL(2,R) lifts.
double jorgensen_lhs(const MoebiusMap& A, const MoebiusMap& B);

// Structural checks: sizes, parabolic peripherals, first peripheral equal
// to z -> z + 1, and the Jorgensen screen on every generator pair. Throws
// InvalidGroup / IndiscreteSuspected.
void validate(const MarkedGroup& g);

// Conjugates all generators by a single map taking the first peripheral to
// z -> z + 1. If that peripheral translates in the negative direction (no
// orientation-preserving conjugation can fix that), the stored word is
// replaced by its inverse first. Throws NotParabolic.
MarkedGroup normalize(const MarkedGroup& g);

enum class RootChoice { Plus, Minus };

// Once-punctured torus from trace coordinates tr A = x, tr B = y and
// tr AB = z, the chosen root of z^2 - xyz + x^2 + y^2 = 0 (equivalently
// tr [A,B] = -2). Requires x, y > 2 and a real root.
MarkedGroup punctured_torus(double x, double y, RootChoice root);

// The rigid rank-2 surface with three cusps; generators z -> z + 1 and
// z -> z/(4z + 1), peripherals [1], [2], [1 -2].
MarkedGroup thrice_punctured_sphere();

// A pair of marked groups with the identity correspondence on words.
// source and target share rank and peripheral word lists, and both carry
// g0 = z -> z + 1 as the value of the first peripheral word.
struct MarkedIsomorphism {
  MarkedGroup source;
  MarkedGroup target;

  MarkedIsomorphism inverted() const { return MarkedIsomorphism{target, source}; }
};

MarkedIsomorphism make_isomorphism(MarkedGroup source, MarkedGroup target);
MarkedIsomorphism identity_isomorphism(const MarkedGroup& g);

}  // namespace thurston
