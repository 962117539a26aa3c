#pragma once

#include <cstdint>
#include <vector>

#include "thurston/marked_group.hpp"

namespace thurston {

enum class SampleKind { AttractingHyp, ParabolicFix };

const char* to_string(SampleKind k);

// One sampled value of the boundary map: x is a fixed point in the source,
// y the corresponding fixed point in the target.
struct BoundarySample {
  Word word;
  ExtendedReal x, y;
  SampleKind kind = SampleKind::AttractingHyp;
};

// Attracting fixed points of all class representatives hyperbolic on both
// sides, deduplicated within the point tolerance and sorted by x (infinity
// last). Throws TypeMismatch on a type-changing word.
std::vector<BoundarySample> boundary_samples(const MarkedIsomorphism& j, int max_len,
                                             std::uint64_t budget = 10'000'000);

// True when the y values are strictly increasing in the x order, i.e. the
// sampled map restricts an orientation-preserving circle homeomorphism.
bool strictly_monotone(const std::vector<BoundarySample>& samples);

// Local two-sided Hoelder data at one anchor sample:
//   |x - x0|^(1/alpha) / C <= |y - y0| <= C |x - x0|^alpha
// alpha comes from the log-log regression slope, folded to (0, 1] via
// min(slope, 1/slope); C is then the smallest constant valid on the window.
struct HolderFit {
  ExtendedReal anchor_x, anchor_y;
  double window = 0.0;
  double slope = 1.0;     // raw regression slope
  double alpha = 1.0;     // in (0, 1]
  double inv_alpha = 1.0; // max(1, 1/alpha)
  double constant_C = 1.0;
  double residual = 0.0;  // RMS about the regression line
  int n_used = 0;
};

// Fits around samples[anchor_index] using samples within the window.
// Anchors at infinity (or with image at infinity) are handled through the
// chart x -> 1/x. Throws InsufficientSamples (< 8 in window) and
// DegenerateWindow.
HolderFit holder_fit(const std::vector<BoundarySample>& samples, std::size_t anchor_index,
                     double window);

// Same fit with the window chosen as the distance to the k-th nearest
// sample, so every fit sees exactly k points.
HolderFit holder_fit_knn(const std::vector<BoundarySample>& samples, std::size_t anchor_index,
                         int k);

// Indices of the samples whose words have the largest two-sided multiplier
// distortion max(r, 1/r), r = log lambda_tgt / log lambda_src; these are
// the anchors where the Hoelder exponent is extremal.
std::vector<std::size_t> extreme_anchor_indices(const std::vector<BoundarySample>& samples,
                                                const MarkedIsomorphism& j, std::size_t k);

// Whether the closed axes meet: interleaved or shared endpoints for two
// hyperbolics, endpoint membership for a parabolic point against an axis,
// coincidence for two parabolic points. Throws EllipticInput.
bool axes_intersect(const IsometryClass& g1, const IsometryClass& g2);

struct CompatibilityViolation {
  Word w1, w2;
  bool source_meets = false;
  bool target_meets = false;
};

struct CompatibilityReport {
  std::vector<CompatibilityViolation> violations;
  std::size_t pairs_checked = 0;
};

// Pairwise axis-intersection comparison over precomputed classifications;
// the words vector labels the entries.
CompatibilityReport compare_axis_relations(const std::vector<IsometryClass>& src,
                                           const std::vector<IsometryClass>& tgt,
                                           const std::vector<Word>& words,
                                           std::size_t pair_cap = 2'000'000);

// The axis-intersection pattern must agree between source and target for a
// boundary map to exist; violations are data, not errors.
CompatibilityReport check_compatibility(const MarkedIsomorphism& j, int max_len,
                                        std::size_t pair_cap = 2'000'000,
                                        std::uint64_t budget = 10'000'000);

struct NormEstimate {
  double cr_norm_lb = 1.0;  // sup ratio of |log cross-ratio| over 4-tuples
  double ls_norm_lb = 1.0;  // sup over words and base points of the
                            // multiplier cross-ratio route
  int tuples_evaluated = 0;
  int words_evaluated = 0;
  std::uint64_t seed = 0;
};

// Seeded lower bounds for the cross-ratio norm and the length-spectrum
// norm of the sampled boundary map. The tuples behind ls_norm_lb are folded
// into the cr pool, so ls <= cr holds by construction.
NormEstimate cross_ratio_norm(const MarkedIsomorphism& j, int max_len, int n_tuples,
                              std::uint64_t seed, std::uint64_t budget = 10'000'000);

}  // namespace thurston
