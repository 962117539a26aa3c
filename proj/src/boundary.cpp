#include "thurston/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace thurston {

const char* to_string(SampleKind k) {
  return k == SampleKind::AttractingHyp ? "attracting_hyp" : "parabolic_fix";
}

std::vector<BoundarySample> boundary_samples(const MarkedIsomorphism& j, int max_len,
                                             std::uint64_t budget) {
  if (reduced_word_count(j.source.rank, max_len) > budget) {
    throw BudgetExceeded("sampling at max_len " + std::to_string(max_len) + " exceeds budget");
  }
  std::vector<BoundarySample> out;
  visit_reduced_words(j.source.rank, max_len, [&](const std::vector<int>& letters) {
    if (letters.empty() || !is_canonical_class_rep(letters)) return;
    const IsometryClass cs = classify(evaluate(j.source, letters));
    const IsometryClass ct = classify(evaluate(j.target, letters));
    if (cs.kind != ct.kind) {
      Word w{std::vector<int>(letters)};
      throw TypeMismatch("word " + w.str() + " is " + to_string(cs.kind) + " in the source but " +
                         to_string(ct.kind) + " in the target");
    }
    if (cs.kind != MapKind::Hyperbolic) return;
    out.push_back(BoundarySample{Word{std::vector<int>(letters)}, cs.attracting, ct.attracting,
                                 SampleKind::AttractingHyp});
  });

  std::sort(out.begin(), out.end(), [](const BoundarySample& a, const BoundarySample& b) {
    if (a.x == b.x) return word_less(a.word, b.word);
    return circle_less(a.x, b.x);
  });
  const double tol = tolerances().pt;
  std::vector<BoundarySample> dedup;
  for (auto& s : out) {
    if (!dedup.empty() && approx_equal(dedup.back().x, s.x, tol)) continue;
    dedup.push_back(std::move(s));
  }
  return dedup;
}

bool strictly_monotone(const std::vector<BoundarySample>& samples) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!circle_less(samples[i - 1].y, samples[i].y)) return false;
  }
  return true;
}

namespace {

// Chart value used by the fits: 1/x when the anchor sits at infinity.
double chart(const ExtendedReal& v, bool flip) {
  if (v.is_infinity()) return 0.0;  // only reachable with flip
  return flip ? 1.0 / v.value() : v.value();
}

}  // namespace

HolderFit holder_fit(const std::vector<BoundarySample>& samples, std::size_t anchor_index,
                     double window) {
  if (anchor_index >= samples.size()) throw Error("anchor index out of range");
  const BoundarySample& anchor = samples[anchor_index];
  const bool flip_x = anchor.x.is_infinity();
  const bool flip_y = anchor.y.is_infinity();
  const double x0 = chart(anchor.x, flip_x);
  const double y0 = chart(anchor.y, flip_y);
  const double tol = tolerances().pt;

  std::vector<double> u, v;  // log|x - x0|, log|y - y0|
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i == anchor_index) continue;
    const BoundarySample& s = samples[i];
    if (!flip_x && s.x.is_infinity()) continue;
    if (!flip_y && s.y.is_infinity()) continue;
    if (flip_x && !s.x.is_infinity() && s.x.value() == 0.0) continue;
    if (flip_y && !s.y.is_infinity() && s.y.value() == 0.0) continue;
    const double dx = std::fabs(chart(s.x, flip_x) - x0);
    const double dy = std::fabs(chart(s.y, flip_y) - y0);
    if (dx <= tol || dy <= tol) continue;
    if (dx > window) continue;
    u.push_back(std::log(dx));
    v.push_back(std::log(dy));
  }
  if (u.size() < 8) {
    throw InsufficientSamples("only " + std::to_string(u.size()) +
                              " samples in the window; at least 8 required");
  }

  const std::size_t n = u.size();
  double mu = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= static_cast<double>(n);
  mv /= static_cast<double>(n);
  double suu = 0.0, suv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suv += (u[i] - mu) * (v[i] - mv);
  }
  if (suu <= 0.0) throw DegenerateWindow("all window samples at one distance from the anchor");

  HolderFit fit;
  fit.anchor_x = anchor.x;
  fit.anchor_y = anchor.y;
  fit.window = window;
  fit.n_used = static_cast<int>(n);
  fit.slope = suv / suu;
  const double intercept = mv - fit.slope * mu;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = v[i] - (intercept + fit.slope * u[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(n));

  double alpha = fit.slope;
  if (alpha > 1.0) alpha = 1.0 / alpha;  // two-sided exponent folds to (0, 1]
  if (!(alpha > 0.0)) throw DegenerateWindow("nonpositive regression slope");
  fit.alpha = std::min(alpha, 1.0);
  fit.inv_alpha = std::max(1.0, 1.0 / fit.alpha);

  double c = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::exp(u[i]);
    const double dy = std::exp(v[i]);
    c = std::max(c, dy / std::pow(dx, fit.alpha));
    c = std::max(c, std::pow(dx, fit.inv_alpha) / dy);
  }
  fit.constant_C = c;
  return fit;
}

HolderFit holder_fit_knn(const std::vector<BoundarySample>& samples, std::size_t anchor_index,
                         int k) {
  if (anchor_index >= samples.size()) throw Error("anchor index out of range");
  const BoundarySample& anchor = samples[anchor_index];
  const bool flip_x = anchor.x.is_infinity();
  const double x0 = chart(anchor.x, flip_x);
  const double tol = tolerances().pt;
  std::vector<double> dists;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i == anchor_index) continue;
    if (!flip_x && samples[i].x.is_infinity()) continue;
    if (flip_x && !samples[i].x.is_infinity() && samples[i].x.value() == 0.0) continue;
    const double dx = std::fabs(chart(samples[i].x, flip_x) - x0);
    if (dx > tol) dists.push_back(dx);
  }
  if (static_cast<int>(dists.size()) < k) {
    throw InsufficientSamples("fewer than k = " + std::to_string(k) + " usable samples");
  }
  std::nth_element(dists.begin(), dists.begin() + (k - 1), dists.end());
  const double window = dists[static_cast<std::size_t>(k - 1)] * (1.0 + 1e-12);
  return holder_fit(samples, anchor_index, window);
}

std::vector<std::size_t> extreme_anchor_indices(const std::vector<BoundarySample>& samples,
                                                const MarkedIsomorphism& j, std::size_t k) {
  std::vector<std::pair<double, std::size_t>> scored;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const IsometryClass cs = classify(evaluate(j.source, samples[i].word));
    const IsometryClass ct = classify(evaluate(j.target, samples[i].word));
    if (cs.kind != MapKind::Hyperbolic || ct.kind != MapKind::Hyperbolic) continue;
    const double r = std::log(ct.lambda) / std::log(cs.lambda);
    scored.emplace_back(std::max(r, 1.0 / r), i);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::size_t> out;
  for (const auto& [score, idx] : scored) {
    if (out.size() >= k) break;
    out.push_back(idx);
  }
  return out;
}

namespace {

// Is x strictly inside the arc swept counter-clockwise from a to b?
bool ccw_between(double a, double x, double b) {
  constexpr double two_pi = 2.0 * 3.14159265358979323846;
  auto wrap = [](double t) {
    while (t < 0.0) t += two_pi;
    while (t >= two_pi) t -= two_pi;
    return t;
  };
  const double span = wrap(b - a);
  const double off = wrap(x - a);
  return off > 0.0 && off < span;
}

bool shares_point(const ExtendedReal& a, const ExtendedReal& b) {
  return approx_equal(a, b, tolerances().pt);
}

}  // namespace

bool axes_intersect(const IsometryClass& g1, const IsometryClass& g2) {
  if (g1.kind == MapKind::Elliptic || g1.kind == MapKind::Identity ||
      g2.kind == MapKind::Elliptic || g2.kind == MapKind::Identity) {
    throw EllipticInput("axes are defined for hyperbolic and parabolic maps only");
  }
  if (g1.kind == MapKind::Parabolic && g2.kind == MapKind::Parabolic) {
    return shares_point(g1.fixed, g2.fixed);
  }
  if (g1.kind == MapKind::Parabolic || g2.kind == MapKind::Parabolic) {
    const IsometryClass& hyp = g1.kind == MapKind::Hyperbolic ? g1 : g2;
    const IsometryClass& par = g1.kind == MapKind::Parabolic ? g1 : g2;
    // A boundary point can only meet the closed geodesic at its endpoints.
    return shares_point(par.fixed, hyp.attracting) || shares_point(par.fixed, hyp.repelling);
  }
  if (shares_point(g1.attracting, g2.attracting) || shares_point(g1.attracting, g2.repelling) ||
      shares_point(g1.repelling, g2.attracting) || shares_point(g1.repelling, g2.repelling)) {
    return true;
  }
  const double a = circle_angle(g1.attracting);
  const double b = circle_angle(g1.repelling);
  const bool p_in = ccw_between(a, circle_angle(g2.attracting), b);
  const bool n_in = ccw_between(a, circle_angle(g2.repelling), b);
  return p_in != n_in;  // endpoints interleave on the circle
}

CompatibilityReport compare_axis_relations(const std::vector<IsometryClass>& src,
                                           const std::vector<IsometryClass>& tgt,
                                           const std::vector<Word>& words,
                                           std::size_t pair_cap) {
  if (src.size() != tgt.size() || src.size() != words.size()) {
    throw Error("mismatched classification lists");
  }
  CompatibilityReport rep;
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t k = i + 1; k < src.size(); ++k) {
      if (rep.pairs_checked >= pair_cap) return rep;
      ++rep.pairs_checked;
      const bool ms = axes_intersect(src[i], src[k]);
      const bool mt = axes_intersect(tgt[i], tgt[k]);
      if (ms != mt) {
        rep.violations.push_back(CompatibilityViolation{words[i], words[k], ms, mt});
      }
    }
  }
  return rep;
}

CompatibilityReport check_compatibility(const MarkedIsomorphism& j, int max_len,
                                        std::size_t pair_cap, std::uint64_t budget) {
  if (reduced_word_count(j.source.rank, max_len) > budget) {
    throw BudgetExceeded("compatibility check at max_len " + std::to_string(max_len) +
                         " exceeds budget");
  }
  std::vector<IsometryClass> src, tgt;
  std::vector<Word> words;
  visit_reduced_words(j.source.rank, max_len, [&](const std::vector<int>& letters) {
    if (letters.empty() || !is_canonical_class_rep(letters)) return;
    const IsometryClass cs = classify(evaluate(j.source, letters));
    const IsometryClass ct = classify(evaluate(j.target, letters));
    if (cs.kind == MapKind::Elliptic || cs.kind == MapKind::Identity || cs.kind != ct.kind) return;
    src.push_back(cs);
    tgt.push_back(ct);
    words.push_back(Word{std::vector<int>(letters)});
  });
  return compare_axis_relations(src, tgt, words, pair_cap);
}

NormEstimate cross_ratio_norm(const MarkedIsomorphism& j, int max_len, int n_tuples,
                              std::uint64_t seed, std::uint64_t budget) {
  const std::vector<BoundarySample> samples = boundary_samples(j, max_len, budget);
  if (samples.size() < 4) {
    throw InsufficientSamples("cross-ratio norm needs at least 4 boundary samples, got " +
                              std::to_string(samples.size()));
  }
  const double min_log = tolerances().cr;
  NormEstimate est;
  est.seed = seed;

  auto offer_cr = [&](const ExtendedReal* xs, const ExtendedReal* ys) {
    double num, den;
    try {
      den = std::fabs(std::log(cross_ratio(xs[0], xs[1], xs[2], xs[3])));
      num = std::fabs(std::log(cross_ratio(ys[0], ys[1], ys[2], ys[3])));
    } catch (const DegenerateTuple&) {
      return;
    }
    if (!(den > min_log) || !std::isfinite(num)) return;
    ++est.tuples_evaluated;
    est.cr_norm_lb = std::max(est.cr_norm_lb, num / den);
  };

  // Seeded random 4-subsets of the sampled fixed points, sorted counter-
  // clockwise. Consecutive rotations of a circular tuple carry the two
  // cross-ratio values kappa and kappa/(kappa - 1), so both are offered.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  for (int t = 0; t < n_tuples; ++t) {
    std::size_t idx[4];
    bool distinct = false;
    for (int attempt = 0; attempt < 64 && !distinct; ++attempt) {
      for (auto& i : idx) i = draw(samples.size());
      distinct = true;
      for (int a = 0; a < 4 && distinct; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          if (idx[a] == idx[b]) {
            distinct = false;
            break;
          }
        }
      }
    }
    if (!distinct) break;
    std::sort(idx, idx + 4, [&](std::size_t a, std::size_t b) {
      return circle_angle(samples[a].x) < circle_angle(samples[b].x);
    });
    ExtendedReal xs[4], ys[4], xr[4], yr[4];
    for (int i = 0; i < 4; ++i) {
      xs[i] = samples[idx[i]].x;
      ys[i] = samples[idx[i]].y;
      xr[i] = samples[idx[(i + 1) % 4]].x;
      yr[i] = samples[idx[(i + 1) % 4]].y;
    }
    offer_cr(xs, ys);
    offer_cr(xr, yr);
  }

  // The multiplier route: for a word g and base sample s, the tuple
  // (g(s), s, N(g), P(g)) has cross-ratio lambda(g), and its image under
  // the sampled map has cross-ratio lambda(j(g)). Each ratio is folded
  // into the cr pool as well (the tuple, read counter-clockwise, is a
  // valid pool member with the same |log|), which forces ls <= cr.
  const std::size_t max_base_points = 3;
  visit_reduced_words(j.source.rank, max_len, [&](const std::vector<int>& letters) {
    if (letters.empty() || !is_canonical_class_rep(letters)) return;
    const MoebiusMap ms = evaluate(j.source, letters);
    const MoebiusMap mt = evaluate(j.target, letters);
    const IsometryClass cs = classify(ms);
    const IsometryClass ct = classify(mt);
    if (cs.kind != MapKind::Hyperbolic || ct.kind != MapKind::Hyperbolic) return;
    std::size_t used = 0;
    for (std::size_t attempt = 0; attempt < 12 && used < max_base_points; ++attempt) {
      const BoundarySample& s = samples[draw(samples.size())];
      const ExtendedReal gx = apply(ms, s.x);
      const ExtendedReal gy = apply(mt, s.y);
      double num, den;
      try {
        den = std::fabs(std::log(cross_ratio(gx, s.x, cs.repelling, cs.attracting)));
        num = std::fabs(std::log(cross_ratio(gy, s.y, ct.repelling, ct.attracting)));
      } catch (const DegenerateTuple&) {
        continue;
      }
      if (!(den > min_log) || !std::isfinite(num)) continue;
      ++used;
      const double ratio = num / den;
      est.ls_norm_lb = std::max(est.ls_norm_lb, ratio);
      est.cr_norm_lb = std::max(est.cr_norm_lb, ratio);
      ++est.tuples_evaluated;
    }
    if (used > 0) ++est.words_evaluated;
  });

  return est;
}

}  // namespace thurston
