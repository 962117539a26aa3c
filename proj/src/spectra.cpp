#include "thurston/spectra.hpp"

#include <cmath>
#include <limits>

namespace thurston {

const char* to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::Delta: return "delta";
    case DistanceMethod::Rho: return "rho";
    case DistanceMethod::Both: return "both";
  }
  return "?";
}

const char* to_string(ExponentKind k) {
  return k == ExponentKind::Delta ? "delta" : "rho";
}

namespace {

// Accumulates the running sup with a per-length breakdown, then renders a
// nondecreasing trace clamped at the defining lower bound 1.
struct SupAccumulator {
  struct Level {
    double best = -std::numeric_limits<double>::infinity();
    Word witness;
  };
  std::vector<Level> by_len;  // index = word length
  double best = -std::numeric_limits<double>::infinity();
  Word witness;
  bool any = false;

  explicit SupAccumulator(int max_len) : by_len(static_cast<std::size_t>(max_len) + 1) {}

  void offer(double ratio, int len, const Word& w) {
    any = true;
    Level& slot = by_len[static_cast<std::size_t>(len)];
    if (ratio > slot.best || (ratio == slot.best && word_less(w, slot.witness))) {
      slot.best = ratio;
      slot.witness = w;
    }
    if (ratio > best || (ratio == best && word_less(w, witness))) {
      best = ratio;
      witness = w;
    }
  }

  std::vector<TracePoint> trace() const {
    std::vector<TracePoint> out;
    double running = 1.0;
    Word running_witness;
    for (std::size_t l = 0; l < by_len.size(); ++l) {
      if (by_len[l].best > running) {
        running = by_len[l].best;
        running_witness = by_len[l].witness;
      }
      out.push_back(TracePoint{static_cast<int>(l), running, running_witness});
    }
    return out;
  }

  double value() const { return best > 1.0 ? best : 1.0; }
};

void check_budget(int rank, int max_len, std::uint64_t budget) {
  const std::uint64_t count = reduced_word_count(rank, max_len);
  if (count > budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(count) + " words exceeds budget " +
                         std::to_string(budget) + "; lower max_len");
  }
}

MoebiusMap g0() { return MoebiusMap::translation(1.0); }

}  // namespace

ExponentEstimate delta_L_estimate(const MarkedIsomorphism& j, int max_len, EnumMode mode,
                                  std::uint64_t budget) {
  if (max_len < 2) throw Error("delta estimate needs max_len >= 2");
  check_budget(j.source.rank, max_len, budget);

  SupAccumulator acc(max_len);
  visit_reduced_words(j.source.rank, max_len, [&](const std::vector<int>& letters) {
    if (letters.empty()) return;
    if (mode == EnumMode::CyclicReps && !is_canonical_class_rep(letters)) return;
    const MoebiusMap ms = evaluate(j.source, letters);
    const MoebiusMap mt = evaluate(j.target, letters);
    const IsometryClass cs = classify(ms);
    const IsometryClass ct = classify(mt);
    if (cs.kind != ct.kind) {
      Word w{std::vector<int>(letters)};
      throw TypeMismatch("word " + w.str() + " is " + to_string(cs.kind) + " in the source but " +
                         to_string(ct.kind) + " in the target");
    }
    if (cs.kind != MapKind::Hyperbolic) return;
    const double ratio = std::log(ct.lambda) / std::log(cs.lambda);
    acc.offer(ratio, static_cast<int>(letters.size()), Word{std::vector<int>(letters)});
  });

  if (!acc.any) {
    throw NoHyperbolicFound("no word of length <= " + std::to_string(max_len) +
                            " is hyperbolic on both sides");
  }

  ExponentEstimate out;
  out.kind = ExponentKind::Delta;
  out.value = acc.value();
  out.witness = acc.witness;
  out.cutoff = max_len;
  out.trace = acc.trace();
  return out;
}

ExponentEstimate rho_L_estimate(const MarkedIsomorphism& j, int max_len, int depth,
                                std::uint64_t budget) {
  if (max_len < 1) throw Error("rho estimate needs max_len >= 1");
  if (depth < 1) throw Error("rho estimate needs depth >= 1");
  check_budget(j.source.rank, max_len, budget);

  const double unit_band = 1e-9;
  SupAccumulator acc(max_len);
  ExponentEstimate out;
  out.kind = ExponentKind::Rho;

  std::vector<MoebiusMap> src_peripherals, tgt_peripherals;
  for (const Word& p : j.source.peripherals) src_peripherals.push_back(evaluate(j.source, p));
  for (const Word& p : j.target.peripherals) tgt_peripherals.push_back(evaluate(j.target, p));

  auto contribute = [&](const MoebiusMap& hs, const MoebiusMap& ht, int len, const Word& w) {
    double omega_s, omega_t;
    try {
      omega_s = translation_vector(hs);
      omega_t = translation_vector(ht);
    } catch (const Error&) {
      return;  // numerically degenerate conjugate; no usable constraint
    }
    const double as = std::fabs(omega_s);
    const double at = std::fabs(omega_t);
    if (!(std::isfinite(as) && std::isfinite(at)) || at == 0.0) return;
    if (std::fabs(as - 1.0) <= unit_band) {
      ++out.skipped_unit_translation;
      return;
    }
    const double ratio = std::log(at) / std::log(as);
    if (as < 1.0) {
      out.upper_constraints.emplace_back(w.str(), ratio);
      return;
    }
    acc.offer(ratio, len, w);
  };

  visit_reduced_words(j.source.rank, max_len, [&](const std::vector<int>& letters) {
    const int len = static_cast<int>(letters.size());
    const MoebiusMap ms = evaluate(j.source, letters);
    const MoebiusMap mt = evaluate(j.target, letters);
    const MoebiusMap ms_inv = inverse(ms);
    const MoebiusMap mt_inv = inverse(mt);
    const Word w{std::vector<int>(letters)};

    // Conjugated peripherals w p w^-1.
    for (std::size_t pi = 0; pi < src_peripherals.size(); ++pi) {
      const MoebiusMap hs = compose(ms, compose(src_peripherals[pi], ms_inv));
      const MoebiusMap ht = compose(mt, compose(tgt_peripherals[pi], mt_inv));
      contribute(hs, ht, len, w.concat(j.source.peripherals[pi]).concat(w.inverse()));
    }

    if (letters.empty()) return;
    const IsometryClass cs = classify(ms);
    const IsometryClass ct = classify(mt);
    if (cs.kind != ct.kind) {
      throw TypeMismatch("word " + w.str() + " is " + to_string(cs.kind) + " in the source but " +
                         to_string(ct.kind) + " in the target");
    }
    if (cs.kind != MapKind::Hyperbolic) return;

    // w^n g0 w^-n: translation vectors grow like lambda^n, so deep
    // conjugates dominate the sup (and cannot stay below 1 forever).
    MoebiusMap pow_s = ms, pow_t = mt;
    Word wn = w;
    for (int n = 1; n <= depth; ++n) {
      const MoebiusMap hs = compose(pow_s, compose(src_peripherals[0], inverse(pow_s)));
      const MoebiusMap ht = compose(pow_t, compose(tgt_peripherals[0], inverse(pow_t)));
      contribute(hs, ht, len, wn.concat(j.source.peripherals[0]).concat(wn.inverse()));
      if (n < depth) {
        pow_s = compose(pow_s, ms);
        pow_t = compose(pow_t, mt);
        wn = wn.concat(w);
      }
    }
  });

  if (!acc.any) {
    throw NoParabolicAboveOne("every sampled |omega| <= 1 at cutoff " + std::to_string(max_len) +
                              "; increase depth");
  }

  out.value = acc.value();
  out.witness = acc.witness;
  out.cutoff = max_len;
  out.trace = acc.trace();
  return out;
}

DistanceReport distance(const MarkedGroup& x, const MarkedGroup& y, int max_len, int depth,
                        DistanceMethod method, std::uint64_t budget) {
  const MarkedIsomorphism j = make_isomorphism(x, y);
  const MarkedIsomorphism ji = j.inverted();

  DistanceReport r;
  r.method = method;
  r.cutoff = max_len;
  r.depth = depth;
  r.delta_forward = delta_L_estimate(j, max_len, EnumMode::CyclicReps, budget);
  r.delta_backward = delta_L_estimate(ji, max_len, EnumMode::CyclicReps, budget);
  r.rho_forward = rho_L_estimate(j, max_len, depth, budget);
  r.rho_backward = rho_L_estimate(ji, max_len, depth, budget);

  const ExponentEstimate& fwd =
      method == DistanceMethod::Rho ? r.rho_forward : r.delta_forward;
  const ExponentEstimate& bwd =
      method == DistanceMethod::Rho ? r.rho_backward : r.delta_backward;
  r.d_L_forward = std::log(fwd.value);
  r.d_L_backward = std::log(bwd.value);
  r.d_ls = std::max(r.d_L_forward, r.d_L_backward);
  r.gap = std::fabs(std::log(r.delta_forward.value) - std::log(r.rho_forward.value));
  return r;
}

TraceExponentReport trace_exponent_check(const MoebiusMap& src, const MoebiusMap& tgt, int n_max) {
  const IsometryClass cs = classify(src);
  const IsometryClass ct = classify(tgt);
  if (cs.kind != MapKind::Hyperbolic || ct.kind != MapKind::Hyperbolic) {
    throw NotHyperbolic("trace exponent check requires hyperbolic inputs");
  }
  TraceExponentReport rep;
  rep.s_lambda = std::log(ct.lambda) / std::log(cs.lambda);
  MoebiusMap ps = src, pt = tgt;
  for (int n = 1; n <= n_max; ++n) {
    const double s = std::log(pt.trace()) / std::log(ps.trace());
    rep.s_tr.push_back(s);
    rep.max_abs_dev = std::max(rep.max_abs_dev, std::fabs(s - rep.s_lambda));
    if (n < n_max) {
      ps = compose(ps, src);
      pt = compose(pt, tgt);
    }
  }
  return rep;
}

double conjugate_translation_closed_form(double lambda, double big_n, int n) {
  const double ln = std::pow(lambda, n);
  return -(ln + 1.0 / ln - 2.0) / (big_n * big_n);
}

namespace {

void require_attracting_zero(const IsometryClass& c) {
  if (c.kind != MapKind::Hyperbolic) throw NotHyperbolic("input must be hyperbolic");
  if (c.attracting.is_infinity() ||
      std::fabs(c.attracting.value()) > tolerances().pt) {
    throw WrongNormalization("attracting fixed point must be 0, got " + c.attracting.str());
  }
  if (c.repelling.is_infinity()) {
    throw WrongNormalization("repelling fixed point must be finite");
  }
}

double direct_conjugate_translation(const MoebiusMap& g, int n) {
  MoebiusMap p = g;
  for (int i = 1; i < n; ++i) p = compose(p, g);
  return translation_vector(compose(p, compose(g0(), inverse(p))));
}

}  // namespace

std::pair<double, double> conjugate_translation_check(const MoebiusMap& g, int n) {
  if (n < 1) throw Error("n must be at least 1");
  const IsometryClass c = classify(g);
  require_attracting_zero(c);
  const double closed =
      conjugate_translation_closed_form(c.lambda, c.repelling.value(), n);
  return {closed, direct_conjugate_translation(g, n)};
}

std::vector<double> translation_exponent_sequence(const MoebiusMap& src, const MoebiusMap& tgt,
                                                  int n_max) {
  require_attracting_zero(classify(src));
  require_attracting_zero(classify(tgt));
  std::vector<double> bn;
  MoebiusMap ps = src, pt = tgt;
  for (int n = 1; n <= n_max; ++n) {
    const double os = std::fabs(translation_vector(compose(ps, compose(g0(), inverse(ps)))));
    const double ot = std::fabs(translation_vector(compose(pt, compose(g0(), inverse(pt)))));
    const double den = std::log(os);
    bn.push_back(std::fabs(den) < 1e-12 ? std::numeric_limits<double>::quiet_NaN()
                                        : std::log(ot) / den);
    if (n < n_max) {
      ps = compose(ps, src);
      pt = compose(pt, tgt);
    }
  }
  return bn;
}

}  // namespace thurston
