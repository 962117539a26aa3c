#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thurston/marked_group.hpp"

namespace thurston {

enum class ExponentKind { Delta, Rho };

struct TracePoint {
  int cutoff = 0;
  double value = 1.0;
  Word witness;  // best word seen up to this cutoff
};

// Lower-bound estimate of a stretch exponent at a finite word-length
// cutoff. The sup runs over a growing set, so trace values are
// nondecreasing in the cutoff by construction.
struct ExponentEstimate {
  ExponentKind kind = ExponentKind::Delta;
  double value = 1.0;  // >= 1; the exponent itself is defined as >= 1
  Word witness;        // word attaining the best ratio (lexicographic least)
  int cutoff = 0;
  std::vector<TracePoint> trace;  // nondecreasing in value

  // rho only: elements with |omega| < 1 flip the defining inequality into
  // an upper bound on the exponent; they are reported, never folded in.
  std::vector<std::pair<std::string, double>> upper_constraints;
  int skipped_unit_translation = 0;  // elements with |omega| ~ 1
};

// sup over words hyperbolic on both sides of log lambda' / log lambda.
// Throws TypeMismatch when a word changes type across the marking and
// NoHyperbolicFound when the cutoff admits no hyperbolic word.
ExponentEstimate delta_L_estimate(const MarkedIsomorphism& j, int max_len,
                                  EnumMode mode = EnumMode::CyclicReps,
                                  std::uint64_t budget = 10'000'000);

// sup over parabolic elements with |omega| > 1 of log|omega'| / log|omega|,
// drawn from conjugated peripherals w p w^-1 and the families
// w^n (z -> z+1) w^-n for hyperbolic w, n <= depth.
ExponentEstimate rho_L_estimate(const MarkedIsomorphism& j, int max_len, int depth,
                                std::uint64_t budget = 10'000'000);

enum class DistanceMethod { Delta, Rho, Both };

const char* to_string(DistanceMethod m);
const char* to_string(ExponentKind k);

struct DistanceReport {
  double d_L_forward = 0.0;
  double d_L_backward = 0.0;
  double d_ls = 0.0;  // max of the two directed values
  DistanceMethod method = DistanceMethod::Delta;
  int cutoff = 0;
  int depth = 0;
  double gap = 0.0;  // |log delta - log rho| in the forward direction

  ExponentEstimate delta_forward, delta_backward;
  ExponentEstimate rho_forward, rho_backward;
};

// Directed and symmetrized distances between two marked groups with the
// identity correspondence. All values are lower bounds converging from
// below as max_len grows.
DistanceReport distance(const MarkedGroup& x, const MarkedGroup& y, int max_len, int depth,
                        DistanceMethod method = DistanceMethod::Delta,
                        std::uint64_t budget = 10'000'000);

// s_tr(n) = log tr(tgt^n) / log tr(src^n) converges to
// s_lambda = log lambda(tgt) / log lambda(src); both maps hyperbolic.
struct TraceExponentReport {
  double s_lambda = 1.0;
  std::vector<double> s_tr;  // s_tr[n-1] for n = 1..n_max
  double max_abs_dev = 0.0;
};

TraceExponentReport trace_exponent_check(const MoebiusMap& src, const MoebiusMap& tgt, int n_max);

// omega(g^n o (z -> z+1) o g^-n) = -(lambda^n + lambda^-n - 2) / N^2 for a
// hyperbolic g with attracting fixed point 0 and repelling point N.
double conjugate_translation_closed_form(double lambda, double big_n, int n);

// (closed form, direct matrix evaluation) for the same quantity. Throws
// WrongNormalization unless the attracting fixed point of g is 0.
std::pair<double, double> conjugate_translation_check(const MoebiusMap& g, int n);

// b_n with |omega_tgt(n)| = |omega_src(n)|^(b_n), where omega(n) is the
// translation vector of g^n o (z -> z+1) o g^-n. Both maps hyperbolic with
// attracting fixed point 0. Entries are NaN where |omega_src(n)| ~ 1.
std::vector<double> translation_exponent_sequence(const MoebiusMap& src, const MoebiusMap& tgt,
                                                  int n_max);

}  // namespace thurston
