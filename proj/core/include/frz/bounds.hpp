#pragma once

// Scalar bound functions: the extremal-family curves, the main-theorem curve
// and the older reference curves, plus grid certificates for the two
// monotonicity/minimality facts the upper bound relies on.
//
// Real-valued curves are evaluated in natural-log space; p^(K^4) overflows
// doubles long before K gets interesting.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "frz/dense_set.hpp"
#include "frz/rational.hpp"

namespace frz {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kThresholdDoubling = 8.0;  // K_0

// Spanning constant of the extremal family: p^m / (m + q).
Rational extremal_spanning(std::uint32_t p, std::uint32_t q, std::uint32_t m);
double log_extremal_spanning(std::uint32_t p, std::uint32_t q, double m);

// Doubling constant of the extremal family:
// (binom(m+1, 2) + q(m-1) + min(2q, p-1)) / (m + q).
Rational extremal_doubling(std::uint32_t p, std::uint32_t q, std::uint32_t m);
double extremal_doubling_real(std::uint32_t p, std::uint32_t q, double m);

// q^2 + 3q - 2 min(2q, p-1); the constant term in the inverse of the doubling curve.
std::int64_t doubling_correction(std::uint32_t p, std::uint32_t q);

// Real m with extremal_doubling_real(p, q, m) == K: with x = K - 1/2,
// m = x - q + sqrt(x^2 + g(q)). Throws DomainError for K < 1.
double extremal_doubling_inverse(std::uint32_t p, std::uint32_t q, double k);

// p^(2K-2) / (2K-1).
double main_theorem_curve(std::uint32_t p, double k);
double log_main_theorem_curve(std::uint32_t p, double k);
// Exact value for K in (1/2)N, K >= 1.
Rational main_theorem_curve_exact(std::uint32_t p, const Rational& k);

struct ReferenceCurves {
  double log_ruzsa;        // K^2 p^(K^4)
  double log_green_ruzsa;  // K^2 p^(2K^2 - 2)
  double log_main;         // p^(2K-2) / (2K-1)
};

ReferenceCurves reference_curves(std::uint32_t p, double k);

// log of F_q(G_q^{-1}(K)): the tight spanning bound for fixed q.
double log_tight_family_curve(std::uint32_t p, std::uint32_t q, double k);

struct BoundCurve {
  std::string label;
  std::function<double(double)> log_value;  // natural log of the curve at K
  double k_min;
  double k_max;
};

// main, green_ruzsa, ruzsa, then F_q∘G_q^{-1} for q = 1..p-1.
std::vector<BoundCurve> standard_curves(std::uint32_t p);

// Smallest m beyond which the lower-bound expression is decreasing in m:
// max((2q-1)/(q ln p - 1) - 1, (2q+3-2(p-1) ln p)/(q ln p - 1) + 3).
double monotonicity_threshold(std::uint32_t p, std::uint32_t q);

// Grid certificate that, with |<A>|/|A| = p^(2K-2)/(2K-1), the lower bound
// (2 min(2q,p-1) + (m-3)q) |<A>|/(2p^m) + (m+1)|A|/2 strictly decreases over
// m in [log_p(q |<A>|/|A|), F_q^{-1}(|<A>|/|A|)]. Requires K >= 8. An empty
// interval passes vacuously.
bool check_decreasing_in_m(std::uint32_t p, std::uint32_t q, double k, std::uint32_t samples);

// Grid certificate that F_q∘G_q^{-1}(x + 1/2) <= F_1∘G_1^{-1}(x + 1/2) for
// every q in [2, p-1] and every grid x (each x >= 5/2), compared in log
// space with the given tolerance.
bool check_q1_minimal(std::uint32_t p, std::span<const double> x_grid, double tolerance = kDefaultTolerance);

// The same m-monotonicity grid check without the K >= 8 precondition (K > 1),
// for exploring where the certificate starts to hold.
bool check_decreasing_in_m_below_threshold(std::uint32_t p, std::uint32_t q, double k, std::uint32_t samples);

// Least grid K in [k_min, k_max] from which both certificates hold at every
// larger grid point: m-monotonicity for every q, and q = 1 minimality at
// x = K - 1/2. NaN if they fail at k_max. A grid search, not a proof.
double least_certified_doubling(std::uint32_t p, double k_min, double k_max, double k_step, std::uint32_t samples,
                                double tolerance = kDefaultTolerance);

// Least K with log_p(q p^(2K-2)/(2K-1)) >= monotonicity_threshold(p, q) for
// every q, i.e. where the m-interval starts past the threshold. Bisection.
double least_threshold_doubling(std::uint32_t p);

// {0, e_1, 2e_1, ..., q e_1, e_2, ..., e_m} in F_p^m.
DenseSet extremal_set(std::uint32_t p, std::uint32_t q, std::uint32_t m);

}  // namespace frz
