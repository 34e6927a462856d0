#include "frz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frz/error.hpp"

namespace frz {

namespace {

void require_q(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p)) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
  if (q < 1 || q >= p) throw DomainError("q = " + std::to_string(q) + " outside [1, p-1]");
}

void require_m(std::uint32_t m) {
  if (m < 1) throw DomainError("m must be at least 1");
}

std::uint32_t min2q(std::uint32_t p, std::uint32_t q) { return std::min(2 * q, p - 1); }

}  // namespace

Rational extremal_spanning(std::uint32_t p, std::uint32_t q, std::uint32_t m) {
  require_q(p, q);
  require_m(m);
  return ratio(ipow(p, m), BigInt(m) + q);
}

double log_extremal_spanning(std::uint32_t p, std::uint32_t q, double m) {
  require_q(p, q);
  return m * std::log(static_cast<double>(p)) - std::log(m + q);
}

Rational extremal_doubling(std::uint32_t p, std::uint32_t q, std::uint32_t m) {
  require_q(p, q);
  require_m(m);
  const BigInt mm(m);
  const BigInt num = mm * (mm + 1) / 2 + BigInt(q) * (mm - 1) + min2q(p, q);
  return ratio(num, mm + q);
}

double extremal_doubling_real(std::uint32_t p, std::uint32_t q, double m) {
  require_q(p, q);
  return (m * (m + 1) / 2 + q * (m - 1) + min2q(p, q)) / (m + q);
}

std::int64_t doubling_correction(std::uint32_t p, std::uint32_t q) {
  require_q(p, q);
  const std::int64_t qq = q;
  return qq * qq + 3 * qq - 2 * static_cast<std::int64_t>(min2q(p, q));
}

double extremal_doubling_inverse(std::uint32_t p, std::uint32_t q, double k) {
  require_q(p, q);
  if (!(k >= 1.0)) throw DomainError("doubling inverse needs K >= 1");
  const double x = k - 0.5;
  return x - q + std::sqrt(x * x + static_cast<double>(doubling_correction(p, q)));
}

double log_main_theorem_curve(std::uint32_t p, double k) {
  return (2 * k - 2) * std::log(static_cast<double>(p)) - std::log(2 * k - 1);
}

double main_theorem_curve(std::uint32_t p, double k) { return std::exp(log_main_theorem_curve(p, k)); }

Rational main_theorem_curve_exact(std::uint32_t p, const Rational& k) {
  const Rational t = 2 * k - 2;
  if (t < 0 || denominator_of(t) != 1) throw DomainError("exact curve needs K in (1/2)N with K >= 1");
  const BigInt e = numerator_of(t);
  return ratio(ipow(p, e.convert_to<unsigned>()), e + 1);
}

ReferenceCurves reference_curves(std::uint32_t p, double k) {
  if (!(k >= 1.0)) throw DomainError("reference curves need K >= 1");
  const double lp = std::log(static_cast<double>(p));
  const double lk = std::log(k);
  return {2 * lk + k * k * k * k * lp, 2 * lk + (2 * k * k - 2) * lp, log_main_theorem_curve(p, k)};
}

double log_tight_family_curve(std::uint32_t p, std::uint32_t q, double k) {
  return log_extremal_spanning(p, q, extremal_doubling_inverse(p, q, k));
}

std::vector<BoundCurve> standard_curves(std::uint32_t p) {
  constexpr double inf = HUGE_VAL;
  std::vector<BoundCurve> out;
  out.push_back({"main_curve", [p](double k) { return log_main_theorem_curve(p, k); }, 1.0, inf});
  out.push_back({"green_ruzsa", [p](double k) { return reference_curves(p, k).log_green_ruzsa; }, 1.0, inf});
  out.push_back({"ruzsa", [p](double k) { return reference_curves(p, k).log_ruzsa; }, 1.0, inf});
  for (std::uint32_t q = 1; q < p; ++q) {
    out.push_back({"tight_q" + std::to_string(q), [p, q](double k) { return log_tight_family_curve(p, q, k); },
                   1.0, inf});
  }
  return out;
}

double monotonicity_threshold(std::uint32_t p, std::uint32_t q) {
  require_q(p, q);
  const double lp = std::log(static_cast<double>(p));
  const double denom = q * lp - 1;
  if (!(denom > 0)) throw DomainError("threshold needs q ln p > 1");
  const double first = (2.0 * q - 1) / denom - 1;
  const double second = (2.0 * q + 3 - 2.0 * (p - 1) * lp) / denom + 3;
  return std::max(first, second);
}

namespace {

bool decreasing_in_m_holds(std::uint32_t p, std::uint32_t q, double k, std::uint32_t samples) {
  const double lp = std::log(static_cast<double>(p));
  const double log_ratio = log_main_theorem_curve(p, k);  // log(|<A>|/|A|)

  const double lo = (std::log(static_cast<double>(q)) + log_ratio) / lp;
  // F_q^{-1}(ratio) by bisection; m ln p - ln(m+q) is increasing for m + q > 1/ln p.
  auto excess = [&](double m) { return m * lp - std::log(m + q) - log_ratio; };
  double a = std::max(lo, 0.0), b = a + 1;
  while (excess(b) < 0) b = a + 2 * (b - a);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    (excess(mid) < 0 ? a : b) = mid;
  }
  const double hi = b;
  if (hi < lo) return true;

  const double c = 2.0 * min2q(p, q);
  auto phi = [&](double m) {
    // Lower bound divided by |A|.
    return (c + (m - 3) * q) * std::exp(log_ratio - m * lp) / 2 + (m + 1) / 2;
  };
  double prev = phi(lo);
  for (std::uint32_t i = 1; i < samples; ++i) {
    const double m = lo + (hi - lo) * i / (samples - 1);
    const double cur = phi(m);
    if (!(cur < prev)) return false;
    prev = cur;
  }
  return true;
}

bool q1_minimal_at(std::uint32_t p, double x, double tolerance) {
  const double lp = std::log(static_cast<double>(p));
  const double rhs = (2 * x - 1) * lp - std::log(2 * x);
  for (std::uint32_t q = 2; q < p; ++q) {
    const double s = std::sqrt(x * x + static_cast<double>(doubling_correction(p, q)));
    const double lhs = (x - q + s) * lp - std::log(x + s);
    if (lhs > rhs + tolerance) return false;
  }
  return true;
}

}  // namespace

bool check_decreasing_in_m(std::uint32_t p, std::uint32_t q, double k, std::uint32_t samples) {
  require_q(p, q);
  if (!(k >= kThresholdDoubling)) throw DomainError("the m-monotonicity certificate needs K >= 8");
  if (samples < 2) throw DomainError("need at least two grid points");
  return decreasing_in_m_holds(p, q, k, samples);
}

bool check_decreasing_in_m_below_threshold(std::uint32_t p, std::uint32_t q, double k, std::uint32_t samples) {
  require_q(p, q);
  if (!(k > 1)) throw DomainError("the m-monotonicity check needs K > 1");
  if (samples < 2) throw DomainError("need at least two grid points");
  return decreasing_in_m_holds(p, q, k, samples);
}

bool check_q1_minimal(std::uint32_t p, std::span<const double> x_grid, double tolerance) {
  if (!is_prime(p)) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
  for (double x : x_grid) {
    if (!(x >= 2.5)) throw DomainError("the q-minimality certificate needs x >= 5/2");
    if (!q1_minimal_at(p, x, tolerance)) return false;
  }
  return true;
}

double least_certified_doubling(std::uint32_t p, double k_min, double k_max, double k_step, std::uint32_t samples,
                                double tolerance) {
  if (!is_prime(p)) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
  if (!(k_min > 1) || !(k_step > 0) || k_max < k_min) throw DomainError("need 1 < k_min <= k_max and k_step > 0");
  const auto count = static_cast<std::uint64_t>(std::floor((k_max - k_min) / k_step + 1e-9)) + 1;
  double least = std::nan("");
  // Walk down from k_max; stop at the first grid point where a check fails.
  for (std::uint64_t i = count; i-- > 0;) {
    const double k = k_min + static_cast<double>(i) * k_step;
    bool ok = q1_minimal_at(p, k - 0.5, tolerance);
    for (std::uint32_t q = 1; ok && q < p; ++q) ok = decreasing_in_m_holds(p, q, k, samples);
    if (!ok) break;
    least = k;
  }
  return least;
}

double least_threshold_doubling(std::uint32_t p) {
  if (!is_prime(p) || p < 3) throw ValidationError("threshold doubling needs an odd prime");
  const double lp = std::log(static_cast<double>(p));
  // log_p(q R(K)) - m(p,q), minimized over q; increasing in K.
  auto slack = [&](double k) {
    double worst = HUGE_VAL;
    for (std::uint32_t q = 1; q < p; ++q) {
      worst = std::min(worst, (std::log(static_cast<double>(q)) + log_main_theorem_curve(p, k)) / lp -
                                  monotonicity_threshold(p, q));
    }
    return worst;
  };
  if (slack(1.0) >= 0) return 1.0;
  double a = 1.0, b = 2.0;
  while (slack(b) < 0) b *= 2;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    (slack(mid) < 0 ? a : b) = mid;
  }
  return b;
}

DenseSet extremal_set(std::uint32_t p, std::uint32_t q, std::uint32_t m) {
  require_q(p, q);
  require_m(m);
  const GroupParams g(p, m);
  DenseSet out(g);
  for (std::uint32_t k = 0; k <= q; ++k) out.insert(g.scale(k, g.unit(0)));
  for (std::uint32_t i = 1; i < m; ++i) out.insert(g.unit(i));
  return out;
}

}  // namespace frz
