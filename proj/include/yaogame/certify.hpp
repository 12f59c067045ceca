#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "yaogame/game.hpp"
#include "yaogame/types.hpp"

namespace yaogame {

enum class CertificateKind { yao_bound, sufficient, necessary, saddle };

inline std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::yao_bound: return "yao_bound";
    case CertificateKind::sufficient: return "sufficient";
    case CertificateKind::necessary: return "necessary";
    default: return "saddle";
  }
}

/// Outcome of one optimality check over a (matrix, f, g) triple.
struct Certificate {
  CertificateKind kind;
  bool passed;
  double witnessed_constant;  // the common value the check equalizes around
  double max_deviation;
  double tolerance;
  Labels f_support;
  Labels g_support;
  std::string details;
};

namespace detail {

inline double spread(const std::vector<double>& values, const std::vector<std::size_t>& over) {
  double lo = values[over.front()], hi = lo;
  for (std::size_t i : over) {
    lo = std::min(lo, values[i]);
    hi = std::max(hi, values[i]);
  }
  return hi - lo;
}

inline std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace detail

/// min_s U_g(s): the competitive-ratio lower bound certified by the
/// randomized input g. Valid against every randomized algorithm.
inline double yao_lower_bound(const RatioMatrix& r, const MixedStrategy& g) {
  std::vector<double> u = expected_ratio_u_all(r, g);
  return *std::min_element(u.begin(), u.end());
}

/// Passes when V_f is constant over ALL inputs and U_g is constant over ALL
/// strategies, each within tol. The two probability-weighted means then agree
/// and witness the game value, certifying f optimal.
inline Certificate check_sufficient(const RatioMatrix& r, const MixedStrategy& f,
                                    const MixedStrategy& g, double tol) {
  std::vector<double> u = expected_ratio_u_all(r, g);
  std::vector<double> v = expected_ratio_v_all(r, f);

  double spread_u = detail::spread(u, detail::all_indices(u.size()));
  double spread_v = detail::spread(v, detail::all_indices(v.size()));
  double c1 = 0.0;  // f-weighted mean of U_g
  for (std::size_t s = 0; s < u.size(); ++s) c1 += f.weight(s) * u[s];
  double c2 = 0.0;  // g-weighted mean of V_f
  for (std::size_t p = 0; p < v.size(); ++p) c2 += g.weight(p) * v[p];

  double max_dev = std::max(spread_u, spread_v);
  bool passed = spread_u <= tol && spread_v <= tol && std::abs(c1 - c2) <= tol;

  std::ostringstream details;
  details << "U_g spread " << detail::fmt(spread_u) << " over all " << u.size()
          << " strategies; V_f spread " << detail::fmt(spread_v) << " over all " << v.size()
          << " inputs; |C1-C2| = " << detail::fmt(std::abs(c1 - c2));
  if (!passed) {
    details << "; " << (spread_v > tol ? "V_f is not constant" : "U_g is not constant");
  }
  return Certificate{CertificateKind::sufficient, passed, (c1 + c2) / 2.0,
                     max_dev,  tol,    f.support_labels(),
                     g.support_labels(), details.str()};
}

/// Passes when U_g is constant on support(f) and V_f is constant on
/// support(g), each within tol. Also reports how far min_s U_g(s) and
/// max_p V_f(p) sit from H(f,g); nonzero slack there means the pair is not a
/// tight optimum even if the support constancy holds.
inline Certificate check_necessary(const RatioMatrix& r, const MixedStrategy& f,
                                   const MixedStrategy& g, double tol) {
  std::vector<double> u = expected_ratio_u_all(r, g);
  std::vector<double> v = expected_ratio_v_all(r, f);
  double h = bilinear_value_h(r, f, g);

  double spread_u = detail::spread(u, f.support());
  double spread_v = detail::spread(v, g.support());
  double chain_lower = std::abs(*std::min_element(u.begin(), u.end()) - h);
  double chain_upper = std::abs(*std::max_element(v.begin(), v.end()) - h);

  bool passed = spread_u <= tol && spread_v <= tol;
  std::ostringstream details;
  details << "U_g spread " << detail::fmt(spread_u) << " on support(f); V_f spread "
          << detail::fmt(spread_v) << " on support(g); |min_s U_g - H| = "
          << detail::fmt(chain_lower) << "; |max_p V_f - H| = " << detail::fmt(chain_upper);
  if (chain_lower > tol || chain_upper > tol) {
    details << "; pair is not a tight optimum";
  }
  return Certificate{CertificateKind::necessary, passed, h, std::max(spread_u, spread_v),
                     tol,     f.support_labels(), g.support_labels(), details.str()};
}

/// Passes when f is a best response to g and g is a best response to f, i.e.
/// H(f,g) <= min_s U_g(s) + tol and H(f,g) >= max_p V_f(p) - tol. On pass the
/// lower bound of g is tight at the witnessed constant H(f,g).
inline Certificate certify_saddle(const RatioMatrix& r, const MixedStrategy& f,
                                  const MixedStrategy& g, double tol) {
  std::vector<double> u = expected_ratio_u_all(r, g);
  std::vector<double> v = expected_ratio_v_all(r, f);
  double h = bilinear_value_h(r, f, g);
  double min_u = *std::min_element(u.begin(), u.end());
  double max_v = *std::max_element(v.begin(), v.end());

  double dev_f = h - min_u;  // positive when some row improves on f
  double dev_g = max_v - h;  // positive when some column improves on g
  bool f_best = dev_f <= tol;
  bool g_best = dev_g <= tol;

  std::ostringstream details;
  details << "H = " << detail::fmt(h) << "; min_s U_g = " << detail::fmt(min_u)
          << "; max_p V_f = " << detail::fmt(max_v);
  if (!f_best) details << "; f is not a best response to g";
  if (!g_best) details << "; g is not a best response to f";

  return Certificate{CertificateKind::saddle,
                     f_best && g_best,
                     h,
                     std::max({dev_f, dev_g, 0.0}),
                     tol,
                     f.support_labels(),
                     g.support_labels(),
                     details.str()};
}

/// max_p V_f(p) - min_s U_g(s): distance from strong duality, never below
/// zero up to rounding.
inline double gap(const RatioMatrix& r, const MixedStrategy& f, const MixedStrategy& g) {
  std::vector<double> u = expected_ratio_u_all(r, g);
  std::vector<double> v = expected_ratio_v_all(r, f);
  return *std::max_element(v.begin(), v.end()) - *std::min_element(u.begin(), u.end());
}

}  // namespace yaogame
