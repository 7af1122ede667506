#pragma once

#include <cstdint>
#include <string>

namespace kipas {

// Upper end of an interval that is not bounded.
inline constexpr std::int64_t kUnbounded = INT64_MAX;

// An exact value (lo == hi) or a closed interval where only bounds are known.
struct ValueOrInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::string caveat;

  static ValueOrInterval exact_value(std::int64_t v) { return {v, v, {}}; }
  static ValueOrInterval interval(std::int64_t lo, std::int64_t hi, std::string caveat = {});

  bool exact() const { return lo == hi; }

  friend bool operator==(const ValueOrInterval& a, const ValueOrInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// "exact <v>" or "interval <lo> <hi>" (hi printed as "inf" when unbounded).
std::string to_string(const ValueOrInterval& v);

// Classical two-color Ramsey numbers used as building blocks.
ValueOrInterval r_path_path(int n, int m);
ValueOrInterval r_linear_forests(int size1, int odd_components1, int size2, int odd_components2);
// Path versus star. The published condition cannot select a branch, so without
// `trust_upper` the result is the interval [m+n-2, m+n-1].
ValueOrInterval r_path_star(int m, int n, bool trust_upper = false);
ValueOrInterval r_star_star(int n, int m);
ValueOrInterval r_path_kipas(int n, int m);
ValueOrInterval r_star_kipas(int n, int m);
// Kipas versus the family of linear forests with at least m edges whose
// components have order >= min_component (2 or 3).
ValueOrInterval r_kipas_linear_family(int n, int m, int min_component);

// Family-restricted thresholds.
ValueOrInterval bk_path(int k, int n);
ValueOrInterval t_path(int n);
ValueOrInterval b3_kipas(int n);
ValueOrInterval t_kipas_upper(int n);

// Gallai-Ramsey numbers with a rainbow P_5, P_4^+ or K_{1,3} forbidden.
ValueOrInterval gr_p5_path(int k, int n);
ValueOrInterval gr_p4plus_path(int k, int n);
ValueOrInterval gr_k13_path(int k, int n);
ValueOrInterval gr3_k13_kipas(int n);

}  // namespace kipas
