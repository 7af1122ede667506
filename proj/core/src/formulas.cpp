#include "kipas/formulas.hpp"

#include <algorithm>

#include "kipas/errors.hpp"

namespace kipas {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::string args(int a, int b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

bool small_branch(int k, int n) { return 2 * (k - 1) <= n && n <= 4 * (k - 2) + 1; }

}  // namespace

ValueOrInterval ValueOrInterval::interval(std::int64_t lo, std::int64_t hi, std::string caveat) {
  if (lo > hi) throw DomainError("interval lower bound exceeds upper bound");
  return {lo, hi, std::move(caveat)};
}

std::string to_string(const ValueOrInterval& v) {
  if (v.exact()) return "exact " + std::to_string(v.lo);
  return "interval " + std::to_string(v.lo) + " " + (v.hi == kUnbounded ? std::string("inf") : std::to_string(v.hi));
}

ValueOrInterval r_path_path(int n, int m) {
  if (m < 2 || m > n) throw DomainError("r_path_path" + args(n, m) + " needs 2 <= m <= n");
  return ValueOrInterval::exact_value(n + m / 2 - 1);
}

ValueOrInterval r_linear_forests(int size1, int odd1, int size2, int odd2) {
  auto check = [](int size, int odd, const char* which) {
    if (size < 2) throw DomainError(std::string(which) + ": a linear forest with components of order >= 2 has >= 2 vertices");
    if (odd < 0 || odd > size)
      throw DomainError(std::string(which) + ": odd-component count exceeds the forest order");
    if (odd > size / 2)
      throw DomainError(std::string(which) + ": more odd components than components of order >= 2 allow");
    if ((size - odd) % 2 != 0) throw DomainError(std::string(which) + ": order and odd-component count disagree in parity");
  };
  check(size1, odd1, "first forest");
  check(size2, odd2, "second forest");
  const std::int64_t a = size1 + floor_div(size2 - odd2, 2) - 1;
  const std::int64_t b = size2 + floor_div(size1 - odd1, 2) - 1;
  return ValueOrInterval::exact_value(std::max(a, b));
}

ValueOrInterval r_path_star(int m, int n, bool trust_upper) {
  if (m < 2 || n < 2) throw DomainError("r_path_star" + args(m, n) + " needs m, n >= 2");
  if (trust_upper) return ValueOrInterval::exact_value(m + n - 1);
  return ValueOrInterval::interval(m + n - 2, m + n - 1,
                                   "published branch condition holds for every n; value not pinned");
}

ValueOrInterval r_star_star(int n, int m) {
  if (m < 2 || n < 2) throw DomainError("r_star_star" + args(n, m) + " needs m, n >= 2");
  const bool both_even = n % 2 == 0 && m % 2 == 0;
  return ValueOrInterval::exact_value(both_even ? m + n - 1 : m + n);
}

ValueOrInterval r_path_kipas(int n, int m) {
  if (m < 2 || n < 2) throw DomainError("r_path_kipas" + args(n, m) + " needs m, n >= 2");
  if (m <= 2 * n - 1) {
    const std::int64_t v = std::max<std::int64_t>({2LL * n - 1, ceil_div(3LL * m, 2) - 1, 2LL * (m / 2) + n - 2});
    return ValueOrInterval::exact_value(v);
  }
  if (n >= 4) return ValueOrInterval::interval(2 * n - 1, m + n - 1, "upper bound only");
  throw DomainError("r_path_kipas" + args(n, m) + ": m > 2n-1 with n < 4 is not covered");
}

ValueOrInterval r_star_kipas(int n, int m) {
  if (m < 2 || n < 2) throw DomainError("r_star_kipas" + args(n, m) + " needs m, n >= 2");
  if (m >= 2 * n) {
    const bool both_even = n % 2 == 0 && m % 2 == 0;
    return ValueOrInterval::exact_value(both_even ? m + n - 1 : m + n);
  }
  const int half = m / 2;
  const bool both_even = m % 2 == 0 && half % 2 == 0;
  return ValueOrInterval::exact_value(both_even ? 2 * n + half - 1 : 2 * n + half);
}

ValueOrInterval r_kipas_linear_family(int n, int m, int min_component) {
  if (min_component == 2) {
    if (m < 2 || 2 * m > n) throw DomainError("r_kipas_linear_family" + args(n, m) + " needs 2 <= m <= n/2");
  } else if (min_component == 3) {
    if (m < 6 || 2 * m > n) throw DomainError("r_kipas_linear_family" + args(n, m) + " needs 6 <= m <= n/2");
  } else {
    throw DomainError("minimum component order must be 2 or 3");
  }
  return ValueOrInterval::exact_value(n + ceil_div(m, 2));
}

ValueOrInterval bk_path(int k, int n) {
  if (k < 3) throw DomainError("bk_path needs k >= 3");
  if (n < 2 * (k - 1)) throw DomainError("bk_path" + args(k, n) + " needs n >= 2(k-1)");
  if (n <= 4 * (k - 2) + 1) return ValueOrInterval::exact_value(n);
  return ValueOrInterval::exact_value(ceil_div(3LL * n - 3, 2));
}

ValueOrInterval t_path(int n) {
  if (n < 3) throw DomainError("t_path needs n >= 3");
  return ValueOrInterval::exact_value(n % 2 == 0 ? 3 * n / 2 - 1 : (3 * n - 1) / 2);
}

ValueOrInterval b3_kipas(int n) {
  const std::int64_t top = 5LL * n / 2;
  if (n == 2 || n == 3) return ValueOrInterval::exact_value(top);
  if (n < 5) throw DomainError("b3_kipas is not determined for n = " + std::to_string(n));
  if (n % 2 == 1) return ValueOrInterval::exact_value(top);
  return ValueOrInterval::interval(top - 1, top);
}

ValueOrInterval t_kipas_upper(int n) {
  if (n < 5) throw DomainError("t_kipas_upper needs n >= 5");
  const std::int64_t top = 5LL * n / 2;
  return ValueOrInterval::interval(1, n % 2 == 1 ? top : top - 1, "upper bound only");
}

ValueOrInterval gr_p5_path(int k, int n) {
  if (k < 4 || n < k) throw DomainError("gr_p5_path" + args(k, n) + " needs n >= k >= 4");
  if (n < 2 * (k - 1))
    throw DomainError("gr_p5_path" + args(k, n) + ": the strip k <= n < 2(k-1) has no stated value");
  if (small_branch(k, n)) return ValueOrInterval::exact_value(n + 1);
  return ValueOrInterval::exact_value(ceil_div(3LL * n - 3, 2));
}

ValueOrInterval gr_p4plus_path(int k, int n) {
  if (k < 4 || n < k) throw DomainError("gr_p4plus_path" + args(k, n) + " needs n >= k >= 4");
  if (n < 2 * (k - 1))
    throw DomainError("gr_p4plus_path" + args(k, n) + ": the strip k <= n < 2(k-1) has no stated value");
  if (small_branch(k, n)) return ValueOrInterval::exact_value(k == 4 ? n + 2 : n);
  return ValueOrInterval::exact_value(ceil_div(3LL * n - 3, 2));
}

ValueOrInterval gr_k13_path(int k, int n) {
  if (k == 3) {
    if (n < 4) throw DomainError("gr_k13_path(3, n) needs n >= 4");
    return t_path(n);
  }
  if (k < 3) throw DomainError("gr_k13_path needs k >= 3");
  if (n < 2 * (k - 1)) throw DomainError("gr_k13_path" + args(k, n) + " needs n >= 2(k-1) for k >= 4");
  if (small_branch(k, n)) return ValueOrInterval::exact_value(n);
  return ValueOrInterval::exact_value(ceil_div(3LL * n - 3, 2));
}

ValueOrInterval gr3_k13_kipas(int n) { return b3_kipas(n); }

}  // namespace kipas
