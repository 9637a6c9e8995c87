#include "dpl/arithmetic.hpp"

#include <cmath>
#include <sstream>

namespace dpl {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw ArithmeticError("square root of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

const ArithmeticCase kCases[3] = {
    {ExceptionalCase::kOne, -4, true, 32, 9},
    {ExceptionalCase::kTwo, -4, false, 20, 6},
    {ExceptionalCase::kThree, 0, false, 8, 3},
};

}  // namespace

ExceptionalCase parse_case(const std::string& s) {
  if (s == "1") return ExceptionalCase::kOne;
  if (s == "2") return ExceptionalCase::kTwo;
  if (s == "3") return ExceptionalCase::kThree;
  throw ArithmeticError("case must be 1, 2 or 3, got '" + s + "'");
}

const ArithmeticCase& arithmetic_case(ExceptionalCase c) { return kCases[static_cast<int>(c) - 1]; }

PrimePower prime_power(std::int64_t q) {
  if (q < 2) throw ArithmeticError(std::to_string(q) + " is not a prime power");
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {q, q, 1};
  std::int64_t m = q;
  int k = 0;
  while (m % p == 0) m /= p, ++k;
  if (m != 1) throw ArithmeticError(std::to_string(q) + " is not a prime power");
  return {q, p, k};
}

bool is_prime_power(std::int64_t q) {
  try {
    prime_power(q);
    return true;
  } catch (const ArithmeticError&) {
    return false;
  }
}

std::vector<PrimePower> prime_powers_up_to(std::int64_t n) {
  if (n < 2) throw ArithmeticError("prime power scan needs N >= 2");
  // Sieve smallest prime factors, then keep the q whose cofactor chain is pure.
  std::vector<std::int64_t> spf(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j <= n; j += i)
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
  }
  std::vector<PrimePower> out;
  for (std::int64_t q = 2; q <= n; ++q) {
    const auto p = spf[static_cast<std::size_t>(q)];
    std::int64_t m = q;
    int k = 0;
    while (m % p == 0) m /= p, ++k;
    if (m == 1) out.push_back({q, p, k});
  }
  return out;
}

std::int64_t SqrtBound::ceil() const {
  if (b == 0) return a;
  if (b < 0) throw ArithmeticError("negative square-root coefficient");
  // ceil(b sqrt(q)) = ceil(sqrt(b^2 q)).
  const std::int64_t n = b * b * q;
  const std::int64_t r = isqrt(n);
  return a + (r * r == n ? r : r + 1);
}

std::string SqrtBound::str() const {
  if (b == 0) return std::to_string(a);
  const std::int64_t r = isqrt(q);
  if (r * r == q) return std::to_string(a + b * r);
  std::ostringstream os;
  os << a << "+" << b << "*sqrt(" << q << ")";
  return os.str();
}

std::int64_t min_surface_points(std::int64_t q, ExceptionalCase c) {
  prime_power(q);
  const auto& ac = arithmetic_case(c);
  std::int64_t n = q * q + q * ac.min_trace + 1;
  if (ac.minus_q) n -= q;
  return n;
}

SqrtBound ramification_point_bound(std::int64_t q, ExceptionalCase c, bool char2) {
  const auto pp = prime_power(q);
  if (char2 != (pp.p == 2)) {
    throw ArithmeticError("characteristic flag does not match q = " + std::to_string(q));
  }
  if (char2) return {2 * q + 1, 0, q};
  switch (c) {
    case ExceptionalCase::kOne:
      return {q + 2, 4, q};
    case ExceptionalCase::kTwo:
      return {q + 1, 4, q};
    case ExceptionalCase::kThree:
      return {2 * q + 2, 0, q};
  }
  throw ArithmeticError("unknown case");
}

std::int64_t off_ramification_lower_bound(std::int64_t q, ExceptionalCase c, bool char2) {
  // floor(m - (a + b sqrt q)) = m - ceil(a + b sqrt q).
  return min_surface_points(q, c) - ramification_point_bound(q, c, char2).ceil();
}

std::int64_t off_ramification_lower_bound(std::int64_t q, ExceptionalCase c) {
  return off_ramification_lower_bound(q, c, prime_power(q).p == 2);
}

int required_point_count(ExceptionalCase c) { return arithmetic_case(c).required_points; }

Threshold unirationality_threshold(ExceptionalCase c, std::int64_t horizon) {
  Threshold t;
  t.horizon = horizon;
  const auto qs = prime_powers_up_to(horizon);
  const int need = required_point_count(c);
  std::size_t first_good = 0;
  for (std::size_t i = 0; i < qs.size(); ++i)
    if (off_ramification_lower_bound(qs[i].q, c) < need) {
      t.last_failure = qs[i].q;
      first_good = i + 1;
    }
  if (first_good >= qs.size()) throw ArithmeticError("no passing prime power below the horizon");
  t.q0 = qs[first_good].q;
  // Within each characteristic branch the bound keeps growing from q = 5 on;
  // past the horizon the quadratic term dominates 4 sqrt(q).
  t.monotone = true;
  std::int64_t last_two = INT64_MIN, last_odd = INT64_MIN;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i].q < 5) continue;
    const auto v = off_ramification_lower_bound(qs[i].q, c);
    auto& last = qs[i].p == 2 ? last_two : last_odd;
    if (v < last) t.monotone = false;
    last = v;
  }
  return t;
}

std::vector<ArithRow> arithmetic_table(ExceptionalCase c, std::int64_t qmax) {
  std::vector<ArithRow> rows;
  for (const auto& pp : prime_powers_up_to(qmax)) {
    ArithRow r;
    r.q = pp;
    r.min_x = min_surface_points(pp.q, c);
    r.max_r = ramification_point_bound(pp.q, c, pp.p == 2);
    r.min_off_r = off_ramification_lower_bound(pp.q, c, pp.p == 2);
    r.required = required_point_count(c);
    r.ok = r.min_off_r >= r.required;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace dpl
