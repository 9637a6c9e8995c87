#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpl/lattice.hpp"

namespace dpl {

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// The three configurations that may stay minimal: a lone A1 (1), an A2 with
/// conjugate roots (2), four conjugate A1 points (3).
enum class ExceptionalCase { kOne = 1, kTwo = 2, kThree = 3 };

ExceptionalCase parse_case(const std::string& s);  // "1", "2", "3"

struct ArithmeticCase {
  ExceptionalCase label;
  int min_trace;           // least Frobenius trace allowed
  bool minus_q;            // true when #X can lose a further q against the resolution
  int free_curves;         // free (-1)-curves on the resolution
  int required_points;     // rational points needed off the ramification curve
};

const ArithmeticCase& arithmetic_case(ExceptionalCase c);

struct PrimePower {
  std::int64_t q = 0;
  std::int64_t p = 0;  // characteristic
  int k = 0;
};

/// Throws ArithmeticError unless q = p^k with p prime and k >= 1.
PrimePower prime_power(std::int64_t q);
bool is_prime_power(std::int64_t q);
std::vector<PrimePower> prime_powers_up_to(std::int64_t n);

/// a + b * sqrt(q), kept symbolic.
struct SqrtBound {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t q = 0;
  /// Least integer >= the bound.
  std::int64_t ceil() const;
  /// Exact when q is a square or b == 0; otherwise "a+b*sqrt(q)".
  std::string str() const;
};

/// Least possible #X(F_q): q^2 + q * min_trace + 1, less q in case 1.
std::int64_t min_surface_points(std::int64_t q, ExceptionalCase c);

/// Largest possible #R(F_q) for the ramification curve. char2 must match q.
SqrtBound ramification_point_bound(std::int64_t q, ExceptionalCase c, bool char2);

/// floor(min_surface_points - ramification_point_bound), computed in integers.
std::int64_t off_ramification_lower_bound(std::int64_t q, ExceptionalCase c, bool char2);

int required_point_count(ExceptionalCase c);

/// Off-ramification bound evaluated with the characteristic q actually has.
std::int64_t off_ramification_lower_bound(std::int64_t q, ExceptionalCase c);

struct Threshold {
  std::int64_t q0 = 0;             // least prime power from which every q passes
  std::int64_t last_failure = 0;   // largest failing prime power (0 if none)
  std::int64_t horizon = 0;
  /// Nondecreasing in q within each characteristic for q >= 5, over the scan.
  bool monotone = false;
};

Threshold unirationality_threshold(ExceptionalCase c, std::int64_t horizon = 1000000);

struct ArithRow {
  PrimePower q;
  std::int64_t min_x = 0;
  SqrtBound max_r;
  std::int64_t min_off_r = 0;
  int required = 0;
  bool ok = false;
};

std::vector<ArithRow> arithmetic_table(ExceptionalCase c, std::int64_t qmax);

}  // namespace dpl
