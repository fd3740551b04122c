#include "wheelramsey/bounds.hpp"

#include <stdexcept>

namespace wheelramsey {

namespace {

[[noreturn]] void domain(const std::string& what) { throw std::domain_error(what); }

bool even(int n) { return n % 2 == 0; }

}  // namespace

int cycle_ramsey_diag(int length) {
  if (length < 3) domain("cycle Ramsey number needs length >= 3, got " + std::to_string(length));
  if (!even(length)) return 2 * length - 1;
  if (length == 4) return 6;
  return 3 * length / 2 - 1;
}

BigInt tree_complete_ramsey(const BigInt& s, const BigInt& t) {
  if (s < 2 || t < 2) domain("tree/complete Ramsey number needs s, t >= 2");
  return (s - 1) * (t - 1) + 1;
}

BigInt cycle_complete_upper(int n, const BigInt& m) {
  if (n < 4) domain("cycle/complete bound needs n >= 4, got " + std::to_string(n));
  if (m < 2) domain("cycle/complete bound needs m >= 2");
  // m(m-1) is even, so the division is exact.
  return m + BigInt(n - 3) * m * (m - 1) / 2;
}

BoundReport two_color_wheel_bounds(int n, bool advisory) {
  const int floor_n = advisory ? 4 : 7;
  if (n < floor_n) domain("two-color wheel bracket needs n >= " + std::to_string(floor_n) + ", got " + std::to_string(n));
  BoundReport r;
  r.k = 2;
  r.n = n;
  r.advisory = n < 7;
  if (even(n)) {
    r.lower = 3 * n - 2;
    r.lower_tag = bound_tag::kEvenLower;
    r.upper = BigInt(6 * n - 6);
    r.upper_tag = bound_tag::kEvenUpper;
  } else {
    r.lower = 2 * n;
    r.lower_tag = bound_tag::kOddLower;
    r.upper = BigInt((9 * n - 7) / 2);
    r.upper_tag = bound_tag::kOddUpper;
  }
  if (r.advisory) r.notes.push_back("advisory: n below 7, formulas evaluated outside their proven range");
  return r;
}

BoundReport prior_two_color_wheel_bounds(int n) {
  if (n < 7) domain("prior two-color wheel bracket needs n >= 7, got " + std::to_string(n));
  BoundReport r;
  r.k = 2;
  r.n = n;
  if (even(n)) {
    r.lower = 3 * n - 3;
    r.lower_tag = bound_tag::kPriorEvenLower;
    r.upper = BigInt(8 * n - 10);
    r.upper_tag = bound_tag::kPriorEvenUpper;
  } else {
    r.lower = 2 * n - 2;
    r.lower_tag = bound_tag::kPriorOddLower;
    r.upper = BigInt(6 * n - 8);
    r.upper_tag = bound_tag::kPriorOddUpper;
  }
  return r;
}

BigInt k_color_wheel_lower(int k, int n) {
  if (k < 1) domain("number of colors must be >= 1, got " + std::to_string(k));
  if (n < 4) domain("wheel W_n needs n >= 4, got " + std::to_string(n));
  if (k == 1) return n;
  if (even(n)) return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(k - 1)) * (n - 1) + 1;
  return boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(k - 2)) * (2 * n - 1) + 1;
}

BigInt multicolor_upper_step(int k, int n, const BigInt& previous_upper) {
  if (k < 2) domain("multicolor recursion needs k >= 2, got " + std::to_string(k));
  // k (R(C_{n-1}, K_r) - 1) + 2 with the cycle/complete bound substituted;
  // equals k((n-3)/2 r(r-1) + r - 1) + 2.
  return k * (cycle_complete_upper(n, previous_upper) - 1) + 2;
}

BigInt k_color_wheel_upper(int k, int n, bool advisory) {
  if (k < 1) domain("number of colors must be >= 1, got " + std::to_string(k));
  if (n < (advisory ? 4 : 7)) domain("multicolor wheel upper bound needs n >= 7, got " + std::to_string(n));
  if (k == 1) return n;
  BigInt upper = *two_color_wheel_bounds(n, advisory).upper;
  for (int level = 3; level <= k; ++level) upper = multicolor_upper_step(level, n, upper);
  return upper;
}

BoundReport wheel_bound_report(int k, int n, bool advisory) {
  if (k < 1) domain("number of colors must be >= 1, got " + std::to_string(k));
  if (k == 1) {
    if (n < 4) domain("wheel W_n needs n >= 4, got " + std::to_string(n));
    BoundReport r;
    r.k = 1;
    r.n = n;
    r.lower = n;
    r.upper = BigInt(n);
    r.lower_tag = r.upper_tag = bound_tag::kSingleColor;
    return r;
  }
  BoundReport r = two_color_wheel_bounds(n, advisory);
  r.k = k;
  if (k == 2) return r;
  r.lower = k_color_wheel_lower(k, n);
  r.lower_tag = even(n) ? bound_tag::kBlowupEvenLower : bound_tag::kBlowupOddLower;
  r.upper = k_color_wheel_upper(k, n, advisory);
  r.upper_tag = bound_tag::kRecursiveUpper;
  r.notes.push_back("upper: valid under monotone substitution of the level-" + std::to_string(k - 1) +
                    " upper bound, recursion depth " + std::to_string(k - 2) + " above the two-color base");
  return r;
}

Rational epsilon_exponent(int n) {
  if (even(n)) {
    if (n < 4) domain("epsilon exponent needs even n >= 4, got " + std::to_string(n));
    return Rational(2, n - 2);
  }
  if (n < 5) domain("epsilon exponent needs odd n >= 5, got " + std::to_string(n));
  return Rational(2, n - 3);
}

const std::vector<KnownValue>& known_values() {
  static const std::vector<KnownValue> catalog = {
      {"R(K3,K3)", 6, 6, "classical"},
      {"R(W5,W5)", 15, 15, "exact value for the 5-vertex wheel"},
      {"R(W6,W6)", 17, 17, "exact value for the 6-vertex wheel"},
      {"R(K4,K4)", 18, 18, "classical"},
      {"R3(K3)", 17, 17, "three-color triangle"},
      {"R4(K3)", 42, 66, "four-color triangle bracket"},
  };
  return catalog;
}

const KnownValue& known_value(const std::string& quantity) {
  for (const KnownValue& v : known_values())
    if (v.quantity == quantity) return v;
  throw std::out_of_range("no catalog entry for " + quantity);
}

int triangle_wheel_ramsey(int n) {
  if (n < 6) domain("R(K3, W_n) = 2n-1 is known for n >= 6, got " + std::to_string(n));
  return 2 * n - 1;
}

}  // namespace wheelramsey
