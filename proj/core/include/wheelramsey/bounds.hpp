#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wheelramsey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Machine-readable formula identifiers attached to every bound value.
namespace bound_tag {
inline constexpr const char* kSingleColor = "single-color-order";
inline constexpr const char* kEvenLower = "two-color-even-lower";
inline constexpr const char* kEvenUpper = "two-color-even-upper";
inline constexpr const char* kOddLower = "two-color-odd-lower";
inline constexpr const char* kOddUpper = "two-color-odd-upper";
inline constexpr const char* kPriorEvenLower = "prior-even-lower";
inline constexpr const char* kPriorEvenUpper = "prior-even-upper";
inline constexpr const char* kPriorOddLower = "prior-odd-lower";
inline constexpr const char* kPriorOddUpper = "prior-odd-upper";
inline constexpr const char* kBlowupEvenLower = "blowup-even-lower";
inline constexpr const char* kBlowupOddLower = "blowup-odd-lower";
inline constexpr const char* kRecursiveUpper = "multicolor-recursive-upper";
}  // namespace bound_tag

struct BoundReport {
  int k = 2;
  int n = 0;
  BigInt lower;
  std::string lower_tag;
  std::optional<BigInt> upper;  // nullopt = unbounded
  std::string upper_tag;
  std::vector<std::string> notes;
  bool advisory = false;  // n outside the range where the two-color bracket is proven
};

// Diagonal cycle Ramsey number R(C_l, C_l): 2l-1 for odd l, 6 for l = 4,
// 3l/2 - 1 for even l >= 6.
int cycle_ramsey_diag(int length);

// R(T_s, K_t) = (s-1)(t-1)+1 for any tree on s vertices.
BigInt tree_complete_ramsey(const BigInt& s, const BigInt& t);

// Upper bound m + (n-3) m (m-1) / 2 on R(C_{n-1}, K_m), n >= 4, m >= 2.
BigInt cycle_complete_upper(int n, const BigInt& m);

// Two-color wheel bracket for n >= 7: [3n-2, 6n-6] (even), [2n, (9n-7)/2]
// (odd). With `advisory`, 4 <= n <= 6 evaluates the same formulas and flags
// the report as outside the proven range.
BoundReport two_color_wheel_bounds(int n, bool advisory = false);

// The earlier bracket [3n-3, 8n-10] (even), [2n-2, 6n-8] (odd), n >= 7.
BoundReport prior_two_color_wheel_bounds(int n);

// k-color lower bound: n for k = 1, else 3^{k-1}(n-1)+1 (even) or
// 2^{k-2}(2n-1)+1 (odd). n >= 4.
BigInt k_color_wheel_lower(int k, int n);

// One step of the multicolor recursion with an upper bound r on
// R_{k-1}(W_n) substituted: k((n-3)/2 r(r-1) + r - 1) + 2. Non-decreasing in r.
BigInt multicolor_upper_step(int k, int n, const BigInt& previous_upper);

// Upper bound on R_k(W_n): n for k = 1, the two-color bracket for k = 2,
// then multicolor_upper_step applied to the previous level.
BigInt k_color_wheel_upper(int k, int n, bool advisory = false);

BoundReport wheel_bound_report(int k, int n, bool advisory = false);

// Exponent 2/(n-2) (even n >= 4) or 2/(n-3) (odd n >= 5) of the asymptotic
// multicolor recursion. Documentation value only.
Rational epsilon_exponent(int n);

struct KnownValue {
  std::string quantity;
  BigInt lower;
  BigInt upper;  // equal to lower when the value is exact
  std::string note;
  bool exact() const { return lower == upper; }
};

const std::vector<KnownValue>& known_values();
const KnownValue& known_value(const std::string& quantity);

// R(K3, W_n) = 2n - 1, n >= 6.
int triangle_wheel_ramsey(int n);

}  // namespace wheelramsey
