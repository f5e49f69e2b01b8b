#pragma once

// Closed-form upper bounds on extremal numbers, in exact arithmetic.
// C below is binomial(n, r-1).
//
//   trivial        (k-1) C
//   kalai          (k-1)/r C                          (conjectured)
//   tight_path     (k-1)/2 C for even r, (k + floor((k-1)/r))/2 C for odd r
//   perles         (k-1) n/2                          (r = 2)
//   zigzag         (k-1)(r-1)/r C                     (even r)
//   stack_leading  (k-1)(r-1) C                       (even r)
//   small_k        k^2/(2r) C                         (k <= r+1)
//   odd_improved   (sqrt(a) + sqrt(b))^2 / r C        (odd r >= 3, large n)
//                  a = floor((k-1)/r), b = (r-1)(k-1-a)/2

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

namespace tightpath {

using Rational = boost::rational<long long>;

enum class BoundKind {
  trivial,
  kalai,
  tight_path,
  perles,
  zigzag,
  stack_leading,
  small_k,
  odd_improved,
};

inline constexpr BoundKind kAllBoundKinds[] = {
    BoundKind::trivial, BoundKind::kalai,         BoundKind::tight_path, BoundKind::perles,
    BoundKind::zigzag,  BoundKind::stack_leading, BoundKind::small_k,    BoundKind::odd_improved,
};

std::string to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& name);

// value = rational + coefficient * sqrt(radicand). radicand is square-free,
// and coefficient is zero whenever the value is rational.
struct BoundValue {
  Rational rational{0};
  Rational coefficient{0};
  long long radicand = 0;
  bool asymptotic_only = false;

  bool is_rational() const { return coefficient == Rational(0); }
  double approx() const;
  std::string str() const;

  bool operator==(const BoundValue&) const = default;
};

// nullopt when (kind, n, r, k) is admissible, otherwise the violated
// precondition.
std::optional<std::string> bound_precondition_violation(BoundKind kind, int n, int r, int k);

// Throws Error(domain) naming the violated precondition.
BoundValue evaluate_bound(BoundKind kind, int n, int r, int k);

// One row per kind; inapplicable kinds carry their precondition message.
nlohmann::json bound_table(int n, int r, int k);

}  // namespace tightpath
