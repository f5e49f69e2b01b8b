#include "bounds.hpp"

#include <cmath>
#include <sstream>

#include "core.hpp"

namespace tightpath {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::trivial: return "trivial";
    case BoundKind::kalai: return "kalai";
    case BoundKind::tight_path: return "tight_path";
    case BoundKind::perles: return "perles";
    case BoundKind::zigzag: return "zigzag";
    case BoundKind::stack_leading: return "stack_leading";
    case BoundKind::small_k: return "small_k";
    case BoundKind::odd_improved: return "odd_improved";
  }
  return "unknown";
}

BoundKind bound_kind_from_string(const std::string& name) {
  for (BoundKind kind : kAllBoundKinds) {
    if (to_string(kind) == name) return kind;
  }
  fail(ErrorKind::domain, "unknown bound kind '" + name + "'");
}

double BoundValue::approx() const {
  return boost::rational_cast<double>(rational) +
         boost::rational_cast<double>(coefficient) * std::sqrt(static_cast<double>(radicand));
}

std::string BoundValue::str() const {
  std::ostringstream out;
  out << rational;
  if (!is_rational()) out << " + " << coefficient << "*sqrt(" << radicand << ")";
  return out.str();
}

std::optional<std::string> bound_precondition_violation(BoundKind kind, int n, int r, int k) {
  if (r < 2) return "requires r >= 2";
  if (k < 1) return "requires k >= 1";
  if (n < r) return "requires n >= r";
  switch (kind) {
    case BoundKind::perles:
      if (r != 2) return "requires r = 2";
      break;
    case BoundKind::zigzag:
    case BoundKind::stack_leading:
      if (r % 2 != 0) return "requires even r";
      break;
    case BoundKind::small_k:
      if (k > r + 1) return "requires r >= k - 1";
      break;
    case BoundKind::odd_improved:
      if (r % 2 == 0) return "requires odd r >= 3";
      break;
    default:
      break;
  }
  return std::nullopt;
}

namespace {

// Splits m = t^2 * d with d square-free.
std::pair<long long, long long> split_square(long long m) {
  long long t = 1;
  if (m == 0) return {0, 0};
  for (long long p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      t *= p;
    }
  }
  return {t, m};
}

}  // namespace

BoundValue evaluate_bound(BoundKind kind, int n, int r, int k) {
  if (auto why = bound_precondition_violation(kind, n, r, k)) {
    fail(ErrorKind::domain, to_string(kind) + " bound " + *why);
  }
  const Rational c(binomial(n, r - 1));
  const long long km1 = k - 1;
  BoundValue out;
  switch (kind) {
    case BoundKind::trivial:
      out.rational = Rational(km1) * c;
      break;
    case BoundKind::kalai:
      out.rational = Rational(km1, r) * c;
      break;
    case BoundKind::tight_path:
      out.rational = r % 2 == 0 ? Rational(km1, 2) * c : Rational(k + km1 / r, 2) * c;
      break;
    case BoundKind::perles:
      out.rational = Rational(km1 * n, 2);
      break;
    case BoundKind::zigzag:
      out.rational = Rational(km1 * (r - 1), r) * c;
      break;
    case BoundKind::stack_leading:
      out.rational = Rational(km1 * (r - 1)) * c;
      break;
    case BoundKind::small_k:
      out.rational = Rational(static_cast<long long>(k) * k, 2LL * r) * c;
      break;
    case BoundKind::odd_improved: {
      // (sqrt(a) + sqrt(b))^2 = a + b + 2 sqrt(ab)
      const long long a = km1 / r;
      const long long b = (r - 1) * (km1 - a) / 2;
      const auto [t, d] = split_square(a * b);
      out.asymptotic_only = true;
      out.rational = Rational(a + b, r) * c;
      if (a * b == 0) break;
      if (d == 1) {
        out.rational += Rational(2 * t, r) * c;
      } else {
        out.coefficient = Rational(2 * t, r) * c;
        out.radicand = d;
      }
      break;
    }
  }
  return out;
}

nlohmann::json bound_table(int n, int r, int k) {
  nlohmann::json rows = nlohmann::json::array();
  for (BoundKind kind : kAllBoundKinds) {
    nlohmann::json row{{"kind", to_string(kind)}};
    if (auto why = bound_precondition_violation(kind, n, r, k)) {
      row["applicable"] = false;
      row["reason"] = *why;
    } else {
      const BoundValue v = evaluate_bound(kind, n, r, k);
      row["applicable"] = true;
      row["value"] = v.str();
      row["approx"] = v.approx();
      if (v.asymptotic_only) row["asymptotic_only"] = true;
    }
    rows.push_back(std::move(row));
  }
  return {{"n", n}, {"r", r}, {"k", k}, {"bounds", rows}};
}

}  // namespace tightpath
