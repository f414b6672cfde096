// Bond-incident-degree indices R_f(T) = sum over edges of f(d_u, d_v) for a
// symmetric f, the Sombor edge weight, and the exchange condition
//   f(x,a) + f(y,b) >= f(y,a) + f(x,b)   for all x >= y, a >= b
// (strict when x > y and a > b) that drives the extremality of the greedy
// and alternating greedy trees.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/tree.hpp"

namespace sombor {

inline double sombor_edge(int x, int a) {
  return std::sqrt(static_cast<double>(x) * x + static_cast<double>(a) * a);
}

// Named symmetric function on positive integer degree pairs. Construction
// runs a symmetry smoke test on a small grid and rejects asymmetric inputs.
class EdgeFunction {
 public:
  EdgeFunction(std::string name, std::function<double(int, int)> eval,
               int symmetry_grid = 20, double tol = 1e-9)
      : name_(std::move(name)), eval_(std::move(eval)) {
    for (int x = 1; x <= symmetry_grid; ++x) {
      for (int a = x; a <= symmetry_grid; ++a) {
        if (std::abs(eval_(x, a) - eval_(a, x)) > tol)
          throw Error(errc::asymmetric_function,
                      "'" + name_ + "' is not symmetric at (" + std::to_string(x) + "," +
                          std::to_string(a) + ")");
      }
    }
  }

  double operator()(int x, int a) const { return eval_(x, a); }
  const std::string& name() const { return name_; }

  static const EdgeFunction& sombor() {
    static const EdgeFunction f("sombor", [](int x, int a) { return sombor_edge(x, a); });
    return f;
  }
  static const EdgeFunction& minus_sombor() {
    static const EdgeFunction f("minus_sombor", [](int x, int a) { return -sombor_edge(x, a); });
    return f;
  }
  static const EdgeFunction& product() {
    static const EdgeFunction f("product",
                                [](int x, int a) { return static_cast<double>(x) * a; });
    return f;
  }
  static const EdgeFunction& sum() {
    static const EdgeFunction f("sum",
                                [](int x, int a) { return static_cast<double>(x) + a; });
    return f;
  }

  static const EdgeFunction* find(const std::string& name) {
    for (const EdgeFunction* f : {&sombor(), &minus_sombor(), &product(), &sum()})
      if (f->name() == name) return f;
    return nullptr;
  }

  static std::vector<std::string> catalog_names() {
    return {"sombor", "minus_sombor", "product", "sum"};
  }

  // c1*f1 + c2*f2; symmetry is inherited and re-checked at construction.
  static EdgeFunction affine(double c1, const EdgeFunction& f1, double c2,
                             const EdgeFunction& f2) {
    std::ostringstream name;
    name << c1 << "*" << f1.name() << "+" << c2 << "*" << f2.name();
    auto e1 = f1.eval_;
    auto e2 = f2.eval_;
    return EdgeFunction(name.str(),
                        [c1, c2, e1, e2](int x, int a) { return c1 * e1(x, a) + c2 * e2(x, a); });
  }

 private:
  std::string name_;
  std::function<double(int, int)> eval_;
};

inline double rf_index(const Tree& t, const EdgeFunction& f) {
  double total = 0.0;
  for (const Edge& e : t.edges()) total += f(t.degree(e.u), t.degree(e.v));
  return total;
}

struct ConditionReport {
  bool holds = true;
  bool strict_holds = true;
  // Lexicographically smallest (x,y,a,b) violating the weak inequality, or,
  // when only strictness fails, the smallest quadruple with a slack margin.
  std::optional<std::array<int, 4>> witness;
  int grid_max = 0;
};

// Scans f(x,a)+f(y,b) >= f(y,a)+f(x,b) over 1 <= y <= x <= grid_max,
// 1 <= b <= a <= grid_max. Strictness requires a margin above tol whenever
// x > y and a > b. Violations are data, not errors.
inline ConditionReport check_exchange_condition(const EdgeFunction& f, int grid_max,
                                                double tol = 1e-9) {
  if (grid_max < 2) throw Error(errc::invalid_argument, "grid_max must be at least 2");
  ConditionReport report;
  report.grid_max = grid_max;
  std::optional<std::array<int, 4>> strict_witness;
  for (int x = 1; x <= grid_max && report.holds; ++x) {
    for (int y = 1; y <= x && report.holds; ++y) {
      for (int a = 1; a <= grid_max && report.holds; ++a) {
        for (int b = 1; b <= a; ++b) {
          const double lhs = f(x, a) + f(y, b);
          const double rhs = f(y, a) + f(x, b);
          if (lhs < rhs - tol) {
            report.holds = false;
            report.witness = {x, y, a, b};
            break;
          }
          if (x > y && a > b && lhs - rhs <= tol && !strict_witness)
            strict_witness = {{x, y, a, b}};
        }
      }
    }
  }
  report.strict_holds = report.holds && !strict_witness;
  if (report.holds && strict_witness) report.witness = strict_witness;
  return report;
}

// The algebraic reduction of the condition for the (minus) Sombor weight:
// (a^2 - b^2)(x^2 - y^2) >= 0, evaluated in exact integer arithmetic.
inline bool sombor_condition_closed_form(long long x, long long y, long long a, long long b) {
  return (a * a - b * b) * (x * x - y * y) >= 0;
}

}  // namespace sombor
