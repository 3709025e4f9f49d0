#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "metaprox/rates/numbers.hpp"

namespace metaprox::rates {

/// A total function N -> N, used as the counterexample function g of a
/// metastability statement. Immutable; copies share structure.
///
/// Grammar (see parse()):
///   const:C                      n -> C
///   affine:A,C                   n -> A*n + C
///   table:v0,v1,...;tail=SPEC    n -> v_n inside the table, SPEC(n) past it
class CounterFunction {
 public:
  struct Constant {
    Natural value;
  };
  struct Affine {
    Natural slope;
    Natural offset;
  };
  struct Tabulated {
    std::vector<Natural> values;
    std::shared_ptr<const CounterFunction> tail;  // evaluated at the absolute index
  };
  struct Composite {
    std::string name;
    std::function<Natural(const Natural&)> fn;
    bool nondecreasing = false;
  };
  using Variant = std::variant<Constant, Affine, Tabulated, Composite>;

  static CounterFunction constant(Natural c);
  static CounterFunction affine(Natural slope, Natural offset);
  static CounterFunction identity() { return affine(1, 0); }
  /// An empty table is allowed and behaves as its tail.
  static CounterFunction tabulated(std::vector<Natural> values, CounterFunction tail);
  /// Wraps an arbitrary total function. nondecreasing is a promise the
  /// caller makes; it lets majorants skip the prefix scan.
  static CounterFunction composite(std::string name, std::function<Natural(const Natural&)> fn,
                                   bool nondecreasing);

  /// Throws ConfigError on malformed text.
  static CounterFunction parse(std::string_view spec);
  /// Canonical spec text; composites render as "composite:<name>", which parse() rejects.
  std::string spec() const;

  Natural operator()(const Natural& n) const;
  Natural eval(const Natural& n, EvalBudget& budget) const;

  /// The k-fold iterate applied to seed; each step is charged to the budget
  /// except where a closed form exists.
  Natural iterate(const Natural& k, Natural seed, EvalBudget& budget) const;

  /// n -> f(n + c)
  CounterFunction shift(const Natural& c) const;
  /// n -> n + f(n)
  CounterFunction tilde() const;

  /// max_{i <= n} f(i)
  Natural majorant(const Natural& n, EvalBudget& budget) const;
  /// max_{lo <= i <= hi} f(i); requires lo <= hi.
  Natural range_max(const Natural& lo, const Natural& hi, EvalBudget& budget) const;

  bool nondecreasing() const;

  const Variant& variant() const { return *impl_; }

 private:
  explicit CounterFunction(Variant v) : impl_(std::make_shared<const Variant>(std::move(v))) {}

  std::shared_ptr<const Variant> impl_;
};

}  // namespace metaprox::rates
