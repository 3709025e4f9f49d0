#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "metaprox/rates/numbers.hpp"

namespace metaprox::rates {

/// An exact sequence of positive rationals: the step-size majorant and the
/// weight minorant of a rate computation.
///
/// Grammar: "const:Q", "reciprocal:K" (n -> 1/(n+K)), "list:q0,q1,...;tail=Q".
class RationalSequence {
 public:
  static RationalSequence constant(Rational value);
  static RationalSequence reciprocal(Natural offset);
  static RationalSequence explicit_list(std::vector<Rational> values, Rational tail);

  static RationalSequence parse(std::string_view spec);
  std::string spec() const;

  Rational at(const Natural& n) const;

  /// n -> at(n + k)
  RationalSequence shifted(const Natural& k) const;

  /// max / min over indices 0..n, using the closed form of the kind.
  Rational prefix_max(const Natural& n, EvalBudget& budget) const;
  Rational prefix_min(const Natural& n, EvalBudget& budget) const;

  /// Whether every term lies in (0, 1].
  bool within_unit_interval() const;
  bool positive() const;

 private:
  enum class Kind { Constant, Reciprocal, List };

  RationalSequence(Kind kind, std::vector<Rational> values, Rational tail, Natural offset)
      : kind_(kind), values_(std::move(values)), tail_(std::move(tail)), offset_(std::move(offset)) {}

  Kind kind_;
  std::vector<Rational> values_;
  Rational tail_;
  Natural offset_;
};

}  // namespace metaprox::rates
