#include "metaprox/rates/sequences.hpp"

#include <algorithm>

#include "metaprox/errors.hpp"

namespace metaprox::rates {

RationalSequence RationalSequence::constant(Rational value) {
  return RationalSequence(Kind::Constant, {}, std::move(value), 0);
}

RationalSequence RationalSequence::reciprocal(Natural offset) {
  if (offset < 1) throw std::invalid_argument("reciprocal sequence needs offset >= 1");
  return RationalSequence(Kind::Reciprocal, {}, 0, std::move(offset));
}

RationalSequence RationalSequence::explicit_list(std::vector<Rational> values, Rational tail) {
  return RationalSequence(Kind::List, std::move(values), std::move(tail), 0);
}

RationalSequence RationalSequence::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ConfigError("sequence spec needs a kind prefix");
  const auto kind = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  if (kind == "const") return constant(parse_rational(body));
  if (kind == "reciprocal") return reciprocal(parse_natural(body));
  if (kind == "list") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos || body.substr(semi + 1, 5) != "tail=") {
      throw ConfigError("list sequence spec is list:q0,q1,...;tail=Q");
    }
    std::vector<Rational> values;
    std::string_view items = body.substr(0, semi);
    while (!items.empty()) {
      const auto comma = items.find(',');
      values.push_back(parse_rational(items.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      items.remove_prefix(comma + 1);
    }
    return explicit_list(std::move(values), parse_rational(body.substr(semi + 6)));
  }
  throw ConfigError("unknown sequence kind '" + std::string(kind) + "'");
}

std::string RationalSequence::spec() const {
  switch (kind_) {
    case Kind::Constant:
      return "const:" + to_string(tail_);
    case Kind::Reciprocal:
      return "reciprocal:" + to_string(offset_);
    case Kind::List: {
      std::string out = "list:";
      for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + to_string(values_[i]);
      return out + ";tail=" + to_string(tail_);
    }
  }
  return {};
}

Rational RationalSequence::at(const Natural& n) const {
  if (n < 0) throw std::invalid_argument("sequence index must be natural");
  switch (kind_) {
    case Kind::Constant:
      return tail_;
    case Kind::Reciprocal:
      return Rational(1, n + offset_);
    case Kind::List:
      if (n < Natural(static_cast<unsigned long>(values_.size()))) return values_[n.get_ui()];
      return tail_;
  }
  return tail_;
}

RationalSequence RationalSequence::shifted(const Natural& k) const {
  switch (kind_) {
    case Kind::Constant:
      return *this;
    case Kind::Reciprocal:
      return reciprocal(offset_ + k);
    case Kind::List: {
      if (k >= Natural(static_cast<unsigned long>(values_.size()))) return constant(tail_);
      const auto from = static_cast<std::ptrdiff_t>(k.get_ui());
      return explicit_list(std::vector<Rational>(values_.begin() + from, values_.end()), tail_);
    }
  }
  return *this;
}

Rational RationalSequence::prefix_max(const Natural& n, EvalBudget& budget) const {
  budget.charge();
  switch (kind_) {
    case Kind::Constant:
      return tail_;
    case Kind::Reciprocal:
      return at(0);
    case Kind::List: {
      const Natural size(static_cast<unsigned long>(values_.size()));
      Rational best = n >= size ? tail_ : values_.front();
      const std::size_t last = n >= size ? values_.size() : n.get_ui() + 1;
      for (std::size_t i = 0; i < last; ++i) best = max(best, values_[i]);
      return best;
    }
  }
  return tail_;
}

Rational RationalSequence::prefix_min(const Natural& n, EvalBudget& budget) const {
  budget.charge();
  switch (kind_) {
    case Kind::Constant:
      return tail_;
    case Kind::Reciprocal:
      return at(n);
    case Kind::List: {
      const Natural size(static_cast<unsigned long>(values_.size()));
      Rational best = n >= size ? tail_ : values_.front();
      const std::size_t last = n >= size ? values_.size() : n.get_ui() + 1;
      for (std::size_t i = 0; i < last; ++i) best = min(best, values_[i]);
      return best;
    }
  }
  return tail_;
}

bool RationalSequence::positive() const {
  if (kind_ == Kind::Reciprocal) return true;
  return tail_ > 0 && std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q > 0; });
}

bool RationalSequence::within_unit_interval() const {
  if (kind_ == Kind::Reciprocal) return true;
  auto ok = [](const Rational& q) { return q > 0 && q <= 1; };
  return ok(tail_) && std::all_of(values_.begin(), values_.end(), ok);
}

}  // namespace metaprox::rates
