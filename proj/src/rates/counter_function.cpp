#include "metaprox/rates/counter_function.hpp"

#include <algorithm>
#include <sstream>

#include "metaprox/errors.hpp"

namespace metaprox::rates {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool fits_index(const Natural& n, std::size_t size) {
  return n < Natural(static_cast<unsigned long>(size));
}

}  // namespace

CounterFunction CounterFunction::constant(Natural c) {
  if (c < 0) throw std::invalid_argument("counter function values must be natural");
  return CounterFunction(Constant{std::move(c)});
}

CounterFunction CounterFunction::affine(Natural slope, Natural offset) {
  if (slope < 0 || offset < 0) throw std::invalid_argument("affine coefficients must be natural");
  return CounterFunction(Affine{std::move(slope), std::move(offset)});
}

CounterFunction CounterFunction::tabulated(std::vector<Natural> values, CounterFunction tail) {
  for (const auto& v : values) {
    if (v < 0) throw std::invalid_argument("counter function values must be natural");
  }
  return CounterFunction(
      Tabulated{std::move(values), std::make_shared<const CounterFunction>(std::move(tail))});
}

CounterFunction CounterFunction::composite(std::string name,
                                           std::function<Natural(const Natural&)> fn,
                                           bool nondecreasing) {
  return CounterFunction(Composite{std::move(name), std::move(fn), nondecreasing});
}

CounterFunction CounterFunction::parse(std::string_view spec) {
  const std::string_view text = trim(spec);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("counter function spec needs a kind prefix: '" + std::string(spec) + "'");
  }
  const std::string_view kind = trim(text.substr(0, colon));
  const std::string_view body = trim(text.substr(colon + 1));
  if (kind == "const") return constant(parse_natural(body));
  if (kind == "affine") {
    const auto parts = split(body, ',');
    if (parts.size() != 2) throw ConfigError("affine spec is affine:A,C");
    return affine(parse_natural(parts[0]), parse_natural(parts[1]));
  }
  if (kind == "table") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw ConfigError("table spec needs ';tail=SPEC'");
    const std::string_view list = trim(body.substr(0, semi));
    const std::string_view rest = trim(body.substr(semi + 1));
    if (rest.substr(0, 5) != "tail=") throw ConfigError("table spec needs ';tail=SPEC'");
    std::vector<Natural> values;
    if (!list.empty()) {
      for (auto item : split(list, ',')) values.push_back(parse_natural(item));
    }
    return tabulated(std::move(values), parse(rest.substr(5)));
  }
  throw ConfigError("unknown counter function kind '" + std::string(kind) + "'");
}

std::string CounterFunction::spec() const {
  return std::visit(
      Overloaded{
          [](const Constant& f) { return "const:" + to_string(f.value); },
          [](const Affine& f) { return "affine:" + to_string(f.slope) + "," + to_string(f.offset); },
          [](const Tabulated& f) {
            std::string out = "table:";
            for (std::size_t i = 0; i < f.values.size(); ++i) {
              if (i) out += ",";
              out += to_string(f.values[i]);
            }
            return out + ";tail=" + f.tail->spec();
          },
          [](const Composite& f) { return "composite:" + f.name; },
      },
      *impl_);
}

Natural CounterFunction::operator()(const Natural& n) const {
  return std::visit(
      Overloaded{
          [](const Constant& f) { return f.value; },
          [&](const Affine& f) { return Natural(f.slope * n + f.offset); },
          [&](const Tabulated& f) {
            if (fits_index(n, f.values.size())) return f.values[n.get_ui()];
            return (*f.tail)(n);
          },
          [&](const Composite& f) { return f.fn(n); },
      },
      *impl_);
}

Natural CounterFunction::eval(const Natural& n, EvalBudget& budget) const {
  budget.charge();
  return (*this)(n);
}

Natural CounterFunction::iterate(const Natural& k, Natural seed, EvalBudget& budget) const {
  if (k < 0) throw std::invalid_argument("iteration count must be natural");
  if (k == 0) return seed;
  if (const auto* c = std::get_if<Constant>(impl_.get())) {
    budget.charge();
    return c->value;
  }
  if (const auto* a = std::get_if<Affine>(impl_.get()); a && a->slope <= 1) {
    budget.charge();
    if (a->slope == 0) return a->offset;
    return seed + k * a->offset;
  }
  budget.charge(k);
  for (Natural i = 0; i < k; ++i) {
    seed = (*this)(seed);
    budget.check_size(seed);
  }
  return seed;
}

CounterFunction CounterFunction::shift(const Natural& c) const {
  if (c < 0) throw std::invalid_argument("shift must be natural");
  if (c == 0) return *this;
  return std::visit(
      Overloaded{
          [&](const Constant&) { return *this; },
          [&](const Affine& f) { return affine(f.slope, f.slope * c + f.offset); },
          [&](const Tabulated& f) {
            const CounterFunction tail = f.tail->shift(c);
            if (!fits_index(c, f.values.size())) return tail;
            const auto from = static_cast<std::ptrdiff_t>(c.get_ui());
            return tabulated(std::vector<Natural>(f.values.begin() + from, f.values.end()), tail);
          },
          [&](const Composite& f) {
            return composite(f.name + "+shift" + to_string(c),
                             [fn = f.fn, c](const Natural& n) { return fn(n + c); },
                             f.nondecreasing);
          },
      },
      *impl_);
}

CounterFunction CounterFunction::tilde() const {
  return std::visit(
      Overloaded{
          [](const Constant& f) { return affine(1, f.value); },
          [](const Affine& f) { return affine(f.slope + 1, f.offset); },
          [](const Tabulated& f) {
            std::vector<Natural> values(f.values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
              values[i] = f.values[i] + static_cast<unsigned long>(i);
            }
            return tabulated(std::move(values), f.tail->tilde());
          },
          [](const Composite& f) {
            return composite(f.name + "~", [fn = f.fn](const Natural& n) { return Natural(n + fn(n)); },
                             f.nondecreasing);
          },
      },
      *impl_);
}

bool CounterFunction::nondecreasing() const {
  return std::visit(
      Overloaded{
          [](const Constant&) { return true; },
          [](const Affine&) { return true; },
          [](const Tabulated& f) {
            if (!std::is_sorted(f.values.begin(), f.values.end())) return false;
            if (!f.tail->nondecreasing()) return false;
            return f.values.empty() ||
                   (*f.tail)(Natural(static_cast<unsigned long>(f.values.size()))) >= f.values.back();
          },
          [](const Composite& f) { return f.nondecreasing; },
      },
      *impl_);
}

Natural CounterFunction::majorant(const Natural& n, EvalBudget& budget) const {
  if (n < 0) throw std::invalid_argument("majorant argument must be natural");
  return range_max(0, n, budget);
}

Natural CounterFunction::range_max(const Natural& lo, const Natural& hi, EvalBudget& budget) const {
  if (lo > hi) throw std::invalid_argument("range_max needs lo <= hi");
  if (nondecreasing()) return eval(hi, budget);
  if (const auto* t = std::get_if<Tabulated>(impl_.get())) {
    const Natural size(static_cast<unsigned long>(t->values.size()));
    Natural best = -1;
    if (lo < size) {
      const Natural last = hi < size ? hi : Natural(size - 1);
      budget.charge(Natural(last - lo + 1));
      for (unsigned long i = lo.get_ui(); i <= last.get_ui(); ++i) best = max(best, t->values[i]);
    }
    if (hi >= size) best = max(best, t->tail->range_max(max(lo, size), hi, budget));
    return best;
  }
  budget.charge(Natural(hi - lo + 1));
  Natural best = (*this)(lo);
  for (Natural i = lo + 1; i <= hi; ++i) best = max(best, (*this)(i));
  return best;
}

}  // namespace metaprox::rates
