#include "metaprox/rates/numbers.hpp"

#include <cctype>
#include <sstream>

#include "metaprox/errors.hpp"

namespace metaprox::rates {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw ConfigError("not an exact number: '" + std::string(text) + "'");
}

Natural pow10(unsigned long e) {
  Natural out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

}  // namespace

Natural ceil(const Rational& q) {
  Natural out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Natural parse_natural(std::string_view text) {
  if (!all_digits(text)) throw ConfigError("not a natural number: '" + std::string(text) + "'");
  return Natural(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    const Natural d(std::string{den}, 10);
    if (d == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    value = Rational(Natural(std::string{num}, 10), d);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    long scale = 0;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      const auto whole = s.substr(0, dot);
      const auto frac = s.substr(dot + 1);
      if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
          (!frac.empty() && !all_digits(frac))) {
        bad_number(text);
      }
      digits = std::string(whole) + std::string(frac);
      scale = static_cast<long>(frac.size());
    } else {
      if (!all_digits(s)) bad_number(text);
      digits = std::string(s);
    }
    value = Rational(Natural(digits, 10));
    const long shift = exponent - scale;
    if (shift > 0) {
      value *= Rational(pow10(static_cast<unsigned long>(shift)));
    } else if (shift < 0) {
      value /= Rational(pow10(static_cast<unsigned long>(-shift)));
    }
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Natural& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void EvalBudget::charge(std::uint64_t n) {
  if (n > remaining()) {
    used_ = limit_;
    std::ostringstream os;
    os << "evaluation budget of " << limit_ << " exhausted";
    throw BudgetExceeded(os.str());
  }
  used_ += n;
}

void EvalBudget::require(const Natural& n) const {
  if (n > Natural(static_cast<unsigned long>(remaining()))) {
    std::ostringstream os;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    os << "evaluation budget of " << limit_ << " (" << remaining()
       << " left) cannot cover an iteration count of ";
    if (bits <= 96) {
      os << n.get_str();
    } else {
      os << "about 2^" << bits;
    }
    throw BudgetExceeded(os.str());
  }
}

void EvalBudget::check_size(const Natural& v) const {
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  if (bits > max_bits_) {
    std::ostringstream os;
    os << "intermediate value of about 2^" << bits << " exceeds the " << max_bits_ << "-bit limit";
    throw BudgetExceeded(os.str());
  }
}

void EvalBudget::charge(const Natural& n) {
  require(n);
  charge(static_cast<std::uint64_t>(n.get_ui()));
}

}  // namespace metaprox::rates
