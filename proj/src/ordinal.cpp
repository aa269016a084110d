#include "dset/ordinal.hpp"

#include "dset/error.hpp"
#include "dset/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace dset {

// ---------------------------------------------------------------------------
// Rational text form (kept here; it is the only other scalar type).

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    std::int64_t p = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    std::int64_t q = std::stoll(den, &used);
    if (used != den.size() || q == 0) throw std::invalid_argument(text);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw DomainError("bad rational", "cannot parse '" + text + "'");
  }
}

// ---------------------------------------------------------------------------

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back(OrdinalTerm{Ordinal(), BigInt(n)});
}

bool Ordinal::is_zero() const { return terms_.empty(); }

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, const BigInt& coefficient) {
  Ordinal out;
  if (coefficient < 0) throw DomainError("bad ordinal", "negative coefficient");
  if (coefficient != 0) out.terms_.push_back(OrdinalTerm{exponent, coefficient});
  return out;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw DomainError("bad ordinal", "coefficients must be >= 1");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw DomainError("bad ordinal", "exponents must be strictly decreasing");
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool Ordinal::is_finite() const { return terms_.empty() || terms_.front().exponent.is_zero(); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

bool Ordinal::is_limit() const { return !terms_.empty() && !is_successor(); }

std::uint64_t Ordinal::to_finite() const {
  if (terms_.empty()) return 0;
  if (!is_finite()) throw DomainError("not finite", to_string());
  const BigInt& c = terms_.front().coefficient;
  if (c > std::numeric_limits<std::uint64_t>::max()) throw DomainError("not finite", "too large");
  return static_cast<std::uint64_t>(c);
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw DomainError("no predecessor", to_string());
  Ordinal out = *this;
  if (out.terms_.back().coefficient == 1)
    out.terms_.pop_back();
  else
    out.terms_.back().coefficient -= 1;
  return out;
}

Ordinal Ordinal::limit_part() const {
  Ordinal out = *this;
  if (out.is_successor()) out.terms_.pop_back();
  return out;
}

BigInt Ordinal::finite_part() const { return is_successor() ? terms_.back().coefficient : BigInt(0); }

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    const auto& t = terms_[i];
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += "w^{" + t.exponent.to_string() + "}";
    if (t.coefficient != 1) out += "*" + t.coefficient.str();
  }
  return out;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(const std::string& text) : s_(text) {}

  Ordinal parse_all() {
    Ordinal o = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return o;
  }

 private:
  Ordinal parse_sum() {
    std::vector<OrdinalTerm> terms;
    for (;;) {
      terms.push_back(parse_term());
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '+') {
        ++pos_;
        continue;
      }
      break;
    }
    if (terms.size() == 1 && terms[0].coefficient == 0) return Ordinal();
    return Ordinal::from_terms(std::move(terms));
  }

  OrdinalTerm parse_term() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'w') {
      ++pos_;
      Ordinal exponent(1);
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        expect('{');
        exponent = parse_sum();
        skip_ws();
        expect('}');
      }
      BigInt coefficient = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        coefficient = parse_number();
      }
      return {exponent, coefficient};
    }
    return {Ordinal(), parse_number()};
  }

  BigInt parse_number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("bad ordinal", what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(const std::string& text) { return OrdinalParser(text).parse_all(); }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (auto c = ta.exponent <=> tb.exponent; c != 0) return c;
    if (ta.coefficient != tb.coefficient)
      return ta.coefficient < tb.coefficient ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

Cmp ord_compare(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Cmp::less;
  if (c > 0) return Cmp::greater;
  return Cmp::equal;
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<OrdinalTerm> out;
  for (const auto& t : a.terms()) {
    if (t.exponent < lead) break;
    out.push_back(t);
  }
  auto rest = b.terms().begin();
  if (!out.empty() && out.back().exponent == lead) {
    out.back().coefficient += rest->coefficient;
    ++rest;
  }
  out.insert(out.end(), rest, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal ord_max(const Ordinal& a, const Ordinal& b) { return a < b ? b : a; }

Ordinal ord_sup_plus_one(std::span<const Ordinal> items) {
  if (items.empty()) throw DomainError("empty supremum", "ord_sup_plus_one needs at least one ordinal");
  Ordinal best = items.front();
  for (const auto& o : items) best = ord_max(best, o);
  return best + Ordinal(1);
}

Ordinal ord_left_subtract(std::uint64_t n, const Ordinal& alpha) {
  if (!alpha.is_finite()) return alpha;
  std::uint64_t v = alpha.to_finite();
  return v >= n ? Ordinal(v - n) : Ordinal();
}

const Ordinal& RankValue::value() const {
  if (unbounded_) throw DomainError("unbounded", "rank is w_1");
  return value_;
}

}  // namespace dset
