#ifndef DSET_ORDINAL_HPP
#define DSET_ORDINAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dset {

using BigInt = boost::multiprecision::cpp_int;

struct OrdinalTerm;

/// An ordinal below epsilon_0 in Cantor normal form
/// w^{e1}*c1 + ... + w^{ek}*ck with e1 > ... > ek and ci >= 1.
///
/// Values are immutable once built; every constructor canonicalises.
class Ordinal {
 public:
  Ordinal() = default;  // zero
  Ordinal(std::uint64_t n);  // NOLINT(google-explicit-constructor): finite ordinals read naturally

  static Ordinal omega();
  /// w^{exponent} * coefficient; coefficient 0 yields zero.
  static Ordinal omega_power(const Ordinal& exponent, const BigInt& coefficient = 1);
  /// Builds from raw terms, validating the CNF invariants.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  bool is_zero() const;
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;  // nonzero and not a successor
  /// Finite value; throws if infinite or too large for 64 bits.
  std::uint64_t to_finite() const;
  /// Immediate predecessor of a successor ordinal.
  Ordinal predecessor() const;
  /// Splits alpha = limit_part + n with n finite.
  Ordinal limit_part() const;
  BigInt finite_part() const;

  std::string to_string() const;
  static Ordinal parse(const std::string& text);

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  BigInt coefficient;
};

enum class Cmp { less, equal, greater };

Cmp ord_compare(const Ordinal& a, const Ordinal& b);
Ordinal ord_add(const Ordinal& a, const Ordinal& b);
/// max(items) + 1; throws DomainError("empty supremum") on an empty list.
Ordinal ord_sup_plus_one(std::span<const Ordinal> items);
Ordinal ord_max(const Ordinal& a, const Ordinal& b);
/// The unique xi with n + xi = alpha when n <= alpha, otherwise zero.
Ordinal ord_left_subtract(std::uint64_t n, const Ordinal& alpha);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }

/// Either an ordinal or the distinguished "unbounded" value standing for w_1.
/// Only divergence detectors produce the unbounded state; arithmetic never does.
class RankValue {
 public:
  RankValue(Ordinal value) : value_(std::move(value)) {}  // NOLINT
  static RankValue unbounded() { return RankValue(); }

  bool is_unbounded() const { return unbounded_; }
  const Ordinal& value() const;
  std::string to_string() const { return unbounded_ ? "w_1" : value_.to_string(); }

 private:
  RankValue() : unbounded_(true) {}
  Ordinal value_;
  bool unbounded_ = false;
};

}  // namespace dset

#endif
