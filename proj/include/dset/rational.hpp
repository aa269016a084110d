#ifndef DSET_RATIONAL_HPP
#define DSET_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace dset {

using Rational = boost::rational<std::int64_t>;

// "p/q" or "p"; the inverse of parse_rational.
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);

inline Rational abs(const Rational& q) { return q < 0 ? -q : q; }

}  // namespace dset

#endif
