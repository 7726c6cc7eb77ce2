#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace dbcohom {

// Exact scalar for structural identities (descent equations, nilpotency,
// Stokes). Metric-dependent operations use double instead; every operation
// declares which mode it expects.
using Rational = boost::multiprecision::cpp_rational;

// Unbounded integer for Smith normal form pivot arithmetic.
using BigInt = boost::multiprecision::cpp_int;

// Integer layers of Deligne-Beilinson cochains. A stored value w stands for
// the real number 2*pi*w. In rational mode the form layers are kept in the
// same 2*pi units so that the injection of the integer layer into constant
// functions is w -> w and all descent identities hold exactly; the 2*pi
// scale is applied only when converting to double-valued cochains or at I/O.
using IntCoeff = std::int64_t;

inline constexpr double two_pi = 6.283185307179586476925286766559;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline double abs_value(const Rational& q) { return std::abs(to_double(q)); }
inline double abs_value(double x) { return std::abs(x); }

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(double x) { return x == 0.0; }

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace dbcohom
