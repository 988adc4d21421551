#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace eqnv {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Parses "p" or "p/q" (q > 0) into an exact rational. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical serialization: "p" when the denominator is 1, else "p/q"
/// with q > 0 and the fraction fully reduced.
std::string to_string(const Rat& value);

bool is_integer(const Rat& value);

/// floor/ceil with exact integer results.
Int floor_int(const Rat& value);
Int ceil_int(const Rat& value);

/// Point, weight, or linear functional with exact rational coordinates.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t dim) : coords_(dim) {}
  RatVec(std::initializer_list<Rat> xs) : coords_(xs) {}
  explicit RatVec(std::vector<Rat> xs) : coords_(std::move(xs)) {}

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }

  friend bool operator==(const RatVec& a, const RatVec& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rat> coords_;
};

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rat& scalar, const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);

/// Lexicographic order; used everywhere a deterministic ordering is needed.
bool lex_less(const RatVec& a, const RatVec& b);

bool is_integral(const RatVec& v);
bool is_zero(const RatVec& v);

/// Sup-norm max_i |v_i|; rational, hence exact.
Rat sup_norm(const RatVec& v);

/// "(p, q, ...)" with canonical rational entries.
std::string to_string(const RatVec& v);

RatVec zero_vector(std::size_t dim);

}  // namespace eqnv
