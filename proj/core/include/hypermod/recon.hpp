#pragma once

#include <optional>
#include <vector>

#include "hypermod/exactnum.hpp"
#include "hypermod/real.hpp"

namespace hypermod {

struct RationalGuess {
  BigRational value;
  /// Distance from the input to the nearest other rational with denominator ≤ D, in units of err.
  Real confidence;
  bool found = false;
};

/// Simplest rational in [lo, hi] (smallest denominator, then smallest numerator magnitude).
BigRational simplest_rational_between(const BigRational& lo, const BigRational& hi);

/// Farey neighbours of p/q among fractions with denominator ≤ D.
std::pair<BigRational, BigRational> farey_neighbours(const BigRational& x, const BigInt& max_den);

/// The unique rational with denominator ≤ D within err of x whose nearest competitor is at
/// least 10³·err away; found = false otherwise.
RationalGuess reconstruct_rational(const Real& x, const Real& err, const BigInt& max_den);

struct QuadraticBounds {
  long max_denominator = 1000;
  long max_numerator = 1000;
  Real tolerance = Real(1e-30);
};

struct QuadraticCoefficient {
  BigRational u;
  BigRational v;
  long d = 1;
  Real residual;
  bool found = false;
};

/// Searches x = (u + v√d)·y with u, v of bounded height; one-sided solutions first.
QuadraticCoefficient reconstruct_quadratic_coefficient(const Real& x, const Real& y, long d,
                                                       const QuadraticBounds& bounds);
/// Tries d in order and returns the first success.
QuadraticCoefficient find_quadratic_coefficient(const Real& x, const Real& y,
                                                const std::vector<long>& ds,
                                                const QuadraticBounds& bounds);

struct QuadraticRelation {
  BigInt a;
  BigInt b;
  BigInt c;
  BigInt discriminant() const { return b * b - 4 * a * c; }
};

/// Smallest-height (A, B, C) with |Aτ² + Bτ + C| ≤ tolerance and B² − 4AC < 0, A ≤ height.
std::optional<QuadraticRelation> minimal_quadratic_relation(const Complex& tau, long height,
                                                            const Real& tolerance);

}  // namespace hypermod
