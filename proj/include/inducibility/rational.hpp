#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace inducibility {

/// Exact scalar: arbitrary-precision rational backed by GMP.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

template <typename Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

/// Parses "a", "-a", "a/b" or a finite decimal "12.375" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

inline double to_double(double x) { return x; }

template <typename Scalar>
Scalar from_rational(const Rational& q) {
  if constexpr (is_exact_v<Scalar>) {
    return q;
  } else {
    return static_cast<Scalar>(to_double(q));
  }
}

/// Falling factorial (n)_k = n (n-1) ... (n-k+1); zero when k > n.
std::int64_t falling_factorial(std::int64_t n, int k);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

Integer pow(const Integer& base, unsigned exponent);

}  // namespace inducibility
