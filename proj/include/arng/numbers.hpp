#pragma once

#include <cstdint>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "arng/errors.hpp"

namespace arng {

// Expression templates are disabled so the types behave as plain scalars
// inside Eigen expressions.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatI64 = Dense<std::int64_t>;
using MatZ = Dense<BigInt>;
using MatQ = Dense<Rational>;
using VecQ = DenseVec<Rational>;

/// (n)_len = n(n-1)...(n-len+1), with (n)_0 = 1. Exact.
BigInt falling_factorial(BigInt n, int len);

/// Same, but returns int64 and throws unsupported_range on overflow.
std::int64_t falling_factorial_i64(std::int64_t n, int len);

/// Cast that throws unsupported_range instead of truncating.
std::int64_t to_i64(const BigInt& v);

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace arng
