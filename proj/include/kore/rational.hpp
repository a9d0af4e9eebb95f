// Copyright 2026 The kore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KORE_RATIONAL_HPP
#define KORE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>

namespace kore {

/// Exact rational scalar (GMP-backed).  Every quantity on the primary
/// computation path is one of these; no floating point is used anywhere.
using Rational = boost::multiprecision::mpq_rational;

/// Dense rational matrix / column vector.  All linear-programming state
/// (constraint matrices, tableaux, certificates) lives in these types.
using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parse "p/q" or "p" (optionally signed) into a canonical rational.
///
/// The string constructor of the underlying type does not reduce to lowest
/// terms, so this is the only sanctioned way to read rationals from text.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Render a rational as "p/q", or "p" when the denominator is one.
/// Round-trips exactly through parse_rational.
std::string rational_to_string(const Rational& value);

}  // namespace kore

#endif  // KORE_RATIONAL_HPP
