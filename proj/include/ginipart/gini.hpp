#pragma once

#include <cstdint>

#include "ginipart/numeric.hpp"
#include "ginipart/partition.hpp"

namespace ginipart {

/// Unnormalized Gini value in whole area units; lies in [0, C(n,2)].
using GiniValue = std::int64_t;

/// g(p) = C(n+1,2) - sum_i i*p_i over the length-n padded view. Weight >= 1.
GiniValue gini(const Partition& p);

/// Second elementary symmetric polynomial of the parts, as the literal
/// sum over unordered pairs. Total on every partition.
std::int64_t e2_direct(const Partition& p);

/// e2 via the binomial identity C(n+1,2) - sum_i C(p_i+1,2). Weight >= 1.
std::int64_t e2_binomial(const Partition& p);

/// Lorenz curve of p at x in [0,n]: 0 at x=0, else the sum of the last
/// ceil(x) entries of the length-n padded view.
std::int64_t lorenz(const Partition& p, const Rational& x);

/// The line of equality y = ceil(x), for x in [0,n].
std::int64_t line_of_equality(const Rational& x, std::int64_t n);

/// g(p) as the exact area between the line of equality and the Lorenz
/// curve: the integrand is constant on each (k-1,k], so the integral is
/// sum_{k=1..n} (k - L(k)). Weight >= 1.
GiniValue gini_via_integral(const Partition& p);

/// g(p) / C(n,2), in lowest terms. Weight >= 2.
Rational normalized_gini(const Partition& p);

/// 2*g(p) / n^2, in lowest terms. Weight >= 1.
Rational normalized_gini_euclidean(const Partition& p);

}  // namespace ginipart
