#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ginipart/numeric.hpp"
#include "ginipart/partition.hpp"

namespace ginipart {

/* Sparse polynomial in q: exponent -> coefficient, coefficients unbounded
 * positive integers, no zero coefficient ever stored. Terms iterate in
 * ascending exponent order.
 */
class QPolynomial {
public:
    using TermMap = std::map<std::int64_t, BigInt>;

    QPolynomial() = default;

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Accumulates coeff onto the exponent's coefficient; no-op for 0.
    void add_term(std::int64_t exponent, const BigInt& coeff);

    /// Coefficient of q^exponent, 0 if absent.
    const BigInt& coefficient(std::int64_t exponent) const;

    /// Value at q = 1.
    BigInt coefficient_sum() const;

    /// (exponent, coefficient) of the largest coefficient; ties resolved
    /// to the smallest exponent. Requires a nonzero polynomial.
    std::pair<std::int64_t, BigInt> dominant_term() const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    TermMap terms_;
};

/* Coefficients of x^1..x^N of the truncated product
 *
 *     prod_{k=1..N} 1/(1 - q^{C(k+1,2)} x^k)  -  1,
 *
 * each factor expanded as its geometric series (factor k contributes the
 * floor(N/k)+1 terms with x-degree <= N) and multiplied in one at a time,
 * discarding x-powers above N. Entry [n] is the x^n coefficient; entry [0]
 * is unused and empty. Exponents are guarded to fit 64 bits.
 */
std::vector<QPolynomial> expand_product(std::int64_t max_xdeg);

/// The x^n coefficient assembled by direct enumeration: sum over all
/// partitions p of n of q^{C(n+1,2) - g(p)}. Throws budget_error when
/// P(n) > max_nodes.
QPolynomial direct_coefficient(std::int64_t n, std::int64_t max_nodes = default_node_budget);

/// Per-n table: gini value -> number of partitions of n attaining it.
struct GiniProfile {
    std::int64_t n = 0;
    std::map<std::int64_t, BigInt> counts;

    friend bool operator==(const GiniProfile&, const GiniProfile&) = default;
};

/// Transforms an x^n coefficient into a GiniProfile via
/// g = C(n+1,2) - exponent. Throws std::invalid_argument when an exponent
/// falls outside [n, C(n+1,2)].
GiniProfile gini_profile(std::int64_t n, const QPolynomial& source);

/// b(n): the size of the largest gini level set on the partitions of n,
/// read off as the largest coefficient in the x^n term of the product.
BigInt level_set_max(std::int64_t n);

/// One coefficient as JSON: {"n":4,"terms":[[4,1],[5,1],[6,1],[7,1],[10,1]]},
/// exponent-ascending. Byte-stable.
std::string coefficient_json(std::int64_t n, const QPolynomial& coeff);

/// CSV rows "n,g,count" in ascending g, with optional header line.
void write_profile_csv(std::ostream& os, const GiniProfile& profile, bool header = true);

}  // namespace ginipart
