#include "ginipart/gini.hpp"

#include <stdexcept>
#include <string>

namespace ginipart {

namespace {

void require_positive_weight(const Partition& p, const char* op) {
    if (p.weight() < 1)
        throw std::domain_error(std::string(op) + ": weight-0 input");
}

void require_in_range(const Rational& x, std::int64_t n, const char* op) {
    if (x < 0 || x > n)
        throw std::domain_error(std::string(op) + ": x outside [0,n]");
}

// sum of the last k entries of the length-n padded view; only the final
// k - (n - l) entries are real parts, the rest are padding zeros
std::int64_t padded_tail_sum(const Partition& p, std::int64_t k) {
    const auto& parts = p.parts();
    const std::int64_t zeros = p.weight() - static_cast<std::int64_t>(parts.size());
    std::int64_t take = k - zeros;
    std::int64_t sum = 0;
    for (std::size_t i = parts.size(); i > 0 && take > 0; --i, --take)
        sum = checked_add(sum, parts[i - 1]);
    return sum;
}

}  // namespace

GiniValue gini(const Partition& p) {
    require_positive_weight(p, "gini");
    std::int64_t weighted_rows = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        weighted_rows = checked_add(
            weighted_rows, checked_mul(static_cast<std::int64_t>(i) + 1, parts[i]));
    return binom2(checked_add(p.weight(), 1)) - weighted_rows;
}

std::int64_t e2_direct(const Partition& p) {
    const auto& parts = p.parts();
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            sum = checked_add(sum, checked_mul(parts[i], parts[j]));
    return sum;
}

std::int64_t e2_binomial(const Partition& p) {
    require_positive_weight(p, "e2_binomial");
    std::int64_t row_sums = 0;
    for (std::int64_t part : p.parts())
        row_sums = checked_add(row_sums, binom2(part + 1));
    return binom2(checked_add(p.weight(), 1)) - row_sums;
}

std::int64_t lorenz(const Partition& p, const Rational& x) {
    require_in_range(x, p.weight(), "lorenz");
    const std::int64_t k = ceil_to_int(x);
    if (k == 0) return 0;
    return padded_tail_sum(p, k);
}

std::int64_t line_of_equality(const Rational& x, std::int64_t n) {
    require_in_range(x, n, "line_of_equality");
    return ceil_to_int(x);
}

GiniValue gini_via_integral(const Partition& p) {
    require_positive_weight(p, "gini_via_integral");
    const std::int64_t n = p.weight();
    const auto& parts = p.parts();
    const std::int64_t zeros = n - static_cast<std::int64_t>(parts.size());
    std::int64_t area = 0;
    std::int64_t tail = 0;  // running L(k): sum of the last k padded entries
    for (std::int64_t k = 1; k <= n; ++k) {
        if (k > zeros) tail = checked_add(tail, parts[static_cast<std::size_t>(n - k)]);
        area = checked_add(area, k - tail);
    }
    return area;
}

Rational normalized_gini(const Partition& p) {
    if (p.weight() < 2)
        throw std::domain_error("normalized_gini: weight below 2");
    Rational r(gini(p), binom2(p.weight()));
    r.canonicalize();
    return r;
}

Rational normalized_gini_euclidean(const Partition& p) {
    require_positive_weight(p, "normalized_gini_euclidean");
    Rational r(checked_mul(2, gini(p)), checked_mul(p.weight(), p.weight()));
    r.canonicalize();
    return r;
}

}  // namespace ginipart
