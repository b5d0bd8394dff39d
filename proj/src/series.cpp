#include "ginipart/series.hpp"

#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ginipart/gini.hpp"

namespace ginipart {

void QPolynomial::add_term(std::int64_t exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

const BigInt& QPolynomial::coefficient(std::int64_t exponent) const {
    static const BigInt zero = 0;
    auto it = terms_.find(exponent);
    return it == terms_.end() ? zero : it->second;
}

BigInt QPolynomial::coefficient_sum() const {
    BigInt sum = 0;
    for (const auto& [exponent, coeff] : terms_) sum += coeff;
    return sum;
}

std::pair<std::int64_t, BigInt> QPolynomial::dominant_term() const {
    if (terms_.empty())
        throw std::domain_error("dominant_term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (it->second > best->second) best = it;
    return {best->first, best->second};
}

std::vector<QPolynomial> expand_product(std::int64_t max_xdeg) {
    if (max_xdeg < 1)
        throw std::invalid_argument("expand_product: max_xdeg must be positive");
    const std::int64_t N = max_xdeg;
    binom2(N + 1);  // largest exponent that can appear; throws if it overflows

    std::vector<QPolynomial> coeff(static_cast<std::size_t>(N) + 1);
    coeff[0].add_term(0, 1);
    for (std::int64_t k = 1; k <= N; ++k) {
        const std::int64_t step = binom2(k + 1);
        // multiply by 1 + q^step x^k + q^{2 step} x^{2k} + ...; descending
        // x-degrees so every read sees the pre-factor value
        for (std::int64_t d = N; d >= k; --d) {
            auto& target = coeff[static_cast<std::size_t>(d)];
            for (std::int64_t m = 1; m * k <= d; ++m) {
                const std::int64_t shift = m * step;
                for (const auto& [e, c] : coeff[static_cast<std::size_t>(d - m * k)].terms())
                    target.add_term(e + shift, c);
            }
        }
    }
    coeff[0] = QPolynomial();  // the product's constant term; the -1 removes it
    return coeff;
}

QPolynomial direct_coefficient(std::int64_t n, std::int64_t max_nodes) {
    if (n < 1)
        throw std::invalid_argument("direct_coefficient: n must be positive");
    check_node_budget(n, max_nodes, "direct_coefficient");
    const std::int64_t top = binom2(n + 1);
    QPolynomial out;
    for (const auto& parts : partition_range(n))
        out.add_term(top - gini(Partition(parts)), 1);
    return out;
}

GiniProfile gini_profile(std::int64_t n, const QPolynomial& source) {
    if (n < 1)
        throw std::invalid_argument("gini_profile: n must be positive");
    const std::int64_t top = binom2(n + 1);
    GiniProfile profile;
    profile.n = n;
    for (const auto& [exponent, coeff] : source.terms()) {
        if (exponent < n || exponent > top)
            throw std::invalid_argument("gini_profile: exponent " + std::to_string(exponent) +
                                        " outside [" + std::to_string(n) + ", " +
                                        std::to_string(top) + "]");
        profile.counts.emplace(top - exponent, coeff);
    }
    return profile;
}

BigInt level_set_max(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("level_set_max: n must be positive");
    return expand_product(n)[static_cast<std::size_t>(n)].dominant_term().second;
}

std::string coefficient_json(std::int64_t n, const QPolynomial& coeff) {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"terms\":[";
    bool first = true;
    for (const auto& [exponent, c] : coeff.terms()) {
        if (!first) os << ',';
        first = false;
        os << '[' << exponent << ',' << c << ']';
    }
    os << "]}";
    return os.str();
}

void write_profile_csv(std::ostream& os, const GiniProfile& profile, bool header) {
    if (header) os << "n,g,count\n";
    for (const auto& [g, count] : profile.counts)
        os << profile.n << ',' << g << ',' << count << '\n';
}

}  // namespace ginipart
