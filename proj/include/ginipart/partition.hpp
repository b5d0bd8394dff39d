#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ginipart/numeric.hpp"

namespace ginipart {

/* An integer partition: weakly decreasing positive parts with a cached
 * weight. Trailing zeros are stripped on construction; zero-padding back
 * out is a view (padded()), never stored, so equality and hashing stay
 * canonical. The empty partition (weight 0) is a legal value everywhere.
 */
class Partition {
public:
    Partition() = default;

    /// Validates and normalizes: strips trailing zeros, then requires the
    /// remaining entries to be weakly decreasing and strictly positive.
    explicit Partition(std::vector<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    std::int64_t weight() const noexcept { return weight_; }
    std::size_t part_count() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Row i (0-based) of the zero-padded view; 0 beyond the last part.
    std::int64_t part(std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// Parts followed by zeros to reach exactly `length` entries.
    /// length must be at least part_count().
    std::vector<std::int64_t> padded(std::size_t length) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
    std::int64_t weight_ = 0;
};

/// Run-length form: parts strictly decreasing across entries.
struct RepeatedForm {
    struct Entry {
        std::int64_t part = 0;
        std::int64_t multiplicity = 0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;

    friend bool operator==(const RepeatedForm&, const RepeatedForm&) = default;
};

/// Reflection of the Young diagram across its main diagonal.
Partition conjugate(const Partition& p);

RepeatedForm to_repeated_form(const Partition& p);
Partition from_repeated_form(const RepeatedForm& form);

/* Range over all partitions of n in descending lexicographic order of
 * part sequences: (n) first, (1^n) last. n = 0 yields exactly the empty
 * partition. A pure generator; iterators share no state.
 */
class partition_range {
public:
    explicit partition_range(std::int64_t n);

    class const_iterator {
    public:
        using value_type = std::vector<std::int64_t>;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        const value_type& operator*() const noexcept { return parts_; }
        const value_type* operator->() const noexcept { return &parts_; }
        const_iterator& operator++();
        const_iterator operator++(int);

        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            if (a.done_ || b.done_) return a.done_ == b.done_;
            return a.parts_ == b.parts_;
        }

    private:
        friend class partition_range;
        std::vector<std::int64_t> parts_;
        bool done_ = false;
    };

    const_iterator begin() const;
    const_iterator end() const;

private:
    std::int64_t n_;
};

/// Every partition of n, materialized in enumeration order.
std::vector<Partition> enumerate_partitions(std::int64_t n);

/// P(0..upto) by Euler's pentagonal-number recurrence, exact at all sizes.
std::vector<BigInt> partition_count_table(std::int64_t upto);

/// P(n); independent of enumerate_partitions.
BigInt count_partitions(std::int64_t n);

inline constexpr std::int64_t default_node_budget = 1'000'000;

/// Throws budget_error (naming the needed budget) when P(n) > max_nodes.
void check_node_budget(std::int64_t n, std::int64_t max_nodes, std::string_view context);

/// Bracket form, e.g. "[4,3,1,1]"; the empty partition is "[]".
std::string to_string(const Partition& p);

/// Parses bracket form with optional whitespace. Throws std::invalid_argument
/// on malformed text; entry validation errors come from the Partition ctor.
Partition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace ginipart
