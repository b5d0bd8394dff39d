#include "ginipart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <string>

namespace ginipart {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition: negative part");
        if (parts_[i] == 0)
            throw std::invalid_argument("partition: zero before a nonzero part");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        weight_ = checked_add(weight_, parts_[i]);
    }
}

std::vector<std::int64_t> Partition::padded(std::size_t length) const {
    if (length < parts_.size())
        throw std::invalid_argument("padded: length below part count");
    std::vector<std::int64_t> out(parts_);
    out.resize(length, 0);
    return out;
}

Partition conjugate(const Partition& p) {
    const auto& parts = p.parts();
    if (parts.empty()) return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(parts[0]), 0);
    std::int64_t rows_seen = 0;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        rows_seen += static_cast<std::int64_t>(j - i);
        // columns in (next run's value, this run's value] all have this height
        const std::int64_t lower = j < parts.size() ? parts[j] : 0;
        for (std::int64_t col = parts[i]; col > lower; --col)
            out[static_cast<std::size_t>(col - 1)] = rows_seen;
        i = j;
    }
    return Partition(std::move(out));
}

RepeatedForm to_repeated_form(const Partition& p) {
    RepeatedForm form;
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        form.entries.push_back({parts[i], static_cast<std::int64_t>(j - i)});
        i = j;
    }
    return form;
}

Partition from_repeated_form(const RepeatedForm& form) {
    std::vector<std::int64_t> parts;
    for (const auto& entry : form.entries) {
        if (entry.multiplicity <= 0)
            throw std::invalid_argument("repeated form: multiplicity must be positive");
        for (std::int64_t m = 0; m < entry.multiplicity; ++m)
            parts.push_back(entry.part);
    }
    return Partition(std::move(parts));
}

partition_range::partition_range(std::int64_t n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("partition_range: negative n");
}

partition_range::const_iterator& partition_range::const_iterator::operator++() {
    auto& a = parts_;
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == 1) --i;
    if (i == 0) {
        a.clear();
        done_ = true;
        return *this;
    }
    --i;
    // decrement the last part above 1, then refill greedily with parts
    // capped at its new value: the descending-lex successor
    const std::int64_t cap = a[i] - 1;
    std::int64_t surplus = static_cast<std::int64_t>(a.size() - i);
    a.resize(i);
    a.push_back(cap);
    for (std::int64_t q = surplus / cap; q > 0; --q) a.push_back(cap);
    if (surplus % cap != 0) a.push_back(surplus % cap);
    return *this;
}

partition_range::const_iterator partition_range::const_iterator::operator++(int) {
    const_iterator copy = *this;
    ++*this;
    return copy;
}

partition_range::const_iterator partition_range::begin() const {
    const_iterator it;
    if (n_ > 0) it.parts_.assign(1, n_);
    return it;
}

partition_range::const_iterator partition_range::end() const {
    const_iterator it;
    it.done_ = true;
    return it;
}

std::vector<Partition> enumerate_partitions(std::int64_t n) {
    std::vector<Partition> out;
    for (const auto& parts : partition_range(n)) out.emplace_back(parts);
    return out;
}

std::vector<BigInt> partition_count_table(std::int64_t upto) {
    if (upto < 0)
        throw std::invalid_argument("partition_count_table: negative bound");
    std::vector<BigInt> table(static_cast<std::size_t>(upto) + 1);
    table[0] = 1;
    for (std::int64_t i = 1; i <= upto; ++i) {
        BigInt acc = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > i) break;
            const bool plus = k % 2 == 1;
            if (plus)
                acc += table[static_cast<std::size_t>(i - g1)];
            else
                acc -= table[static_cast<std::size_t>(i - g1)];
            if (g2 <= i) {
                if (plus)
                    acc += table[static_cast<std::size_t>(i - g2)];
                else
                    acc -= table[static_cast<std::size_t>(i - g2)];
            }
        }
        table[static_cast<std::size_t>(i)] = acc;
    }
    return table;
}

BigInt count_partitions(std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("count_partitions: negative n");
    return partition_count_table(n).back();
}

void check_node_budget(std::int64_t n, std::int64_t max_nodes, std::string_view context) {
    BigInt needed = count_partitions(n);
    if (needed > max_nodes) {
        std::ostringstream msg;
        msg << context << ": P(" << n << ") = " << needed
            << " exceeds the node budget of " << max_nodes
            << "; a budget of at least " << needed << " is needed";
        throw budget_error(msg.str(), std::move(needed), max_nodes);
    }
}

std::string to_string(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.part_count(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    out += ']';
    return out;
}

Partition parse_partition(std::string_view text) {
    const auto fail = [&]() -> Partition {
        throw std::invalid_argument("cannot parse partition '" + std::string(text) +
                                    "': expected bracket form like [4,3,1,1]");
    };
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') return fail();
    ++pos;
    std::vector<std::int64_t> parts;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            skip_ws();
            std::int64_t value = 0;
            const char* first = text.data() + pos;
            const char* last = text.data() + text.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr == first) return fail();
            pos += static_cast<std::size_t>(ptr - first);
            parts.push_back(value);
            skip_ws();
            if (pos >= text.size()) return fail();
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            return fail();
        }
    }
    skip_ws();
    if (pos != text.size()) return fail();
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << to_string(p);
}

}  // namespace ginipart
