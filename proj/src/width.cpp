#include "ginipart/width.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ginipart/dominance.hpp"
#include "ginipart/gini.hpp"

namespace ginipart {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/* Hopcroft-Karp maximum matching. Left and right vertex sets are both
 * copies of the node list; adj[u] lists the rights reachable from left u
 * in ascending order, which keeps the matching deterministic.
 */
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(const std::vector<std::vector<std::size_t>>& adj)
        : adj_(adj),
          match_left_(adj.size(), npos),
          match_right_(adj.size(), npos),
          layer_(adj.size()) {}

    std::size_t run() {
        std::size_t matched = 0;
        while (bfs_layers())
            for (std::size_t u = 0; u < adj_.size(); ++u)
                if (match_left_[u] == npos && augment(u)) ++matched;
        return matched;
    }

    const std::vector<std::size_t>& match_left() const { return match_left_; }
    const std::vector<std::size_t>& match_right() const { return match_right_; }

private:
    static constexpr std::size_t unreachable = npos;

    bool bfs_layers() {
        std::queue<std::size_t> frontier;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (match_left_[u] == npos) {
                layer_[u] = 0;
                frontier.push(u);
            } else {
                layer_[u] = unreachable;
            }
        }
        bool found_free_right = false;
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            for (std::size_t v : adj_[u]) {
                const std::size_t w = match_right_[v];
                if (w == npos) {
                    found_free_right = true;
                } else if (layer_[w] == unreachable) {
                    layer_[w] = layer_[u] + 1;
                    frontier.push(w);
                }
            }
        }
        return found_free_right;
    }

    bool augment(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            const std::size_t w = match_right_[v];
            if (w == npos || (layer_[w] == layer_[u] + 1 && augment(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        layer_[u] = unreachable;
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> layer_;
};

// strict-dominance adjacency: adj[u] holds every v with nodes[u] < nodes[v],
// built from precomputed padded prefix sums
std::vector<std::vector<std::size_t>> strict_order_adjacency(const std::vector<Partition>& nodes) {
    const std::size_t count = nodes.size();
    std::size_t rows = 0;
    for (const Partition& p : nodes) rows = std::max(rows, p.part_count());
    std::vector<std::vector<std::int64_t>> prefix(count, std::vector<std::int64_t>(rows, 0));
    for (std::size_t i = 0; i < count; ++i) {
        std::int64_t sum = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            sum += nodes[i].part(r);
            prefix[i][r] = sum;
        }
    }
    std::vector<std::vector<std::size_t>> adj(count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
            bool a_below = true;
            bool b_below = true;
            for (std::size_t r = 0; r < rows; ++r) {
                if (prefix[a][r] > prefix[b][r]) a_below = false;
                if (prefix[b][r] > prefix[a][r]) b_below = false;
                if (!a_below && !b_below) break;
            }
            if (a_below && !b_below)
                adj[a].push_back(b);
            else if (b_below && !a_below)
                adj[b].push_back(a);
        }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

}  // namespace

std::vector<Partition> max_level_set(std::int64_t n, std::int64_t max_nodes) {
    if (n < 1)
        throw std::invalid_argument("max_level_set: n must be positive");
    check_node_budget(n, max_nodes, "max_level_set");
    std::vector<Partition> nodes = enumerate_partitions(n);
    std::map<std::int64_t, std::vector<std::size_t>> levels;
    for (std::size_t i = 0; i < nodes.size(); ++i) levels[gini(nodes[i])].push_back(i);
    // largest level; among ties the largest gini, i.e. the smallest exponent
    const std::vector<std::size_t>* best = nullptr;
    for (const auto& [g, members] : levels)
        if (best == nullptr || members.size() >= best->size()) best = &members;
    std::vector<Partition> out;
    out.reserve(best->size());
    for (std::size_t i : *best) out.push_back(nodes[i]);
    return out;
}

ChainDecomposition dilworth_decomposition(const std::vector<Partition>& nodes) {
    const std::size_t count = nodes.size();
    const auto adj = strict_order_adjacency(nodes);
    BipartiteMatcher matcher(adj);
    const std::size_t matched = matcher.run();

    ChainDecomposition out;
    out.width = static_cast<std::int64_t>(count - matched);

    // Koenig alternating reachability from the unmatched left vertices:
    // free edges left-to-right, matched edges right-to-left. The nodes with
    // left copy reached and right copy unreached form a maximum antichain.
    std::vector<char> left_reached(count, 0);
    std::vector<char> right_reached(count, 0);
    std::queue<std::size_t> frontier;
    for (std::size_t u = 0; u < count; ++u)
        if (matcher.match_left()[u] == npos) {
            left_reached[u] = 1;
            frontier.push(u);
        }
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t v : adj[u]) {
            if (matcher.match_left()[u] == v || right_reached[v]) continue;
            right_reached[v] = 1;
            const std::size_t w = matcher.match_right()[v];
            if (w != npos && !left_reached[w]) {
                left_reached[w] = 1;
                frontier.push(w);
            }
        }
    }
    for (std::size_t i = 0; i < count; ++i)
        if (left_reached[i] && !right_reached[i]) out.antichain.push_back(i);

    // chains follow matched edges; heads are nodes with no matched predecessor
    for (std::size_t head = 0; head < count; ++head) {
        if (matcher.match_right()[head] != npos) continue;
        std::vector<std::size_t> chain;
        for (std::size_t v = head; v != npos; v = matcher.match_left()[v]) chain.push_back(v);
        out.chains.push_back(std::move(chain));
    }

    if (out.antichain.size() != static_cast<std::size_t>(out.width) ||
        out.chains.size() != static_cast<std::size_t>(out.width))
        throw std::logic_error("dilworth_decomposition: witness sizes disagree with matching");
    return out;
}

std::pair<std::int64_t, std::vector<Partition>> exact_width(std::int64_t n, std::int64_t max_nodes) {
    if (n < 1)
        throw std::invalid_argument("exact_width: n must be positive");
    check_node_budget(n, max_nodes, "exact_width");
    const std::vector<Partition> nodes = enumerate_partitions(n);
    ChainDecomposition decomposition = dilworth_decomposition(nodes);
    std::vector<Partition> witness;
    witness.reserve(decomposition.antichain.size());
    for (std::size_t i : decomposition.antichain) witness.push_back(nodes[i]);
    return {decomposition.width, std::move(witness)};
}

double early_expression(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("early_expression: n must be positive");
    const double nd = static_cast<double>(n);
    return std::pow(nd, -2.5) * std::exp(std::numbers::pi * std::sqrt(2.0 * nd / 3.0));
}

WidthReport width_report(std::int64_t n, bool compute_exact, std::int64_t max_nodes,
                         std::int64_t max_match_nodes) {
    WidthReport report;
    report.n = n;
    report.witness_level_set = max_level_set(n, max_nodes);
    report.b_n = BigInt(static_cast<unsigned long>(report.witness_level_set.size()));
    report.early_expr = early_expression(n);
    if (compute_exact) {
        auto [width, witness] = exact_width(n, max_match_nodes);
        report.a_n = width;
        report.witness_antichain = std::move(witness);
        if (report.b_n > *report.a_n)
            throw std::logic_error("width_report: level-set size exceeds the exact width");
    }
    return report;
}

namespace {

std::string double_to_string(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void append_partition_array(std::ostream& os, const std::vector<Partition>& ps) {
    os << '[';
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i > 0) os << ',';
        os << '[';
        const auto& parts = ps[i].parts();
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j > 0) os << ',';
            os << parts[j];
        }
        os << ']';
    }
    os << ']';
}

}  // namespace

std::string width_report_json(const WidthReport& report) {
    std::ostringstream os;
    os << "{\"n\":" << report.n << ",\"b\":" << report.b_n << ",\"a\":";
    if (report.a_n)
        os << *report.a_n;
    else
        os << "null";
    os << ",\"early\":" << double_to_string(report.early_expr) << ",\"level_set\":";
    append_partition_array(os, report.witness_level_set);
    os << ",\"antichain\":";
    if (report.a_n)
        append_partition_array(os, report.witness_antichain);
    else
        os << "null";
    os << "}";
    return os.str();
}

}  // namespace ginipart
