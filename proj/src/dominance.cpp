#include "ginipart/dominance.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ginipart/gini.hpp"

namespace ginipart {

namespace {

void require_equal_weights(const Partition& a, const Partition& b, const char* op) {
    if (a.weight() != b.weight())
        throw std::invalid_argument(std::string(op) + ": weights differ (" +
                                    std::to_string(a.weight()) + " vs " +
                                    std::to_string(b.weight()) + ")");
}

}  // namespace

const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::Less: return "LESS";
        case Comparison::Greater: return "GREATER";
        case Comparison::Equal: return "EQUAL";
        case Comparison::Incomparable: return "INCOMPARABLE";
    }
    return "?";
}

Comparison compare(const Partition& a, const Partition& b) {
    require_equal_weights(a, b, "compare");
    // prefix sums beyond the longer part list are all equal to the weight,
    // so padding to the longer length decides the relation
    const std::size_t len = std::max(a.part_count(), b.part_count());
    bool a_below = true;  // every prefix sum of a <= that of b
    bool b_below = true;
    std::int64_t sum_a = 0;
    std::int64_t sum_b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sum_a += a.part(i);
        sum_b += b.part(i);
        if (sum_a > sum_b) a_below = false;
        if (sum_b > sum_a) b_below = false;
        if (!a_below && !b_below) return Comparison::Incomparable;
    }
    if (a_below && b_below) return Comparison::Equal;
    return a_below ? Comparison::Less : Comparison::Greater;
}

bool covers(const Partition& upper, const Partition& lower) {
    require_equal_weights(upper, lower, "covers");
    const std::size_t len = std::max(upper.part_count(), lower.part_count());
    std::size_t gained = len;  // row i: upper_i = lower_i + 1
    std::size_t lost = len;    // row k: upper_k = lower_k - 1
    for (std::size_t r = 0; r < len; ++r) {
        const std::int64_t diff = upper.part(r) - lower.part(r);
        if (diff == 0) continue;
        if (diff == 1 && gained == len)
            gained = r;
        else if (diff == -1 && lost == len)
            lost = r;
        else
            return false;
    }
    if (gained == len || lost == len || gained >= lost) return false;
    return lost == gained + 1 || lower.part(gained) == lower.part(lost);
}

std::vector<Partition> cover_moves(const Partition& lower) {
    // each move lifts the last box of one run to the end of an earlier row;
    // the result stays a partition only when the source row ends its run
    // and the target row starts one
    const RepeatedForm form = to_repeated_form(lower);
    const auto& runs = form.entries;
    std::vector<std::size_t> first(runs.size());  // first row index of each run
    std::size_t row = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        first[r] = row;
        row += static_cast<std::size_t>(runs[r].multiplicity);
    }

    std::vector<std::pair<std::size_t, std::size_t>> moves;  // (target row, source row)
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const std::size_t last = first[r] + static_cast<std::size_t>(runs[r].multiplicity) - 1;
        if (runs[r].multiplicity >= 2) moves.emplace_back(first[r], last);
        if (r + 1 < runs.size() && runs[r].multiplicity == 1 && runs[r + 1].multiplicity == 1)
            moves.emplace_back(first[r], first[r + 1]);
    }

    std::vector<Partition> out;
    out.reserve(moves.size());
    for (const auto& [target, source] : moves) {
        std::vector<std::int64_t> parts = lower.parts();
        parts[target] += 1;
        parts[source] -= 1;
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

bool is_antichain(const std::vector<Partition>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (ps[i] == ps[j]) continue;  // the same set element listed twice
            if (compare(ps[i], ps[j]) != Comparison::Incomparable) return false;
        }
    return true;
}

std::size_t DominancePoset::index_of(const Partition& p) const {
    // nodes are in descending lexicographic order
    auto it = std::lower_bound(nodes.begin(), nodes.end(), p,
                               [](const Partition& a, const Partition& b) { return b < a; });
    if (it == nodes.end() || *it != p)
        throw std::out_of_range("DominancePoset::index_of: partition not in poset");
    return static_cast<std::size_t>(it - nodes.begin());
}

DominancePoset build_poset(std::int64_t n, std::int64_t max_nodes) {
    if (n < 1)
        throw std::invalid_argument("build_poset: n must be positive");
    check_node_budget(n, max_nodes, "build_poset");
    DominancePoset poset;
    poset.n = n;
    poset.nodes = enumerate_partitions(n);
    for (std::size_t lower = 0; lower < poset.nodes.size(); ++lower)
        for (const Partition& upper : cover_moves(poset.nodes[lower]))
            poset.cover_edges.emplace_back(lower, poset.index_of(upper));
    std::sort(poset.cover_edges.begin(), poset.cover_edges.end());
    return poset;
}

std::string to_dot(const DominancePoset& poset) {
    std::ostringstream os;
    os << "digraph hasse_" << poset.n << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i)
        os << "  p" << i << " [label=\"" << to_string(poset.nodes[i]) << "\"];\n";
    // partitions of equal gini are pairwise incomparable, so they share a rank
    std::map<std::int64_t, std::vector<std::size_t>> levels;
    for (std::size_t i = 0; i < poset.nodes.size(); ++i)
        levels[gini(poset.nodes[i])].push_back(i);
    for (const auto& [g, members] : levels) {
        if (members.size() < 2) continue;
        os << "  { rank=same;";
        for (std::size_t i : members) os << " p" << i << ";";
        os << " }\n";
    }
    for (const auto& [lower, upper] : poset.cover_edges)
        os << "  p" << lower << " -> p" << upper << ";\n";
    os << "}\n";
    return os.str();
}

std::string hasse_json(const DominancePoset& poset) {
    std::ostringstream os;
    os << "{\"n\":" << poset.n << ",\"nodes\":[";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        if (i > 0) os << ',';
        os << '[';
        const auto& parts = poset.nodes[i].parts();
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j > 0) os << ',';
            os << parts[j];
        }
        os << ']';
    }
    os << "],\"edges\":[";
    for (std::size_t e = 0; e < poset.cover_edges.size(); ++e) {
        if (e > 0) os << ',';
        os << '[' << poset.cover_edges[e].first << ',' << poset.cover_edges[e].second << ']';
    }
    os << "]}";
    return os.str();
}

}  // namespace ginipart
