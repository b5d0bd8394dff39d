#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ginipart/partition.hpp"

namespace ginipart {

enum class Comparison { Less, Greater, Equal, Incomparable };

const char* to_string(Comparison c);

/// Dominance comparison of two partitions of equal weight, by padded
/// prefix sums. Less means a is dominated by b. Single pass with early
/// exit once inequalities have gone both ways.
Comparison compare(const Partition& a, const Partition& b);

/// True iff `upper` is obtained from `lower` by moving one box from row k
/// to row i (i < k) with k = i+1 or lower_i = lower_k, all other rows
/// equal. Equal weights required.
bool covers(const Partition& upper, const Partition& lower);

/// All partitions covering `lower`, generated from its run-length form:
/// one candidate per run of repeated parts (move a box from the run's last
/// row to its first) and one per adjacent pair of singleton runs. Results
/// in descending lexicographic order.
std::vector<Partition> cover_moves(const Partition& lower);

/// True iff every distinct pair of entries is Incomparable. All entries
/// must have equal weight.
bool is_antichain(const std::vector<Partition>& ps);

/* All partitions of a fixed n under dominance. nodes is in enumeration
 * order ((n) first); cover_edges holds (lower, upper) index pairs sorted
 * ascending, whose transitive closure is the strict dominance relation.
 */
struct DominancePoset {
    std::int64_t n = 0;
    std::vector<Partition> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges;

    /// Index of p in nodes; throws std::out_of_range if absent.
    std::size_t index_of(const Partition& p) const;
};

/// Builds the poset for n >= 1. Cover edges come from cover_moves, not
/// from transitive reduction of the full relation. Throws budget_error
/// when P(n) > max_nodes.
DominancePoset build_poset(std::int64_t n, std::int64_t max_nodes = default_node_budget);

/// Hasse diagram in DOT form: one node per partition labeled with its
/// bracket form, edges drawn lower -> upper under rankdir=BT, nodes of
/// equal gini grouped on one rank. Byte-stable for fixed input.
std::string to_dot(const DominancePoset& poset);

/// Hasse diagram as one JSON object: nodes in enumeration order, edges as
/// [lower, upper] index pairs. Byte-stable for fixed input.
std::string hasse_json(const DominancePoset& poset);

}  // namespace ginipart
