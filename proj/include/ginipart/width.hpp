#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ginipart/numeric.hpp"
#include "ginipart/partition.hpp"

namespace ginipart {

inline constexpr std::int64_t default_match_budget = 5000;

/// A largest set of partitions of n sharing one gini value, in enumeration
/// order. Ties between gini values are broken toward the smallest
/// q-exponent, i.e. the largest gini value. Throws budget_error when
/// P(n) > max_nodes.
std::vector<Partition> max_level_set(std::int64_t n, std::int64_t max_nodes = default_node_budget);

/* Dilworth decomposition of a finite poset given as a node list: the
 * width (maximum antichain size), one maximum antichain, and a minimum
 * chain cover with exactly `width` chains partitioning all nodes.
 *
 * Computed on the full transitive strict order (not the Hasse diagram)
 * via maximum bipartite matching on the split comparability graph, with
 * the antichain recovered from the Koenig vertex cover. Nodes are
 * processed in input order, so the result is deterministic.
 */
struct ChainDecomposition {
    std::int64_t width = 0;
    std::vector<std::size_t> antichain;            // node indexes, ascending
    std::vector<std::vector<std::size_t>> chains;  // bottom-to-top index runs
};

ChainDecomposition dilworth_decomposition(const std::vector<Partition>& nodes);

/// Exact width a(n) of the dominance order on partitions of n, with a
/// witness antichain of that size in enumeration order. Throws
/// budget_error when P(n) > max_nodes.
std::pair<std::int64_t, std::vector<Partition>> exact_width(
    std::int64_t n, std::int64_t max_nodes = default_match_budget);

/// n^{-5/2} * e^{pi*sqrt(2n/3)} in double precision. Informational trend
/// value only; the asymptotic constant tying it to a(n) is unknown.
double early_expression(std::int64_t n);

struct WidthReport {
    std::int64_t n = 0;
    BigInt b_n;
    std::optional<std::int64_t> a_n;
    std::vector<Partition> witness_level_set;
    std::vector<Partition> witness_antichain;  // empty unless a_n is present
    double early_expr = 0.0;
};

/// Assembles b(n), optionally a(n) with witnesses, and the trend value.
/// Verifies b(n) <= a(n) when both are present.
WidthReport width_report(std::int64_t n, bool compute_exact,
                         std::int64_t max_nodes = default_node_budget,
                         std::int64_t max_match_nodes = default_match_budget);

/// {"n":9,"b":3,"a":...,"early":...,"level_set":[...],"antichain":[...]}
/// with partitions as bracketed part arrays; "a"/"antichain" are null when
/// the exact width was not computed. Byte-stable.
std::string width_report_json(const WidthReport& report);

}  // namespace ginipart
