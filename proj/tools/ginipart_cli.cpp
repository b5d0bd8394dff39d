#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ginipart/dominance.hpp"
#include "ginipart/gini.hpp"
#include "ginipart/numeric.hpp"
#include "ginipart/partition.hpp"
#include "ginipart/series.hpp"
#include "ginipart/width.hpp"

namespace {

using namespace ginipart;

void append_parts_array(std::ostream& os, const Partition& p) {
    os << '[';
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) os << ',';
        os << parts[i];
    }
    os << ']';
}

std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

int run_gini(const std::string& text, bool normalize, const std::string& format) {
    const Partition p = parse_partition(text);
    const GiniValue g = gini(p);
    const std::int64_t e2 = e2_direct(p);
    const Partition conj = conjugate(p);
    std::string norm;
    std::string norm_euclid;
    if (normalize) {
        norm = rational_string(normalized_gini(p));
        norm_euclid = rational_string(normalized_gini_euclidean(p));
    }
    if (format == "json") {
        std::ostringstream os;
        os << "{\"partition\":";
        append_parts_array(os, p);
        os << ",\"n\":" << p.weight() << ",\"gini\":" << g << ",\"e2\":" << e2
           << ",\"conjugate\":";
        append_parts_array(os, conj);
        if (normalize)
            os << ",\"normalized\":\"" << norm << "\",\"normalized_euclidean\":\"" << norm_euclid
               << "\"";
        os << "}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "partition  " << to_string(p) << "\n"
                  << "n          " << p.weight() << "\n"
                  << "g          " << g << "\n"
                  << "e2         " << e2 << "\n"
                  << "conjugate  " << to_string(conj) << "\n";
        if (normalize)
            std::cout << "g/C(n,2)   " << norm << "\n"
                      << "2g/n^2     " << norm_euclid << "\n";
    }
    return 0;
}

int run_compare(const std::string& text_a, const std::string& text_b, const std::string& format) {
    const Partition a = parse_partition(text_a);
    const Partition b = parse_partition(text_b);
    const Comparison relation = compare(a, b);
    const bool have_gini = a.weight() >= 1;
    const std::int64_t ga = have_gini ? gini(a) : 0;
    const std::int64_t gb = have_gini ? gini(b) : 0;
    if (format == "json") {
        std::ostringstream os;
        os << "{\"a\":";
        append_parts_array(os, a);
        os << ",\"b\":";
        append_parts_array(os, b);
        os << ",\"relation\":\"" << to_string(relation) << "\"";
        if (have_gini) os << ",\"gini_a\":" << ga << ",\"gini_b\":" << gb;
        os << "}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << to_string(a) << " " << to_string(relation) << " " << to_string(b) << "\n";
        if (have_gini) {
            const char* rel = ga < gb ? "<" : ga > gb ? ">" : "=";
            std::cout << "g: " << ga << " " << rel << " " << gb << "\n";
        }
    }
    return 0;
}

int run_hasse(std::int64_t n, const std::string& format, std::int64_t max_nodes) {
    const DominancePoset poset = build_poset(n, max_nodes);
    if (format == "dot") {
        std::cout << to_dot(poset);
    } else if (format == "json") {
        std::cout << hasse_json(poset) << "\n";
    } else {
        std::cout << "n      " << poset.n << "\n"
                  << "nodes  " << poset.nodes.size() << "\n"
                  << "edges  " << poset.cover_edges.size() << "\n";
        for (const auto& [lower, upper] : poset.cover_edges)
            std::cout << to_string(poset.nodes[lower]) << " -> " << to_string(poset.nodes[upper])
                      << "\n";
    }
    return 0;
}

int run_gf(std::int64_t max_x, const std::string& format, std::int64_t max_xdeg) {
    if (max_x > max_xdeg) {
        std::ostringstream msg;
        msg << "gf: N = " << max_x << " exceeds the x-degree budget of " << max_xdeg
            << "; rerun with --max-xdeg " << max_x;
        throw budget_error(msg.str(), BigInt(static_cast<long>(max_x)), max_xdeg);
    }
    const auto rows = expand_product(max_x);
    if (format == "json") {
        for (std::int64_t n = 1; n <= max_x; ++n)
            std::cout << coefficient_json(n, rows[static_cast<std::size_t>(n)]) << "\n";
    } else if (format == "csv") {
        std::cout << "n,exponent,coefficient\n";
        for (std::int64_t n = 1; n <= max_x; ++n)
            for (const auto& [exponent, coeff] : rows[static_cast<std::size_t>(n)].terms())
                std::cout << n << ',' << exponent << ',' << coeff << "\n";
    } else {
        for (std::int64_t n = 1; n <= max_x; ++n) {
            std::cout << "x^" << n << ":";
            bool first = true;
            for (const auto& [exponent, coeff] : rows[static_cast<std::size_t>(n)].terms()) {
                std::cout << (first ? " " : " + ");
                first = false;
                if (coeff != 1) std::cout << coeff;
                std::cout << "q^" << exponent;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_profile(std::int64_t n, const std::string& format, std::int64_t max_nodes) {
    const GiniProfile profile = gini_profile(n, direct_coefficient(n, max_nodes));
    if (format == "csv") {
        write_profile_csv(std::cout, profile);
    } else if (format == "json") {
        std::ostringstream os;
        os << "{\"n\":" << profile.n << ",\"counts\":[";
        bool first = true;
        for (const auto& [g, count] : profile.counts) {
            if (!first) os << ',';
            first = false;
            os << '[' << g << ',' << count << ']';
        }
        os << "]}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "n = " << profile.n << "\n";
        for (const auto& [g, count] : profile.counts)
            std::cout << "g = " << g << ": " << count << "\n";
    }
    return 0;
}

int run_width(std::int64_t n, bool exact, const std::string& format, std::int64_t max_nodes,
              std::int64_t max_match_nodes) {
    const WidthReport report = width_report(n, exact, max_nodes, max_match_nodes);
    if (format == "json") {
        std::cout << width_report_json(report) << "\n";
    } else {
        std::cout << "n      " << report.n << "\n"
                  << "b(n)   " << report.b_n << "\n";
        if (report.a_n)
            std::cout << "a(n)   " << *report.a_n << "\n";
        std::cout << "early  " << report.early_expr << "\n";
        std::cout << "level set:";
        for (const Partition& p : report.witness_level_set) std::cout << " " << to_string(p);
        std::cout << "\n";
        if (report.a_n) {
            std::cout << "antichain:";
            for (const Partition& p : report.witness_antichain) std::cout << " " << to_string(p);
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gini index, dominance order, and level-set statistics of integer partitions"};
    app.require_subcommand(1);

    std::string partition_text;
    std::string partition_text_b;
    std::int64_t arg_n = 0;
    bool normalize = false;
    bool exact = false;
    std::string format;

    auto* cmd_gini = app.add_subcommand("gini", "Gini index, e2, and conjugate of one partition");
    cmd_gini->add_option("partition", partition_text, "partition in bracket form, e.g. [4,3,1,1]")
        ->required();
    cmd_gini->add_flag("--normalize", normalize, "also print g/C(n,2) and 2g/n^2 as exact fractions");
    cmd_gini->add_option("--format", format, "json|plain (default plain)")
        ->check(CLI::IsMember({"json", "plain"}));

    auto* cmd_compare = app.add_subcommand("compare", "dominance comparison of two partitions");
    cmd_compare->add_option("a", partition_text, "first partition")->required();
    cmd_compare->add_option("b", partition_text_b, "second partition")->required();
    cmd_compare->add_option("--format", format, "json|plain (default plain)")
        ->check(CLI::IsMember({"json", "plain"}));

    std::int64_t max_nodes = default_node_budget;
    auto* cmd_hasse = app.add_subcommand("hasse", "Hasse diagram of the dominance order on partitions of n");
    cmd_hasse->add_option("n", arg_n, "weight")->required()->check(CLI::PositiveNumber);
    cmd_hasse->add_option("--format", format, "dot|json|plain (default dot)")
        ->check(CLI::IsMember({"dot", "json", "plain"}));
    cmd_hasse->add_option("--max-nodes", max_nodes, "node budget (default 1000000)");

    std::int64_t max_xdeg = 150;
    auto* cmd_gf = app.add_subcommand("gf", "x^1..x^N coefficients of the level-set generating function");
    cmd_gf->add_option("N", arg_n, "largest x-degree")->required()->check(CLI::PositiveNumber);
    cmd_gf->add_option("--format", format, "json|csv|plain (default json)")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd_gf->add_option("--max-xdeg", max_xdeg, "x-degree budget (default 150)");

    auto* cmd_profile = app.add_subcommand("profile", "partitions of n counted by Gini value");
    cmd_profile->add_option("n", arg_n, "weight")->required()->check(CLI::PositiveNumber);
    cmd_profile->add_option("--format", format, "csv|json|plain (default csv)")
        ->check(CLI::IsMember({"csv", "json", "plain"}));
    cmd_profile->add_option("--max-nodes", max_nodes, "node budget (default 1000000)");

    std::int64_t max_match_nodes = default_match_budget;
    auto* cmd_width = app.add_subcommand("width", "level-set bound b(n) and optional exact width a(n)");
    cmd_width->add_option("n", arg_n, "weight")->required()->check(CLI::PositiveNumber);
    cmd_width->add_flag("--exact", exact, "compute the exact width by chain decomposition");
    cmd_width->add_option("--format", format, "json|plain (default json)")
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_width->add_option("--max-nodes", max_nodes, "level-set node budget (default 1000000)");
    cmd_width->add_option("--max-match-nodes", max_match_nodes,
                          "node budget for the exact width (default 5000)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_gini))
            return run_gini(partition_text, normalize, format.empty() ? "plain" : format);
        if (app.got_subcommand(cmd_compare))
            return run_compare(partition_text, partition_text_b, format.empty() ? "plain" : format);
        if (app.got_subcommand(cmd_hasse))
            return run_hasse(arg_n, format.empty() ? "dot" : format, max_nodes);
        if (app.got_subcommand(cmd_gf))
            return run_gf(arg_n, format.empty() ? "json" : format, max_xdeg);
        if (app.got_subcommand(cmd_profile))
            return run_profile(arg_n, format.empty() ? "csv" : format, max_nodes);
        if (app.got_subcommand(cmd_width))
            return run_width(arg_n, exact, format.empty() ? "json" : format, max_nodes,
                             max_match_nodes);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
