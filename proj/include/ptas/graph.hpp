#ifndef PTAS_GRAPH_HPP
#define PTAS_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace ptas {

/// Reads "p <n> <m>" followed by m lines "e <i> <j>" (1-indexed). Lines
/// starting with 'c' and blank lines are skipped.
inline AdjacencyMatrix read_edge_list(std::istream& in) {
    AdjacencyMatrix adj;
    bool have_header = false;
    std::size_t n = 0, m = 0, edges = 0, line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        const std::string where = "line " + std::to_string(line_no);
        if (tag == "p") {
            if (have_header) throw ParseError(where + ": duplicate 'p' line");
            long long nn = -1, mm = -1;
            if (!(ls >> nn >> mm) || nn < 1 || mm < 0) throw ParseError(where + ": expected 'p <n> <m>' with n >= 1");
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            adj.assign(n, std::vector<int>(n, 0));
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError(where + ": edge before 'p' line");
            long long i = 0, j = 0;
            if (!(ls >> i >> j)) throw ParseError(where + ": expected 'e <i> <j>'");
            if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
                throw ParseError(where + ": vertex out of range 1.." + std::to_string(n));
            if (i == j) throw ParseError(where + ": self-loop");
            adj[i - 1][j - 1] = adj[j - 1][i - 1] = 1;
            ++edges;
        } else {
            throw ParseError(where + ": unknown line type '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(where + ": trailing input '" + extra + "'");
    }
    if (!have_header) throw ParseError("missing 'p <n> <m>' line");
    if (edges != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges));
    return adj;
}

/// Largest stable set by exhaustive search over vertex subsets (n <= 20).
inline unsigned stability_number(const AdjacencyMatrix& adj) {
    const std::size_t n = adj.size();
    if (n > 20) throw PreconditionError("brute-force stability number limited to 20 vertices");
    std::vector<std::uint32_t> nbr(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (adj[i][j]) nbr[i] |= 1u << j;
    unsigned best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        bool stable = true;
        for (std::size_t i = 0; i < n && stable; ++i)
            if ((s >> i & 1u) && (nbr[i] & s)) stable = false;
        if (stable) best = std::max<unsigned>(best, static_cast<unsigned>(__builtin_popcount(s)));
    }
    return best;
}

} // namespace ptas

#endif // PTAS_GRAPH_HPP
