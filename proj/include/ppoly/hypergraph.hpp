#ifndef PPOLY_HYPERGRAPH_HPP
#define PPOLY_HYPERGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "ppoly/gf2.hpp"

namespace ppoly {

/// Ground set [N] plus an ordered family of nonempty subsets containing all
/// atoms {i}. Sets are bit masks of width N (coordinate i-1 <-> element i).
/// Canonical order: atoms {1}..{N} first, then the remaining sets sorted by
/// (cardinality, lexicographic element list).
struct PreHypergraph {
    int n = 0;
    std::vector<BitWord> sets;
};

/// Orders subsets by cardinality, breaking ties lexicographically on the
/// sorted element lists.
bool subset_less(const BitWord& a, const BitWord& b);

/// Validates and canonicalizes. Throws std::invalid_argument on an empty
/// set, a duplicate, a missing atom, or a width mismatch.
PreHypergraph make_pre_hypergraph(int n, std::vector<BitWord> sets);

/// True iff the family is closed under taking nonempty subsets.
bool is_hypergraph(const PreHypergraph& a);

/// All nonempty subsets of [n] of cardinality <= k.
PreHypergraph uniform(int k, int n);

/// Inclusion-maximal members, in canonical order.
std::vector<BitWord> maximal_elements(const PreHypergraph& a);

/// Simple undirected graph on vertices 1..n; edges normalized (a < b).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

/// All nonempty cliques (singletons included).
PreHypergraph clique_hypergraph(const Graph& g);

/// Adds an apex vertex n+1 adjacent to every original vertex.
Graph coned_graph(const Graph& g);

/// Atoms plus one 2-element set per edge.
PreHypergraph edge_hypergraph(const Graph& g);

/// JSON schema: {"n": <int>, "sets": [[int,...],...]} with 1-based members.
PreHypergraph hypergraph_from_json(const std::string& text);
std::string hypergraph_to_json(const PreHypergraph& a);

/// Human-readable set like "{1,3}".
std::string set_to_string(const BitWord& s);

}  // namespace ppoly

#endif
