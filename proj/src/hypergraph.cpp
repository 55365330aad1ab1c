#include "ppoly/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ppoly {

bool subset_less(const BitWord& a, const BitWord& b) {
    int pa = a.popcount(), pb = b.popcount();
    if (pa != pb) return pa < pb;
    if (a.bits == b.bits) return false;
    // The set holding the smallest element where they differ comes first.
    std::uint64_t diff = a.bits ^ b.bits;
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits & low) != 0;
}

PreHypergraph make_pre_hypergraph(int n, std::vector<BitWord> sets) {
    if (n < 1 || n > 64) throw std::invalid_argument("pre-hypergraph: ground size must be 1..64");
    for (const auto& s : sets) {
        if (s.width != n) throw std::invalid_argument("pre-hypergraph: set width != ground size");
        if (s.is_zero()) throw std::invalid_argument("pre-hypergraph: empty set not allowed");
    }
    std::sort(sets.begin(), sets.end(), subset_less);
    for (size_t i = 1; i < sets.size(); ++i)
        if (sets[i] == sets[i - 1]) throw std::invalid_argument("pre-hypergraph: duplicate set");
    if (sets.size() < static_cast<size_t>(n)) throw std::invalid_argument("pre-hypergraph: missing atom");
    for (int i = 0; i < n; ++i)
        if (sets[static_cast<size_t>(i)].bits != (std::uint64_t(1) << i))
            throw std::invalid_argument("pre-hypergraph: missing atom");
    PreHypergraph a;
    a.n = n;
    a.sets = std::move(sets);
    return a;
}

bool is_hypergraph(const PreHypergraph& a) {
    std::set<std::uint64_t> have;
    for (const auto& s : a.sets) have.insert(s.bits);
    for (const auto& s : a.sets) {
        if (s.popcount() < 2) continue;
        for (int i = 0; i < a.n; ++i) {
            if (!s.get(i)) continue;
            std::uint64_t sub = s.bits & ~(std::uint64_t(1) << i);
            if (!have.count(sub)) return false;
        }
    }
    return true;
}

PreHypergraph uniform(int k, int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("uniform: ground size must be 1..20");
    if (k < 1 || k > n) throw std::invalid_argument("uniform: interaction order must be 1..n");
    std::vector<BitWord> sets;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m)
        if (std::popcount(m) <= k) sets.emplace_back(n, m);
    return make_pre_hypergraph(n, std::move(sets));
}

std::vector<BitWord> maximal_elements(const PreHypergraph& a) {
    std::vector<BitWord> out;
    for (const auto& s : a.sets) {
        bool maximal = true;
        for (const auto& t : a.sets)
            if (t.bits != s.bits && (s.bits & t.bits) == s.bits) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(s);
    }
    return out;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0 || n > 64) throw std::invalid_argument("graph: vertex count out of range");
    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("graph: loops not allowed");
        if (e.first < 1 || e.first > n || e.second < 1 || e.second > n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");
    return Graph{n, std::move(edges)};
}

PreHypergraph clique_hypergraph(const Graph& g) {
    if (g.n < 1 || g.n > 20) throw std::invalid_argument("clique_hypergraph: vertex count must be 1..20");
    std::vector<std::uint64_t> adj(static_cast<size_t>(g.n), 0);
    for (const auto& e : g.edges) {
        adj[static_cast<size_t>(e.first - 1)] |= std::uint64_t(1) << (e.second - 1);
        adj[static_cast<size_t>(e.second - 1)] |= std::uint64_t(1) << (e.first - 1);
    }
    std::vector<BitWord> sets;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << g.n); ++m) {
        bool clique = true;
        for (int i = 0; clique && i < g.n; ++i) {
            if (!((m >> i) & 1)) continue;
            std::uint64_t others = m & ~(std::uint64_t(1) << i);
            if ((others & ~adj[static_cast<size_t>(i)]) != 0) clique = false;
        }
        if (clique) sets.emplace_back(g.n, m);
    }
    return make_pre_hypergraph(g.n, std::move(sets));
}

Graph coned_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges = g.edges;
    for (int v = 1; v <= g.n; ++v) edges.emplace_back(v, g.n + 1);
    return make_graph(g.n + 1, std::move(edges));
}

PreHypergraph edge_hypergraph(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("edge_hypergraph: need at least one vertex");
    std::vector<BitWord> sets;
    for (int i = 0; i < g.n; ++i) sets.emplace_back(g.n, std::uint64_t(1) << i);
    for (const auto& e : g.edges)
        sets.emplace_back(g.n, (std::uint64_t(1) << (e.first - 1)) | (std::uint64_t(1) << (e.second - 1)));
    return make_pre_hypergraph(g.n, std::move(sets));
}

PreHypergraph hypergraph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("hypergraph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
        throw std::invalid_argument("hypergraph JSON: expected object with \"n\" and \"sets\"");
    if (!j["n"].is_number_integer()) throw std::invalid_argument("hypergraph JSON: \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > 64) throw std::invalid_argument("hypergraph JSON: \"n\" out of range 1..64");
    if (!j["sets"].is_array()) throw std::invalid_argument("hypergraph JSON: \"sets\" must be an array");
    std::vector<BitWord> sets;
    for (const auto& js : j["sets"]) {
        if (!js.is_array()) throw std::invalid_argument("hypergraph JSON: each set must be an array");
        BitWord w(n, 0);
        for (const auto& jm : js) {
            if (!jm.is_number_integer()) throw std::invalid_argument("hypergraph JSON: set members must be integers");
            int v = jm.get<int>();
            if (v < 1 || v > n) throw std::invalid_argument("hypergraph JSON: set member out of range 1..n");
            if (w.get(v - 1)) throw std::invalid_argument("hypergraph JSON: repeated member inside a set");
            w.set(v - 1, true);
        }
        sets.push_back(w);
    }
    return make_pre_hypergraph(n, std::move(sets));
}

std::string hypergraph_to_json(const PreHypergraph& a) {
    nlohmann::json j;
    j["n"] = a.n;
    j["sets"] = nlohmann::json::array();
    for (const auto& s : a.sets) {
        nlohmann::json js = nlohmann::json::array();
        for (int i = 0; i < a.n; ++i)
            if (s.get(i)) js.push_back(i + 1);
        j["sets"].push_back(js);
    }
    return j.dump();
}

std::string set_to_string(const BitWord& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i = 0; i < s.width; ++i)
        if (s.get(i)) {
            if (!first) os << ',';
            os << (i + 1);
            first = false;
        }
    os << '}';
    return os.str();
}

}  // namespace ppoly
