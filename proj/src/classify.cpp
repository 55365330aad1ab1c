#include "ppoly/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ppoly/lp.hpp"

namespace ppoly {

GroupPolytope make_group_polytope(int n, std::vector<BitWord> vertices, bool check_full_dim) {
    if (n < 1 || n > 64) throw std::invalid_argument("group polytope: dimension out of range");
    for (const auto& v : vertices)
        if (v.width != n) throw std::invalid_argument("group polytope: vertex width mismatch");
    std::sort(vertices.begin(), vertices.end());
    if (!is_subgroup(vertices)) throw std::invalid_argument("group polytope: vertices are not an XOR-subgroup");
    GroupPolytope p{n, std::move(vertices)};
    if (check_full_dim && affine_dim(VertexSet01{n, p.vertices}) != n)
        throw std::invalid_argument("group polytope: hull is not full-dimensional");
    return p;
}

GroupPolytope prism(const GroupPolytope& p) {
    std::vector<BitWord> verts;
    verts.reserve(p.vertices.size() * 2);
    for (const auto& v : p.vertices) {
        verts.emplace_back(p.n + 1, v.bits);
        verts.emplace_back(p.n + 1, v.bits | (std::uint64_t(1) << p.n));
    }
    std::sort(verts.begin(), verts.end());
    return GroupPolytope{p.n + 1, std::move(verts)};
}

std::vector<std::vector<BitWord>> coordinate_kernels(const GroupPolytope& p) {
    std::vector<std::vector<BitWord>> out(static_cast<size_t>(p.n));
    for (int i = 0; i < p.n; ++i)
        for (const auto& v : p.vertices)
            if (!v.get(i)) out[static_cast<size_t>(i)].push_back(v);
    return out;
}

namespace {

void check_index2(const GroupPolytope& p, const std::vector<BitWord>& u) {
    if (u.size() * 2 != p.vertices.size())
        throw std::invalid_argument("lift: subgroup does not have index 2");
    if (!is_subgroup(u)) throw std::invalid_argument("lift: not a subgroup");
    for (const auto& w : u)
        if (!std::binary_search(p.vertices.begin(), p.vertices.end(), w))
            throw std::invalid_argument("lift: subgroup not contained in the vertex group");
}

std::vector<BitWord> lifted_vertices(const GroupPolytope& p, const std::vector<BitWord>& u) {
    std::vector<BitWord> verts;
    verts.reserve(p.vertices.size());
    for (const auto& v : p.vertices) {
        bool in_u = std::binary_search(u.begin(), u.end(), v);
        verts.emplace_back(p.n + 1, v.bits | (in_u ? 0 : (std::uint64_t(1) << p.n)));
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

}  // namespace

GroupPolytope lift(const GroupPolytope& p, const std::vector<BitWord>& u) {
    std::vector<BitWord> su = u;
    std::sort(su.begin(), su.end());
    check_index2(p, su);
    for (const auto& kernel : coordinate_kernels(p))
        if (kernel == su)
            throw std::invalid_argument("lift: degenerate lift, subgroup is a coordinate kernel");
    return GroupPolytope{p.n + 1, lifted_vertices(p, su)};
}

Prop4Result lift_equivalence_checks(const GroupPolytope& p, const std::vector<BitWord>& u) {
    std::vector<BitWord> su = u;
    std::sort(su.begin(), su.end());
    check_index2(p, su);
    const int n = p.n;

    Prop4Result res;

    // (a) dimension of the lifted vertex set, by rational rank
    res.lift_full_dim = affine_dim(VertexSet01{n + 1, lifted_vertices(p, su)}) == n + 1;

    // (b) coordinate scan: u must hit x_i = 1 for every i
    std::uint64_t seen = 0;
    for (const auto& w : su) seen |= w.bits;
    const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    res.no_coordinate_kernel = (seen == all);

    // (c) two membership LPs at the cube center
    std::vector<BitWord> coset;
    for (const auto& v : p.vertices)
        if (!std::binary_search(su.begin(), su.end(), v)) coset.push_back(v);
    QVector center(static_cast<size_t>(n), Rational(1, 2));
    res.center_in_both = contains_point(VertexSet01{n, su}, center) &&
                         contains_point(VertexSet01{n, coset}, center);

    // (d) hull intersection as one joint LP over both coefficient vectors
    {
        const size_t nu = su.size(), nc = coset.size();
        QMatrix a(static_cast<size_t>(n) + 2, QVector(nu + nc, Rational(0)));
        QVector b(static_cast<size_t>(n) + 2, Rational(0));
        for (int j = 0; j < n; ++j) {
            for (size_t i = 0; i < nu; ++i) a[static_cast<size_t>(j)][i] = su[i].get(j) ? 1 : 0;
            for (size_t i = 0; i < nc; ++i) a[static_cast<size_t>(j)][nu + i] = coset[i].get(j) ? -1 : 0;
        }
        for (size_t i = 0; i < nu; ++i) a[static_cast<size_t>(n)][i] = 1;
        b[static_cast<size_t>(n)] = 1;
        for (size_t i = 0; i < nc; ++i) a[static_cast<size_t>(n) + 1][nu + i] = 1;
        b[static_cast<size_t>(n) + 1] = 1;
        res.hulls_intersect = lp_feasible_eq(std::move(a), std::move(b));
    }
    return res;
}

std::vector<GroupPolytope> enumerate_group_polytopes(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("enumerate_group_polytopes: n must be >= 1");
    if (n > max_n)
        throw std::invalid_argument("enumerate_group_polytopes: n exceeds the size guard; raise the limit to override");

    std::vector<GroupPolytope> cur;
    cur.push_back(GroupPolytope{1, {BitWord(1, 0), BitWord(1, 1)}});
    for (int dim = 1; dim < n; ++dim) {
        std::set<std::vector<BitWord>> seen;
        std::vector<GroupPolytope> next;
        for (const auto& p : cur) {
            auto add = [&](GroupPolytope q) {
                if (!seen.insert(q.vertices).second)
                    throw std::logic_error("enumerate_group_polytopes: generation produced a duplicate");
                next.push_back(std::move(q));
            };
            add(prism(p));
            auto kernels = coordinate_kernels(p);
            for (const auto& sub : index2_subgroups(p.vertices)) {
                bool degenerate = false;
                for (const auto& k : kernels)
                    if (k == sub.kernel) {
                        degenerate = true;
                        break;
                    }
                if (!degenerate) add(GroupPolytope{p.n + 1, lifted_vertices(p, sub.kernel)});
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const GroupPolytope& a, const GroupPolytope& b) { return a.vertices < b.vertices; });
        cur = std::move(next);
    }
    return cur;
}

CnkTable count_cnk(int n_max) {
    if (n_max < 1) throw std::invalid_argument("count_cnk: n_max must be >= 1");
    CnkTable t;
    t.n_max = n_max;
    t.c.assign(static_cast<size_t>(n_max), {});
    t.row_sums.assign(static_cast<size_t>(n_max), 0);
    for (int n = 1; n <= n_max; ++n) {
        auto& row = t.c[static_cast<size_t>(n - 1)];
        row.assign(static_cast<size_t>(n), 0);
        for (int k = 1; k <= n; ++k) {
            BigCount val = 0;
            if (k == n) {
                val = 1;  // only the cube
            } else if ((BigCount(1) << k) <= n) {
                val = 0;  // too few vertices to span dimension n
            } else {
                const auto& prev = t.c[static_cast<size_t>(n - 2)];
                BigCount from_prism = (k >= 2) ? prev[static_cast<size_t>(k - 2)] : BigCount(0);
                BigCount multiplier = (BigCount(1) << k) - n;
                val = from_prism + prev[static_cast<size_t>(k - 1)] * multiplier;
            }
            row[static_cast<size_t>(k - 1)] = val;
            t.row_sums[static_cast<size_t>(n - 1)] += val;
        }
    }
    return t;
}

namespace {

BigCount factorial(int n) {
    BigCount f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigCount gl2_order(int k) {
    BigCount o = 1;
    for (int i = 0; i < k; ++i) o *= (BigCount(1) << k) - (BigCount(1) << i);
    return o;
}

}  // namespace

BigCount count_cnk_oracle(int n, int k) {
    if (k < 1 || k > 4 || n < k || n > 10) throw std::invalid_argument("count_cnk_oracle: guarded to k <= 4, n <= 10");
    const int m = (1 << k) - 1;  // nonzero vectors of GF(2)^k
    if (n > m) return 0;

    // Count n-subsets of the nonzero vectors that span GF(2)^k. Every such
    // subset corresponds to n! ordered tuples, and GL(k,2) acts freely on
    // the tuples that define the same subgroup.
    BigCount spanning = 0;
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<BitWord> rows;
        rows.reserve(static_cast<size_t>(n));
        for (int i : idx) rows.emplace_back(k, static_cast<std::uint64_t>(i + 1));
        if (rank_gf2(GF2Matrix(std::move(rows))) == k) ++spanning;

        int i = n - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - n + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }

    BigCount tuples = spanning * factorial(n);
    BigCount gl = gl2_order(k);
    if (tuples % gl != 0) throw std::logic_error("count_cnk_oracle: tuple count not divisible by |GL(k,2)|");
    return tuples / gl;
}

BigCount dnk_bruteforce(int n, int k) {
    if (n < 1 || n > 4 || k < 1 || k > n) throw std::invalid_argument("dnk_bruteforce: guarded to n <= 4");
    const int total = 1 << n;
    const int size = 1 << k;
    BigCount count = 0;
    std::vector<int> idx(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<BitWord> pts;
        pts.reserve(static_cast<size_t>(size));
        for (int i : idx) pts.emplace_back(n, static_cast<std::uint64_t>(i));
        if (affine_dim(VertexSet01{n, std::move(pts)}) == n) ++count;

        int i = size - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == total - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return count;
}

std::optional<std::vector<BitWord>> regular_simplex_subgroup(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("regular_simplex_subgroup: guarded to n <= 7");
    const unsigned np1 = static_cast<unsigned>(n) + 1;
    if ((np1 & (np1 - 1)) != 0) return std::nullopt;  // subgroup sizes are powers of two
    int m = 0;
    while ((1u << m) < np1) ++m;

    for (const auto& basis : subspace_bases(n, m)) {
        auto elems = span_enumerate(basis, n);
        int weight = -1;
        bool ok = true;
        for (const auto& e : elems) {
            if (e.is_zero()) continue;
            if (weight < 0) weight = e.popcount();
            if (e.popcount() != weight) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // Equal nonzero weights give equal pairwise Hamming distances on a
        // subgroup; re-check explicitly and require a full-dimensional hull.
        for (size_t i = 0; ok && i < elems.size(); ++i)
            for (size_t j = i + 1; ok && j < elems.size(); ++j)
                if ((elems[i] ^ elems[j]).popcount() != weight) ok = false;
        if (!ok) continue;
        if (affine_dim(VertexSet01{n, elems}) == n) return elems;
    }
    return std::nullopt;
}

bool subgroup_hull_fulldim_fast(const std::vector<BitWord>& subgroup, int n) {
    auto basis = group_echelon_basis(subgroup);
    const int k = static_cast<int>(basis.size());
    if (k == 0) return n == 0;
    std::set<std::uint64_t> cols;
    for (int i = 0; i < n; ++i) {
        std::uint64_t col = 0;
        for (int j = 0; j < k; ++j)
            if (basis[static_cast<size_t>(j)].get(i)) col |= std::uint64_t(1) << j;
        if (col == 0) return false;
        if (!cols.insert(col).second) return false;
    }
    return true;
}

std::vector<std::vector<BitWord>> all_subgroups(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_subgroups: guarded to n <= 8");
    std::vector<std::vector<BitWord>> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& basis : subspace_bases(n, k)) out.push_back(span_enumerate(basis, n));
    return out;
}

}  // namespace ppoly
