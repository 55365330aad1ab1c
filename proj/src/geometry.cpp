#include "ppoly/geometry.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "ppoly/lp.hpp"

namespace ppoly {

VertexSet01 make_vertex_set(std::vector<BitWord> points) {
    if (points.empty()) throw std::invalid_argument("vertex set: must be nonempty");
    int d = points[0].width;
    for (const auto& p : points)
        if (p.width != d) throw std::invalid_argument("vertex set: mixed widths");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::invalid_argument("vertex set: duplicate point");
    return VertexSet01{d, std::move(points)};
}

VertexSet01 vertex_set_from_rows(const StatisticMatrix& m) {
    if (m.kind == BasisKind::character)
        throw std::invalid_argument("vertex_set_from_rows: character entries are not 0/1");
    if (m.cols > 64) throw std::invalid_argument("vertex_set_from_rows: more than 64 coordinates");
    std::vector<BitWord> pts;
    pts.reserve(static_cast<size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r) {
        BitWord p(m.cols, 0);
        for (int c = 0; c < m.cols; ++c) p.set(c, m.entry(r, c) != 0);
        pts.push_back(p);
    }
    return make_vertex_set(std::move(pts));
}

int index_of_point(const VertexSet01& v, const BitWord& p) {
    auto it = std::lower_bound(v.points.begin(), v.points.end(), p);
    if (it == v.points.end() || !(*it == p)) return -1;
    return static_cast<int>(it - v.points.begin());
}

namespace {

// Fraction-free elimination in 64-bit arithmetic. Intermediates are minors
// of the input, so entries in {-1,0,1} with min(rows,cols) <= 16 stay well
// inside the int64 range.
int rank_pm1_64(std::vector<std::vector<long long>> a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return 0;
    const int n = static_cast<int>(a[0].size());
    long long den = 1;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(piv)]);
        auto& pr = a[static_cast<size_t>(r)];
        for (int i = r + 1; i < m; ++i) {
            auto& ri = a[static_cast<size_t>(i)];
            long long f = ri[static_cast<size_t>(c)];
            for (int j = c + 1; j < n; ++j)
                ri[static_cast<size_t>(j)] = (ri[static_cast<size_t>(j)] * pr[static_cast<size_t>(c)] - f * pr[static_cast<size_t>(j)]) / den;
            ri[static_cast<size_t>(c)] = 0;
        }
        den = pr[static_cast<size_t>(c)];
        ++r;
    }
    return r;
}

int affine_dim_masked(const VertexSet01& v, std::uint64_t mask) {
    std::vector<const BitWord*> pts;
    for (size_t i = 0; i < v.points.size(); ++i)
        if ((mask >> i) & 1) pts.push_back(&v.points[i]);
    if (pts.empty()) throw std::invalid_argument("affine_dim: empty point set");
    const int m = static_cast<int>(pts.size());
    if (m == 1) return 0;

    if (std::min(m - 1, v.d) <= 16) {
        std::vector<std::vector<long long>> rows(static_cast<size_t>(m - 1),
                                                 std::vector<long long>(static_cast<size_t>(v.d)));
        for (int i = 1; i < m; ++i)
            for (int j = 0; j < v.d; ++j)
                rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] =
                    static_cast<long long>(pts[static_cast<size_t>(i)]->get(j)) - static_cast<long long>(pts[0]->get(j));
        return rank_pm1_64(std::move(rows));
    }

    IntMatrix rows(static_cast<size_t>(m - 1), std::vector<Int>(static_cast<size_t>(v.d)));
    for (int i = 1; i < m; ++i)
        for (int j = 0; j < v.d; ++j)
            rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] =
                static_cast<int>(pts[static_cast<size_t>(i)]->get(j)) - static_cast<int>(pts[0]->get(j));
    return int_rank(std::move(rows));
}

std::uint64_t full_mask(const VertexSet01& v) {
    size_t m = v.points.size();
    return m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;
}

}  // namespace

int affine_dim(const VertexSet01& v) {
    if (v.points.size() > 64) {
        // No mask shortcut; direct matrix build.
        const int m = static_cast<int>(v.points.size());
        IntMatrix rows(static_cast<size_t>(m - 1), std::vector<Int>(static_cast<size_t>(v.d)));
        for (int i = 1; i < m; ++i)
            for (int j = 0; j < v.d; ++j)
                rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] =
                    static_cast<int>(v.points[static_cast<size_t>(i)].get(j)) -
                    static_cast<int>(v.points[0].get(j));
        return int_rank(std::move(rows));
    }
    return affine_dim_masked(v, full_mask(v));
}

bool contains_point(const VertexSet01& v, const QVector& p) {
    if (static_cast<int>(p.size()) != v.d) throw std::invalid_argument("contains_point: wrong length");
    const size_t m = v.points.size();
    QMatrix a(static_cast<size_t>(v.d) + 1, QVector(m, Rational(0)));
    QVector b(static_cast<size_t>(v.d) + 1);
    for (int j = 0; j < v.d; ++j) {
        for (size_t i = 0; i < m; ++i) a[static_cast<size_t>(j)][i] = v.points[i].get(j) ? 1 : 0;
        b[static_cast<size_t>(j)] = p[static_cast<size_t>(j)];
    }
    for (size_t i = 0; i < m; ++i) a[static_cast<size_t>(v.d)][i] = 1;
    b[static_cast<size_t>(v.d)] = 1;
    return lp_feasible_eq(std::move(a), std::move(b));
}

bool is_face(const VertexSet01& v, std::uint64_t subset_mask, const Int& margin) {
    if (v.points.size() > 64) throw std::invalid_argument("is_face: more than 64 points");
    if (margin <= 0) throw std::invalid_argument("is_face: margin must be positive");
    if ((subset_mask & ~full_mask(v)) != 0) throw std::invalid_argument("is_face: mask out of range");

    LinearSystem sys(v.d + 1);  // unknowns (c_1..c_d, b)
    for (size_t i = 0; i < v.points.size(); ++i) {
        QVector coeffs(static_cast<size_t>(v.d) + 1, Rational(0));
        for (int j = 0; j < v.d; ++j) coeffs[static_cast<size_t>(j)] = v.points[i].get(j) ? 1 : 0;
        coeffs[static_cast<size_t>(v.d)] = -1;
        if ((subset_mask >> i) & 1)
            sys.add_eq(std::move(coeffs), Rational(0));
        else
            sys.add_le(std::move(coeffs), Rational(-margin));
    }
    return sys.feasible();
}

bool is_face(const VertexSet01& v, const std::vector<int>& subset, const Int& margin) {
    std::uint64_t mask = 0;
    for (int i : subset) {
        if (i < 0 || i >= static_cast<int>(v.points.size())) throw std::invalid_argument("is_face: index out of range");
        mask |= std::uint64_t(1) << i;
    }
    return is_face(v, mask, margin);
}

namespace {

// Candidate cap for the d-subset scan; the desk-scale inputs stay far
// below it.
constexpr std::uint64_t kMaxFacetCandidates = 20'000'000;

std::uint64_t binomial_capped(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r > kMaxFacetCandidates) return r;
    }
    return r;
}

}  // namespace

std::vector<std::uint64_t> facet_masks(const VertexSet01& v) {
    const int m = static_cast<int>(v.points.size());
    const int d = v.d;
    if (m > 64) throw std::invalid_argument("facets: more than 64 points");
    if (affine_dim(v) != d) throw std::invalid_argument("facets: vertex set is not full-dimensional");
    if (d == 0) return {};
    if (binomial_capped(m, d) > kMaxFacetCandidates)
        throw std::invalid_argument("facets: candidate scan too large for this input");

    std::set<std::uint64_t> out;
    std::vector<int> idx(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
    if (d > m) return {};

    while (true) {
        // Hyperplane through the chosen points, if they affinely span one.
        IntMatrix mat(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(d) + 1));
        for (int i = 0; i < d; ++i) {
            const BitWord& p = v.points[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            for (int j = 0; j < d; ++j) mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = p.get(j) ? 1 : 0;
            mat[static_cast<size_t>(i)][static_cast<size_t>(d)] = -1;
        }
        std::vector<Int> cb = nullspace_dim1(mat);
        if (!cb.empty()) {
            bool pos = false, neg = false;
            std::uint64_t incidence = 0;
            for (int i = 0; i < m; ++i) {
                Int s = -cb[static_cast<size_t>(d)];
                for (int j = 0; j < d; ++j)
                    if (v.points[static_cast<size_t>(i)].get(j)) s += cb[static_cast<size_t>(j)];
                if (s > 0) pos = true;
                else if (s < 0) neg = true;
                else incidence |= std::uint64_t(1) << i;
            }
            if (!(pos && neg)) out.insert(incidence);
        }

        int i = d - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - d + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < d; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return {out.begin(), out.end()};
}

namespace {

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) out.push_back(i);
    return out;
}

}  // namespace

std::vector<std::vector<int>> facets(const VertexSet01& v) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask : facet_masks(v)) out.push_back(mask_to_indices(mask));
    return out;
}

FaceLattice face_lattice(const VertexSet01& v, int max_points, int max_dim) {
    const int m = static_cast<int>(v.points.size());
    if (m > max_points || v.d > max_dim) {
        std::ostringstream os;
        os << "face_lattice: size guard exceeded (" << m << " points, dimension " << v.d
           << "; limits " << max_points << "/" << max_dim << "); pass larger limits to override";
        throw std::invalid_argument(os.str());
    }

    std::vector<std::uint64_t> fmasks = facet_masks(v);

    // Every proper face is an intersection of facet vertex sets, so close
    // the facet masks under pairwise intersection.
    std::unordered_set<std::uint64_t> seen(fmasks.begin(), fmasks.end());
    std::deque<std::uint64_t> work(fmasks.begin(), fmasks.end());
    while (!work.empty()) {
        std::uint64_t cur = work.front();
        work.pop_front();
        for (std::uint64_t f : fmasks) {
            std::uint64_t h = cur & f;
            if (h != 0 && seen.insert(h).second) work.push_back(h);
        }
    }
    seen.insert(full_mask(v));

    FaceLattice l;
    l.d = v.d;
    l.faces_by_dim.assign(static_cast<size_t>(v.d) + 1, {});
    std::vector<std::vector<std::uint64_t>> masks_by_dim(static_cast<size_t>(v.d) + 1);
    for (std::uint64_t mask : seen) {
        int dim = affine_dim_masked(v, mask);
        masks_by_dim[static_cast<size_t>(dim)].push_back(mask);
    }
    l.f_vector.assign(static_cast<size_t>(v.d) + 1, 0);
    for (int k = 0; k <= v.d; ++k) {
        auto& masks = masks_by_dim[static_cast<size_t>(k)];
        std::sort(masks.begin(), masks.end());
        l.f_vector[static_cast<size_t>(k)] = static_cast<long long>(masks.size());
        for (std::uint64_t mask : masks) l.faces_by_dim[static_cast<size_t>(k)].push_back(mask_to_indices(mask));
    }
    return l;
}

bool is_simple(const FaceLattice& l) {
    if (l.faces_by_dim.empty()) return true;
    const auto& vertices = l.faces_by_dim[0];
    if (l.d == 0) return true;
    std::vector<int> edge_count;
    for (const auto& vtx : vertices)
        edge_count.resize(std::max(edge_count.size(), static_cast<size_t>(vtx[0]) + 1), 0);
    for (const auto& edge : l.faces_by_dim[1])
        for (int i : edge) ++edge_count[static_cast<size_t>(i)];
    for (const auto& vtx : vertices)
        if (edge_count[static_cast<size_t>(vtx[0])] != l.d) return false;
    return true;
}

bool simplex_face_criterion(int n, const std::vector<BitWord>& subset_configs) {
    if (n < 1 || n > 30) throw std::invalid_argument("simplex_face_criterion: n out of range");
    std::set<std::uint64_t> have;
    for (const auto& x : subset_configs) {
        if (x.width != n) throw std::invalid_argument("simplex_face_criterion: config width mismatch");
        have.insert(x.bits);
    }
    bool odd_missing = false, even_missing = false;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) {
        bool in = have.count(x) != 0;
        if (in) continue;
        if (std::popcount(x) & 1)
            odd_missing = true;
        else
            even_missing = true;
    }
    return odd_missing && even_missing;
}

VertexSet01 cut_polytope_vertices(const Graph& g) {
    if (g.n > 6) throw std::invalid_argument("cut_polytope_vertices: graphs capped at 6 vertices");
    const int d = static_cast<int>(g.edges.size());
    std::set<BitWord> cuts;
    const std::uint64_t top = g.n == 0 ? 1 : (std::uint64_t(1) << g.n);
    for (std::uint64_t s = 0; s < top; ++s) {
        if (g.n >= 1 && (s & 1)) continue;  // S and its complement cut alike
        BitWord cut(d, 0);
        for (int e = 0; e < d; ++e) {
            bool a = (s >> (g.edges[static_cast<size_t>(e)].first - 1)) & 1;
            bool b = (s >> (g.edges[static_cast<size_t>(e)].second - 1)) & 1;
            cut.set(e, a != b);
        }
        cuts.insert(cut);
    }
    return make_vertex_set({cuts.begin(), cuts.end()});
}

std::string to_vrep(const VertexSet01& v) {
    std::ostringstream os;
    os << "V-representation\nbegin\n" << v.points.size() << ' ' << (v.d + 1) << " rational\n";
    for (const auto& p : v.points) {
        os << 1;
        for (int j = 0; j < v.d; ++j) os << ' ' << (p.get(j) ? 1 : 0);
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

VertexSet01 vertex_set_from_vrep(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    auto expect = [&](const std::string& want) {
        if (!(in >> tok) || tok != want)
            throw std::invalid_argument("V-representation: expected \"" + want + "\"");
    };
    expect("V-representation");
    expect("begin");
    long long m = 0, dp1 = 0;
    if (!(in >> m >> dp1 >> tok) || tok != "rational" || m < 1 || dp1 < 1)
        throw std::invalid_argument("V-representation: malformed header");
    const int d = static_cast<int>(dp1 - 1);
    if (d > 64) throw std::invalid_argument("V-representation: more than 64 coordinates");
    std::vector<BitWord> pts;
    for (long long i = 0; i < m; ++i) {
        std::string lead;
        if (!(in >> lead) || lead != "1")
            throw std::invalid_argument("V-representation: rows must start with 1 (points only)");
        BitWord p(d, 0);
        for (int j = 0; j < d; ++j) {
            if (!(in >> tok)) throw std::invalid_argument("V-representation: truncated row");
            Rational val(tok);
            if (val == 1)
                p.set(j, true);
            else if (val != 0)
                throw std::invalid_argument("V-representation: coordinates must be 0 or 1");
        }
        pts.push_back(p);
    }
    expect("end");
    return make_vertex_set(std::move(pts));
}

std::string vertex_set_to_json(const VertexSet01& v) {
    nlohmann::json j;
    j["d"] = v.d;
    j["points"] = nlohmann::json::array();
    for (const auto& p : v.points) {
        nlohmann::json jp = nlohmann::json::array();
        for (int i = 0; i < v.d; ++i) jp.push_back(p.get(i) ? 1 : 0);
        j["points"].push_back(jp);
    }
    return j.dump();
}

VertexSet01 vertex_set_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("vertex set JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("d") || !j.contains("points"))
        throw std::invalid_argument("vertex set JSON: expected object with \"d\" and \"points\"");
    int d = j["d"].get<int>();
    if (d < 0 || d > 64) throw std::invalid_argument("vertex set JSON: \"d\" out of range");
    std::vector<BitWord> pts;
    for (const auto& jp : j["points"]) {
        if (!jp.is_array() || static_cast<int>(jp.size()) != d)
            throw std::invalid_argument("vertex set JSON: point of wrong length");
        BitWord p(d, 0);
        for (int i = 0; i < d; ++i) {
            int val = jp[static_cast<size_t>(i)].get<int>();
            if (val != 0 && val != 1) throw std::invalid_argument("vertex set JSON: coordinates must be 0/1");
            p.set(i, val == 1);
        }
        pts.push_back(p);
    }
    return make_vertex_set(std::move(pts));
}

std::string lattice_to_json(const FaceLattice& l) {
    nlohmann::json j;
    j["d"] = l.d;
    j["f_vector"] = l.f_vector;
    j["faces"] = l.faces_by_dim;
    return j.dump();
}

}  // namespace ppoly
