#ifndef PPOLY_GEOMETRY_HPP
#define PPOLY_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ppoly/bases.hpp"
#include "ppoly/hypergraph.hpp"
#include "ppoly/linalg.hpp"

namespace ppoly {

/// Finite set of distinct 0/1 points in R^d, held sorted ascending by
/// packed value. All geometry below is exact: integer ranks and rational
/// LP feasibility, no floating point.
struct VertexSet01 {
    int d = 0;
    std::vector<BitWord> points;
};

/// Sorts and validates (distinct, common width). Throws on duplicates.
VertexSet01 make_vertex_set(std::vector<BitWord> points);

/// The rows of a 0/1-valued statistic matrix as a vertex set.
VertexSet01 vertex_set_from_rows(const StatisticMatrix& m);

int index_of_point(const VertexSet01& v, const BitWord& p);

/// Rank of {p - p0 : p in points} over the rationals.
int affine_dim(const VertexSet01& v);

/// Convex-combination membership, decided by exact LP feasibility.
bool contains_point(const VertexSet01& v, const QVector& p);

/// True iff some rational (c, b) has c.p = b on the subset and
/// c.q <= b - margin off it. The margin only rescales the feasibility
/// cone, so any positive value yields the same predicate.
bool is_face(const VertexSet01& v, std::uint64_t subset_mask, const Int& margin = 1);
bool is_face(const VertexSet01& v, const std::vector<int>& subset, const Int& margin = 1);

/// All facets of a full-dimensional vertex set, found by scanning the
/// hyperplanes spanned by affinely independent d-subsets of points and
/// keeping the supporting ones. Faces are identified by their
/// vertex-incidence masks.
std::vector<std::uint64_t> facet_masks(const VertexSet01& v);
std::vector<std::vector<int>> facets(const VertexSet01& v);

/// All faces grouped by affine dimension, 0 up to d. The full polytope is
/// counted, the empty face is not.
struct FaceLattice {
    int d = 0;
    std::vector<std::vector<std::vector<int>>> faces_by_dim;
    std::vector<long long> f_vector;
};

/// Intersection closure of the facet vertex sets (plus the full set).
/// Guarded by default to |points| <= 16 and d <= 15; pass larger limits to
/// override (the CLI maps PP_MAX_DIM onto them).
FaceLattice face_lattice(const VertexSet01& v, int max_points = 16, int max_dim = 15);

/// Every vertex on exactly d edges.
bool is_simple(const FaceLattice& l);

/// Face test special to the one-affine-dependency polytope of the family
/// with all sets of size < n: a proper configuration subset spans a face
/// iff it contains neither parity class of {0,1}^n.
bool simplex_face_criterion(int n, const std::vector<BitWord>& subset_configs);

/// Cut vectors of a graph over its edge coordinates, S ~ complement(S)
/// deduplicated. Graphs capped at 6 vertices.
VertexSet01 cut_polytope_vertices(const Graph& g);

/// cdd-style V-representation text.
std::string to_vrep(const VertexSet01& v);
VertexSet01 vertex_set_from_vrep(const std::string& text);

/// JSON: {"d": <int>, "points": [[0/1,...],...]}.
std::string vertex_set_to_json(const VertexSet01& v);
VertexSet01 vertex_set_from_json(const std::string& text);

/// JSON: faces grouped by dimension as arrays of 0-based vertex indices.
std::string lattice_to_json(const FaceLattice& l);

}  // namespace ppoly

#endif
