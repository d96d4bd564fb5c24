#pragma once

#include "tropcurve/schoen.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tropcurve {

// Point of tropical projective space: coordinates are finite exactly on the
// support and normalized so the minimum is 0.
struct TropicalPoint {
    std::vector<int> support;  // sorted variable indices
    std::vector<Rat> coords;   // parallel to support

    bool operator==(const TropicalPoint& o) const {
        return support == o.support && coords == o.coords;
    }
};

TropicalPoint make_point(std::vector<int> support, std::vector<Rat> coords);

// A linear factor as seen tropically: a single variable (facet constraint)
// or a linear form with the given support (min attained twice).
struct TropFactor {
    bool is_var = true;
    int var = -1;
    std::vector<int> form_support;  // sorted

    static TropFactor variable(int v) { return {true, v, {}}; }
    static TropFactor form(std::vector<int> support) { return {false, -1, std::move(support)}; }
};

bool point_in_tropproj(const TropicalPoint& p, const TropFactor& factor);

// Tropical geometry of one line: TypeI is the closed simplex edge on its
// support pair; TypeII is the tripod in the 2-face on sum_support (branch
// point plus three rays labelled by the pairs of sum_support).
struct TropicalLineGeom {
    int vertex;
    LineKind kind;
    std::array<int, 2> edge_support{-1, -1};  // TypeI
    std::vector<int> tripod_support;          // TypeII, sorted, size 3
};

TropicalLineGeom tropicalize_line(const LineIdeal& line);

enum class NodeTag { Corner, RayEndpoint, BranchPoint, Subdivision };

struct TCNode {
    std::string id;
    TropicalPoint point;
    NodeTag tag;
    std::vector<int> lines;  // vertices whose lines pass through this node
};

// One-parameter cells, coordinates 0 / t / infinity:
//   HalfEdge: zero_set={A}, t_set={B}, t in [0,inf]; from the subdivision
//             point of the simplex edge {A,B} out to corner A.
//   FullEdge: an unsubdivided simplex edge; t ranges over all of R.
//   Ray:      zero_set={x,y}, t_set={z}; from the branch point (t=0) to the
//             boundary point with support {x,y} (t=inf).
enum class CellShape { HalfEdge, FullEdge, Ray };

struct TCSegment {
    int from, to;  // node indices
    int line;
    std::string label;
    CellShape shape;
    std::vector<int> zero_set;
    std::vector<int> t_set;
};

struct TropicalComplex {
    int num_vars = 0;
    std::vector<TCNode> nodes;
    std::vector<TCSegment> segments;
    std::vector<TropicalLineGeom> lines;

    std::optional<int> node_by_support(const std::vector<int>& support) const;
};

// Resolves all pairwise incidences: TypeI edges meeting at shared corners,
// ray endpoints subdividing TypeI edges, and coincident ray endpoints glued.
// Overlapping 1-cells from distinct lines are an error.
TropicalComplex build_arrangement(const std::vector<TropicalLineGeom>& lines, int num_vars);

// True iff the factor contains the whole cell, decided symbolically from the
// cell parameterization (never by sampling).
bool cell_in_tropproj(const TCSegment& seg, const TropFactor& factor);

struct SelectionPiece {
    std::vector<int> forced_infinity;  // variables selected as facet factors
    bool has_sum = false;
    std::vector<int> free_support;     // complement
    int dimension = -1;                // -1 when empty
    std::vector<int> selection;        // chosen factor index per generator (-1 = sum form)
};

// One piece per element of the cartesian product of factor lists, deduplicated.
std::vector<SelectionPiece> enumerate_selection_pieces(const GeneratorSet& gens);

struct BasisCheckResult {
    bool pass = false;
    std::string message;  // first violation when failing
};

// Certifies that the generator set is a tropical basis for the arrangement:
// (a) every cell lies in tropproj of every generator, uniformly per cell, and
// (b) every selection piece is at most 1-dimensional and covered by the
// arrangement.
BasisCheckResult tropical_basis_check(const GeneratorSet& gens, const TropicalComplex& complex);

std::vector<TropFactor> generator_factors(const SRGenerator& gen, int num_vars);

}  // namespace tropcurve
