#pragma once

#include "tropcurve/embedding.hpp"
#include "tropcurve/polynomial.hpp"

#include <string>
#include <vector>

namespace tropcurve {

enum class LineKind { TypeI, TypeII };

// Per-vertex linear ideal of the schoen embedding over the interior-face
// variables x_{F1}..x_{Fg} (variable index = face number - 1).
//   TypeI  (exterior vertex): x_F for the g-2 faces not incident on v.
//   TypeII (interior vertex): x_F for the g-3 non-incident faces plus the sum
//   of the three incident ones.
struct LineIdeal {
    int vertex;
    LineKind kind;
    std::vector<int> zero_vars;    // sorted
    std::vector<int> sum_support;  // TypeII only, sorted, size 3
};

std::vector<LineIdeal> build_schoen(const PlanarEmbedding& e);

// Dual complex of the 3-polytope associated to the graph: vertices are the
// faces of the embedding (outer included, as the last index), facets the
// face-triples around each graph vertex.
struct DualComplexM {
    std::vector<std::string> vertex_ids;             // "F1".."Fg", "outer"
    std::vector<std::vector<int>> facets;            // sorted triples, one per graph vertex
    std::vector<std::vector<int>> minimal_nonfaces;  // sorted sets, sorted
    int num_interior = 0;
};

DualComplexM dual_complex(const PlanarEmbedding& e);

// One generator per minimal non-face of M; the outer-face variable is
// replaced by minus the sum of all interior-face variables.
struct SRGenerator {
    std::vector<int> vars;  // interior-variable factors, sorted
    bool has_sum = false;   // one factor -(x_{F1}+...+x_{Fg})
    PolyQ expanded;         // sign-normalized
};

struct GeneratorSet {
    int num_vars = 0;
    std::vector<SRGenerator> gens;
};

GeneratorSet stanley_reisner_generators(const DualComplexM& m);

// True iff every generator reduces to zero modulo every line ideal
// (zero_vars to 0; for TypeII, one sum variable eliminated via the sum form).
bool verify_containment(const GeneratorSet& gens, const std::vector<LineIdeal>& lines);

std::vector<std::string> face_variable_names(int g);
std::string ideal_to_string(const LineIdeal& line, const std::vector<std::string>& names);
std::string generator_to_string(const SRGenerator& gen, const std::vector<std::string>& names);

}  // namespace tropcurve
