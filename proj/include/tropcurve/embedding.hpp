#pragma once

#include "tropcurve/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropcurve {

struct Face {
    std::string id;          // "F1".."Fg" for interior faces, "outer" for the outer face
    std::vector<int> walk;   // closed vertex walk, rotated so the least label leads
    bool is_outer = false;

    int length() const { return static_cast<int>(walk.size()); }
    bool contains_vertex(int v) const;
    bool contains_edge(int u, int v) const;
};

// Combinatorial planar embedding: rotation system plus a designated outer
// face. Face walks are derived once at construction; interior faces are
// numbered F1..Fg by sorting their canonical boundary walks.
class PlanarEmbedding {
public:
    PlanarEmbedding() = default;

    // Builds faces from the rotation system and checks Euler's formula.
    // outer_walk_vertices picks the outer face by vertex set; empty means the
    // default rule (max boundary length, ties by least canonical walk).
    PlanarEmbedding(Graph graph, std::vector<std::vector<int>> rotation,
                    const std::vector<int>& outer_walk_vertices);

    const Graph& graph() const { return graph_; }
    const std::vector<std::vector<int>>& rotation() const { return rotation_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& outer() const { return faces_[outer_index_]; }
    int outer_index() const { return outer_index_; }
    int genus() const;

    std::vector<const Face*> interior_faces() const;
    const Face* face_by_id(const std::string& id) const;

    // Index of the face whose walk contains the directed edge u->v.
    int face_of_arc(int u, int v) const;

    // The <=3 distinct faces incident on a vertex, as face indices.
    std::vector<int> faces_at_vertex(int v) const;

    bool operator==(const PlanarEmbedding& other) const;

private:
    Graph graph_;
    std::vector<std::vector<int>> rotation_;
    std::vector<Face> faces_;
    int outer_index_ = -1;
    std::vector<std::vector<int>> arc_face_;  // per vertex u: face of arc u->rotation_[u][i]
};

struct NotPlanarError : std::runtime_error {
    explicit NotPlanarError(std::vector<std::pair<std::string, std::string>> kuratowski)
        : std::runtime_error("graph is not planar"), witness(std::move(kuratowski)) {}
    std::vector<std::pair<std::string, std::string>> witness;  // K5/K3,3 subdivision edges
};

// Computes an embedding. A complete rotation system in the file is trusted
// for face structure but re-verified against Euler's formula; otherwise a
// rotation system is computed (Boyer-Myrvold). Throws NotPlanarError with a
// Kuratowski witness when no embedding exists.
PlanarEmbedding planar_embed(const GraphFile& gf,
                             const std::optional<std::vector<std::string>>& outer_hint = std::nullopt);

// Rotation-system-only planarity core, used by planar_embed and the census.
std::optional<std::vector<std::vector<int>>> compute_planar_rotation(
    const Graph& g, std::vector<std::pair<std::string, std::string>>* witness = nullptr);

enum class VertexSide { Exterior, Interior };

struct VertexClassification {
    std::vector<VertexSide> side;
    std::vector<int> interior_neighbor;  // exterior v -> its unique interior neighbor, else -1
};

// Partition by incidence with the outer face. Verifies (not assumes) that
// every exterior vertex has exactly one interior neighbor; violations throw
// HypothesisError.
VertexClassification classify_vertices(const PlanarEmbedding& e);

// True iff on every interior face, every pair of exterior vertices on its
// boundary is adjacent.
bool check_lemma_3_9(const PlanarEmbedding& e);

struct ValidationReport {
    bool simple = false;
    bool connected = false;
    bool cubic = false;
    bool bridgeless = false;
    int edge_connectivity = 0;
    bool planar = false;
    bool three_connected = false;
    bool lemma39_ok = false;
    std::vector<std::string> violations;

    bool all_ok() const {
        return simple && connected && cubic && bridgeless && planar && three_connected;
    }
};

ValidationReport validate(const GraphFile& gf);

std::string format_report(const ValidationReport& r);

}  // namespace tropcurve
