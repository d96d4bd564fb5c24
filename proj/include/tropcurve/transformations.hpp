#pragma once

#include "tropcurve/embedding.hpp"

#include <string>
#include <vector>

namespace tropcurve {

struct MoveRecord {
    enum class Kind { DeltaY, YDelta, ContractElongate };
    Kind kind;
    std::string site;                      // face id / vertex label / "u-v"
    std::vector<std::string> removed;      // DY: triangle corners in walk order; YD: centre; CE: (u,v)
    std::vector<std::string> created;      // DY: (w); YD: corners in rotation order; CE: (w1,w2)
    std::vector<std::string> attachments;  // DY/YD: outside neighbors aligned with removed/created; CE: (p,q,r,s)
};

struct ReductionTrace {
    PlanarEmbedding start;
    std::vector<MoveRecord> moves;
    std::vector<PlanarEmbedding> intermediates;  // after each move; back() is K4

    const PlanarEmbedding& final() const {
        return intermediates.empty() ? start : intermediates.back();
    }
};

// Contracts an interior triangular face to a single degree-3 vertex. Genus
// drops by one. A would-be parallel edge (two corners sharing their outside
// neighbor) is an error, never repaired.
PlanarEmbedding delta_y(const PlanarEmbedding& e, const std::string& face_id,
                        MoveRecord* rec = nullptr,
                        const std::vector<std::string>& new_names = {});

// Replaces a vertex by a triangle on three new vertices; exact inverse of
// delta_y. new_names, when given, are aligned with the rotation at v.
PlanarEmbedding y_delta(const PlanarEmbedding& e, const std::string& vertex,
                        MoveRecord* rec = nullptr,
                        const std::vector<std::string>& new_names = {});

// Contracts the edge u-v (which must border two interior faces) and re-splits
// the 4-valent vertex the transverse way. Genus is unchanged; applying the
// move to the created edge undoes it up to relabelling.
PlanarEmbedding contract_elongate(const PlanarEmbedding& e, const std::string& u,
                                  const std::string& v, MoveRecord* rec = nullptr,
                                  const std::vector<std::string>& new_names = {});

// Lemma-style reduction: while genus exceeds 3, contract an interior triangle
// if one exists, otherwise shrink the minimum-length interior face with
// contraction-elongation moves until a triangle appears. Every intermediate
// is re-validated. Deterministic tie-breaking throughout.
ReductionTrace reduce_to_k4(const PlanarEmbedding& e);

// Replays the trace backwards from K4 (each DeltaY inverted to YDelta, each
// contraction-elongation inverted on the created edge), restoring the
// recorded vertex names. Returns the K4-to-G sequence and checks each stage
// against the stored intermediates.
std::vector<PlanarEmbedding> replay_inverse(const ReductionTrace& t);

std::string serialize_trace(const ReductionTrace& t);

// Applies a serialized trace ("DY face=<id>" / "CE edge=<u>-<v>" lines) to an
// embedding; returns the embedding sequence including the start.
std::vector<PlanarEmbedding> apply_trace_text(const PlanarEmbedding& start,
                                              const std::string& trace_text);

}  // namespace tropcurve
