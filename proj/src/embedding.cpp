#include "tropcurve/embedding.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tropcurve {

bool Face::contains_vertex(int v) const {
    return std::find(walk.begin(), walk.end(), v) != walk.end();
}

bool Face::contains_edge(int u, int v) const {
    int n = length();
    for (int i = 0; i < n; ++i) {
        int a = walk[i], b = walk[(i + 1) % n];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

namespace {

// Least rotation of the closed walk, preserving direction.
std::vector<int> canonical_walk(const std::vector<int>& walk, const Graph& g) {
    int n = static_cast<int>(walk.size());
    auto label_less = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int i = 0; i < n; ++i) {
            const std::string& la = g.label(a[i]);
            const std::string& lb = g.label(b[i]);
            if (la != lb) return la < lb;
        }
        return false;
    };
    std::vector<int> best = walk;
    std::vector<int> cur(n);
    for (int s = 1; s < n; ++s) {
        for (int i = 0; i < n; ++i) cur[i] = walk[(s + i) % n];
        if (label_less(cur, best)) best = cur;
    }
    return best;
}

std::string walk_key(const std::vector<int>& walk, const Graph& g) {
    std::string key;
    for (int v : walk) {
        key += g.label(v);
        key += ',';
    }
    return key;
}

}  // namespace

PlanarEmbedding::PlanarEmbedding(Graph graph, std::vector<std::vector<int>> rotation,
                                 const std::vector<int>& outer_walk_vertices)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    int n = graph_.size();
    if (static_cast<int>(rotation_.size()) != n)
        throw EmbeddingError("rotation system does not cover every vertex");
    // rotation at v must be a permutation of v's neighbors
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v) {
        auto nbrs = graph_.neighbors(v);
        auto rot_sorted = rotation_[v];
        std::sort(rot_sorted.begin(), rot_sorted.end());
        if (rot_sorted != nbrs)
            throw EmbeddingError("rotation at '" + graph_.label(v) +
                                 "' does not list its neighbors exactly once");
        for (size_t i = 0; i < rotation_[v].size(); ++i) pos[v][rotation_[v][i]] = static_cast<int>(i);
    }

    // trace face walks: the arc after u->v is v->w with w the successor of u
    // in the rotation at v
    arc_face_.assign(n, {});
    for (int v = 0; v < n; ++v) arc_face_[v].assign(rotation_[v].size(), -1);
    for (int u = 0; u < n; ++u) {
        for (size_t i = 0; i < rotation_[u].size(); ++i) {
            if (arc_face_[u][i] != -1) continue;
            int face_idx = static_cast<int>(faces_.size());
            std::vector<int> walk;
            int a = u, b = rotation_[u][i];
            while (true) {
                arc_face_[a][pos[a][b]] = face_idx;
                walk.push_back(a);
                int c = rotation_[b][(pos[b][a] + 1) % rotation_[b].size()];
                a = b;
                b = c;
                if (a == u && b == rotation_[u][i]) break;
            }
            Face f;
            f.walk = canonical_walk(walk, graph_);
            faces_.push_back(std::move(f));
        }
    }

    int euler = n - graph_.edge_count() + static_cast<int>(faces_.size());
    if (euler != 2)
        throw EmbeddingError("rotation system fails Euler's formula (V-E+F=" +
                             std::to_string(euler) + ", expected 2)");

    // pick the outer face
    if (!outer_walk_vertices.empty()) {
        std::set<int> want(outer_walk_vertices.begin(), outer_walk_vertices.end());
        int found = -1;
        for (size_t i = 0; i < faces_.size(); ++i) {
            std::set<int> have(faces_[i].walk.begin(), faces_[i].walk.end());
            if (have == want) {
                if (found != -1) throw EmbeddingError("outer face hint is ambiguous");
                found = static_cast<int>(i);
            }
        }
        if (found == -1) throw EmbeddingError("outer face hint matches no face");
        outer_index_ = found;
    } else {
        int best = 0;
        for (size_t i = 1; i < faces_.size(); ++i) {
            if (faces_[i].length() > faces_[best].length() ||
                (faces_[i].length() == faces_[best].length() &&
                 walk_key(faces_[i].walk, graph_) < walk_key(faces_[best].walk, graph_)))
                best = static_cast<int>(i);
        }
        outer_index_ = best;
    }
    faces_[outer_index_].is_outer = true;

    // number interior faces by sorted canonical walk
    std::vector<int> interior;
    for (size_t i = 0; i < faces_.size(); ++i)
        if (static_cast<int>(i) != outer_index_) interior.push_back(static_cast<int>(i));
    std::sort(interior.begin(), interior.end(), [&](int a, int b) {
        return walk_key(faces_[a].walk, graph_) < walk_key(faces_[b].walk, graph_);
    });
    for (size_t k = 0; k < interior.size(); ++k)
        faces_[interior[k]].id = "F" + std::to_string(k + 1);
    faces_[outer_index_].id = "outer";
}

int PlanarEmbedding::genus() const { return graph_.edge_count() - graph_.size() + 1; }

std::vector<const Face*> PlanarEmbedding::interior_faces() const {
    std::vector<const Face*> out(faces_.size() - 1, nullptr);
    for (const auto& f : faces_) {
        if (f.is_outer) continue;
        int idx = std::stoi(f.id.substr(1)) - 1;
        out[idx] = &f;
    }
    return out;
}

const Face* PlanarEmbedding::face_by_id(const std::string& id) const {
    for (const auto& f : faces_)
        if (f.id == id) return &f;
    return nullptr;
}

int PlanarEmbedding::face_of_arc(int u, int v) const {
    const auto& rot = rotation_[u];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == v) return arc_face_[u][i];
    throw std::invalid_argument("face_of_arc: no edge " + graph_.label(u) + "-" + graph_.label(v));
}

std::vector<int> PlanarEmbedding::faces_at_vertex(int v) const {
    std::vector<int> out;
    for (int f : arc_face_[v])
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool cyclic_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size()) return false;
    for (size_t s = 0; s < a.size(); ++s) {
        bool ok = true;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[(s + i) % a.size()] != b[i]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return a.empty();
}

std::vector<std::string> label_seq(const std::vector<int>& seq, const Graph& g) {
    std::vector<std::string> out;
    out.reserve(seq.size());
    for (int v : seq) out.push_back(g.label(v));
    return out;
}

}  // namespace

// Label-keyed equality: vertex insertion order is irrelevant.
bool PlanarEmbedding::operator==(const PlanarEmbedding& other) const {
    std::vector<std::string> la = graph_.labels(), lb = other.graph_.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return false;

    auto edge_labels = [](const Graph& g) {
        std::set<std::pair<std::string, std::string>> out;
        for (auto [u, v] : g.edges()) {
            std::string a = g.label(u), b = g.label(v);
            if (b < a) std::swap(a, b);
            out.emplace(a, b);
        }
        return out;
    };
    if (edge_labels(graph_) != edge_labels(other.graph_)) return false;

    for (const auto& label : la) {
        int u = graph_.require_index(label);
        int v = other.graph_.require_index(label);
        if (!cyclic_equal(label_seq(rotation_[u], graph_),
                          label_seq(other.rotation_[v], other.graph_)))
            return false;
    }
    return cyclic_equal(label_seq(outer().walk, graph_),
                        label_seq(other.outer().walk, other.graph_));
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

std::optional<std::vector<std::vector<int>>> compute_planar_rotation(
    const Graph& g, std::vector<std::pair<std::string, std::string>>* witness) {
    BoostGraph bg(g.size());
    int eid = 0;
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, eid++, bg);

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding(g.size());
    std::vector<EdgeDesc> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (!planar) {
        if (witness) {
            for (const auto& e : kuratowski)
                witness->emplace_back(g.label(static_cast<int>(boost::source(e, bg))),
                                      g.label(static_cast<int>(boost::target(e, bg))));
        }
        return std::nullopt;
    }
    std::vector<std::vector<int>> rotation(g.size());
    for (int v = 0; v < g.size(); ++v)
        for (const auto& e : embedding[v]) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            rotation[v].push_back(a == v ? b : a);
        }
    return rotation;
}

PlanarEmbedding planar_embed(const GraphFile& gf,
                             const std::optional<std::vector<std::string>>& outer_hint) {
    const Graph& g = gf.graph;
    if (!is_connected(g)) throw std::invalid_argument("planar_embed: graph is disconnected");

    std::vector<std::vector<int>> rotation;
    if (!gf.rotation.empty()) {
        if (static_cast<int>(gf.rotation.size()) != g.size())
            throw EmbeddingError("rotation lines must cover every vertex or be absent");
        rotation.resize(g.size());
        for (const auto& [label, nbrs] : gf.rotation) {
            int v = g.require_index(label);
            for (const auto& nl : nbrs) rotation[v].push_back(g.require_index(nl));
        }
    } else {
        std::vector<std::pair<std::string, std::string>> witness;
        auto rot = compute_planar_rotation(g, &witness);
        if (!rot) throw NotPlanarError(std::move(witness));
        rotation = std::move(*rot);
    }

    std::vector<int> outer_vertices;
    const std::vector<std::string>* hint = nullptr;
    if (outer_hint && !outer_hint->empty())
        hint = &*outer_hint;
    else if (!gf.outer.empty())
        hint = &gf.outer;
    if (hint)
        for (const auto& l : *hint) outer_vertices.push_back(g.require_index(l));

    return PlanarEmbedding(g, std::move(rotation), outer_vertices);
}

VertexClassification classify_vertices(const PlanarEmbedding& e) {
    const Graph& g = e.graph();
    VertexClassification out;
    out.side.assign(g.size(), VertexSide::Interior);
    out.interior_neighbor.assign(g.size(), -1);
    for (int v : e.outer().walk) out.side[v] = VertexSide::Exterior;
    for (int v = 0; v < g.size(); ++v) {
        if (out.side[v] != VertexSide::Exterior) continue;
        std::vector<int> interior_nbrs;
        for (int u : g.neighbors(v))
            if (out.side[u] == VertexSide::Interior) interior_nbrs.push_back(u);
        if (interior_nbrs.size() != 1)
            throw HypothesisError("exterior vertex '" + g.label(v) + "' has " +
                                  std::to_string(interior_nbrs.size()) +
                                  " interior neighbors, expected exactly 1");
        out.interior_neighbor[v] = interior_nbrs[0];
    }
    return out;
}

bool check_lemma_3_9(const PlanarEmbedding& e) {
    const Graph& g = e.graph();
    std::vector<bool> exterior(g.size(), false);
    for (int v : e.outer().walk) exterior[v] = true;
    for (const auto& f : e.faces()) {
        if (f.is_outer) continue;
        std::vector<int> ext;
        for (int v : f.walk)
            if (exterior[v]) ext.push_back(v);
        for (size_t i = 0; i < ext.size(); ++i)
            for (size_t j = i + 1; j < ext.size(); ++j)
                if (!g.adjacent(ext[i], ext[j])) return false;
    }
    return true;
}

ValidationReport validate(const GraphFile& gf) {
    const Graph& g = gf.graph;
    ValidationReport r;
    r.simple = true;  // Graph construction rejects loops and parallel edges
    r.connected = is_connected(g);
    if (!r.connected) r.violations.push_back("graph is disconnected");
    r.cubic = is_cubic(g);
    if (!r.cubic) r.violations.push_back("graph is not 3-regular");
    if (r.connected) {
        r.edge_connectivity = edge_connectivity(g);
        r.bridgeless = r.edge_connectivity >= 2;
        r.three_connected = r.edge_connectivity >= 3;
        if (!r.bridgeless) r.violations.push_back("graph has a bridge");
        if (!r.three_connected)
            r.violations.push_back("edge connectivity " + std::to_string(r.edge_connectivity) +
                                   " < 3 (for cubic graphs this equals vertex connectivity)");
    }
    if (r.connected) {
        try {
            PlanarEmbedding e = planar_embed(gf);
            r.planar = true;
            r.lemma39_ok = check_lemma_3_9(e);
            if (!r.lemma39_ok)
                r.violations.push_back(
                    "two non-adjacent exterior vertices share an interior face");
        } catch (const NotPlanarError&) {
            r.planar = false;
            r.violations.push_back("graph is not planar");
        } catch (const EmbeddingError& ex) {
            r.planar = false;
            r.violations.push_back(std::string("embedding failed: ") + ex.what());
        }
    }
    return r;
}

std::string format_report(const ValidationReport& r) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "simple:            " << yn(r.simple) << "\n"
        << "connected:         " << yn(r.connected) << "\n"
        << "cubic:             " << yn(r.cubic) << "\n"
        << "bridgeless:        " << yn(r.bridgeless) << "\n"
        << "edge connectivity: " << r.edge_connectivity << "\n"
        << "planar:            " << yn(r.planar) << "\n"
        << "three-connected:   " << yn(r.three_connected) << "\n"
        << "lemma39 ok:        " << yn(r.lemma39_ok) << "\n";
    if (!r.violations.empty()) {
        out << "violations:\n";
        for (const auto& v : r.violations) out << "  - " << v << "\n";
    }
    return out.str();
}

}  // namespace tropcurve
