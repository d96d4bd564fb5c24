#include "tropcurve/transformations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tropcurve {

namespace {

std::vector<std::string> fresh_names(const Graph& g, int count) {
    std::vector<std::string> out;
    for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
        std::string cand = "n" + std::to_string(k);
        if (!g.has_vertex(cand)) out.push_back(cand);
    }
    return out;
}

// A directed arc of the old outer walk that survives surgery at `touched`,
// used to re-identify the outer face afterwards.
std::pair<int, int> outer_marker(const PlanarEmbedding& e, const std::set<int>& touched) {
    const auto& walk = e.outer().walk;
    int n = static_cast<int>(walk.size());
    for (int i = 0; i < n; ++i) {
        int a = walk[i], b = walk[(i + 1) % n];
        if (!touched.count(a) && !touched.count(b)) return {a, b};
    }
    throw MoveError("cannot track the outer face across this move");
}

struct Surgery {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::vector<std::string>> rotation;

    static Surgery from(const PlanarEmbedding& e) {
        Surgery s;
        const Graph& g = e.graph();
        s.labels = g.labels();
        for (auto [u, v] : g.edges()) s.edges.emplace_back(g.label(u), g.label(v));
        for (int v = 0; v < g.size(); ++v) {
            std::vector<std::string> rot;
            for (int u : e.rotation()[v]) rot.push_back(g.label(u));
            s.rotation[g.label(v)] = rot;
        }
        return s;
    }

    void remove_vertex(const std::string& v) {
        labels.erase(std::remove(labels.begin(), labels.end(), v), labels.end());
        edges.erase(std::remove_if(edges.begin(), edges.end(),
                                   [&](const auto& e) { return e.first == v || e.second == v; }),
                    edges.end());
        rotation.erase(v);
        for (auto& [key, rot] : rotation)
            rot.erase(std::remove(rot.begin(), rot.end(), v), rot.end());
    }

    void add_vertex(const std::string& v, std::vector<std::string> rot) {
        labels.push_back(v);
        for (const auto& n : rot) edges.emplace_back(v, n);
        rotation[v] = std::move(rot);
    }

    // Replace old_n by new_n inside v's rotation, keeping the cyclic order.
    void swap_in_rotation(const std::string& v, const std::string& old_n,
                          const std::string& new_n) {
        for (auto& x : rotation.at(v))
            if (x == old_n) {
                x = new_n;
                return;
            }
        throw MoveError("rotation surgery: '" + old_n + "' not found at '" + v + "'");
    }

    void add_edge(const std::string& u, const std::string& v) { edges.emplace_back(u, v); }

    PlanarEmbedding build(const PlanarEmbedding& old, std::pair<int, int> marker) const {
        std::string ma = old.graph().label(marker.first);
        std::string mb = old.graph().label(marker.second);
        Graph g(old.graph().name(), labels, edges);
        std::vector<std::vector<int>> rot(g.size());
        for (const auto& [label, nbrs] : rotation) {
            int v = g.require_index(label);
            for (const auto& nl : nbrs) rot[v].push_back(g.require_index(nl));
        }
        // first build with default outer to trace faces, then re-anchor
        PlanarEmbedding tmp(g, rot, {});
        int u = g.require_index(ma), w = g.require_index(mb);
        int face = tmp.face_of_arc(u, w);
        return PlanarEmbedding(g, rot, tmp.faces()[face].walk);
    }
};

void check_simple(const std::vector<std::pair<std::string, std::string>>& edges) {
    std::set<std::pair<std::string, std::string>> seen;
    for (auto [a, b] : edges) {
        if (a == b) throw MoveError("move would create a loop");
        if (a > b) std::swap(a, b);
        if (!seen.emplace(a, b).second)
            throw MoveError("move would create a multi-edge");
    }
}

}  // namespace

PlanarEmbedding delta_y(const PlanarEmbedding& e, const std::string& face_id, MoveRecord* rec,
                        const std::vector<std::string>& new_names) {
    const Graph& g = e.graph();
    const Face* f = e.face_by_id(face_id);
    if (!f) throw MoveError("no face '" + face_id + "'");
    if (f->is_outer) throw MoveError("face '" + face_id + "' is the outer face");
    if (f->length() != 3) throw MoveError("face '" + face_id + "' is not a triangle");

    int a = f->walk[0], b = f->walk[1], c = f->walk[2];
    auto outside = [&](int x, int y, int z) {
        for (int n : g.neighbors(x))
            if (n != y && n != z) return n;
        throw MoveError("triangle corner '" + g.label(x) + "' has no outside edge");
    };
    int na = outside(a, b, c), nb = outside(b, c, a), nc = outside(c, a, b);
    if (na == nb || nb == nc || na == nc)
        throw MoveError("move would create a multi-edge (two triangle corners share their "
                        "outside neighbor)");

    std::vector<std::string> names =
        new_names.empty() ? fresh_names(g, 1) : new_names;
    if (names.size() != 1) throw MoveError("delta_y expects one new vertex name");
    const std::string& w = names[0];
    if (g.has_vertex(w)) throw MoveError("new vertex name '" + w + "' already in use");

    Surgery s = Surgery::from(e);
    auto marker = outer_marker(e, {a, b, c});
    s.swap_in_rotation(g.label(na), g.label(a), w);
    s.swap_in_rotation(g.label(nb), g.label(b), w);
    s.swap_in_rotation(g.label(nc), g.label(c), w);
    s.remove_vertex(g.label(a));
    s.remove_vertex(g.label(b));
    s.remove_vertex(g.label(c));
    s.add_vertex(w, {g.label(na), g.label(nc), g.label(nb)});
    check_simple(s.edges);

    PlanarEmbedding out = s.build(e, marker);
    if (out.genus() != e.genus() - 1)
        throw MoveError("delta_y: genus did not drop by one");
    if (rec) {
        rec->kind = MoveRecord::Kind::DeltaY;
        rec->site = face_id;
        rec->removed = {g.label(a), g.label(b), g.label(c)};
        rec->created = {w};
        rec->attachments = {g.label(na), g.label(nb), g.label(nc)};
    }
    return out;
}

PlanarEmbedding y_delta(const PlanarEmbedding& e, const std::string& vertex, MoveRecord* rec,
                        const std::vector<std::string>& new_names) {
    const Graph& g = e.graph();
    auto vi = g.index_of(vertex);
    if (!vi) throw MoveError("no vertex '" + vertex + "'");
    int v = *vi;
    if (g.degree(v) != 3) throw MoveError("vertex '" + vertex + "' is not trivalent");

    const auto& rot = e.rotation()[v];
    int n1 = rot[0], n2 = rot[1], n3 = rot[2];
    std::vector<std::string> names =
        new_names.empty() ? fresh_names(g, 3) : new_names;
    if (names.size() != 3) throw MoveError("y_delta expects three new vertex names");
    for (const auto& nm : names)
        if (g.has_vertex(nm)) throw MoveError("new vertex name '" + nm + "' already in use");
    const std::string &c1 = names[0], &c2 = names[1], &c3 = names[2];

    Surgery s = Surgery::from(e);
    auto marker = outer_marker(e, {v});
    s.swap_in_rotation(g.label(n1), vertex, c1);
    s.swap_in_rotation(g.label(n2), vertex, c2);
    s.swap_in_rotation(g.label(n3), vertex, c3);
    s.remove_vertex(vertex);
    s.add_vertex(c1, {g.label(n1), c2, c3});
    s.add_vertex(c2, {g.label(n2), c3, c1});
    s.add_vertex(c3, {g.label(n3), c1, c2});
    // the triangle edges appear twice via add_vertex; dedupe
    std::set<std::pair<std::string, std::string>> edge_set;
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [x, y] : s.edges) {
        auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        if (edge_set.insert(key).second) edges.push_back({x, y});
    }
    s.edges = std::move(edges);
    check_simple(s.edges);

    PlanarEmbedding out = s.build(e, marker);
    if (out.genus() != e.genus() + 1)
        throw MoveError("y_delta: genus did not grow by one");
    if (rec) {
        rec->kind = MoveRecord::Kind::YDelta;
        rec->site = vertex;
        rec->removed = {vertex};
        rec->created = {c1, c2, c3};
        rec->attachments = {g.label(n1), g.label(n2), g.label(n3)};
    }
    return out;
}

PlanarEmbedding contract_elongate(const PlanarEmbedding& e, const std::string& ul,
                                  const std::string& vl, MoveRecord* rec,
                                  const std::vector<std::string>& new_names) {
    const Graph& g = e.graph();
    auto ui = g.index_of(ul), vi = g.index_of(vl);
    if (!ui || !vi || !g.adjacent(*ui, *vi))
        throw MoveError("no edge '" + ul + "-" + vl + "'");
    int u = *ui, v = *vi;

    if (e.faces()[e.face_of_arc(u, v)].is_outer || e.faces()[e.face_of_arc(v, u)].is_outer)
        throw MoveError("edge '" + ul + "-" + vl + "' borders the outer face");

    // rotation at u starting from v: (v, p, q); at v starting from u: (u, r, s)
    auto after = [&](int x, int from) {
        const auto& rot = e.rotation()[x];
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == from)
                return std::make_pair(rot[(i + 1) % rot.size()], rot[(i + 2) % rot.size()]);
        throw MoveError("contract_elongate: inconsistent rotation");
    };
    auto [p, q] = after(u, v);
    auto [r, ss] = after(v, u);

    int f_end_u = e.face_of_arc(p, u);   // face between p and q at u
    int f_end_v = e.face_of_arc(r, v);   // face between r and s at v
    if (f_end_u == f_end_v)
        throw MoveError("the two end faces coincide; move would create a multi-edge");
    if (q == r || ss == p)
        throw MoveError("move would create a multi-edge");

    std::vector<std::string> names =
        new_names.empty() ? fresh_names(g, 2) : new_names;
    if (names.size() != 2) throw MoveError("contract_elongate expects two new vertex names");
    for (const auto& nm : names)
        if (g.has_vertex(nm)) throw MoveError("new vertex name '" + nm + "' already in use");
    const std::string &w1 = names[0], &w2 = names[1];

    Surgery s = Surgery::from(e);
    auto marker = outer_marker(e, {u, v});
    s.swap_in_rotation(g.label(q), ul, w1);
    s.swap_in_rotation(g.label(r), vl, w1);
    s.swap_in_rotation(g.label(ss), vl, w2);
    s.swap_in_rotation(g.label(p), ul, w2);
    s.remove_vertex(ul);
    s.remove_vertex(vl);
    s.add_vertex(w1, {g.label(q), g.label(r), w2});
    s.add_vertex(w2, {g.label(ss), g.label(p), w1});
    std::set<std::pair<std::string, std::string>> edge_set;
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [x, y] : s.edges) {
        auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        if (edge_set.insert(key).second) edges.push_back({x, y});
    }
    s.edges = std::move(edges);
    check_simple(s.edges);

    PlanarEmbedding out = s.build(e, marker);
    if (out.genus() != e.genus())
        throw MoveError("contract_elongate: genus changed");
    if (edge_connectivity(out.graph()) < 2)
        throw MoveError("contract_elongate: result has a bridge");
    if (rec) {
        rec->kind = MoveRecord::Kind::ContractElongate;
        rec->site = ul + "-" + vl;
        rec->removed = {ul, vl};
        rec->created = {w1, w2};
        rec->attachments = {g.label(p), g.label(q), g.label(r), g.label(ss)};
    }
    return out;
}

namespace {

void revalidate(const PlanarEmbedding& e, const std::string& stage) {
    const Graph& g = e.graph();
    std::ostringstream why;
    if (!is_connected(g))
        why << "disconnected";
    else if (!is_cubic(g))
        why << "not cubic";
    else if (edge_connectivity(g) < 3)
        why << "not three-connected";
    else if (!check_lemma_3_9(e))
        why << "non-adjacent exterior vertices share an interior face";
    else
        return;
    throw MoveError("reduction invariant broken after " + stage + ": " + why.str());
}

std::string face_walk_key(const Face& f, const Graph& g) {
    std::string key;
    for (int v : f.walk) {
        key += g.label(v);
        key += ',';
    }
    return key;
}

bool edge_is_interior(const PlanarEmbedding& e, int u, int v) {
    return !e.faces()[e.face_of_arc(u, v)].is_outer &&
           !e.faces()[e.face_of_arc(v, u)].is_outer;
}

// Lexicographically least interior triangular face id, if any.
std::optional<std::string> least_interior_triangle(const PlanarEmbedding& e) {
    const Face* best = nullptr;
    for (const auto& f : e.faces()) {
        if (f.is_outer || f.length() != 3) continue;
        if (!best || face_walk_key(f, e.graph()) < face_walk_key(*best, e.graph())) best = &f;
    }
    if (!best) return std::nullopt;
    return best->id;
}

const Face& min_interior_face(const PlanarEmbedding& e) {
    const Face* best = nullptr;
    for (const auto& f : e.faces()) {
        if (f.is_outer) continue;
        if (!best || f.length() < best->length() ||
            (f.length() == best->length() &&
             face_walk_key(f, e.graph()) < face_walk_key(*best, e.graph())))
            best = &f;
    }
    return *best;
}

}  // namespace

ReductionTrace reduce_to_k4(const PlanarEmbedding& e) {
    {
        const Graph& g = e.graph();
        if (!is_connected(g) || !is_cubic(g) || edge_connectivity(g) < 3)
            throw MoveError("reduce_to_k4 requires a cubic three-connected planar input");
        if (e.genus() < 3) throw MoveError("reduce_to_k4: genus below 3");
    }
    ReductionTrace trace;
    trace.start = e;
    PlanarEmbedding cur = e;

    while (cur.genus() > 3) {
        auto tri = least_interior_triangle(cur);
        if (tri) {
            MoveRecord rec;
            cur = delta_y(cur, *tri, &rec);
            revalidate(cur, "delta_y on " + *tri);
            trace.moves.push_back(rec);
            trace.intermediates.push_back(cur);
            continue;
        }
        // no triangle: shrink the minimum-length interior face
        Face target = min_interior_face(cur);
        int k = target.length();
        for (int step = 0; step < k - 3; ++step) {
            const Graph& g = cur.graph();
            std::vector<std::pair<int, int>> eligible;
            int len = target.length();
            for (int i = 0; i < len; ++i) {
                int a = target.walk[i], b = target.walk[(i + 1) % len];
                if (edge_is_interior(cur, a, b)) eligible.push_back({a, b});
            }
            std::sort(eligible.begin(), eligible.end(), [&](auto x, auto y) {
                auto key = [&](std::pair<int, int> p) {
                    std::string la = g.label(p.first), lb = g.label(p.second);
                    if (lb < la) std::swap(la, lb);
                    return std::make_pair(la, lb);
                };
                return key(x) < key(y);
            });
            if (eligible.empty()) {
                std::ostringstream diag;
                diag << "no eligible interior edge on face " << target.id << " (walk:";
                for (int v : target.walk) diag << " " << g.label(v);
                diag << ") of graph " << g.name() << " at genus " << cur.genus();
                throw MoveError(diag.str());
            }
            auto [a, b] = eligible.front();
            // marker arc inside the target face, away from the move site
            std::pair<int, int> face_marker{-1, -1};
            for (int i = 0; i < len; ++i) {
                int x = target.walk[i], y = target.walk[(i + 1) % len];
                if (x != a && x != b && y != a && y != b) {
                    face_marker = {x, y};
                    break;
                }
            }
            if (face_marker.first == -1)
                throw MoveError("cannot track the target face across contraction-elongation");
            std::string ma = g.label(face_marker.first), mb = g.label(face_marker.second);

            MoveRecord rec;
            cur = contract_elongate(cur, g.label(a), g.label(b), &rec);
            revalidate(cur, "contract_elongate on " + rec.site);
            trace.moves.push_back(rec);
            trace.intermediates.push_back(cur);

            int na = cur.graph().require_index(ma), nb = cur.graph().require_index(mb);
            target = cur.faces()[cur.face_of_arc(na, nb)];
        }
        if (target.length() != 3)
            throw MoveError("contraction-elongation sequence failed to produce a triangle");
    }

    if (canonical_code(cur.graph()) != canonical_code(parse_graph("graph k4\nedge a b\nedge a c\n"
                                                                  "edge a d\nedge b c\nedge b d\n"
                                                                  "edge c d\n").graph))
        throw MoveError("reduction ended at genus 3 but not at K4");
    return trace;
}

std::vector<PlanarEmbedding> replay_inverse(const ReductionTrace& t) {
    std::vector<PlanarEmbedding> out;
    PlanarEmbedding cur = t.final();
    out.push_back(cur);
    for (int i = static_cast<int>(t.moves.size()) - 1; i >= 0; --i) {
        const MoveRecord& rec = t.moves[i];
        const PlanarEmbedding& expect = (i == 0) ? t.start : t.intermediates[i - 1];
        if (rec.kind == MoveRecord::Kind::DeltaY) {
            // rot[w] = (na, nc, nb); restore corner names keyed by attachment
            const std::string& w = rec.created[0];
            std::map<std::string, std::string> corner_of = {
                {rec.attachments[0], rec.removed[0]},
                {rec.attachments[1], rec.removed[1]},
                {rec.attachments[2], rec.removed[2]},
            };
            int wi = cur.graph().require_index(w);
            std::vector<std::string> names;
            for (int nb : cur.rotation()[wi]) {
                auto it = corner_of.find(cur.graph().label(nb));
                if (it == corner_of.end())
                    throw MoveError("trace/embedding mismatch at move " + std::to_string(i + 1));
                names.push_back(it->second);
            }
            cur = y_delta(cur, w, nullptr, names);
        } else if (rec.kind == MoveRecord::Kind::ContractElongate) {
            // the transverse move on the created edge restores (v, u)
            cur = contract_elongate(cur, rec.created[0], rec.created[1], nullptr,
                                    {rec.removed[1], rec.removed[0]});
        } else {
            throw MoveError("trace contains a YDelta move; traces record reductions only");
        }
        if (!(cur == expect))
            throw MoveError("trace/embedding mismatch at move " + std::to_string(i + 1));
        out.push_back(cur);
    }
    return out;
}

std::string serialize_trace(const ReductionTrace& t) {
    std::ostringstream out;
    out << "# reduction trace for graph " << t.start.graph().name() << "\n";
    for (const auto& m : t.moves) {
        if (m.kind == MoveRecord::Kind::DeltaY)
            out << "DY face=" << m.site << "\n";
        else if (m.kind == MoveRecord::Kind::ContractElongate)
            out << "CE edge=" << m.site << "\n";
        else
            out << "YD vertex=" << m.site << "\n";
    }
    return out.str();
}

std::vector<PlanarEmbedding> apply_trace_text(const PlanarEmbedding& start,
                                              const std::string& trace_text) {
    std::vector<PlanarEmbedding> out;
    out.push_back(start);
    std::istringstream in(trace_text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string op, arg;
        if (!(ls >> op)) continue;
        if (!(ls >> arg) || arg.find('=') == std::string::npos)
            throw ParseError("trace line " + std::to_string(lineno) + ": expected '<op> key=value'");
        std::string value = arg.substr(arg.find('=') + 1);
        if (op == "DY") {
            out.push_back(delta_y(out.back(), value));
        } else if (op == "CE") {
            auto dash = value.find('-');
            if (dash == std::string::npos)
                throw ParseError("trace line " + std::to_string(lineno) + ": expected edge=u-v");
            out.push_back(
                contract_elongate(out.back(), value.substr(0, dash), value.substr(dash + 1)));
        } else if (op == "YD") {
            out.push_back(y_delta(out.back(), value));
        } else {
            throw ParseError("trace line " + std::to_string(lineno) + ": unknown op '" + op + "'");
        }
    }
    return out;
}

}  // namespace tropcurve
