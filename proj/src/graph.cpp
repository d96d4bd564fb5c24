#include "tropcurve/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace tropcurve {

std::string rat_to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in rational '" + s + "'");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("rational out of range '" + s + "'");
    }
}

Graph::Graph(std::string name, const std::vector<std::string>& vertex_labels,
             const std::vector<std::pair<std::string, std::string>>& edge_list)
    : name_(std::move(name)) {
    for (const auto& l : vertex_labels) {
        if (index_.count(l)) throw ParseError("duplicate vertex label '" + l + "'");
        index_[l] = static_cast<int>(labels_.size());
        labels_.push_back(l);
    }
    adj_.resize(labels_.size());
    for (const auto& [a, b] : edge_list) {
        if (a == b) throw ParseError("loop at vertex '" + a + "'");
        int u = require_index(a);
        int v = require_index(b);
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ParseError("duplicate edge");
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::optional<int> Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::require_index(const std::string& label) const {
    auto idx = index_of(label);
    if (!idx) throw ParseError("unknown vertex '" + label + "'");
    return *idx;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::without_edges(const std::vector<std::pair<int, int>>& removed) const {
    std::vector<std::pair<std::string, std::string>> kept;
    auto hit = [&](int u, int v) {
        for (auto [a, b] : removed)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    for (auto [u, v] : edges_)
        if (!hit(u, v)) kept.emplace_back(labels_[u], labels_[v]);
    return Graph(name_, labels_, kept);
}

namespace {

bool valid_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name;
    bool saw_header = false;
    std::vector<std::string> vertex_order;
    std::map<std::string, bool> seen;
    std::vector<std::pair<std::string, std::string>> edge_list;
    std::map<std::string, std::vector<std::string>> rotation;
    std::vector<std::string> outer;
    int lineno = 0;

    auto touch = [&](const std::string& label) {
        if (!valid_token(label))
            throw ParseError("malformed line " + std::to_string(lineno) +
                             ": bad vertex token '" + label + "'");
        if (!seen[label]) {
            seen[label] = true;
            vertex_order.push_back(label);
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "graph") {
            if (toks.size() != 2)
                throw ParseError("malformed line " + std::to_string(lineno) + ": expected 'graph <name>'");
            name = toks[1];
            saw_header = true;
        } else if (toks[0] == "edge") {
            if (toks.size() != 3)
                throw ParseError("malformed line " + std::to_string(lineno) + ": expected 'edge u v'");
            touch(toks[1]);
            touch(toks[2]);
            edge_list.emplace_back(toks[1], toks[2]);
        } else if (toks[0] == "rotation") {
            // "rotation v: a b c" -- colon may stick to the vertex token
            if (toks.size() < 3)
                throw ParseError("malformed line " + std::to_string(lineno) + ": expected 'rotation v: ...'");
            std::string v = toks[1];
            size_t first_nbr = 2;
            if (!v.empty() && v.back() == ':') {
                v.pop_back();
            } else if (toks[2] == ":") {
                first_nbr = 3;
            }
            touch(v);
            std::vector<std::string> nbrs(toks.begin() + first_nbr, toks.end());
            if (nbrs.empty())
                throw ParseError("malformed line " + std::to_string(lineno) + ": empty rotation");
            for (auto& n : nbrs) touch(n);
            if (rotation.count(v))
                throw ParseError("malformed line " + std::to_string(lineno) + ": repeated rotation for '" + v + "'");
            rotation[v] = nbrs;
        } else if (toks[0] == "outer:" || toks[0] == "outer") {
            size_t first = 1;
            if (toks.size() > 1 && toks[1] == ":") first = 2;
            outer.assign(toks.begin() + first, toks.end());
            if (outer.empty())
                throw ParseError("malformed line " + std::to_string(lineno) + ": empty outer face");
            for (auto& v : outer) touch(v);
        } else if (toks.size() == 2 && valid_token(toks[0]) && valid_token(toks[1])) {
            // bare "u v" edge shorthand
            touch(toks[0]);
            touch(toks[1]);
            edge_list.emplace_back(toks[0], toks[1]);
        } else {
            throw ParseError("malformed line " + std::to_string(lineno) + ": '" + line + "'");
        }
    }
    if (!saw_header && edge_list.empty())
        throw ParseError("empty graph description");

    GraphFile gf;
    gf.graph = Graph(name, vertex_order, edge_list);
    gf.rotation = std::move(rotation);
    gf.outer = std::move(outer);
    return gf;
}

GraphFile parse_graph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

bool is_connected(const Graph& g) {
    if (g.size() == 0) return true;
    std::vector<bool> vis(g.size(), false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (!vis[v]) {
                vis[v] = true;
                ++count;
                q.push(v);
            }
    }
    return count == g.size();
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != 3) return false;
    return g.size() > 0;
}

int genus(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("genus: graph is disconnected");
    return g.edge_count() - g.size() + 1;
}

namespace {

bool connected_after_removal(const Graph& g, const std::vector<int>& removed_edge_ids) {
    const auto& edges = g.edges();
    std::vector<bool> dead(edges.size(), false);
    for (int id : removed_edge_ids) dead[id] = true;
    std::vector<std::vector<int>> adj(g.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        if (dead[i]) continue;
        adj[edges[i].first].push_back(edges[i].second);
        adj[edges[i].second].push_back(edges[i].first);
    }
    std::vector<bool> vis(g.size(), false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!vis[v]) {
                vis[v] = true;
                ++count;
                q.push(v);
            }
    }
    return count == g.size();
}

bool some_cut_of_size(const Graph& g, int k) {
    int m = g.edge_count();
    std::vector<int> pick(k);
    // iterate over all k-subsets of edges
    std::function<bool(int, int)> rec = [&](int depth, int start) {
        if (depth == k) return !connected_after_removal(g, pick);
        for (int i = start; i < m; ++i) {
            pick[depth] = i;
            if (rec(depth + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

int edge_connectivity(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("edge_connectivity: graph is disconnected");
    if (g.size() <= 1) return 0;
    int min_deg = g.degree(0);
    for (int v = 1; v < g.size(); ++v) min_deg = std::min(min_deg, g.degree(v));
    for (int k = 1; k < min_deg; ++k)
        if (some_cut_of_size(g, k)) return k;
    return min_deg;
}

namespace {

// Maximal adjacency code over connected-expansion orderings. Each vertex
// after the first must be adjacent to an earlier one, which is sound for
// connected graphs and prunes the permutation search hard.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> perm;
    std::vector<bool> used;
    std::vector<uint8_t> code;
    std::vector<uint8_t> best;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.size()), used(graph.size(), false) {}

    void run() {
        for (int v = 0; v < n; ++v) {
            perm.push_back(v);
            used[v] = true;
            rec(1);
            used[v] = false;
            perm.pop_back();
        }
    }

    void rec(int depth) {
        if (depth == n) {
            if (!have_best || code > best) {
                best = code;
                have_best = true;
            }
            return;
        }
        size_t base = code.size();
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool frontier = false;
            for (int u : perm)
                if (g.adjacent(u, v)) {
                    frontier = true;
                    break;
                }
            if (!frontier) continue;
            for (int d = 0; d < depth; ++d)
                code.push_back(g.adjacent(perm[d], v) ? 1 : 0);
            bool prune = false;
            if (have_best) {
                for (size_t i = base; i < code.size(); ++i) {
                    if (code[i] < best[i]) {
                        prune = true;
                        break;
                    }
                    if (code[i] > best[i]) break;
                }
            }
            if (!prune) {
                perm.push_back(v);
                used[v] = true;
                rec(depth + 1);
                used[v] = false;
                perm.pop_back();
            }
            code.resize(base);
        }
    }
};

}  // namespace

std::string canonical_code(const Graph& g) {
    if (g.size() == 0) return "0:";
    if (!is_connected(g)) throw std::invalid_argument("canonical_code: graph is disconnected");
    CanonSearch search(g);
    search.run();
    std::string out = std::to_string(g.size()) + ":";
    out.reserve(out.size() + search.best.size());
    for (uint8_t b : search.best) out.push_back(b ? '1' : '0');
    return out;
}

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> order;    // a-vertices in BFS order
    std::vector<int> map_ab;   // a -> b
    std::vector<bool> used_b;

    IsoSearch(const Graph& ga, const Graph& gb)
        : a(ga), b(gb), map_ab(ga.size(), -1), used_b(gb.size(), false) {}

    bool run() {
        // BFS order so each vertex (after the first) touches a mapped one
        std::vector<bool> vis(a.size(), false);
        for (int s = 0; s < a.size(); ++s) {
            if (vis[s]) continue;
            std::queue<int> q;
            q.push(s);
            vis[s] = true;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                order.push_back(u);
                for (int v : a.neighbors(u))
                    if (!vis[v]) {
                        vis[v] = true;
                        q.push(v);
                    }
            }
        }
        return rec(0);
    }

    bool rec(size_t depth) {
        if (depth == order.size()) return true;
        int u = order[depth];
        for (int w = 0; w < b.size(); ++w) {
            if (used_b[w]) continue;
            if (b.degree(w) != a.degree(u)) continue;
            bool ok = true;
            for (size_t d = 0; d < depth && ok; ++d) {
                int x = order[d];
                if (a.adjacent(u, x) != b.adjacent(w, map_ab[x])) ok = false;
            }
            if (!ok) continue;
            map_ab[u] = w;
            used_b[w] = true;
            if (rec(depth + 1)) return true;
            used_b[w] = false;
            map_ab[u] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_graph_isomorphism(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
    std::vector<int> da, db;
    for (int v = 0; v < a.size(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.size(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    IsoSearch search(a, b);
    if (!search.run()) return std::nullopt;
    return search.map_ab;
}

}  // namespace tropcurve
