#include "tropcurve/tropical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tropcurve {

TropicalPoint make_point(std::vector<int> support, std::vector<Rat> coords) {
    if (support.empty()) throw std::invalid_argument("tropical point needs nonempty support");
    if (support.size() != coords.size())
        throw std::invalid_argument("support/coords size mismatch");
    std::vector<size_t> order(support.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return support[a] < support[b]; });
    TropicalPoint p;
    for (size_t i : order) {
        p.support.push_back(support[i]);
        p.coords.push_back(coords[i]);
    }
    Rat lo = *std::min_element(p.coords.begin(), p.coords.end());
    for (auto& c : p.coords) c -= lo;
    return p;
}

bool point_in_tropproj(const TropicalPoint& p, const TropFactor& factor) {
    if (factor.is_var)
        return !std::binary_search(p.support.begin(), p.support.end(), factor.var);
    std::vector<Rat> vals;
    for (size_t i = 0; i < p.support.size(); ++i)
        if (std::binary_search(factor.form_support.begin(), factor.form_support.end(),
                               p.support[i]))
            vals.push_back(p.coords[i]);
    if (vals.empty()) return true;  // all terms infinite
    Rat lo = *std::min_element(vals.begin(), vals.end());
    return std::count(vals.begin(), vals.end(), lo) >= 2;
}

TropicalLineGeom tropicalize_line(const LineIdeal& line) {
    TropicalLineGeom geom;
    geom.vertex = line.vertex;
    geom.kind = line.kind;
    if (line.kind == LineKind::TypeI) {
        // complement of zero_vars in the full variable set
        int g = static_cast<int>(line.zero_vars.size()) + 2;
        std::vector<int> pair;
        for (int i = 0; i < g; ++i)
            if (!std::binary_search(line.zero_vars.begin(), line.zero_vars.end(), i))
                pair.push_back(i);
        if (pair.size() != 2) throw HypothesisError("TypeI line support is not a pair");
        geom.edge_support = {pair[0], pair[1]};
    } else {
        geom.tripod_support = line.sum_support;
    }
    return geom;
}

std::optional<int> TropicalComplex::node_by_support(const std::vector<int>& support) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].point.support == support) return static_cast<int>(i);
    return std::nullopt;
}

TropicalComplex build_arrangement(const std::vector<TropicalLineGeom>& lines, int num_vars) {
    TropicalComplex out;
    out.num_vars = num_vars;
    out.lines = lines;

    std::set<std::array<int, 2>> edge_pairs;
    std::set<std::vector<int>> tripod_supports;
    for (const auto& l : lines) {
        if (l.kind == LineKind::TypeI) {
            if (!edge_pairs.insert(l.edge_support).second)
                throw HypothesisError("coincident 1-cells: two TypeI lines share the simplex "
                                      "edge; cf. the exterior-face adjacency hypothesis");
        } else {
            if (!tripod_supports.insert(l.tripod_support).second)
                throw HypothesisError("coincident 1-cells: two TypeII lines share a tripod");
        }
    }

    // collect node supports with the lines through them
    std::map<std::vector<int>, std::set<int>> through;
    for (const auto& l : lines) {
        if (l.kind == LineKind::TypeI) {
            through[{l.edge_support[0]}].insert(l.vertex);
            through[{l.edge_support[1]}].insert(l.vertex);
            std::vector<int> pair = {l.edge_support[0], l.edge_support[1]};
            through[pair].insert(l.vertex);
        } else {
            through[l.tripod_support].insert(l.vertex);
            const auto& s = l.tripod_support;
            through[{s[0], s[1]}].insert(l.vertex);
            through[{s[0], s[2]}].insert(l.vertex);
            through[{s[1], s[2]}].insert(l.vertex);
        }
    }
    // corner supports only arise from TypeI endpoints; pair supports from a
    // TypeI edge alone are not nodes unless a ray lands there
    std::map<std::vector<int>, int> node_index;
    for (const auto& [supp, lns] : through) {
        bool keep = false;
        NodeTag tag = NodeTag::Corner;
        if (supp.size() == 1) {
            keep = true;
            tag = NodeTag::Corner;
        } else if (supp.size() == 3) {
            keep = true;
            tag = NodeTag::BranchPoint;
        } else {
            bool on_type1 = edge_pairs.count({supp[0], supp[1]}) > 0;
            bool has_ray = false;
            for (int v : lns) {
                for (const auto& l : lines)
                    if (l.vertex == v && l.kind == LineKind::TypeII) has_ray = true;
            }
            if (has_ray) {
                keep = true;
                tag = on_type1 ? NodeTag::Subdivision : NodeTag::RayEndpoint;
            }
        }
        if (!keep) continue;
        TCNode node;
        node.point.support = supp;
        node.point.coords.assign(supp.size(), Rat(0));
        node.tag = tag;
        node.lines.assign(lns.begin(), lns.end());
        node_index[supp] = static_cast<int>(out.nodes.size());
        out.nodes.push_back(std::move(node));
    }
    for (size_t i = 0; i < out.nodes.size(); ++i)
        out.nodes[i].id = "n" + std::to_string(i);

    auto var_name = [](int v) { return "F" + std::to_string(v + 1); };

    for (const auto& l : lines) {
        if (l.kind == LineKind::TypeI) {
            int a = l.edge_support[0], b = l.edge_support[1];
            int ca = node_index.at({a});
            int cb = node_index.at({b});
            auto mid = node_index.find({a, b});
            std::string label = var_name(a) + "-" + var_name(b);
            if (mid != node_index.end()) {
                out.segments.push_back({mid->second, ca, l.vertex, label, CellShape::HalfEdge,
                                        {a}, {b}});
                out.segments.push_back({mid->second, cb, l.vertex, label, CellShape::HalfEdge,
                                        {b}, {a}});
            } else {
                out.segments.push_back({ca, cb, l.vertex, label, CellShape::FullEdge, {a}, {b}});
            }
        } else {
            const auto& s = l.tripod_support;
            int branch = node_index.at(s);
            std::array<std::array<int, 2>, 3> rays = {{{s[0], s[1]}, {s[0], s[2]}, {s[1], s[2]}}};
            for (const auto& pr : rays) {
                int other = s[0] + s[1] + s[2] - pr[0] - pr[1];
                int end = node_index.at({pr[0], pr[1]});
                std::string label = "(" + var_name(pr[0]) + "," + var_name(pr[1]) + ")";
                out.segments.push_back({branch, end, l.vertex, label, CellShape::Ray,
                                        {pr[0], pr[1]}, {other}});
            }
        }
    }
    return out;
}

namespace {

int count_in(const std::vector<int>& sorted_set, const std::vector<int>& sorted_universe) {
    int c = 0;
    for (int v : sorted_set)
        if (std::binary_search(sorted_universe.begin(), sorted_universe.end(), v)) ++c;
    return c;
}

}  // namespace

bool cell_in_tropproj(const TCSegment& seg, const TropFactor& factor) {
    if (factor.is_var) {
        return !std::binary_search(seg.zero_set.begin(), seg.zero_set.end(), factor.var) &&
               !std::binary_search(seg.t_set.begin(), seg.t_set.end(), factor.var);
    }
    int zu = count_in(seg.zero_set, factor.form_support);
    int tu = count_in(seg.t_set, factor.form_support);
    if (seg.shape == CellShape::FullEdge) return zu == 0 && tu == 0;
    // HalfEdge and Ray: parameter t in [0, inf]
    if (zu == 0 && tu == 0) return true;  // all terms infinite everywhere
    if (zu >= 2) return true;             // min 0 attained at least twice for all t
    if (zu == 0 && tu >= 2) return true;  // min t attained twice; at t=inf all infinite
    return false;
}

std::vector<TropFactor> generator_factors(const SRGenerator& gen, int num_vars) {
    std::vector<TropFactor> out;
    for (int v : gen.vars) out.push_back(TropFactor::variable(v));
    if (gen.has_sum) {
        std::vector<int> all(num_vars);
        for (int i = 0; i < num_vars; ++i) all[i] = i;
        out.push_back(TropFactor::form(all));
    }
    return out;
}

std::vector<SelectionPiece> enumerate_selection_pieces(const GeneratorSet& gens) {
    std::vector<SelectionPiece> out;
    std::set<std::pair<std::vector<int>, bool>> seen;
    int g = gens.num_vars;
    size_t r = gens.gens.size();
    std::vector<int> choice(r, 0);

    auto emit = [&]() {
        std::set<int> forced;
        bool has_sum = false;
        std::vector<int> selection;
        for (size_t j = 0; j < r; ++j) {
            const auto& gen = gens.gens[j];
            int c = choice[j];
            if (c == static_cast<int>(gen.vars.size())) {
                has_sum = true;
                selection.push_back(-1);
            } else {
                forced.insert(gen.vars[c]);
                selection.push_back(gen.vars[c]);
            }
        }
        SelectionPiece piece;
        piece.forced_infinity.assign(forced.begin(), forced.end());
        piece.has_sum = has_sum;
        piece.selection = selection;
        for (int i = 0; i < g; ++i)
            if (!forced.count(i)) piece.free_support.push_back(i);
        int w = static_cast<int>(piece.free_support.size());
        if (w == 0)
            piece.dimension = -1;
        else if (has_sum)
            piece.dimension = (w >= 2) ? w - 2 : -1;
        else
            piece.dimension = w - 1;
        auto key = std::make_pair(piece.forced_infinity, piece.has_sum);
        if (seen.insert(key).second) out.push_back(std::move(piece));
    };

    // cartesian product over factor choices (vars plus optional sum form)
    while (true) {
        emit();
        size_t j = 0;
        for (; j < r; ++j) {
            int options = static_cast<int>(gens.gens[j].vars.size()) +
                          (gens.gens[j].has_sum ? 1 : 0);
            if (++choice[j] < options) break;
            choice[j] = 0;
        }
        if (j == r) break;
    }
    return out;
}

namespace {

std::string piece_to_string(const SelectionPiece& p) {
    std::ostringstream out;
    out << "piece{free support:";
    for (int v : p.free_support) out << " F" << v + 1;
    if (p.has_sum) out << ", cut by the sum form";
    out << ", dim " << p.dimension << "}";
    return out.str();
}

}  // namespace

BasisCheckResult tropical_basis_check(const GeneratorSet& gens, const TropicalComplex& complex) {
    // (a) every cell of the complex lies in tropproj of every generator
    for (const auto& gen : gens.gens) {
        auto factors = generator_factors(gen, complex.num_vars);
        for (const auto& node : complex.nodes) {
            bool ok = false;
            for (const auto& f : factors)
                if (point_in_tropproj(node.point, f)) {
                    ok = true;
                    break;
                }
            if (!ok)
                return {false, "node " + node.id + " escapes tropproj of a generator"};
        }
        for (const auto& seg : complex.segments) {
            bool ok = false;
            for (const auto& f : factors)
                if (cell_in_tropproj(seg, f)) {
                    ok = true;
                    break;
                }
            if (!ok)
                return {false, "segment " + seg.label + " of line " +
                                   std::to_string(seg.line) +
                                   " escapes tropproj of a generator"};
        }
    }

    // (b) every selection piece is at most a curve and covered by the lines
    auto pieces = enumerate_selection_pieces(gens);
    for (const auto& piece : pieces) {
        if (piece.dimension > 1)
            return {false, piece_to_string(piece) + " is over-dimensional"};
        if (piece.dimension < 0) continue;
        const auto& w = piece.free_support;
        bool covered = false;
        if (!piece.has_sum && w.size() == 1) {
            for (const auto& l : complex.lines)
                if (l.kind == LineKind::TypeI &&
                    (l.edge_support[0] == w[0] || l.edge_support[1] == w[0]))
                    covered = true;
        } else if (!piece.has_sum && w.size() == 2) {
            for (const auto& l : complex.lines)
                if (l.kind == LineKind::TypeI && l.edge_support[0] == w[0] &&
                    l.edge_support[1] == w[1])
                    covered = true;
        } else if (piece.has_sum && w.size() == 2) {
            for (const auto& l : complex.lines) {
                if (l.kind == LineKind::TypeI && l.edge_support[0] == w[0] &&
                    l.edge_support[1] == w[1])
                    covered = true;
                if (l.kind == LineKind::TypeII &&
                    std::includes(l.tripod_support.begin(), l.tripod_support.end(), w.begin(),
                                  w.end()))
                    covered = true;
            }
        } else if (piece.has_sum && w.size() == 3) {
            for (const auto& l : complex.lines)
                if (l.kind == LineKind::TypeII && l.tripod_support == w) covered = true;
        }
        if (!covered)
            return {false, piece_to_string(piece) + " is not covered by the arrangement"};
    }
    return {true, ""};
}

}  // namespace tropcurve
