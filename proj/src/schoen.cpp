#include "tropcurve/schoen.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tropcurve {

namespace {

int interior_index(const Face& f) {
    return std::stoi(f.id.substr(1)) - 1;
}

}  // namespace

std::vector<LineIdeal> build_schoen(const PlanarEmbedding& e) {
    const Graph& g = e.graph();
    int gen = e.genus();
    auto cls = classify_vertices(e);

    std::vector<LineIdeal> lines;
    for (int v = 0; v < g.size(); ++v) {
        std::vector<int> incident;
        bool touches_outer = false;
        for (int fi : e.faces_at_vertex(v)) {
            const Face& f = e.faces()[fi];
            if (f.is_outer)
                touches_outer = true;
            else
                incident.push_back(interior_index(f));
        }
        std::sort(incident.begin(), incident.end());

        LineIdeal line;
        line.vertex = v;
        if (cls.side[v] == VertexSide::Exterior) {
            if (!touches_outer || incident.size() != 2)
                throw HypothesisError("exterior vertex '" + g.label(v) +
                                      "' is not incident on exactly two interior faces");
            line.kind = LineKind::TypeI;
        } else {
            if (touches_outer || incident.size() != 3)
                throw HypothesisError("interior vertex '" + g.label(v) +
                                      "' is not incident on exactly three interior faces");
            line.kind = LineKind::TypeII;
            line.sum_support = incident;
        }
        for (int i = 0; i < gen; ++i)
            if (!std::binary_search(incident.begin(), incident.end(), i))
                line.zero_vars.push_back(i);
        // a line in P^{g-1} has codimension g-2
        size_t expect = line.kind == LineKind::TypeI ? gen - 2 : gen - 3;
        if (line.zero_vars.size() != expect)
            throw HypothesisError("line ideal of '" + g.label(v) +
                                  "' has the wrong number of variable generators");
        lines.push_back(std::move(line));
    }
    if (static_cast<int>(lines.size()) != 2 * gen - 2)
        throw HypothesisError("expected 2g-2 lines");
    return lines;
}

DualComplexM dual_complex(const PlanarEmbedding& e) {
    const Graph& g = e.graph();
    int gen = e.genus();
    DualComplexM m;
    m.num_interior = gen;
    for (int i = 1; i <= gen; ++i) m.vertex_ids.push_back("F" + std::to_string(i));
    m.vertex_ids.push_back("outer");

    auto m_index = [&](int face_idx) {
        const Face& f = e.faces()[face_idx];
        return f.is_outer ? gen : interior_index(f);
    };
    for (int v = 0; v < g.size(); ++v) {
        std::vector<int> triple;
        for (int fi : e.faces_at_vertex(v)) triple.push_back(m_index(fi));
        std::sort(triple.begin(), triple.end());
        if (triple.size() != 3 ||
            std::adjacent_find(triple.begin(), triple.end()) != triple.end())
            throw HypothesisError("vertex '" + g.label(v) +
                                  "' is not incident on three distinct faces");
        m.facets.push_back(triple);
    }

    // faces of M = subsets of facets; minimal non-faces have size <= 4 since
    // all proper subsets must be faces and faces have size <= 3
    std::set<std::vector<int>> faces_of_m;
    for (const auto& f : m.facets) {
        for (int mask = 1; mask < 8; ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < 3; ++i)
                if (mask & (1 << i)) sub.push_back(f[i]);
            faces_of_m.insert(sub);
        }
    }
    int nm = gen + 1;
    auto is_face = [&](const std::vector<int>& s) { return faces_of_m.count(s) > 0; };

    for (int size = 2; size <= 4; ++size) {
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(pick.size()) == size) {
                if (is_face(pick)) return;
                for (size_t skip = 0; skip < pick.size(); ++skip) {
                    std::vector<int> sub;
                    for (size_t i = 0; i < pick.size(); ++i)
                        if (i != skip) sub.push_back(pick[i]);
                    if (!is_face(sub)) return;  // a smaller non-face inside
                }
                m.minimal_nonfaces.push_back(pick);
                return;
            }
            for (int v = start; v < nm; ++v) {
                pick.push_back(v);
                rec(v + 1);
                pick.pop_back();
            }
        };
        rec(0);
    }
    std::sort(m.minimal_nonfaces.begin(), m.minimal_nonfaces.end());
    return m;
}

GeneratorSet stanley_reisner_generators(const DualComplexM& m) {
    int g = m.num_interior;
    GeneratorSet out;
    out.num_vars = g;

    PolyQ minus_sum(g);
    for (int i = 0; i < g; ++i) {
        Monomial mono;
        mono.x.assign(g, 0);
        mono.x[i] = 1;
        minus_sum.add_term(mono, Rat(-1));
    }

    for (const auto& nonface : m.minimal_nonfaces) {
        SRGenerator gen;
        for (int v : nonface) {
            if (v == g)
                gen.has_sum = true;
            else
                gen.vars.push_back(v);
        }
        PolyQ p(g);
        Monomial mono;
        mono.x.assign(g, 0);
        for (int v : gen.vars) mono.x[v] += 1;
        p.add_term(mono, Rat(1));
        if (gen.has_sum) p = p * minus_sum;
        gen.expanded = normalize_sign(p);
        out.gens.push_back(std::move(gen));
    }
    std::sort(out.gens.begin(), out.gens.end(), [](const SRGenerator& a, const SRGenerator& b) {
        if (a.has_sum != b.has_sum) return !a.has_sum;
        return a.vars < b.vars;
    });
    return out;
}

bool verify_containment(const GeneratorSet& gens, const std::vector<LineIdeal>& lines) {
    int g = gens.num_vars;
    for (const auto& gen : gens.gens) {
        for (const auto& line : lines) {
            PolyQ reduced = gen.expanded;
            for (int z : line.zero_vars) reduced = reduced.substitute_zero(z);
            if (line.kind == LineKind::TypeII) {
                int a = line.sum_support[0];
                PolyQ repl(g);
                for (size_t i = 1; i < line.sum_support.size(); ++i) {
                    Monomial mono;
                    mono.x.assign(g, 0);
                    mono.x[line.sum_support[i]] = 1;
                    repl.add_term(mono, Rat(-1));
                }
                reduced = reduced.substitute(a, repl);
            }
            if (!reduced.is_zero()) return false;
        }
    }
    return true;
}

std::vector<std::string> face_variable_names(int g) {
    std::vector<std::string> names;
    for (int i = 1; i <= g; ++i) names.push_back("x_{F" + std::to_string(i) + "}");
    return names;
}

std::string ideal_to_string(const LineIdeal& line, const std::vector<std::string>& names) {
    std::string out = "⟨";
    bool first = true;
    if (line.kind == LineKind::TypeII) {
        for (size_t i = 0; i < line.sum_support.size(); ++i) {
            if (i) out += " + ";
            out += names[line.sum_support[i]];
        }
        first = false;
    }
    for (int z : line.zero_vars) {
        if (!first) out += ", ";
        out += names[z];
        first = false;
    }
    out += "⟩";
    return out;
}

std::string generator_to_string(const SRGenerator& gen, const std::vector<std::string>& names) {
    return poly_to_string(gen.expanded, names);
}

}  // namespace tropcurve
