#include "ecoc/kernelizer.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ecoc/bipartite.hpp"

namespace ecoc {

bool rule1_size_check(const Instance& inst) {
    long long k = std::max(inst.k, 0LL);
    return inst.graph.num_vertices() <= (inst.l + 1) * k + inst.l - 1;
}

std::optional<ComponentReduction> rule23_component_reduction(const Instance& inst) {
    ComponentList comps = connected_components(inst.graph);
    for (const auto& c : comps) {
        if (static_cast<int>(c.size()) < inst.l) {
            Instance next{remove_vertices(inst.graph, c), inst.k - static_cast<long long>(c.size()), inst.l};
            return ComponentReduction{std::move(next), RuleId::SmallComponent, c};
        }
    }
    for (const auto& c : comps) {
        if (static_cast<int>(c.size()) == inst.l) {
            Instance next{remove_vertices(inst.graph, c), inst.k, inst.l};
            return ComponentReduction{std::move(next), RuleId::ExactComponent, c};
        }
    }
    return std::nullopt;
}

CrownSearch find_ecoc_crown_via_lp(const Instance& inst, const KernelizeOptions& opts) {
    const Graph& g = inst.graph;
    const int l = inst.l;

    // Load-bearing preconditions: with rules 1-3 exhausted, a failed crown
    // search proves a no-instance. Guard them at runtime.
    if (g.num_vertices() < (l + 1) * std::max(inst.k, 0LL) + l)
        throw std::logic_error("find_ecoc_crown_via_lp: size-bound rule still applicable");
    for (const auto& c : connected_components(g))
        if (static_cast<int>(c.size()) <= l)
            throw std::logic_error("find_ecoc_crown_via_lp: component reduction still applicable");

    LpSolution sol;
    if (opts.lazy_lp) {
        sol = solve_wecoc_lp_lazy(g, l);
    } else {
        CoveringLp lp = build_wecoc_lp(g, l);
        if (opts.lp_dump)
            dump_lp(lp, *opts.lp_dump);
        sol = solve_lp_exact(lp);
    }
    VertexClassification classes = classify_vertices(sol);

    // Size-l components of the zero-valued part become the a-side of the
    // auxiliary graph; the one-valued vertices the b-side.
    Graph zero_part = remove_vertices(g, set_difference(g.vertices(), classes.a_set));
    ComponentList zero_comps;
    for (auto& c : connected_components(zero_part))
        if (static_cast<int>(c.size()) == l)
            zero_comps.push_back(std::move(c));

    BipartiteGraph aux(static_cast<int>(zero_comps.size()),
                       static_cast<int>(classes.b_set.size()));
    for (size_t a = 0; a < zero_comps.size(); ++a) {
        for (int v : neighborhood(g, zero_comps[a])) {
            auto it = std::lower_bound(classes.b_set.begin(), classes.b_set.end(), v);
            if (it == classes.b_set.end() || *it != v) {
                // A neighbor of an all-zero size-l component must have
                // value exactly 1, or the covering constraint on the
                // component plus that neighbor is violated.
                std::ostringstream msg;
                msg << "find_ecoc_crown_via_lp: neighbor " << v
                    << " of a zero-valued size-" << l
                    << " component has LP value " << to_string(sol.value_of(v))
                    << ", contradicting LP feasibility";
                throw std::logic_error(msg.str());
            }
            aux.add_edge(static_cast<int>(a), static_cast<int>(it - classes.b_set.begin()));
        }
    }

    std::optional<VcCrown> vc = find_vc_crown(aux);
    if (!vc)
        return CrownSearch{std::move(sol), std::move(classes), std::nullopt};

    EcocCrown crown;
    for (int a : vc->i_side)
        crown.i_set = set_union(crown.i_set, zero_comps[a]);
    for (size_t t = 0; t < vc->j_side.size(); ++t) {
        int j_vertex = classes.b_set[vc->j_side[t]];
        crown.j_set.push_back(j_vertex);
        crown.component_matching.emplace_back(j_vertex, zero_comps[vc->witness_a[t]]);
    }
    crown.r_set = set_difference(g.vertices(), set_union(crown.i_set, crown.j_set));

    if (!validate_ecoc_crown(g, crown, l))
        throw std::logic_error("find_ecoc_crown_via_lp: lifted crown failed validation");
    return CrownSearch{std::move(sol), std::move(classes), std::move(crown)};
}

bool validate_ecoc_crown(const Graph& g, const EcocCrown& crown, int l) {
    if (l < 1 || crown.i_set.empty())
        return false;
    if (!is_canonical_set(crown.i_set) || !is_canonical_set(crown.j_set) ||
        !is_canonical_set(crown.r_set))
        return false;
    for (int v : crown.i_set)
        if (!g.has_vertex(v))
            return false;
    for (int v : crown.j_set)
        if (!g.has_vertex(v))
            return false;
    for (int v : crown.r_set)
        if (!g.has_vertex(v))
            return false;

    // Partition of V(G).
    if (!set_intersection(crown.i_set, crown.j_set).empty() ||
        !set_intersection(crown.i_set, crown.r_set).empty() ||
        !set_intersection(crown.j_set, crown.r_set).empty())
        return false;
    if (set_union(set_union(crown.i_set, crown.j_set), crown.r_set) != g.vertices())
        return false;

    // Every component of G[I] has exactly l vertices.
    Graph induced = remove_vertices(g, set_difference(g.vertices(), crown.i_set));
    ComponentList comps = connected_components(induced);
    for (const auto& c : comps)
        if (static_cast<int>(c.size()) != l)
            return false;

    // No edge between I and R.
    if (!is_subset(neighborhood(g, crown.i_set), crown.j_set))
        return false;

    // Total injective matching of J into the components, each J-vertex
    // adjacent to its component.
    VertexSet matched_js;
    std::vector<VertexSet> matched_comps;
    for (const auto& [j, comp] : crown.component_matching) {
        matched_js.push_back(j);
        matched_comps.push_back(comp);
    }
    if (matched_js != crown.j_set)
        return false;
    for (size_t t = 0; t < matched_comps.size(); ++t) {
        if (std::find(comps.begin(), comps.end(), matched_comps[t]) == comps.end())
            return false;
        for (size_t s = t + 1; s < matched_comps.size(); ++s)
            if (matched_comps[t] == matched_comps[s])
                return false;
        bool adjacent = false;
        for (int u : matched_comps[t])
            if (g.has_edge(matched_js[t], u))
                adjacent = true;
        if (!adjacent)
            return false;
    }
    return true;
}

Instance apply_crown(const Instance& inst, const EcocCrown& crown) {
    if (!validate_ecoc_crown(inst.graph, crown, inst.l))
        throw std::invalid_argument("apply_crown: invalid crown for this instance");
    VertexSet removed = set_union(crown.i_set, crown.j_set);
    return Instance{remove_vertices(inst.graph, removed),
                    inst.k - static_cast<long long>(crown.j_set.size()), inst.l};
}

KernelResult kernelize(const Instance& inst, const KernelizeOptions& opts) {
    KernelResult result;
    Instance cur = inst;
    while (true) {
        if (cur.k < 0) {
            result.kernel = std::nullopt;
            return result;
        }
        if (rule1_size_check(cur)) {
            result.trace.push_back(TraceRecord{RuleId::SizeBound, {}, cur.k, cur.k, std::nullopt});
            result.kernel = std::move(cur);
            return result;
        }
        if (auto red = rule23_component_reduction(cur)) {
            result.trace.push_back(
                TraceRecord{red->rule, red->removed, cur.k, red->next.k, std::nullopt});
            cur = std::move(red->next);
            continue;
        }
        CrownSearch search = find_ecoc_crown_via_lp(cur, opts);
        if (!search.crown) {
            result.kernel = std::nullopt;
            return result;
        }
        Instance next = apply_crown(cur, *search.crown);
        result.trace.push_back(TraceRecord{
            RuleId::LpCrown, set_union(search.crown->i_set, search.crown->j_set), cur.k,
            next.k, std::move(search.crown)});
        cur = std::move(next);
    }
}

namespace {

const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::SizeBound: return "RR1";
        case RuleId::SmallComponent: return "RR2";
        case RuleId::ExactComponent: return "RR3";
        case RuleId::LpCrown: return "RR4";
    }
    return "?";
}

void write_labeled_set(std::ostream& out, const Graph& g, const VertexSet& x) {
    for (int v : x)
        out << ' ' << g.label(v);
}

}  // namespace

void write_trace(std::ostream& out, const Instance& original, const KernelResult& result) {
    const Graph& g = original.graph;
    out << "ecoc trace v1\n";
    out << "instance n=" << g.num_vertices() << " m=" << g.num_edges()
        << " l=" << original.l << " k=" << original.k << "\n";
    for (const auto& rec : result.trace) {
        out << "rule " << rule_name(rec.rule) << " k " << rec.k_before << " -> "
            << rec.k_after << " removed";
        write_labeled_set(out, g, rec.removed);
        out << "\n";
        if (rec.crown) {
            out << "  I:";
            write_labeled_set(out, g, rec.crown->i_set);
            out << "\n  J:";
            write_labeled_set(out, g, rec.crown->j_set);
            out << "\n  R:";
            write_labeled_set(out, g, rec.crown->r_set);
            out << "\n";
            for (const auto& [j, comp] : rec.crown->component_matching) {
                out << "  match " << g.label(j) << " ->";
                write_labeled_set(out, g, comp);
                out << "\n";
            }
        }
    }
    if (result.kernel) {
        const Instance& ker = *result.kernel;
        out << "result kernel n=" << ker.graph.num_vertices() << " m="
            << ker.graph.num_edges() << " l=" << ker.l << " k=" << ker.k << "\n";
        const VertexSet& verts = ker.graph.vertices();
        for (size_t i = 0; i < verts.size(); ++i)
            out << "map " << i + 1 << " " << ker.graph.label(verts[i]) << "\n";
    } else {
        out << "result no\n";
    }
}

}  // namespace ecoc
