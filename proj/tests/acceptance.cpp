// Acceptance suite: drives the full pipeline over seeded corpora and
// prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "ecoc/instance_gen.hpp"
#include "ecoc/instance_io.hpp"
#include "ecoc/kernelizer.hpp"
#include "ecoc/oracle.hpp"

using namespace ecoc;

namespace {

struct Criterion {
    int failures = 0;
    long checked = 0;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (failures < 5)
            detail << (failures == 0 ? "" : "; ") << why;
        ++failures;
    }
};

// Criterion-1/2 corpus: per l, 250 planted and 250 random instances with
// n <= 60. Random graphs stay in the sparse c/n regime so the largest
// LPs keep a bounded degree.
std::vector<Instance> size_bound_corpus(int l) {
    std::vector<Instance> out;
    const Rational planted_ps[] = {make_rational(1, 10), make_rational(1, 5),
                                   make_rational(1, 3), make_rational(1, 2)};
    for (int i = 0; i < 250; ++i) {
        int k = 1 + i % 6;
        int max_comps = (60 - k) / l;
        int comps = 1 + (i * 7) % max_comps;
        out.push_back(gen_planted(comps, l, k, planted_ps[i % 4],
                                  1000 + static_cast<uint64_t>(l) * 251 + i));
    }
    const int pfactors[] = {2, 3, 4, 6};
    for (int i = 0; i < 250; ++i) {
        int n = 8 + (i * 5) % 53;
        int k = 1 + i % 8;
        Rational p = make_rational(pfactors[i % 4], 2 * n);  // expected degree ~pf/2
        out.push_back(gen_random(n, p, l, k, 9000 + static_cast<uint64_t>(l) * 257 + i));
    }
    return out;
}

// Criterion-3..6 corpus: >= 1050 instances with n <= 16, l in {1,2,3},
// k <= 4.
std::vector<Instance> equivalence_corpus() {
    std::vector<Instance> out;
    const Rational ps[] = {make_rational(1, 5), make_rational(3, 10),
                           make_rational(2, 5), make_rational(3, 5)};
    for (int i = 0; i < 1050; ++i) {
        int l = 1 + i % 3;
        int k = i % 5;
        uint64_t seed = 40000 + i;
        if (i % 2 == 0) {
            int comps = 1 + (i / 2) % (l == 3 ? 4 : 6);
            if (comps * l + k > 16)
                comps = (16 - k) / l;
            out.push_back(gen_planted(comps, l, k, ps[i % 4], seed));
        } else {
            int n = 4 + (i / 2) % 13;
            out.push_back(gen_random(n, ps[i % 4], l, k, seed));
        }
    }
    return out;
}

Criterion criterion_size_bound(std::vector<KernelResult>* stash,
                               std::vector<Instance>* corpus_stash) {
    Criterion c;
    for (int l = 1; l <= 3; ++l) {
        for (Instance& inst : size_bound_corpus(l)) {
            KernelResult result = kernelize(inst);
            ++c.checked;
            if (result.kernel) {
                long long k = result.kernel->k;
                long long n = result.kernel->graph.num_vertices();
                if (k < 0)
                    c.fail("negative budget in kernel (l=" + std::to_string(l) + ")");
                if (n > (l + 1) * k + l - 1)
                    c.fail("kernel has " + std::to_string(n) + " vertices, bound " +
                           std::to_string((l + 1) * k + l - 1));
            }
            corpus_stash->push_back(std::move(inst));
            stash->push_back(std::move(result));
        }
    }
    return c;
}

Criterion criterion_specializations(const std::vector<Instance>& corpus,
                                    const std::vector<KernelResult>& results) {
    Criterion c;
    for (size_t i = 0; i < corpus.size(); ++i) {
        if (!results[i].kernel)
            continue;
        const Instance& ker = *results[i].kernel;
        ++c.checked;
        if (ker.l == 1 && ker.graph.num_vertices() > 2 * ker.k)
            c.fail("l=1 kernel exceeds 2k");
        if (ker.l == 2 && ker.graph.num_vertices() > 3 * ker.k + 1)
            c.fail("l=2 kernel exceeds 3k+1");
    }
    return c;
}

Criterion criterion_equivalence(const std::vector<Instance>& corpus,
                                std::vector<KernelResult>* stash) {
    Criterion c;
    for (const Instance& inst : corpus) {
        KernelResult result = kernelize(inst);
        OracleAnswer truth = brute_force_ecoc(inst);
        ++c.checked;
        if (result.kernel) {
            OracleAnswer reduced = brute_force_ecoc(*result.kernel);
            if (truth.feasible != reduced.feasible)
                c.fail("kernel answer flipped on a " +
                       std::string(truth.feasible ? "yes" : "no") + "-instance");
        } else if (truth.feasible) {
            c.fail("reported NO on a yes-instance");
        }
        stash->push_back(std::move(result));
    }
    return c;
}

Criterion criterion_crown_validity(const std::vector<Instance>& corpus,
                                   const std::vector<KernelResult>& results) {
    Criterion c;
    for (size_t i = 0; i < corpus.size(); ++i) {
        Instance cur = corpus[i];
        for (const auto& rec : results[i].trace) {
            if (rec.crown) {
                ++c.checked;
                if (!validate_ecoc_crown(cur.graph, *rec.crown, cur.l))
                    c.fail("trace crown failed validation");
            }
            cur.graph = remove_vertices(cur.graph, rec.removed);
            cur.k = rec.k_after;
        }
    }
    return c;
}

Criterion criterion_lp_sanity() {
    Criterion c;
    const Rational ps[] = {make_rational(1, 5), make_rational(2, 5), make_rational(3, 5)};
    for (int i = 0; i < 330; ++i) {
        int n = 2 + i % 9;  // up to 10
        int l = 1 + i % 3;
        Graph g = gen_random(n, ps[i % 3], l, 0, 70000 + i).graph;
        ++c.checked;
        LpSolution sol;
        try {
            sol = solve_lp_exact(build_wecoc_lp(g, l));
        } catch (const std::exception& e) {
            c.fail(std::string("lp solve failed: ") + e.what());
            continue;
        }
        Rational total = 0;
        bool in_bounds = true;
        for (const auto& v : sol.values) {
            if (v < 0 || v > 1)
                in_bounds = false;
            total += v;
        }
        if (!in_bounds)
            c.fail("lp value outside [0,1]");
        if (total != sol.objective)
            c.fail("objective mismatch");
        bool feasible = true;
        for (const auto& cset : enumerate_connected_sets(g, l + 1)) {
            Rational s = 0;
            for (int v : cset)
                s += sol.value_of(v);
            if (s < 1)
                feasible = false;
        }
        if (!feasible)
            c.fail("lp returned an infeasible point");
        int ip = brute_force_wecoc_ip(g, l);
        int ecoc_opt = *brute_force_ecoc(Instance{g, 0, l}).optimum;
        if (sol.objective > Rational(ip) || ip > ecoc_opt)
            c.fail("relaxation chain violated");
    }
    return c;
}

Criterion criterion_lp_classification(const std::vector<Instance>& corpus) {
    Criterion c;
    for (const Instance& inst : corpus) {
        // reduce by rules 1-3 only
        Instance cur = inst;
        bool stopped = false;
        while (true) {
            if (cur.k < 0 || rule1_size_check(cur)) {
                stopped = true;
                break;
            }
            if (auto red = rule23_component_reduction(cur)) {
                cur = std::move(red->next);
                continue;
            }
            break;
        }
        if (stopped)
            continue;
        if (!brute_force_ecoc(cur).feasible)
            continue;
        ++c.checked;

        CrownSearch search = find_ecoc_crown_via_lp(cur);
        if (!search.crown) {
            c.fail("no crown on a reduced yes-instance");
            continue;
        }
        if (!is_subset(search.crown->i_set, search.classes.a_set))
            c.fail("crown I escapes the zero class");
        if (!is_subset(search.crown->j_set, search.classes.b_set))
            c.fail("crown J escapes the one class");

        Graph zero_part = remove_vertices(
            cur.graph, set_difference(cur.graph.vertices(), search.classes.a_set));
        for (const auto& comp : connected_components(zero_part)) {
            if (static_cast<int>(comp.size()) != cur.l)
                continue;
            for (int v : neighborhood(cur.graph, comp))
                if (!set_contains(search.classes.b_set, v))
                    c.fail("neighbor of a size-l zero component not in B");
        }
    }
    return c;
}

Criterion criterion_matching_oracle() {
    Criterion c;
    for (int i = 0; i < 520; ++i) {
        SplitMix64 rng(80000 + static_cast<uint64_t>(i));
        int na = 1 + static_cast<int>(rng.below(6));
        int nb = static_cast<int>(rng.below(static_cast<uint64_t>(13 - na > 6 ? 7 : 13 - na)));
        BipartiteGraph bg(na, nb);
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < nb; ++b)
                if (rng.bernoulli(make_rational(2, 5)))
                    bg.add_edge(a, b);
        ++c.checked;
        if (max_matching(bg).size != brute_force_max_matching(bg))
            c.fail("matching size mismatch at case " + std::to_string(i));
    }
    return c;
}

Criterion criterion_planted_completeness() {
    Criterion c;
    const Rational ps[] = {make_rational(1, 6), make_rational(1, 3), make_rational(1, 2),
                           make_rational(4, 5)};
    for (int i = 0; i < 220; ++i) {
        int l = 1 + i % 3;
        int k = i % 4;
        int comps = 1 + i % 5;
        if (comps * l + k > 20)
            comps = (20 - k) / l;
        Instance inst = gen_planted(comps, l, k, ps[i % 4], 90000 + i);
        ++c.checked;
        KernelResult result = kernelize(inst);
        if (!result.kernel) {
            c.fail("NO on a planted yes-instance (i=" + std::to_string(i) + ")");
            continue;
        }
        if (!brute_force_ecoc(*result.kernel).feasible)
            c.fail("planted kernel is not a yes-instance");
    }
    return c;
}

Criterion criterion_determinism() {
    Criterion c;
    for (int i = 0; i < 40; ++i) {
        int l = 1 + i % 3;
        Instance inst = i % 2 == 0
            ? gen_planted(2 + i % 4, l, 1 + i % 3, make_rational(1, 3), 95000 + i)
            : gen_random(6 + i % 11, make_rational(2, 5), l, i % 4, 95000 + i);
        std::string text = emit_instance(inst);

        auto run_once = [&](bool lazy) {
            Instance parsed = parse_instance(text);
            KernelizeOptions opts;
            opts.lazy_lp = lazy;
            KernelResult result = kernelize(parsed, opts);
            std::ostringstream out;
            if (result.kernel)
                out << emit_instance(*result.kernel);
            else
                out << "NO\n";
            write_trace(out, parsed, result);
            return out.str();
        };
        ++c.checked;
        if (run_once(false) != run_once(false))
            c.fail("eager kernelization not reproducible");
        if (run_once(true) != run_once(true))
            c.fail("lazy kernelization not reproducible");
    }
    return c;
}

int report(int idx, const std::string& name, const Criterion& c,
           std::chrono::steady_clock::time_point t0) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << "criterion " << idx << " (" << name << "): "
              << (c.failures == 0 ? "PASS" : "FAIL") << " [" << c.checked
              << " checks, " << ms << " ms]";
    if (c.failures != 0)
        std::cout << " -- " << c.failures << " failures: " << c.detail.str();
    std::cout << "\n" << std::flush;
    return c.failures == 0 ? 0 : 1;
}

}  // namespace

int main() {
    int failed = 0;

    auto t0 = std::chrono::steady_clock::now();
    std::vector<Instance> size_corpus;
    std::vector<KernelResult> size_results;
    failed += report(1, "kernel size bound", criterion_size_bound(&size_results, &size_corpus), t0);

    t0 = std::chrono::steady_clock::now();
    failed += report(2, "l=1 and l=2 specializations",
                     criterion_specializations(size_corpus, size_results), t0);

    t0 = std::chrono::steady_clock::now();
    std::vector<Instance> eq_corpus = equivalence_corpus();
    std::vector<KernelResult> eq_results;
    failed += report(3, "oracle equivalence", criterion_equivalence(eq_corpus, &eq_results), t0);

    t0 = std::chrono::steady_clock::now();
    failed += report(4, "crown validity", criterion_crown_validity(eq_corpus, eq_results), t0);

    t0 = std::chrono::steady_clock::now();
    failed += report(5, "lp sanity", criterion_lp_sanity(), t0);

    t0 = std::chrono::steady_clock::now();
    failed += report(6, "lp classification", criterion_lp_classification(eq_corpus), t0);

    t0 = std::chrono::steady_clock::now();
    failed += report(7, "matching oracle", criterion_matching_oracle(), t0);

    t0 = std::chrono::steady_clock::now();
    failed += report(8, "planted completeness", criterion_planted_completeness(), t0);

    t0 = std::chrono::steady_clock::now();
    failed += report(9, "determinism", criterion_determinism(), t0);

    return failed;
}
