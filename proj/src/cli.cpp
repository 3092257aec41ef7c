#include "ecoc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ecoc/instance_gen.hpp"
#include "ecoc/instance_io.hpp"
#include "ecoc/kernelizer.hpp"
#include "ecoc/oracle.hpp"

namespace ecoc {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Instance load_instance(const std::string& path) {
    return parse_instance(read_file(path));
}

// Accepts "3/4", "0.25", "1", "0".
Rational parse_probability(const std::string& s) {
    Rational p;
    if (s.find('/') != std::string::npos) {
        if (mpq_set_str(p.get_mpq_t(), s.c_str(), 10) != 0 || p.get_den() == 0)
            throw std::runtime_error("bad probability '" + s + "'");
        p.canonicalize();
    } else {
        auto dot = s.find('.');
        try {
            if (dot == std::string::npos) {
                p = Rational(mpz_class(s));
            } else {
                std::string digits = s.substr(0, dot) + s.substr(dot + 1);
                mpz_class den = 1;
                for (size_t i = dot + 1; i < s.size(); ++i)
                    den *= 10;
                p = Rational(mpz_class(digits), den);
                p.canonicalize();
            }
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("bad probability '" + s + "'");
        }
    }
    if (p < 0 || p > 1)
        throw std::runtime_error("probability '" + s + "' outside [0,1]");
    return p;
}

struct RuleCounts {
    int rr1 = 0, rr2 = 0, rr3 = 0, rr4 = 0;
};

RuleCounts count_rules(const KernelResult& result) {
    RuleCounts c;
    for (const auto& rec : result.trace) {
        switch (rec.rule) {
            case RuleId::SizeBound: ++c.rr1; break;
            case RuleId::SmallComponent: ++c.rr2; break;
            case RuleId::ExactComponent: ++c.rr3; break;
            case RuleId::LpCrown: ++c.rr4; break;
        }
    }
    return c;
}

int cmd_kernelize(const std::string& file, const std::string& trace_path,
                  const std::string& lp_dump_path, bool lazy_lp, std::ostream& out) {
    Instance inst = load_instance(file);

    KernelizeOptions opts;
    opts.lazy_lp = lazy_lp;
    std::ofstream lp_dump;
    if (!lp_dump_path.empty()) {
        lp_dump.open(lp_dump_path);
        if (!lp_dump)
            throw std::runtime_error("cannot write file '" + lp_dump_path + "'");
        opts.lp_dump = &lp_dump;
    }

    KernelResult result = kernelize(inst, opts);

    if (!trace_path.empty()) {
        std::ofstream tr(trace_path);
        if (!tr)
            throw std::runtime_error("cannot write file '" + trace_path + "'");
        write_trace(tr, inst, result);
    }

    if (!result.kernel) {
        out << "NO\n";
        return 1;
    }
    out << emit_instance(*result.kernel);
    return 0;
}

int cmd_solve(const std::string& file, std::ostream& out) {
    Instance inst = load_instance(file);
    OracleAnswer ans = brute_force_ecoc(inst);
    out << (ans.feasible ? "YES" : "NO") << "\n";
    if (ans.optimum)
        out << "optimum " << *ans.optimum << "\n";
    if (ans.witness) {
        out << "witness";
        for (int v : *ans.witness)
            out << " " << inst.graph.label(v);
        out << "\n";
    }
    return ans.feasible ? 0 : 1;
}

int cmd_verify(const std::string& file, bool lazy_lp, std::ostream& out) {
    Instance inst = load_instance(file);
    OracleAnswer truth = brute_force_ecoc(inst);

    KernelizeOptions opts;
    opts.lazy_lp = lazy_lp;
    KernelResult result = kernelize(inst, opts);

    if (!result.kernel) {
        if (!truth.feasible) {
            out << "PASS\n";
            return 0;
        }
        out << "FAIL kernelizer reported NO but the instance is solvable with "
            << *truth.optimum << " deletions\n";
        return 1;
    }
    OracleAnswer reduced = brute_force_ecoc(*result.kernel);
    if (truth.feasible != reduced.feasible) {
        out << "FAIL original is " << (truth.feasible ? "yes" : "no")
            << " but the kernel is " << (reduced.feasible ? "yes" : "no") << "\n";
        return 1;
    }
    out << "PASS\n";
    return 0;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path, std::ostream& out) {
    Instance inst = generate(spec);
    std::ostringstream body;
    body << "c gen " << (spec.kind == GenSpec::Kind::Planted ? "planted" : "random");
    if (spec.kind == GenSpec::Kind::Planted)
        body << " components=" << spec.num_components;
    else
        body << " n=" << spec.n;
    body << " l=" << spec.l << " k=" << spec.k << " p=" << to_string(spec.edge_prob)
         << " seed=" << spec.seed << "\n";
    body << emit_instance(inst);
    if (out_path.empty() || out_path == "-") {
        out << body.str();
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw std::runtime_error("cannot write file '" + out_path + "'");
        f << body.str();
    }
    return 0;
}

// --- bench ---

struct GridSpec {
    std::vector<int> ls, ns, ks;
    std::vector<Rational> ps;
    std::vector<std::string> kinds;
    int seeds = 3;
    uint64_t seed0 = 1;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec grid;
    grid.ps.push_back(make_rational(1, 5));
    grid.kinds = {"planted", "random"};
    bool have_p = false, have_kind = false, have_k = false;

    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bad grid component '" + part + "'");
        std::string key = part.substr(0, eq);
        std::istringstream values(part.substr(eq + 1));
        std::string v;
        std::vector<std::string> vals;
        while (std::getline(values, v, ','))
            vals.push_back(v);
        if (vals.empty())
            throw std::runtime_error("empty value list for grid key '" + key + "'");
        if (key == "l") {
            for (const auto& s : vals)
                grid.ls.push_back(std::stoi(s));
        } else if (key == "n") {
            for (const auto& s : vals)
                grid.ns.push_back(std::stoi(s));
        } else if (key == "k") {
            have_k = true;
            for (const auto& s : vals)
                grid.ks.push_back(std::stoi(s));
        } else if (key == "p") {
            if (!have_p) {
                grid.ps.clear();
                have_p = true;
            }
            for (const auto& s : vals)
                grid.ps.push_back(parse_probability(s));
        } else if (key == "kind") {
            if (!have_kind) {
                grid.kinds.clear();
                have_kind = true;
            }
            for (const auto& s : vals) {
                if (s != "planted" && s != "random")
                    throw std::runtime_error("unknown kind '" + s + "'");
                grid.kinds.push_back(s);
            }
        } else if (key == "seeds") {
            grid.seeds = std::stoi(vals.at(0));
        } else if (key == "seed0") {
            grid.seed0 = std::stoull(vals.at(0));
        } else {
            throw std::runtime_error("unknown grid key '" + key + "'");
        }
    }
    if (grid.ls.empty() || grid.ns.empty())
        throw std::runtime_error("grid needs at least l=... and n=...");
    if (!have_k)
        grid.ks.push_back(2);
    if (grid.seeds < 1)
        throw std::runtime_error("grid needs seeds >= 1");
    return grid;
}

std::string bench_row(const GenSpec& spec, bool lazy_lp) {
    Instance inst = generate(spec);
    KernelizeOptions opts;
    opts.lazy_lp = lazy_lp;

    auto t0 = std::chrono::steady_clock::now();
    KernelResult result = kernelize(inst, opts);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    RuleCounts rc = count_rules(result);
    std::ostringstream row;
    row << (spec.kind == GenSpec::Kind::Planted ? "planted" : "random") << ","
        << spec.seed << "," << inst.graph.num_vertices() << "," << inst.graph.num_edges()
        << "," << spec.l << "," << spec.k << ",";
    if (result.kernel) {
        row << "kernel," << result.kernel->graph.num_vertices() << ","
            << result.kernel->k;
    } else {
        row << "no,,";
    }
    row << "," << rc.rr1 << "," << rc.rr2 << "," << rc.rr3 << "," << rc.rr4 << ","
        << std::fixed << std::setprecision(3) << ms;
    return row.str();
}

int cmd_bench(const std::string& grid_text, const std::string& csv_path, int jobs,
              bool lazy_lp, std::ostream& out) {
    GridSpec grid = parse_grid(grid_text);

    std::vector<GenSpec> specs;
    for (const auto& kind : grid.kinds) {
        for (int l : grid.ls) {
            for (int n : grid.ns) {
                for (int k : grid.ks) {
                    for (const auto& p : grid.ps) {
                        for (int s = 0; s < grid.seeds; ++s) {
                            GenSpec spec;
                            spec.l = l;
                            spec.k = k;
                            spec.edge_prob = p;
                            spec.seed = grid.seed0 + static_cast<uint64_t>(s);
                            if (kind == "planted") {
                                spec.kind = GenSpec::Kind::Planted;
                                spec.num_components = std::max(0, (n - k) / l);
                            } else {
                                spec.kind = GenSpec::Kind::Random;
                                spec.n = n;
                            }
                            specs.push_back(spec);
                        }
                    }
                }
            }
        }
    }

    std::vector<std::string> rows(specs.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < specs.size(); ++i)
            rows[i] = bench_row(specs[i], lazy_lp);
    } else {
        // Runs are independent; results land in input order regardless of
        // completion order.
        size_t next = 0;
        while (next < specs.size()) {
            size_t batch = std::min(specs.size() - next, static_cast<size_t>(jobs));
            std::vector<std::future<std::string>> futs;
            for (size_t i = 0; i < batch; ++i)
                futs.push_back(std::async(std::launch::async, bench_row, specs[next + i], lazy_lp));
            for (size_t i = 0; i < batch; ++i)
                rows[next + i] = futs[i].get();
            next += batch;
        }
    }

    static const char* header =
        "kind,seed,n,m,l,k,outcome,kernel_n,kernel_k,rr1,rr2,rr3,rr4,wall_ms";
    if (csv_path.empty() || csv_path == "-") {
        out << header << "\n";
        for (const auto& r : rows)
            out << r << "\n";
    } else {
        std::ofstream f(csv_path);
        if (!f)
            throw std::runtime_error("cannot write file '" + csv_path + "'");
        f << header << "\n";
        for (const auto& r : rows)
            f << r << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact component order connectivity kernelization toolkit"};
    app.name("ecoc");
    app.require_subcommand(1);

    std::string file, trace_path, lp_dump_path, out_path, grid_text, csv_path = "-";
    std::string prob_text = "1/2";
    bool lazy_lp = false;
    int jobs = 1;
    GenSpec gen_spec;
    long long gen_k = 0;
    uint64_t gen_seed = 0;

    auto* kern = app.add_subcommand("kernelize", "reduce an instance to its kernel or report NO");
    kern->add_option("file", file, "instance file")->required();
    kern->add_option("--trace", trace_path, "write the reduction trace to this file");
    kern->add_option("--dump-lp", lp_dump_path, "write every materialized LP to this file");
    kern->add_flag("--lazy-lp", lazy_lp, "separate LP constraints on demand");

    auto* solve = app.add_subcommand("solve", "answer a small instance exactly by brute force");
    solve->add_option("file", file, "instance file")->required();

    auto* verify = app.add_subcommand("verify", "kernelize, then check equivalence against brute force");
    verify->add_option("file", file, "instance file")->required();
    verify->add_flag("--lazy-lp", lazy_lp, "separate LP constraints on demand");

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->require_subcommand(1);
    auto* planted = gen->add_subcommand("planted", "yes-instance built from size-l blocks");
    planted->add_option("--components", gen_spec.num_components, "number of size-l blocks")->required();
    auto* random = gen->add_subcommand("random", "G(n,p) instance");
    random->add_option("--n", gen_spec.n, "vertex count")->required();
    for (auto* sub : {planted, random}) {
        sub->add_option("--l", gen_spec.l, "required component order")->required();
        sub->add_option("--k", gen_k, "deletion budget")->required();
        sub->add_option("--p", prob_text, "edge probability (fraction or decimal)");
        sub->add_option("--seed", gen_seed, "prng seed")->required();
        sub->add_option("-o,--output", out_path, "write to file instead of stdout");
    }

    auto* bench = app.add_subcommand("bench", "kernelize a parameter grid and emit CSV rows");
    bench->add_option("--grid", grid_text,
                      "grid, e.g. 'l=1,2;n=12,24;k=2;p=0.2;kind=planted,random;seeds=5;seed0=1'")
        ->required();
    bench->add_option("--csv", csv_path, "output file, '-' for stdout");
    bench->add_option("--jobs", jobs, "parallel kernelization runs");
    bench->add_flag("--lazy-lp", lazy_lp, "separate LP constraints on demand");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(kern))
            return cmd_kernelize(file, trace_path, lp_dump_path, lazy_lp, out);
        if (app.got_subcommand(solve))
            return cmd_solve(file, out);
        if (app.got_subcommand(verify))
            return cmd_verify(file, lazy_lp, out);
        if (app.got_subcommand(gen)) {
            gen_spec.kind = gen->got_subcommand(planted) ? GenSpec::Kind::Planted
                                                         : GenSpec::Kind::Random;
            gen_spec.k = gen_k;
            gen_spec.seed = gen_seed;
            gen_spec.edge_prob = parse_probability(prob_text);
            return cmd_gen(gen_spec, out_path, out);
        }
        if (app.got_subcommand(bench))
            return cmd_bench(grid_text, csv_path, jobs, lazy_lp, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace ecoc
