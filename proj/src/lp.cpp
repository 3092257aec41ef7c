#include "ecoc/lp.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace ecoc {

namespace {

// Exact simplex over the rationals on the dual of the covering LP:
//
//   max  sum_j y_j   s.t.  sum_{j : v in C_j} y_j <= 1  (one row per vertex),
//        y >= 0.
//
// The slack basis is feasible from the start, so no phase 1 is needed, and
// the basis never grows past |V| rows no matter how many covering
// constraints are active. The primal vertex values are read off the
// reduced costs of the slack columns at optimality; by strong duality
// their sum equals the dual objective.
//
// Columns for newly activated constraints are appended in place: the
// slack columns hold the current basis inverse, so a new column and its
// reduced cost are a few additions. Pivoting uses Bland's rule (smallest
// column index enters; smallest basic index breaks ratio ties), which
// cannot cycle.
class DualSimplex {
public:
    explicit DualSimplex(int rows) : rows_(rows), rhs_(rows, 1), basis_(rows) {
        cols_.resize(rows);
        zrow_.assign(rows, 0);
        for (int r = 0; r < rows_; ++r) {
            cols_[r].assign(rows_, 0);
            cols_[r][r] = 1;
            basis_[r] = r;  // slack column r basic in row r
        }
    }

    // support: dense row indices of the vertices in the covering set.
    void add_constraint_column(const std::vector<int>& support) {
        std::vector<Rational> col(rows_, 0);
        Rational rc = 1;
        for (int v : support) {
            for (int r = 0; r < rows_; ++r)
                if (cols_[v][r] != 0)
                    col[r] += cols_[v][r];
            rc += zrow_[v];  // zrow of slack v is -pi_v
        }
        cols_.push_back(std::move(col));
        zrow_.push_back(std::move(rc));
    }

    void optimize() {
        while (true) {
            int enter = -1;
            for (int c = 0; c < static_cast<int>(cols_.size()); ++c) {
                if (zrow_[c] > 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == -1)
                return;
            int leave = -1;
            Rational best;
            for (int r = 0; r < rows_; ++r) {
                const Rational& a = cols_[enter][r];
                if (a > 0) {
                    Rational ratio = rhs_[r] / a;
                    if (leave == -1 || ratio < best ||
                        (ratio == best && basis_[r] < basis_[leave])) {
                        best = ratio;
                        leave = r;
                    }
                }
            }
            if (leave == -1)
                throw std::logic_error("simplex: dual unbounded, primal covering LP infeasible");
            pivot(leave, enter);
        }
    }

    // Optimal primal vertex values, indexed by dense row.
    std::vector<Rational> primal_values() const {
        std::vector<Rational> x(rows_);
        for (int r = 0; r < rows_; ++r)
            x[r] = -zrow_[r];
        return x;
    }

    const Rational& objective() const { return zval_; }

private:
    void pivot(int r, int s) {
        std::vector<Rational> factor(rows_);
        for (int i = 0; i < rows_; ++i)
            factor[i] = cols_[s][i];
        const Rational piv = factor[r];
        const Rational fz = zrow_[s];

        for (int c = 0; c < static_cast<int>(cols_.size()); ++c) {
            if (c == s)
                continue;
            Rational& prv = cols_[c][r];
            if (prv != 0)
                prv /= piv;
            else
                continue;
            for (int i = 0; i < rows_; ++i) {
                if (i != r && factor[i] != 0)
                    cols_[c][i] -= factor[i] * prv;
            }
            if (fz != 0)
                zrow_[c] -= fz * prv;
        }
        rhs_[r] /= piv;
        for (int i = 0; i < rows_; ++i) {
            if (i != r && factor[i] != 0)
                rhs_[i] -= factor[i] * rhs_[r];
        }
        if (fz != 0)
            zval_ += fz * rhs_[r];

        for (int i = 0; i < rows_; ++i)
            cols_[s][i] = 0;
        cols_[s][r] = 1;
        zrow_[s] = 0;
        basis_[r] = s;
    }

    int rows_;
    std::vector<std::vector<Rational>> cols_;  // column-major; 0..rows-1 are slacks
    std::vector<Rational> zrow_;               // reduced costs
    std::vector<Rational> rhs_;
    std::vector<int> basis_;
    Rational zval_ = 0;
};

constexpr int kActivationBatch = 64;

struct DenseIndex {
    std::vector<int> row_of;  // vertex id -> dense row

    DenseIndex(const VertexSet& variables, int capacity) : row_of(capacity, -1) {
        for (size_t i = 0; i < variables.size(); ++i)
            row_of[variables[i]] = static_cast<int>(i);
    }

    std::vector<int> rows(const VertexSet& support) const {
        std::vector<int> out;
        out.reserve(support.size());
        for (int v : support) {
            if (v < 0 || v >= static_cast<int>(row_of.size()) || row_of[v] < 0)
                throw std::invalid_argument("lp: constraint vertex is not a variable");
            out.push_back(row_of[v]);
        }
        return out;
    }
};

Rational constraint_value(const std::vector<Rational>& x, const std::vector<int>& rows) {
    Rational s = 0;
    for (int r : rows)
        s += x[r];
    return s;
}

LpSolution finish_solution(const VertexSet& variables, std::vector<Rational> x,
                           const Rational& objective) {
    Rational total = 0;
    for (const auto& v : x) {
        if (v < 0 || v > 1)
            throw std::logic_error("lp: optimal value escaped [0,1]");
        total += v;
    }
    if (total != objective)
        throw std::logic_error("lp: objective does not match value sum");
    return LpSolution{variables, std::move(x), total};
}

}  // namespace

const Rational& LpSolution::value_of(int v) const {
    auto it = std::lower_bound(variables.begin(), variables.end(), v);
    if (it == variables.end() || *it != v)
        throw std::out_of_range("lp solution: no such variable");
    return values[it - variables.begin()];
}

CoveringLp build_wecoc_lp(const Graph& g, int l) {
    if (l < 1)
        throw std::invalid_argument("build_wecoc_lp: l must be >= 1");
    return CoveringLp{g.vertices(), enumerate_connected_sets(g, l + 1), l};
}

LpSolution solve_lp_exact(const CoveringLp& lp) {
    const int n = static_cast<int>(lp.variables.size());
    const int m = static_cast<int>(lp.constraints.size());
    if (m == 0)
        return LpSolution{lp.variables, std::vector<Rational>(n, 0), 0};

    int capacity = lp.variables.empty() ? 0 : lp.variables.back() + 1;
    DenseIndex index(lp.variables, capacity);
    std::vector<std::vector<int>> support(m);
    for (int j = 0; j < m; ++j) {
        support[j] = index.rows(lp.constraints[j]);
        if (static_cast<int>(support[j].size()) != lp.l + 1)
            throw std::invalid_argument("lp: constraint size differs from l+1");
    }

    DualSimplex simplex(n);
    std::vector<char> active(m, 0);

    // Seed with a greedy set of pairwise disjoint constraints; they are
    // mutually independent rows and give the first solve a running start.
    {
        std::vector<char> used(n, 0);
        for (int j = 0; j < m; ++j) {
            bool disjoint = true;
            for (int r : support[j])
                if (used[r])
                    disjoint = false;
            if (!disjoint)
                continue;
            for (int r : support[j])
                used[r] = 1;
            simplex.add_constraint_column(support[j]);
            active[j] = 1;
        }
    }

    while (true) {
        simplex.optimize();
        std::vector<Rational> x = simplex.primal_values();
        int added = 0;
        for (int j = 0; j < m && added < kActivationBatch; ++j) {
            if (active[j])
                continue;
            if (constraint_value(x, support[j]) < 1) {
                simplex.add_constraint_column(support[j]);
                active[j] = 1;
                ++added;
            }
        }
        if (added == 0) {
            for (int j = 0; j < m; ++j)
                if (constraint_value(x, support[j]) < 1)
                    throw std::logic_error("lp: optimum violates an active constraint");
            return finish_solution(lp.variables, std::move(x), simplex.objective());
        }
    }
}

LpSolution solve_wecoc_lp_lazy(const Graph& g, int l) {
    if (l < 1)
        throw std::invalid_argument("solve_wecoc_lp_lazy: l must be >= 1");
    const VertexSet& variables = g.vertices();
    const int n = static_cast<int>(variables.size());
    DenseIndex index(variables, g.capacity());

    DualSimplex simplex(n);
    std::set<VertexSet> activated;

    while (true) {
        simplex.optimize();
        std::vector<Rational> x = simplex.primal_values();
        int added = 0;
        for_each_connected_set(g, l + 1, [&](const VertexSet& c) {
            if (activated.count(c))
                return true;
            std::vector<int> rows = index.rows(c);
            if (constraint_value(x, rows) < 1) {
                simplex.add_constraint_column(rows);
                activated.insert(c);
                ++added;
            }
            return added < kActivationBatch;
        });
        if (added == 0)
            return finish_solution(variables, std::move(x), simplex.objective());
    }
}

VertexClassification classify_vertices(const LpSolution& sol) {
    VertexClassification out;
    for (size_t i = 0; i < sol.variables.size(); ++i) {
        if (sol.values[i] == 0)
            out.a_set.push_back(sol.variables[i]);
        else if (sol.values[i] == 1)
            out.b_set.push_back(sol.variables[i]);
        else
            out.fractional.push_back(sol.variables[i]);
    }
    return out;
}

void dump_lp(const CoveringLp& lp, std::ostream& out) {
    out << "\\ covering lp: " << lp.variables.size() << " variables, "
        << lp.constraints.size() << " constraints, l = " << lp.l << "\n";
    out << "Minimize\n obj:";
    for (size_t i = 0; i < lp.variables.size(); ++i)
        out << (i == 0 ? " " : " + ") << "x" << lp.variables[i];
    out << "\nSubject To\n";
    for (size_t j = 0; j < lp.constraints.size(); ++j) {
        out << " c" << j << ":";
        const auto& c = lp.constraints[j];
        for (size_t i = 0; i < c.size(); ++i)
            out << (i == 0 ? " " : " + ") << "x" << c[i];
        out << " >= 1\n";
    }
    out << "Bounds\n";
    for (int v : lp.variables)
        out << " 0 <= x" << v << " <= 1\n";
    out << "End\n";
}

}  // namespace ecoc
