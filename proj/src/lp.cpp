#include "lp.hpp"

#include <algorithm>

namespace cidc {

ReductionLP build_reduction_lp(const CubicMultipole& s, const std::vector<CubicMultipole>& replacements,
                               const mpq_class& c4, const Limits& limits) {
    ReductionLP lp;
    lp.k = s.size();
    lp.c4 = c4;
    for (const auto& r : replacements) {
        if (r.size() != s.size())
            throw Error(errc::usage, "build_reduction_lp: replacement size mismatch");
        if (s.order() - r.order() != 4)
            throw Error(errc::usage, "build_reduction_lp: replacements must remove exactly four vertices");
    }
    const JoinMatrix& J = join_matrix(lp.k);
    lp.basis = J.basis;
    int c = static_cast<int>(lp.basis.size());

    auto transformed = [&](const CubicMultipole& g) {
        MultiplicityVector h = multiplicity_vector(g, limits);
        std::vector<mpq_class> dense(c, 0);
        for (const auto& [b, v] : h.entries) dense[J.index_of(b)] = v;
        std::vector<mpq_class> out(c, 0);
        for (int i = 0; i < c; ++i) {
            mpq_class acc = 0;
            for (int j = 0; j < c; ++j)
                if (dense[j] != 0) acc += mpq_class(J.entry[i][j]) * dense[j];
            out[i] = acc;
        }
        return out;
    };

    lp.objective = transformed(s);
    for (const auto& r : replacements) {
        auto row = transformed(r);
        for (auto& v : row) v *= c4;
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

mpq_class verify_dual(const ReductionLP& lp, const DualCertificate& cert) {
    if (cert.multipliers.size() != lp.rows.size())
        throw Error(errc::usage, "verify_dual: one multiplier per constraint required");
    for (size_t r = 0; r < cert.multipliers.size(); ++r)
        if (cert.multipliers[r] < 0)
            throw Error(errc::verify, "verify_dual: multiplier " + std::to_string(r) + " is negative");
    int c = static_cast<int>(lp.objective.size());
    for (int j = 0; j < c; ++j) {
        mpq_class combo = 0;
        for (size_t r = 0; r < lp.rows.size(); ++r) combo += cert.multipliers[r] * lp.rows[r][j];
        if (combo > lp.objective[j])
            throw Error(errc::verify, "verify_dual: dual infeasible at boundary coordinate " + std::to_string(j) +
                                          " (" + lp.basis[j].text() + ")");
    }
    mpq_class bound = 0;
    for (const auto& y : cert.multipliers) bound += y;  // right-hand sides are all 1
    return bound;
}

// -- simplex -----------------------------------------------------------------------

LpSolution solve_exact_raw(const std::vector<mpq_class>& objective, const std::vector<std::vector<mpq_class>>& rows,
                           const std::vector<mpq_class>& rhs) {
    int m = static_cast<int>(rows.size());
    int n = static_cast<int>(objective.size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n) throw Error(errc::usage, "lp: ragged constraint matrix");
    for (const auto& b : rhs)
        if (b < 0) throw Error(errc::usage, "lp: right-hand sides must be nonnegative");

    // standard form: A x - s + a = b with surplus s >= 0 and artificials a.
    // columns: 0..n-1 originals, n..n+m-1 surplus, n+m..n+2m-1 artificials.
    int cols = n + 2 * m;
    std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(cols + 1, 0));
    std::vector<int> base(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = rows[i][j];
        T[i][n + i] = -1;
        T[i][n + m + i] = 1;
        T[i][cols] = rhs[i];
        base[i] = n + m + i;
    }

    auto pivot = [&](int r, int c) {
        mpq_class inv = 1 / T[r][c];
        for (int j = 0; j <= cols; ++j) T[r][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || T[i][c] == 0) continue;
            mpq_class f = T[i][c];
            for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[r][j];
        }
        base[r] = c;
    };

    // price out a cost vector against the current basis
    auto reduced_costs = [&](const std::vector<mpq_class>& cost) {
        std::vector<mpq_class> red(cols, 0);
        std::vector<mpq_class> yb(m, 0);
        for (int i = 0; i < m; ++i) yb[i] = cost[base[i]];
        for (int j = 0; j < cols; ++j) {
            mpq_class acc = cost[j];
            for (int i = 0; i < m; ++i)
                if (T[i][j] != 0) acc -= yb[i] * T[i][j];
            red[j] = acc;
        }
        return red;
    };

    auto run_phase = [&](const std::vector<mpq_class>& cost, bool forbid_artificials) {
        while (true) {
            auto red = reduced_costs(cost);
            int enter = -1;
            for (int j = 0; j < cols; ++j) {
                if (forbid_artificials && j >= n + m) continue;
                if (red[j] < 0) {
                    enter = j;  // Bland: smallest index
                    break;
                }
            }
            if (enter < 0) return;
            int leave = -1;
            mpq_class best_ratio;
            for (int i = 0; i < m; ++i) {
                if (T[i][enter] <= 0) continue;
                mpq_class ratio = T[i][cols] / T[i][enter];
                if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && base[i] < base[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw Error(errc::verify, "lp: unbounded");
            pivot(leave, enter);
        }
    };

    // phase 1: drive artificials to zero
    std::vector<mpq_class> phase1_cost(cols, 0);
    for (int j = n + m; j < cols; ++j) phase1_cost[j] = 1;
    run_phase(phase1_cost, false);
    mpq_class infeas = 0;
    for (int i = 0; i < m; ++i)
        if (base[i] >= n + m) infeas += T[i][cols];
    if (infeas != 0) throw Error(errc::verify, "lp: infeasible");
    // kick surviving zero-level artificials out of the basis when possible
    for (int i = 0; i < m; ++i) {
        if (base[i] < n + m) continue;
        for (int j = 0; j < n + m; ++j)
            if (T[i][j] != 0) {
                pivot(i, j);
                break;
            }
    }

    // phase 2
    std::vector<mpq_class> cost(cols, 0);
    for (int j = 0; j < n; ++j) cost[j] = objective[j];
    run_phase(cost, true);

    LpSolution sol;
    sol.primal.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (base[i] < n) sol.primal[base[i]] = T[i][cols];
    sol.optimum = 0;
    for (int j = 0; j < n; ++j) sol.optimum += objective[j] * sol.primal[j];
    // dual multipliers: y_i equals the reduced cost of the i-th surplus column
    auto red = reduced_costs(cost);
    sol.dual.multipliers.assign(m, 0);
    for (int i = 0; i < m; ++i) sol.dual.multipliers[i] = red[n + i];
    sol.dual.claimed_value = sol.optimum;
    return sol;
}

LpSolution solve_exact(const ReductionLP& lp) {
    std::vector<mpq_class> rhs(lp.rows.size(), 1);
    LpSolution sol = solve_exact_raw(lp.objective, lp.rows, rhs);
    // strong duality on our own output
    mpq_class bound = verify_dual(lp, sol.dual);
    if (bound != sol.optimum)
        throw Error(errc::internal, "lp: primal/dual optimum mismatch (" + sol.optimum.get_str() + " vs " +
                                        bound.get_str() + ")");
    // primal feasibility
    for (size_t r = 0; r < lp.rows.size(); ++r) {
        mpq_class lhs = 0;
        for (size_t j = 0; j < lp.objective.size(); ++j) lhs += lp.rows[r][j] * sol.primal[j];
        if (lhs < 1) throw Error(errc::internal, "lp: primal solution infeasible");
    }
    for (const auto& x : sol.primal)
        if (x < 0) throw Error(errc::internal, "lp: negative primal coordinate");
    return sol;
}

// -- gadgets -------------------------------------------------------------------------

std::vector<CubicMultipole> replacement_poles_4cycle() {
    auto iso_pair = [](int a1, int a2, int b1, int b2) {
        return CubicMultipole::build(0, 4,
                                     {{EdgeEnd::at_slot(a1), EdgeEnd::at_slot(a2)},
                                      {EdgeEnd::at_slot(b1), EdgeEnd::at_slot(b2)}});
    };
    return {iso_pair(1, 2, 3, 4), iso_pair(2, 3, 4, 1)};
}

std::vector<CubicMultipole> replacement_poles_5cycle(bool crossing_too) {
    auto make = [](int i, int j) {
        // isolated edge spans slots i,j (1-based); the cubic vertex takes the rest
        std::vector<EdgeSpec> edges;
        edges.push_back({EdgeEnd::at_slot(i), EdgeEnd::at_slot(j)});
        for (int s = 1; s <= 5; ++s)
            if (s != i && s != j) edges.push_back({EdgeEnd::at_vertex(0), EdgeEnd::at_slot(s)});
        return CubicMultipole::build(1, 5, edges);
    };
    std::vector<CubicMultipole> out;
    for (int i = 0; i < 5; ++i) out.push_back(make(i + 1, (i + 1) % 5 + 1));
    if (crossing_too)
        for (int i = 0; i < 5; ++i) out.push_back(make(i + 1, (i + 2) % 5 + 1));
    return out;
}

TheoremLpResult check_theorem_lp(int cycle_len, const std::string& mode, const Limits& limits) {
    TheoremLpResult res;
    CubicMultipole s = cycle_pole(cycle_len);
    std::vector<CubicMultipole> repl;
    if (cycle_len == 4) {
        repl = replacement_poles_4cycle();
        res.c4 = 4;
    } else if (cycle_len == 5) {
        if (mode == "planar") {
            repl = replacement_poles_5cycle(false);
            res.c4 = mpq_class(5, 2);
        } else if (mode == "all") {
            repl = replacement_poles_5cycle(true);
            res.c4 = mpq_class(15, 4);
        } else {
            throw Error(errc::usage, "check_theorem_lp: mode must be planar or all");
        }
    } else {
        throw Error(errc::usage, "check_theorem_lp: cycle length must be 4 or 5");
    }
    ReductionLP lp = build_reduction_lp(s, repl, res.c4, limits);
    res.variables = static_cast<int>(lp.objective.size());
    res.constraints = static_cast<int>(lp.rows.size());
    LpSolution sol = solve_exact(lp);
    res.optimum = sol.optimum;
    res.ok = res.optimum >= 1;
    return res;
}

}  // namespace cidc
