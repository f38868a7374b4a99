#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "boundary.hpp"
#include "multipole.hpp"

namespace cidc {

/// min objective . m  subject to  row_r . m >= 1 for every replacement r,
/// m >= 0; variables indexed by the boundaries of size |s|. Row r carries the
/// growth factor: row_r = c4 * (J . h(r)), objective = J . h(s).
struct ReductionLP {
    int k = 0;
    std::vector<Boundary> basis;
    std::vector<mpq_class> objective;
    std::vector<std::vector<mpq_class>> rows;
    mpq_class c4;  // c^{n(s)-n(r)}; every shipped replacement removes 4 vertices
};

/// Nonnegative multiplier per constraint; sum of multipliers lower-bounds the
/// primal optimum whenever sum_r y_r row_r <= objective componentwise.
struct DualCertificate {
    std::vector<mpq_class> multipliers;
    mpq_class claimed_value = 0;
};

struct LpSolution {
    mpq_class optimum;
    std::vector<mpq_class> primal;
    DualCertificate dual;
};

ReductionLP build_reduction_lp(const CubicMultipole& s, const std::vector<CubicMultipole>& replacements,
                               const mpq_class& c4, const Limits& limits = {});

/// Exact feasibility check; returns the certified lower bound (sum of
/// multipliers). Throws errc::verify with the violated coordinate otherwise.
mpq_class verify_dual(const ReductionLP& lp, const DualCertificate& cert);

/// Dense two-phase simplex with Bland's rule over exact rationals; also
/// checks strong duality on its own output before returning.
LpSolution solve_exact(const ReductionLP& lp);

/// Generic exact LP: min c.x st A x >= b, x >= 0.
LpSolution solve_exact_raw(const std::vector<mpq_class>& objective, const std::vector<std::vector<mpq_class>>& rows,
                           const std::vector<mpq_class>& rhs);

// Reduction gadgets of the cycle replacement calculus.
std::vector<CubicMultipole> replacement_poles_4cycle();                 // two non-crossing isolated-edge pairs
std::vector<CubicMultipole> replacement_poles_5cycle(bool crossing_too);  // vertex + isolated edge rotations

struct TheoremLpResult {
    bool ok = false;
    mpq_class optimum;
    mpq_class c4;
    int variables = 0;
    int constraints = 0;
};

/// End-to-end pipeline: gadgets, multiplicity vectors, join matrix, LP,
/// exact solve, dual verification. ok iff the optimum is at least 1.
TheoremLpResult check_theorem_lp(int cycle_len, const std::string& mode, const Limits& limits = {});

}  // namespace cidc
