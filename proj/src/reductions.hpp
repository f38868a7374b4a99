#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "multipole.hpp"

namespace cidc {

enum class StepKind { leaf_theta, leaf_k4, cut2, cut3, triangle, cycle4, cycle5, cycle5_all };

struct CertNode {
    CubicMultipole graph;
    StepKind kind = StepKind::leaf_theta;
    std::vector<std::array<int, 2>> witness;  // edges as vertex pairs
    mpq_class factor = 1;
    bool combine_min = false;
    std::vector<CertNode> children;
    mpz_class leaf_nu = 0;
    mpq_class bound = 0;
    bool is_leaf() const { return kind == StepKind::leaf_theta || kind == StepKind::leaf_k4; }
};

/// Tree of reduction steps bottoming out at K4 (nu = 2) and theta (nu = 1);
/// bound recomputes from the leaves via each step's factor and combine rule.
struct Certificate {
    CertNode root;
    mpq_class bound;
};

struct VerifyResult {
    bool ok = true;
    std::string reason;
};

/// Lexicographically smallest induced 4-cycle / 5-cycle, as vertex sequences.
std::optional<std::vector<int>> find_induced_4cycle(const CubicMultipole& g);
std::optional<std::vector<int>> find_5cycle(const CubicMultipole& g);
bool has_4circuit(const CubicMultipole& g);

/// Delete two opposite edges of an induced 4-cycle and suppress; the graph
/// must be cyclically 4-edge-connected. Returns the two reduced graphs.
std::pair<CubicMultipole, CubicMultipole> replace_4cycle(const CubicMultipole& g, const std::vector<int>& cyc);

enum class CycleMode { planar, all };

/// Replace a 5-cycle by a cubic vertex plus an edge: non-crossing rotations
/// join the pendant stubs at cyclic positions i,i+1 (planar mode, 5 graphs);
/// mode all adds the crossing joins i,i+2 (10 graphs). Requires a cyclically
/// 4-edge-connected graph with no 4-cycle.
std::vector<CubicMultipole> replace_5cycle(const CubicMultipole& g, const std::vector<int>& cyc, CycleMode mode);

/// Reduction chain for the planar exponential bound: 2-cuts, non-trivial
/// 3-cuts, 4-cycles, 5-cycles, bottoming at K4/theta.
Certificate certify_planar_bound(const CubicMultipole& g);

/// bound >= (5/2)^{(n-2)/4}, checked by cross-powering in integers.
bool meets_planar_target(const mpq_class& bound, int n);

VerifyResult verify_certificate(const Certificate& cert);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
VerifyResult verify_certificate_json(const std::string& text);

}  // namespace cidc
