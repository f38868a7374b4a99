#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "multipole.hpp"

namespace cidc {

struct Limits {
    int max_assignment_links = 30;           // brute force cap, 2^links configurations
    long max_circuits = 500000;              // backtrack: circuit catalogue cap
    long long max_backtrack_nodes = 2000000000LL;
    long long max_dp_states = 0;             // 0: take CIDC_MAX_STATES env or default
    long long dp_state_default = 20000000;

    long long dp_states() const {
        if (max_dp_states > 0) return max_dp_states;
        if (const char* env = std::getenv("CIDC_MAX_STATES")) {
            long long v = std::atoll(env);
            if (v > 0) return v;
        }
        return dp_state_default;
    }
};

struct CountResult {
    mpz_class value;
    std::string engine;
    double elapsed_seconds = 0.0;
};

/// One element of a circuit double cover: a circuit (closed) or a path whose
/// two ends are semiedges. Edges and vertices appear in traversal order.
struct CoverElement {
    bool closed = false;
    std::vector<int> edges;
    std::vector<int> vertices;
    int end_slot_a = -1;  // 0-based semiedge positions for paths
    int end_slot_b = -1;
};

struct CircuitCover {
    std::vector<CoverElement> elements;
};

/// Crossing-assignment engine: iterates the 2^{#links} crossed/parallel
/// choices under the fixed per-vertex rotation and counts the valid traces.
/// Graphs with a bridge short-circuit to 0.
CountResult count_assignments(const CubicMultipole& g, const Limits& limits = {});

/// Same engine under an explicit rotation (three darts per vertex, any order);
/// the count is rotation-independent.
CountResult count_assignments_rotated(const CubicMultipole& g,
                                      const std::vector<std::array<int, 3>>& rotation,
                                      const Limits& limits = {});

/// Independent oracle: enumerate all circuits, then backtrack over multisets
/// covering each edge exactly twice. Graphs only.
CountResult count_backtrack(const CubicMultipole& g, const Limits& limits = {});

/// Frontier dynamic programming over boundary states. Graphs only; the
/// vertex elimination order greedily minimises the frontier.
CountResult count_dp(const CubicMultipole& g, const Limits& limits = {});

/// dp for graphs, brute force for tiny inputs.
CountResult count_auto(const CubicMultipole& g, const Limits& limits = {});

/// All CiDCs of a multipole, as explicit element lists. Desk scale only.
std::vector<CircuitCover> enumerate_cidcs(const CubicMultipole& g, const Limits& limits = {});

/// Visit every valid cover once; cheaper than materialising enumerate_cidcs.
void for_each_cidc(const CubicMultipole& g, const Limits& limits,
                   const std::function<void(const CircuitCover&)>& fn);

/// Checks that a cover is a valid CiDC of g (each edge twice, circuits and
/// semiedge-to-semiedge paths vertex- and edge-simple). Throws errc::verify.
void validate_cover(const CubicMultipole& g, const CircuitCover& cover);

/// Number of CiDCs containing a given circuit (as an edge set).
mpz_class count_covers_containing(const CubicMultipole& g, const std::vector<int>& circuit_edges,
                                  const Limits& limits = {});

}  // namespace cidc
