#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "counting.hpp"
#include "multipole.hpp"

namespace cidc {

/// How a CiDC meets the semiedges: per semiedge the unordered pair of path
/// labels ending there, plus the label pairs sharing an edge that are not
/// already co-occurring at a semiedge. Stored canonically: lexicographically
/// minimal over all path relabelings, pairs sorted, extras sorted.
struct Boundary {
    std::vector<std::array<int, 2>> pairs;
    std::vector<std::array<int, 2>> extras;

    int k() const { return static_cast<int>(pairs.size()); }
    auto operator<=>(const Boundary&) const = default;

    /// "<(1,2),(1,3),(2,3)|>" with extras after the bar.
    std::string text() const;
    static Boundary from_text(const std::string& s);
};

/// Lexicographically minimal relabeling; validates the label structure
/// (k labels, each on exactly two distinct-positioned pairs, extras disjoint
/// from co-occurrences). Idempotent.
Boundary canonicalize(const Boundary& raw);

/// All canonical boundaries of size k, ascending. Sizes for k = 0..4 are
/// 1, 0, 1, 1, 33.
const std::vector<Boundary>& enumerate_boundaries(int k);

/// Boundary of a valid CiDC of a multipole.
Boundary boundary_of(const CubicMultipole& g, const CircuitCover& cover);

/// Per-boundary CiDC counts scaled by (1/2)^f, f = number of isolated edges.
struct MultiplicityVector {
    int k = 0;
    std::map<Boundary, mpq_class> entries;
};
MultiplicityVector multiplicity_vector(const CubicMultipole& g, const Limits& limits = {});

/// Number of the 2^k per-semiedge matchings of two boundaries whose closed
/// curves never contain two edge-sharing paths. Symmetric, at most 2^k.
int join_count(const Boundary& b1, const Boundary& b2);

struct JoinMatrix {
    int k = 0;
    std::vector<Boundary> basis;
    std::vector<std::vector<int>> entry;  // entry[i][j] = join_count(basis[i], basis[j])
    int index_of(const Boundary& b) const;
};
const JoinMatrix& join_matrix(int k);

/// Direct count of glue(g1,g2) against the bilinear form h(g1)^T J h(g2).
/// Gluings that would produce a vertex-less loop are rejected (the scaling
/// convention does not cover them).
bool verify_bilinear(const CubicMultipole& g1, const CubicMultipole& g2, const Limits& limits = {});

/// The bilinear form value by itself.
mpq_class bilinear_value(const MultiplicityVector& h1, const MultiplicityVector& h2);

}  // namespace cidc
