#pragma once

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "counting.hpp"
#include "multipole.hpp"

namespace cidc {

/// Cyclic order of the three darts around each vertex.
struct RotationSystem {
    std::vector<std::array<int, 3>> order;
};

/// Face boundary traced by next = rotation-successor of twin.
struct Face {
    std::vector<int> darts;
    int size() const { return static_cast<int>(darts.size()); }
};

/// Faces partition the darts; deterministic order (smallest dart first).
std::vector<Face> trace_faces(const CubicMultipole& g, const RotationSystem& rot);

/// chi = V - E + F; planar embedding iff 2.
int euler_characteristic(const CubicMultipole& g, const RotationSystem& rot);

/// The five flower conditions for center f (planar embeddings only):
/// circuit boundaries, size >= 3, one shared edge per neighbour, one per
/// consecutive neighbour pair, none between non-consecutive neighbours.
bool check_flower(const CubicMultipole& g, const RotationSystem& rot, const Face& f);

/// CiDCs of a planar-embedded graph that contain the boundary circuit of the
/// designated face as an element.
mpz_class count_outer_fixed(const CubicMultipole& g, const Face& outer, const Limits& limits = {});

struct FlowerCount {
    mpz_class count;
    bool lower_bound_ok = false;  // count >= 2^{k-3} + 1
    bool formula_ok = false;      // count == (2^{k-1} + (-1)^k)/3 + 1
};
FlowerCount flower_count_check(int k, const Limits& limits = {});

// Generators paired with a planar rotation (chi = 2).
struct EmbeddedGraph {
    CubicMultipole graph;
    RotationSystem rotation;
};
EmbeddedGraph theta_embedded();
EmbeddedGraph k4_embedded();
EmbeddedGraph cube_embedded();
/// The flower gadget with its planar rotation; the outer face is the one whose
/// boundary is the outer ring (vertices k..2k-1).
EmbeddedGraph flower_gadget_embedded(int k);
Face outer_face_of_flower(const CubicMultipole& g, const RotationSystem& rot, int k);

/// Rotation text: one line per vertex, "v: d1 d2 d3".
std::string write_rotation(const RotationSystem& rot);
RotationSystem parse_rotation(const CubicMultipole& g, const std::string& text);

}  // namespace cidc
