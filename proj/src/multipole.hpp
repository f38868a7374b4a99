#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cidc {

enum class errc { usage = 1, parse = 2, resource = 3, verify = 4, internal = 5 };

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

enum class EdgeKind { link, dangling, isolated };

/// One end of an edge: attached to a vertex, or a numbered semiedge slot (1-based).
struct EdgeEnd {
    int vertex = -1;
    int slot = 0;
    static EdgeEnd at_vertex(int v) { return {v, 0}; }
    static EdgeEnd at_slot(int s) { return {-1, s}; }
    bool is_vertex() const { return vertex >= 0; }
    bool operator==(const EdgeEnd&) const = default;
};

struct EdgeSpec {
    EdgeEnd a, b;
};

/// Dart-based cubic multipole. Edge e owns darts 2e and 2e+1; twin(d) = d ^ 1.
/// Every vertex is incident with exactly three darts; the vertex-less darts
/// are the semiedges, listed in slot order (slot i -> semiedge_dart(i)).
/// Immutable after construction.
class CubicMultipole {
public:
    CubicMultipole() = default;

    /// Validates cubicity, slot coverage 1..k, and rejects vertex loops.
    static CubicMultipole build(int n_vertices, int n_slots, const std::vector<EdgeSpec>& edges);

    int order() const { return static_cast<int>(vertex_darts_.size()); }       // n(g)
    int size() const { return static_cast<int>(semiedge_darts_.size()); }      // |g| = k
    int edge_count() const { return static_cast<int>(dart_vertex_.size() / 2); }
    int dart_count() const { return static_cast<int>(dart_vertex_.size()); }

    static int twin(int dart) { return dart ^ 1; }
    static int edge_of(int dart) { return dart >> 1; }
    int dart_vertex(int dart) const { return dart_vertex_[dart]; }
    bool is_semiedge(int dart) const { return dart_vertex_[dart] < 0; }
    /// Darts of a vertex in creation order; doubles as the default rotation.
    const std::array<int, 3>& vertex_darts(int v) const { return vertex_darts_[v]; }
    /// Dart occupying semiedge slot i (0-based position, slot number i+1).
    int semiedge_dart(int pos) const { return semiedge_darts_[pos]; }
    /// Position of a semiedge dart in the slot order, or -1.
    int slot_of_dart(int dart) const { return slot_of_dart_[dart]; }

    EdgeKind edge_kind(int e) const;
    EdgeEnd end_of_dart(int dart) const;
    std::pair<EdgeEnd, EdgeEnd> edge_ends(int e) const { return {end_of_dart(2 * e), end_of_dart(2 * e + 1)}; }
    int isolated_edge_count() const;
    int link_count() const;

    /// Edges incident with v (edge ids, creation order).
    std::array<int, 3> vertex_edges(int v) const;
    /// Other endpoint of a link edge seen from v; -1 if that end is a semiedge.
    int neighbour_via(int dart) const { return dart_vertex_[twin(dart)]; }

    bool is_graph() const { return size() == 0; }
    std::vector<EdgeSpec> edge_specs() const;

    bool operator==(const CubicMultipole&) const = default;

private:
    std::vector<int> dart_vertex_;
    std::vector<int> semiedge_darts_;
    std::vector<int> slot_of_dart_;
    std::vector<std::array<int, 3>> vertex_darts_;
};

struct EdgeCut {
    std::vector<int> edges;  // edge ids, ascending
    std::vector<int> side;   // vertices of one shore, ascending
    int size() const { return static_cast<int>(edges.size()); }
};

// -- structural operations ---------------------------------------------------

/// Junction of the i-th semiedges of g1 and g2 for all i. Vertex-less loops
/// arising from a junction are deleted; a junction closing an edge onto a
/// single vertex is rejected (vertex loops are not representable).
CubicMultipole glue(const CubicMultipole& g1, const CubicMultipole& g2);

bool is_connected(const CubicMultipole& g);
bool has_bridge(const CubicMultipole& g);

/// First bridge, else first 2-edge-cut, else first non-trivial 3-edge-cut
/// (lexicographic by edge ids), else nothing. Graph must be connected.
std::optional<EdgeCut> find_small_cuts(const CubicMultipole& g);

/// Contract one shore of a 2- or 3-cut: size 2 contracts to a degree-2 vertex
/// which is suppressed; size 3 contracts the shore to a single cubic vertex
/// (numbered last). Kept vertices are renumbered in ascending order.
CubicMultipole contract_cut_side(const CubicMultipole& g, const EdgeCut& cut, const std::vector<int>& shore);

/// Replace vertex v by a triangle; the original id keeps the first dart's
/// edge, the two new corners (ids n, n+1) take the second and third.
CubicMultipole expand_vertex_to_triangle(const CubicMultipole& g, int v);

/// Delete the given edges, then suppress all degree-2 vertices. Throws if a
/// suppression would create a loop or the graph degenerates.
CubicMultipole delete_edges_and_suppress(const CubicMultipole& g, const std::vector<int>& edges);

// -- generators ---------------------------------------------------------------

CubicMultipole theta();                   // K_2^3
CubicMultipole k4();
CubicMultipole cube();                    // Q_3
CubicMultipole petersen();
CubicMultipole klee(int n);               // n even >= 2; expands lowest vertex each step
CubicMultipole flower_gadget(int k);      // circular ladder CL_k, 2k vertices
CubicMultipole flower_snark(int k);       // J_k, odd k >= 3, 4k vertices
CubicMultipole three_star();
CubicMultipole triangle_pole();
CubicMultipole isolated_edge_pole();
CubicMultipole cycle_pole(int len);       // len-cycle with one dangling per vertex

// -- text formats -------------------------------------------------------------

/// graph6 (simple graphs): N(n) header, column-wise upper triangle bits,
/// 6-bit groups offset by 63.
CubicMultipole parse_graph6(const std::string& line);
std::string write_graph6(const CubicMultipole& g);

/// Native multipole format: "n k f" header, then one line per edge:
/// "u v" (link), "u *i" (dangling), "*i *j" (isolated).
CubicMultipole parse_multipole(const std::string& text);
std::string write_multipole(const CubicMultipole& g);

}  // namespace cidc
