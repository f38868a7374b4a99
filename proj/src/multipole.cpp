#include "multipole.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cidc {

CubicMultipole CubicMultipole::build(int n_vertices, int n_slots, const std::vector<EdgeSpec>& edges) {
    if (n_vertices < 0 || n_slots < 0)
        throw Error(errc::parse, "negative vertex or slot count");
    CubicMultipole g;
    g.dart_vertex_.assign(edges.size() * 2, -1);
    g.slot_of_dart_.assign(edges.size() * 2, -1);
    g.semiedge_darts_.assign(n_slots, -1);
    g.vertex_darts_.assign(n_vertices, {-1, -1, -1});
    std::vector<int> degree(n_vertices, 0);

    auto place = [&](int dart, const EdgeEnd& end) {
        if (end.is_vertex()) {
            if (end.vertex >= n_vertices)
                throw Error(errc::parse, "vertex id out of range: " + std::to_string(end.vertex));
            if (degree[end.vertex] == 3)
                throw Error(errc::parse, "vertex " + std::to_string(end.vertex) + " has degree > 3");
            g.vertex_darts_[end.vertex][degree[end.vertex]++] = dart;
            g.dart_vertex_[dart] = end.vertex;
        } else {
            if (end.slot < 1 || end.slot > n_slots)
                throw Error(errc::parse, "semiedge slot out of range: " + std::to_string(end.slot));
            if (g.semiedge_darts_[end.slot - 1] != -1)
                throw Error(errc::parse, "semiedge slot used twice: " + std::to_string(end.slot));
            g.semiedge_darts_[end.slot - 1] = dart;
            g.slot_of_dart_[dart] = end.slot - 1;
        }
    };

    for (size_t e = 0; e < edges.size(); ++e) {
        const auto& spec = edges[e];
        if (spec.a.is_vertex() && spec.b.is_vertex() && spec.a.vertex == spec.b.vertex)
            throw Error(errc::parse, "loop at vertex " + std::to_string(spec.a.vertex));
        place(static_cast<int>(2 * e), spec.a);
        place(static_cast<int>(2 * e + 1), spec.b);
    }
    for (int v = 0; v < n_vertices; ++v)
        if (degree[v] != 3)
            throw Error(errc::parse, "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    for (int s = 0; s < n_slots; ++s)
        if (g.semiedge_darts_[s] == -1)
            throw Error(errc::parse, "semiedge slot unused: " + std::to_string(s + 1));
    return g;
}

EdgeKind CubicMultipole::edge_kind(int e) const {
    int a = dart_vertex_[2 * e], b = dart_vertex_[2 * e + 1];
    if (a >= 0 && b >= 0) return EdgeKind::link;
    if (a < 0 && b < 0) return EdgeKind::isolated;
    return EdgeKind::dangling;
}

EdgeEnd CubicMultipole::end_of_dart(int dart) const {
    int v = dart_vertex_[dart];
    if (v >= 0) return EdgeEnd::at_vertex(v);
    return EdgeEnd::at_slot(slot_of_dart_[dart] + 1);
}

int CubicMultipole::isolated_edge_count() const {
    int f = 0;
    for (int e = 0; e < edge_count(); ++e)
        if (edge_kind(e) == EdgeKind::isolated) ++f;
    return f;
}

int CubicMultipole::link_count() const {
    int l = 0;
    for (int e = 0; e < edge_count(); ++e)
        if (edge_kind(e) == EdgeKind::link) ++l;
    return l;
}

std::array<int, 3> CubicMultipole::vertex_edges(int v) const {
    const auto& d = vertex_darts_[v];
    return {d[0] >> 1, d[1] >> 1, d[2] >> 1};
}

std::vector<EdgeSpec> CubicMultipole::edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edge_count());
    for (int e = 0; e < edge_count(); ++e)
        out.push_back({end_of_dart(2 * e), end_of_dart(2 * e + 1)});
    return out;
}

// -- glue ----------------------------------------------------------------------

CubicMultipole glue(const CubicMultipole& g1, const CubicMultipole& g2) {
    if (g1.size() != g2.size())
        throw Error(errc::usage, "glue: size mismatch (" + std::to_string(g1.size()) + " vs " +
                                     std::to_string(g2.size()) + ")");
    int k = g1.size();
    int m1 = g1.edge_count();
    // Global dart ids: g1 darts as-is, g2 darts offset by 2*m1.
    auto gdart = [&](int side, int d) { return side == 0 ? d : d + 2 * m1; };
    int total_darts = 2 * (m1 + g2.edge_count());

    // junction partner per dart (or -1), and vertex attachment per dart
    std::vector<int> junction(total_darts, -1);
    std::vector<int> vertex_of(total_darts, -1);
    for (int d = 0; d < 2 * m1; ++d)
        vertex_of[d] = g1.dart_vertex(d);
    for (int d = 0; d < g2.dart_count(); ++d) {
        int v = g2.dart_vertex(d);
        vertex_of[gdart(1, d)] = v < 0 ? -1 : v + g1.order();
    }
    for (int i = 0; i < k; ++i) {
        int a = gdart(0, g1.semiedge_dart(i));
        int b = gdart(1, g2.semiedge_dart(i));
        junction[a] = b;
        junction[b] = a;
    }

    // Walk chains of edge segments. Vertex-attached darts start chains; pure
    // cycles are vertex-less loops and are dropped.
    std::vector<char> used(total_darts, 0);
    std::vector<EdgeSpec> edges;
    auto twin_of = [&](int d) {
        return d < 2 * m1 ? (d ^ 1) : (((d - 2 * m1) ^ 1) + 2 * m1);
    };
    for (int start = 0; start < total_darts; ++start) {
        if (used[start] || vertex_of[start] < 0) continue;
        int d = start;
        used[d] = 1;
        int other = twin_of(d);
        while (junction[other] != -1) {
            used[other] = 1;
            other = junction[other];
            used[other] = 1;
            other = twin_of(other);
        }
        used[other] = 1;
        if (vertex_of[other] < 0)
            throw Error(errc::internal, "glue: open chain"); // all slots consumed, cannot happen
        if (vertex_of[other] == vertex_of[start])
            throw Error(errc::usage, "glue: junction would create a loop at vertex " +
                                         std::to_string(vertex_of[start]));
        edges.push_back({EdgeEnd::at_vertex(vertex_of[start]), EdgeEnd::at_vertex(vertex_of[other])});
    }
    return CubicMultipole::build(g1.order() + g2.order(), 0, edges);
}

// -- connectivity --------------------------------------------------------------

namespace {

// Components over vertices and link edges, with an edge mask removed.
int component_count(const CubicMultipole& g, const std::vector<char>& removed, std::vector<int>* comp_out = nullptr) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int dart : g.vertex_darts(v)) {
                int e = dart >> 1;
                if (removed[e]) continue;
                int w = g.dart_vertex(CubicMultipole::twin(dart));
                if (w >= 0 && comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    if (comp_out) *comp_out = comp;
    return c;
}

}  // namespace

bool is_connected(const CubicMultipole& g) {
    if (g.order() == 0) return true;
    std::vector<char> removed(g.edge_count(), 0);
    return component_count(g, removed) == 1;
}

bool has_bridge(const CubicMultipole& g) {
    std::vector<char> removed(g.edge_count(), 0);
    int base = component_count(g, removed);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edge_kind(e) != EdgeKind::link) continue;
        removed[e] = 1;
        if (component_count(g, removed) > base) return true;
        removed[e] = 0;
    }
    return false;
}

std::optional<EdgeCut> find_small_cuts(const CubicMultipole& g) {
    if (!g.is_graph())
        throw Error(errc::usage, "find_small_cuts: input must be a graph (no semiedges)");
    if (!is_connected(g))
        throw Error(errc::usage, "find_small_cuts: input must be connected");
    int m = g.edge_count();
    std::vector<char> removed(m, 0);
    std::vector<int> comp;

    auto make_cut = [&](std::vector<int> edges) {
        component_count(g, removed, &comp);
        std::vector<int> side;
        for (int v = 0; v < g.order(); ++v)
            if (comp[v] == comp[0]) side.push_back(v);
        // report the shore containing vertex 0 unless it is the whole graph
        if (static_cast<int>(side.size()) == g.order())
            throw Error(errc::internal, "cut did not separate");
        return EdgeCut{std::move(edges), std::move(side)};
    };

    for (int e = 0; e < m; ++e) {
        removed[e] = 1;
        if (component_count(g, removed) > 1) return make_cut({e});
        removed[e] = 0;
    }
    for (int e = 0; e < m; ++e) {
        removed[e] = 1;
        for (int f = e + 1; f < m; ++f) {
            removed[f] = 1;
            if (component_count(g, removed) > 1) return make_cut({e, f});
            removed[f] = 0;
        }
        removed[e] = 0;
    }
    for (int e = 0; e < m; ++e) {
        removed[e] = 1;
        for (int f = e + 1; f < m; ++f) {
            removed[f] = 1;
            for (int h = f + 1; h < m; ++h) {
                removed[h] = 1;
                if (component_count(g, removed) > 1) {
                    // trivial iff {e,f,h} is the star of one vertex
                    bool trivial = false;
                    for (int end : {g.dart_vertex(2 * e), g.dart_vertex(2 * e + 1)}) {
                        auto star = g.vertex_edges(end);
                        std::array<int, 3> cand{e, f, h};
                        std::sort(star.begin(), star.end());
                        if (star == cand) trivial = true;
                    }
                    if (!trivial) return make_cut({e, f, h});
                }
                removed[h] = 0;
            }
            removed[f] = 0;
        }
        removed[e] = 0;
    }
    return std::nullopt;
}

namespace {

CubicMultipole rebuild_from_ends(int n, const std::vector<std::pair<int, int>>& vertex_edges) {
    std::vector<EdgeSpec> specs;
    specs.reserve(vertex_edges.size());
    for (auto [a, b] : vertex_edges)
        specs.push_back({EdgeEnd::at_vertex(a), EdgeEnd::at_vertex(b)});
    return CubicMultipole::build(n, 0, specs);
}

}  // namespace

CubicMultipole contract_cut_side(const CubicMultipole& g, const EdgeCut& cut, const std::vector<int>& shore) {
    if (cut.size() != 2 && cut.size() != 3)
        throw Error(errc::usage, "contract_cut_side: cut must have size 2 or 3");
    std::vector<char> in_shore(g.order(), 0);
    for (int v : shore) in_shore[v] = 1;
    std::vector<char> removed(g.edge_count(), 0);
    for (int e : cut.edges) removed[e] = 1;
    // every cut edge must cross the shore boundary, and nothing else may
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        if (a < 0 || b < 0) throw Error(errc::usage, "contract_cut_side: graph input required");
        bool crosses = in_shore[a] != in_shore[b];
        bool is_cut = std::find(cut.edges.begin(), cut.edges.end(), e) != cut.edges.end();
        if (crosses != is_cut)
            throw Error(errc::usage, "contract_cut_side: shore is not a cut shore");
    }

    std::vector<int> keep;  // kept vertices ascending -> new ids
    std::vector<int> new_id(g.order(), -1);
    for (int v = 0; v < g.order(); ++v)
        if (!in_shore[v]) {
            new_id[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    int n_new = static_cast<int>(keep.size());

    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        if (!in_shore[a] && !in_shore[b]) edges.emplace_back(new_id[a], new_id[b]);
    }
    if (cut.size() == 3) {
        int w = n_new;  // contracted shore becomes one cubic vertex, numbered last
        for (int e : cut.edges) {
            int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
            int kept = in_shore[a] ? b : a;
            edges.emplace_back(new_id[kept], w);
        }
        return rebuild_from_ends(n_new + 1, edges);
    }
    // size 2: the contracted degree-2 vertex is suppressed into a single edge
    int e0 = cut.edges[0], e1 = cut.edges[1];
    auto kept_end = [&](int e) {
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        return in_shore[a] ? b : a;
    };
    int x = kept_end(e0), y = kept_end(e1);
    if (x == y)
        throw Error(errc::usage, "contract_cut_side: suppression would create a loop (bridge present)");
    edges.emplace_back(new_id[x], new_id[y]);
    return rebuild_from_ends(n_new, edges);
}

CubicMultipole expand_vertex_to_triangle(const CubicMultipole& g, int v) {
    if (!g.is_graph()) throw Error(errc::usage, "expand_vertex_to_triangle: graph input required");
    if (v < 0 || v >= g.order()) throw Error(errc::usage, "expand_vertex_to_triangle: bad vertex");
    int n = g.order();
    std::array<int, 3> corner = {v, n, n + 1};
    const auto& darts = g.vertex_darts(v);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        for (int i = 0; i < 3; ++i) {
            if (2 * e == darts[i]) a = corner[i];
            if (2 * e + 1 == darts[i]) b = corner[i];
        }
        edges.emplace_back(a, b);
    }
    edges.emplace_back(corner[0], corner[1]);
    edges.emplace_back(corner[1], corner[2]);
    edges.emplace_back(corner[2], corner[0]);
    return rebuild_from_ends(n + 2, edges);
}

CubicMultipole delete_edges_and_suppress(const CubicMultipole& g, const std::vector<int>& del) {
    if (!g.is_graph()) throw Error(errc::usage, "delete_edges_and_suppress: graph input required");
    std::vector<char> removed(g.edge_count(), 0);
    for (int e : del) removed[e] = 1;
    // edge list with endpoints; suppress degree-2 vertices by merging their edges
    struct E {
        int a, b;
        bool alive;
    };
    std::vector<E> edges;
    std::vector<std::vector<int>> incident(g.order());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (removed[e]) continue;
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        incident[a].push_back(static_cast<int>(edges.size()));
        incident[b].push_back(static_cast<int>(edges.size()));
        edges.push_back({a, b, true});
    }
    std::vector<char> gone(g.order(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            if (gone[v]) continue;
            std::vector<int> inc;
            for (int ei : incident[v])
                if (edges[ei].alive) inc.push_back(ei);
            if (inc.size() == 2) {
                int e1 = inc[0], e2 = inc[1];
                int x = edges[e1].a == v ? edges[e1].b : edges[e1].a;
                int y = edges[e2].a == v ? edges[e2].b : edges[e2].a;
                if (x == v || y == v) throw Error(errc::usage, "suppression hit an isolated cycle");
                if (x == y)
                    throw Error(errc::usage, "suppression would create a loop at vertex " + std::to_string(x));
                edges[e1].alive = false;
                edges[e2].alive = false;
                gone[v] = 1;
                incident[x].push_back(static_cast<int>(edges.size()));
                incident[y].push_back(static_cast<int>(edges.size()));
                edges.push_back({x, y, true});
                changed = true;
            } else if (inc.empty()) {
                gone[v] = 1;
            } else if (inc.size() == 1) {
                throw Error(errc::usage, "suppression left a degree-1 vertex");
            }
        }
    }
    std::vector<int> new_id(g.order(), -1);
    int n_new = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!gone[v]) new_id[v] = n_new++;
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges)
        if (e.alive) out.emplace_back(new_id[e.a], new_id[e.b]);
    return rebuild_from_ends(n_new, out);
}

// -- generators -----------------------------------------------------------------

CubicMultipole theta() {
    return rebuild_from_ends(2, {{0, 1}, {0, 1}, {0, 1}});
}

CubicMultipole k4() {
    return klee(4);
}

CubicMultipole cube() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 4; ++i) {
        e.emplace_back(i, (i + 1) % 4);          // bottom
        e.emplace_back(4 + i, 4 + (i + 1) % 4);  // top
        e.emplace_back(i, 4 + i);                // vertical
    }
    return rebuild_from_ends(8, e);
}

CubicMultipole petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, 5 + i);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return rebuild_from_ends(10, e);
}

CubicMultipole klee(int n) {
    if (n < 2 || n % 2 != 0) throw Error(errc::usage, "klee: n must be even and >= 2");
    CubicMultipole g = theta();
    while (g.order() < n) g = expand_vertex_to_triangle(g, 0);
    return g;
}

CubicMultipole flower_gadget(int k) {
    if (k < 3) throw Error(errc::usage, "flower_gadget: k must be >= 3");
    // inner ring 0..k-1, outer ring k..2k-1, spokes i -- k+i
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(k + i, k + (i + 1) % k);
        e.emplace_back(i, k + i);
    }
    return rebuild_from_ends(2 * k, e);
}

CubicMultipole flower_snark(int k) {
    if (k < 3 || k % 2 == 0) throw Error(errc::usage, "flower_snark: k must be odd and >= 3");
    // hubs b_i = 4i, a_i = 4i+1 (inner cycle), c_i = 4i+2, d_i = 4i+3 (outer 2k-cycle)
    auto A = [](int i) { return 4 * i + 1; };
    auto B = [](int i) { return 4 * i; };
    auto C = [](int i) { return 4 * i + 2; };
    auto D = [](int i) { return 4 * i + 3; };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(B(i), A(i));
        e.emplace_back(B(i), C(i));
        e.emplace_back(B(i), D(i));
        e.emplace_back(A(i), A((i + 1) % k));
    }
    for (int i = 0; i + 1 < k; ++i) {
        e.emplace_back(C(i), C(i + 1));
        e.emplace_back(D(i), D(i + 1));
    }
    e.emplace_back(C(k - 1), D(0));
    e.emplace_back(D(k - 1), C(0));
    return rebuild_from_ends(4 * k, e);
}

CubicMultipole three_star() {
    return CubicMultipole::build(1, 3,
                                 {{EdgeEnd::at_vertex(0), EdgeEnd::at_slot(1)},
                                  {EdgeEnd::at_vertex(0), EdgeEnd::at_slot(2)},
                                  {EdgeEnd::at_vertex(0), EdgeEnd::at_slot(3)}});
}

CubicMultipole triangle_pole() {
    return CubicMultipole::build(3, 3,
                                 {{EdgeEnd::at_vertex(0), EdgeEnd::at_vertex(1)},
                                  {EdgeEnd::at_vertex(1), EdgeEnd::at_vertex(2)},
                                  {EdgeEnd::at_vertex(2), EdgeEnd::at_vertex(0)},
                                  {EdgeEnd::at_vertex(0), EdgeEnd::at_slot(1)},
                                  {EdgeEnd::at_vertex(1), EdgeEnd::at_slot(2)},
                                  {EdgeEnd::at_vertex(2), EdgeEnd::at_slot(3)}});
}

CubicMultipole isolated_edge_pole() {
    return CubicMultipole::build(0, 2, {{EdgeEnd::at_slot(1), EdgeEnd::at_slot(2)}});
}

CubicMultipole cycle_pole(int len) {
    if (len < 2) throw Error(errc::usage, "cycle_pole: length must be >= 2");
    std::vector<EdgeSpec> e;
    for (int i = 0; i < len; ++i)
        e.push_back({EdgeEnd::at_vertex(i), EdgeEnd::at_vertex((i + 1) % len)});
    for (int i = 0; i < len; ++i)
        e.push_back({EdgeEnd::at_vertex(i), EdgeEnd::at_slot(i + 1)});
    return CubicMultipole::build(len, len, e);
}

// -- graph6 ----------------------------------------------------------------------

CubicMultipole parse_graph6(const std::string& line) {
    size_t pos = 0;
    if (line.empty()) throw Error(errc::parse, "graph6: empty line");
    if (line.compare(0, 2, ">>") == 0) {
        // optional ">>graph6<<" header
        size_t h = line.find("<<");
        if (h == std::string::npos) throw Error(errc::parse, "graph6: bad header");
        pos = h + 2;
    }
    auto byte = [&](size_t i) -> int {
        if (i >= line.size()) throw Error(errc::parse, "graph6: truncated");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw Error(errc::parse, "graph6: invalid byte");
        return c - 63;
    };
    long n;
    if (line[pos] != '~') {
        n = byte(pos);
        pos += 1;
    } else if (pos + 1 < line.size() && line[pos + 1] != '~') {
        n = (static_cast<long>(byte(pos + 1)) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
        pos += 4;
    } else {
        throw Error(errc::parse, "graph6: graphs this large are not supported");
    }
    if (n > 1000) throw Error(errc::parse, "graph6: too many vertices");
    long bits_needed = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    size_t expect = pos + (bits_needed + 5) / 6;
    if (line.size() > expect) {
        for (size_t i = expect; i < line.size(); ++i)
            if (!isspace(static_cast<unsigned char>(line[i])))
                throw Error(errc::parse, "graph6: trailing data");
    }
    return rebuild_from_ends(static_cast<int>(n), edges);
}

std::string write_graph6(const CubicMultipole& g) {
    if (!g.is_graph()) throw Error(errc::usage, "graph6 encodes graphs only");
    int n = g.order();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        if (adj[a][b]) throw Error(errc::usage, "graph6 encodes simple graphs only");
        adj[a][b] = adj[b][a] = 1;
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | adj[i][j];
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

// -- multipole text ----------------------------------------------------------------

CubicMultipole parse_multipole(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        if (line[a] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw Error(errc::parse, "multipole: empty input");
    std::istringstream head(lines[0]);
    int n, k, f;
    if (!(head >> n >> k >> f)) throw Error(errc::parse, "multipole: bad header, expected \"n k f\"");
    std::vector<EdgeSpec> edges;
    int isolated = 0;
    auto parse_end = [&](const std::string& tok) {
        if (tok.empty()) throw Error(errc::parse, "multipole: empty token");
        if (tok[0] == '*') {
            int s;
            try {
                s = std::stoi(tok.substr(1));
            } catch (...) {
                throw Error(errc::parse, "multipole: bad slot token " + tok);
            }
            return EdgeEnd::at_slot(s);
        }
        int v;
        try {
            v = std::stoi(tok);
        } catch (...) {
            throw Error(errc::parse, "multipole: bad vertex token " + tok);
        }
        return EdgeEnd::at_vertex(v);
    };
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        std::string ta, tb;
        if (!(ls >> ta >> tb)) throw Error(errc::parse, "multipole: bad edge line: " + lines[i]);
        EdgeEnd a = parse_end(ta), b = parse_end(tb);
        if (!a.is_vertex() && !b.is_vertex()) ++isolated;
        edges.push_back({a, b});
    }
    if (isolated != f)
        throw Error(errc::parse, "multipole: header declares " + std::to_string(f) + " isolated edges, found " +
                                     std::to_string(isolated));
    return CubicMultipole::build(n, k, edges);
}

std::string write_multipole(const CubicMultipole& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << ' ' << g.isolated_edge_count() << '\n';
    auto fmt = [&](const EdgeEnd& end) {
        return end.is_vertex() ? std::to_string(end.vertex) : "*" + std::to_string(end.slot);
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge_ends(e);
        if (!a.is_vertex() && b.is_vertex()) std::swap(a, b);  // vertex first for danglings
        out << fmt(a) << ' ' << fmt(b) << '\n';
    }
    return out.str();
}

}  // namespace cidc
