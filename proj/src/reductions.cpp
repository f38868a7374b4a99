#include "reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace cidc {

namespace {

std::vector<std::vector<int>> adjacency(const CubicMultipole& g) {
    std::vector<std::vector<int>> adj(g.order());
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

bool adjacent(const std::vector<std::vector<int>>& adj, int u, int v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int edge_between(const CubicMultipole& g, int u, int v, const std::set<int>& skip = {}) {
    for (int dart : g.vertex_darts(u)) {
        int e = dart >> 1;
        if (skip.count(e)) continue;
        if (g.dart_vertex(CubicMultipole::twin(dart)) == v) return e;
    }
    throw Error(errc::verify, "no edge between " + std::to_string(u) + " and " + std::to_string(v));
}

}  // namespace

std::optional<std::vector<int>> find_induced_4cycle(const CubicMultipole& g) {
    auto adj = adjacency(g);
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b : adj[a]) {
            if (b <= a) continue;
            for (int c : adj[b]) {
                if (c <= a || c == b) continue;
                for (int d : adj[c]) {
                    if (d <= b || d == a || d == c) continue;  // b < d breaks the reversal
                    if (!adjacent(adj, d, a)) continue;
                    if (adjacent(adj, a, c) || adjacent(adj, b, d)) continue;  // induced
                    return std::vector<int>{a, b, c, d};
                }
            }
        }
    return std::nullopt;
}

std::optional<std::vector<int>> find_5cycle(const CubicMultipole& g) {
    auto adj = adjacency(g);
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b : adj[a]) {
            if (b <= a) continue;
            for (int c : adj[b]) {
                if (c <= a || c == b) continue;
                for (int d : adj[c]) {
                    if (d <= a || d == b) continue;
                    for (int e : adj[d]) {
                        if (e <= b || e == c) continue;  // b < e breaks the reversal
                        if (!adjacent(adj, e, a)) continue;
                        return std::vector<int>{a, b, c, d, e};
                    }
                }
            }
        }
    return std::nullopt;
}

bool has_4circuit(const CubicMultipole& g) {
    auto adj = adjacency(g);
    int n = g.order();
    // parallel edges give 2-circuits, not 4-circuits; look for distinct a,b,c,d
    for (int a = 0; a < n; ++a)
        for (int b : adj[a]) {
            if (b <= a) continue;
            for (int c : adj[b]) {
                if (c == a || c <= a) continue;
                for (int d : adj[c]) {
                    if (d == b || d == a || d <= a) continue;
                    if (adjacent(adj, d, a)) return true;
                }
            }
        }
    return false;
}

namespace {

void require_cyclically_4_connected(const CubicMultipole& g, const char* who) {
    if (auto cut = find_small_cuts(g))
        throw Error(errc::usage, std::string(who) + ": graph has a small cut (size " +
                                     std::to_string(cut->size()) + "); reduce cuts first");
}

}  // namespace

std::pair<CubicMultipole, CubicMultipole> replace_4cycle(const CubicMultipole& g, const std::vector<int>& cyc) {
    if (cyc.size() != 4) throw Error(errc::usage, "replace_4cycle: need a 4-cycle");
    require_cyclically_4_connected(g, "replace_4cycle");
    auto adj = adjacency(g);
    for (int i = 0; i < 4; ++i)
        if (!adjacent(adj, cyc[i], cyc[(i + 1) % 4]))
            throw Error(errc::usage, "replace_4cycle: vertices do not form a cycle");
    if (adjacent(adj, cyc[0], cyc[2]) || adjacent(adj, cyc[1], cyc[3]))
        throw Error(errc::usage, "replace_4cycle: cycle is not induced");
    int e01 = edge_between(g, cyc[0], cyc[1]);
    int e23 = edge_between(g, cyc[2], cyc[3]);
    int e12 = edge_between(g, cyc[1], cyc[2]);
    int e30 = edge_between(g, cyc[3], cyc[0]);
    return {delete_edges_and_suppress(g, {e01, e23}), delete_edges_and_suppress(g, {e12, e30})};
}

namespace {

CubicMultipole contract_5cycle(const CubicMultipole& g, const std::vector<int>& cyc, int i, int j) {
    // delete the external edges at cyc[i], cyc[j]; contract the cycle to one
    // vertex; join the two degree-2 vertices by a new edge
    std::set<int> on_cycle(cyc.begin(), cyc.end());
    std::set<int> cycle_edges;
    for (int t = 0; t < 5; ++t) cycle_edges.insert(edge_between(g, cyc[t], cyc[(t + 1) % 5], cycle_edges));
    auto external = [&](int u) {
        for (int dart : g.vertex_darts(u)) {
            int e = dart >> 1;
            if (cycle_edges.count(e)) continue;
            int w = g.dart_vertex(CubicMultipole::twin(dart));
            if (on_cycle.count(w))
                throw Error(errc::usage, "replace_5cycle: chord found, cycle not induced");
            return std::pair<int, int>{e, w};
        }
        throw Error(errc::internal, "replace_5cycle: no external edge");
    };
    auto [ei, xi] = external(cyc[i]);
    auto [ej, xj] = external(cyc[j]);
    if (xi == xj) throw Error(errc::usage, "replace_5cycle: stubs meet at one vertex (4-cycle present)");

    std::vector<int> new_id(g.order(), -1);
    int n_new = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!on_cycle.count(v)) new_id[v] = n_new++;
    int w = n_new;  // the contracted cycle, numbered last
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (cycle_edges.count(e) || e == ei || e == ej) continue;
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        int na = on_cycle.count(a) ? w : new_id[a];
        int nb = on_cycle.count(b) ? w : new_id[b];
        edges.emplace_back(na, nb);
    }
    edges.emplace_back(new_id[xi], new_id[xj]);
    std::vector<EdgeSpec> specs;
    for (auto [a, b] : edges) specs.push_back({EdgeEnd::at_vertex(a), EdgeEnd::at_vertex(b)});
    return CubicMultipole::build(n_new + 1, 0, specs);
}

}  // namespace

std::vector<CubicMultipole> replace_5cycle(const CubicMultipole& g, const std::vector<int>& cyc, CycleMode mode) {
    if (cyc.size() != 5) throw Error(errc::usage, "replace_5cycle: need a 5-cycle");
    require_cyclically_4_connected(g, "replace_5cycle");
    if (has_4circuit(g)) throw Error(errc::usage, "replace_5cycle: graph contains a 4-cycle");
    std::vector<CubicMultipole> out;
    for (int i = 0; i < 5; ++i) out.push_back(contract_5cycle(g, cyc, i, (i + 1) % 5));
    if (mode == CycleMode::all)
        for (int i = 0; i < 5; ++i) out.push_back(contract_5cycle(g, cyc, i, (i + 2) % 5));
    return out;
}

// -- certification ---------------------------------------------------------------

namespace {

bool is_theta(const CubicMultipole& g) {
    if (g.order() != 2 || g.edge_count() != 3) return false;
    for (int e = 0; e < 3; ++e) {
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        if (std::min(a, b) != 0 || std::max(a, b) != 1) return false;
    }
    return true;
}

bool is_k4(const CubicMultipole& g) {
    if (g.order() != 4 || g.edge_count() != 6) return false;
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < 6; ++e) {
        int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
    }
    return seen.size() == 6;
}

std::array<int, 2> edge_pair(const CubicMultipole& g, int e) {
    int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
    return {std::min(a, b), std::max(a, b)};
}

std::vector<std::array<int, 2>> cycle_witness(const std::vector<int>& cyc) {
    std::vector<std::array<int, 2>> w;
    for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        w.push_back({a, b});
    }
    return w;
}

// The two shores of a cut, the one holding the smallest vertex first.
std::pair<std::vector<int>, std::vector<int>> cut_shores(const CubicMultipole& g, const std::vector<int>& cut_edges) {
    std::vector<char> removed(g.edge_count(), 0);
    for (int e : cut_edges) removed[e] = 1;
    std::vector<int> comp(g.order(), -1);
    int c = 0;
    for (int s = 0; s < g.order(); ++s) {
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
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    if (c != 2) throw Error(errc::verify, "cut does not split the graph into two shores");
    std::vector<int> a, b;
    for (int v = 0; v < g.order(); ++v)
        (comp[v] == comp[0] ? a : b).push_back(v);
    return {a, b};
}

CertNode certify_node(const CubicMultipole& g) {
    CertNode node;
    node.graph = g;
    auto cut = find_small_cuts(g);
    if (cut) {
        if (cut->size() == 1)
            throw Error(errc::usage, "certify_planar_bound: input has a bridge");
        auto [shore_a, shore_b] = cut_shores(g, cut->edges);
        for (int e : cut->edges) node.witness.push_back(edge_pair(g, e));
        node.kind = cut->size() == 2 ? StepKind::cut2 : StepKind::cut3;
        node.factor = cut->size() == 2 ? 2 : 1;
        node.combine_min = false;
        node.children.push_back(certify_node(contract_cut_side(g, *cut, shore_b)));  // keep shore_a
        node.children.push_back(certify_node(contract_cut_side(g, *cut, shore_a)));  // keep shore_b
        node.bound = node.factor * node.children[0].bound * node.children[1].bound;
        return node;
    }
    if (is_theta(g)) {
        node.kind = StepKind::leaf_theta;
        node.leaf_nu = 1;
        node.bound = 1;
        return node;
    }
    if (g.order() == 4) {
        if (!is_k4(g)) throw Error(errc::internal, "certify: 4-vertex graph without small cuts is not K4");
        node.kind = StepKind::leaf_k4;
        node.leaf_nu = 2;
        node.bound = 2;
        return node;
    }
    if (auto cyc4 = find_induced_4cycle(g)) {
        node.kind = StepKind::cycle4;
        node.witness = cycle_witness(*cyc4);
        node.factor = 4;
        node.combine_min = true;
        auto [g1, g2] = replace_4cycle(g, *cyc4);
        node.children.push_back(certify_node(g1));
        node.children.push_back(certify_node(g2));
        node.bound = node.factor * std::min(node.children[0].bound, node.children[1].bound);
        return node;
    }
    if (auto cyc5 = find_5cycle(g)) {
        node.kind = StepKind::cycle5;
        node.witness = cycle_witness(*cyc5);
        node.factor = mpq_class(5, 2);
        node.combine_min = true;
        for (auto& child : replace_5cycle(g, *cyc5, CycleMode::planar))
            node.children.push_back(certify_node(child));
        mpq_class m = node.children[0].bound;
        for (const auto& c : node.children) m = std::min(m, c.bound);
        node.bound = node.factor * m;
        return node;
    }
    throw Error(errc::verify,
                "certify_planar_bound: no cycle of length <= 5 found; non-planar witness or internal error");
}

}  // namespace

Certificate certify_planar_bound(const CubicMultipole& g) {
    if (!g.is_graph()) throw Error(errc::usage, "certify_planar_bound: graph input required");
    if (!is_connected(g)) throw Error(errc::usage, "certify_planar_bound: graph must be connected");
    Certificate cert;
    cert.root = certify_node(g);
    cert.bound = cert.root.bound;
    return cert;
}

bool meets_planar_target(const mpq_class& bound, int n) {
    if (n < 2) return true;
    mpz_class p = bound.get_num(), q = bound.get_den();
    if (p <= 0) return false;
    mpz_class lhs, rhs, p4, q4, pow2, pow5;
    mpz_pow_ui(p4.get_mpz_t(), p.get_mpz_t(), 4);
    mpz_pow_ui(q4.get_mpz_t(), q.get_mpz_t(), 4);
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n - 2);
    mpz_ui_pow_ui(pow5.get_mpz_t(), 5, n - 2);
    lhs = p4 * pow2;
    rhs = q4 * pow5;
    return lhs >= rhs;
}

// -- verification -----------------------------------------------------------------

namespace {

std::vector<int> resolve_witness_edges(const CubicMultipole& g, const std::vector<std::array<int, 2>>& witness,
                                       const std::string& where) {
    std::vector<int> edges;
    std::set<int> taken;
    for (const auto& w : witness) {
        int found = -1;
        for (int e = 0; e < g.edge_count() && found < 0; ++e) {
            if (taken.count(e)) continue;
            auto pr = edge_pair(g, e);
            if (pr == std::array<int, 2>{std::min(w[0], w[1]), std::max(w[0], w[1])}) found = e;
        }
        if (found < 0) throw Error(errc::verify, where + ": witness edge not present");
        taken.insert(found);
        edges.push_back(found);
    }
    return edges;
}

std::vector<int> witness_cycle_vertices(const std::vector<std::array<int, 2>>& witness, const std::string& where) {
    std::vector<int> cyc;
    for (size_t i = 0; i < witness.size(); ++i) {
        cyc.push_back(witness[i][0]);
        if (witness[i][1] != witness[(i + 1) % witness.size()][0])
            throw Error(errc::verify, where + ": witness edges do not chain into a cycle");
    }
    return cyc;
}

struct VerifyFail {
    std::string reason;
};

void check(bool cond, const std::string& reason) {
    if (!cond) throw VerifyFail{reason};
}

mpq_class verify_node(const CertNode& node, const std::string& path) {
    const CubicMultipole& g = node.graph;
    switch (node.kind) {
        case StepKind::leaf_theta:
            check(is_theta(g), path + ": leaf is not the theta graph");
            check(node.leaf_nu == 1, path + ": theta leaf must state nu = 1");
            check(node.bound == 1, path + ": theta leaf bound mismatch");
            return node.bound;
        case StepKind::leaf_k4:
            check(is_k4(g), path + ": leaf is not K4");
            check(node.leaf_nu == 2, path + ": K4 leaf must state nu = 2");
            check(node.bound == 2, path + ": K4 leaf bound mismatch");
            return node.bound;
        default:
            break;
    }

    std::vector<CubicMultipole> expected_children;
    mpq_class expected_factor;
    bool expected_min = false;
    try {
        switch (node.kind) {
            case StepKind::cut2: {
                auto edges = resolve_witness_edges(g, node.witness, path);
                check(edges.size() == 2, path + ": cut2 needs two witness edges");
                auto [a, b] = cut_shores(g, edges);
                EdgeCut cut{edges, a};
                expected_children.push_back(contract_cut_side(g, cut, b));
                expected_children.push_back(contract_cut_side(g, cut, a));
                expected_factor = 2;
                break;
            }
            case StepKind::cut3: {
                auto edges = resolve_witness_edges(g, node.witness, path);
                check(edges.size() == 3, path + ": cut3 needs three witness edges");
                auto [a, b] = cut_shores(g, edges);
                check(a.size() > 1 && b.size() > 1, path + ": 3-cut is trivial (vertex star)");
                EdgeCut cut{edges, a};
                expected_children.push_back(contract_cut_side(g, cut, b));
                expected_children.push_back(contract_cut_side(g, cut, a));
                expected_factor = 1;
                break;
            }
            case StepKind::triangle: {
                auto edges = resolve_witness_edges(g, node.witness, path);
                check(edges.size() == 3, path + ": triangle needs three witness edges");
                auto cyc = witness_cycle_vertices(node.witness, path);
                std::set<int> tri(cyc.begin(), cyc.end());
                check(tri.size() == 3, path + ": triangle witness must have three vertices");
                // contract the triangle through its surrounding cut
                std::vector<int> star;
                for (int e = 0; e < g.edge_count(); ++e) {
                    auto pr = edge_pair(g, e);
                    bool a_in = tri.count(pr[0]), b_in = tri.count(pr[1]);
                    if (a_in != b_in) star.push_back(e);
                }
                check(star.size() == 3, path + ": triangle does not have three outgoing edges");
                EdgeCut cut{star, cyc};
                expected_children.push_back(contract_cut_side(g, cut, cyc));
                expected_factor = 2;
                break;
            }
            case StepKind::cycle4: {
                auto cyc = witness_cycle_vertices(node.witness, path);
                check(cyc.size() == 4, path + ": cycle4 needs a 4-cycle witness");
                auto [g1, g2] = replace_4cycle(g, cyc);
                expected_children.push_back(g1);
                expected_children.push_back(g2);
                expected_factor = 4;
                expected_min = true;
                break;
            }
            case StepKind::cycle5:
            case StepKind::cycle5_all: {
                auto cyc = witness_cycle_vertices(node.witness, path);
                check(cyc.size() == 5, path + ": cycle5 needs a 5-cycle witness");
                bool all = node.kind == StepKind::cycle5_all;
                for (auto& child : replace_5cycle(g, cyc, all ? CycleMode::all : CycleMode::planar))
                    expected_children.push_back(std::move(child));
                expected_factor = all ? mpq_class(15, 4) : mpq_class(5, 2);
                expected_min = true;
                break;
            }
            default:
                check(false, path + ": unknown step kind");
        }
    } catch (const Error& e) {
        throw VerifyFail{path + ": " + e.what()};
    }

    check(node.factor == expected_factor, path + ": factor mismatch");
    check(node.combine_min == expected_min, path + ": combine rule mismatch");
    check(node.children.size() == expected_children.size(), path + ": child count mismatch");
    mpq_class combined;
    for (size_t i = 0; i < node.children.size(); ++i) {
        std::string cpath = path + "/" + std::to_string(i);
        check(node.children[i].graph == expected_children[i], cpath + ": child graph does not match the rewrite");
        mpq_class b = verify_node(node.children[i], cpath);
        if (i == 0)
            combined = b;
        else
            combined = expected_min ? std::min(combined, b) : combined * b;
    }
    combined *= node.factor;
    check(node.bound == combined, path + ": recomputed bound mismatch");
    return combined;
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert) {
    try {
        mpq_class b = verify_node(cert.root, "root");
        if (b != cert.bound) return {false, "top-level bound does not match the tree"};
        return {true, ""};
    } catch (const VerifyFail& f) {
        return {false, f.reason};
    }
}

// -- json ----------------------------------------------------------------------------

namespace {

using nlohmann::json;

const char* kind_name(StepKind k) {
    switch (k) {
        case StepKind::cut2: return "cut2";
        case StepKind::cut3: return "cut3";
        case StepKind::triangle: return "triangle";
        case StepKind::cycle4: return "cycle4";
        case StepKind::cycle5: return "cycle5";
        case StepKind::cycle5_all: return "cycle5_all";
        case StepKind::leaf_theta: return "theta";
        case StepKind::leaf_k4: return "K4";
    }
    return "?";
}

StepKind kind_from_name(const std::string& s) {
    if (s == "cut2") return StepKind::cut2;
    if (s == "cut3") return StepKind::cut3;
    if (s == "triangle") return StepKind::triangle;
    if (s == "cycle4") return StepKind::cycle4;
    if (s == "cycle5") return StepKind::cycle5;
    if (s == "cycle5_all") return StepKind::cycle5_all;
    throw Error(errc::parse, "certificate: unknown step kind " + s);
}

json rational_to_json(const mpq_class& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

mpq_class rational_from_json(const json& j) {
    mpz_class num(j.at("num").get<std::string>());
    mpz_class den(j.at("den").get<std::string>());
    if (den == 0) throw Error(errc::parse, "certificate: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

json node_to_json(const CertNode& node) {
    if (node.is_leaf())
        return json{{"leaf", kind_name(node.kind)}, {"nu", node.leaf_nu.get_str()}};
    json witness = json::array();
    for (const auto& w : node.witness) witness.push_back(json::array({w[0], w[1]}));
    json children = json::array();
    for (const auto& c : node.children) children.push_back(node_to_json(c));
    return json{{"kind", kind_name(node.kind)},
                {"witness", witness},
                {"factor", rational_to_json(node.factor)},
                {"combine", node.combine_min ? "minimum" : "product"},
                {"children", children}};
}

CertNode node_from_json(const json& j, const CubicMultipole& graph) {
    CertNode node;
    node.graph = graph;
    if (j.contains("leaf")) {
        std::string name = j.at("leaf").get<std::string>();
        if (name == "K4")
            node.kind = StepKind::leaf_k4;
        else if (name == "theta")
            node.kind = StepKind::leaf_theta;
        else
            throw Error(errc::parse, "certificate: unknown leaf " + name);
        if (j.at("nu").is_string())
            node.leaf_nu = mpz_class(j.at("nu").get<std::string>());
        else
            node.leaf_nu = mpz_class(j.at("nu").get<long>());
        node.bound = mpq_class(node.leaf_nu);
        return node;
    }
    node.kind = kind_from_name(j.at("kind").get<std::string>());
    for (const auto& w : j.at("witness"))
        node.witness.push_back({w.at(0).get<int>(), w.at(1).get<int>()});
    node.factor = rational_from_json(j.at("factor"));
    std::string combine = j.at("combine").get<std::string>();
    if (combine != "minimum" && combine != "product")
        throw Error(errc::parse, "certificate: unknown combine rule " + combine);
    node.combine_min = combine == "minimum";

    // children graphs are recomputed from the parent's rewrite to keep the
    // format small; structural soundness is re-checked during verification
    std::vector<CubicMultipole> child_graphs;
    try {
        switch (node.kind) {
            case StepKind::cut2:
            case StepKind::cut3: {
                auto edges = resolve_witness_edges(graph, node.witness, "parse");
                auto [a, b] = cut_shores(graph, edges);
                EdgeCut cut{edges, a};
                child_graphs.push_back(contract_cut_side(graph, cut, b));
                child_graphs.push_back(contract_cut_side(graph, cut, a));
                break;
            }
            case StepKind::triangle: {
                auto cyc = witness_cycle_vertices(node.witness, "parse");
                std::set<int> tri(cyc.begin(), cyc.end());
                std::vector<int> star;
                for (int e = 0; e < graph.edge_count(); ++e) {
                    auto pr = edge_pair(graph, e);
                    bool a_in = tri.count(pr[0]), b_in = tri.count(pr[1]);
                    if (a_in != b_in) star.push_back(e);
                }
                EdgeCut cut{star, cyc};
                child_graphs.push_back(contract_cut_side(graph, cut, cyc));
                break;
            }
            case StepKind::cycle4: {
                auto cyc = witness_cycle_vertices(node.witness, "parse");
                auto [g1, g2] = replace_4cycle(graph, cyc);
                child_graphs.push_back(g1);
                child_graphs.push_back(g2);
                break;
            }
            case StepKind::cycle5:
            case StepKind::cycle5_all: {
                auto cyc = witness_cycle_vertices(node.witness, "parse");
                bool all = node.kind == StepKind::cycle5_all;
                child_graphs = replace_5cycle(graph, cyc, all ? CycleMode::all : CycleMode::planar);
                break;
            }
            default:
                throw Error(errc::parse, "certificate: bad node");
        }
    } catch (const Error& e) {
        throw Error(errc::verify, std::string("certificate replay failed: ") + e.what());
    }
    const auto& children = j.at("children");
    if (children.size() != child_graphs.size())
        throw Error(errc::verify, "certificate: child count does not match the rewrite");
    for (size_t i = 0; i < children.size(); ++i)
        node.children.push_back(node_from_json(children[i], child_graphs[i]));
    // recompute the recorded bound bottom-up from the stored factors
    mpq_class combined;
    for (size_t i = 0; i < node.children.size(); ++i) {
        const mpq_class& b = node.children[i].bound;
        if (i == 0)
            combined = b;
        else
            combined = node.combine_min ? std::min(combined, b) : combined * b;
    }
    node.bound = node.factor * combined;
    return node;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    json j{{"graph", write_multipole(cert.root.graph)},
           {"bound", rational_to_json(cert.bound)},
           {"steps", json::array({node_to_json(cert.root)})}};
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(errc::parse, std::string("certificate: invalid JSON: ") + e.what());
    }
    Certificate cert;
    try {
        CubicMultipole root_graph = parse_multipole(j.at("graph").get<std::string>());
        const auto& steps = j.at("steps");
        if (!steps.is_array() || steps.size() != 1)
            throw Error(errc::parse, "certificate: steps must hold the root step");
        cert.root = node_from_json(steps[0], root_graph);
        cert.bound = rational_from_json(j.at("bound"));
    } catch (const json::exception& e) {
        throw Error(errc::parse, std::string("certificate: ") + e.what());
    }
    return cert;
}

VerifyResult verify_certificate_json(const std::string& text) {
    Certificate cert;
    try {
        cert = certificate_from_json(text);
    } catch (const Error& e) {
        return {false, e.what()};
    }
    return verify_certificate(cert);
}

}  // namespace cidc
