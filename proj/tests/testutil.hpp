#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "isotest.hpp"
#include "multipole.hpp"

namespace cidc::testutil {

/// Random cubic multigraph via the pairing model; resamples on loops.
/// May be disconnected or contain parallel edges.
inline CubicMultipole random_cubic_multigraph(int n, std::mt19937& rng) {
    if (n < 2 || n % 2) throw Error(errc::usage, "random cubic graphs need even n >= 2");
    while (true) {
        std::vector<int> points(3 * n);
        for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
        std::shuffle(points.begin(), points.end(), rng);
        bool loop = false;
        std::vector<EdgeSpec> edges;
        for (int i = 0; i < 3 * n; i += 2) {
            if (points[i] == points[i + 1]) {
                loop = true;
                break;
            }
            edges.push_back({EdgeEnd::at_vertex(points[i]), EdgeEnd::at_vertex(points[i + 1])});
        }
        if (loop) continue;
        return CubicMultipole::build(n, 0, edges);
    }
}

/// Cut a connected graph along a k-edge-cut found by a random BFS-grown
/// shore; returns the two k-poles whose gluing reconstructs the graph
/// (slot i of both sides = the i-th cut edge in edge order). Both sides are
/// dangling-only, so the gluing is loop-free.
inline bool random_fragments(const CubicMultipole& g, int k, std::mt19937& rng, CubicMultipole& side_a,
                             CubicMultipole& side_b) {
    int n = g.order();
    if (n < 4) return false;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::set<int> shore{pick(rng)};
        std::uniform_int_distribution<int> sz(1, n - 2);
        int target = sz(rng);
        while (static_cast<int>(shore.size()) < target) {
            std::vector<int> frontier;
            for (int v : shore)
                for (int d : g.vertex_darts(v)) {
                    int w = g.dart_vertex(CubicMultipole::twin(d));
                    if (!shore.count(w)) frontier.push_back(w);
                }
            if (frontier.empty()) break;
            shore.insert(frontier[pick(rng) % frontier.size()]);
        }
        std::vector<int> cut;
        for (int e = 0; e < g.edge_count(); ++e) {
            bool ain = shore.count(g.dart_vertex(2 * e)), bin = shore.count(g.dart_vertex(2 * e + 1));
            if (ain != bin) cut.push_back(e);
        }
        if (static_cast<int>(cut.size()) != k) continue;

        auto build_side = [&](bool inside) {
            std::map<int, int> id;
            for (int v = 0; v < n; ++v)
                if (static_cast<bool>(shore.count(v)) == inside) id[v] = static_cast<int>(id.size());
            std::vector<EdgeSpec> edges;
            for (int e = 0; e < g.edge_count(); ++e) {
                int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
                bool ain = static_cast<bool>(shore.count(a)) == inside;
                bool bin = static_cast<bool>(shore.count(b)) == inside;
                if (ain && bin) edges.push_back({EdgeEnd::at_vertex(id[a]), EdgeEnd::at_vertex(id[b])});
            }
            for (size_t i = 0; i < cut.size(); ++i) {
                int e = cut[i];
                int a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
                int kept = (static_cast<bool>(shore.count(a)) == inside) ? a : b;
                edges.push_back({EdgeEnd::at_vertex(id[kept]), EdgeEnd::at_slot(static_cast<int>(i) + 1)});
            }
            return CubicMultipole::build(static_cast<int>(id.size()), k, edges);
        };
        side_a = build_side(true);
        side_b = build_side(false);
        return true;
    }
    return false;
}

// -- catalog files ----------------------------------------------------------------

inline std::string data_dir() {
#ifdef CIDC_DATA_DIR
    return CIDC_DATA_DIR;
#else
    return "data";
#endif
}

inline std::vector<CubicMultipole> load_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::usage, "cannot open " + path);
    std::vector<CubicMultipole> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

/// Multigraph catalog format: multipole-text blocks separated by "---" lines.
inline std::vector<CubicMultipole> load_multipole_blocks(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::usage, "cannot open " + path);
    std::vector<CubicMultipole> out;
    std::string line, block;
    auto flush = [&] {
        if (block.find_first_not_of(" \t\r\n") == std::string::npos) return;
        out.push_back(parse_multipole(block));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.rfind("---", 0) == 0) {
            flush();
            continue;
        }
        block += line;
        block += '\n';
    }
    flush();
    return out;
}

}  // namespace cidc::testutil
