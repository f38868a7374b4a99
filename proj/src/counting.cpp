#include "counting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "boundary.hpp"

namespace cidc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Strand tracer over slot pairs. Every dart d carries slots 2d and 2d+1; at a
// vertex with rotation (a,b,c) the corner transitions pair
// (a,1)-(b,0), (b,1)-(c,0), (c,1)-(a,0), and each edge pairs the slots of its
// two darts, parallel or crossed. Strands are the components; a cover is valid
// iff no strand repeats a vertex.
class Tracer {
public:
    Tracer(const CubicMultipole& g, const std::vector<std::array<int, 3>>* rotation)
        : g_(g), nslots_(2 * g.dart_count()) {
        corner_.assign(nslots_, -1);
        for (int v = 0; v < g.order(); ++v) {
            const auto& rot = rotation ? (*rotation)[v] : g.vertex_darts(v);
            for (int i = 0; i < 3; ++i) {
                int d = rot[i], d2 = rot[(i + 1) % 3];
                corner_[2 * d + 1] = 2 * d2;
                corner_[2 * d2] = 2 * d + 1;
            }
        }
        epair_.assign(nslots_, -1);
        for (int e = 0; e < g.edge_count(); ++e)
            set_parallel(e);
        for (int e = 0; e < g.edge_count(); ++e)
            if (g.edge_kind(e) == EdgeKind::link) links_.push_back(e);
        endpoint_slots_.clear();
        for (int pos = 0; pos < g.size(); ++pos) {
            int d = g.semiedge_dart(pos);
            endpoint_slots_.push_back(2 * d);
            endpoint_slots_.push_back(2 * d + 1);
        }
        svisit_.assign(nslots_, 0);
        vstamp_.assign(std::max(1, g.order()), 0);
    }

    const std::vector<int>& links() const { return links_; }

    void flip_link(int e) {
        for (int s = 4 * e; s < 4 * e + 4; ++s) epair_[s] ^= 1;
    }

    /// Trace all strands; returns validity. With a cover sink, also fills it.
    bool trace(CircuitCover* out) {
        ++config_stamp_;
        if (out) out->elements.clear();
        for (int s0 : endpoint_slots_) {
            if (svisit_[s0] == config_stamp_) continue;
            if (!trace_path(s0, out)) return false;
        }
        for (int s0 = 0; s0 < nslots_; ++s0) {
            if (svisit_[s0] == config_stamp_) continue;
            if (!trace_cycle(s0, out)) return false;
        }
        return true;
    }

private:
    void set_parallel(int e) {
        epair_[4 * e] = 4 * e + 3;
        epair_[4 * e + 1] = 4 * e + 2;
        epair_[4 * e + 2] = 4 * e + 1;
        epair_[4 * e + 3] = 4 * e;
    }

    bool trace_path(int start, CircuitCover* out) {
        ++strand_stamp_;
        CoverElement el;
        if (out) {
            el.closed = false;
            el.end_slot_a = g_.slot_of_dart(start >> 1);
        }
        int cur = start;
        svisit_[cur] = config_stamp_;
        while (true) {
            int nxt = epair_[cur];
            svisit_[nxt] = config_stamp_;
            if (out) el.edges.push_back(nxt >> 2);
            int c = corner_[nxt];
            if (c < 0) {
                if (out) {
                    el.end_slot_b = g_.slot_of_dart(nxt >> 1);
                    out->elements.push_back(std::move(el));
                }
                return true;
            }
            int v = g_.dart_vertex(nxt >> 1);
            if (vstamp_[v] == strand_stamp_) return false;
            vstamp_[v] = strand_stamp_;
            if (out) el.vertices.push_back(v);
            svisit_[c] = config_stamp_;
            cur = c;
        }
    }

    bool trace_cycle(int start, CircuitCover* out) {
        ++strand_stamp_;
        CoverElement el;
        el.closed = true;
        int cur = start;
        do {
            svisit_[cur] = config_stamp_;
            int nxt = epair_[cur];
            svisit_[nxt] = config_stamp_;
            if (out) el.edges.push_back(nxt >> 2);
            int c = corner_[nxt];
            if (c < 0) throw Error(errc::internal, "cycle strand hit an endpoint");
            int v = g_.dart_vertex(nxt >> 1);
            if (vstamp_[v] == strand_stamp_) return false;
            vstamp_[v] = strand_stamp_;
            if (out) el.vertices.push_back(v);
            svisit_[c] = config_stamp_;
            cur = c;
        } while (cur != start);
        if (out) out->elements.push_back(std::move(el));
        return true;
    }

    const CubicMultipole& g_;
    int nslots_;
    std::vector<int> corner_;
    std::vector<int> epair_;
    std::vector<int> links_;
    std::vector<int> endpoint_slots_;
    std::vector<long long> svisit_;
    std::vector<long long> vstamp_;
    long long config_stamp_ = 0;
    long long strand_stamp_ = 0;
};

// Gray-code sweep over all 2^{#links} crossing assignments.
template <typename Fn>
void sweep_assignments(const CubicMultipole& g, const Limits& limits,
                       const std::vector<std::array<int, 3>>* rotation, Fn&& per_valid) {
    Tracer tracer(g, rotation);
    int L = static_cast<int>(tracer.links().size());
    if (L > limits.max_assignment_links)
        throw Error(errc::resource, "assignment engine: " + std::to_string(L) +
                                        " links exceed the configured cap of " +
                                        std::to_string(limits.max_assignment_links));
    unsigned long long total = 1ULL << L;
    CircuitCover cover;
    for (unsigned long long i = 0;;) {
        per_valid(tracer, cover);
        if (++i == total) break;
        int bit = std::countr_zero(i);
        tracer.flip_link(tracer.links()[bit]);
    }
}

}  // namespace

CountResult count_assignments_rotated(const CubicMultipole& g,
                                      const std::vector<std::array<int, 3>>& rotation,
                                      const Limits& limits) {
    auto t0 = Clock::now();
    mpz_class total = 0;
    sweep_assignments(g, limits, &rotation, [&](Tracer& tr, CircuitCover&) {
        if (tr.trace(nullptr)) ++total;
    });
    return {total, "brute", seconds_since(t0)};
}

CountResult count_assignments(const CubicMultipole& g, const Limits& limits) {
    auto t0 = Clock::now();
    if (g.is_graph() && g.order() > 0 && has_bridge(g))
        return {0, "brute", seconds_since(t0)};
    mpz_class total = 0;
    sweep_assignments(g, limits, nullptr, [&](Tracer& tr, CircuitCover&) {
        if (tr.trace(nullptr)) ++total;
    });
    return {total, "brute", seconds_since(t0)};
}

void for_each_cidc(const CubicMultipole& g, const Limits& limits,
                   const std::function<void(const CircuitCover&)>& fn) {
    sweep_assignments(g, limits, nullptr, [&](Tracer& tr, CircuitCover& cover) {
        if (tr.trace(&cover)) fn(cover);
    });
}

std::vector<CircuitCover> enumerate_cidcs(const CubicMultipole& g, const Limits& limits) {
    std::vector<CircuitCover> out;
    for_each_cidc(g, limits, [&](const CircuitCover& c) { out.push_back(c); });
    return out;
}

mpz_class count_covers_containing(const CubicMultipole& g, const std::vector<int>& circuit_edges,
                                  const Limits& limits) {
    std::vector<int> want = circuit_edges;
    std::sort(want.begin(), want.end());
    mpz_class total = 0;
    for_each_cidc(g, limits, [&](const CircuitCover& c) {
        for (const auto& el : c.elements) {
            if (!el.closed || el.edges.size() != want.size()) continue;
            std::vector<int> got = el.edges;
            std::sort(got.begin(), got.end());
            if (got == want) {
                ++total;
                return;
            }
        }
    });
    return total;
}

// -- backtrack oracle ------------------------------------------------------------

namespace {

std::vector<std::vector<int>> enumerate_circuits(const CubicMultipole& g, const Limits& limits) {
    std::set<std::vector<int>> found;
    int n = g.order();
    std::vector<char> visited(n, 0);
    std::vector<char> edge_used(g.edge_count(), 0);
    std::vector<int> path;

    std::function<void(int, int)> dfs = [&](int anchor, int u) {
        for (int dart : g.vertex_darts(u)) {
            int e = dart >> 1;
            if (edge_used[e]) continue;
            int w = g.dart_vertex(CubicMultipole::twin(dart));
            if (w == anchor && !path.empty()) {
                std::vector<int> circ = path;
                circ.push_back(e);
                std::sort(circ.begin(), circ.end());
                found.insert(std::move(circ));
                if (static_cast<long>(found.size()) > limits.max_circuits)
                    throw Error(errc::resource, "backtrack engine: circuit catalogue exceeds cap");
                continue;
            }
            if (w > anchor && !visited[w]) {
                visited[w] = 1;
                edge_used[e] = 1;
                path.push_back(e);
                dfs(anchor, w);
                path.pop_back();
                edge_used[e] = 0;
                visited[w] = 0;
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        visited[s] = 1;
        dfs(s, s);
        visited[s] = 0;
    }
    return {found.begin(), found.end()};
}

}  // namespace

CountResult count_backtrack(const CubicMultipole& g, const Limits& limits) {
    if (!g.is_graph()) throw Error(errc::usage, "count_backtrack: graph input required");
    auto t0 = Clock::now();
    auto circuits = enumerate_circuits(g, limits);
    int m = g.edge_count();
    std::vector<std::vector<int>> through(m);  // circuit indices per edge
    for (size_t i = 0; i < circuits.size(); ++i)
        for (int e : circuits[i]) through[e].push_back(static_cast<int>(i));

    std::vector<int> cover(m, 0);
    mpz_class total = 0;
    long long nodes = 0;

    std::function<void(int)> rec = [&](int min_idx) {
        if (++nodes > limits.max_backtrack_nodes)
            throw Error(errc::resource, "backtrack engine: node budget exceeded");
        int target = -1;
        for (int e = 0; e < m; ++e)
            if (cover[e] < 2) {
                target = e;
                break;
            }
        if (target < 0) {
            ++total;
            return;
        }
        for (int idx : through[target]) {
            if (idx < min_idx) continue;
            const auto& circ = circuits[idx];
            bool fits = true;
            for (int e : circ)
                if (cover[e] == 2) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (int e : circ) ++cover[e];
            rec(idx);
            for (int e : circ) --cover[e];
        }
    };
    rec(0);
    return {total, "backtrack", seconds_since(t0)};
}

// -- frontier dynamic programming --------------------------------------------------

namespace {

std::vector<int> elimination_order(const CubicMultipole& g) {
    int n = g.order();
    std::vector<int> order;
    std::vector<char> done(n, 0);
    int frontier = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_size = 0;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            int closing = 0;
            for (int dart : g.vertex_darts(v)) {
                int w = g.dart_vertex(CubicMultipole::twin(dart));
                if (done[w]) ++closing;
            }
            int sz = frontier + 3 - 2 * closing;
            if (best < 0 || sz < best_size) {
                best = v;
                best_size = sz;
            }
        }
        order.push_back(best);
        done[best] = 1;
        frontier = best_size;
    }
    return order;
}

}  // namespace

CountResult count_dp(const CubicMultipole& g, const Limits& limits) {
    if (!g.is_graph()) throw Error(errc::usage, "count_dp: graph input required");
    auto t0 = Clock::now();
    int n = g.order();
    if (n == 0) return {1, "dp", seconds_since(t0)};

    auto order = elimination_order(g);
    std::vector<char> done(n, 0);
    long long cap = limits.dp_states();

    std::vector<int> front;  // frontier darts (at processed vertices), ascending
    std::map<Boundary, mpz_class> states;
    states[Boundary{}] = 1;

    for (int v : order) {
        const auto& rot = g.vertex_darts(v);
        // closing darts pair with a frontier dart; forward darts open new positions
        std::vector<int> closing, closing_front_pos;
        std::vector<int> forward;
        for (int d : rot) {
            int t = CubicMultipole::twin(d);
            int w = g.dart_vertex(t);
            if (done[w]) {
                closing.push_back(d);
            } else {
                forward.push_back(d);
            }
        }
        auto front_pos = [&](int dart) {
            auto it = std::lower_bound(front.begin(), front.end(), dart);
            if (it == front.end() || *it != dart) throw Error(errc::internal, "dp: frontier dart missing");
            return static_cast<int>(it - front.begin());
        };
        for (int d : closing) closing_front_pos.push_back(front_pos(CubicMultipole::twin(d)));

        // new frontier
        std::vector<char> closed_pos(front.size(), 0);
        for (int p : closing_front_pos) closed_pos[p] = 1;
        std::vector<int> new_front;
        for (size_t i = 0; i < front.size(); ++i)
            if (!closed_pos[i]) new_front.push_back(front[i]);
        for (int d : forward) new_front.push_back(d);
        std::sort(new_front.begin(), new_front.end());
        std::vector<int> new_pos_of_dart(2 * g.edge_count(), -1);
        for (size_t i = 0; i < new_front.size(); ++i) new_pos_of_dart[new_front[i]] = static_cast<int>(i);

        // segments around v in rotation order: (rot0,rot1), (rot1,rot2), (rot2,rot0)
        const std::array<std::array<int, 2>, 3> seg_darts = {{{rot[0], rot[1]}, {rot[1], rot[2]}, {rot[2], rot[0]}}};
        auto seg_ends_at = [&](int dart) {
            std::array<std::pair<int, int>, 2> res;  // (segment index, end index)
            int cnt = 0;
            for (int s = 0; s < 3; ++s)
                for (int ei = 0; ei < 2; ++ei)
                    if (seg_darts[s][ei] == dart) res[cnt++] = {s, ei};
            if (cnt != 2) throw Error(errc::internal, "dp: dart not on two segments");
            return res;
        };

        std::map<Boundary, mpz_class> next_states;
        int nclose = static_cast<int>(closing.size());

        for (const auto& [bnd, cnt] : states) {
            int p = static_cast<int>(bnd.pairs.size());  // one path per frontier position
            int e_total = p + 3;                         // old paths + three segments
            if (e_total > 63)
                throw Error(errc::resource, "dp engine: frontier exceeds 60 paths");
            // canonical labels are 1-based; elements 0..p-1 are the old paths
            // ends: end id = 2*elem + endindex; old path x has ends at its two positions
            std::vector<std::array<int, 2>> path_pos(p, {-1, -1});
            for (int pos = 0; pos < p; ++pos) {
                for (int lbl : bnd.pairs[pos]) {
                    int x = lbl - 1;
                    if (path_pos[x][0] < 0)
                        path_pos[x][0] = pos;
                    else
                        path_pos[x][1] = pos;
                }
            }
            // sharing masks over elements (old paths share per boundary; segments pairwise)
            std::vector<uint64_t> share(e_total, 0);
            auto add_share = [&](int a, int b) {
                share[a] |= 1ULL << b;
                share[b] |= 1ULL << a;
            };
            for (int pos = 0; pos < p; ++pos) add_share(bnd.pairs[pos][0] - 1, bnd.pairs[pos][1] - 1);
            for (const auto& ex : bnd.extras) add_share(ex[0] - 1, ex[1] - 1);
            for (int s = 0; s < 3; ++s) add_share(p + s, p + (s + 1) % 3);

            for (int choice = 0; choice < (1 << nclose); ++choice) {
                // match[end] = partner end or -1
                std::vector<int> match(2 * e_total, -1);
                std::vector<std::array<int, 2>> passage_elems(nclose);  // one element of each passage
                for (int ci = 0; ci < nclose; ++ci) {
                    int d = closing[ci];
                    int pos = closing_front_pos[ci];
                    int x = bnd.pairs[pos][0] - 1, y = bnd.pairs[pos][1] - 1;
                    int ex = 2 * x + (path_pos[x][0] == pos ? 0 : 1);
                    int ey = 2 * y + (path_pos[y][0] == pos ? 0 : 1);
                    auto segs = seg_ends_at(d);
                    int es1 = 2 * (p + segs[0].first) + segs[0].second;
                    int es2 = 2 * (p + segs[1].first) + segs[1].second;
                    int a1 = ex, a2 = ey;
                    if ((choice >> ci) & 1) std::swap(a1, a2);
                    match[a1] = es1;
                    match[es1] = a1;
                    match[a2] = es2;
                    match[es2] = a2;
                    passage_elems[ci] = {a1 >> 1, a2 >> 1};
                }

                // walk chains (from free ends) and then leftover cycles; a strand
                // is invalid as soon as two of its constituents share an edge
                std::vector<int> chain_of(e_total, -1);
                std::vector<char> chain_is_cycle;
                std::vector<std::array<int, 2>> chain_free_ends;
                std::vector<uint64_t> chain_members;
                bool valid = true;
                auto add_member = [&](int cid, int el) {
                    if (share[el] & chain_members[cid]) {
                        valid = false;
                        return false;
                    }
                    chain_members[cid] |= 1ULL << el;
                    chain_of[el] = cid;
                    return true;
                };
                auto walk_open = [&](int free_end) {
                    int cid = static_cast<int>(chain_members.size());
                    chain_members.push_back(0);
                    chain_is_cycle.push_back(0);
                    chain_free_ends.push_back({free_end, -1});
                    int end = free_end;
                    while (true) {
                        if (!add_member(cid, end >> 1)) return;
                        int other = end ^ 1;
                        if (match[other] < 0) {
                            chain_free_ends[cid][1] = other;
                            return;
                        }
                        end = match[other];
                    }
                };
                auto walk_cycle = [&](int start_end) {
                    int cid = static_cast<int>(chain_members.size());
                    chain_members.push_back(0);
                    chain_is_cycle.push_back(1);
                    chain_free_ends.push_back({-1, -1});
                    int end = start_end;
                    while (true) {
                        if (!add_member(cid, end >> 1)) return;
                        end = match[end ^ 1];
                        if (end == start_end) return;
                    }
                };
                for (int end = 0; end < 2 * e_total && valid; ++end)
                    if (match[end] < 0 && chain_of[end >> 1] < 0) walk_open(end);
                for (int el = 0; el < e_total && valid; ++el)
                    if (chain_of[el] < 0) walk_cycle(2 * el);
                if (!valid) continue;

                // sharing between chains: inherited from members, plus one per
                // closed link edge (its two passages lie in different chains)
                int nchains = static_cast<int>(chain_members.size());
                std::vector<uint64_t> chain_share(nchains, 0);
                for (int a = 0; a < nchains; ++a)
                    for (int b = a + 1; b < nchains; ++b) {
                        bool sh = false;
                        uint64_t mb = chain_members[b];
                        uint64_t ma = chain_members[a];
                        for (int el = 0; el < e_total && !sh; ++el)
                            if ((ma >> el) & 1)
                                if (share[el] & mb) sh = true;
                        if (sh) {
                            chain_share[a] |= 1ULL << b;
                            chain_share[b] |= 1ULL << a;
                        }
                    }
                for (int ci = 0; ci < nclose; ++ci) {
                    int c1 = chain_of[passage_elems[ci][0]];
                    int c2 = chain_of[passage_elems[ci][1]];
                    if (c1 == c2) throw Error(errc::internal, "dp: link passages merged into one strand");
                    if (!chain_is_cycle[c1] && !chain_is_cycle[c2]) {
                        chain_share[c1] |= 1ULL << c2;
                        chain_share[c2] |= 1ULL << c1;
                    }
                }

                // locate each surviving end at its new frontier position
                int np = static_cast<int>(new_front.size());
                std::vector<std::array<int, 2>> new_pairs(np, {-1, -1});
                auto end_position = [&](int end) {
                    int el = end >> 1, ei = end & 1;
                    if (el < p) {
                        int dart = front[path_pos[el][ei]];
                        return new_pos_of_dart[dart];
                    }
                    int dart = seg_darts[el - p][ei];
                    return new_pos_of_dart[dart];
                };
                std::vector<int> open_chains;  // chain ids, relabelled densely
                std::vector<int> open_label(nchains, -1);
                for (int cid = 0; cid < nchains; ++cid)
                    if (!chain_is_cycle[cid]) {
                        open_label[cid] = static_cast<int>(open_chains.size());
                        open_chains.push_back(cid);
                    }
                bool placed_ok = true;
                for (int cid : open_chains) {
                    for (int end : chain_free_ends[cid]) {
                        int pos = end_position(end);
                        if (pos < 0) {
                            placed_ok = false;
                            break;
                        }
                        if (new_pairs[pos][0] < 0)
                            new_pairs[pos][0] = open_label[cid];
                        else
                            new_pairs[pos][1] = open_label[cid];
                    }
                    if (!placed_ok) break;
                }
                if (!placed_ok) throw Error(errc::internal, "dp: free end not on new frontier");

                Boundary raw;
                raw.pairs.resize(np);
                for (int i = 0; i < np; ++i) {
                    if (new_pairs[i][0] < 0 || new_pairs[i][1] < 0)
                        throw Error(errc::internal, "dp: new frontier position not doubly covered");
                    raw.pairs[i] = {std::min(new_pairs[i][0], new_pairs[i][1]),
                                    std::max(new_pairs[i][0], new_pairs[i][1])};
                }
                int nopen = static_cast<int>(open_chains.size());
                std::vector<uint64_t> cooc(nopen, 0);
                for (int i = 0; i < np; ++i) {
                    cooc[raw.pairs[i][0]] |= 1ULL << raw.pairs[i][1];
                    cooc[raw.pairs[i][1]] |= 1ULL << raw.pairs[i][0];
                }
                for (int a = 0; a < nopen; ++a)
                    for (int b = a + 1; b < nopen; ++b) {
                        if (!((chain_share[open_chains[a]] >> open_chains[b]) & 1)) continue;
                        if ((cooc[a] >> b) & 1) continue;
                        raw.extras.push_back({a, b});
                    }
                Boundary canon = canonicalize(raw);
                next_states[canon] += cnt;
            }
        }
        if (static_cast<long long>(next_states.size()) > cap)
            throw Error(errc::resource, "dp engine: state table exceeds CIDC_MAX_STATES");
        states = std::move(next_states);
        front = std::move(new_front);
        done[v] = 1;
    }

    if (!front.empty() || states.size() > 1)
        throw Error(errc::internal, "dp: unexpected final state");
    if (states.empty()) return {0, "dp", seconds_since(t0)};  // every partial cover died
    return {states.begin()->second, "dp", seconds_since(t0)};
}

CountResult count_auto(const CubicMultipole& g, const Limits& limits) {
    if (!g.is_graph()) return count_assignments(g, limits);
    if (g.order() <= 8) return count_assignments(g, limits);
    return count_dp(g, limits);
}

// -- cover validation ---------------------------------------------------------------

void validate_cover(const CubicMultipole& g, const CircuitCover& cover) {
    std::vector<int> coverage(g.edge_count(), 0);
    for (const auto& el : cover.elements) {
        if (el.edges.empty()) throw Error(errc::verify, "cover element with no edges");
        std::set<int> edge_seen, vertex_seen;
        for (int e : el.edges) {
            if (e < 0 || e >= g.edge_count()) throw Error(errc::verify, "cover references unknown edge");
            if (!edge_seen.insert(e).second) throw Error(errc::verify, "cover element repeats an edge");
            ++coverage[e];
        }
        for (int v : el.vertices)
            if (!vertex_seen.insert(v).second) throw Error(errc::verify, "cover element repeats a vertex");
        if (el.closed) {
            if (el.edges.size() != el.vertices.size())
                throw Error(errc::verify, "circuit must visit as many vertices as edges");
        } else {
            if (el.end_slot_a < 0 || el.end_slot_b < 0 || el.end_slot_a >= g.size() || el.end_slot_b >= g.size())
                throw Error(errc::verify, "path ends must be semiedges");
            if (el.edges.size() != el.vertices.size() + 1)
                throw Error(errc::verify, "path must have one more edge than vertices");
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (coverage[e] != 2)
            throw Error(errc::verify, "edge " + std::to_string(e) + " covered " + std::to_string(coverage[e]) +
                                          " times");
}

}  // namespace cidc
