#include "boundary.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace cidc {

std::string Boundary::text() const {
    std::ostringstream out;
    out << '<';
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) out << ',';
        out << '(' << pairs[i][0] << ',' << pairs[i][1] << ')';
    }
    out << '|';
    for (size_t i = 0; i < extras.size(); ++i) {
        if (i) out << ',';
        out << '(' << extras[i][0] << ',' << extras[i][1] << ')';
    }
    out << '>';
    return out.str();
}

Boundary Boundary::from_text(const std::string& s) {
    Boundary b;
    size_t lt = s.find('<'), bar = s.find('|'), gt = s.find('>');
    if (lt == std::string::npos || bar == std::string::npos || gt == std::string::npos || !(lt < bar && bar < gt))
        throw Error(errc::parse, "boundary: expected <...|...>");
    auto parse_pairs = [](const std::string& part, std::vector<std::array<int, 2>>& out) {
        size_t i = 0;
        while (i < part.size()) {
            if (part[i] == ',' || isspace(static_cast<unsigned char>(part[i]))) {
                ++i;
                continue;
            }
            if (part[i] != '(') throw Error(errc::parse, "boundary: expected '('");
            size_t close = part.find(')', i);
            if (close == std::string::npos) throw Error(errc::parse, "boundary: missing ')'");
            std::string inner = part.substr(i + 1, close - i - 1);
            size_t comma = inner.find(',');
            if (comma == std::string::npos) throw Error(errc::parse, "boundary: expected pair");
            out.push_back({std::stoi(inner.substr(0, comma)), std::stoi(inner.substr(comma + 1))});
            i = close + 1;
        }
    };
    parse_pairs(s.substr(lt + 1, bar - lt - 1), b.pairs);
    parse_pairs(s.substr(bar + 1, gt - bar - 1), b.extras);
    return canonicalize(b);
}

namespace {

void validate_structure(const Boundary& b) {
    std::map<int, int> appearances;
    for (const auto& pr : b.pairs) {
        if (pr[0] == pr[1]) throw Error(errc::verify, "boundary: pair with equal labels");
        appearances[pr[0]]++;
        appearances[pr[1]]++;
    }
    if (static_cast<int>(appearances.size()) != b.k() && b.k() > 0)
        throw Error(errc::verify, "boundary: label multiplicity violated");
    for (auto [label, cnt] : appearances)
        if (cnt != 2) throw Error(errc::verify, "boundary: label " + std::to_string(label) + " appears " +
                                                    std::to_string(cnt) + " times");
    std::set<std::array<int, 2>> cooc;
    for (const auto& pr : b.pairs) {
        cooc.insert({std::min(pr[0], pr[1]), std::max(pr[0], pr[1])});
    }
    std::set<std::array<int, 2>> seen;
    for (const auto& ex : b.extras) {
        if (ex[0] == ex[1]) throw Error(errc::verify, "boundary: extra pair with equal labels");
        if (!appearances.count(ex[0]) || !appearances.count(ex[1]))
            throw Error(errc::verify, "boundary: extra pair references unknown label");
        std::array<int, 2> key{std::min(ex[0], ex[1]), std::max(ex[0], ex[1])};
        if (cooc.count(key)) throw Error(errc::verify, "boundary: extra pair duplicates a semiedge co-occurrence");
        if (!seen.insert(key).second) throw Error(errc::verify, "boundary: duplicate extra pair");
    }
}

}  // namespace

Boundary canonicalize(const Boundary& raw) {
    validate_structure(raw);
    int k = raw.k();
    if (k == 0) return Boundary{};

    // The lex-minimal relabeling assigns labels by first appearance; the only
    // freedom is the order within a pair that introduces two new labels, so
    // enumerate those branches (at most 2^{k/2}) and keep the smallest result.
    struct State {
        std::map<int, int> sigma;
        int next = 1;
    };
    std::vector<State> states{State{}};
    for (int pos = 0; pos < k; ++pos) {
        int x = raw.pairs[pos][0], y = raw.pairs[pos][1];
        std::vector<State> grown;
        for (auto& st : states) {
            bool bx = st.sigma.count(x), by = st.sigma.count(y);
            if (bx && by) {
                grown.push_back(std::move(st));
            } else if (bx || by) {
                st.sigma[bx ? y : x] = st.next++;
                grown.push_back(std::move(st));
            } else {
                State other = st;
                st.sigma[x] = st.next++;
                st.sigma[y] = st.next++;
                other.sigma[y] = other.next++;
                other.sigma[x] = other.next++;
                grown.push_back(std::move(st));
                grown.push_back(std::move(other));
            }
        }
        states = std::move(grown);
    }

    Boundary best;
    bool first = true;
    for (const auto& st : states) {
        Boundary cand;
        cand.pairs.resize(k);
        for (int pos = 0; pos < k; ++pos) {
            int a = st.sigma.at(raw.pairs[pos][0]), b = st.sigma.at(raw.pairs[pos][1]);
            cand.pairs[pos] = {std::min(a, b), std::max(a, b)};
        }
        for (const auto& ex : raw.extras) {
            int a = st.sigma.at(ex[0]), b = st.sigma.at(ex[1]);
            cand.extras.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(cand.extras.begin(), cand.extras.end());
        if (first || cand < best) {
            best = std::move(cand);
            first = false;
        }
    }
    return best;
}

const std::vector<Boundary>& enumerate_boundaries(int k) {
    static std::map<int, std::vector<Boundary>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    if (k < 0 || k > 6) throw Error(errc::usage, "enumerate_boundaries: supported range is 0..6");

    std::set<Boundary> out;
    // assign labels position by position, first-appearance numbering
    std::vector<std::array<int, 2>> pairs(k);
    std::vector<int> count(k + 1, 0);  // labels 1..k
    std::function<void(int, int)> place = [&](int pos, int maxl) {
        if (pos == k) {
            // every path needs both ends placed
            for (int l = 1; l <= maxl; ++l)
                if (count[l] != 2) return;
            if (maxl != k) return;
            // after the pair skeleton, attach every admissible extras subset
            std::vector<std::array<int, 2>> candidates;
            std::set<std::array<int, 2>> cooc;
            for (const auto& pr : pairs) cooc.insert(pr);
            for (int a = 1; a <= k; ++a)
                for (int b = a + 1; b <= k; ++b)
                    if (!cooc.count({a, b})) candidates.push_back({a, b});
            int nc = static_cast<int>(candidates.size());
            for (int mask = 0; mask < (1 << nc); ++mask) {
                Boundary b;
                b.pairs = pairs;
                for (int i = 0; i < nc; ++i)
                    if ((mask >> i) & 1) b.extras.push_back(candidates[i]);
                out.insert(canonicalize(b));
            }
            return;
        }
        for (int a = 1; a <= std::min(maxl + 1, k); ++a) {
            if (count[a] >= 2) continue;
            int maxl2 = std::max(maxl, a);
            for (int b = a + 1; b <= std::min(maxl2 + 1, k); ++b) {
                if (count[b] >= 2) continue;
                count[a]++;
                count[b]++;
                pairs[pos] = {a, b};
                place(pos + 1, std::max(maxl2, b));
                count[a]--;
                count[b]--;
            }
        }
    };
    if (k == 0) {
        out.insert(Boundary{});
    } else {
        place(0, 0);
    }
    auto& slot = cache[k];
    slot.assign(out.begin(), out.end());
    return slot;
}

Boundary boundary_of(const CubicMultipole& g, const CircuitCover& cover) {
    validate_cover(g, cover);
    int k = g.size();
    // collect paths in element order
    std::vector<const CoverElement*> paths;
    for (const auto& el : cover.elements)
        if (!el.closed) paths.push_back(&el);
    if (static_cast<int>(paths.size()) * 2 != 2 * k)
        throw Error(errc::verify, "cover has wrong number of path ends");
    std::vector<std::vector<int>> at_slot(k);
    for (size_t i = 0; i < paths.size(); ++i) {
        at_slot[paths[i]->end_slot_a].push_back(static_cast<int>(i));
        at_slot[paths[i]->end_slot_b].push_back(static_cast<int>(i));
    }
    Boundary raw;
    raw.pairs.resize(k);
    for (int s = 0; s < k; ++s) {
        if (at_slot[s].size() != 2) throw Error(errc::verify, "semiedge not met by exactly two path ends");
        raw.pairs[s] = {std::min(at_slot[s][0], at_slot[s][1]), std::max(at_slot[s][0], at_slot[s][1])};
        if (raw.pairs[s][0] == raw.pairs[s][1])
            throw Error(errc::verify, "a path covers a semiedge twice");
    }
    // edge sharing via edge sets
    std::vector<std::set<int>> edge_sets(paths.size());
    for (size_t i = 0; i < paths.size(); ++i) edge_sets[i] = {paths[i]->edges.begin(), paths[i]->edges.end()};
    std::set<std::array<int, 2>> cooc(raw.pairs.begin(), raw.pairs.end());
    for (size_t a = 0; a < paths.size(); ++a)
        for (size_t b = a + 1; b < paths.size(); ++b) {
            bool shares = false;
            for (int e : edge_sets[a])
                if (edge_sets[b].count(e)) {
                    shares = true;
                    break;
                }
            if (!shares) continue;
            std::array<int, 2> key{static_cast<int>(a), static_cast<int>(b)};
            if (!cooc.count(key)) raw.extras.push_back(key);
        }
    return canonicalize(raw);
}

MultiplicityVector multiplicity_vector(const CubicMultipole& g, const Limits& limits) {
    MultiplicityVector h;
    h.k = g.size();
    mpq_class scale(1, 1);
    for (int i = 0; i < g.isolated_edge_count(); ++i) scale /= 2;
    for_each_cidc(g, limits, [&](const CircuitCover& cover) {
        Boundary b = boundary_of(g, cover);
        h.entries[b] += scale;
    });
    return h;
}

int join_count(const Boundary& b1, const Boundary& b2) {
    if (b1.k() != b2.k()) throw Error(errc::usage, "join_count: size mismatch");
    int k = b1.k();
    if (k == 0) return 1;  // gluing two graphs is the disjoint union; one way

    // elements 0..k-1 = paths of b1, k..2k-1 = paths of b2
    int total = 2 * k;
    std::vector<std::array<int, 2>> end_pos(total, {-1, -1});
    auto fill_positions = [&](const Boundary& b, int off) {
        for (int pos = 0; pos < k; ++pos)
            for (int x : b.pairs[pos]) {
                int el = off + x - 1;
                if (end_pos[el][0] < 0)
                    end_pos[el][0] = pos;
                else
                    end_pos[el][1] = pos;
            }
    };
    fill_positions(b1, 0);
    fill_positions(b2, k);
    std::vector<uint64_t> share(total, 0);
    auto add_share = [&](int a, int b) {
        share[a] |= 1ULL << b;
        share[b] |= 1ULL << a;
    };
    for (int pos = 0; pos < k; ++pos) {
        add_share(b1.pairs[pos][0] - 1, b1.pairs[pos][1] - 1);
        add_share(k + b2.pairs[pos][0] - 1, k + b2.pairs[pos][1] - 1);
    }
    for (const auto& ex : b1.extras) add_share(ex[0] - 1, ex[1] - 1);
    for (const auto& ex : b2.extras) add_share(k + ex[0] - 1, k + ex[1] - 1);

    int valid = 0;
    std::vector<int> match(2 * total);
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::fill(match.begin(), match.end(), -1);
        for (int pos = 0; pos < k; ++pos) {
            int x = b1.pairs[pos][0] - 1, y = b1.pairs[pos][1] - 1;
            int r = k + b2.pairs[pos][0] - 1, s = k + b2.pairs[pos][1] - 1;
            auto end_of = [&](int el, int pos_) { return 2 * el + (end_pos[el][0] == pos_ ? 0 : 1); };
            int ex = end_of(x, pos), ey = end_of(y, pos);
            int er = end_of(r, pos), es = end_of(s, pos);
            if ((mask >> pos) & 1) std::swap(er, es);
            match[ex] = er;
            match[er] = ex;
            match[ey] = es;
            match[es] = ey;
        }
        // all ends matched: decompose into cycles, check pairwise sharing
        bool ok = true;
        std::vector<char> seen(total, 0);
        for (int el = 0; el < total && ok; ++el) {
            if (seen[el]) continue;
            uint64_t members = 0;
            int end = 2 * el;
            while (true) {
                int cur = end >> 1;
                if (!seen[cur]) {
                    if (share[cur] & members) {
                        ok = false;
                        break;
                    }
                    members |= 1ULL << cur;
                    seen[cur] = 1;
                }
                end = match[end ^ 1];
                if (end == 2 * el) break;
            }
        }
        if (ok) ++valid;
    }
    return valid;
}

int JoinMatrix::index_of(const Boundary& b) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), b);
    if (it == basis.end() || !(*it == b)) throw Error(errc::usage, "boundary not in basis");
    return static_cast<int>(it - basis.begin());
}

const JoinMatrix& join_matrix(int k) {
    static std::map<int, JoinMatrix> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    JoinMatrix m;
    m.k = k;
    m.basis = enumerate_boundaries(k);
    int c = static_cast<int>(m.basis.size());
    m.entry.assign(c, std::vector<int>(c, 0));
    for (int i = 0; i < c; ++i)
        for (int j = i; j < c; ++j) {
            int v = join_count(m.basis[i], m.basis[j]);
            m.entry[i][j] = v;
            m.entry[j][i] = v;
        }
    return cache[k] = std::move(m);
}

mpq_class bilinear_value(const MultiplicityVector& h1, const MultiplicityVector& h2) {
    if (h1.k != h2.k) throw Error(errc::usage, "bilinear_value: size mismatch");
    const JoinMatrix& m = join_matrix(h1.k);
    mpq_class total = 0;
    for (const auto& [b1, v1] : h1.entries) {
        int i = m.index_of(b1);
        for (const auto& [b2, v2] : h2.entries) {
            int j = m.index_of(b2);
            total += v1 * v2 * m.entry[i][j];
        }
    }
    return total;
}

namespace {

// A gluing produces a vertex-less loop iff some junction chain never reaches a
// vertex; mirrors the chain walk in glue().
bool gluing_is_loop_free(const CubicMultipole& g1, const CubicMultipole& g2) {
    int k = g1.size();
    int m1 = g1.edge_count();
    int total = 2 * (m1 + g2.edge_count());
    std::vector<int> junction(total, -1), vertex_of(total, -1);
    for (int d = 0; d < 2 * m1; ++d) vertex_of[d] = g1.dart_vertex(d);
    for (int d = 0; d < g2.dart_count(); ++d) vertex_of[2 * m1 + d] = g2.dart_vertex(d);
    for (int i = 0; i < k; ++i) {
        int a = g1.semiedge_dart(i);
        int b = 2 * m1 + g2.semiedge_dart(i);
        junction[a] = b;
        junction[b] = a;
    }
    auto twin_of = [&](int d) { return d < 2 * m1 ? (d ^ 1) : (((d - 2 * m1) ^ 1) + 2 * m1); };
    std::vector<char> used(total, 0);
    for (int start = 0; start < total; ++start) {
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
    }
    for (int d = 0; d < total; ++d)
        if (!used[d]) return false;  // unreached component is a vertex-less cycle
    return true;
}

}  // namespace

bool verify_bilinear(const CubicMultipole& g1, const CubicMultipole& g2, const Limits& limits) {
    if (g1.size() != g2.size()) throw Error(errc::usage, "verify_bilinear: size mismatch");
    if (!gluing_is_loop_free(g1, g2))
        throw Error(errc::usage, "verify_bilinear: gluing would produce a vertex-less loop");
    CubicMultipole glued = glue(g1, g2);
    mpz_class direct = count_auto(glued, limits).value;
    MultiplicityVector h1 = multiplicity_vector(g1, limits);
    MultiplicityVector h2 = multiplicity_vector(g2, limits);
    mpq_class form = bilinear_value(h1, h2);
    form.canonicalize();
    if (form.get_den() != 1) return false;
    return form.get_num() == direct;
}

}  // namespace cidc
