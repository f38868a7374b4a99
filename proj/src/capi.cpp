#include "cidc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "boundary.hpp"
#include "counting.hpp"
#include "embedding.hpp"
#include "lp.hpp"
#include "multipole.hpp"
#include "reductions.hpp"

struct cidc_graph {
    cidc::CubicMultipole g;
    std::optional<cidc::RotationSystem> rotation;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return CIDC_OK;
    } catch (const cidc::Error& e) {
        t_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CIDC_E_INTERNAL;
    }
}

const cidc::CubicMultipole& need(const cidc_graph* g) {
    if (!g) throw cidc::Error(cidc::errc::usage, "null graph handle");
    return g->g;
}

}  // namespace

extern "C" {

const char* cidc_last_error(void) { return t_last_error.c_str(); }

void cidc_string_free(char* s) { std::free(s); }

void cidc_graph_free(cidc_graph* g) { delete g; }

int cidc_graph_from_graph6(const char* line, cidc_graph** out) {
    return guarded([&] {
        if (!line || !out) throw cidc::Error(cidc::errc::usage, "null argument");
        *out = new cidc_graph{cidc::parse_graph6(line), std::nullopt};
    });
}

int cidc_graph_from_multipole_text(const char* text, cidc_graph** out) {
    return guarded([&] {
        if (!text || !out) throw cidc::Error(cidc::errc::usage, "null argument");
        *out = new cidc_graph{cidc::parse_multipole(text), std::nullopt};
    });
}

int cidc_graph_generate(const char* family, int param, cidc_graph** out) {
    return guarded([&] {
        if (!family || !out) throw cidc::Error(cidc::errc::usage, "null argument");
        std::string f = family;
        auto handle = std::make_unique<cidc_graph>();
        if (f == "k4") {
            auto emb = cidc::k4_embedded();
            handle->g = emb.graph;
            handle->rotation = emb.rotation;
        } else if (f == "theta") {
            auto emb = cidc::theta_embedded();
            handle->g = emb.graph;
            handle->rotation = emb.rotation;
        } else if (f == "cube") {
            auto emb = cidc::cube_embedded();
            handle->g = emb.graph;
            handle->rotation = emb.rotation;
        } else if (f == "petersen") {
            handle->g = cidc::petersen();
        } else if (f == "klee") {
            handle->g = cidc::klee(param);
        } else if (f == "flower_gadget") {
            auto emb = cidc::flower_gadget_embedded(param);
            handle->g = emb.graph;
            handle->rotation = emb.rotation;
        } else if (f == "flower_snark") {
            handle->g = cidc::flower_snark(param);
        } else if (f == "three_star") {
            handle->g = cidc::three_star();
        } else if (f == "triangle_pole") {
            handle->g = cidc::triangle_pole();
        } else if (f == "isolated_edge_pole") {
            handle->g = cidc::isolated_edge_pole();
        } else {
            throw cidc::Error(cidc::errc::usage, "unknown family: " + f);
        }
        *out = handle.release();
    });
}

int cidc_graph_order(const cidc_graph* g) { return g ? g->g.order() : -1; }
int cidc_graph_size(const cidc_graph* g) { return g ? g->g.size() : -1; }
int cidc_graph_edge_count(const cidc_graph* g) { return g ? g->g.edge_count() : -1; }

int cidc_graph_to_graph6(const cidc_graph* g, char** out) {
    return guarded([&] {
        if (!out) throw cidc::Error(cidc::errc::usage, "null argument");
        *out = dup_string(cidc::write_graph6(need(g)));
    });
}

int cidc_graph_to_multipole_text(const cidc_graph* g, char** out) {
    return guarded([&] {
        if (!out) throw cidc::Error(cidc::errc::usage, "null argument");
        *out = dup_string(cidc::write_multipole(need(g)));
    });
}

int cidc_graph_rotation_text(const cidc_graph* g, char** out) {
    return guarded([&] {
        if (!out) throw cidc::Error(cidc::errc::usage, "null argument");
        need(g);
        if (!g->rotation) throw cidc::Error(cidc::errc::usage, "graph has no rotation attached");
        *out = dup_string(cidc::write_rotation(*g->rotation));
    });
}

int cidc_graph_set_rotation_text(cidc_graph* g, const char* text) {
    return guarded([&] {
        if (!g || !text) throw cidc::Error(cidc::errc::usage, "null argument");
        g->rotation = cidc::parse_rotation(g->g, text);
    });
}

int cidc_graph_faces_text(const cidc_graph* g, char** out) {
    return guarded([&] {
        if (!out) throw cidc::Error(cidc::errc::usage, "null argument");
        const auto& graph = need(g);
        if (!g->rotation) throw cidc::Error(cidc::errc::usage, "graph has no rotation attached");
        auto faces = cidc::trace_faces(graph, *g->rotation);
        int chi = graph.order() - graph.edge_count() + static_cast<int>(faces.size());
        std::ostringstream os;
        for (size_t i = 0; i < faces.size(); ++i) {
            os << "face " << i << " (size " << faces[i].size() << "):";
            for (int d : faces[i].darts) os << ' ' << d;
            if (chi == 2)
                os << (cidc::check_flower(graph, *g->rotation, faces[i]) ? "  [flower]" : "  [not a flower]");
            os << '\n';
        }
        os << "chi = " << chi << '\n';
        *out = dup_string(os.str());
    });
}

int cidc_count(const cidc_graph* g, const char* engine, char** nu_out, char** engine_used_out) {
    return guarded([&] {
        if (!nu_out) throw cidc::Error(cidc::errc::usage, "null argument");
        const auto& graph = need(g);
        std::string eng = engine ? engine : "auto";
        cidc::CountResult res;
        if (eng == "brute")
            res = cidc::count_assignments(graph);
        else if (eng == "backtrack")
            res = cidc::count_backtrack(graph);
        else if (eng == "dp")
            res = cidc::count_dp(graph);
        else if (eng == "auto")
            res = cidc::count_auto(graph);
        else
            throw cidc::Error(cidc::errc::usage, "unknown engine: " + eng);
        *nu_out = dup_string(res.value.get_str());
        if (engine_used_out) *engine_used_out = dup_string(res.engine);
    });
}

int cidc_conjecture_ratio(const char* nu_decimal, int order, char** ratio_out, int* meets_bound) {
    return guarded([&] {
        if (!nu_decimal || !ratio_out) throw cidc::Error(cidc::errc::usage, "null argument");
        if (order < 2 || order % 2 != 0)
            throw cidc::Error(cidc::errc::usage, "conjecture ratio needs an even order >= 2");
        mpz_class nu;
        if (nu.set_str(nu_decimal, 10) != 0) throw cidc::Error(cidc::errc::parse, "bad count");
        mpz_class denom = mpz_class(1) << (order / 2 - 1);
        mpq_class ratio(nu, denom);
        ratio.canonicalize();
        *ratio_out = dup_string(ratio.get_str());
        if (meets_bound) *meets_bound = nu >= denom ? 1 : 0;
    });
}

int cidc_rational_cmp(const char* a, const char* b, int* sign_out) {
    return guarded([&] {
        if (!a || !b || !sign_out) throw cidc::Error(cidc::errc::usage, "null argument");
        mpq_class qa, qb;
        if (qa.set_str(a, 10) != 0 || qb.set_str(b, 10) != 0)
            throw cidc::Error(cidc::errc::parse, "bad rational");
        qa.canonicalize();
        qb.canonicalize();
        *sign_out = cmp(qa, qb);
    });
}

int cidc_boundary_count(int k, long* count_out, int list, char** list_out) {
    return guarded([&] {
        const auto& all = cidc::enumerate_boundaries(k);
        if (count_out) *count_out = static_cast<long>(all.size());
        if (list && list_out) {
            std::ostringstream os;
            for (const auto& b : all) os << b.text() << '\n';
            *list_out = dup_string(os.str());
        }
    });
}

int cidc_lp_check(int cycle_len, const char* mode, char** optimum_out, char** factor_out, int* ok_out) {
    return guarded([&] {
        auto res = cidc::check_theorem_lp(cycle_len, mode ? mode : "planar");
        if (optimum_out) *optimum_out = dup_string(res.optimum.get_str());
        if (factor_out) *factor_out = dup_string(res.c4.get_str());
        if (ok_out) *ok_out = res.ok ? 1 : 0;
    });
}

int cidc_certify_planar(const cidc_graph* g, char** json_out, char** bound_out, int* target_ok_out) {
    return guarded([&] {
        const auto& graph = need(g);
        auto cert = cidc::certify_planar_bound(graph);
        auto check = cidc::verify_certificate(cert);
        if (!check.ok) throw cidc::Error(cidc::errc::internal, "fresh certificate failed verification: " + check.reason);
        if (json_out) *json_out = dup_string(cidc::certificate_to_json(cert));
        if (bound_out)
            *bound_out = dup_string(cert.bound.get_num().get_str() + "/" + cert.bound.get_den().get_str());
        if (target_ok_out) *target_ok_out = cidc::meets_planar_target(cert.bound, graph.order()) ? 1 : 0;
    });
}

int cidc_verify_certificate(const char* json, char** reason_out) {
    return guarded([&] {
        if (!json) throw cidc::Error(cidc::errc::usage, "null argument");
        auto res = cidc::verify_certificate_json(json);
        if (!res.ok) throw cidc::Error(cidc::errc::verify, res.reason);
        if (reason_out) *reason_out = dup_string("");
    });
}

int cidc_flower_check(int k, char** count_out, int* bound_ok_out, int* formula_ok_out) {
    return guarded([&] {
        auto res = cidc::flower_count_check(k);
        if (count_out) *count_out = dup_string(res.count.get_str());
        if (bound_ok_out) *bound_ok_out = res.lower_bound_ok ? 1 : 0;
        if (formula_ok_out) *formula_ok_out = res.formula_ok ? 1 : 0;
    });
}

}  // extern "C"
