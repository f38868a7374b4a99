// cidc command line: counting, catalog scans, certificates, boundaries,
// reduction LPs, generators, flowers, and face reports. Links the C API only.

#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cidc.h"

namespace {

struct StringGuard {
    char* p = nullptr;
    ~StringGuard() { cidc_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct GraphGuard {
    cidc_graph* g = nullptr;
    ~GraphGuard() { cidc_graph_free(g); }
};

[[noreturn]] void fail(int code) {
    std::cerr << "error: " << cidc_last_error() << "\n";
    std::exit(code);
}

std::string read_stream(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(1);
    }
    return read_stream(f);
}

int parse_graph_arg(const std::string& input, const std::string& format, cidc_graph** out) {
    if (format == "g6") {
        std::string line = input;
        size_t nl = line.find('\n');
        if (nl != std::string::npos) line = line.substr(0, nl);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return cidc_graph_from_graph6(line.c_str(), out);
    }
    return cidc_graph_from_multipole_text(input.c_str(), out);
}

int cmd_count(const std::string& input_path, const std::string& engine, const std::string& format) {
    GraphGuard g;
    int rc = parse_graph_arg(read_input(input_path), format, &g.g);
    if (rc != CIDC_OK) fail(rc);
    StringGuard nu, used;
    rc = cidc_count(g.g, engine.c_str(), &nu.p, &used.p);
    if (rc != CIDC_OK) fail(rc);
    std::cout << nu.str() << "\n";
    std::cerr << "engine: " << used.str() << "\n";
    return 0;
}

int cmd_scan(const std::string& input_path, const std::string& csv_path, const std::string& engine, int jobs) {
    std::istringstream lines(read_input(input_path));
    std::vector<std::string> work;
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) work.push_back(line);
    }
    struct Record {
        bool ok = false;
        int n = 0;
        std::string nu, ratio;
        int meets = 1;
        std::string error;
    };
    std::vector<Record> records(work.size());
    std::atomic<size_t> next{0};
    if (jobs < 1) jobs = 1;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            Record& r = records[i];
            GraphGuard g;
            if (cidc_graph_from_graph6(work[i].c_str(), &g.g) != CIDC_OK) {
                r.error = cidc_last_error();
                continue;
            }
            StringGuard nu;
            if (cidc_count(g.g, engine.c_str(), &nu.p, nullptr) != CIDC_OK) {
                r.error = cidc_last_error();
                continue;
            }
            r.n = cidc_graph_order(g.g);
            r.nu = nu.str();
            StringGuard ratio;
            if (cidc_conjecture_ratio(nu.p, r.n, &ratio.p, &r.meets) != CIDC_OK) {
                r.error = cidc_last_error();
                continue;
            }
            r.ratio = ratio.str();
            r.ok = true;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!csv_path.empty() && csv_path != "-") {
        file.open(csv_path);
        if (!file) {
            std::cerr << "error: cannot open " << csv_path << "\n";
            return 1;
        }
        out = &file;
    }
    size_t counted = 0, skipped = 0;
    std::string min_ratio;
    size_t min_index = 0;
    for (size_t i = 0; i < records.size(); ++i) {
        const Record& r = records[i];
        if (!r.ok) {
            ++skipped;
            std::cerr << "warning: line " << i << " skipped: " << r.error << "\n";
            continue;
        }
        (*out) << r.n << ',' << r.nu << "\n";
        ++counted;
        if (min_ratio.empty()) {
            min_ratio = r.ratio;
            min_index = i;
        } else {
            int sign = 0;
            if (cidc_rational_cmp(r.ratio.c_str(), min_ratio.c_str(), &sign) == CIDC_OK && sign < 0) {
                min_ratio = r.ratio;
                min_index = i;
            }
        }
    }
    std::cerr << "scanned " << counted << " graphs (" << skipped << " skipped)";
    if (!min_ratio.empty()) std::cerr << "; min ratio " << min_ratio << " at index " << min_index;
    std::cerr << "\n";
    return 0;
}

int cmd_certify(const std::string& input_path, const std::string& format, const std::string& out_path) {
    GraphGuard g;
    int rc = parse_graph_arg(read_input(input_path), format, &g.g);
    if (rc != CIDC_OK) fail(rc);
    StringGuard json, bound;
    int target_ok = 0;
    rc = cidc_certify_planar(g.g, &json.p, &bound.p, &target_ok);
    if (rc != CIDC_OK) fail(rc);
    int n = cidc_graph_order(g.g);
    std::cout << "bound = " << bound.str() << "\n";
    std::cout << "planar target (5/2)^(" << (n - 2) << "/4): " << (target_ok ? "satisfied" : "NOT satisfied")
              << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 1;
        }
        f << json.str();
    } else {
        std::cout << json.str() << "\n";
    }
    return target_ok ? 0 : 4;
}

int cmd_verify(const std::string& input_path) {
    std::string text = read_input(input_path);
    StringGuard reason;
    int rc = cidc_verify_certificate(text.c_str(), &reason.p);
    if (rc == CIDC_OK) {
        std::cout << "VALID\n";
        return 0;
    }
    std::cout << "INVALID: " << cidc_last_error() << "\n";
    return 4;
}

int cmd_boundaries(int k, bool list) {
    long count = 0;
    StringGuard text;
    int rc = cidc_boundary_count(k, &count, list ? 1 : 0, list ? &text.p : nullptr);
    if (rc != CIDC_OK) fail(rc);
    std::cout << count << "\n";
    if (list) std::cout << text.str();
    return 0;
}

int cmd_lp(int cycle, const std::string& mode) {
    StringGuard optimum, factor;
    int ok = 0;
    int rc = cidc_lp_check(cycle, mode.c_str(), &optimum.p, &factor.p, &ok);
    if (rc != CIDC_OK) fail(rc);
    std::cout << "optimum = " << optimum.str() << (ok ? " (certified)" : " (below 1)") << "; factor "
              << factor.str() << "\n";
    return ok ? 0 : 4;
}

int cmd_gen(const std::string& family, int param, const std::string& format, bool rotation) {
    GraphGuard g;
    int rc = cidc_graph_generate(family.c_str(), param, &g.g);
    if (rc != CIDC_OK) fail(rc);
    StringGuard text;
    rc = format == "g6" ? cidc_graph_to_graph6(g.g, &text.p) : cidc_graph_to_multipole_text(g.g, &text.p);
    if (rc != CIDC_OK) fail(rc);
    std::cout << text.str();
    if (format == "g6") std::cout << "\n";
    if (rotation) {
        StringGuard rot;
        rc = cidc_graph_rotation_text(g.g, &rot.p);
        if (rc != CIDC_OK) fail(rc);
        std::cout << "rotation:\n" << rot.str();
    }
    return 0;
}

int cmd_flower(int k) {
    StringGuard count;
    int bound_ok = 0, formula_ok = 0;
    int rc = cidc_flower_check(k, &count.p, &bound_ok, &formula_ok);
    if (rc != CIDC_OK) fail(rc);
    long long bound = (1LL << (k - 3)) + 1;
    std::cout << "outer-fixed CiDCs: " << count.str() << " (bound " << bound << ": " << (bound_ok ? "ok" : "FAIL")
              << "; formula: " << (formula_ok ? "ok" : "FAIL") << ")\n";
    return bound_ok && formula_ok ? 0 : 4;
}

int cmd_faces(const std::string& input_path, const std::string& format, const std::string& rotation_path) {
    GraphGuard g;
    int rc = parse_graph_arg(read_input(input_path), format, &g.g);
    if (rc != CIDC_OK) fail(rc);
    if (!rotation_path.empty()) {
        std::string rot = read_input(rotation_path);
        rc = cidc_graph_set_rotation_text(g.g, rot.c_str());
        if (rc != CIDC_OK) fail(rc);
    }
    StringGuard text;
    rc = cidc_graph_faces_text(g.g, &text.p);
    if (rc != CIDC_OK) fail(rc);
    std::cout << text.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting and certification of circuit double covers of cubic multigraphs"};
    app.require_subcommand(1);

    std::string input, format = "multipole", engine = "auto", csv, out_path, mode = "planar", rotation_path;
    int k = 4, cycle = 4, param = 0, jobs = static_cast<int>(std::thread::hardware_concurrency());
    bool list = false, rotation = false;
    std::string family;

    auto* count = app.add_subcommand("count", "Print the exact number of circuit double covers");
    count->add_option("input", input, "input file or - for stdin");
    count->add_option("--engine", engine, "brute|backtrack|dp|auto")->capture_default_str();
    count->add_option("--format", format, "g6|multipole")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "Count a graph6 stream, emit CSV of n,nu");
    scan->add_option("input", input, "graph6 file or - for stdin");
    scan->add_option("--csv", csv, "output CSV path (default stdout)");
    scan->add_option("--engine", engine, "brute|backtrack|dp|auto")->capture_default_str();
    scan->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    auto* certify = app.add_subcommand("certify", "Emit a reduction certificate for a planar input");
    certify->add_option("input", input, "input file or - for stdin");
    certify->add_option("--format", format, "g6|multipole")->capture_default_str();
    certify->add_option("--out", out_path, "write certificate JSON here");
    std::string certify_mode = "planar-bound";
    certify->add_option("--mode", certify_mode, "planar-bound")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Replay and check a certificate JSON");
    verify->add_option("input", input, "certificate file or - for stdin");

    auto* boundaries = app.add_subcommand("boundaries", "Boundary census of size k");
    boundaries->add_option("--k", k, "boundary size")->required();
    boundaries->add_flag("--list", list, "print each canonical boundary");

    auto* lp = app.add_subcommand("lp", "Solve and certify a cycle reduction LP");
    lp->add_option("--cycle", cycle, "4 or 5")->required();
    lp->add_option("--mode", mode, "planar|all")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Generate a named graph family member");
    gen->add_option("--family", family,
                    "k4|theta|cube|petersen|klee|flower_gadget|flower_snark|three_star|triangle_pole|"
                    "isolated_edge_pole")
        ->required();
    gen->add_option("--param", param, "family parameter (size)");
    gen->add_option("--format", format, "g6|multipole")->capture_default_str();
    gen->add_flag("--rotation", rotation, "also print the planar rotation");

    auto* flower = app.add_subcommand("flower", "Outer-fixed CiDC count of the flower gadget");
    flower->add_option("--k", k, "flower size (3..8)")->required();

    auto* faces = app.add_subcommand("faces", "Trace faces under a rotation, report chi and flowers");
    faces->add_option("input", input, "graph file or - for stdin");
    faces->add_option("--format", format, "g6|multipole")->capture_default_str();
    faces->add_option("--rotation-file", rotation_path, "rotation text (defaults to the generator's)");

    CLI11_PARSE(app, argc, argv);

    if (count->parsed()) return cmd_count(input, engine, format);
    if (scan->parsed()) return cmd_scan(input, csv, engine, jobs);
    if (certify->parsed()) {
        if (certify_mode != "planar-bound") {
            std::cerr << "error: unknown certify mode " << certify_mode << "\n";
            return 1;
        }
        return cmd_certify(input, format, out_path);
    }
    if (verify->parsed()) return cmd_verify(input);
    if (boundaries->parsed()) return cmd_boundaries(k, list);
    if (lp->parsed()) return cmd_lp(cycle, mode);
    if (gen->parsed()) return cmd_gen(family, param, format, rotation);
    if (flower->parsed()) return cmd_flower(k);
    if (faces->parsed()) return cmd_faces(input, format, rotation_path);
    return 1;
}
