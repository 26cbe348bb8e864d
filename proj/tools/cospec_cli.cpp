// cospec: exact cospectral-graph toolbox over the shared C API.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cospec.h"

using nlohmann::json;

namespace {

int g_exit = 0;

std::string take(char* s) {
    std::string out = s ? s : "";
    cospec_string_free(s);
    return out;
}

[[noreturn]] void die(cospec_status) {
    std::cerr << "error: " << cospec_last_error() << "\n";
    std::exit(2);
}

void require_ok(cospec_status st) {
    if (st != COSPEC_OK) die(st);
}

std::string read_graph_arg(const std::string& arg) {
    if (arg != "-") return arg;
    std::string line;
    if (!std::getline(std::cin, line)) {
        std::cerr << "error: expected a graph6 line on stdin\n";
        std::exit(2);
    }
    return line;
}

unsigned long long default_seed() {
    if (const char* env = std::getenv("COSPEC_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void print_poly(const json& coeffs) {
    std::cout << "charpoly (ascending): [";
    for (size_t i = 0; i < coeffs.size(); ++i)
        std::cout << (i ? ", " : "") << coeffs[i].get<std::string>();
    std::cout << "]\n";
}

void print_matrix(const json& entries) {
    size_t width = 1;
    for (const json& row : entries)
        for (const json& cell : row) width = std::max(width, cell.get<std::string>().size());
    for (const json& row : entries) {
        for (size_t j = 0; j < row.size(); ++j) {
            std::string s = row[j].get<std::string>();
            std::cout << std::string(width - s.size() + (j ? 1 : 0), ' ') << s;
        }
        std::cout << "\n";
    }
}

void print_witness(const json& w) {
    std::cout << "witness blocks:\n";
    for (size_t i = 0; i < w["blocks"].size(); ++i) {
        std::cout << "B" << (i + 1) << ":\n";
        print_matrix(w["blocks"][i]);
    }
    std::cout << "det(S) = " << w["certificate"]["det"].get<std::string>() << "\n";
}

void print_reproduce(const json& rep) {
    for (const json& c : rep["checks"]) {
        std::printf("  [%s] %s (%.1f ms)\n", c["pass"].get<bool>() ? "PASS" : "FAIL",
                    c["label"].get<std::string>().c_str(), c["ms"].get<double>());
        std::string detail = c["detail"].get<std::string>();
        if (!detail.empty()) std::printf("         %s\n", detail.c_str());
    }
    std::printf("%s: %s (%.1f ms total)\n", rep["scenario"].get<std::string>().c_str(),
                rep["pass"].get<bool>() ? "PASS" : "FAIL", rep["total_ms"].get<double>());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and certification of cospectral graphs "
                 "(coalescing, block similarity matrices, census mining)"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON reports");

    unsigned long long seed = default_seed();
    int workers = 1;

    // ---- decode ----
    std::string arg_g6;
    CLI::App* decode = app.add_subcommand("decode", "decode a graph6 string ('-' = stdin)")->fallthrough();
    decode->add_option("graph6", arg_g6)->required();
    decode->callback([&] {
        cospec_graph* g = nullptr;
        require_ok(cospec_graph_decode(read_graph_arg(arg_g6).c_str(), 1, &g));
        char* out = nullptr;
        require_ok(cospec_graph_describe(g, &out));
        std::string desc = take(out);
        cospec_graph_free(g);
        if (as_json) {
            std::cout << desc << "\n";
            return;
        }
        json j = json::parse(desc);
        std::cout << "graph6: " << j["graph6"].get<std::string>() << "\nn: " << j["n"]
                  << "\nedges (" << j["edge_count"] << "):";
        for (const json& e : j["edges"]) std::cout << " " << e[0] << "-" << e[1];
        std::cout << "\nconnected: " << (j["connected"].get<bool>() ? "yes" : "no") << "\n";
    });

    // ---- encode ----
    int enc_n = 0;
    std::string enc_edges;
    CLI::App* encode = app.add_subcommand("encode", "encode an edge list as graph6")->fallthrough();
    encode->add_option("--n", enc_n, "vertex count")->required();
    encode->add_option("--edges", enc_edges, "comma-separated 0-based edges, e.g. 0-1,1-2");
    encode->callback([&] {
        std::vector<int> endpoints;
        std::stringstream ss(enc_edges);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t dash = item.find('-');
            if (dash == std::string::npos) {
                std::cerr << "error: malformed edge '" << item << "'\n";
                std::exit(2);
            }
            endpoints.push_back(std::stoi(item.substr(0, dash)));
            endpoints.push_back(std::stoi(item.substr(dash + 1)));
        }
        cospec_graph* g = nullptr;
        require_ok(cospec_graph_from_edges(enc_n, endpoints.data(), endpoints.size() / 2, &g));
        char* out = nullptr;
        require_ok(cospec_graph_encode(g, &out));
        cospec_graph_free(g);
        if (as_json)
            std::cout << json{{"schema", 1}, {"graph6", take(out)}}.dump(2) << "\n";
        else
            std::cout << take(out) << "\n";
    });

    // ---- matrix ----
    std::string kind = "dist";
    CLI::App* matrix = app.add_subcommand("matrix", "print the exact matrix of a graph")->fallthrough();
    matrix->add_option("graph6", arg_g6)->required();
    matrix->add_option("--kind", kind, "adj|dist|lap|siglap|qlap:Q|gendist:...");
    matrix->callback([&] {
        cospec_graph* g = nullptr;
        require_ok(cospec_graph_decode(read_graph_arg(arg_g6).c_str(), 1, &g));
        char* out = nullptr;
        require_ok(cospec_matrix_json(g, kind.c_str(), &out));
        cospec_graph_free(g);
        std::string body = take(out);
        if (as_json) {
            std::cout << body << "\n";
            return;
        }
        json j = json::parse(body);
        std::cout << "kind: " << j["kind"].get<std::string>() << "\n";
        print_matrix(j["entries"]);
    });

    // ---- charpoly ----
    CLI::App* cp = app.add_subcommand("charpoly", "exact characteristic polynomial")->fallthrough();
    cp->add_option("graph6", arg_g6)->required();
    cp->add_option("--kind", kind);
    cp->callback([&] {
        cospec_graph* g = nullptr;
        require_ok(cospec_graph_decode(read_graph_arg(arg_g6).c_str(), 1, &g));
        char* out = nullptr;
        require_ok(cospec_charpoly_json(g, kind.c_str(), &out));
        cospec_graph_free(g);
        std::string body = take(out);
        if (as_json)
            std::cout << body << "\n";
        else
            print_poly(json::parse(body)["coefficients"]);
    });

    // ---- cospectral ----
    std::string arg_g6_b;
    CLI::App* cosp = app.add_subcommand("cospectral", "compare charpolys of two graphs")->fallthrough();
    cosp->add_option("graph6_1", arg_g6)->required();
    cosp->add_option("graph6_2", arg_g6_b)->required();
    cosp->add_option("--kind", kind);
    cosp->callback([&] {
        cospec_graph *g1 = nullptr, *g2 = nullptr;
        require_ok(cospec_graph_decode(read_graph_arg(arg_g6).c_str(), 1, &g1));
        require_ok(cospec_graph_decode(read_graph_arg(arg_g6_b).c_str(), 1, &g2));
        int equal = 0;
        char* out = nullptr;
        require_ok(cospec_cospectral_json(g1, g2, kind.c_str(), &equal, &out));
        cospec_graph_free(g1);
        cospec_graph_free(g2);
        std::string body = take(out);
        if (as_json) {
            std::cout << body << "\n";
        } else {
            json j = json::parse(body);
            std::cout << "kind: " << j["kind"].get<std::string>() << "\ncospectral: "
                      << (equal ? "yes" : "no") << "\n";
            print_poly(j["charpoly_1"]);
            if (!equal) print_poly(j["charpoly_2"]);
        }
        if (!equal) g_exit = 1;
    });

    // ---- coalesce ----
    std::string base, partition, attach;
    CLI::App* coal = app.add_subcommand("coalesce", "glue rooted graphs onto partition classes")->fallthrough();
    coal->add_option("--base", base, "base graph6")->required();
    coal->add_option("--partition", partition, "classes 'a,b;c;...' (1-based)")->required();
    coal->add_option("--attach", attach, "per-class 'g6:root' list, comma separated")->required();
    coal->callback([&] {
        char* out = nullptr;
        require_ok(cospec_coalesce_json(base.c_str(), partition.c_str(), attach.c_str(), &out));
        std::string body = take(out);
        if (as_json) {
            std::cout << body << "\n";
            return;
        }
        json j = json::parse(body);
        std::cout << "graph6: " << j["graph6"].get<std::string>() << "\nn: " << j["n"]
                  << "\nlabels (i:j:k):";
        for (const json& l : j["labels"]) std::cout << " " << l.get<std::string>();
        std::cout << "\n";
    });

    // ---- find-sim ----
    bool sjjs = false, simultaneous = false;
    int trials = 64;
    long long coeff_bound = 1000000;
    CLI::App* find = app.add_subcommand("find-sim", "find a block-diagonal similarity matrix")->fallthrough();
    find->add_option("graph6_1", arg_g6)->required();
    find->add_option("graph6_2", arg_g6_b)->required();
    find->add_option("--partition", partition, "classes (default: one class)");
    find->add_option("--kind", kind);
    find->add_flag("--sjjs", sjjs, "require SJ = JS");
    find->add_flag("--simultaneous", simultaneous, "require all distance-t layers simultaneously");
    find->add_option("--seed", seed);
    find->add_option("--trials", trials);
    find->add_option("--coeff-bound", coeff_bound);
    find->callback([&] {
        int found = 0;
        char* out = nullptr;
        require_ok(cospec_find_similarity_json(read_graph_arg(arg_g6).c_str(),
                                               read_graph_arg(arg_g6_b).c_str(), partition.c_str(),
                                               kind.c_str(), sjjs, simultaneous, seed, trials,
                                               coeff_bound, &found, &out));
        std::string body = take(out);
        if (as_json) {
            std::cout << body << "\n";
        } else {
            json j = json::parse(body);
            std::cout << "solution space dimension: " << j["solution_space_dim"] << "\n";
            if (found)
                print_witness(j["witness"]);
            else
                std::cout << "no witness: " << j["nonexistence"]["statement"].get<std::string>()
                          << "\n";
        }
        if (!found) g_exit = 1;
    });

    // ---- verify-theorem ----
    int which = 0, vt_trials = 10;
    CLI::App* vt = app.add_subcommand("verify-theorem",
                                      "find a witness, extend it, verify coalesced pairs")->fallthrough();
    vt->add_option("which", which, "1 (L^q) | 2 (distance, SJ=JS) | 3 (generalized distance)")
        ->required();
    vt->add_option("graph6_1", arg_g6)->required();
    vt->add_option("graph6_2", arg_g6_b)->required();
    vt->add_option("--partition", partition);
    vt->add_option("--kind", kind);
    vt->add_option("--trials", vt_trials, "random attachment tuples to test");
    vt->add_option("--seed", seed);
    vt->callback([&] {
        int ok = 0;
        char* out = nullptr;
        require_ok(cospec_verify_theorem_json(which, read_graph_arg(arg_g6).c_str(),
                                              read_graph_arg(arg_g6_b).c_str(), partition.c_str(),
                                              kind.c_str(), vt_trials, seed, &ok, &out));
        std::string body = take(out);
        if (as_json) {
            std::cout << body << "\n";
        } else {
            json j = json::parse(body);
            if (!j["found"].get<bool>()) {
                std::cout << "no base witness: "
                          << j["nonexistence"]["statement"].get<std::string>() << "\n";
            } else {
                print_witness(j["witness"]);
                std::cout << "coalescing trials: " << j["coalescing_trials"].size()
                          << ", verified: " << (ok ? "yes" : "no") << "\n";
            }
        }
        if (!ok) g_exit = 1;
    });

    // ---- butler ----
    std::string v1, v2;
    CLI::App* butler = app.add_subcommand("butler", "two-class polynomial condition")->fallthrough();
    butler->add_option("graph6_1", arg_g6)->required();
    butler->add_option("graph6_2", arg_g6_b)->required();
    butler->add_option("--v1", v1, "first class, 1-based")->required();
    butler->add_option("--v2", v2, "second class, 1-based")->required();
    butler->callback([&] {
        int holds = 0;
        char* out = nullptr;
        require_ok(cospec_butler_json(read_graph_arg(arg_g6).c_str(),
                                      read_graph_arg(arg_g6_b).c_str(), v1.c_str(), v2.c_str(),
                                      &holds, &out));
        std::string body = take(out);
        if (as_json)
            std::cout << body << "\n";
        else
            std::cout << "condition holds: " << (holds ? "yes" : "no") << "\n";
        if (!holds) g_exit = 1;
    });

    // ---- mine ----
    std::string file;
    int enumerate_n = 0;
    bool classify = false, lenient = false;
    CLI::App* mine = app.add_subcommand("mine", "census mining over a graph6 stream")->fallthrough();
    mine->add_option("--file", file, "graph6 file, or '-' for stdin");
    mine->add_option("--enumerate", enumerate_n, "labeled enumeration for n <= 8");
    mine->add_option("--kind", kind);
    mine->add_flag("--classify-sjjs", classify, "split pairs by SJ=JS witness availability");
    mine->add_flag("--lenient", lenient, "ignore nonzero padding bits when decoding");
    mine->add_option("--workers", workers);
    mine->add_option("--seed", seed);
    mine->add_option("--trials", trials);
    mine->add_option("--coeff-bound", coeff_bound);
    mine->callback([&] {
        if (file.empty() == (enumerate_n == 0)) {
            std::cerr << "error: pass exactly one of --file or --enumerate\n";
            std::exit(2);
        }
        char* out = nullptr;
        if (!file.empty())
            require_ok(cospec_mine_file_json(file.c_str(), kind.c_str(), classify, workers, seed,
                                             trials, coeff_bound, lenient, &out));
        else
            require_ok(cospec_mine_enumerate_json(enumerate_n, kind.c_str(), classify, workers,
                                                  seed, trials, coeff_bound, &out));
        std::string body = take(out);
        if (as_json) {
            std::cout << body << "\n";
            return;
        }
        json j = json::parse(body);
        std::cout << "graphs read: " << j["graphs_read"]
                  << ", skipped disconnected: " << j["skipped_disconnected"]
                  << "\ncospectral pairs (" << j["kind"].get<std::string>()
                  << "): " << j["pair_count"] << "\n";
        for (const json& p : j["pairs"])
            std::cout << "  " << p[0].get<std::string>() << "  " << p[1].get<std::string>() << "\n";
        if (classify) {
            std::cout << "pairs without an SJ=JS witness: " << j["sjjs_negative"].size() << "\n";
            for (const json& p : j["sjjs_negative"])
                std::cout << "  " << p[0].get<std::string>() << "  " << p[1].get<std::string>()
                          << "\n";
        }
    });

    // ---- reproduce ----
    std::string scenario, n9_file;
    CLI::App* repro = app.add_subcommand("reproduce", "re-derive a bundled reference scenario")->fallthrough();
    repro->add_option("scenario", scenario, "fig1..fig8, census7, census9, or 'all'")->required();
    repro->add_option("--seed", seed);
    repro->add_option("--workers", workers);
    repro->add_option("--n9-file", n9_file, "connected 9-vertex graph6 file for census9");
    repro->callback([&] {
        std::vector<std::string> names;
        if (scenario == "all") {
            char* raw = nullptr;
            require_ok(cospec_reproduce_names(&raw));
            std::stringstream ss(take(raw));
            std::string line;
            while (std::getline(ss, line))
                if (line != "census9" || !n9_file.empty()) names.push_back(line);
        } else {
            names.push_back(scenario);
        }
        json all = json::array();
        bool pass_all = true;
        for (const std::string& name : names) {
            int pass = 0;
            char* out = nullptr;
            require_ok(cospec_reproduce_json(name.c_str(), seed, workers,
                                             n9_file.empty() ? nullptr : n9_file.c_str(), &pass,
                                             &out));
            json j = json::parse(take(out));
            pass_all = pass_all && pass;
            if (as_json)
                all.push_back(std::move(j));
            else
                print_reproduce(j);
        }
        if (as_json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
        if (!pass_all) g_exit = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return g_exit;
}
