#include "cospec.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "cospec/catalog.hpp"
#include "cospec/graph6.hpp"
#include "cospec/random.hpp"
#include "cospec/reproduce.hpp"
#include "cospec/search.hpp"
#include "cospec/verify.hpp"

using nlohmann::json;

struct cospec_graph {
    cospec::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cospec_status fail(cospec_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <class Fn>
cospec_status guard(Fn&& fn) {
    try {
        return fn();
    } catch (const cospec::MalformedGraph6& e) {
        return fail(COSPEC_ERR_PARSE, e.what());
    } catch (const cospec::NotConnected& e) {
        return fail(COSPEC_ERR_NOT_CONNECTED, e.what());
    } catch (const cospec::UseExternalFile& e) {
        return fail(COSPEC_ERR_UNSUPPORTED, e.what());
    } catch (const cospec::InvalidPartition& e) {
        return fail(COSPEC_ERR_INVALID, e.what());
    } catch (const cospec::ShapeError& e) {
        return fail(COSPEC_ERR_INVALID, e.what());
    } catch (const cospec::IndexError& e) {
        return fail(COSPEC_ERR_INVALID, e.what());
    } catch (const cospec::Error& e) {
        return fail(COSPEC_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(COSPEC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(COSPEC_ERR_INTERNAL, "unknown error");
    }
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw cospec::Error("empty vertex in list: " + text);
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw cospec::Error("malformed vertex: " + item);
        if (v < 1) throw cospec::Error("vertex indices are 1-based");
        out.push_back(v - 1);
    }
    if (out.empty()) throw cospec::Error("empty vertex list");
    return out;
}

// Classes separated by ';', vertices within a class by ','; 1-based.
cospec::Partition parse_partition(const std::string& text) {
    std::vector<std::vector<int>> classes;
    std::stringstream ss(text);
    std::string cls;
    while (std::getline(ss, cls, ';')) classes.push_back(parse_vertex_list(cls));
    return cospec::Partition(std::move(classes));
}

// "g6:root,g6:root,..." with 1-based roots; bare "g6" means root 1.
std::vector<cospec::RootedGraph> parse_attachments(const std::string& text) {
    std::vector<cospec::RootedGraph> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string code = item;
        int root = 1;
        size_t colon = item.rfind(':');
        if (colon != std::string::npos) {
            code = item.substr(0, colon);
            root = std::stoi(item.substr(colon + 1));
        }
        cospec::Graph g = cospec::graph6::decode(code);
        if (root < 1 || root > g.order()) throw cospec::Error("attachment root out of range");
        out.emplace_back(std::move(g), root - 1);
    }
    if (out.empty()) throw cospec::Error("empty attachment list");
    return out;
}

bool kind_needs_diameter(const std::string& text) {
    if (text.rfind("gendist:", 0) != 0) return false;
    std::string body = text.substr(8);
    return body == "identity" || body == "square" || body.rfind("exp:", 0) == 0 ||
           body.rfind("indicator:", 0) == 0;
}

cospec::MatrixKind kind_for(const std::string& text, const std::vector<const cospec::Graph*>& gs) {
    int d_max = -1;
    if (kind_needs_diameter(text)) {
        d_max = 0;
        for (const cospec::Graph* g : gs)
            d_max = std::max(d_max, cospec::all_pairs_distances(*g).diameter());
    }
    return cospec::parse_kind(text, d_max);
}

json poly_json(const cospec::Poly& p) {
    json arr = json::array();
    for (const cospec::Rat& c : p) arr.push_back(cospec::to_string(c));
    return arr;
}

json matrix_json_entries(const cospec::ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(cospec::to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json partition_json(const cospec::Partition& p) {
    json classes = json::array();
    for (const auto& cls : p.classes) {
        json c = json::array();
        for (int v : cls) c.push_back(v + 1);
        classes.push_back(std::move(c));
    }
    return classes;
}

json witness_json(const cospec::SimilarityWitness& w) {
    json blocks = json::array();
    for (const cospec::ExactMatrix& b : w.s.blocks) blocks.push_back(matrix_json_entries(b));
    json cert{{"det", cospec::to_string(w.certificate.det)},
              {"residual_zero", w.certificate.residual_zero}};
    if (w.certificate.sj_js_zero) cert["sj_js_zero"] = true;
    if (w.certificate.max_t >= 0) {
        cert["simultaneous_zero"] = w.certificate.simultaneous_zero;
        cert["max_t"] = w.certificate.max_t;
    }
    return json{{"blocks", std::move(blocks)},
                {"partition", partition_json(w.s.partition)},
                {"certificate", std::move(cert)}};
}

json nonexistence_json(const cospec::NonexistenceReport& r) {
    return json{{"verdict", r.verdict == cospec::NonexistenceReport::Verdict::NoSolutionSpace
                                ? "no_solution_space"
                                : "all_sampled_singular"},
                {"solution_space_dim", r.solution_space_dim},
                {"trials", r.trials},
                {"coeff_bound", r.coeff_bound},
                {"log10_error_bound", r.log10_error_bound},
                {"statement", r.statement}};
}

json census_json(const cospec::CensusReport& r) {
    json pairs = json::array();
    for (const cospec::CensusPair& p : r.pairs) pairs.push_back(json::array({p.first, p.second}));
    json neg = json::array();
    for (const cospec::CensusPair& p : r.sjjs_negative)
        neg.push_back(json::array({p.first, p.second}));
    return json{{"schema", 1},
                {"n", r.n},
                {"kind", r.kind},
                {"graphs_read", r.graphs_read},
                {"skipped_disconnected", r.skipped_disconnected},
                {"iso_classes", r.iso_classes},
                {"pair_count", r.pair_count},
                {"pairs", std::move(pairs)},
                {"sjjs_negative", std::move(neg)}};
}

cospec::SimilarityProblem make_problem(const char* g1_g6, const char* g2_g6,
                                       const char* partition, const char* kind,
                                       int require_sjjs, int simultaneous) {
    cospec::SimilarityProblem prob;
    prob.g1 = cospec::graph6::decode(g1_g6);
    prob.g2 = cospec::graph6::decode(g2_g6);
    prob.partition = partition && *partition
                         ? parse_partition(partition)
                         : cospec::Partition::single_class(prob.g1.order());
    prob.kind = kind_for(kind, {&prob.g1, &prob.g2});
    prob.constraints.require_sj_eq_js = require_sjjs != 0;
    prob.constraints.simultaneous_all_t = simultaneous != 0;
    return prob;
}

cospec::CensusReport mine_with_classify(cospec::GraphSource source, const std::string& kind_text,
                                        int classify, int workers, unsigned long long seed,
                                        int trials, long long coeff_bound) {
    cospec::MatrixKind kind = cospec::parse_kind(kind_text, -1);
    cospec::MineOptions mopts;
    mopts.workers = workers;
    cospec::CensusReport rep = cospec::mine_cospectral(std::move(source), kind, mopts);
    if (classify) {
        std::vector<std::pair<cospec::Graph, cospec::Graph>> pairs;
        for (const cospec::CensusPair& p : rep.pairs)
            pairs.emplace_back(cospec::graph6::decode(p.first), cospec::graph6::decode(p.second));
        cospec::ClassifyOptions copts;
        copts.seed = seed;
        copts.trials = trials;
        copts.coeff_bound = coeff_bound;
        copts.workers = workers;
        cospec::CensusReport cls = cospec::classify_sjjs(pairs, copts);
        rep.sjjs_negative = cls.sjjs_negative;
    }
    return rep;
}

}  // namespace

extern "C" {

const char* cospec_version(void) { return "1.0.0"; }

const char* cospec_last_error(void) { return g_last_error.c_str(); }

void cospec_string_free(char* s) { std::free(s); }

cospec_status cospec_graph_decode(const char* g6, int strict, cospec_graph** out) {
    if (!g6 || !out) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        *out = new cospec_graph{cospec::graph6::decode(g6, strict != 0)};
        return COSPEC_OK;
    });
}

cospec_status cospec_graph_from_edges(int n, const int* endpoints, size_t edge_count,
                                      cospec_graph** out) {
    if (!out || (edge_count && !endpoints)) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < edge_count; ++i)
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new cospec_graph{cospec::Graph::from_edges(n, edges)};
        return COSPEC_OK;
    });
}

cospec_status cospec_graph_encode(const cospec_graph* g, char** out_g6) {
    if (!g || !out_g6) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        *out_g6 = dup_string(cospec::graph6::encode(g->g));
        return COSPEC_OK;
    });
}

void cospec_graph_free(cospec_graph* g) { delete g; }

int cospec_graph_order(const cospec_graph* g) { return g ? g->g.order() : -1; }

int cospec_graph_size(const cospec_graph* g) { return g ? g->g.edge_count() : -1; }

cospec_status cospec_graph_describe(const cospec_graph* g, char** out_json) {
    if (!g || !out_json) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        json edges = json::array();
        for (int u = 0; u < g->g.order(); ++u)
            for (int v = u + 1; v < g->g.order(); ++v)
                if (g->g.edge(u, v)) edges.push_back(json::array({u, v}));
        json degrees = json::array();
        for (int u = 0; u < g->g.order(); ++u) degrees.push_back(g->g.degree(u));
        json j{{"schema", 1},
               {"n", g->g.order()},
               {"edge_count", g->g.edge_count()},
               {"edges", std::move(edges)},
               {"degree_sequence", std::move(degrees)},
               {"connected", g->g.is_connected()},
               {"graph6", cospec::graph6::encode(g->g)}};
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_matrix_json(const cospec_graph* g, const char* kind, char** out_json) {
    if (!g || !kind || !out_json) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::MatrixKind k = kind_for(kind, {&g->g});
        cospec::ExactMatrix m = cospec::build_matrix(g->g, k);
        json j{{"schema", 1},
               {"n", g->g.order()},
               {"kind", k.to_string()},
               {"entries", matrix_json_entries(m)}};
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_charpoly_json(const cospec_graph* g, const char* kind, char** out_json) {
    if (!g || !kind || !out_json) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::MatrixKind k = kind_for(kind, {&g->g});
        cospec::Poly p = cospec::charpoly(cospec::build_matrix(g->g, k));
        json j{{"schema", 1}, {"kind", k.to_string()}, {"coefficients", poly_json(p)}};
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_cospectral_json(const cospec_graph* g1, const cospec_graph* g2,
                                     const char* kind, int* out_equal, char** out_json) {
    if (!g1 || !g2 || !kind || !out_equal || !out_json)
        return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::MatrixKind k = kind_for(kind, {&g1->g, &g2->g});
        cospec::CospectralVerdict v = cospec::cospectral(g1->g, g2->g, k);
        *out_equal = v.equal ? 1 : 0;
        json j{{"schema", 1},
               {"kind", k.to_string()},
               {"equal", v.equal},
               {"charpoly_1", poly_json(v.charpoly_1)},
               {"charpoly_2", poly_json(v.charpoly_2)}};
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_coalesce_json(const char* base_g6, const char* partition,
                                   const char* attachments, char** out_json) {
    if (!base_g6 || !partition || !attachments || !out_json)
        return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::CoalescingSpec spec;
        spec.base = cospec::graph6::decode(base_g6);
        spec.partition = parse_partition(partition);
        spec.attachments = parse_attachments(attachments);
        cospec::CoalesceResult res = cospec::coalesce(spec);
        json labels = json::array();
        for (const cospec::VertexLabel& l : res.labels)
            labels.push_back(std::to_string(l.class_index) + ":" +
                             std::to_string(l.attach_vertex) + ":" + std::to_string(l.position));
        json j{{"schema", 1},
               {"n", res.graph.order()},
               {"edge_count", res.graph.edge_count()},
               {"graph6", cospec::graph6::encode(res.graph)},
               {"labels", std::move(labels)}};
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_find_similarity_json(const char* g1_g6, const char* g2_g6,
                                          const char* partition, const char* kind,
                                          int require_sjjs, int simultaneous,
                                          unsigned long long seed, int trials,
                                          long long coeff_bound, int* out_found,
                                          char** out_json) {
    if (!g1_g6 || !g2_g6 || !kind || !out_found || !out_json)
        return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::SimilarityProblem prob =
            make_problem(g1_g6, g2_g6, partition, kind, require_sjjs, simultaneous);
        cospec::FindResult res = cospec::find_block_similarity(prob, seed, trials, coeff_bound);
        *out_found = res.found() ? 1 : 0;
        json j{{"schema", 1},
               {"found", res.found()},
               {"solution_space_dim", res.solution_space_dim},
               {"kind", prob.kind.to_string()}};
        if (res.found())
            j["witness"] = witness_json(*res.witness);
        else
            j["nonexistence"] = nonexistence_json(*res.report);
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_check_similarity_json(const char* g1_g6, const char* g2_g6,
                                           const char* partition, const char* kind,
                                           int require_sjjs, int simultaneous,
                                           const char* blocks_json, int* out_ok,
                                           char** out_json) {
    if (!g1_g6 || !g2_g6 || !kind || !blocks_json || !out_ok || !out_json)
        return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::SimilarityProblem prob =
            make_problem(g1_g6, g2_g6, partition, kind, require_sjjs, simultaneous);
        json spec = json::parse(blocks_json);
        cospec::BlockSimilarity s;
        s.partition = prob.partition;
        for (const json& jb : spec) {
            int n = static_cast<int>(jb.size());
            cospec::ExactMatrix b(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    b.at(r, c) = cospec::rat_from_string(jb.at(r).at(c).get<std::string>());
            s.blocks.push_back(std::move(b));
        }
        cospec::CheckOutcome out = cospec::check_similarity(s, prob);
        *out_ok = out.ok() ? 1 : 0;
        json j{{"schema", 1}, {"ok", out.ok()}, {"kind", prob.kind.to_string()}};
        if (out.ok())
            j["witness"] = witness_json(*out.witness);
        else
            j["failure"] = json{{"reason", out.failure->reason},
                                {"block_i1", out.failure->block_i1},
                                {"block_i2", out.failure->block_i2}};
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_verify_theorem_json(int which, const char* g1_g6, const char* g2_g6,
                                         const char* partition, const char* kind,
                                         int random_trials, unsigned long long seed,
                                         int* out_ok, char** out_json) {
    if (!g1_g6 || !g2_g6 || !out_ok || !out_json)
        return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        if (which < 1 || which > 3) throw cospec::Error("theorem selector must be 1, 2 or 3");
        std::string kind_text = kind && *kind ? kind : (which == 1 ? "adj" : "dist");
        cospec::SimilarityProblem prob =
            make_problem(g1_g6, g2_g6, partition, kind_text.c_str(),
                         /*require_sjjs=*/which == 2, /*simultaneous=*/which == 3);
        if (which != 1 && prob.kind.tag == cospec::MatrixKind::Tag::QLaplacian)
            throw cospec::Error("theorems 2 and 3 are about distance-type matrices");
        if (which == 1 && prob.kind.tag != cospec::MatrixKind::Tag::QLaplacian)
            throw cospec::Error("theorem 1 needs a q-Laplacian kind (adj, lap, siglap, qlap:Q)");

        json j{{"schema", 1}, {"theorem", which}, {"kind", prob.kind.to_string()}};
        cospec::FindResult res = cospec::find_block_similarity(prob, seed);
        j["found"] = res.found();
        if (!res.found()) {
            j["nonexistence"] = nonexistence_json(*res.report);
            *out_ok = 0;
            *out_json = dup_string(j.dump(2));
            return COSPEC_OK;
        }
        j["witness"] = witness_json(*res.witness);

        cospec::Rng rng(seed + 17);
        json trials_log = json::array();
        bool all_ok = true;
        for (int t = 0; t < random_trials; ++t) {
            cospec::CoalescingSpec spec1{prob.g1, prob.partition, {}};
            for (size_t c = 0; c < prob.partition.size(); ++c)
                spec1.attachments.push_back(cospec::random_rooted_connected(4, rng));
            cospec::CoalescingSpec spec2 = spec1;
            spec2.base = prob.g2;

            cospec::BlockSimilarity ext = cospec::extend_similarity(res.witness->s, spec1);
            cospec::Graph c1 = cospec::coalesce(spec1).graph;
            cospec::Graph c2 = cospec::coalesce(spec2).graph;

            cospec::MatrixKind check_kind = prob.kind;
            if (which == 3) {
                int d_max = std::max(cospec::all_pairs_distances(c1).diameter(),
                                     cospec::all_pairs_distances(c2).diameter());
                check_kind = cospec::MatrixKind::generalized(cospec::random_ftable(d_max, rng));
            }
            cospec::SimilarityProblem cprob;
            cprob.g1 = c1;
            cprob.g2 = c2;
            cprob.partition = ext.partition;
            cprob.kind = check_kind;
            bool ok = cospec::check_similarity(ext, cprob).ok() &&
                      cospec::cospectral(c1, c2, check_kind).equal;
            all_ok = all_ok && ok;
            json item{{"ok", ok}, {"kind", check_kind.to_string()}};
            json att = json::array();
            for (const cospec::RootedGraph& h : spec1.attachments)
                att.push_back(cospec::graph6::encode(h.graph) + ":" + std::to_string(h.root + 1));
            item["attachments"] = std::move(att);
            trials_log.push_back(std::move(item));
        }
        j["coalescing_trials"] = std::move(trials_log);
        j["verified"] = all_ok;
        *out_ok = all_ok ? 1 : 0;
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_butler_json(const char* g1_g6, const char* g2_g6, const char* v1,
                                 const char* v2, int* out_holds, char** out_json) {
    if (!g1_g6 || !g2_g6 || !v1 || !v2 || !out_holds || !out_json)
        return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::Graph g1 = cospec::graph6::decode(g1_g6);
        cospec::Graph g2 = cospec::graph6::decode(g2_g6);
        bool holds = cospec::butler_condition(g1, g2, parse_vertex_list(v1), parse_vertex_list(v2));
        *out_holds = holds ? 1 : 0;
        json j{{"schema", 1}, {"holds", holds}, {"v1", v1}, {"v2", v2}};
        *out_json = dup_string(j.dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_mine_file_json(const char* path, const char* kind, int classify,
                                    int workers, unsigned long long seed, int trials,
                                    long long coeff_bound, int lenient, char** out_json) {
    if (!path || !kind || !out_json) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (std::string(path) != "-") {
            file.open(path);
            if (!file) {
                return fail(COSPEC_ERR_IO, std::string("cannot open ") + path);
            }
            in = &file;
        }
        cospec::graph6::Reader reader(*in, /*strict=*/lenient == 0, /*skip_malformed=*/false);
        cospec::CensusReport rep = mine_with_classify(
            [&]() -> std::optional<cospec::Graph> {
                std::optional<cospec::graph6::StreamItem> item = reader.next();
                if (!item) return std::nullopt;
                return std::move(item->graph);
            },
            kind, classify, workers, seed, trials, coeff_bound);
        *out_json = dup_string(census_json(rep).dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_mine_enumerate_json(int n, const char* kind, int classify, int workers,
                                         unsigned long long seed, int trials,
                                         long long coeff_bound, char** out_json) {
    if (!kind || !out_json) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::ConnectedEnumerator en(n);
        cospec::CensusReport rep = mine_with_classify([&] { return en.next(); }, kind, classify,
                                                      workers, seed, trials, coeff_bound);
        *out_json = dup_string(census_json(rep).dump(2));
        return COSPEC_OK;
    });
}

cospec_status cospec_reproduce_json(const char* scenario, unsigned long long seed, int workers,
                                    const char* nine_vertex_file, int* out_pass,
                                    char** out_json) {
    if (!scenario || !out_pass || !out_json) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        cospec::repro::Options opts;
        opts.seed = seed;
        opts.workers = workers;
        if (nine_vertex_file) opts.nine_vertex_file = nine_vertex_file;
        cospec::repro::Report rep = cospec::repro::run(scenario, opts);
        *out_pass = rep.pass ? 1 : 0;
        *out_json = dup_string(cospec::repro::report_to_json(rep));
        return COSPEC_OK;
    });
}

cospec_status cospec_reproduce_names(char** out_names) {
    if (!out_names) return fail(COSPEC_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        std::string all;
        for (const std::string& name : cospec::repro::scenario_names()) {
            if (!all.empty()) all += "\n";
            all += name;
        }
        *out_names = dup_string(all);
        return COSPEC_OK;
    });
}

}  // extern "C"
