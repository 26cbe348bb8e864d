#include "cospec/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "cospec/catalog.hpp"
#include "cospec/graph6.hpp"
#include "cospec/random.hpp"
#include "cospec/search.hpp"
#include "cospec/verify.hpp"

namespace cospec {
namespace repro {

namespace {

using Clock = std::chrono::steady_clock;

class Runner {
public:
    explicit Runner(std::string scenario) { report_.scenario = std::move(scenario); }

    void check(const std::string& label, const std::function<std::pair<bool, std::string>()>& fn) {
        Clock::time_point t0 = Clock::now();
        Check c;
        c.label = label;
        try {
            auto [pass, detail] = fn();
            c.pass = pass;
            c.detail = detail;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        c.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report_.checks.push_back(std::move(c));
    }

    Report finish() {
        report_.pass = true;
        report_.total_ms = 0;
        for (const Check& c : report_.checks) {
            report_.pass = report_.pass && c.pass;
            report_.total_ms += c.ms;
        }
        return std::move(report_);
    }

private:
    Report report_;
};

std::pair<bool, std::string> yes(std::string detail = "") { return {true, std::move(detail)}; }
std::pair<bool, std::string> no(std::string detail) { return {false, std::move(detail)}; }

bool matrix_equals_int(const ExactMatrix& m, const std::vector<std::vector<long>>& expected) {
    if (m.rows() != static_cast<int>(expected.size())) return false;
    for (int i = 0; i < m.rows(); ++i) {
        if (m.cols() != static_cast<int>(expected[static_cast<size_t>(i)].size())) return false;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != Rat(expected[static_cast<size_t>(i)][static_cast<size_t>(j)]))
                return false;
    }
    return true;
}

// One-to-one matching of pair lists up to isomorphism of the members.
bool pairs_match_up_to_iso(const std::vector<CensusPair>& found,
                           const std::vector<std::pair<std::string, std::string>>& expected) {
    if (found.size() != expected.size()) return false;
    std::vector<bool> used(found.size(), false);
    for (const auto& [ea, eb] : expected) {
        Graph ga = graph6::decode(ea);
        Graph gb = graph6::decode(eb);
        bool matched = false;
        for (size_t i = 0; i < found.size() && !matched; ++i) {
            if (used[i]) continue;
            Graph fa = graph6::decode(found[i].first);
            Graph fb = graph6::decode(found[i].second);
            if ((isomorphic(ga, fa) && isomorphic(gb, fb)) ||
                (isomorphic(ga, fb) && isomorphic(gb, fa))) {
                used[i] = true;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

Partition two_way_partition(int n, const std::vector<int>& special) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (std::find(special.begin(), special.end(), v) == special.end()) rest.push_back(v);
    return Partition({special, rest});
}

Report run_fig1(const Options&) {
    Runner r("fig1");
    catalog::CoalescingScenario sc = catalog::fig1();
    r.check("base distance matrix matches the worked 6x6 table", [&] {
        ExactMatrix d = build_matrix(sc.spec.base, MatrixKind::distance());
        return matrix_equals_int(d, sc.expected_base_distance)
                   ? yes()
                   : no("BFS distance matrix differs");
    });
    r.check("coalesced graph has 16 vertices and BFS matches the 16x16 table", [&] {
        CoalesceResult res = coalesce(sc.spec);
        if (res.graph.order() != 16) return no("vertex count " + std::to_string(res.graph.order()));
        ExactMatrix d = build_matrix(res.graph, MatrixKind::distance());
        return matrix_equals_int(d, sc.expected_coalesced_distance) ? yes()
                                                                    : no("distance matrix differs");
    });
    r.check("block-shift assembly reproduces the same 16x16 matrix", [&] {
        ExactMatrix d = shifted_block_matrix(sc.spec, MatrixKind::distance());
        return matrix_equals_int(d, sc.expected_coalesced_distance) ? yes()
                                                                    : no("shifted assembly differs");
    });
    return r.finish();
}

Report run_fig2(const Options& opts) {
    Runner r("fig2");
    catalog::ButlerScenario sc = catalog::fig2();
    Graph g1 = graph6::decode(sc.g_first);
    Graph g2 = graph6::decode(sc.g_second);
    r.check("pair is adjacency-cospectral", [&] {
        return cospectral(g1, g2, MatrixKind::adjacency()).equal ? yes() : no("charpolys differ");
    });
    r.check("two-class polynomial condition holds for {1,2,3} | {4,5,6,7}", [&] {
        return butler_condition(g1, g2, sc.v1, sc.v2) ? yes() : no("condition violated");
    });
    r.check("no conforming block similarity exists (adjacency, same classes)", [&] {
        SimilarityProblem prob{g1, g2, sc.partition, MatrixKind::adjacency(), {}};
        FindResult res = find_block_similarity(prob, opts.seed, kDefaultTrials, kDefaultCoeffBound);
        if (res.found()) return no("unexpected witness found");
        const NonexistenceReport& rep = *res.report;
        if (rep.verdict == NonexistenceReport::Verdict::AllSampledSingular &&
            rep.log10_error_bound > -200.0)
            return no("error bound too weak: 10^" + std::to_string(rep.log10_error_bound));
        return yes(rep.statement);
    });
    return r.finish();
}

Report run_fig3(const Options& opts) {
    Runner r("fig3");
    catalog::SimilarityScenario sc = catalog::mckay();
    Graph g1 = graph6::decode(sc.g_first);
    Graph g2 = graph6::decode(sc.g_second);
    r.check("both graphs are 16-vertex trees, distance-cospectral", [&] {
        if (g1.order() != 16 || g2.order() != 16 || g1.edge_count() != 15 || g2.edge_count() != 15)
            return no("not 16-vertex trees");
        return cospectral(g1, g2, MatrixKind::distance()).equal ? yes() : no("not cospectral");
    });
    r.check("explicit (1)+(1)+(1/53)[14x14] certificate verifies with SJ=JS", [&] {
        SimilarityProblem prob = sc.printed_problem(MatrixKind::distance(), true);
        CheckOutcome out = check_similarity(sc.similarity, prob);
        return out.ok() ? yes("det = " + to_string(out.witness->certificate.det))
                        : no(out.failure->reason);
    });
    r.check("coalescing 10 random trees (<=8 vertices) at vertex 1 stays cospectral", [&] {
        Rng rng(opts.seed + 301);
        Partition partition = two_way_partition(16, {0});
        for (int i = 0; i < 10; ++i) {
            std::uniform_int_distribution<int> size(2, 8);
            RootedGraph tree(random_tree(size(rng), rng), 0);
            CospectralVerdict v = verify_coalesced_cospectral(
                g1, g2, partition, {tree, RootedGraph(Graph(1), 0)}, MatrixKind::distance());
            if (!v.equal) return no("tree " + graph6::encode(tree.graph) + " breaks cospectrality");
        }
        return yes("10 random trees preserved");
    });
    return r.finish();
}

Report run_fig4(const Options& opts) {
    Runner r("fig4");
    {
        catalog::SimilarityScenario sc = catalog::heysse();
        Graph g1 = graph6::decode(sc.g_first);
        Graph g2 = graph6::decode(sc.g_second);
        r.check("10-vertex pair is distance-cospectral", [&] {
            if (g1.order() != 10 || g2.order() != 10) return no("not 10 vertices");
            return cospectral(g1, g2, MatrixKind::distance()).equal ? yes() : no("not cospectral");
        });
        r.check("explicit (1)+(1)+(1/7)[8x8] certificate verifies with SJ=JS", [&] {
            CheckOutcome out =
                check_similarity(sc.similarity, sc.printed_problem(MatrixKind::distance(), true));
            return out.ok() ? yes() : no(out.failure->reason);
        });
        r.check("10 random connected H preserve cospectrality at vertex 1, vertex 2, and both", [&] {
            Rng rng(opts.seed + 401);
            for (int i = 0; i < 10; ++i) {
                RootedGraph h = random_rooted_connected(5, rng);
                RootedGraph k1(Graph(1), 0);
                for (int v : {0, 1}) {
                    CospectralVerdict verdict = verify_coalesced_cospectral(
                        g1, g2, two_way_partition(10, {v}), {h, k1}, MatrixKind::distance());
                    if (!verdict.equal)
                        return no("H " + graph6::encode(h.graph) + " breaks at vertex " +
                                  std::to_string(v + 1));
                }
                std::vector<int> rest;
                for (int v = 2; v < 10; ++v) rest.push_back(v);
                CospectralVerdict verdict = verify_coalesced_cospectral(
                    g1, g2, Partition({{0}, {1}, rest}), {h, h, k1}, MatrixKind::distance());
                if (!verdict.equal)
                    return no("H " + graph6::encode(h.graph) + " breaks at vertices 1+2");
            }
            return yes("10 random H preserved");
        });
    }
    {
        catalog::SimilarityScenario sc = catalog::three_class();
        Graph g1 = graph6::decode(sc.g_first);
        Graph g2 = graph6::decode(sc.g_second);
        r.check("3-class certificate (1)+(1)+(1/2)[6x6] verifies with SJ=JS", [&] {
            CheckOutcome out =
                check_similarity(sc.similarity, sc.printed_problem(MatrixKind::distance(), true));
            return out.ok() ? yes() : no(out.failure->reason);
        });
        r.check("extended certificate passes on 10 random attachment triples", [&] {
            Rng rng(opts.seed + 402);
            SimilarityProblem base = sc.printed_problem(MatrixKind::distance(), true);
            for (int i = 0; i < 10; ++i) {
                CoalescingSpec spec1{base.g1, sc.partition, {}};
                for (size_t c = 0; c < sc.partition.size(); ++c)
                    spec1.attachments.push_back(random_rooted_connected(4, rng));
                CoalescingSpec spec2 = spec1;
                spec2.base = base.g2;
                BlockSimilarity extended = extend_similarity(sc.similarity, spec1);
                SimilarityProblem coalesced;
                coalesced.g1 = coalesce(spec1).graph;
                coalesced.g2 = coalesce(spec2).graph;
                coalesced.partition = extended.partition;
                coalesced.kind = MatrixKind::distance();
                coalesced.constraints.require_sj_eq_js = true;
                CheckOutcome out = check_similarity(extended, coalesced);
                if (!out.ok()) return no("triple " + std::to_string(i) + ": " + out.failure->reason);
            }
            return yes("10 random triples verified");
        });
        r.check("4-class refinement has no conforming similarity (reported, exact or sampled)", [&] {
            SimilarityProblem prob{g1, g2, catalog::three_class_four_way(),
                                   MatrixKind::distance(), {.require_sj_eq_js = true}};
            FindResult res =
                find_block_similarity(prob, opts.seed, kDefaultTrials, kDefaultCoeffBound);
            return res.found() ? no("unexpected witness") : yes(res.report->statement);
        });
    }
    return r.finish();
}

Report run_fig5(const Options& opts) {
    Runner r("fig5");
    auto pairs = catalog::seven_vertex_pairs();
    r.check("all 11 pairs are distance-cospectral and the common certificate verifies", [&] {
        for (const auto& [a, b] : pairs) {
            catalog::SimilarityScenario sc = catalog::seven_vertex_common(a, b);
            CheckOutcome out =
                check_similarity(sc.similarity, sc.printed_problem(MatrixKind::distance(), true));
            if (!out.ok()) return no(a + "," + b + ": " + out.failure->reason);
        }
        return yes("11/11 verified with SJ=JS");
    });
    r.check("simultaneous single-block witness exists for exactly the 10 robust pairs", [&] {
        auto exception = catalog::seven_vertex_exception();
        int hits = 0;
        for (const auto& [a, b] : pairs) {
            SimilarityProblem prob;
            prob.g1 = graph6::decode(a);
            prob.g2 = graph6::decode(b);
            prob.partition = Partition::single_class(7);
            prob.kind = MatrixKind::distance();
            prob.constraints.simultaneous_all_t = true;
            FindResult res =
                find_block_similarity(prob, opts.seed + 501, kDefaultTrials, kDefaultCoeffBound);
            bool is_exception = (a == exception.first && b == exception.second);
            if (is_exception && res.found()) return no("exception pair has a simultaneous witness");
            if (!is_exception && !res.found()) return no(a + "," + b + ": no simultaneous witness");
            if (res.found()) ++hits;
        }
        return hits == 10 ? yes("10 witnesses, 1 negative")
                          : no("unexpected count " + std::to_string(hits));
    });
    r.check("a concrete f-table separates the exception pair", [&] {
        auto [a, b] = catalog::seven_vertex_exception();
        Graph g1 = graph6::decode(a);
        Graph g2 = graph6::decode(b);
        std::optional<DistanceFunction> f = find_breaking_ftable(g1, g2, 3);
        if (!f) return no("no table with values 0..3 separates the pair");
        MatrixKind kind = MatrixKind::generalized(*f);
        if (cospectral(g1, g2, kind).equal) return no("reported table does not separate");
        std::string tbl;
        for (size_t i = 0; i < f->values.size(); ++i)
            tbl += (i ? "," : "") + to_string(f->values[i]);
        return yes("f = (" + tbl + ")");
    });
    return r.finish();
}

Report run_fig6(const Options&) {
    Runner r("fig6");
    catalog::SimilarityScenario sa = catalog::unions_a();
    catalog::SimilarityScenario sb = catalog::unions_b();
    Graph g1 = graph6::decode(sa.g_first);
    Graph g2 = graph6::decode(sa.g_second);
    r.check("both explicit certificates verify with SJ=JS", [&] {
        CheckOutcome oa = check_similarity(sa.similarity, sa.printed_problem(MatrixKind::distance(), true));
        if (!oa.ok()) return no("singleton-form certificate: " + oa.failure->reason);
        CheckOutcome ob = check_similarity(sb.similarity, sb.printed_problem(MatrixKind::distance(), true));
        if (!ob.ok()) return no("{1..7}|{8} certificate: " + ob.failure->reason);
        return yes();
    });
    r.check("every rooted H with <=4 vertices preserves cospectrality at vertex 1 and at vertex 8", [&] {
        RootedGraph k1(Graph(1), 0);
        int tried = 0;
        for (const RootedGraph& h : all_rooted_connected(4)) {
            if (h.graph.order() == 1) continue;
            ++tried;
            for (int v : {0, 7}) {
                CospectralVerdict verdict = verify_coalesced_cospectral(
                    g1, g2, two_way_partition(8, {v}), {h, k1}, MatrixKind::distance());
                if (!verdict.equal)
                    return no("H " + graph6::encode(h.graph) + " root " +
                              std::to_string(h.root + 1) + " breaks at vertex " + std::to_string(v + 1));
            }
        }
        return yes(std::to_string(tried) + " rooted graphs tested");
    });
    r.check("some H with <=4 vertices breaks simultaneous coalescing on {1,8}", [&] {
        RootedGraph k1(Graph(1), 0);
        Partition both = two_way_partition(8, {0, 7});
        for (const RootedGraph& h : all_rooted_connected(4)) {
            if (h.graph.order() == 1) continue;
            CospectralVerdict verdict = verify_coalesced_cospectral(g1, g2, both, {h, k1},
                                                                    MatrixKind::distance());
            if (!verdict.equal)
                return yes("H = " + graph6::encode(h.graph) + " root " + std::to_string(h.root + 1));
        }
        return no("no H with <=4 vertices breaks the pair");
    });
    return r.finish();
}

Report run_fig7(const Options& opts) {
    Runner r("fig7");
    auto pairs = catalog::nine_vertex_negative_pairs();
    r.check("all 8 pairs are 9-vertex distance-cospectral", [&] {
        for (const auto& [a, b] : pairs) {
            Graph g1 = graph6::decode(a);
            Graph g2 = graph6::decode(b);
            if (g1.order() != 9 || g2.order() != 9) return no(a + "," + b + ": not 9 vertices");
            if (!cospectral(g1, g2, MatrixKind::distance()).equal)
                return no(a + "," + b + ": not cospectral");
        }
        return yes();
    });
    r.check("single-block SJ=JS search is negative for every pair", [&] {
        std::vector<std::pair<Graph, Graph>> gpairs;
        for (const auto& [a, b] : pairs)
            gpairs.emplace_back(graph6::decode(a), graph6::decode(b));
        ClassifyOptions copts;
        copts.seed = opts.seed;
        copts.workers = opts.workers;
        CensusReport rep = classify_sjjs(gpairs, copts);
        return rep.sjjs_negative.size() == 8
                   ? yes()
                   : no(std::to_string(rep.sjjs_negative.size()) + "/8 negative");
    });
    r.check("all-vertex coalescing is broken by a small H for every pair", [&] {
        std::string found;
        for (const auto& [a, b] : pairs) {
            ConjectureCheckReport rep =
                conjecture_counterexample_check(graph6::decode(a), graph6::decode(b), 4);
            if (!rep.found) return no(a + "," + b + ": no breaking H with <=4 vertices");
            found = rep.breaking_h_g6;
        }
        return yes("example breaking H: " + found);
    });
    return r.finish();
}

Report run_fig8(const Options& opts) {
    Runner r("fig8");
    catalog::SimilarityScenario sc = catalog::generalized_distance();
    Graph g1 = graph6::decode(sc.g_first);
    Graph g2 = graph6::decode(sc.g_second);
    r.check("certificate is a simultaneous witness across every distance layer", [&] {
        SimilarityProblem prob = sc.printed_problem(MatrixKind::distance(), false);
        prob.constraints.simultaneous_all_t = true;
        CheckOutcome out = check_similarity(sc.similarity, prob);
        if (!out.ok()) return no(out.failure->reason);
        return yes("verified for t = 0.." + std::to_string(out.witness->certificate.max_t));
    });
    r.check("random f-tables keep the pair cospectral for the generalized distance matrix", [&] {
        Rng rng(opts.seed + 801);
        DistanceTable d1 = all_pairs_distances(g1);
        int d_max = d1.diameter();
        for (int i = 0; i < 8; ++i) {
            DistanceFunction f = random_ftable(d_max, rng);
            if (!cospectral(g1, g2, MatrixKind::generalized(f)).equal)
                return no("table broke cospectrality");
        }
        return yes("8 random tables");
    });
    r.check("unions of every subset of distance classes are adjacency-cospectral", [&] {
        int diam = all_pairs_distances(g1).diameter();
        int checked = 0;
        for (uint32_t mask = 0; mask < (1u << diam); ++mask) {
            std::vector<int> ts;
            for (int t = 1; t <= diam; ++t)
                if ((mask >> (t - 1)) & 1) ts.push_back(t);
            Graph u1 = union_distance_graphs(g1, ts);
            Graph u2 = union_distance_graphs(g2, ts);
            if (!cospectral(u1, u2, MatrixKind::adjacency()).equal)
                return no("subset failed at mask " + std::to_string(mask));
            ++checked;
        }
        return yes(std::to_string(checked) + " subsets checked");
    });
    r.check("complements are adjacency-cospectral", [&] {
        return cospectral(g1.complement(), g2.complement(), MatrixKind::adjacency()).equal
                   ? yes()
                   : no("complements differ");
    });
    return r.finish();
}

Report run_census7(const Options& opts) {
    Runner r("census7");
    r.check("no cospectral pairs on six or fewer vertices", [&] {
        for (int n = 1; n <= 6; ++n) {
            ConnectedEnumerator en(n);
            CensusReport rep = mine_cospectral([&] { return en.next(); },
                                               MatrixKind::distance(), {opts.workers});
            if (rep.pair_count != 0)
                return no("n=" + std::to_string(n) + ": " + std::to_string(rep.pair_count) +
                          " pairs");
        }
        return yes();
    });
    r.check("seven-vertex census finds exactly the 11 known pairs", [&] {
        ConnectedEnumerator en(7);
        CensusReport rep = mine_cospectral([&] { return en.next(); }, MatrixKind::distance(),
                                           {opts.workers});
        if (rep.iso_classes != 853)
            return no(std::to_string(rep.iso_classes) + " connected graphs up to isomorphism");
        if (rep.pair_count != 11) return no(std::to_string(rep.pair_count) + " pairs found");
        if (!pairs_match_up_to_iso(rep.pairs, catalog::seven_vertex_pairs()))
            return no("pair set does not match the reference list");
        return yes("853 graphs, 11 pairs matching as unordered sets up to isomorphism");
    });
    return r.finish();
}

Report run_census9(const Options& opts) {
    Runner r("census9");
    if (opts.nine_vertex_file.empty()) {
        r.check("census9 requires an external graph6 file of connected 9-vertex graphs", [&] {
            return no("no input file configured");
        });
        return r.finish();
    }
    std::ifstream in(opts.nine_vertex_file);
    if (!in) {
        r.check("open input file", [&] { return no("cannot open " + opts.nine_vertex_file); });
        return r.finish();
    }
    CensusReport rep;
    r.check("mine finds 14597 distance-cospectral pairs", [&] {
        graph6::Reader reader(in, true, false);
        rep = mine_cospectral(
            [&]() -> std::optional<Graph> {
                std::optional<graph6::StreamItem> item = reader.next();
                if (!item) return std::nullopt;
                return std::move(item->graph);
            },
            MatrixKind::distance(), {opts.workers});
        return rep.pair_count == 14597 ? yes()
                                       : no(std::to_string(rep.pair_count) + " pairs found");
    });
    r.check("classification marks exactly the 8 known pairs negative", [&] {
        std::vector<std::pair<Graph, Graph>> gpairs;
        for (const CensusPair& p : rep.pairs)
            gpairs.emplace_back(graph6::decode(p.first), graph6::decode(p.second));
        ClassifyOptions copts;
        copts.seed = opts.seed;
        copts.workers = opts.workers;
        CensusReport cls = classify_sjjs(gpairs, copts);
        if (cls.sjjs_negative.size() != 8)
            return no(std::to_string(cls.sjjs_negative.size()) + " negative pairs");
        if (!pairs_match_up_to_iso(cls.sjjs_negative, catalog::nine_vertex_negative_pairs()))
            return no("negative set does not match the reference list");
        return yes();
    });
    return r.finish();
}

}  // namespace

std::vector<std::string> scenario_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "census7", "census9"};
}

Report run(const std::string& name, const Options& opts) {
    if (name == "fig1") return run_fig1(opts);
    if (name == "fig2") return run_fig2(opts);
    if (name == "fig3") return run_fig3(opts);
    if (name == "fig4") return run_fig4(opts);
    if (name == "fig5") return run_fig5(opts);
    if (name == "fig6") return run_fig6(opts);
    if (name == "fig7") return run_fig7(opts);
    if (name == "fig8") return run_fig8(opts);
    if (name == "census7") return run_census7(opts);
    if (name == "census9") return run_census9(opts);
    throw Error("unknown scenario: " + name);
}

std::string report_to_json(const Report& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["scenario"] = report.scenario;
    j["pass"] = report.pass;
    j["total_ms"] = report.total_ms;
    j["checks"] = nlohmann::json::array();
    for (const Check& c : report.checks) {
        j["checks"].push_back({{"label", c.label},
                               {"pass", c.pass},
                               {"detail", c.detail},
                               {"ms", c.ms}});
    }
    return j.dump(2);
}

}  // namespace repro
}  // namespace cospec
