#include <doctest.h>

#include "cospec/catalog.hpp"
#include "cospec/graph6.hpp"
#include "cospec/random.hpp"
#include "cospec/similarity.hpp"
#include "cospec/verify.hpp"

using namespace cospec;

TEST_CASE("identity certificate on a single class") {
    Graph g = graph6::decode("F{|Xw");
    SimilarityProblem prob{g, g, Partition::single_class(7), MatrixKind::distance(), {}};
    BlockSimilarity s{{ExactMatrix::identity(7)}, prob.partition};
    CheckOutcome out = check_similarity(s, prob);
    REQUIRE(out.ok());
    CHECK(out.witness->certificate.det == 1);
    CHECK(out.witness->certificate.residual_zero);
}

TEST_CASE("printed certificates verify in their stated direction") {
    for (const catalog::SimilarityScenario& sc :
         {catalog::mckay(), catalog::heysse(), catalog::three_class(), catalog::unions_a(),
          catalog::unions_b()}) {
        CAPTURE(sc.name);
        CheckOutcome out =
            check_similarity(sc.similarity, sc.printed_problem(MatrixKind::distance(), true));
        CHECK(out.ok());
    }
    // The involutory certificates also work with the graphs swapped.
    catalog::SimilarityScenario seven =
        catalog::seven_vertex_common("F{|Xw", "FzE}w");
    SimilarityProblem fwd = seven.printed_problem(MatrixKind::distance(), true);
    std::swap(fwd.g1, fwd.g2);
    CHECK(check_similarity(seven.similarity, fwd).ok());
}

TEST_CASE("check_similarity reports the first violated block equation") {
    Graph g1 = graph6::decode("F{|Xw");
    Graph g2 = graph6::decode("FzE}w");
    SimilarityProblem prob{g1, g2, Partition::single_class(7), MatrixKind::distance(), {}};
    BlockSimilarity s{{ExactMatrix::identity(7)}, prob.partition};
    CheckOutcome out = check_similarity(s, prob);  // I only works for g1 = g2
    REQUIRE(!out.ok());
    CHECK(out.failure->block_i1 == 1);
    CHECK(out.failure->block_i2 == 1);

    BlockSimilarity zero{{ExactMatrix(7, 7)}, prob.partition};
    CheckOutcome singular = check_similarity(zero, prob);
    REQUIRE(!singular.ok());
    CHECK(singular.failure->reason.find("singular") != std::string::npos);

    BlockSimilarity misshaped{{ExactMatrix::identity(6)}, prob.partition};
    CHECK_THROWS_AS(check_similarity(misshaped, prob), ShapeError);
}

TEST_CASE("find_block_similarity on the seven-vertex pair keeps the printed S in its span") {
    catalog::SimilarityScenario sc = catalog::seven_vertex_common("F{|Xw", "FzE}w");
    SimilarityProblem prob = sc.printed_problem(MatrixKind::distance(), true);
    FindResult res = find_block_similarity(prob, 42);
    REQUIRE(res.found());
    // soundness: the returned witness re-verifies exactly
    CHECK(check_similarity(res.witness->s, prob).ok());
    // the printed certificate is in the solution space: substitution passes
    CHECK(check_similarity(sc.similarity, prob).ok());
}

TEST_CASE("find_block_similarity is deterministic given the seed") {
    Graph g1 = graph6::decode("F{|Xw");
    Graph g2 = graph6::decode("FzE}w");
    SimilarityProblem prob{g1, g2, Partition::single_class(7), MatrixKind::distance(),
                           {.require_sj_eq_js = true}};
    FindResult a = find_block_similarity(prob, 7);
    FindResult b = find_block_similarity(prob, 7);
    REQUIRE(a.found());
    REQUIRE(b.found());
    CHECK(a.witness->s.blocks[0] == b.witness->s.blocks[0]);
}

TEST_CASE("nonexistence on the two-class adjacency problem") {
    catalog::ButlerScenario sc = catalog::fig2();
    Graph g1 = graph6::decode(sc.g_first);
    Graph g2 = graph6::decode(sc.g_second);
    SimilarityProblem prob{g1, g2, sc.partition, MatrixKind::adjacency(), {}};
    FindResult res = find_block_similarity(prob, 1);
    REQUIRE(!res.found());
    REQUIRE(res.report.has_value());
    // validated offline: the commutation system only has the zero solution
    CHECK(res.report->verdict == NonexistenceReport::Verdict::NoSolutionSpace);
    CHECK(res.report->solution_space_dim == 0);
    CHECK(res.report->log10_error_bound <= -200.0 + 200.0);  // exact verdict, bound is 0
}

TEST_CASE("probabilistic nonexistence carries the sampling bound") {
    // First 9-vertex negative pair: the SJ=JS solution space is nontrivial
    // yet apparently contains no invertible element.
    auto neg = catalog::nine_vertex_negative_pairs()[0];
    Graph g1 = graph6::decode(neg.first);
    Graph g2 = graph6::decode(neg.second);
    SimilarityProblem prob{g1, g2, Partition::single_class(9), MatrixKind::distance(),
                           {.require_sj_eq_js = true}};
    FindResult res = find_block_similarity(prob, 4, 64, 1000000);
    REQUIRE(!res.found());
    REQUIRE(res.report.has_value());
    CHECK(res.report->verdict == NonexistenceReport::Verdict::AllSampledSingular);
    CHECK(res.report->solution_space_dim > 0);
    CHECK(res.report->trials == 64);
    CHECK(res.report->coeff_bound == 1000000);
    // 64 * log10(9 / 2000001) = -342.2...
    CHECK(res.report->log10_error_bound < -342.0);
    CHECK(res.report->log10_error_bound > -343.0);
    CHECK(res.report->statement.find("(9/2000001)^64") != std::string::npos);
}

TEST_CASE("identical graphs always admit a witness on one class") {
    Graph g = graph6::decode("GE{SZW");
    for (const MatrixKind& kind :
         {MatrixKind::distance(), MatrixKind::adjacency(), MatrixKind::qlaplacian(1)}) {
        SimilarityProblem prob{g, g, Partition::single_class(8), kind, {}};
        FindResult res = find_block_similarity(prob, 3);
        CHECK(res.found());
    }
}

TEST_CASE("extend_similarity repeats blocks per attachment order") {
    catalog::SimilarityScenario sc = catalog::heysse();
    SimilarityProblem prob = sc.printed_problem(MatrixKind::distance(), true);

    // All-K1 attachments: S-hat has the same blocks as S.
    CoalescingSpec trivial{prob.g1, sc.partition,
                           std::vector<RootedGraph>(3, RootedGraph(Graph(1), 0))};
    BlockSimilarity same = extend_similarity(sc.similarity, trivial);
    REQUIRE(same.blocks.size() == 3);
    CHECK(same.blocks[2] == sc.similarity.blocks[2]);

    // H = path on 3 vertices rooted at an end glued on the third class:
    // S-hat = (1) + (1) + B3 + B3 + B3 and it passes on the coalesced pair.
    RootedGraph p3(Graph::from_edges(3, {{0, 1}, {1, 2}}), 0);
    CoalescingSpec spec1{prob.g1, sc.partition,
                         {RootedGraph(Graph(1), 0), RootedGraph(Graph(1), 0), p3}};
    CoalescingSpec spec2 = spec1;
    spec2.base = prob.g2;
    BlockSimilarity extended = extend_similarity(sc.similarity, spec1);
    REQUIRE(extended.blocks.size() == 1 + 1 + 3);
    CHECK(extended.blocks[2] == sc.similarity.blocks[2]);
    CHECK(extended.blocks[4] == sc.similarity.blocks[2]);

    SimilarityProblem cprob;
    cprob.g1 = coalesce(spec1).graph;
    cprob.g2 = coalesce(spec2).graph;
    cprob.partition = extended.partition;
    cprob.kind = MatrixKind::distance();
    cprob.constraints.require_sj_eq_js = true;
    CHECK(check_similarity(extended, cprob).ok());
}

TEST_CASE("extended seven-vertex certificate passes for random attachments") {
    catalog::SimilarityScenario sc = catalog::seven_vertex_common("FBnWw", "FCS~w");
    SimilarityProblem prob = sc.printed_problem(MatrixKind::distance(), true);
    Rng rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        CoalescingSpec spec1{prob.g1, sc.partition, {}};
        for (size_t i = 0; i < sc.partition.size(); ++i)
            spec1.attachments.push_back(random_rooted_connected(3, rng));
        CoalescingSpec spec2 = spec1;
        spec2.base = prob.g2;
        BlockSimilarity extended = extend_similarity(sc.similarity, spec1);
        SimilarityProblem cprob;
        cprob.g1 = coalesce(spec1).graph;
        cprob.g2 = coalesce(spec2).graph;
        cprob.partition = extended.partition;
        cprob.kind = MatrixKind::distance();
        CHECK(check_similarity(extended, cprob).ok());
    }
}

TEST_CASE("theorem-level extension properties for all three kinds") {
    // Build a base witness for each hypothesis on the seven-vertex pair and
    // check the extended certificate on coalesced pairs.
    Graph g1 = graph6::decode("F{|Xw");
    Graph g2 = graph6::decode("FzE}w");
    Partition part = catalog::seven_vertex_common("F{|Xw", "FzE}w").partition;
    Rng rng(909);

    struct Case {
        MatrixKind kind;
        SimilarityConstraints constraints;
        bool gen_distance_conclusion;
    };
    std::vector<Case> cases;
    cases.push_back({MatrixKind::distance(), {.require_sj_eq_js = true}, false});
    cases.push_back({MatrixKind::distance(), {.simultaneous_all_t = true}, true});

    for (const Case& c : cases) {
        SimilarityProblem prob{g1, g2, part, c.kind, c.constraints};
        FindResult res = find_block_similarity(prob, 31337);
        REQUIRE(res.found());
        for (int trial = 0; trial < 5; ++trial) {
            CoalescingSpec spec1{g1, part, {}};
            for (size_t i = 0; i < part.size(); ++i)
                spec1.attachments.push_back(random_rooted_connected(3, rng));
            CoalescingSpec spec2 = spec1;
            spec2.base = g2;
            Graph c1 = coalesce(spec1).graph;
            Graph c2 = coalesce(spec2).graph;
            BlockSimilarity extended = extend_similarity(res.witness->s, spec1);

            MatrixKind conclusion = c.kind;
            if (c.gen_distance_conclusion) {
                int d_max = std::max(all_pairs_distances(c1).diameter(),
                                     all_pairs_distances(c2).diameter());
                conclusion = MatrixKind::generalized(random_ftable(d_max, rng));
            }
            SimilarityProblem cprob;
            cprob.g1 = c1;
            cprob.g2 = c2;
            cprob.partition = extended.partition;
            cprob.kind = conclusion;
            CHECK(check_similarity(extended, cprob).ok());
            CHECK(cospectral(c1, c2, conclusion).equal);
        }
    }

    // q-Laplacian: cospectral pair for L^(q) with q = 0 (adjacency); the
    // two-class pair with an explicit witness is exercised via theorem 1 in
    // the verify tests; here a one-class identity-style case suffices.
    SimilarityProblem qprob{g1, g1, Partition::single_class(7), MatrixKind::qlaplacian(2), {}};
    FindResult qres = find_block_similarity(qprob, 5);
    REQUIRE(qres.found());
    CoalescingSpec qspec{g1, qprob.partition, {random_rooted_connected(3, rng)}};
    BlockSimilarity qext = extend_similarity(qres.witness->s, qspec);
    SimilarityProblem qcheck;
    qcheck.g1 = qcheck.g2 = coalesce(qspec).graph;
    qcheck.partition = qext.partition;
    qcheck.kind = MatrixKind::qlaplacian(2);
    CHECK(check_similarity(qext, qcheck).ok());
}

TEST_CASE("non-contiguous partition classes scatter and extend correctly") {
    Graph g = graph6::decode("F{|Xw");
    Partition part({{0, 5}, {1, 2, 3, 4}, {6}});
    SimilarityProblem prob{g, g, part, MatrixKind::distance(), {.require_sj_eq_js = true}};
    FindResult res = find_block_similarity(prob, 77);
    REQUIRE(res.found());

    Rng rng(78);
    CoalescingSpec spec{g, part, {}};
    for (size_t i = 0; i < part.size(); ++i)
        spec.attachments.push_back(random_rooted_connected(3, rng));
    BlockSimilarity extended = extend_similarity(res.witness->s, spec);
    Graph coalesced = coalesce(spec).graph;
    SimilarityProblem cprob;
    cprob.g1 = cprob.g2 = coalesced;
    cprob.partition = extended.partition;
    cprob.kind = MatrixKind::distance();
    cprob.constraints.require_sj_eq_js = true;
    CHECK(check_similarity(extended, cprob).ok());
}

TEST_CASE("block-level J commutation holds for constrained witnesses") {
    Graph g1 = graph6::decode("FM]ww");
    Graph g2 = graph6::decode("FHd^w");
    Partition part = catalog::seven_vertex_common("FM]ww", "FHd^w").partition;
    SimilarityProblem prob{g1, g2, part, MatrixKind::distance(), {.require_sj_eq_js = true}};
    FindResult res = find_block_similarity(prob, 2);
    REQUIRE(res.found());
    const BlockSimilarity& s = res.witness->s;
    for (size_t i1 = 0; i1 < part.size(); ++i1)
        for (size_t i2 = 0; i2 < part.size(); ++i2) {
            int n1 = static_cast<int>(part.classes[i1].size());
            int n2 = static_cast<int>(part.classes[i2].size());
            CHECK(s.blocks[i1] * ExactMatrix::ones(n1, n2) ==
                  ExactMatrix::ones(n1, n2) * s.blocks[i2]);
        }
}
