#include "cospec/catalog.hpp"

#include "cospec/graph6.hpp"

namespace cospec {
namespace catalog {

namespace {

ExactMatrix scaled_block(const std::vector<std::vector<long>>& rows, long den) {
    ExactMatrix m = ExactMatrix::from_int(rows);
    return m.scaled(make_rat(1, den));
}

ExactMatrix unit_block() { return ExactMatrix::identity(1); }

// Classes given as 1-based vertex lists in graph6 order.
Partition part(std::vector<std::vector<int>> classes1) {
    for (auto& c : classes1)
        for (int& v : c) --v;
    return Partition(std::move(classes1));
}

std::vector<int> range1(int lo, int hi) {  // 1-based inclusive
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

SimilarityProblem SimilarityScenario::printed_problem(const MatrixKind& kind,
                                                      bool require_sjjs) const {
    SimilarityProblem prob;
    Graph a = graph6::decode(g_first);
    Graph b = graph6::decode(g_second);
    if (maps_second_to_first) {
        prob.g1 = std::move(b);
        prob.g2 = std::move(a);
    } else {
        prob.g1 = std::move(a);
        prob.g2 = std::move(b);
    }
    prob.partition = partition;
    prob.kind = kind;
    prob.constraints.require_sj_eq_js = require_sjjs;
    return prob;
}

CoalescingScenario fig1() {
    CoalescingScenario s;
    // Base: path 0-1-2-3 ending in the triangle {3,4,5}.
    s.spec.base = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    s.spec.partition = Partition({{0, 1, 2}, {3}, {4, 5}});
    // H1: path on 3 vertices rooted at an end; H2: a single vertex;
    // H3: triangle.
    s.spec.attachments = {
        RootedGraph(Graph::from_edges(3, {{0, 1}, {1, 2}}), 0),
        RootedGraph(Graph(1), 0),
        RootedGraph(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}), 0),
    };
    s.expected_base_distance = {
        {0, 1, 2, 3, 4, 4},
        {1, 0, 1, 2, 3, 3},
        {2, 1, 0, 1, 2, 2},
        {3, 2, 1, 0, 1, 1},
        {4, 3, 2, 1, 0, 1},
        {4, 3, 2, 1, 1, 0},
    };
    s.expected_coalesced_distance = {
        {0, 1, 2, 1, 2, 3, 2, 3, 4, 3, 4, 4, 5, 5, 5, 5},
        {1, 0, 1, 2, 1, 2, 3, 2, 3, 2, 3, 3, 4, 4, 4, 4},
        {2, 1, 0, 3, 2, 1, 4, 3, 2, 1, 2, 2, 3, 3, 3, 3},
        {1, 2, 3, 0, 3, 4, 1, 4, 5, 4, 5, 5, 6, 6, 6, 6},
        {2, 1, 2, 3, 0, 3, 4, 1, 4, 3, 4, 4, 5, 5, 5, 5},
        {3, 2, 1, 4, 3, 0, 5, 4, 1, 2, 3, 3, 4, 4, 4, 4},
        {2, 3, 4, 1, 4, 5, 0, 5, 6, 5, 6, 6, 7, 7, 7, 7},
        {3, 2, 3, 4, 1, 4, 5, 0, 5, 4, 5, 5, 6, 6, 6, 6},
        {4, 3, 2, 5, 4, 1, 6, 5, 0, 3, 4, 4, 5, 5, 5, 5},
        {3, 2, 1, 4, 3, 2, 5, 4, 3, 0, 1, 1, 2, 2, 2, 2},
        {4, 3, 2, 5, 4, 3, 6, 5, 4, 1, 0, 1, 1, 2, 1, 2},
        {4, 3, 2, 5, 4, 3, 6, 5, 4, 1, 1, 0, 2, 1, 2, 1},
        {5, 4, 3, 6, 5, 4, 7, 6, 5, 2, 1, 2, 0, 3, 1, 3},
        {5, 4, 3, 6, 5, 4, 7, 6, 5, 2, 2, 1, 3, 0, 3, 1},
        {5, 4, 3, 6, 5, 4, 7, 6, 5, 2, 1, 2, 1, 3, 0, 3},
        {5, 4, 3, 6, 5, 4, 7, 6, 5, 2, 2, 1, 3, 1, 3, 0},
    };
    return s;
}

ButlerScenario fig2() {
    ButlerScenario s;
    s.g_first = "F@AMw";
    s.g_second = "F@AZg";
    s.v1 = {0, 1, 2};
    s.v2 = {3, 4, 5, 6};
    s.partition = Partition({s.v1, s.v2});
    return s;
}

SimilarityScenario mckay() {
    SimilarityScenario s;
    s.name = "mckay";
    s.g_first = "O@?KAC@?G?t?O???_?G?A";
    s.g_second = "O@I?GC@PD?G??@??_?_?@";
    s.partition = part({{1}, {2}, range1(3, 16)});
    s.similarity.partition = s.partition;
    s.similarity.blocks = {unit_block(), unit_block(),
                           scaled_block(
                               {
                                   {20, 7, 7, -15, 16, 1, 3, 2, 15, -2, -6, 0, 19, -14},
                                   {7, 21, 21, 8, -5, 3, 9, 6, -8, -6, 0, 0, -14, 11},
                                   {20, 7, 7, -15, 16, 1, 3, 2, 15, -2, 19, -14, -6, 0},
                                   {7, 21, 21, 8, -5, 3, 9, 6, -8, -6, -14, 11, 0, 0},
                                   {-2, -6, -6, 28, 9, -16, 5, 21, 25, -21, 2, 6, 2, 6},
                                   {15, -8, -8, 2, 12, 14, -11, 28, -2, 25, -15, 8, -15, 8},
                                   {-16, 5, 5, 12, 19, 31, -13, 9, -12, -9, 16, -5, 16, -5},
                                   {-1, -3, -3, 14, 31, -8, 29, -16, -14, 16, 1, 3, 1, 3},
                                   {-3, -9, -9, -11, -13, 29, 34, 5, 11, -5, 3, 9, 3, 9},
                                   {2, 6, 6, 25, -9, 16, -5, -21, 28, 21, -2, -6, -2, -6},
                                   {-15, 8, 8, -2, -12, -14, 11, 25, 2, 28, 15, -8, 15, -8},
                                   {33, -7, -7, 15, -16, -1, -3, -2, -15, 2, 20, 7, 20, 7},
                                   {-7, 0, 11, -8, 5, -3, -9, -6, 8, 6, 7, 21, 7, 21},
                                   {-7, 11, 0, -8, 5, -3, -9, -6, 8, 6, 7, 21, 7, 21},
                               },
                               53)};
    s.maps_second_to_first = true;
    return s;
}

SimilarityScenario heysse() {
    SimilarityScenario s;
    s.name = "heysse";
    s.g_first = "ItNPaGCI_";  // published with a stray trailing '!', dropped here
    s.g_second = "ItJ`A?TI_";
    s.partition = part({{1}, {2}, range1(3, 10)});
    s.similarity.partition = s.partition;
    s.similarity.blocks = {unit_block(), unit_block(),
                           scaled_block(
                               {
                                   {5, 1, 2, 1, 2, 1, -3, -2},
                                   {-1, 4, 1, 4, 1, -3, 2, -1},
                                   {2, -1, 1, -1, 2, -1, 3, 2},
                                   {3, 2, -3, 2, -3, 2, 1, 3},
                                   {2, -1, 2, -1, 1, -1, 3, 2},
                                   {-1, -3, 1, 4, 1, 4, 2, -1},
                                   {-1, 4, 1, -3, 1, 4, 2, -1},
                                   {-2, 1, 2, 1, 2, 1, -3, 5},
                               },
                               7)};
    s.maps_second_to_first = true;
    return s;
}

SimilarityScenario three_class() {
    SimilarityScenario s;
    s.name = "three_class";
    s.g_first = "GNKutO";
    s.g_second = "GB}XV_";
    s.partition = part({{1}, {2}, range1(3, 8)});
    s.similarity.partition = s.partition;
    s.similarity.blocks = {unit_block(), unit_block(),
                           scaled_block(
                               {
                                   {0, 1, 1, -1, 1, 0},
                                   {1, 0, 1, 0, -1, 1},
                                   {1, 1, 0, 1, 0, -1},
                                   {1, 0, -1, 0, 1, 1},
                                   {-1, 1, 0, 1, 0, 1},
                                   {0, -1, 1, 1, 1, 0},
                               },
                               2)};
    s.maps_second_to_first = true;
    return s;
}

Partition three_class_four_way() { return part({{1}, {2}, {3, 4, 5}, {6, 7, 8}}); }

std::vector<std::pair<std::string, std::string>> seven_vertex_pairs() {
    return {
        {"F{|Xw", "FzE}w"}, {"FBnWw", "FCS~w"}, {"F^UXw", "FWl}w"}, {"FM]ww", "FHd^w"},
        {"FVSsW", "FOnRW"}, {"FEhwo", "F@Q^o"}, {"FfUPW", "F_luW"}, {"FyJ{o", "F|oZo"},
        {"F^UPW", "FWluW"}, {"FndPW", "Fg]uW"}, {"FqyWo", "Ft@]o"},
    };
}

std::pair<std::string, std::string> seven_vertex_exception() { return {"FqyWo", "Ft@]o"}; }

SimilarityScenario seven_vertex_common(const std::string& g_first, const std::string& g_second) {
    SimilarityScenario s;
    s.name = "seven_vertex";
    s.g_first = g_first;
    s.g_second = g_second;
    s.partition = part({{1}, {2}, {3}, {4, 5, 6, 7}});
    s.similarity.partition = s.partition;
    s.similarity.blocks = {unit_block(), unit_block(), unit_block(),
                           scaled_block(
                               {
                                   {-1, 1, 1, 1},
                                   {1, -1, 1, 1},
                                   {1, 1, -1, 1},
                                   {1, 1, 1, -1},
                               },
                               2)};
    s.maps_second_to_first = false;  // involutory, valid in both directions
    return s;
}

SimilarityScenario unions_a() {
    SimilarityScenario s;
    s.name = "unions_a";
    s.g_first = "GE{SZW";
    s.g_second = "GEBb{w";
    s.partition = part({{1}, {2}, {3}, {4}, {5, 6, 7, 8}});
    s.similarity.partition = s.partition;
    s.similarity.blocks = {unit_block(), unit_block(), unit_block(), unit_block(),
                           scaled_block(
                               {
                                   {-1, 1, 1, 1},
                                   {1, -1, 1, 1},
                                   {1, 1, -1, 1},
                                   {1, 1, 1, -1},
                               },
                               2)};
    s.maps_second_to_first = false;
    return s;
}

SimilarityScenario unions_b() {
    SimilarityScenario s;
    s.name = "unions_b";
    s.g_first = "GE{SZW";
    s.g_second = "GEBb{w";
    s.partition = part({range1(1, 7), {8}});
    s.similarity.partition = s.partition;
    s.similarity.blocks = {scaled_block(
                               {
                                   {-1, 1, 1, 1, 0, 0, 0},
                                   {1, 1, 0, 0, 0, 1, -1},
                                   {1, 0, 0, 1, 1, -1, 0},
                                   {1, 0, 1, 0, -1, 0, 1},
                                   {0, 0, -1, 1, 0, 1, 1},
                                   {0, -1, 1, 0, 1, 1, 0},
                                   {0, 1, 0, -1, 1, 0, 1},
                               },
                               2),
                           unit_block()};
    s.maps_second_to_first = true;
    return s;
}

std::vector<std::pair<std::string, std::string>> nine_vertex_negative_pairs() {
    return {
        {"H?BF~z~", "H?Bvfn~"}, {"HCXjZ^~", "HCdcv~~"}, {"H?`@f~~", "H?`E]^~"},
        {"H?BDzz~", "H?`E^~}"}, {"H?`Ffz~", "H?`E^~}"}, {"H??EF~}", "H??Ffb~"},
        {"H?ze||~", "HCpV~z^"}, {"H??EFbN", "H?ABBBz"},
    };
}

SimilarityScenario generalized_distance() {
    SimilarityScenario s;
    s.name = "generalized_distance";
    s.g_first = "JCO_?c]@_S?";
    s.g_second = "JCO_?sAB_k?";
    s.partition = part({{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8, 9, 10, 11}});
    s.similarity.partition = s.partition;
    s.similarity.blocks = {unit_block(), unit_block(), unit_block(), unit_block(),
                           unit_block(), unit_block(), unit_block(),
                           scaled_block(
                               {
                                   {1, 1, -1, 1},
                                   {1, -1, 1, 1},
                                   {-1, 1, 1, 1},
                                   {1, 1, 1, -1},
                               },
                               2)};
    s.maps_second_to_first = false;
    return s;
}

}  // namespace catalog
}  // namespace cospec
