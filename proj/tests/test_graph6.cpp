#include <doctest.h>

#include <sstream>

#include "cospec/catalog.hpp"
#include "cospec/graph6.hpp"
#include "cospec/random.hpp"

using namespace cospec;

namespace {

// Independent reference decoder: expands the body into an explicit bit
// string and reads the upper triangle column by column.
Graph reference_decode(const std::string& s) {
    size_t pos = 0;
    int n;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    }
    std::string bits;
    for (size_t i = pos; i < s.size(); ++i) {
        int v = s[i] - 63;
        for (int k = 5; k >= 0; --k) bits.push_back(((v >> k) & 1) ? '1' : '0');
    }
    Graph g(n);
    size_t b = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (bits.at(b++) == '1') g.add_edge(row, col);
    return g;
}

}  // namespace

TEST_CASE("graph6 decode of fixed codes") {
    Graph k1 = graph6::decode("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph g7 = graph6::decode("F{|Xw");
    CHECK(g7.order() == 7);
    CHECK(g7 == reference_decode("F{|Xw"));

    // 16-vertex tree with 15 edges
    Graph tree = graph6::decode("O@?KAC@?G?t?O???_?G?A");
    CHECK(tree.order() == 16);
    CHECK(tree.edge_count() == 15);
    CHECK(tree.is_connected());
    CHECK(tree == reference_decode("O@?KAC@?G?t?O???_?G?A"));
}

TEST_CASE("graph6 encode of fixed codes") {
    CHECK(graph6::encode(Graph(1)) == "@");
    CHECK(graph6::encode(graph6::decode("GE{SZW")) == "GE{SZW");
    CHECK(graph6::encode(graph6::decode("ItNPaGCI_")) == "ItNPaGCI_");
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(graph6::decode(""), MalformedGraph6);
    CHECK_THROWS_AS(graph6::decode("F"), MalformedGraph6);        // missing body
    CHECK_THROWS_AS(graph6::decode("F{|Xww"), MalformedGraph6);   // extra body
    CHECK_THROWS_AS(graph6::decode("F\x1b{|Xw"), MalformedGraph6);  // bad character
    CHECK_THROWS_AS(graph6::decode("ItNPaGCI_!"), MalformedGraph6);  // stray '!'

    // "A" + body with nonzero padding: n=2 needs 1 bit; 'o' = 101100
    CHECK_THROWS_AS(graph6::decode("Ao"), MalformedGraph6);
    Graph lenient = graph6::decode("Ao", /*strict=*/false);
    CHECK(lenient.order() == 2);
    CHECK(lenient.edge(0, 1));
}

TEST_CASE("graph6 longer size form") {
    Graph g(63);
    g.add_edge(0, 62);
    std::string code = graph6::encode(g);
    CHECK(code.rfind("~", 0) == 0);
    Graph back = graph6::decode(code);
    CHECK(back == g);
}

TEST_CASE("decode(encode(g)) round-trips on 1000 random graphs") {
    Rng rng(10007);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(n, 0.4, rng);
        Graph back = graph6::decode(graph6::encode(g));
        CHECK(back == g);
    }
}

TEST_CASE("encode(decode(s)) is the identity on canonical codes") {
    for (const std::string& code : {"F{|Xw", "FzE}w", "H?BF~z~", "JCO_?c]@_S?", "@", "GNKutO"})
        CHECK(graph6::encode(graph6::decode(code)) == code);
}

TEST_CASE("streaming the bundled seven-vertex codes yields 22 graphs on 7 vertices") {
    std::string file;
    for (const auto& [a, b] : catalog::seven_vertex_pairs()) file += a + "\n" + b + "\n";
    std::istringstream in(file);
    graph6::Reader reader(in);
    int count = 0;
    while (auto item = reader.next()) {
        CHECK(item->graph.order() == 7);
        ++count;
    }
    CHECK(count == 22);
}

TEST_CASE("stream reader") {
    std::istringstream in(">>graph6<<\nF{|Xw\n\nFzE}w\r\n@\n");
    graph6::Reader reader(in);
    std::vector<std::string> codes;
    while (auto item = reader.next()) codes.push_back(item->code);
    CHECK(codes == std::vector<std::string>{"F{|Xw", "FzE}w", "@"});

    std::istringstream empty("");
    graph6::Reader reader2(empty);
    CHECK(!reader2.next());

    std::istringstream bad("F{|Xw\nnope!\n@\n");
    graph6::Reader strict_reader(bad);
    CHECK(strict_reader.next());
    try {
        strict_reader.next();
        FAIL("expected MalformedGraph6");
    } catch (const MalformedGraph6& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream bad2("F{|Xw\nnope!\n@\n");
    graph6::Reader skipping(bad2, true, /*skip_malformed=*/true);
    std::vector<std::string> kept;
    while (auto item = skipping.next()) kept.push_back(item->code);
    CHECK(kept == std::vector<std::string>{"F{|Xw", "@"});
    CHECK(skipping.skipped() == 1);
}
