#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "tldp/classify.hpp"
#include "tldp/graph.hpp"

using namespace tldp;

namespace {

Wve2cGraph rotate(const Wve2cGraph& g, std::size_t k) {
    Wve2cGraph out;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.vertex_weights.push_back(g.vertex_weights[(i + k) % n]);
        out.edge_weights.push_back(g.edge_weights[(i + k) % n]);
    }
    return out;
}

CompleteFan fan_of(const AdmissibleTriple& t) { return fan_from_triple(t); }

// Exhaustive search for a map in GL_2(Z) carrying the generator set of f1
// onto that of f2: any such map sends (n1, n2) to an ordered pair of
// distinct generators of f2, so solving for every candidate image pair
// covers all possibilities.
bool unimodular_equivalent(const CompleteFan& f1, const CompleteFan& f2) {
    if (f1.nu() != f2.nu()) return false;
    const Vec &a = f1.gen[0], &b = f1.gen[1];
    Int d = det(a, b);
    for (const Vec& u : f2.gen) {
        for (const Vec& v : f2.gen) {
            if (u == v) continue;
            Int m00 = u.x * b.y - v.x * a.y, m01 = -u.x * b.x + v.x * a.x;
            Int m10 = u.y * b.y - v.y * a.y, m11 = -u.y * b.x + v.y * a.x;
            if (m00 % d != 0 || m01 % d != 0 || m10 % d != 0 || m11 % d != 0) continue;
            m00 /= d; m01 /= d; m10 /= d; m11 /= d;
            Int mdet = m00 * m11 - m01 * m10;
            if (mdet != 1 && mdet != -1) continue;
            std::vector<Vec> image;
            for (const Vec& g : f1.gen)
                image.push_back(Vec{m00 * g.x + m01 * g.y, m10 * g.x + m11 * g.y});
            bool onto = true;
            for (const Vec& w : image)
                if (std::find(f2.gen.begin(), f2.gen.end(), w) == f2.gen.end()) onto = false;
            if (onto) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("graph_of") {
    CompleteFan f = fan_of({{ConePQ{2, 3}, ConePQ{0, 1}, ConePQ{0, 1}}});
    Wve2cGraph g = graph_of(f);
    REQUIRE(g.vertex_weights == std::vector<Int>{0, 0, 3});
    REQUIRE(g.edge_weights == std::vector<ConePQ>{{2, 3}, {0, 1}, {0, 1}});

    Wve2cGraph p2 = graph_of(build_fan({{1, 0}, {0, 1}, {-1, -1}}));
    REQUIRE(p2.vertex_weights == std::vector<Int>{1, 1, 1});
    REQUIRE(p2.edge_weights == std::vector<ConePQ>{{0, 1}, {0, 1}, {0, 1}});

    Wve2cGraph ix = graph_of(fan_of({{ConePQ{7, 9}, ConePQ{4, 9}, ConePQ{1, 9}}}));
    REQUIRE(ix.vertex_weights == std::vector<Int>{-1, -1, -1});
    REQUIRE(ix.edge_weights == std::vector<ConePQ>{{7, 9}, {4, 9}, {1, 9}});

    REQUIRE_THROWS_AS(graph_of(build_fan({{1, 0}, {0, 1}, {-1, -1}}), std::vector<Int>{1}),
                      std::invalid_argument);
}

TEST_CASE("reverse_graph") {
    Wve2cGraph g = graph_of(fan_of({{ConePQ{2, 3}, ConePQ{5, 6}, ConePQ{1, 9}}}));
    Wve2cGraph rev = reverse_graph(g);
    std::vector<Int> rev_ps;
    for (const ConePQ& e : rev.edge_weights) rev_ps.push_back(e.p);
    std::sort(rev_ps.begin(), rev_ps.end());
    REQUIRE(rev_ps == std::vector<Int>{1, 2, 5});  // socius values of 2, 5, 1
    REQUIRE(reverse_graph(rev) == g);

    Wve2cGraph p2 = graph_of(build_fan({{1, 0}, {0, 1}, {-1, -1}}));
    REQUIRE(reverse_graph(p2) == p2);
}

TEST_CASE("canonical key invariances") {
    std::vector<AdmissibleTriple> triples = {
        {{ConePQ{2, 3}, ConePQ{0, 1}, ConePQ{0, 1}}},
        {{ConePQ{2, 3}, ConePQ{5, 6}, ConePQ{1, 9}}},
        {{ConePQ{7, 9}, ConePQ{4, 9}, ConePQ{1, 9}}},
        {{ConePQ{17, 24}, ConePQ{1, 4}, ConePQ{1, 4}}},
    };
    for (const AdmissibleTriple& t : triples) {
        Wve2cGraph g = graph_of(fan_of(t));
        CanonicalKey key = canonical_key(g);
        for (std::size_t k = 0; k < g.size(); ++k) REQUIRE(canonical_key(rotate(g, k)) == key);
        REQUIRE(canonical_key(reverse_graph(g)) == key);
    }
}

TEST_CASE("isomorphism decisions") {
    Wve2cGraph ab1 = graph_of(fan_of({{ConePQ{2, 3}, ConePQ{2, 3}, ConePQ{1, 6}}}));
    Wve2cGraph ab2 = graph_of(fan_of({{ConePQ{2, 3}, ConePQ{1, 6}, ConePQ{2, 3}}}));
    REQUIRE(isomorphic(ab1, ab2));
    REQUIRE(isomorphic(ab1, ab1));

    // the quadruple sharing one class
    Wve2cGraph ex1 = graph_of(fan_of({{ConePQ{2, 3}, ConePQ{5, 6}, ConePQ{1, 9}}}));
    Wve2cGraph ex2 = graph_of(fan_of({{ConePQ{5, 6}, ConePQ{2, 3}, ConePQ{1, 9}}}));
    REQUIRE(isomorphic(ex1, ex2));

    // distinct classes stay distinct
    Wve2cGraph row_i = graph_of(fan_of({{ConePQ{2, 3}, ConePQ{0, 1}, ConePQ{0, 1}}}));
    Wve2cGraph row_v = graph_of(fan_of({{ConePQ{5, 6}, ConePQ{0, 1}, ConePQ{0, 1}}}));
    REQUIRE_FALSE(isomorphic(row_i, row_v));
    Wve2cGraph row_iii = graph_of(fan_of({{ConePQ{2, 3}, ConePQ{1, 2}, ConePQ{1, 5}}}));
    Wve2cGraph row_iv = graph_of(fan_of({{ConePQ{2, 3}, ConePQ{2, 3}, ConePQ{1, 6}}}));
    REQUIRE_FALSE(isomorphic(row_iii, row_iv));
}

TEST_CASE("graph isomorphism matches unimodular equivalence of fans") {
    // Two-sided check on every pair of admissible triples of index 3 plus
    // the classified fans of indices 1 and 2.
    std::vector<CompleteFan> fans;
    for (const AdmissibleTriple& t : enumerate_admissible(3)) fans.push_back(fan_of(t));
    for (int ell : {1, 2})
        for (const SurfaceRecord& rec : classify(ell)) fans.push_back(rec.fan);
    std::vector<CanonicalKey> keys;
    for (const CompleteFan& f : fans) keys.push_back(canonical_key(graph_of(f)));
    for (std::size_t i = 0; i < fans.size(); ++i)
        for (std::size_t j = 0; j < fans.size(); ++j)
            REQUIRE((keys[i] == keys[j]) == unimodular_equivalent(fans[i], fans[j]));
}

TEST_CASE("DOT emission") {
    std::string dot = to_dot(graph_of(fan_of({{ConePQ{2, 3}, ConePQ{0, 1}, ConePQ{0, 1}}})));
    REQUIRE(dot.find("v0 [label=\"0\"]") != std::string::npos);
    REQUIRE(dot.find("v2 [label=\"3\"]") != std::string::npos);
    REQUIRE(dot.find("[label=\"(2,3)\"]") != std::string::npos);
    // trivial (0,1) weights stay unlabeled
    REQUIRE(dot.find("(0,1)") == std::string::npos);
    REQUIRE(dot.find("v1 -- v2;") != std::string::npos);
}
