#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "tldp/cone.hpp"

using namespace tldp;

namespace {

// Right-fold evaluation b1 - 1/(b2 - 1/(...)) as an exact rational.
Rat eval_hj(const std::vector<Int>& b) {
    Rat v = b.back();
    for (std::size_t i = b.size() - 1; i-- > 0;) v = Rat(b[i]) - 1 / v;
    return v;
}

std::vector<Int> pattern(std::vector<Int> head, Int twos, std::vector<Int> tail) {
    for (Int i = 0; i < twos; ++i) head.push_back(2);
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

}  // namespace

TEST_CASE("hj_expansion on known pairs") {
    REQUIRE(hj_expansion({5, 12}) == std::vector<Int>{2, 4, 2});
    REQUIRE(hj_expansion({4, 9}) == std::vector<Int>{2, 5});
    REQUIRE(hj_expansion({7, 9}) == std::vector<Int>{5, 2});
    REQUIRE(hj_expansion({2, 3}) == std::vector<Int>{3});
    REQUIRE_THROWS_AS(hj_expansion({0, 1}), std::invalid_argument);
}

TEST_CASE("hj_expansion evaluates to q/(q-p) for all coprime pairs, q <= 200") {
    for (long q = 2; q <= 200; ++q)
        for (long p = 1; p < q; ++p) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            std::vector<Int> b = hj_expansion({p, q});
            for (const Int& bj : b) REQUIRE(bj >= 2);
            REQUIRE(eval_hj(b) == Rat(q, q - p));
        }
}

TEST_CASE("local_index") {
    REQUIRE(local_index({2, 3}) == 3);
    REQUIRE(local_index({1, 7}) == 1);
    REQUIRE(local_index({5, 12}) == 3);
    REQUIRE(local_index({0, 1}) == 1);
    REQUIRE(local_index({3, 4}) == 2);
}

TEST_CASE("index 3 iff member of set A or B, q <= 200") {
    REQUIRE(index3_membership({2, 3}) == Index3Set::A);
    REQUIRE(index3_membership({5, 6}) == Index3Set::B);
    REQUIRE(index3_membership({1, 9}) == Index3Set::none);
    for (long q = 2; q <= 200; ++q)
        for (long p = 1; p < q; ++p) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            bool member = index3_membership({p, q}) != Index3Set::none;
            REQUIRE(member == (local_index({p, q}) == 3));
        }
}

TEST_CASE("socius closed forms on sets A and B, q <= 200") {
    for (long q = 2; q <= 200; ++q)
        for (long p = 1; p < q; ++p) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            ConePQ c{p, q};
            Index3Set m = index3_membership(c);
            if (m == Index3Set::none) continue;
            Int ph = socius(c);
            if (q % 9 != 0) {
                REQUIRE(ph == p);
            } else if (m == Index3Set::A) {
                REQUIRE(ph == 2 * p - 1);
            } else {
                REQUIRE(2 * ph == p + 1);
            }
        }
}

TEST_CASE("continued fraction closed forms on sets A and B, q <= 100") {
    for (long q = 2; q <= 100; ++q)
        for (long p = 1; p < q; ++p) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            ConePQ c{p, q};
            Index3Set m = index3_membership(c);
            if (m == Index3Set::none) continue;
            std::vector<Int> b = hj_expansion(c);
            if (m == Index3Set::A && q % 9 != 0) {
                if (p == 2) REQUIRE(b == std::vector<Int>{3});
                else if (p == 5) REQUIRE(b == std::vector<Int>{2, 4, 2});
                else REQUIRE(b == pattern({2, 3}, Int((q - 3) / 9 - 2), {3, 2}));
            } else if (m == Index3Set::A) {
                if (p == 4) REQUIRE(b == std::vector<Int>{2, 5});
                else REQUIRE(b == pattern({2, 3}, Int(q / 9 - 2), {4}));
            } else if (q % 9 != 0) {
                if (p == 5) REQUIRE(b == std::vector<Int>{6});
                else REQUIRE(b == pattern({4}, Int((q - 6) / 9 - 1), {4}));
            } else {
                if (p == 7) REQUIRE(b == std::vector<Int>{5, 2});
                else REQUIRE(b == pattern({4}, Int(q / 9 - 2), {3, 2}));
            }
        }
}

TEST_CASE("local K self-intersection") {
    REQUIRE(local_K_self_intersection({2, 3}) == Rat(-1, 3));
    REQUIRE(local_K_self_intersection({5, 12}) == Rat(-4, 3));
    for (long q = 2; q <= 30; ++q) REQUIRE(local_K_self_intersection({1, q}) == 0);
    REQUIRE(local_K_self_intersection({5, 6}) == Rat(-8, 3));
    REQUIRE(local_K_self_intersection({0, 1}) == 0);
}

TEST_CASE("resolution rays") {
    SECTION("(1,0),(2,3)") {
        std::vector<Vec> u = resolution_rays({1, 0}, {2, 3});
        REQUIRE(u == std::vector<Vec>{{1, 0}, {1, 1}, {2, 3}});
    }
    SECTION("basic cone has no interior rays") {
        REQUIRE(resolution_rays({1, 0}, {0, 1}) == std::vector<Vec>{{1, 0}, {0, 1}});
    }
    SECTION("(1,0),(4,9)") {
        std::vector<Vec> u = resolution_rays({1, 0}, {4, 9});
        std::vector<Int> b = hj_expansion({4, 9});
        REQUIRE(b == std::vector<Int>{2, 5});
        REQUIRE(u.size() == b.size() + 2);
        for (std::size_t j = 1; j + 1 < u.size(); ++j)
            REQUIRE(u[j + 1] == b[j - 1] * u[j] - u[j - 1]);
    }
    SECTION("rejects clockwise input") {
        REQUIRE_THROWS_AS(resolution_rays({2, 3}, {1, 0}), std::invalid_argument);
        REQUIRE_THROWS_AS(resolution_rays({1, 0}, {2, 0}), std::invalid_argument);
    }
    SECTION("properties over a box") {
        for (long ax = -4; ax <= 4; ++ax)
            for (long ay = -4; ay <= 4; ++ay)
                for (long bx = -4; bx <= 4; ++bx)
                    for (long by = -4; by <= 4; ++by) {
                        Vec n{ax, ay}, np{bx, by};
                        if (!is_primitive(n) || !is_primitive(np) || det(n, np) <= 0) continue;
                        std::vector<Vec> u = resolution_rays(n, np);
                        REQUIRE(u.front() == n);
                        REQUIRE(u.back() == np);
                        for (std::size_t j = 0; j + 1 < u.size(); ++j) {
                            REQUIRE(det(u[j], u[j + 1]) == 1);
                            REQUIRE(is_primitive(u[j]));
                        }
                    }
    }
}

TEST_CASE("cone_params caches consistent data") {
    ConeParams cp = cone_params({7, 9});
    REQUIRE(cp.p_hat == 4);
    REQUIRE(cp.l == 3);
    REQUIRE(cp.s() == 2);
    REQUIRE(cp.k_sq == Rat(-2));
    REQUIRE(cp.hj == std::vector<Int>{5, 2});
    REQUIRE_FALSE(cp.basic());
    REQUIRE_FALSE(cp.gorenstein());
    REQUIRE(cone_params({1, 4}).gorenstein());
    REQUIRE(cone_params({0, 1}).basic());
}
