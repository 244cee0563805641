#pragma once

#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>
#include <vector>

#include "tldp/classify.hpp"

namespace tldp {

/// Smallest box for which the enumeration below is known to reach every
/// isomorphism class of the given index: the largest coordinate occurring
/// among the normalized generators of the classified surfaces (24 for
/// index 3, from the pair (17,24)).  Empirical, backed by stability_check.
inline int completeness_floor(int ell) {
    switch (ell) {
        case 1: return 4;
        case 2: return 8;
        case 3: return 24;
        default: throw std::invalid_argument("completeness_floor: index must be 1, 2 or 3");
    }
}

struct OracleResult {
    int ell = 0;
    int box = 0;
    // canonical key -> first fan found in scan order
    std::map<CanonicalKey, CompleteFan> classes;

    std::size_t count() const { return classes.size(); }
};

namespace detail {

inline unsigned oracle_threads() {
    if (const char* v = std::getenv("TLDP_NO_PARALLEL"); v && *v && *v != '0') return 1;
    if (const char* v = std::getenv("TLDP_THREADS"); v && *v) {
        long n = std::strtol(v, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n > 64 ? 64 : n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (hw > 8 ? 8 : hw);
}

struct OracleHit {
    CanonicalKey key;
    std::vector<Vec> gen;
};

// All fans [(1,0), (p1,q1), n3] for this q1 with n3 in the box and surface
// index exactly ell, in scan order (p1 ascending, then n3.x, then n3.y).
inline std::vector<OracleHit> oracle_scan_q1(const Int& q1, int ell, int box) {
    std::vector<OracleHit> hits;
    const Vec n1{1, 0};
    for (Int p1 = 0; p1 < q1; ++p1) {
        if (gcd(p1, q1) != 1) continue;  // p1 = 0 survives only for q1 = 1
        Vec n2{p1, q1};
        Int l1 = local_index(ConePQ{p1, q1});
        for (Int x = -box; x <= box; ++x) {
            for (Int y = -box; y <= -1; ++y) {
                // det(n3, n1) = -y > 0 holds; require det(n2, n3) > 0
                if (p1 * y - q1 * x <= 0) continue;
                Vec n3{x, y};
                if (!is_primitive(n3)) continue;
                Int l2 = local_index(cone_pq(n2, n3).pq);
                Int l3 = local_index(cone_pq(n3, n1).pq);
                if (lcm(lcm(l1, l2), l3) != ell) continue;
                CompleteFan fan = build_fan({n1, n2, n3});
                hits.push_back({canonical_key(graph_of(fan)), fan.gen});
            }
        }
    }
    return hits;
}

}  // namespace detail

/// Brute-force classification: enumerates every nu = 3 fan in normalized
/// position (n1 = (1,0), n2 = (p1,q1) with q1 <= box, n3 in the box) whose
/// surface index is exactly ell, and groups the fans by canonical key.
/// Independent of the admissible-triple search except for the shared
/// canonical-key code.
inline OracleResult oracle_classify(int ell, int box) {
    if (ell < 1 || ell > 3)
        throw std::invalid_argument("oracle_classify: index must be 1, 2 or 3");
    int floor = completeness_floor(ell);
    if (box < floor)
        throw std::invalid_argument(
            "oracle_classify: box " + std::to_string(box) + " is below the completeness floor " +
            std::to_string(floor) + " for index " + std::to_string(ell) +
            " (a classified surface has a normalized generator coordinate of that size)");

    std::vector<std::vector<detail::OracleHit>> per_q1(static_cast<std::size_t>(box) + 1);
    std::atomic<long> next{1};
    unsigned nthreads = detail::oracle_threads();
    auto worker = [&]() {
        for (;;) {
            long q1 = next.fetch_add(1);
            if (q1 > box) return;
            per_q1[static_cast<std::size_t>(q1)] = detail::oracle_scan_q1(Int(q1), ell, box);
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    OracleResult result;
    result.ell = ell;
    result.box = box;
    // Merging in q1 order keeps the representatives identical to a
    // sequential scan, whatever the thread count.
    for (long q1 = 1; q1 <= box; ++q1)
        for (detail::OracleHit& hit : per_q1[static_cast<std::size_t>(q1)])
            if (result.classes.find(hit.key) == result.classes.end())
                result.classes.emplace(std::move(hit.key), build_fan(std::move(hit.gen)));
    return result;
}

/// True iff enlarging the box from b1 to b2 discovers no new class and
/// loses none.
inline bool stability_check(int ell, int b1, int b2) {
    if (b1 >= b2)
        throw std::invalid_argument("stability_check: need b1 < b2");
    OracleResult r1 = oracle_classify(ell, b1);
    OracleResult r2 = oracle_classify(ell, b2);
    if (r1.classes.size() != r2.classes.size()) return false;
    auto a = r1.classes.begin();
    auto b = r2.classes.begin();
    for (; a != r1.classes.end(); ++a, ++b)
        if (a->first != b->first) return false;
    return true;
}

}  // namespace tldp
