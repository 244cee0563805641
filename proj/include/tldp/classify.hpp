#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "tldp/fan.hpp"
#include "tldp/graph.hpp"

namespace tldp {

/// Three (p_i,q_i) pairs; the cones sigma_1 = cone(n1,n2),
/// sigma_2 = cone(n2,n3), sigma_3 = cone(n3,n1) of a complete fan with
/// nu = 3 realize them exactly when both divisibility conditions hold:
///   q1 q2 | p1^ q2 + p2 q1 + q3   and   q1 q3 | p1 q3 + p3^ q1 + q2.
struct AdmissibleTriple {
    std::array<ConePQ, 3> pq;

    std::array<Int, 6> as_tuple() const {
        return {pq[0].p, pq[0].q, pq[1].p, pq[1].q, pq[2].p, pq[2].q};
    }
    friend bool operator==(const AdmissibleTriple& a, const AdmissibleTriple& b) {
        return a.pq == b.pq;
    }
    friend bool operator<(const AdmissibleTriple& a, const AdmissibleTriple& b) {
        return a.as_tuple() < b.as_tuple();
    }
};

inline bool is_admissible(const AdmissibleTriple& t) {
    for (const ConePQ& c : t.pq) require_valid(c);
    const Int &q1 = t.pq[0].q, &q2 = t.pq[1].q, &q3 = t.pq[2].q;
    Int c1 = socius(t.pq[0]) * q2 + t.pq[1].p * q1 + q3;
    Int c2 = t.pq[0].p * q3 + socius(t.pq[2]) * q1 + q2;
    return c1 % (q1 * q2) == 0 && c2 % (q1 * q3) == 0;
}

/// The complete fan with n1 = (1,0), n2 = (p1,q1) and
/// n3 = (-(q2 + p1 q3)/q1, -q3) whose cones realize the triple.
/// Throws std::invalid_argument when the triple is not admissible.
inline CompleteFan fan_from_triple(const AdmissibleTriple& t) {
    for (const ConePQ& c : t.pq) require_valid(c);
    const Int &p1 = t.pq[0].p, &q1 = t.pq[0].q, &q2 = t.pq[1].q, &q3 = t.pq[2].q;
    Int num = q2 + p1 * q3;
    if (num % q1 != 0)
        throw std::invalid_argument("fan_from_triple: q1 does not divide q2 + p1*q3");
    std::vector<Vec> gen = {Vec{1, 0}, Vec{p1, q1}, Vec{-(num / q1), -q3}};
    CompleteFan fan = build_fan(std::move(gen));
    for (int i = 0; i < 3; ++i)
        if (fan.cone(i).pq != t.pq[i])
            throw std::invalid_argument("fan_from_triple: triple is not admissible");
    return fan;
}

// ---------------------------------------------------------------------------
// Type families: the closed-form (p,q) shapes a pair can take when its local
// index divides 3, parametrized by a single integer.
//   1: (2,3)                     5: (6t+1, 9t),   t >= 1
//   2: (3t+2, 9t+3), t >= 1      6: (1, q),       q >= 2   (Gorenstein)
//   3: (3t+1, 9t),   t >= 1      7: (0, 1)                 (basic)
//   4: (6t+5, 9t+6), t >= 0
// ---------------------------------------------------------------------------
namespace type_family {

inline bool has_parameter(int tag) { return tag >= 2 && tag <= 6; }

inline Int min_parameter(int tag) {
    switch (tag) {
        case 2: case 3: case 5: return 1;
        case 4: return 0;
        case 6: return 2;
        default: return 0;
    }
}

inline ConePQ instantiate(int tag, const Int& t) {
    switch (tag) {
        case 1: return {2, 3};
        case 2: return {3 * t + 2, 9 * t + 3};
        case 3: return {3 * t + 1, 9 * t};
        case 4: return {6 * t + 5, 9 * t + 6};
        case 5: return {6 * t + 1, 9 * t};
        case 6: return {1, t};
        case 7: return {0, 1};
        default: throw std::invalid_argument("type_family: tag must be 1..7");
    }
}

inline Int p_hat(int tag, const Int& t) {
    switch (tag) {
        case 1: return 2;
        case 2: return 3 * t + 2;
        case 3: return 6 * t + 1;  // 2p - 1
        case 4: return 6 * t + 5;
        case 5: return 3 * t + 1;  // (p + 1)/2
        case 6: return 1;
        case 7: return 0;
        default: throw std::invalid_argument("type_family: tag must be 1..7");
    }
}

inline Int s(int tag, const Int& t) {
    switch (tag) {
        case 1: return 1;
        case 2: return t + 2;
        case 3: case 4: case 5: return t + 1;
        case 6: return t - 1;
        case 7: return 0;
        default: throw std::invalid_argument("type_family: tag must be 1..7");
    }
}

inline Rat neg_k_sq(int tag, const Int&) {
    switch (tag) {
        case 1: return Rat(1, 3);
        case 2: return Rat(4, 3);
        case 3: case 5: return Rat(2);
        case 4: return Rat(8, 3);
        case 6: case 7: return Rat(0);
        default: throw std::invalid_argument("type_family: tag must be 1..7");
    }
}

/// Classifies a pair into its family; 0 when the local index does not
/// divide 3.
inline int tag_of(const ConePQ& c) {
    require_valid(c);
    if (c.q == 1) return 7;
    if (c.p == 1) return 6;
    switch (index3_membership(c)) {
        case Index3Set::A: return c.q == 3 ? 1 : (c.q % 9 == 0 ? 3 : 2);
        case Index3Set::B: return c.q % 9 == 0 ? 5 : 4;
        case Index3Set::none: return 0;
    }
    return 0;
}

}  // namespace type_family

/// Necessary mod-9 test on a combination of non-Gorenstein family tags
/// (each in 1..5): when sigma_2 resp. sigma_3 is non-Gorenstein, the first
/// resp. second divisibility condition forces
///   p1^ q2 + p2 q1 + q3 == 0 (mod 9)   resp.   p1 q3 + p3^ q1 + q2 == 0 (mod 9).
/// Returns true iff some residue assignment satisfies both.  The residues
/// are generated from the family parametrizations (period 3 in the
/// parameter).
inline bool mod9_prefilter(const std::array<int, 3>& combo) {
    struct Residues { Int p, ph, q; };
    std::array<std::vector<Residues>, 3> res;
    for (int i = 0; i < 3; ++i) {
        int tag = combo[i];
        if (tag < 1 || tag > 5)
            throw std::invalid_argument("mod9_prefilter: tags must be in 1..5");
        Int t0 = type_family::min_parameter(tag);
        int reps = type_family::has_parameter(tag) ? 3 : 1;
        for (int k = 0; k < reps; ++k) {
            Int t = t0 + k;
            ConePQ c = type_family::instantiate(tag, t);
            res[i].push_back({c.p % 9, type_family::p_hat(tag, t) % 9, c.q % 9});
        }
    }
    for (const auto& r1 : res[0])
        for (const auto& r2 : res[1])
            for (const auto& r3 : res[2]) {
                bool first = (r1.ph * r2.q + r2.p * r1.q + r3.q) % 9 == 0;
                bool second = (r1.p * r3.q + r3.ph * r1.q + r2.q) % 9 == 0;
                if (first && second) return true;
            }
    return false;
}

// ---------------------------------------------------------------------------
// Enumeration of admissible triples
// ---------------------------------------------------------------------------

/// All pairs with the given local index whose resolution length s does not
/// exceed s_cap, ordered by (q, p).
inline std::vector<ConeParams> pairs_with_local_index(const Int& l, const Int& s_cap) {
    std::vector<ConeParams> out;
    if (l == 1) out.push_back(cone_params({0, 1}));
    // Every pair of local index l in {1,2,3} satisfies q <= 9s + 6.
    Int q_max = 9 * s_cap + 6;
    for (Int q = 2; q <= q_max; ++q) {
        for (Int p = 1; p < q; ++p) {
            if (gcd(p, q) != 1) continue;
            ConePQ c{p, q};
            if (local_index(c) != l) continue;
            ConeParams cp = cone_params(c);
            if (9 * cp.s() + 6 < q)
                throw std::logic_error("pairs_with_local_index: scan bound violated");
            if (cp.s() <= s_cap) out.push_back(std::move(cp));
        }
    }
    return out;
}

namespace detail {

// The Picard inequality bounds s1+s2+s3 by
//   12 - 3(1 + 1/ell) + sum of -K(E)^2 over non-Gorenstein cones,
// and -K(E)^2 is at most 8/3 for local index 3, exactly 1 for local
// index 2, and 0 for Gorenstein cones.
inline Rat max_neg_k_sq(int ell) { return ell == 3 ? Rat(8, 3) : ell == 2 ? Rat(1) : Rat(0); }

inline Int search_s_cap(int ell) {
    if (ell < 1 || ell > 3)
        throw std::invalid_argument("surface index must be 1, 2 or 3");
    Rat rhs_cap = Rat(12) - (1 + Rat(1, ell)) * 3 + 3 * max_neg_k_sq(ell);
    return floor_rat(rhs_cap);
}

}  // namespace detail

/// Every pair whose local index divides ell, within the search bounds the
/// Picard inequality puts on a nu = 3 fan of index ell; ordered by (q, p).
inline std::vector<ConeParams> type_families(int ell) {
    Int s_cap = detail::search_s_cap(ell);
    std::vector<ConeParams> pool = pairs_with_local_index(1, s_cap);
    if (ell > 1) {
        std::vector<ConeParams> top = pairs_with_local_index(ell, s_cap);
        pool.insert(pool.end(), top.begin(), top.end());
    }
    std::sort(pool.begin(), pool.end(),
              [](const ConeParams& a, const ConeParams& b) { return a.pq < b.pq; });
    for (const ConeParams& c : pool)
        if (!c.basic() && !c.gorenstein() && -c.k_sq > detail::max_neg_k_sq(ell))
            throw std::logic_error("type_families: -K(E)^2 cap violated");
    return pool;
}

/// The complete, deterministically ordered list of admissible triples whose
/// surface has index exactly ell, normalized so that the first pair has
/// local index ell.  The search region is cut down by the exact
/// inequalities (Picard for all ell, Scott for ell >= 2) and, for ell = 3,
/// by the mod-9 conditions.
inline std::vector<AdmissibleTriple> enumerate_admissible(int ell) {
    std::vector<ConeParams> rest = type_families(ell);
    std::vector<ConeParams> first;
    for (const ConeParams& c : rest)
        if (c.l == ell) first.push_back(c);

    std::vector<AdmissibleTriple> found;
    for (const ConeParams& c1 : first) {
        for (const ConeParams& c2 : rest) {
            for (const ConeParams& c3 : rest) {
                // Condition 3 (Picard) and, for ell >= 2, Condition 4 (Scott)
                Int s_sum = c1.s() + c2.s() + c3.s();
                Rat k_sum = 0;
                for (const ConeParams* c : {&c1, &c2, &c3})
                    if (!c->basic() && !c->gorenstein()) k_sum += c->k_sq;
                if (Rat(s_sum) > Rat(12) - k_sum - (1 + Rat(1, ell)) * 3) continue;
                if (ell >= 2) {
                    Rat scott = 0;
                    for (const ConeParams* c : {&c1, &c2, &c3})
                        scott += (Rat(2, c->l) - 1) * c->pq.q;
                    if (scott > 8) continue;
                }
                Int lhs1 = c1.p_hat * c2.pq.q + c2.pq.p * c1.pq.q + c3.pq.q;
                Int lhs2 = c1.pq.p * c3.pq.q + c3.p_hat * c1.pq.q + c2.pq.q;
                if (ell == 3) {
                    // mod-9 necessary conditions (3 | q of every local-index-3 cone)
                    if (c2.l == 3 && lhs1 % 9 != 0) continue;
                    if (c3.l == 3 && lhs2 % 9 != 0) continue;
                }
                if (lhs1 % (c1.pq.q * c2.pq.q) != 0) continue;
                if (lhs2 % (c1.pq.q * c3.pq.q) != 0) continue;
                found.push_back(AdmissibleTriple{{c1.pq, c2.pq, c3.pq}});
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

// ---------------------------------------------------------------------------
// Quotient identification
// ---------------------------------------------------------------------------

using Mat23 = std::array<std::array<Int, 3>, 2>;

/// Invariant factors (d1, d2) with d1 | d2 of a rank-2 integer matrix:
/// d1 = gcd of the entries, d1*d2 = gcd of the 2x2 minors.
inline std::array<Int, 2> smith_normal_form(const Mat23& m) {
    Int d1 = 0;
    for (const auto& row : m)
        for (const Int& e : row) d1 = gcd(d1, abs(e));
    Int minors = 0;
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k)
            minors = gcd(minors, abs(m[0][j] * m[1][k] - m[0][k] * m[1][j]));
    if (minors == 0)
        throw std::invalid_argument("smith_normal_form: matrix has rank < 2");
    if (minors % (d1 * d1) != 0)
        throw std::logic_error("smith_normal_form: determinantal divisors inconsistent");
    return {d1, minors / d1};
}

struct QuotientInfo {
    std::array<Int, 3> weights;      // ascending, divided by their gcd
    Int group_order;                 // gcd(q1, q2, q3)
    std::vector<Int> group_factors;  // nontrivial invariant factors of Z^2 / (Zn1+Zn2+Zn3)
};

/// Identifies the surface of a nu = 3 fan as P^2(w1,w2,w3)/H: reduced
/// weights from the q_i, and the group H from the Smith normal form of the
/// generator matrix.
inline QuotientInfo identify_quotient(const CompleteFan& fan) {
    if (fan.nu() != 3)
        throw std::invalid_argument("identify_quotient: fan must have nu = 3");
    QuotientInfo info;
    Int g = 0;
    for (int i = 0; i < 3; ++i) g = gcd(g, fan.cone(i).pq.q);
    for (int i = 0; i < 3; ++i) info.weights[i] = fan.cone(i).pq.q / g;
    std::sort(info.weights.begin(), info.weights.end());
    info.group_order = g;
    Mat23 m;
    for (int i = 0; i < 3; ++i) {
        m[0][i] = fan.gen[i].x;
        m[1][i] = fan.gen[i].y;
    }
    std::array<Int, 2> d = smith_normal_form(m);
    for (const Int& f : d)
        if (f != 1) info.group_factors.push_back(f);
    Int product = 1;
    for (const Int& f : info.group_factors) product *= f;
    if (product != g)
        throw std::logic_error("identify_quotient: |H| != gcd(q1,q2,q3)");
    return info;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct SurfaceRecord {
    AdmissibleTriple triple;  // representative admissible triple of the class
    CompleteFan fan;
    std::vector<Int> r;
    Int index;
    std::array<Int, 3> weights;
    Int group_order;
    std::vector<Int> group_factors;
    CanonicalKey key;

    const Vec& n3() const { return fan.gen[2]; }
};

inline SurfaceRecord make_record(const AdmissibleTriple& t) {
    SurfaceRecord rec;
    rec.triple = t;
    rec.fan = fan_from_triple(t);
    rec.r = r_invariants(rec.fan);
    rec.index = surface_index(rec.fan);
    QuotientInfo q = identify_quotient(rec.fan);
    rec.weights = q.weights;
    rec.group_order = q.group_order;
    rec.group_factors = std::move(q.group_factors);
    rec.key = canonical_key(graph_of(rec.fan, rec.r));
    return rec;
}

/// One representative per isomorphism class of toric log Del Pezzo surfaces
/// with Picard number 1 and the given index, in a deterministic order.
inline std::vector<SurfaceRecord> classify(int ell) {
    std::map<CanonicalKey, SurfaceRecord> by_key;
    for (const AdmissibleTriple& t : enumerate_admissible(ell)) {
        SurfaceRecord rec = make_record(t);
        CanonicalKey key = rec.key;
        by_key.emplace(std::move(key), std::move(rec));  // keeps the first-listed triple
    }
    std::vector<SurfaceRecord> out;
    out.reserve(by_key.size());
    for (auto& kv : by_key) out.push_back(std::move(kv.second));
    std::sort(out.begin(), out.end(), [](const SurfaceRecord& a, const SurfaceRecord& b) {
        return std::tie(a.index, a.weights, a.group_order, a.key) <
               std::tie(b.index, b.weights, b.group_order, b.key);
    });
    return out;
}

}  // namespace tldp
