#pragma once

#include <vector>

#include "tldp/integer.hpp"
#include "tldp/lattice.hpp"

namespace tldp {

/// Negative-regular continued fraction expansion of q/(q-p):
/// q/(q-p) = b1 - 1/(b2 - 1/(... - 1/bs)) with every b_j >= 2.
/// Defined for q > 1 only.
inline std::vector<Int> hj_expansion(const ConePQ& c) {
    require_valid(c);
    if (c.q == 1)
        throw std::invalid_argument("hj_expansion: basic cone (q = 1) has no expansion");
    std::vector<Int> b;
    Int num = c.q, den = c.q - c.p;
    while (den > 0) {
        Int bj = (num + den - 1) / den;  // ceil(num/den)
        b.push_back(bj);
        Int next_den = bj * den - num;
        num = den;
        den = next_den;
    }
    return b;
}

/// Smallest k such that k times the local canonical divisor is Cartier:
/// l = q / gcd(q, p-1), and l = 1 for a basic cone.
inline Int local_index(const ConePQ& c) {
    require_valid(c);
    if (c.q == 1) return 1;
    return c.q / gcd(c.q, abs(c.p - 1));
}

enum class Index3Set { none, A, B };

/// Membership in the two families with local index 3:
///   A: q = 3(p-1), p >= 2, 3 does not divide p
///   B: q = (3/2)(p-1), p odd >= 5, 3 does not divide p
inline Index3Set index3_membership(const ConePQ& c) {
    require_valid(c);
    if (c.p >= 2 && c.p % 3 != 0 && c.q == 3 * (c.p - 1))
        return Index3Set::A;
    if (c.p >= 5 && c.p % 2 == 1 && c.p % 3 != 0 && 2 * c.q == 3 * (c.p - 1))
        return Index3Set::B;
    return Index3Set::none;
}

/// Self-intersection number of the local canonical divisor,
///   K(E)^2 = -((2 - (p + p^))/q + sum_j (b_j - 2)),
/// taken as 0 for basic cones.  (For p = 1 the formula itself yields 0.)
inline Rat local_K_self_intersection(const ConePQ& c) {
    require_valid(c);
    if (c.q == 1) return Rat(0);
    Rat acc = Rat(2 - (c.p + socius(c)), c.q);
    for (const Int& bj : hj_expansion(c)) acc += bj - 2;
    return -acc;
}

/// All singularity-level data of a (p,q)-cone, computed once.
struct ConeParams {
    ConePQ pq;
    Int p_hat;            // socius
    Int l;                // local index
    std::vector<Int> hj;  // empty when q == 1
    Rat k_sq;             // K(E)^2

    Int s() const { return Int(hj.size()); }
    bool basic() const { return pq.q == 1; }
    bool gorenstein() const { return pq.q > 1 && pq.p == 1; }
};

inline ConeParams cone_params(const ConePQ& c) {
    require_valid(c);
    ConeParams cp;
    cp.pq = c;
    cp.p_hat = socius(c);
    cp.l = local_index(c);
    if (c.q > 1) cp.hj = hj_expansion(c);
    cp.k_sq = local_K_self_intersection(c);
    return cp;
}

/// Rays u_0 = n, u_1, ..., u_s, u_{s+1} = n' of the coarsest basic
/// refinement of the cone spanned by (n, n'), for det(n,n') > 0:
///   u_1 = ((q-p) n + n')/q,  u_{j+1} = b_j u_j - u_{j-1}.
/// Consecutive rays span basic cones: det(u_j, u_{j+1}) = 1.
inline std::vector<Vec> resolution_rays(const Vec& n, const Vec& np) {
    if (det(n, np) <= 0)
        throw std::invalid_argument("resolution_rays: generators must be anticlockwise");
    ConeNormalForm nf = cone_pq(n, np);
    const Int& q = nf.pq.q;
    if (q == 1) return {n, np};
    const Int& p = nf.pq.p;
    std::vector<Int> b = hj_expansion(nf.pq);
    std::vector<Vec> u;
    u.reserve(b.size() + 2);
    u.push_back(n);
    Vec scaled = (q - p) * n + np;
    u.push_back({exact_div(scaled.x, q, "resolution_rays"),
                 exact_div(scaled.y, q, "resolution_rays")});
    for (std::size_t j = 0; j < b.size(); ++j)
        u.push_back(b[j] * u[j + 1] - u[j]);
    if (u.back() != np)
        throw std::logic_error("resolution_rays: recursion did not close at n'");
    return u;
}

}  // namespace tldp
