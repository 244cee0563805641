#pragma once

#include <cstddef>
#include <vector>

#include "tldp/cone.hpp"
#include "tldp/integer.hpp"
#include "tldp/lattice.hpp"

namespace tldp {

/// A complete fan in the plane: primitive generators n_1..n_nu listed
/// anticlockwise, winding around the origin exactly once, with the
/// parameters of the cones sigma_i = cone(n_i, n_{i+1}) (indices mod nu).
struct CompleteFan {
    std::vector<Vec> gen;
    std::vector<ConeParams> cones;

    std::size_t nu() const { return gen.size(); }
    const Vec& n(std::size_t i) const { return gen[i % gen.size()]; }
    const ConeParams& cone(std::size_t i) const { return cones[i % cones.size()]; }
};

namespace detail {

// Strict angular order around the origin, starting from the positive x-axis.
inline bool angle_less(const Vec& a, const Vec& b) {
    auto upper = [](const Vec& v) { return v.y > 0 || (v.y == 0 && v.x > 0); };
    bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    return det(a, b) > 0;
}

}  // namespace detail

/// Validates the generators and computes per-cone parameters.
/// Rejects non-primitive generators, clockwise or degenerate consecutive
/// pairs, and generator cycles that wind more than once.
inline CompleteFan build_fan(std::vector<Vec> gen) {
    const std::size_t nu = gen.size();
    if (nu < 3)
        throw std::invalid_argument("build_fan: a complete fan needs at least 3 generators");
    for (const Vec& v : gen)
        if (!is_primitive(v))
            throw std::invalid_argument("build_fan: generators must be primitive");
    for (std::size_t i = 0; i < nu; ++i)
        if (det(gen[i], gen[(i + 1) % nu]) <= 0)
            throw std::invalid_argument("build_fan: consecutive generators must turn strictly anticlockwise");
    // Winding check: in one full anticlockwise turn the cyclic sequence wraps
    // past the positive x-axis exactly once.
    int wraps = 0;
    for (std::size_t i = 0; i < nu; ++i)
        if (!detail::angle_less(gen[i], gen[(i + 1) % nu])) ++wraps;
    if (wraps != 1)
        throw std::invalid_argument("build_fan: generators must wind around the origin exactly once");
    CompleteFan fan;
    fan.cones.reserve(nu);
    for (std::size_t i = 0; i < nu; ++i)
        fan.cones.push_back(cone_params(cone_pq(gen[i], gen[(i + 1) % nu]).pq));
    fan.gen = std::move(gen);
    return fan;
}

/// The integers r_i with  r_i n_i = a + b,  where a is the resolution ray of
/// sigma_{i-1} adjacent to n_i (or n_{i-1} if sigma_{i-1} is basic) and b is
/// the resolution ray of sigma_i adjacent to n_i (or n_{i+1} if sigma_i is
/// basic).  -r_i is the self-intersection of the strict transform of the
/// orbit closure of the ray through n_i.
inline std::vector<Int> r_invariants(const CompleteFan& fan) {
    const std::size_t nu = fan.nu();
    std::vector<Int> r;
    r.reserve(nu);
    for (std::size_t i = 0; i < nu; ++i) {
        std::size_t prev = (i + nu - 1) % nu;
        Vec a = fan.n(prev);
        if (!fan.cone(prev).basic()) {
            std::vector<Vec> u = resolution_rays(fan.n(prev), fan.n(i));
            a = u[u.size() - 2];  // last interior ray
        }
        Vec b = fan.n(i + 1);
        if (!fan.cone(i).basic()) {
            std::vector<Vec> u = resolution_rays(fan.n(i), fan.n(i + 1));
            b = u[1];  // first interior ray
        }
        Vec sum = a + b;
        // sum must be an exact integer multiple of n_i
        const Vec& ni = fan.n(i);
        Int ri = ni.x != 0 ? exact_div(sum.x, ni.x, "r_invariants")
                           : exact_div(sum.y, ni.y, "r_invariants");
        if (ri * ni != sum)
            throw std::logic_error("r_invariants: a + b is not a multiple of n_i");
        r.push_back(ri);
    }
    return r;
}

/// Index of the surface: lcm of the local indices over non-basic cones
/// (1 when every cone is basic).
inline Int surface_index(const CompleteFan& fan) {
    Int ell = 1;
    for (const ConeParams& c : fan.cones)
        if (!c.basic()) ell = lcm(ell, c.l);
    return ell;
}

/// True iff the generators are the vertices of a convex polygon with the
/// origin strictly inside, i.e. the fan comes from an LDP-polygon.  For a
/// valid complete fan this reduces to a strict turn at every generator.
inline bool is_ldp(const CompleteFan& fan) {
    const std::size_t nu = fan.nu();
    for (std::size_t i = 0; i < nu; ++i) {
        Vec e1 = fan.n(i + 1) - fan.n(i);
        Vec e2 = fan.n(i + 2) - fan.n(i + 1);
        if (det(e1, e2) <= 0) return false;
    }
    return true;
}

struct RationalPoint {
    Rat x, y;
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// Vertices of the polar polygon Q* = {y : <y,v> >= -1 for all v in Q}.
/// The vertex dual to the edge [n_i, n_{i+1}] solves
/// <y, n_i> = <y, n_{i+1}> = -1.
inline std::vector<RationalPoint> polar_vertices(const CompleteFan& fan) {
    if (!is_ldp(fan))
        throw std::invalid_argument("polar_vertices: fan is not LDP");
    std::vector<RationalPoint> vs;
    vs.reserve(fan.nu());
    for (std::size_t i = 0; i < fan.nu(); ++i) {
        const Vec& a = fan.n(i);
        const Vec& b = fan.n(i + 1);
        const Int& q = fan.cone(i).pq.q;  // det(a,b)
        vs.push_back({Rat(a.y - b.y, q), Rat(b.x - a.x, q)});
    }
    return vs;
}

/// Smallest k for which k Q* is a lattice polygon: the lcm of the
/// denominators (in lowest terms) of the polar vertex coordinates.
inline Int polar_index(const CompleteFan& fan) {
    Int k = 1;
    for (const RationalPoint& v : polar_vertices(fan)) {
        k = lcm(k, denominator(v.x));
        k = lcm(k, denominator(v.y));
    }
    return k;
}

struct PointCounts {
    Int boundary, interior;
    friend bool operator==(const PointCounts& a, const PointCounts& b) {
        return a.boundary == b.boundary && a.interior == b.interior;
    }
};

/// Lattice point counts of the polygon Q spanned by the generators:
///   #(boundary) = sum_i gcd(q_i, p_i - 1)
///   #(interior) = (1/2) sum_i (q_i - gcd(q_i, p_i - 1)) + 1   (Pick)
inline PointCounts lattice_point_counts(const CompleteFan& fan) {
    if (!is_ldp(fan))
        throw std::invalid_argument("lattice_point_counts: fan is not LDP");
    Int boundary = 0, twice_interior = 0;
    for (const ConeParams& c : fan.cones) {
        Int g = gcd(c.pq.q, abs(c.pq.p - 1));
        boundary += g;
        twice_interior += c.pq.q - g;
    }
    return PointCounts{boundary, exact_div(twice_interior, 2, "lattice_point_counts") + 1};
}

/// Direct enumeration of the lattice points of Q (bounding-box scan with
/// exact half-plane tests).  Independent cross-check for the formulas above.
inline PointCounts count_lattice_points_direct(const CompleteFan& fan) {
    if (!is_ldp(fan))
        throw std::invalid_argument("count_lattice_points_direct: fan is not LDP");
    Int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const Vec& v : fan.gen) {
        if (v.x < xmin) xmin = v.x;
        if (v.x > xmax) xmax = v.x;
        if (v.y < ymin) ymin = v.y;
        if (v.y > ymax) ymax = v.y;
    }
    Int boundary = 0, interior = 0;
    const std::size_t nu = fan.nu();
    for (Int x = xmin; x <= xmax; ++x) {
        for (Int y = ymin; y <= ymax; ++y) {
            Vec pnt{x, y};
            bool outside = false, on_edge = false;
            for (std::size_t i = 0; i < nu && !outside; ++i) {
                Int side = det(fan.n(i + 1) - fan.n(i), pnt - fan.n(i));
                if (side < 0) outside = true;
                else if (side == 0) on_edge = true;
            }
            if (outside) continue;
            if (on_edge) ++boundary;
            else ++interior;
        }
    }
    return PointCounts{boundary, interior};
}

namespace detail {

// Sum of s_i over non-basic cones.
inline Int total_exceptional(const std::vector<ConeParams>& cones) {
    Int s = 0;
    for (const ConeParams& c : cones) s += c.s();
    return s;
}

// Sum of K(E)^2 over non-Gorenstein non-basic cones.
inline Rat total_k_sq(const std::vector<ConeParams>& cones) {
    Rat k = 0;
    for (const ConeParams& c : cones)
        if (!c.basic() && !c.gorenstein()) k += c.k_sq;
    return k;
}

}  // namespace detail

/// sum_i s_i <= 12 - sum K(E^(i))^2 - (1 + 1/ell) nu, evaluated exactly.
/// Necessary for any log Del Pezzo fan of index ell.
inline bool picard_inequality_holds(const std::vector<ConeParams>& cones, const Int& ell) {
    Rat rhs = Rat(12) - detail::total_k_sq(cones) - (1 + Rat(1, ell)) * Int(cones.size());
    return Rat(detail::total_exceptional(cones)) <= rhs;
}

inline bool picard_inequality_holds(const CompleteFan& fan, const Int& ell) {
    return picard_inequality_holds(fan.cones, ell);
}

/// sum_i (2/l_i - 1) q_i <= 8, evaluated exactly.  This is Scott's
/// inequality for the polygon Q; it applies to LDP fans of index >= 2.
inline bool scott_inequality_holds(const std::vector<ConeParams>& cones) {
    Rat lhs = 0;
    for (const ConeParams& c : cones)
        lhs += (Rat(2, c.l) - 1) * c.pq.q;
    return lhs <= 8;
}

inline bool scott_inequality_holds(const CompleteFan& fan) {
    return scott_inequality_holds(fan.cones);
}

/// Self-intersection of the canonical divisor,
///   K^2 = 10 - (sum_i s_i + nu - 2) - sum K(E^(i))^2.
inline Rat K_squared(const CompleteFan& fan) {
    return Rat(10) - (detail::total_exceptional(fan.cones) + Int(fan.nu()) - 2) -
           detail::total_k_sq(fan.cones);
}

}  // namespace tldp
