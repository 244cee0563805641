#pragma once

#include <ostream>
#include <stdexcept>
#include <utility>

#include "tldp/integer.hpp"

namespace tldp {

/// A point of the integer lattice Z^2.
struct Vec {
    Int x, y;

    friend Vec operator+(const Vec& a, const Vec& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec operator-(const Vec& a, const Vec& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec operator-(const Vec& a) { return {-a.x, -a.y}; }
    friend Vec operator*(const Int& k, const Vec& a) { return {k * a.x, k * a.y}; }
    friend bool operator==(const Vec& a, const Vec& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
        return os << "(" << v.x << "," << v.y << ")";
    }
};

inline Int det(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

/// gcd(|x|,|y|) == 1; the zero vector is never primitive.
inline bool is_primitive(const Vec& v) {
    if (v.x == 0 && v.y == 0) return false;
    return gcd(abs(v.x), abs(v.y)) == 1;
}

/// Element of GL_2(Z) acting on column vectors by left multiplication.
struct UnimodularMap {
    Int a, b, c, d;  // rows (a b), (c d)

    UnimodularMap(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        Int dt = det();
        if (dt != 1 && dt != -1)
            throw std::invalid_argument("UnimodularMap: determinant must be +1 or -1");
    }

    Int det() const { return a * d - b * c; }
    Vec apply(const Vec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

/// Normal form (p,q) of a 2-dimensional rational strongly convex cone:
/// q >= 1, 0 <= p < q, gcd(p,q) == 1 (p == 0 exactly when q == 1).
struct ConePQ {
    Int p, q;

    friend bool operator==(const ConePQ& a, const ConePQ& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(const ConePQ& a, const ConePQ& b) { return !(a == b); }
    friend bool operator<(const ConePQ& a, const ConePQ& b) {
        return a.q != b.q ? a.q < b.q : a.p < b.p;
    }
    friend std::ostream& operator<<(std::ostream& os, const ConePQ& c) {
        return os << "(" << c.p << "," << c.q << ")";
    }
};

inline bool is_valid(const ConePQ& c) {
    return c.q >= 1 && c.p >= 0 && c.p < c.q && gcd(c.p, c.q) == 1;
}

inline void require_valid(const ConePQ& c) {
    if (!is_valid(c))
        throw std::invalid_argument("invalid (p,q) pair");
}

/// Result of putting the cone spanned by (n, n') into normal form:
/// n' = p*n + q*witness, with {n, witness} a basis of Z^2.
struct ConeNormalForm {
    ConePQ pq;
    Vec witness;
};

/// Computes the (p,q) parameters of the cone spanned by two primitive,
/// linearly independent lattice vectors, together with the basis witness.
/// Orientation-agnostic: q = |det(n,n')|.
inline ConeNormalForm cone_pq(const Vec& n, const Vec& np) {
    if (!is_primitive(n) || !is_primitive(np))
        throw std::invalid_argument("cone_pq: generators must be primitive");
    Int d = det(n, np);
    if (d == 0)
        throw std::invalid_argument("cone_pq: generators are collinear");
    Int q = abs(d);
    Int eps = d > 0 ? 1 : -1;
    // kappa*a - lambda*b == 1 for n = (a,b)
    ExtGcd e = ext_gcd(n.x, n.y);
    Int kappa = e.x, lambda = -e.y;
    Int t = kappa * np.x - lambda * np.y;
    Int p = t % q;
    if (p < 0) p += q;
    Int gamma = (t - p) / q;
    Vec witness{eps * lambda + gamma * n.x, eps * kappa + gamma * n.y};
    return ConeNormalForm{ConePQ{p, q}, witness};
}

/// A map in GL_2(Z) carrying n to (1,0) and n' to (p,q).
/// When det(n,n') > 0 the returned map has determinant +1.
inline UnimodularMap normalize_cone(const Vec& n, const Vec& np) {
    ConeNormalForm nf = cone_pq(n, np);
    // Inverse of the matrix with columns n, witness; its determinant is +-1.
    const Vec& w = nf.witness;
    Int dt = det(n, w);
    return UnimodularMap(dt * w.y, dt * (-w.x), dt * (-n.y), dt * n.x);
}

/// The socius of p modulo q: 0 <= p^ < q with p*p^ == 1 (mod q).
/// Convention: p^ = 0 when q = 1.
inline Int socius(const ConePQ& c) {
    require_valid(c);
    if (c.q == 1) return 0;
    ExtGcd e = ext_gcd(c.p, c.q);
    Int ph = e.x % c.q;
    if (ph < 0) ph += c.q;
    return ph;
}

/// Cones are equivalent under GL_2(Z) iff their q's agree and the p of one
/// equals the p or the socius of the other.
inline bool cones_equivalent(const std::pair<Vec, Vec>& c1, const std::pair<Vec, Vec>& c2) {
    ConePQ a = cone_pq(c1.first, c1.second).pq;
    ConePQ b = cone_pq(c2.first, c2.second).pq;
    return a.q == b.q && (a.p == b.p || a.p == socius(b));
}

}  // namespace tldp
