#pragma once

// The group B(Z_n) of basic automorphisms x -> u*x + a, as pairs (u, a) with
// u a unit: group law (u,a)(v,b) = (uv, va+b), conjugacy decision with
// witnesses, canonical class representatives, class enumeration, the class
// counting function psi, and the CRT product structure.
//
// Canonical representatives store a in [1, n], where a = n encodes a = 0
// (the identity class is displayed as x -> x + n). Ordinary elements are
// reduced to [0, n).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringauto/endo.hpp"
#include "ringauto/residues.hpp"

namespace ringauto {

class BasicAut {
public:
    /// Reduces u, a mod n; requires gcd(u, n) = 1 (NotAUnit otherwise).
    BasicAut(std::int64_t u, std::int64_t a, Modulus m);

    std::uint64_t u() const { return u_; }
    std::uint64_t a() const { return a_; }
    Modulus modulus() const { return m_; }

    friend bool operator==(const BasicAut&, const BasicAut&) = default;

    /// Canonical-representative factory: keeps a = n unreduced.
    static BasicAut with_divisor_a(std::uint64_t u, std::uint64_t a, Modulus m);

private:
    std::uint64_t u_;
    std::uint64_t a_;
    Modulus m_;
};

/// (u,a)(v,b) = (uv, va+b); identity (1,0). Agrees with endo composition
/// under (u,a) -> (x -> u*x + a).
BasicAut mul(const BasicAut& s, const BasicAut& t);

/// (u^{-1}, -u^{-1} a).
BasicAut inverse(const BasicAut& s);

/// Conjugate iff s.u = t.u and gcd(u-1, a, n) = gcd(u-1, b, n).
bool are_conjugate(const BasicAut& s, const BasicAut& t);

/// Oracle: exists g in B(Z_n) with g^{-1} s g = t, by exhaustive search.
bool are_conjugate_bruteforce(const BasicAut& s, const BasicAut& t);

/// When conjugate, a g = (w, c) with g^{-1} s g = t: w runs over units
/// ascending and c is the least solution of (u-1)c = w*a - b; the result is
/// verified by group-law conjugation before returning.
std::optional<BasicAut> conjugacy_witness(const BasicAut& s, const BasicAut& t);

/// (u, d) with d = gcd(u-1, a, n) as a divisor of n in [1, n] (d = n encodes
/// a = 0). Idempotent, and conjugate to s.
BasicAut canonical_rep(const BasicAut& s);

struct ConjClass {
    BasicAut rep;
    std::uint64_t size;
};

/// All classes of B(Z_n), sorted ascending by (u, a); sizes sum to n*phi(n).
std::vector<ConjClass> enumerate_classes(Modulus n);

/// Class count by the closed formula over the factorization of n:
/// product of (p^{e-1} - 1)/(p - 1) + p^e.
std::uint64_t psi(Modulus n);

/// Class count by direct orbit partition (guarded).
std::uint64_t psi_bruteforce(Modulus n);

/// Componentwise reduction along Z_n ~ Z_r x Z_q for n = r*q, gcd(r,q) = 1;
/// a group isomorphism B(Z_n) -> B(Z_r) x B(Z_q).
std::pair<BasicAut, BasicAut> crt_split(const BasicAut& s, Modulus r, Modulus q);

Endo to_endo(const BasicAut& s);

/// "u*x+a".
std::string to_string(const BasicAut& s);

/// All n*phi(n) elements, ordered by (u, a).
std::vector<BasicAut> all_elements(Modulus n);

} // namespace ringauto
