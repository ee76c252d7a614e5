#pragma once

// The automorphism group of Z_4[x] in alpha/beta coordinates: every
// automorphism is alpha_f : x -> x + f or beta_f : x -> -x + 1 + f with f
// nilpotent, and the group law has closed forms in terms of f and the
// substitution f' = f(-x+1). The law never raises deg f, so the elements
// with deg f <= d form a finite subgroup (the degree-d pool) and every
// exhaustive claim below is a statement about such a pool.
//
// Juxtaposition order: s*t means s∘t, (s∘t)(g) = s(t(g)), calibrated against
// endo composition (a unit test pins this):
//   alpha_g alpha_h = alpha_{g+h}     alpha_g beta_h = beta_{g+h}
//   beta_g  alpha_h = beta_{g+h'}     beta_g  beta_h = alpha_{g+h'}

#include <cstdint>
#include <optional>
#include <vector>

#include "ringauto/endo.hpp"
#include "ringauto/poly.hpp"

namespace ringauto {

enum class GKind : std::uint8_t { Alpha, Beta };

class GAut4 {
public:
    /// Requires modulus 4 (NotZ4) and nilpotent f (BadInput).
    GAut4(GKind kind, Poly f);

    GKind kind() const { return kind_; }
    bool is_alpha() const { return kind_ == GKind::Alpha; }
    const Poly& f() const { return f_; }

    friend bool operator==(const GAut4&, const GAut4&) = default;
    /// Strict ordering (alphas first, then by coefficients); used for
    /// canonical subgroup dumps.
    friend bool operator<(const GAut4& lhs, const GAut4& rhs);

private:
    GKind kind_;
    Poly f_;
};

/// h' = h(-x+1); involutive and degree-preserving. h = h' iff h lies in
/// R[y], y = x(-x+1).
Poly prime(const Poly& h);
bool prime_fixed(const Poly& h);

GAut4 mul(const GAut4& s, const GAut4& t);
GAut4 inverse(const GAut4& s);

/// s^{-1} t s by the closed conjugation forms; agrees with the generic
/// product route.
GAut4 conjugate(const GAut4& t, const GAut4& s);

/// Central iff alpha with prime-fixed f (the center is A_0).
bool is_central(const GAut4& s);

/// Conjugacy in the full group: kinds never mix; alphas pair up as
/// {f, f'}; betas are conjugate iff f - g or f - g' is prime-fixed.
bool are_conjugate(const GAut4& s, const GAut4& t);

Endo to_endo(const GAut4& s);

/// Splits an automorphism of Z_4[x] into alpha/beta coordinates (constant
/// term even = alpha, odd = beta). nullopt when s is not an automorphism.
std::optional<GAut4> from_endo(const Endo& s);

/// A finite subgroup: contains the identity and closed under the law
/// (checked on construction), elements canonically sorted.
class GSubgroup {
public:
    static GSubgroup from_elements(std::vector<GAut4> elements);

    const std::vector<GAut4>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const GAut4& s) const;

    friend bool operator==(const GSubgroup&, const GSubgroup&) = default;

private:
    explicit GSubgroup(std::vector<GAut4> sorted) : elements_(std::move(sorted)) {}
    std::vector<GAut4> elements_;
};

/// Closure of the generators under the group law; finite because the law
/// never raises deg f.
GSubgroup closure(const std::vector<GAut4>& gens);

/// All alpha_f/beta_f with deg f <= degree (2^(degree+2) elements, guarded).
std::vector<GAut4> pool(unsigned degree);

/// The 8 basic automorphisms: alpha_0, alpha_2, alpha_{2x}, alpha_{2x+2},
/// beta_0, beta_2, beta_{2x}, beta_{2x+2}.
std::vector<GAut4> basic_elements();

/// Elements of the degree-d pool whose endomorphism fixes every generator
/// exactly; always a subgroup (asserted).
GSubgroup stabilizer(const std::vector<Poly>& ring_gens, unsigned pool_degree);

/// Does some degree-<=d conjugator take s into the 8-element basic list?
/// Decides membership in the union of the B_z; exact whenever
/// deg(s.f) < pool_degree.
bool in_basic_union(const GAut4& s, unsigned pool_degree);

} // namespace ringauto
