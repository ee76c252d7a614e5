#pragma once

// The polynomial ring Z_n[x]: arithmetic, composition, nilpotence and unit
// predicates, base-f expansion, subring membership, and the polynomial-ring
// criterion for R[f].
//
// Polynomials are dense, normalized coefficient sequences (empty = zero,
// otherwise the last coefficient is nonzero). Equality is coefficient
// equality of normalized forms. The degree of the zero polynomial is not a
// number; degree() returns nullopt for it.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ringauto/residues.hpp"

namespace ringauto {

class Poly {
public:
    /// The zero polynomial over Z_n.
    explicit Poly(Modulus m) : m_(m) {}

    /// From ascending coefficients; reduces mod n and normalizes.
    Poly(std::initializer_list<std::int64_t> coeffs, Modulus m);
    Poly(const std::vector<std::int64_t>& coeffs, Modulus m);
    Poly(std::vector<std::uint64_t> coeffs, Modulus m);

    static Poly constant(std::int64_t c, Modulus m) { return Poly({c}, m); }
    static Poly x(Modulus m) { return Poly({0, 1}, m); }
    /// c * x^k
    static Poly monomial(std::size_t k, std::int64_t c, Modulus m);

    Modulus modulus() const { return m_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    /// Coefficient of x^k (0 beyond the stored length).
    std::uint64_t coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : 0;
    }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    std::uint64_t leading_coeff() const;
    std::uint64_t constant_coeff() const { return coeff(0); }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly operator+(const Poly& rhs) const { return add(*this, rhs); }
    Poly operator-(const Poly& rhs) const { return sub(*this, rhs); }
    Poly operator*(const Poly& rhs) const { return mul(*this, rhs); }
    Poly operator-() const;
    Poly scaled(std::int64_t c) const;

    static Poly add(const Poly& p, const Poly& q);
    static Poly sub(const Poly& p, const Poly& q);
    static Poly mul(const Poly& p, const Poly& q);

private:
    void normalize();
    static void check_same_modulus(const Poly& p, const Poly& q);

    Modulus m_;
    std::vector<std::uint64_t> coeffs_; // ascending, normalized
};

/// g(s(x)).
Poly compose(const Poly& g, const Poly& s);

/// Nilpotent iff every coefficient is nilpotent (N(R[x]) = N(R)R[x]).
bool is_nilpotent_poly(const Poly& f);

/// Unit iff the constant term is a unit and all higher coefficients are
/// nilpotent.
bool is_unit_poly(const Poly& f);

/// Unique base-f representation g = sum g_k f^k with each g_k zero or of
/// degree < deg f. Requires deg f >= 1 with unit leading coefficient
/// (BadDivisor otherwise) and g != 0 (ZeroInput). The reassembly is verified
/// before returning.
std::vector<Poly> f_adic_expand(const Poly& g, const Poly& f);

/// g in R[f]? Exact via base-f expansion for deg f >= 1 with unit leading
/// coefficient; for constant f, R[f] = R.
bool in_subring(const Poly& g, const Poly& f);

/// Is R[f] a polynomial ring over Z_n? Decided by the annihilator criterion
/// specialized to Z_n: the gcd of all positive-degree coefficients of f
/// together with n equals 1.
bool generates_polynomial_ring(const Poly& f);

/// Display form, descending: "3x^2+2x+1"; "0" for zero.
std::string to_string(const Poly& p);

/// Wire form, ascending coefficients: "[1,2,3]".
std::string to_coeff_array(const Poly& p);

} // namespace ringauto
