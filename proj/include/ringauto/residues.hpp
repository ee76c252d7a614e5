#pragma once

// Exact arithmetic in Z_n: gcd machinery, units, nilpotents, linear
// congruences and the constructive unit-in-arithmetic-progression lemma.
//
// All values are immutable after construction and every operation is a pure
// function; nothing here has interior mutability, so everything can be shared
// across threads read-only.

#include <concepts>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "ringauto/errors.hpp"

namespace ringauto {

/// The base ring Z_n. Only n >= 2 is a ring we care about.
class Modulus {
public:
    explicit Modulus(std::uint64_t n) : n_(n) {
        if (n < 2) throw BadInput("modulus must be >= 2");
    }
    std::uint64_t n() const { return n_; }
    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::uint64_t n_;
};

/// An element of Z_n, stored as its least nonnegative representative.
class Residue {
public:
    template <std::integral T>
    Residue(T value, Modulus m) : v_(0), m_(m) {
        if constexpr (std::is_signed_v<T>)
            v_ = reduce(value, m.n());
        else
            v_ = value % m.n();
    }

    std::uint64_t value() const { return v_; }
    Modulus modulus() const { return m_; }

    friend bool operator==(const Residue&, const Residue&) = default;

    Residue operator+(const Residue& rhs) const;
    Residue operator-(const Residue& rhs) const;
    Residue operator*(const Residue& rhs) const;
    Residue operator-() const { return Residue(m_.n() - v_, m_); }

    static std::uint64_t reduce(std::int64_t value, std::uint64_t n) {
        std::int64_t r = value % static_cast<std::int64_t>(n);
        if (r < 0) r += static_cast<std::int64_t>(n);
        return static_cast<std::uint64_t>(r);
    }

private:
    std::uint64_t v_;
    Modulus m_;
};

// ---- word-size modular helpers (n fits in 64 bits, products via 128) ----

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b).
struct XgcdResult {
    std::uint64_t g;
    std::int64_t s;
    std::int64_t t;
};
XgcdResult xgcd(std::uint64_t a, std::uint64_t b);

// ---- ring-theoretic operations ----

/// gcd of all xs together with n; the empty list yields n, so the result is
/// always a positive divisor of n (gcd(0, m) = m convention).
std::uint64_t gcd_all(const std::vector<std::uint64_t>& xs, Modulus n);

bool is_unit(const Residue& r);

/// Multiplicative inverse; throws NotAUnit if gcd(value, n) != 1.
Residue inverse(const Residue& r);

/// True iff r^k = 0 for k the bit length of n (sufficient exponent: every
/// prime-power exponent in n is at most log2 n).
bool is_nilpotent(const Residue& r);

/// All c with a*c = b (mod n), ascending. Empty iff gcd(a, n) does not
/// divide b; otherwise exactly gcd(a, n) solutions.
std::vector<Residue> solve_linear(const Residue& a, const Residue& b);

/// Least k in the constructive residue class such that gcd(a + k*b, n) = 1:
/// with r the product of prime factors of n not dividing b,
/// k = (1 - a) * b^{-1} (mod r). Requires gcd(a, b) = 1 and a, b > 0.
std::uint64_t unit_in_progression(std::uint64_t a, std::uint64_t b, Modulus n);

/// Trial-division factorization, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(Modulus n);

/// Product of the distinct prime factors of n.
std::uint64_t radical(Modulus n);

std::uint64_t euler_phi(Modulus n);

/// Units of Z_n as ascending representatives in [1, n).
std::vector<std::uint64_t> units(Modulus n);

/// A unit w with w * a = gcd(a, n) (mod n); requires a != 0 (mod n).
/// This is the normalization step behind canonical echelon pivots.
std::uint64_t unit_scaling_to_gcd(std::uint64_t a, Modulus n);

} // namespace ringauto
