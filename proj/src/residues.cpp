#include "ringauto/residues.hpp"

#include <bit>
#include <utility>

namespace ringauto {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    a %= n;
    b %= n;
    std::uint64_t s = a + b; // cannot wrap: both < n <= 2^63 is not guaranteed,
    if (s < a) {             // so handle the carry explicitly.
        return (a - (n - b)) % n;
    }
    return s % n;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    a %= n;
    b %= n;
    return a >= b ? a - b : a + (n - b);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

XgcdResult xgcd(std::uint64_t a, std::uint64_t b) {
    // Bezout coefficients stay below max(a, b), so __int128 is ample.
    __int128 old_r = a, r = b;
    __int128 old_s = 1, s = 0;
    __int128 old_t = 0, t = 1;
    while (r != 0) {
        __int128 q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    return XgcdResult{static_cast<std::uint64_t>(old_r),
                      static_cast<std::int64_t>(old_s),
                      static_cast<std::int64_t>(old_t)};
}

Residue Residue::operator+(const Residue& rhs) const {
    if (m_ != rhs.m_) throw ModulusMismatch("residue addition across moduli");
    return Residue(addmod(v_, rhs.v_, m_.n()), m_);
}

Residue Residue::operator-(const Residue& rhs) const {
    if (m_ != rhs.m_) throw ModulusMismatch("residue subtraction across moduli");
    return Residue(submod(v_, rhs.v_, m_.n()), m_);
}

Residue Residue::operator*(const Residue& rhs) const {
    if (m_ != rhs.m_) throw ModulusMismatch("residue product across moduli");
    return Residue(mulmod(v_, rhs.v_, m_.n()), m_);
}

std::uint64_t gcd_all(const std::vector<std::uint64_t>& xs, Modulus n) {
    std::uint64_t g = n.n();
    for (std::uint64_t x : xs) g = gcd_u64(g, x);
    return g;
}

bool is_unit(const Residue& r) {
    return gcd_u64(r.value(), r.modulus().n()) == 1;
}

Residue inverse(const Residue& r) {
    const std::uint64_t n = r.modulus().n();
    XgcdResult e = xgcd(r.value(), n);
    if (e.g != 1) throw NotAUnit("no inverse: gcd(value, n) != 1");
    return Residue(e.s, r.modulus());
}

bool is_nilpotent(const Residue& r) {
    const std::uint64_t n = r.modulus().n();
    const unsigned k = std::bit_width(n);
    return powmod(r.value(), k, n) == 0;
}

std::vector<Residue> solve_linear(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("solve_linear across moduli");
    const std::uint64_t n = a.modulus().n();
    const std::uint64_t g = gcd_u64(a.value(), n); // gcd(0, n) = n
    std::vector<Residue> out;
    if (b.value() % g != 0) return out;
    // Divide through by g and solve over Z_{n/g}, then lift the g solutions.
    const std::uint64_t n1 = n / g;
    std::uint64_t base = 0;
    if (n1 > 1) {
        const std::uint64_t a1 = (a.value() / g) % n1;
        const std::uint64_t b1 = (b.value() / g) % n1;
        base = mulmod(inverse(Residue(a1, Modulus(n1))).value(), b1, n1);
    }
    out.reserve(g);
    for (std::uint64_t k = 0; k < g; ++k) // base < n1, so already ascending
        out.emplace_back(base + k * n1, a.modulus());
    return out;
}

std::uint64_t unit_in_progression(std::uint64_t a, std::uint64_t b, Modulus n) {
    if (a == 0 || b == 0 || gcd_u64(a, b) != 1)
        throw BadInput("unit_in_progression requires positive coprime a, b");
    // r = product of prime factors of n that do not divide b.
    std::uint64_t r = 1;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        if (b % p != 0) r *= p;
    }
    if (r == 1) return 0; // every prime of n divides b, so gcd(a, n) = 1 already
    const std::uint64_t binv = inverse(Residue(b, Modulus(r))).value();
    const std::uint64_t k =
        mulmod(Residue::reduce(1 - static_cast<std::int64_t>(a % r), r), binv, r);
    return k;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(Modulus n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    std::uint64_t m = n.n();
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::uint64_t radical(Modulus n) {
    std::uint64_t r = 1;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        r *= p;
    }
    return r;
}

std::uint64_t euler_phi(Modulus n) {
    std::uint64_t phi = n.n();
    for (auto [p, e] : factorize(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

std::vector<std::uint64_t> units(Modulus n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 1; u < n.n(); ++u)
        if (gcd_u64(u, n.n()) == 1) out.push_back(u);
    return out;
}

std::uint64_t unit_scaling_to_gcd(std::uint64_t a, Modulus n) {
    a %= n.n();
    if (a == 0) throw BadInput("unit_scaling_to_gcd: a is zero mod n");
    const std::uint64_t d = gcd_u64(a, n.n());
    const std::uint64_t n1 = n.n() / d; // >= 2 since a != 0 mod n
    const std::uint64_t t = inverse(Residue(a / d, Modulus(n1))).value();
    const std::uint64_t k = unit_in_progression(t, n1, n);
    return t + k * n1;
}

} // namespace ringauto
