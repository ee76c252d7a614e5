#include "ringauto/basic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ringauto {

namespace {
constexpr std::uint64_t kEnumerationGuard = 10'000'000;
}

BasicAut::BasicAut(std::int64_t u, std::int64_t a, Modulus m)
    : u_(Residue::reduce(u, m.n())), a_(Residue::reduce(a, m.n())), m_(m) {
    if (gcd_u64(u_, m.n()) != 1)
        throw NotAUnit("basic automorphism needs a unit u");
}

BasicAut BasicAut::with_divisor_a(std::uint64_t u, std::uint64_t a, Modulus m) {
    BasicAut s(static_cast<std::int64_t>(u), 0, m);
    s.a_ = a; // a in [1, n]; n stands for 0
    return s;
}

BasicAut mul(const BasicAut& s, const BasicAut& t) {
    if (s.modulus() != t.modulus())
        throw ModulusMismatch("basic product across moduli");
    const std::uint64_t n = s.modulus().n();
    return BasicAut(static_cast<std::int64_t>(mulmod(s.u(), t.u(), n)),
                    static_cast<std::int64_t>(
                        addmod(mulmod(t.u(), s.a(), n), t.a(), n)),
                    s.modulus());
}

BasicAut inverse(const BasicAut& s) {
    const std::uint64_t n = s.modulus().n();
    const std::uint64_t uinv = inverse(Residue(s.u(), s.modulus())).value();
    return BasicAut(static_cast<std::int64_t>(uinv),
                    static_cast<std::int64_t>(
                        submod(0, mulmod(uinv, s.a() % n, n), n)),
                    s.modulus());
}

bool are_conjugate(const BasicAut& s, const BasicAut& t) {
    if (s.modulus() != t.modulus())
        throw ModulusMismatch("conjugacy across moduli");
    const std::uint64_t n = s.modulus().n();
    if (s.u() % n != t.u() % n) return false;
    const std::uint64_t um1 = submod(s.u(), 1, n);
    return gcd_all({um1, s.a() % n}, s.modulus()) ==
           gcd_all({um1, t.a() % n}, s.modulus());
}

bool are_conjugate_bruteforce(const BasicAut& s, const BasicAut& t) {
    for (const BasicAut& g : all_elements(s.modulus()))
        if (mul(mul(inverse(g), s), g) == t) return true;
    return false;
}

std::optional<BasicAut> conjugacy_witness(const BasicAut& s, const BasicAut& t) {
    if (!are_conjugate(s, t)) return std::nullopt;
    const Modulus m = s.modulus();
    const std::uint64_t n = m.n();
    const Residue vm1(submod(t.u(), 1, n), m);
    for (std::uint64_t w : units(m)) {
        const Residue rhs(submod(mulmod(w, s.a() % n, n), t.a() % n, n), m);
        const auto cs = solve_linear(vm1, rhs);
        if (cs.empty()) continue;
        const BasicAut g(static_cast<std::int64_t>(w),
                         static_cast<std::int64_t>(cs.front().value()), m);
        if (mul(mul(inverse(g), s), g) == t) return g;
    }
    return std::nullopt; // unreachable when are_conjugate holds
}

BasicAut canonical_rep(const BasicAut& s) {
    const std::uint64_t n = s.modulus().n();
    const std::uint64_t d =
        gcd_all({submod(s.u(), 1, n), s.a() % n}, s.modulus());
    return BasicAut::with_divisor_a(s.u(), d, s.modulus());
}

std::vector<BasicAut> all_elements(Modulus n) {
    std::vector<BasicAut> out;
    for (std::uint64_t u : units(n))
        for (std::uint64_t a = 0; a < n.n(); ++a)
            out.emplace_back(static_cast<std::int64_t>(u),
                             static_cast<std::int64_t>(a), n);
    return out;
}

std::vector<ConjClass> enumerate_classes(Modulus n) {
    const std::uint64_t group_order = n.n() * euler_phi(n);
    if (group_order > kEnumerationGuard)
        throw SearchSpaceTooLarge("class enumeration exceeds guard");
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> sizes;
    for (const BasicAut& s : all_elements(n)) {
        const BasicAut rep = canonical_rep(s);
        ++sizes[{rep.u(), rep.a()}];
    }
    std::vector<ConjClass> out;
    out.reserve(sizes.size());
    std::uint64_t total = 0;
    for (const auto& [key, count] : sizes) {
        out.push_back(
            ConjClass{BasicAut::with_divisor_a(key.first, key.second, n), count});
        total += count;
        if (group_order % count != 0)
            throw InternalCheckFailed("class size does not divide group order");
    }
    if (total != group_order)
        throw InternalCheckFailed("class sizes do not sum to the group order");
    return out;
}

std::uint64_t psi(Modulus n) {
    std::uint64_t result = 1;
    for (auto [p, e] : factorize(n)) {
        std::uint64_t pe = 1, pe1 = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        for (unsigned i = 0; i + 1 < e; ++i) pe1 *= p;
        result *= (pe1 - 1) / (p - 1) + pe;
    }
    return result;
}

std::uint64_t psi_bruteforce(Modulus n) {
    const auto elems = all_elements(n);
    if (elems.size() * elems.size() > kEnumerationGuard * 10)
        throw SearchSpaceTooLarge("orbit partition exceeds guard");
    std::vector<bool> seen(elems.size(), false);
    const auto index = [&](const BasicAut& s) {
        // elements are ordered by (u, a); binary search by key
        const auto it = std::lower_bound(
            elems.begin(), elems.end(), s,
            [](const BasicAut& x, const BasicAut& y) {
                return std::pair(x.u(), x.a()) < std::pair(y.u(), y.a());
            });
        return static_cast<std::size_t>(it - elems.begin());
    };
    std::uint64_t classes = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (seen[i]) continue;
        ++classes;
        for (const BasicAut& g : elems)
            seen[index(mul(mul(inverse(g), elems[i]), g))] = true;
    }
    return classes;
}

std::pair<BasicAut, BasicAut> crt_split(const BasicAut& s, Modulus r, Modulus q) {
    const std::uint64_t n = s.modulus().n();
    if (r.n() * q.n() != n || gcd_u64(r.n(), q.n()) != 1)
        throw BadFactorization("crt_split needs n = r*q with coprime r, q");
    return {BasicAut(static_cast<std::int64_t>(s.u() % r.n()),
                     static_cast<std::int64_t>(s.a() % r.n()), r),
            BasicAut(static_cast<std::int64_t>(s.u() % q.n()),
                     static_cast<std::int64_t>(s.a() % q.n()), q)};
}

Endo to_endo(const BasicAut& s) {
    return Endo(Poly({static_cast<std::int64_t>(s.a() % s.modulus().n()),
                      static_cast<std::int64_t>(s.u())},
                     s.modulus()));
}

std::string to_string(const BasicAut& s) {
    std::ostringstream os;
    os << s.u() << "*x+" << s.a();
    return os.str();
}

} // namespace ringauto
