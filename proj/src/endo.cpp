#include "ringauto/endo.hpp"

#include <bit>
#include <vector>

namespace ringauto {

namespace {
constexpr std::uint64_t kBruteforceGuard = 10'000'000;
}

Poly GilmerForm::reassemble() const {
    const Modulus m = a.modulus();
    Poly tail(m);
    if (!f.is_zero()) {
        std::vector<std::uint64_t> shifted(f.coeffs().size() + 2, 0);
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            shifted[i + 2] = f.coeffs()[i];
        tail = Poly(std::move(shifted), m);
    }
    return Poly({static_cast<std::int64_t>(a.value()),
                 static_cast<std::int64_t>(u.value())},
                m) +
           tail;
}

std::optional<GilmerForm> classify(const Endo& s) {
    const Modulus m = s.modulus();
    const Poly& img = s.image();
    const Residue u(img.coeff(1), m);
    if (!is_unit(u)) return std::nullopt;
    const auto& c = img.coeffs();
    std::vector<std::uint64_t> tail;
    for (std::size_t i = 2; i < c.size(); ++i) {
        if (!is_nilpotent(Residue(c[i], m))) return std::nullopt;
        tail.push_back(c[i]);
    }
    return GilmerForm{Residue(img.coeff(0), m), u, Poly(std::move(tail), m)};
}

Poly apply(const Endo& s, const Poly& g) {
    return compose(g, s.image());
}

Endo compose(const Endo& s, const Endo& t) {
    return Endo(compose(t.image(), s.image()));
}

Endo invert(const Endo& s) {
    const auto form = classify(s);
    if (!form) throw NotInvertible("endomorphism is not an automorphism");
    const Modulus m = s.modulus();
    const Poly x = Poly::x(m);
    const std::uint64_t uinv = inverse(form->u).value();
    const Poly x_minus_a =
        x - Poly::constant(static_cast<std::int64_t>(form->a.value()), m);

    // h <- u^{-1}(x - a - h^2 f(h)) converges within the nilpotency index of
    // N(Z_n); the bit length of n is a generous cap.
    Poly h = x_minus_a.scaled(static_cast<std::int64_t>(uinv));
    for (unsigned i = 0; i <= std::bit_width(m.n()) + 1; ++i) {
        const Poly next =
            (x_minus_a - h * h * compose(form->f, h)).scaled(static_cast<std::int64_t>(uinv));
        if (next == h) break;
        h = next;
    }
    const Endo inv{h};
    if (compose(s, inv).image() != x || compose(inv, s).image() != x)
        throw InternalCheckFailed("invert: verification failed");
    return inv;
}

std::uint64_t order(const Endo& s, std::uint64_t cap) {
    if (!classify(s)) throw NotInvertible("order of a non-automorphism");
    const Modulus m = s.modulus();
    if (cap == 0) cap = 4 * m.n() * m.n();
    const Poly x = Poly::x(m);
    Endo acc = s;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (acc.image() == x) return k;
        acc = compose(acc, s);
    }
    throw OrderExceedsCap("order exceeds cap");
}

bool is_automorphism_bruteforce(const Endo& s, unsigned deg_cap) {
    const Modulus m = s.modulus();
    const std::uint64_t n = m.n();
    const Poly& simg = s.image();
    const unsigned max_deg = deg_cap + 1; // n^(deg_cap+2) coefficient vectors

    double space = 1;
    for (unsigned i = 0; i <= max_deg; ++i) space *= static_cast<double>(n);
    if (space > static_cast<double>(kBruteforceGuard))
        throw SearchSpaceTooLarge("automorphism search space exceeds guard");

    if (simg.is_zero() || *simg.degree() == 0)
        return false; // t(s) is constant for every t
    const std::size_t sdeg = *simg.degree();
    const Poly x = Poly::x(m);

    // Enumerate candidates t = t_0 + t_1 x + ... + t_{max_deg} x^{max_deg}
    // with t(s) = x. The digits t_{max_deg}..t_2 are walked with incremental
    // partial sums; the final linear constraint t_1*s + t_0 = x - p pins
    // (t_1, t_0) exactly, so every candidate is covered.
    std::vector<Poly> spow;
    spow.push_back(Poly::constant(1, m));
    for (unsigned k = 1; k <= max_deg; ++k) spow.push_back(spow.back() * simg);

    std::vector<std::uint64_t> digits(max_deg + 1, 0);

    const auto try_finish = [&](const Poly& p) -> bool {
        const Poly rhs = x - p;
        if (rhs.degree() && *rhs.degree() > sdeg) return false;
        std::size_t j0 = 1;
        while (simg.coeff(j0) == 0) ++j0;
        for (const Residue& t1 :
             solve_linear(Residue(simg.coeff(j0), m), Residue(rhs.coeff(j0), m))) {
            bool ok = true;
            for (std::size_t j = 1; j <= sdeg && ok; ++j)
                if (mulmod(t1.value(), simg.coeff(j), n) != rhs.coeff(j)) ok = false;
            if (!ok) continue;
            digits[0] = submod(rhs.coeff(0), mulmod(t1.value(), simg.coeff(0), n), n);
            digits[1] = t1.value();
            const Poly cand(digits, m);
            if (compose(cand, simg) == x && compose(simg, cand) == x) return true;
        }
        return false;
    };

    // Digits above level k can still contribute degree <= k*sdeg; prune a
    // subtree as soon as the fixed part exceeds what remains reachable.
    const auto enumerate = [&](const auto& self, std::size_t k, Poly p) -> bool {
        if (p.degree() && *p.degree() > k * sdeg) return false;
        if (k == 1) return try_finish(p);
        for (std::uint64_t v = 0; v < n; ++v) {
            digits[k] = v;
            if (self(self, k - 1, p)) return true;
            p = p + spow[k];
        }
        digits[k] = 0;
        return false;
    };

    if (max_deg >= 2) return enumerate(enumerate, max_deg, Poly(m));
    return try_finish(Poly(m));
}

NonnormalityWitness nonnormality_witness(Modulus mod) {
    const std::uint64_t n = mod.n();
    std::uint64_t r = 0;
    for (std::uint64_t c = 2; c < n; ++c) {
        if (mulmod(c, c, n) == 0) {
            r = c;
            break;
        }
    }
    if (r == 0) throw RingIsReduced("no nonzero square-zero element");

    std::uint64_t m = 0;
    for (std::uint64_t k = 3;; ++k) {
        const std::uint64_t binom = (k % 2 == 0)
                                        ? mulmod(k / 2, (k - 1) % n, n)
                                        : mulmod((k - 1) / 2 % n, k % n, n);
        if (mulmod(binom, r, n) != 0) {
            m = k;
            break;
        }
        if (k > 4 * n) throw InternalCheckFailed("no valid exponent found");
    }

    const Endo alpha(Poly({1, 1}, mod));
    std::vector<std::uint64_t> sc(m + 1, 0);
    sc[1] = 1;
    sc[2] = addmod(sc[2], r, n); // m == 2 cannot happen (m >= 3)
    sc[m] = addmod(sc[m], r, n);
    const Endo sigma{Poly(std::move(sc), mod)};

    const Endo conj = compose(compose(invert(sigma), alpha), sigma);
    bool nonbasic = false;
    const auto& cc = conj.image().coeffs();
    for (std::size_t i = 2; i < cc.size(); ++i)
        if (cc[i] != 0) nonbasic = true;
    if (!nonbasic)
        throw InternalCheckFailed("nonnormality witness conjugate is basic");
    return NonnormalityWitness{alpha, sigma, conj, r, m};
}

} // namespace ringauto
