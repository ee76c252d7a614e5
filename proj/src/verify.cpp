#include "ringauto/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ringauto/basic.hpp"
#include "ringauto/endo.hpp"
#include "ringauto/fixedring.hpp"
#include "ringauto/gz4.hpp"
#include "ringauto/poly.hpp"
#include "ringauto/residues.hpp"

namespace ringauto::suites {

namespace {

bool report(std::ostream& out, const std::string& what, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << what << '\n';
    return ok;
}

} // namespace

bool residues(std::ostream& out) {
    bool all = true;

    bool inv_ok = true;
    for (std::uint64_t n = 2; n <= 100; ++n) {
        const Modulus m(n);
        for (std::uint64_t u : units(m)) {
            const Residue r(u, m);
            if (inverse(inverse(r)) != r) inv_ok = false;
        }
    }
    all &= report(out, "residues: inverse is an involution (n <= 100)", inv_ok);

    bool solve_ok = true;
    for (std::uint64_t n = 2; n <= 30; ++n) {
        const Modulus m(n);
        for (std::uint64_t a = 0; a < n; ++a) {
            for (std::uint64_t b = 0; b < n; ++b) {
                const auto sols = solve_linear(Residue(a, m), Residue(b, m));
                const std::uint64_t g = gcd_all({a}, m);
                const std::size_t expected = b % g == 0 ? g : 0;
                if (sols.size() != expected) solve_ok = false;
                std::set<std::uint64_t> seen;
                for (const Residue& c : sols) {
                    if (mulmod(a, c.value(), n) != b % n) solve_ok = false;
                    seen.insert(c.value());
                }
                if (seen.size() != sols.size()) solve_ok = false;
            }
        }
    }
    all &= report(out, "residues: solve_linear by substitution (n <= 30)",
                  solve_ok);

    bool nil_ok = true;
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        const Modulus m(n);
        const std::uint64_t rad = radical(m);
        for (std::uint64_t v = 0; v < n; ++v)
            if (is_nilpotent(Residue(v, m)) != (v % rad == 0)) nil_ok = false;
    }
    all &= report(out, "residues: nilpotent iff divisible by rad(n) (n <= 1000)",
                  nil_ok);

    bool prog_ok = true;
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t n = 2 + rng() % 999999;
        const std::uint64_t a = 1 + rng() % 9999;
        std::uint64_t b;
        do {
            b = 1 + rng() % 9999;
        } while (gcd_u64(a, b) != 1);
        const std::uint64_t k = unit_in_progression(a, b, Modulus(n));
        if (gcd_u64(a + k * b, n) != 1) prog_ok = false;
        // Linear-scan oracle: some k0 <= k must already work.
        std::uint64_t k0 = 0;
        while (gcd_u64(a + k0 * b, n) != 1) ++k0;
        if (k0 > k) prog_ok = false;
    }
    all &= report(out, "residues: unit_in_progression on 1000 random inputs",
                  prog_ok);
    return all;
}

bool gilmer(std::ostream& out, const std::vector<std::uint64_t>& moduli) {
    bool all = true;
    for (const std::uint64_t n : moduli) {
        const Modulus m(n);
        bool ok = true;
        std::uint64_t autos = 0;
        std::vector<std::int64_t> c(4, 0);
        const std::uint64_t total = n * n * n * n;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rest = code;
            for (int i = 0; i < 4; ++i) {
                c[static_cast<std::size_t>(i)] =
                    static_cast<std::int64_t>(rest % n);
                rest /= n;
            }
            const Endo s{Poly(c, m)};
            const bool closed_form = classify(s).has_value();
            const bool searched = is_automorphism_bruteforce(s, 4);
            if (closed_form != searched) ok = false;
            if (closed_form) ++autos;
        }
        std::ostringstream what;
        what << "gilmer: criterion == exhaustive search, deg <= 3, n = " << n
             << " (" << autos << " automorphisms)";
        all &= report(out, what.str(), ok);
    }
    return all;
}

namespace {

// Brute-force orbit labels for all of B(Z_n), in all_elements order.
std::vector<std::size_t> conjugacy_orbits(const std::vector<BasicAut>& elems) {
    const auto index = [&](const BasicAut& s) {
        const auto it = std::lower_bound(
            elems.begin(), elems.end(), s,
            [](const BasicAut& x, const BasicAut& y) {
                return std::pair(x.u(), x.a()) < std::pair(y.u(), y.a());
            });
        return static_cast<std::size_t>(it - elems.begin());
    };
    std::vector<std::size_t> orbit(elems.size(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (orbit[i] != SIZE_MAX) continue;
        for (const BasicAut& g : elems)
            orbit[index(mul(mul(inverse(g), elems[i]), g))] = next;
        ++next;
    }
    return orbit;
}

} // namespace

bool conjugacy(std::ostream& out, std::uint64_t max_n) {
    bool all = true;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        const Modulus m(n);
        const auto elems = all_elements(m);
        const auto orbit = conjugacy_orbits(elems);
        bool ok = true;

        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = 0; j < elems.size(); ++j) {
                const bool formula = are_conjugate(elems[i], elems[j]);
                if (formula != (orbit[i] == orbit[j])) ok = false;
                if (!formula) continue;
                if (elems[i].u() != elems[j].u()) ok = false;
                const auto g = conjugacy_witness(elems[i], elems[j]);
                if (!g || mul(mul(inverse(*g), elems[i]), *g) != elems[j])
                    ok = false;
            }
            const BasicAut rep = canonical_rep(elems[i]);
            if (canonical_rep(rep) != rep) ok = false;
            if (!are_conjugate(elems[i], rep)) ok = false;
        }

        const auto classes = enumerate_classes(m);
        const std::size_t orbits =
            orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;
        if (classes.size() != orbits) ok = false;
        if (classes.size() != psi(m)) ok = false;
        for (std::size_t i = 1; i < classes.size(); ++i)
            if (std::pair(classes[i - 1].rep.u(), classes[i - 1].rep.a()) >=
                std::pair(classes[i].rep.u(), classes[i].rep.a()))
                ok = false;

        std::ostringstream what;
        what << "conjugacy: formula == orbits, witnesses verified, n = " << n
             << " (" << classes.size() << " classes)";
        all &= report(out, what.str(), ok);
    }
    return all;
}

namespace {

Endo z4_endo(std::initializer_list<std::int64_t> image) {
    return Endo(Poly(image, Modulus(4)));
}

} // namespace

bool fixedrings(std::ostream& out) {
    bool all = true;
    const Modulus m4(4);
    const Poly y({0, 1, -1}, m4);

    struct Fixture {
        std::string name;
        std::vector<Endo> gens;
        Z4Case expected;
        std::optional<Poly> f;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"<alpha_2>", {z4_endo({2, 1})}, Z4Case::X2_2X, {}});
    fixtures.push_back({"<alpha_2x>", {z4_endo({0, 3})}, Z4Case::X2_2X, {}});
    fixtures.push_back(
        {"<beta_0>", {z4_endo({1, 3})}, Z4Case::YPlusXF, Poly(m4)});
    fixtures.push_back(
        {"<beta_2>", {z4_endo({3, 3})}, Z4Case::YPlusXF, Poly({2}, m4)});
    fixtures.push_back({"<theta>", {z4_endo({1, 1})}, Z4Case::Y2_2Y, {}});
    fixtures.push_back({"<beta_2y>",
                        {z4_endo({1, 1, 2})},
                        Z4Case::YPlusXF,
                        y.scaled(2)});
    fixtures.push_back({"closure(alpha_2, beta_0)",
                        {z4_endo({2, 1}), z4_endo({1, 3})},
                        Z4Case::Y2_2Y,
                        {}});
    {
        std::vector<Endo> gens;
        for (const GAut4& s : pool(3)) gens.push_back(to_endo(s));
        fixtures.push_back({"degree-3 pool", std::move(gens), Z4Case::Y2_2Y, {}});
    }

    for (const Fixture& fx : fixtures) {
        bool ok = true;
        try {
            const Z4Verdict v =
                identify_z4(SubgroupSpec(m4, fx.gens), 8);
            if (v.kind != fx.expected) ok = false;
            if (fx.f && (!v.f || *v.f != *fx.f)) ok = false;
        } catch (const RingError&) {
            ok = false;
        }
        all &= report(out,
                      "fixedrings: catalog fixture " + fx.name +
                          " at (D=8, W=16)",
                      ok);
    }

    all &= report(out, "fixedrings: Z_2 invariants = Z_2[(x^2-x)^1] at D=8",
                  samuel_check(2, 8));
    all &= report(out, "fixedrings: Z_3 invariants = Z_3[(x^3-x)^2] at D=12",
                  samuel_check(3, 12));
    return all;
}

bool gz4(std::ostream& out) {
    bool all = true;
    const Modulus m4(4);
    const auto basics = basic_elements();

    for (const unsigned d : {2u, 5u}) {
        const auto P = pool(d);
        bool law_ok = true, conj_form_ok = true, center_ok = true;

        for (const GAut4& s : P) {
            for (const GAut4& t : P) {
                if (to_endo(mul(s, t)) != compose(to_endo(s), to_endo(t)))
                    law_ok = false;
                if (conjugate(t, s) != mul(mul(inverse(s), t), s))
                    conj_form_ok = false;
            }
            bool commutes_with_all = true;
            for (const GAut4& t : P)
                if (mul(s, t) != mul(t, s)) commutes_with_all = false;
            if (is_central(s) != commutes_with_all) center_ok = false;
        }
        std::ostringstream tag;
        tag << " (pool degree " << d << ", " << P.size() << " elements)";
        all &= report(out, "gz4: law matches endo composition" + tag.str(),
                      law_ok);
        all &= report(out, "gz4: closed conjugation forms" + tag.str(),
                      conj_form_ok);
        all &= report(out, "gz4: center = prime-fixed alphas" + tag.str(),
                      center_ok);

        // Conjugacy formula vs. orbits; conjugators one degree higher are
        // enough to realize every class inside the pool.
        bool classes_ok = true;
        const auto wide = pool(d + 1);
        std::map<GAut4, std::size_t> orbit_of;
        std::size_t next = 0;
        for (const GAut4& s : P) {
            if (orbit_of.count(s)) continue;
            for (const GAut4& g : wide) {
                const GAut4 c = conjugate(s, g);
                if (std::binary_search(P.begin(), P.end(), c))
                    orbit_of.emplace(c, next);
            }
            ++next;
        }
        for (const GAut4& s : P)
            for (const GAut4& t : P)
                if (are_conjugate(s, t) != (orbit_of.at(s) == orbit_of.at(t)))
                    classes_ok = false;
        // Class shapes: central alphas are singletons, other alphas pair up
        // with the primed partner, and the prime-fixed betas form one class.
        for (const GAut4& s : P) {
            if (!s.is_alpha()) continue;
            const GAut4 partner(GKind::Alpha, prime(s.f()));
            std::size_t size = 0;
            for (const auto& [e, o] : orbit_of)
                if (o == orbit_of.at(s)) ++size;
            if (is_central(s) ? size != 1 : (size != 2 || orbit_of.at(partner) != orbit_of.at(s)))
                classes_ok = false;
        }
        const GAut4 beta0(GKind::Beta, Poly(m4));
        for (const GAut4& s : P)
            if (!s.is_alpha() &&
                (orbit_of.at(s) == orbit_of.at(beta0)) != prime_fixed(s.f()))
                classes_ok = false;
        all &= report(out, "gz4: conjugacy classes" + tag.str(), classes_ok);

        // Order facts via iterated endo composition.
        bool orders_ok = true;
        for (const GAut4& s : P) {
            const std::uint64_t ord = order(to_endo(s));
            if (s.is_alpha())
                orders_ok &= ord == (s.f().is_zero() ? 1u : 2u);
            else
                orders_ok &= ord == (prime_fixed(s.f()) ? 2u : 4u);
        }
        all &= report(out, "gz4: alpha/beta orders" + tag.str(), orders_ok);

        // The four stabilizer identities.
        bool stab_ok = true;
        {
            const Poly x = Poly::x(m4);
            const Poly x2 = Poly({0, 0, 1}, m4);
            const Poly two_x = Poly({0, 2}, m4);
            const Poly y = Poly({0, 1, -1}, m4);
            if (stabilizer({x}, d).elements() !=
                std::vector<GAut4>{GAut4(GKind::Alpha, Poly(m4))})
                stab_ok = false;
            std::vector<GAut4> alphas;
            for (const GAut4& s : P)
                if (s.is_alpha()) alphas.push_back(s);
            if (stabilizer({x2, two_x}, d).elements() != alphas) stab_ok = false;
            if (stabilizer({y * y, y.scaled(2)}, d).elements() != P)
                stab_ok = false;
            for (const Poly& f : {Poly(m4), Poly({2}, m4), y.scaled(2)}) {
                std::vector<GAut4> expect{GAut4(GKind::Alpha, Poly(m4)),
                                          GAut4(GKind::Beta, f)};
                std::sort(expect.begin(), expect.end());
                if (stabilizer({y + x * f}, d).elements() != expect)
                    stab_ok = false;
            }
        }
        all &= report(out, "gz4: stabilizer identities" + tag.str(), stab_ok);
    }

    // Basic-conjugacy condition: for each basic sigma, the class within the
    // 8-element basic group equals the full class intersected with it.
    bool basic_ok = true;
    for (const GAut4& s : basics) {
        std::set<GAut4> in_bx;
        for (const GAut4& g : basics) in_bx.insert(conjugate(s, g));
        std::set<GAut4> global_cap;
        for (const GAut4& t : basics)
            if (are_conjugate(s, t)) global_cap.insert(t);
        if (in_bx != global_cap) basic_ok = false;
    }
    all &= report(out, "gz4: [sigma]_Bx = [sigma]_G intersect Bx for the 8 basics",
                  basic_ok);

    // Pool-conjugate basics with equal u are already basic-conjugate
    // (checked exhaustively at pool degree 2).
    bool t26_ok = true;
    {
        const auto P2 = pool(2);
        for (const GAut4& s : basics) {
            for (const GAut4& t : basics) {
                const auto es = to_endo(s).image();
                const auto et = to_endo(t).image();
                if (es.coeff(1) != et.coeff(1)) continue;
                bool pool_conj = false;
                for (const GAut4& g : P2)
                    if (conjugate(s, g) == t) pool_conj = true;
                bool basic_conj = false;
                for (const GAut4& g : basics)
                    if (conjugate(s, g) == t) basic_conj = true;
                if (pool_conj && !basic_conj) t26_ok = false;
            }
        }
    }
    all &= report(out, "gz4: equal-u pool conjugacy implies basic conjugacy",
                  t26_ok);

    // sigma^{-1} B_z sigma = B_x for z = sigma(x), over the degree-2 pool.
    bool bz_ok = true;
    for (const GAut4& s : pool(2)) {
        const Endo sig = to_endo(s);
        const Endo sig_inv = invert(sig);
        std::set<std::vector<std::uint64_t>> back, bx;
        for (const GAut4& b : basics) {
            const Endo bz = compose(compose(sig, to_endo(b)), sig_inv);
            back.insert(compose(compose(sig_inv, bz), sig).image().coeffs());
            bx.insert(to_endo(b).image().coeffs());
        }
        if (back != bx) bz_ok = false;
    }
    all &= report(out, "gz4: conjugating B_z back to B_x (pool degree 2)",
                  bz_ok);

    // Non-normality witness at n = 4.
    bool witness_ok = true;
    try {
        const auto w = nonnormality_witness(m4);
        witness_ok = w.alpha.image() == Poly({1, 1}, m4) &&
                     classify(w.conjugate).has_value();
        bool nonbasic = false;
        for (std::size_t i = 2; i <= *w.conjugate.image().degree(); ++i)
            if (w.conjugate.image().coeff(i)) nonbasic = true;
        witness_ok &= nonbasic;
    } catch (const RingError&) {
        witness_ok = false;
    }
    all &= report(out, "gz4: conjugate of x+1 escapes the basics (n = 4)",
                  witness_ok);
    return all;
}

} // namespace ringauto::suites
