#include "ringauto/gz4.hpp"

#include <algorithm>
#include <set>

namespace ringauto {

namespace {

const Modulus kZ4{4};

constexpr std::uint64_t kPoolGuard = 10'000'000;

Poly minus_x_plus_1() { return Poly({1, -1}, kZ4); }

} // namespace

GAut4::GAut4(GKind kind, Poly f) : kind_(kind), f_(std::move(f)) {
    if (f_.modulus() != kZ4) throw NotZ4("GAut4 lives over Z_4");
    if (!is_nilpotent_poly(f_)) throw BadInput("GAut4 needs nilpotent f");
}

bool operator<(const GAut4& lhs, const GAut4& rhs) {
    if (lhs.kind_ != rhs.kind_) return lhs.kind_ < rhs.kind_;
    const auto& a = lhs.f_.coeffs();
    const auto& b = rhs.f_.coeffs();
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                        b.rend());
}

Poly prime(const Poly& h) {
    if (h.modulus() != kZ4) throw NotZ4("prime substitution lives over Z_4");
    return compose(h, minus_x_plus_1());
}

bool prime_fixed(const Poly& h) { return prime(h) == h; }

GAut4 mul(const GAut4& s, const GAut4& t) {
    const Poly& g = s.f();
    const Poly& h = t.f();
    if (s.is_alpha() && t.is_alpha()) return GAut4(GKind::Alpha, g + h);
    if (s.is_alpha()) return GAut4(GKind::Beta, g + h);
    if (t.is_alpha()) return GAut4(GKind::Beta, g + prime(h));
    return GAut4(GKind::Alpha, g + prime(h));
}

GAut4 inverse(const GAut4& s) {
    if (s.is_alpha()) return s; // 2f = 0, so alpha_f has order <= 2
    return GAut4(GKind::Beta, prime(s.f()));
}

GAut4 conjugate(const GAut4& t, const GAut4& s) {
    const Poly& g = s.f();
    const Poly& h = t.f();
    if (t.is_alpha()) {
        if (s.is_alpha()) return t;
        return GAut4(GKind::Alpha, prime(h));
    }
    if (s.is_alpha()) return GAut4(GKind::Beta, prime(g) + h + g);
    return GAut4(GKind::Beta, g + prime(h) + prime(g));
}

bool is_central(const GAut4& s) {
    return s.is_alpha() && prime_fixed(s.f());
}

bool are_conjugate(const GAut4& s, const GAut4& t) {
    if (s.kind() != t.kind()) return false; // constant-term parity differs
    if (s.is_alpha()) return t.f() == s.f() || t.f() == prime(s.f());
    return prime_fixed(s.f() - t.f()) || prime_fixed(s.f() - prime(t.f()));
}

Endo to_endo(const GAut4& s) {
    const Poly x = Poly::x(kZ4);
    if (s.is_alpha()) return Endo(x + s.f());
    return Endo(minus_x_plus_1() + s.f());
}

std::optional<GAut4> from_endo(const Endo& s) {
    if (s.modulus() != kZ4) throw NotZ4("alpha/beta coordinates live over Z_4");
    if (!classify(s)) return std::nullopt;
    const Poly& img = s.image();
    if (img.coeff(0) % 2 == 0) return GAut4(GKind::Alpha, img - Poly::x(kZ4));
    return GAut4(GKind::Beta, img - minus_x_plus_1());
}

GSubgroup GSubgroup::from_elements(std::vector<GAut4> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    GSubgroup sg(std::move(elements));
    const GAut4 id(GKind::Alpha, Poly(kZ4));
    if (!sg.contains(id)) throw NotAGroup("subgroup is missing the identity");
    for (const GAut4& a : sg.elements_)
        for (const GAut4& b : sg.elements_)
            if (!sg.contains(mul(a, b)))
                throw NotAGroup("element set is not closed under the law");
    return sg;
}

bool GSubgroup::contains(const GAut4& s) const {
    return std::binary_search(elements_.begin(), elements_.end(), s);
}

GSubgroup closure(const std::vector<GAut4>& gens) {
    std::set<GAut4> elems;
    elems.emplace(GKind::Alpha, Poly(kZ4));
    std::vector<GAut4> work(gens);
    while (!work.empty()) {
        const GAut4 s = work.back();
        work.pop_back();
        if (!elems.insert(s).second) continue;
        for (const GAut4& e : elems) {
            work.push_back(mul(s, e));
            work.push_back(mul(e, s));
        }
    }
    return GSubgroup::from_elements({elems.begin(), elems.end()});
}

std::vector<GAut4> pool(unsigned degree) {
    const std::uint64_t count = std::uint64_t{1} << (degree + 2);
    if (count > kPoolGuard) throw SearchSpaceTooLarge("pool exceeds guard");
    std::vector<GAut4> out;
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (degree + 1));
         ++mask) {
        std::vector<std::uint64_t> coeffs(degree + 1, 0);
        for (unsigned i = 0; i <= degree; ++i)
            if (mask >> i & 1) coeffs[i] = 2;
        const Poly f(coeffs, kZ4);
        out.emplace_back(GKind::Alpha, f);
        out.emplace_back(GKind::Beta, f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GAut4> basic_elements() {
    std::vector<GAut4> out;
    for (const Poly& f :
         {Poly(kZ4), Poly({2}, kZ4), Poly({0, 2}, kZ4), Poly({2, 2}, kZ4)})
        out.emplace_back(GKind::Alpha, f);
    for (const Poly& f :
         {Poly(kZ4), Poly({2}, kZ4), Poly({0, 2}, kZ4), Poly({2, 2}, kZ4)})
        out.emplace_back(GKind::Beta, f);
    return out;
}

GSubgroup stabilizer(const std::vector<Poly>& ring_gens, unsigned pool_degree) {
    std::vector<GAut4> fixing;
    for (const GAut4& s : pool(pool_degree)) {
        const Endo e = to_endo(s);
        bool fixes = true;
        for (const Poly& g : ring_gens)
            if (apply(e, g) != g) {
                fixes = false;
                break;
            }
        if (fixes) fixing.push_back(s);
    }
    return GSubgroup::from_elements(std::move(fixing));
}

bool in_basic_union(const GAut4& s, unsigned pool_degree) {
    const auto basics = basic_elements();
    for (const GAut4& g : pool(pool_degree)) {
        const GAut4 c = conjugate(s, g);
        if (std::find(basics.begin(), basics.end(), c) != basics.end())
            return true;
    }
    return false;
}

} // namespace ringauto
