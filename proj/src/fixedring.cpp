#include "ringauto/fixedring.hpp"

#include <algorithm>
#include <sstream>

#include "ringauto/gz4.hpp"

namespace ringauto {

namespace {

constexpr std::uint64_t kSystemGuard = 50'000'000;

howell::Row poly_to_row(const Poly& p, std::size_t width) {
    howell::Row r(width, 0);
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    return r;
}

Poly row_to_poly(const howell::Row& r, Modulus m) {
    return Poly(std::vector<std::uint64_t>(r.begin(), r.end()), m);
}

// Rows of the degree-<=d slice of the span of `rows` (width cols), via the
// Howell form in reversed column order: rows with leading reversed index
// >= cols-1-d are exactly the elements of degree <= d.
std::vector<howell::Row> degree_slice(std::vector<howell::Row> rows,
                                      std::uint64_t n, std::size_t cols,
                                      std::size_t d) {
    for (auto& r : rows) std::reverse(r.begin(), r.end());
    const auto rev = howell::howell_form(std::move(rows), n, cols);
    std::vector<howell::Row> out;
    for (const auto& r : rev) {
        std::size_t lead = 0;
        while (lead < cols && r[lead] == 0) ++lead;
        if (lead == cols || cols - 1 - lead > d) continue;
        howell::Row back(r.rbegin(), r.rend());
        back.resize(d + 1); // higher coefficients are zero by construction
        out.push_back(std::move(back));
    }
    return out;
}

} // namespace

CoeffModule CoeffModule::from_generators(const std::vector<Poly>& gens,
                                         Modulus m, std::size_t degree_bound) {
    std::vector<howell::Row> rows;
    rows.reserve(gens.size());
    for (const Poly& g : gens) {
        if (g.modulus() != m)
            throw ModulusMismatch("module generator over a different modulus");
        if (g.degree() && *g.degree() > degree_bound)
            throw BadInput("module generator exceeds the degree bound");
        rows.push_back(poly_to_row(g, degree_bound + 1));
    }
    return CoeffModule(m, degree_bound,
                       howell::howell_form(std::move(rows), m.n(),
                                           degree_bound + 1));
}

std::vector<Poly> CoeffModule::basis_polys() const {
    std::vector<Poly> out;
    out.reserve(basis_.size());
    for (const auto& r : basis_) out.push_back(row_to_poly(r, m_));
    return out;
}

bool CoeffModule::contains(const Poly& g) const {
    if (g.modulus() != m_) throw ModulusMismatch("membership across moduli");
    if (g.degree() && *g.degree() > degree_bound_) return false;
    return howell::member(basis_, poly_to_row(g, degree_bound_ + 1), m_.n());
}

CoeffModule CoeffModule::restricted(std::size_t d) const {
    if (d > degree_bound_)
        throw BoundMismatch("restriction above the degree bound");
    auto rows = degree_slice(basis_, m_.n(), degree_bound_ + 1, d);
    return CoeffModule(m_, d, howell::howell_form(std::move(rows), m_.n(), d + 1));
}

namespace {

Modulus front_modulus(const std::vector<Endo>& gens) {
    if (gens.empty()) throw BadInput("subgroup spec needs a modulus");
    return gens.front().modulus();
}

void check_generators(Modulus m, const std::vector<Endo>& gens) {
    for (const Endo& g : gens) {
        if (g.modulus() != m)
            throw ModulusMismatch("subgroup generators over different moduli");
        if (!classify(g))
            throw NotInvertible("subgroup generator is not an automorphism");
    }
}

} // namespace

SubgroupSpec::SubgroupSpec(Modulus m, std::vector<Endo> gens)
    : modulus(m), generators(std::move(gens)) {
    check_generators(modulus, generators);
}

// Members initialize in declaration order, so the modulus is read off the
// vector before it is moved from.
SubgroupSpec::SubgroupSpec(std::vector<Endo> gens)
    : modulus(front_modulus(gens)), generators(std::move(gens)) {
    check_generators(modulus, generators);
}

namespace {

CoeffModule full_module(Modulus m, std::size_t degree_bound) {
    std::vector<Poly> monomials;
    for (std::size_t k = 0; k <= degree_bound; ++k)
        monomials.push_back(Poly::monomial(k, 1, m));
    return CoeffModule::from_generators(monomials, m, degree_bound);
}

} // namespace

CoeffModule fixed_module(const SubgroupSpec& H, std::size_t degree_bound) {
    const Modulus m = H.modulus;
    if (H.generators.empty()) return full_module(m, degree_bound);
    const std::uint64_t n = m.n();
    const std::size_t k = degree_bound + 1;

    // Stack, per generator, the linear map c |-> coeffs(sigma(g) - g) with
    // the codomain padded to the full image degree (no truncation).
    std::vector<std::size_t> width;
    std::size_t total = 0;
    for (const Endo& s : H.generators) {
        const std::size_t d =
            s.image().degree() ? *s.image().degree() : std::size_t{0};
        width.push_back(degree_bound * std::max<std::size_t>(d, 1) + 1);
        total += width.back();
    }
    if (total * k > kSystemGuard)
        throw SearchSpaceTooLarge("fixed-point system exceeds guard");

    std::vector<howell::Row> map_rows(k);
    for (std::size_t deg = 0; deg < k; ++deg) {
        howell::Row row;
        row.reserve(total);
        const Poly xk = Poly::monomial(deg, 1, m);
        for (std::size_t gi = 0; gi < H.generators.size(); ++gi) {
            const Poly diff = apply(H.generators[gi], xk) - xk;
            for (std::size_t j = 0; j < width[gi]; ++j)
                row.push_back(diff.coeff(j));
        }
        map_rows[deg] = std::move(row);
    }

    auto basis = howell::kernel(map_rows, total, n);
    CoeffModule out(m, degree_bound, std::move(basis));

    for (const Poly& b : out.basis_polys())
        for (const Endo& s : H.generators)
            if (apply(s, b) != b)
                throw InternalCheckFailed("fixed_module basis element moves");
    if (!out.contains(Poly::constant(1, m)))
        throw InternalCheckFailed("fixed module is missing the constants");
    return out;
}

CoeffModule span_module(const std::vector<Poly>& gens, Modulus m,
                        std::size_t degree_bound, std::size_t work_bound) {
    if (work_bound < degree_bound)
        throw BadInput("span_module needs work_bound >= degree_bound");
    std::vector<Poly> positive;
    for (const Poly& g : gens) {
        if (g.modulus() != m)
            throw ModulusMismatch("span generator over a different modulus");
        if (g.degree() && *g.degree() >= 1) positive.push_back(g);
        // constants contribute nothing beyond the R-span of 1
    }

    std::vector<howell::Row> rows;
    const std::size_t cols = work_bound + 1;
    // All products of generators with formal degree <= W, one multiset each.
    const auto emit = [&](const auto& self, std::size_t idx, const Poly& prod,
                          std::size_t formal) -> void {
        rows.push_back(poly_to_row(prod, cols));
        for (std::size_t i = idx; i < positive.size(); ++i) {
            const std::size_t d = *positive[i].degree();
            if (formal + d > work_bound) continue;
            self(self, i, prod * positive[i], formal + d);
        }
    };
    emit(emit, 0, Poly::constant(1, m), 0);

    auto sliced = degree_slice(std::move(rows), m.n(), cols, degree_bound);
    CoeffModule out(m, degree_bound,
                    howell::howell_form(std::move(sliced), m.n(),
                                        degree_bound + 1));
    if (!out.contains(Poly::constant(1, m)))
        throw InternalCheckFailed("span module is missing the constants");
    return out;
}

bool modules_equal(const CoeffModule& a, const CoeffModule& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("module comparison across moduli");
    if (a.degree_bound() != b.degree_bound())
        throw BoundMismatch("module comparison across degree bounds");
    return a.basis() == b.basis();
}

namespace {

Poly z4_y() { return Poly({0, 1, -1}, Modulus(4)); } // y = x(-x+1)

CoeffModule z4_catalog_span(const Z4Verdict& verdict, std::size_t D,
                            std::size_t W) {
    const Modulus m(4);
    switch (verdict.kind) {
        case Z4Case::FullRing: {
            std::vector<Poly> monomials;
            for (std::size_t k = 0; k <= D; ++k)
                monomials.push_back(Poly::monomial(k, 1, m));
            return CoeffModule::from_generators(monomials, m, D);
        }
        case Z4Case::X2_2X:
            return span_module({Poly({0, 0, 1}, m), Poly({0, 2}, m)}, m, D, W);
        case Z4Case::Y2_2Y:
            return span_module({z4_y() * z4_y(), z4_y().scaled(2)}, m, D, W);
        case Z4Case::YPlusXF:
            return span_module({z4_y() + Poly::x(m) * *verdict.f}, m, D, W);
    }
    throw InternalCheckFailed("unreachable catalog case");
}

} // namespace

Z4Verdict identify_z4(const SubgroupSpec& H, std::size_t degree_bound) {
    if (H.modulus != Modulus(4)) throw NotZ4("identify_z4 needs Z_4");

    std::vector<GAut4> gens;
    for (const Endo& g : H.generators) {
        const auto ab = from_endo(g);
        if (!ab) throw NotInvertible("generator is not an automorphism");
        gens.push_back(*ab);
    }
    const GSubgroup sub = closure(gens);

    const GAut4 id(GKind::Alpha, Poly(Modulus(4)));
    bool has_beta = false, has_nontrivial_alpha = false;
    for (const GAut4& e : sub.elements()) {
        if (!e.is_alpha())
            has_beta = true;
        else if (!(e == id))
            has_nontrivial_alpha = true;
    }

    Z4Verdict verdict{Z4Case::FullRing, std::nullopt};
    if (!has_beta) {
        verdict.kind = has_nontrivial_alpha ? Z4Case::X2_2X : Z4Case::FullRing;
    } else if (has_nontrivial_alpha) {
        verdict.kind = Z4Case::Y2_2Y;
    } else {
        // H meets the alphas trivially: cyclic of order 2 on a prime-fixed f.
        verdict.kind = Z4Case::YPlusXF;
        for (const GAut4& e : sub.elements())
            if (!e.is_alpha()) verdict.f = e.f();
        if (!verdict.f || !prime_fixed(*verdict.f))
            throw InternalCheckFailed("order-2 beta with a non-prime-fixed f");
    }

    // Cross-validate the structural verdict against the linear algebra.
    const std::size_t W = 2 * degree_bound;
    const CoeffModule fixed = fixed_module(H, degree_bound);
    const CoeffModule catalog = z4_catalog_span(verdict, degree_bound, W);
    if (!modules_equal(fixed, catalog)) {
        std::ostringstream os;
        os << "fixed module disagrees with the catalog span at (D="
           << degree_bound << ", W=" << W << ")";
        throw InconsistentWithCatalog(os.str());
    }
    return verdict;
}

Poly norm_of_x(const std::vector<BasicAut>& H) {
    if (H.empty()) throw NotAGroup("empty element set");
    const Modulus m = H.front().modulus();
    for (const BasicAut& s : H) {
        if (s.modulus() != m) throw ModulusMismatch("norm across moduli");
        for (const BasicAut& t : H) {
            const BasicAut p = mul(s, t);
            if (std::find(H.begin(), H.end(), p) == H.end())
                throw NotAGroup("element set is not closed under the law");
        }
    }
    Poly prod = Poly::constant(1, m);
    for (const BasicAut& s : H)
        prod = prod * Poly({static_cast<std::int64_t>(s.a() % m.n()),
                            static_cast<std::int64_t>(s.u())},
                           m);
    return prod;
}

bool samuel_check(std::uint64_t p, std::size_t degree_bound) {
    if (p != 2 && p != 3 && p != 5)
        throw BadInput("samuel_check is guarded to p in {2, 3, 5}");
    const Modulus m(p);
    std::vector<Endo> gens;
    for (const BasicAut& s : all_elements(m)) gens.push_back(to_endo(s));
    const CoeffModule fixed = fixed_module(SubgroupSpec(std::move(gens)),
                                           degree_bound);
    // (x^p - x)^(p-1)
    Poly base = Poly::monomial(p, 1, m) - Poly::x(m);
    Poly gen = Poly::constant(1, m);
    for (std::uint64_t i = 0; i + 1 < p; ++i) gen = gen * base;
    const CoeffModule span =
        span_module({gen}, m, degree_bound, degree_bound);
    return modules_equal(fixed, span);
}

} // namespace ringauto
