#include "ringauto/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ringauto {

Poly::Poly(std::initializer_list<std::int64_t> coeffs, Modulus m)
    : Poly(std::vector<std::int64_t>(coeffs), m) {}

Poly::Poly(const std::vector<std::int64_t>& coeffs, Modulus m) : m_(m) {
    coeffs_.reserve(coeffs.size());
    for (std::int64_t c : coeffs) coeffs_.push_back(Residue::reduce(c, m.n()));
    normalize();
}

Poly::Poly(std::vector<std::uint64_t> coeffs, Modulus m)
    : m_(m), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= m.n();
    normalize();
}

Poly Poly::monomial(std::size_t k, std::int64_t c, Modulus m) {
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = Residue::reduce(c, m.n());
    return Poly(std::move(v), m);
}

std::uint64_t Poly::leading_coeff() const {
    if (coeffs_.empty()) throw ZeroInput("leading coefficient of zero");
    return coeffs_.back();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same_modulus(const Poly& p, const Poly& q) {
    if (p.m_ != q.m_) throw ModulusMismatch("polynomials over different moduli");
}

Poly Poly::add(const Poly& p, const Poly& q) {
    check_same_modulus(p, q);
    const std::uint64_t n = p.m_.n();
    std::vector<std::uint64_t> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = addmod(p.coeff(i), q.coeff(i), n);
    return Poly(std::move(out), p.m_);
}

Poly Poly::sub(const Poly& p, const Poly& q) {
    check_same_modulus(p, q);
    const std::uint64_t n = p.m_.n();
    std::vector<std::uint64_t> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = submod(p.coeff(i), q.coeff(i), n);
    return Poly(std::move(out), p.m_);
}

Poly Poly::mul(const Poly& p, const Poly& q) {
    check_same_modulus(p, q);
    if (p.is_zero() || q.is_zero()) return Poly(p.m_);
    const std::uint64_t n = p.m_.n();
    std::vector<std::uint64_t> out(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            out[i + j] = addmod(out[i + j], mulmod(p.coeffs_[i], q.coeffs_[j], n), n);
    }
    return Poly(std::move(out), p.m_);
}

Poly Poly::operator-() const {
    std::vector<std::uint64_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = (m_.n() - coeffs_[i]) % m_.n();
    return Poly(std::move(out), m_);
}

Poly Poly::scaled(std::int64_t c) const {
    const std::uint64_t cr = Residue::reduce(c, m_.n());
    std::vector<std::uint64_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = mulmod(coeffs_[i], cr, m_.n());
    return Poly(std::move(out), m_);
}

Poly compose(const Poly& g, const Poly& s) {
    if (g.modulus() != s.modulus())
        throw ModulusMismatch("compose across moduli");
    // Horner in s.
    Poly acc(g.modulus());
    const auto& c = g.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = Poly::add(Poly::mul(acc, s),
                        Poly::constant(static_cast<std::int64_t>(c[i]), g.modulus()));
    }
    return acc;
}

bool is_nilpotent_poly(const Poly& f) {
    for (std::uint64_t c : f.coeffs())
        if (!is_nilpotent(Residue(c, f.modulus()))) return false;
    return true;
}

bool is_unit_poly(const Poly& f) {
    if (!is_unit(Residue(f.constant_coeff(), f.modulus()))) return false;
    const auto& c = f.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!is_nilpotent(Residue(c[i], f.modulus()))) return false;
    return true;
}

namespace {

// Division with remainder by f whose leading coefficient is a unit:
// g = q*f + r with r = 0 or deg r < deg f. Exact over Z_n because the
// leading term of q*f never collapses (unit times nonzero is nonzero).
std::pair<Poly, Poly> divrem_unit_lead(const Poly& g, const Poly& f) {
    const Modulus m = g.modulus();
    const std::size_t d = *f.degree();
    const std::uint64_t lead_inv =
        inverse(Residue(f.leading_coeff(), m)).value();
    Poly rem = g;
    std::vector<std::uint64_t> q;
    if (!rem.degree() || *rem.degree() < d) return {Poly(m), rem};
    q.assign(*rem.degree() - d + 1, 0);
    while (rem.degree() && *rem.degree() >= d) {
        const std::size_t k = *rem.degree() - d;
        const std::uint64_t c = mulmod(rem.leading_coeff(), lead_inv, m.n());
        q[k] = c;
        rem = Poly::sub(rem, Poly::mul(Poly::monomial(k, static_cast<std::int64_t>(c), m), f));
    }
    return {Poly(std::move(q), m), rem};
}

} // namespace

std::vector<Poly> f_adic_expand(const Poly& g, const Poly& f) {
    if (g.modulus() != f.modulus())
        throw ModulusMismatch("f_adic_expand across moduli");
    if (g.is_zero()) throw ZeroInput("f_adic_expand of the zero polynomial");
    if (!f.degree() || *f.degree() < 1)
        throw BadDivisor("f_adic_expand needs deg f >= 1");
    if (!is_unit(Residue(f.leading_coeff(), f.modulus())))
        throw BadDivisor("f_adic_expand needs a unit leading coefficient");

    std::vector<Poly> digits;
    Poly rest = g;
    while (!rest.is_zero()) {
        auto [q, r] = divrem_unit_lead(rest, f);
        digits.push_back(r);
        rest = q;
    }
    while (!digits.empty() && digits.back().is_zero()) digits.pop_back();

    // Reassemble and verify the representation before handing it out.
    Poly check(g.modulus());
    for (std::size_t k = digits.size(); k-- > 0;)
        check = Poly::add(Poly::mul(check, f), digits[k]);
    if (check != g)
        throw InternalCheckFailed("f_adic_expand reassembly mismatch");
    return digits;
}

bool in_subring(const Poly& g, const Poly& f) {
    if (g.modulus() != f.modulus())
        throw ModulusMismatch("in_subring across moduli");
    if (!f.degree() || *f.degree() < 1) {
        // R[f] = R for constant f.
        return g.is_zero() || *g.degree() == 0;
    }
    if (g.is_zero()) return true;
    for (const Poly& digit : f_adic_expand(g, f))
        if (digit.degree() && *digit.degree() >= 1) return false;
    return true;
}

bool generates_polynomial_ring(const Poly& f) {
    std::vector<std::uint64_t> positive_degree;
    const auto& c = f.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) positive_degree.push_back(c[i]);
    return gcd_all(positive_degree, f.modulus()) == 1;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i];
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::string to_coeff_array(const Poly& p) {
    std::ostringstream os;
    os << '[';
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

} // namespace ringauto
