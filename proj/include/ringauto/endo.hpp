#pragma once

// R-endomorphisms and R-automorphisms of Z_n[x]. An endomorphism is
// determined by the image of x; it is an automorphism exactly when that
// image is a + u*x + x^2*f(x) with u a unit and f nilpotent. Over Z_n the
// degree-1 coefficient of an automorphism image is itself a unit (a unit
// plus a nilpotent is a unit), so the strict decomposition always exists.

#include <cstdint>
#include <optional>

#include "ringauto/poly.hpp"

namespace ringauto {

class Endo {
public:
    explicit Endo(Poly image) : image_(std::move(image)) {}
    static Endo identity(Modulus m) { return Endo(Poly::x(m)); }

    const Poly& image() const { return image_; }
    Modulus modulus() const { return image_.modulus(); }

    friend bool operator==(const Endo&, const Endo&) = default;

private:
    Poly image_;
};

/// The decomposition image = a + u*x + x^2*f(x), u a unit, f nilpotent.
struct GilmerForm {
    Residue a;
    Residue u;
    Poly f;

    Poly reassemble() const;
};

/// The automorphism criterion: returns the decomposition when the image's
/// degree-1 coefficient is a unit and all higher coefficients are nilpotent;
/// nullopt (not an automorphism) otherwise.
std::optional<GilmerForm> classify(const Endo& s);

/// g |-> g(s(x)).
Poly apply(const Endo& s, const Poly& g);

/// (s∘t)(g) = s(t(g)); the image of s∘t is t.image evaluated at s.image.
Endo compose(const Endo& s, const Endo& t);

/// Group inverse, by fixed-point iteration from the decomposition
/// h <- u^{-1}(x - a - h^2 f(h)); both compositions are verified to be x
/// before returning. NotInvertible when classification fails.
Endo invert(const Endo& s);

/// Least m >= 1 with s^m = identity; cap defaults to 4n^2.
/// NotInvertible when s is not an automorphism, OrderExceedsCap past cap.
std::uint64_t order(const Endo& s, std::uint64_t cap = 0);

/// Exhaustive-search oracle for the automorphism criterion, independent of
/// classify: searches all candidate inverse images with deg_cap + 2
/// coefficients (degree <= deg_cap + 1, matching the n^(deg_cap+2)-candidate
/// search space) and demands both compositions equal x. Guarded at 10^7
/// candidates (SearchSpaceTooLarge).
bool is_automorphism_bruteforce(const Endo& s, unsigned deg_cap);

/// Constructive witness that the basic automorphisms are not normal in the
/// full automorphism group when Z_n is not reduced: alpha: x -> x+1,
/// sigma: x -> x + r x^2 + r x^m with r*r = 0 and m >= 3 minimal with
/// (m(m-1)/2) r != 0, and conj = sigma^{-1} alpha sigma, whose image has a
/// nonzero coefficient in degree >= 2. RingIsReduced for squarefree n.
struct NonnormalityWitness {
    Endo alpha;
    Endo sigma;
    Endo conjugate;
    std::uint64_t r;
    std::uint64_t m;
};
NonnormalityWitness nonnormality_witness(Modulus n);

} // namespace ringauto
