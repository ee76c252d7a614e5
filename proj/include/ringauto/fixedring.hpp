#pragma once

// Degree-truncated invariant subrings R[x]^H over Z_n by exact linear
// algebra (Howell kernels), subring spans with a work bound, equality
// certification, the Z_4 catalog of fixed rings, norms of x, and the Z_p
// full-group invariant check.
//
// Fixedness is exact: a slice element g satisfies sigma(g) = g as full
// polynomials, with no truncation of the image. Ring equality, by contrast,
// can only be certified here at a (degree bound, work bound) level; reports
// always carry both numbers.

#include <cstdint>
#include <optional>
#include <vector>

#include "ringauto/basic.hpp"
#include "ringauto/endo.hpp"
#include "ringauto/howell.hpp"
#include "ringauto/poly.hpp"

namespace ringauto {

/// A Z_n-submodule of the degree-<=D coefficient space, carried by its
/// canonical Howell basis (column j = coefficient of x^j).
class CoeffModule {
public:
    static CoeffModule from_generators(const std::vector<Poly>& gens, Modulus m,
                                       std::size_t degree_bound);

    Modulus modulus() const { return m_; }
    std::size_t degree_bound() const { return degree_bound_; }
    const std::vector<howell::Row>& basis() const { return basis_; }
    std::vector<Poly> basis_polys() const;

    bool contains(const Poly& g) const;

    /// The submodule of elements of degree <= d, as a module at bound d.
    CoeffModule restricted(std::size_t d) const;

    friend bool operator==(const CoeffModule&, const CoeffModule&) = default;

private:
    CoeffModule(Modulus m, std::size_t degree_bound,
                std::vector<howell::Row> basis)
        : m_(m), degree_bound_(degree_bound), basis_(std::move(basis)) {}

    friend CoeffModule fixed_module(const struct SubgroupSpec&, std::size_t);
    friend CoeffModule span_module(const std::vector<Poly>&, Modulus,
                                   std::size_t, std::size_t);

    Modulus m_;
    std::size_t degree_bound_;
    std::vector<howell::Row> basis_;
};

/// A subgroup of automorphisms given by generators; every generator must
/// pass the automorphism criterion (NotInvertible otherwise). An empty list
/// is the trivial group.
struct SubgroupSpec {
    Modulus modulus;
    std::vector<Endo> generators;

    SubgroupSpec(Modulus m, std::vector<Endo> gens);
    /// Modulus taken from the first generator; the list must be nonempty.
    explicit SubgroupSpec(std::vector<Endo> gens);
};

/// { g : deg g <= D and sigma(g) = g exactly for every generator }, computed
/// as the Howell kernel of the stacked maps c -> coeffs(sigma(g) - g). Every
/// basis element is re-verified by direct application before returning.
CoeffModule fixed_module(const SubgroupSpec& H, std::size_t degree_bound);

/// Z_n-span of all products of the generators with formal degree <= W
/// (formal = sum of factor degrees, so products whose leading terms cancel
/// mod n are still captured up to level W), intersected with degree <= D.
/// Includes the constants. Requires W >= D.
CoeffModule span_module(const std::vector<Poly>& gens, Modulus m,
                        std::size_t degree_bound, std::size_t work_bound);

/// Howell bases are canonical, so equality is basis equality. Throws
/// ModulusMismatch / BoundMismatch when the slices are not comparable.
bool modules_equal(const CoeffModule& a, const CoeffModule& b);

/// The catalog of invariant subrings of Z_4[x]: R[x] itself, R[x^2,2x],
/// R[y^2,2y], or the polynomial rings R[y+xf] with f prime-fixed nilpotent.
enum class Z4Case { FullRing, X2_2X, Y2_2Y, YPlusXF };

struct Z4Verdict {
    Z4Case kind;
    std::optional<Poly> f; // set for YPlusXF
};

/// Classifies H by group structure (subgroup of the alphas; meets the
/// alphas nontrivially; or order-2 beta) and cross-validates the fixed
/// module against the catalog span at (D, 2D). A failed cross-check throws
/// InconsistentWithCatalog and is always a bug or truncation artifact.
Z4Verdict identify_z4(const SubgroupSpec& H, std::size_t degree_bound);

/// Product of u*x + a over a finite basic group H (closure checked:
/// NotAGroup). Leading coefficient a unit, degree = |H|.
Poly norm_of_x(const std::vector<BasicAut>& H);

/// Does the degree-<=D slice of the full basic-group invariant ring over
/// Z_p equal the slice of Z_p[(x^p - x)^(p-1)]? Guarded to p in {2, 3, 5}.
bool samuel_check(std::uint64_t p, std::size_t degree_bound);

} // namespace ringauto
