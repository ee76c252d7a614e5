#pragma once

// Oracle-backed verification suites, shared by the CLI `verify` subcommand
// and the acceptance harness. The oracles are deliberately brute force and
// never call the closed-form paths they check. Each suite prints one
// summary line per unit of work and returns overall success.

#include <cstdint>
#include <ostream>
#include <vector>

namespace ringauto::suites {

/// Inverse involution (n <= 100), linear-congruence solutions by direct
/// substitution (n <= 30), nilpotence against the radical (n <= 1000), and
/// the unit-in-progression lemma on 1000 seeded random inputs.
bool residues(std::ostream& out);

/// The automorphism criterion against the exhaustive inverse search, over
/// all images of degree <= 3, for each modulus.
bool gilmer(std::ostream& out, const std::vector<std::uint64_t>& moduli);

/// Conjugacy formula vs. brute-force orbits, witness verification, class
/// tables and the class-count formula, for every n in [2, max_n].
bool conjugacy(std::ostream& out, std::uint64_t max_n);

/// The Z_4 fixed-ring catalog fixtures at (D=8, W=16) and the Z_p
/// full-group invariant checks.
bool fixedrings(std::ostream& out);

/// G(Z_4) structure: group law vs. endo composition, closed conjugation
/// forms, center, conjugacy classes, stabilizers, the basic-conjugacy
/// condition, and the non-normality witness; exhaustive over the degree-2
/// and degree-5 pools.
bool gz4(std::ostream& out);

} // namespace ringauto::suites
