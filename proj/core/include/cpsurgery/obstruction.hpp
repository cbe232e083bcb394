#pragma once

#include "cpsurgery/kerj.hpp"
#include "cpsurgery/lattice.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cpsurgery {

struct ObstructionForm {
    int n = 0;
    int l = 0;
    std::optional<Integer> sphere_coeff;  // coefficient of y, present iff l even
    IntVector coeffs;                     // coefficients of s_1 .. s_{t'}

    Integer evaluate(const IntVector& s, const Integer& y = 0) const;
    // Coefficients in variable order (y, s_1, ...) for even l, (s_1, ...) for odd l.
    IntVector row() const;
};

// Signature obstruction of one element, computed from its character.
Rational obstruction_value(const KOElement& e);

ObstructionForm obstruction_form(int n, int l, const GeneratorSet& gens);
ObstructionForm obstruction_form(int n, int l);

// p_j as integer linear forms in (y, m_1, ...) or (m_1, ...).
struct PontryaginClassList {
    int n = 0;
    int l = 0;
    bool has_sphere = false;
    std::map<int, IntVector> classes;  // j -> coefficients, nonzero j only

    // Exponent printed in the tables for p_j.
    static int printed_degree(int j) { return 2 * j; }
};

PontryaginClassList total_pontryagin(const GeneratorSet& gens, bool include_sphere = false);

// p_j of a single element. For l >= 1 cup products vanish and p_j is linear in ph;
// for l = 0 the Newton identities are applied in the ring Q[x]/x^{n+1}.
std::map<int, Rational> pontryagin_classes(const KOElement& e);

enum class RootsMode { identity, index2 };

// Roots of the form for n + l even. For n + l odd, the identity lattice, or in
// index2 mode the identity followed by every sublattice of index 2.
std::vector<IntegerLattice> roots_lattice(int n, int l, const ObstructionForm& form,
                                          RootsMode mode = RootsMode::identity);

// Roots of an arbitrary integer linear form.
IntegerLattice roots_of(const IntVector& coeffs);

int structure_rank(int n, int k);

}  // namespace cpsurgery
