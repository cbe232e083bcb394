#pragma once

#include "cpsurgery/ko_basis.hpp"
#include "cpsurgery/lattice.hpp"
#include "cpsurgery/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cpsurgery {

struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    RatVector entries;  // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c);
    Rational& at(int i, int j) { return entries[static_cast<size_t>(i * cols + j)]; }
    const Rational& at(int i, int j) const { return entries[static_cast<size_t>(i * cols + j)]; }
};

enum class SystemVariant { m1, m2, m3 };
std::string to_string(SystemVariant v);

struct KernelSystem {
    SystemVariant variant = SystemVariant::m1;
    int r = 0;        // r_l
    int padding = 0;  // zero columns appended to each block
    RationalMatrix matrix;  // r x 2(r + padding), left block then right block
};

// Rows i = 1..r: left block (alpha_{2s}/2) [ph_k]_{d_i}, right block -[ph_k]_{d_i},
// where s = floor(l/2) + i, d_i = 2i (l even) or 2i-1 (l odd), and ph_k is the
// character of the k-th basis element including its half factor.
KernelSystem build_system(int n, int l);

// { x in Z^r : the solution y of M (x, y) = 0 is integral }, in HNF.
IntegerLattice integer_kernel_projected(const RationalMatrix& m, int r);

// y as an exact linear function of x: the matrix T with y = T x.
RationalMatrix solve_right_block(const RationalMatrix& m, int r);

// ker[Sigma^{2l} CP^n, J] as a sublattice of the free coordinates (l >= 1).
// In the torsion-top cases it is the truncation of the lattice at n+1.
IntegerLattice kerj_lattice(int n, int l);

enum class Provenance { direct, restricted_from_n_plus_1, restricted_from_tower };
std::string to_string(Provenance p);

struct GeneratorSet {
    int n = 0;
    int l = 0;
    Provenance provenance = Provenance::direct;
    int source_n = 0;  // level whose HNF was restricted
    std::vector<KOElement> generators;

    IntColumns columns() const;
};

struct GeneratorOptions {
    // Level whose HNF generators are restricted down to n. Unset selects the
    // default (17 for odd l, 18 for even l, when l <= 3; n itself otherwise);
    // any value <= n means the generators are computed directly at n.
    std::optional<int> tower_top;
};

int default_tower_top(int n, int l);

GeneratorSet canonical_generators(int n, int l, const GeneratorOptions& opts = {});

struct MembershipResult {
    bool member = false;
    bool v_membership_only = false;  // n = 1 mod 4, n > 1: only membership in V is decided
    RatVector beta;                   // coordinates of beta against mu_0^k
};

MembershipResult membership_l0(const KOElement& xi, int n);

}  // namespace cpsurgery
