#pragma once

#include "cpsurgery/rational.hpp"

#include <vector>

namespace cpsurgery {

// Generators stored as columns: cols[j] is the j-th generator, length = ambient rank.
using IntColumns = std::vector<IntVector>;
using IntMatrix = std::vector<IntVector>;  // row-major

// Column-style Hermite normal form. Pivot rows strictly increase from one
// generator to the next, pivots are positive, and every earlier generator's
// entry in a later pivot row lies in [0, pivot). Zero columns are dropped.
IntColumns hnf_columns(IntColumns cols, int ambient_rank);

// Integer kernel of the row-major matrix a (rows x ncols), as HNF columns.
IntColumns integer_kernel(const IntMatrix& a, int ncols);

struct IntegerLattice {
    int ambient_rank = 0;
    IntColumns basis;  // HNF

    static IntegerLattice from_generators(const IntColumns& gens, int ambient_rank);
    static IntegerLattice identity(int r);

    int rank() const { return static_cast<int>(basis.size()); }
    bool contains(const IntVector& v) const;
    bool contains_all(const IntColumns& gens) const;
    // [Z^r : L] for full rank lattices, 0 otherwise
    Integer index() const;
    std::vector<int> pivot_rows() const;

    friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;
};

bool same_span(const IntColumns& a, const IntColumns& b, int ambient_rank);

IntMatrix transpose(const IntColumns& cols, int ambient_rank);
IntColumns columns_of(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int r);

}  // namespace cpsurgery
