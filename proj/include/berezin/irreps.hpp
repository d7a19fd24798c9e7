#pragma once

#include "berezin/dense_matrix.hpp"
#include "berezin/finite_group.hpp"

#include <vector>

namespace berezin {

// Explicit unitary irreducible representation: one matrix per group element.
// Characters are always taken as traces of these matrices.
struct Irrep {
    int dim = 0;
    std::vector<DenseMatrix> matrices;

    cdouble character(int g) const { return matrices[g].trace(); }
};

// Complete catalog of irreps for the supported groups; sum of dim^2 equals
// the group order.  Every returned irrep is validated: homomorphism and
// unitarity entrywise within 1e-12, Schur irreducibility test within 1e-9.
std::vector<Irrep> irreps_of(const FiniteGroup& g);

}
