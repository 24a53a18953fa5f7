#ifndef APPROXDIM_DECOMPOSE_HPP
#define APPROXDIM_DECOMPOSE_HPP

#include "approxdim/rep.hpp"
#include "approxdim/rng.hpp"

namespace approxdim {

// the endomorphism algebra of a module with multiplication x*y = "y then x"
struct EndAlgebra {
    RepPtr m;
    std::vector<Morphism> basis;
    // structure constants: products[i][j] = coordinates of basis_i * basis_j
    std::vector<std::vector<Vec>> products;
    // rows span the Jacobson radical (computed from the regular trace form,
    // which needs p > dim End)
    Matrix radical;

    int dim() const { return static_cast<int>(basis.size()); }
    int semisimple_dim() const;
    bool local() const { return semisimple_dim() == 1; }
};
EndAlgebra end_algebra(const RepPtr& m);

struct Decomposition {
    std::vector<RepPtr> parts; // indecomposable
    Morphism iso;              // direct sum of the parts -> m
};
Decomposition decompose(const RepPtr& m, Rng& rng);

bool is_isomorphic(const RepPtr& m, const RepPtr& n, Rng& rng);

// multiset of parts grouped into (representative, multiplicity) pairs
struct IsoClass {
    RepPtr representative;
    int multiplicity = 0;
};
std::vector<IsoClass> decompose_classes(const RepPtr& m, Rng& rng);

// representatives of the distinct iso classes among the summands
std::vector<RepPtr> basic_summands(const RepPtr& m, Rng& rng);

} // namespace approxdim

#endif
