#ifndef APPROXDIM_STABLE_HPP
#define APPROXDIM_STABLE_HPP

#include "approxdim/decompose.hpp"
#include "approxdim/rep.hpp"

namespace approxdim {

// dim Hom(M,N) modulo maps factoring through a projective; a map factors
// through some projective iff it factors through the projective cover of N
int stable_hom_dim(const RepPtr& m, const RepPtr& n);

// dually, modulo maps factoring through an injective
int costable_hom_dim(const RepPtr& m, const RepPtr& n);

struct AlmostSplitSequence {
    RepPtr left;    // the given indecomposable non-injective module
    RepPtr middle;
    RepPtr right;   // isomorphic to tau^{-1}(left)
    Morphism left_map;
    Morphism right_map;
    std::vector<RepPtr> middle_parts;
};

// the almost split sequence 0 -> M -> E -> tau^{-1} M -> 0, materialized by
// pushing the projective presentation of tau^{-1} M out along a socle class
// of Ext^1(tau^{-1} M, M) under the right End-action
AlmostSplitSequence almost_split_starting_at(const RepPtr& m, Rng& rng);

// simple, neither projective nor injective, with projective middle term
bool is_node(const RepPtr& s, Rng& rng);

struct HypothesisReport {
    std::vector<int> node_vertices;                 // 0-based simples that are nodes
    std::vector<std::vector<int>> semisimple_blocks;
    bool self_injective = false;
    std::vector<RepPtr> proj_inj;                   // indecomposable projective-injectives

    bool has_nodes() const { return !node_vertices.empty(); }
    bool has_semisimple_blocks() const { return !semisimple_blocks.empty(); }
    bool valid_for_transfer() const { return !has_nodes() && !has_semisimple_blocks(); }
};
HypothesisReport hypothesis_report(const AlgebraPtr& alg, Rng& rng);

} // namespace approxdim

#endif
