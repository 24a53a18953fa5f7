#ifndef APPROXDIM_REP_HPP
#define APPROXDIM_REP_HPP

#include <memory>
#include <string>
#include <vector>

#include "approxdim/algebra.hpp"
#include "approxdim/matrix.hpp"

namespace approxdim {

struct Representation;
using RepPtr = std::shared_ptr<const Representation>;

// finite-dimensional module presented vertexwise; for an arrow a: i -> j the
// matrix arrow_maps[a] is d_j x d_i and acts on column vectors, and a path
// acts by composing its arrow matrices in traversal order
struct Representation {
    AlgebraPtr alg;
    std::vector<int> dims;
    std::vector<Matrix> arrow_maps;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    bool operator==(const Representation& o) const;
};

RepPtr make_rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> maps);
RepPtr zero_module(const AlgebraPtr& alg);

struct Violation {
    int relation_index;
    Matrix residual;
    std::string describe(const Algebra& a) const;
};
struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};
ValidationReport validate_module(const Representation& m);

enum class StandardKind { Simple, Projective, Injective };
RepPtr standard_module(const AlgebraPtr& alg, StandardKind kind, int vertex);
RepPtr regular_module(const AlgebraPtr& alg);     // direct sum of all P(i)
RepPtr cogenerator_module(const AlgebraPtr& alg); // direct sum of all I(i)

// matrix of the action of a path / an algebra element supported on paths
// from v to w (dims[target] x dims[source])
Matrix path_action(const Representation& m, const Path& p);
Matrix element_action(const Representation& m, const Vec& elem, int v_from, int v_to);

struct Morphism {
    RepPtr source, target;
    std::vector<Matrix> comps; // per vertex

    bool is_zero() const;
};

Morphism zero_morphism(const RepPtr& m, const RepPtr& n);
Morphism identity_morphism(const RepPtr& m);
// diagram order: "f then g"
Morphism compose(const Morphism& f, const Morphism& g);
Morphism morph_add(const Morphism& f, const Morphism& g);
Morphism morph_scale(const Morphism& f, Fel c);
bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);
// residuals f_j * M_a - N_a * f_i; zero for genuine morphisms
bool intertwines(const Morphism& f);

struct DirectSum {
    RepPtr sum;
    std::vector<Morphism> injections;
    std::vector<Morphism> projections;
};
DirectSum direct_sum(const std::vector<RepPtr>& parts);
// the universal map out of / into a direct sum
Morphism tuple_morphism(const DirectSum& ds, const std::vector<Morphism>& from_parts);
Morphism cotuple_morphism(const DirectSum& ds, const std::vector<Morphism>& to_parts);

std::vector<Morphism> hom_basis(const RepPtr& m, const RepPtr& n);
int hom_dim(const RepPtr& m, const RepPtr& n);
// flattening of morphism components into a single coordinate row, in vertex
// order, row-major per component
Vec morph_flatten(const Morphism& f);
Morphism morph_unflatten(const RepPtr& m, const RepPtr& n, const Vec& flat);

struct SubObject {
    RepPtr rep;
    Morphism incl;
};
struct QuotObject {
    RepPtr rep;
    Morphism proj;
};

// subrepresentation spanned by given per-vertex columns (must be invariant
// under the arrow maps), and the quotient by it
SubObject subrep_from_columns(const RepPtr& m, const std::vector<Matrix>& columns);
QuotObject quotient_by_columns(const RepPtr& m, const std::vector<Matrix>& columns);

struct SubQuotient {
    SubObject ker;   // ker f with inclusion into the source
    SubObject im;    // im f with inclusion into the target
    Morphism im_epi; // source ->> im
    QuotObject coker;
};
SubQuotient sub_quotient(const Morphism& f);
std::size_t sub_quotient_call_count();

struct RadSocTop {
    SubObject rad;
    SubObject soc;
    QuotObject top;
};
RadSocTop radical_socle_top(const RepPtr& m);

// a finite direct sum of standard projectives with coordinate bookkeeping:
// at vertex w, coordinates are the concatenation over summands s of the
// basis paths vertices[s] -> w in basis order
struct ProjSum {
    AlgebraPtr alg;
    std::vector<int> vertices;
    RepPtr rep;

    int summands() const { return static_cast<int>(vertices.size()); }
    int block_offset(int s, int w) const; // start of summand s inside vertex w
    int generator_coord(int s) const;     // coordinate of e_v inside vertex vertices[s]
};
ProjSum projective_sum(const AlgebraPtr& alg, std::vector<int> vertices);

// morphism out of a projective sum determined by generator images
Morphism hom_from_gens(const ProjSum& p, const RepPtr& n, const std::vector<Vec>& gen_images);
std::vector<Vec> gens_of_hom(const ProjSum& p, const Morphism& f);

struct Cover {
    ProjSum proj;
    Morphism pi; // P ->> M
};
Cover projective_cover(const RepPtr& m);

struct Envelope {
    RepPtr env;
    Morphism iota; // M >-> E
};
Envelope injective_envelope(const RepPtr& m);

bool is_projective(const RepPtr& m);
bool is_injective(const RepPtr& m);

RepPtr syzygy(const RepPtr& m, int k = 1);
RepPtr cosyzygy(const RepPtr& m, int k = 1);

// minimal projective presentation P1 -> P0 ->> M
struct Presentation {
    Cover cover;          // P0 ->> M
    SubObject ker;        // ker pi
    Cover ker_cover;      // P1 ->> ker
    Morphism d;           // P1 -> P0
};
Presentation minimal_presentation(const RepPtr& m);

// a morphism between projective sums d: domain -> codomain, componentwise as
// algebra elements x[c][b] supported on paths codomain.vertices[c] ->
// domain.vertices[b]
std::vector<std::vector<Vec>> proj_hom_elements(const ProjSum& codomain,
                                                const ProjSum& domain, const Morphism& d);
// the (c,b) entry of d as an algebra element supported on paths
// P0.vertices[c] -> P1.vertices[b]
std::vector<std::vector<Vec>> presentation_elements(const Presentation& pres);

// minimal projective resolution up to the requested homological degree
struct ProjResolution {
    RepPtr m;
    std::vector<ProjSum> terms;  // P_0 .. P_len
    std::vector<Morphism> maps;  // maps[i]: P_{i+1} -> P_i
};
ProjResolution resolve_projective(const RepPtr& m, int length);

// vector-space duality onto the opposite algebra; an exact involution
RepPtr dual(const RepPtr& m);
Morphism dual(const Morphism& f);

// transpose of a minimal projective presentation, over the opposite algebra
RepPtr transpose(const RepPtr& m);

// Auslander-Reiten translates tau = D Tr and tau^{-1} = Tr D
RepPtr tau(const RepPtr& m);
RepPtr tau_inverse(const RepPtr& m);

} // namespace approxdim

#endif
