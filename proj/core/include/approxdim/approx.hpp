#ifndef APPROXDIM_APPROX_HPP
#define APPROXDIM_APPROX_HPP

#include <string>

#include "approxdim/decompose.hpp"
#include "approxdim/rep.hpp"

namespace approxdim {

// cutoff-aware homological dimension: Finite(n) and Infinity are certified,
// AtLeast(n) means the computation exhausted its cutoff at n
struct ExtendedNat {
    enum class Kind { Finite, AtLeast, Infinite };
    Kind kind = Kind::Finite;
    int n = 0;

    static ExtendedNat finite(int k) { return {Kind::Finite, k}; }
    static ExtendedNat at_least(int k) { return {Kind::AtLeast, k}; }
    static ExtendedNat infinite() { return {Kind::Infinite, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool operator==(const ExtendedNat& o) const = default;

    std::string render() const; // "3" | "Infinity (certified)" | ">= 12 (cutoff)"
};

// equality of values computed under a common cutoff: both finite and equal,
// or both past the cutoff (AtLeast/Infinity in any combination)
bool cap_equal(const ExtendedNat& a, const ExtendedNat& b);
// a >= b up to the cutoff; false only when the violation is certain
bool cap_ge(const ExtendedNat& a, const ExtendedNat& b);

// basic indecomposable summands of omega, precomputed once per omega
struct AddClass {
    RepPtr omega;
    std::vector<RepPtr> summands;
};
AddClass add_class(const RepPtr& omega, Rng& rng);

struct MinimalApproximation {
    RepPtr target;                    // object of add omega
    Morphism f;                       // left minimal left add-omega approximation
    std::vector<int> multiplicities;  // per AddClass summand
};
MinimalApproximation minimal_left_approximation(const RepPtr& m, const AddClass& omega);

struct ChainStep {
    RepPtr t_prev;
    Morphism f;
    bool mono = false;
    std::vector<int> multiplicities;
    RepPtr t_next;
};
struct ApproximationChain {
    std::vector<ChainStep> steps;
    ExtendedNat verdict;
};

// omega-left approximation dimension via the minimal chain
ApproximationChain lapp_chain(const AddClass& omega, const RepPtr& m, int cutoff);
ExtendedNat lapp(const AddClass& omega, const RepPtr& m, int cutoff);
ExtendedNat lapp(const RepPtr& omega, const RepPtr& m, int cutoff, Rng& rng);

// faithful dimension: lapp of the regular module
ApproximationChain fadim_chain(const AddClass& omega, int cutoff);
ExtendedNat fadim(const RepPtr& omega, int cutoff, Rng& rng);

// is there a monomorphism M -> add omega (equivalently lapp >= 1)
bool in_cogen(const RepPtr& m, const AddClass& omega);

// dim Ext^n(M, N) from a minimal projective resolution of M
int ext_dim(const RepPtr& m, const RepPtr& n, int degree);
// all of Ext^1..Ext^max at once, reusing one resolution
std::vector<int> ext_dims(const RepPtr& m, const RepPtr& n, int max_degree);

ExtendedNat pd(const RepPtr& m, int cutoff);

// per-degree vanishing of Ext^i(omega, omega), degrees lo..hi
std::vector<bool> self_orthogonal(const RepPtr& omega, int lo, int hi);
// least degree in 1..max with Ext^d(omega,omega) != 0, or 0 if none found
int first_self_extension(const RepPtr& omega, int max_degree);

struct TiltingVerdict {
    enum class Kind { Yes, No, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int n = -1;         // tilting degree when kind == Yes
    std::string reason; // first violated condition, or why inconclusive
};
TiltingVerdict is_tilting(const RepPtr& omega, int cutoff, Rng& rng);

struct WakamatsuVerdict {
    enum class Kind { Certified, UpToCutoff, No };
    Kind kind = Kind::UpToCutoff;
    std::string reason;
};
WakamatsuVerdict is_wakamatsu(const RepPtr& omega, int cutoff, Rng& rng);

enum class DomDimMethod { Lapp, Coresolution };
ExtendedNat domdim(const RepPtr& m, int cutoff, DomDimMethod method, Rng& rng);

bool algebra_self_injective(const AlgebraPtr& alg);
// direct sum of the nonisomorphic indecomposable projective-injectives
RepPtr projective_injective_sum(const AlgebraPtr& alg);

// omega-n-torsionfree: fadim(omega) >= n+2 (capped) and lapp(omega, M) = n
bool torsionfree_check(const RepPtr& omega, const RepPtr& m, int n, int cutoff, Rng& rng);

struct GdimVerdict {
    bool yes = false;
    std::string reason; // for the negative case
};
// generalized Gorenstein dimension zero relative to a Wakamatsu tilting omega
GdimVerdict gdim_zero(const RepPtr& omega, const RepPtr& m, int cutoff, Rng& rng);

} // namespace approxdim

#endif
