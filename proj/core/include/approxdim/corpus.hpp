#ifndef APPROXDIM_CORPUS_HPP
#define APPROXDIM_CORPUS_HPP

#include <string>
#include <vector>

#include "approxdim/algebra.hpp"
#include "approxdim/rep.hpp"

namespace approxdim {

// compiled-in algebras: a3, nak33, nak32, kx2, kx3, square
std::vector<std::string> corpus_algebra_names();
AlgebraPtr corpus_algebra(const std::string& name, std::uint32_t p = kDefaultPrime);
std::string corpus_algebra_description(const std::string& name);

// deterministic family of modules over A: standard modules closed under
// radical/socle layers, syzygies, AR translates and a batch of seeded random
// extensions; returned as pairwise non-isomorphic indecomposables
std::vector<RepPtr> module_family(const AlgebraPtr& a, std::uint64_t seed,
                                  int max_total_dim = 16);

// basic self-orthogonal candidates found by subset search over the family
std::vector<RepPtr> tilting_search(const AlgebraPtr& a, int cutoff, std::uint64_t seed);
std::vector<RepPtr> wakamatsu_search(const AlgebraPtr& a, int cutoff, std::uint64_t seed);

// CLI module specifiers: file path, or one of
//   regular | coregular | projinj | zero | P<i> | I<i> | S<i>
RepPtr resolve_module_spec(const AlgebraPtr& a, const std::string& spec);

} // namespace approxdim

#endif
