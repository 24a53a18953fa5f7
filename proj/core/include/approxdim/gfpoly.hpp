#ifndef APPROXDIM_GFPOLY_HPP
#define APPROXDIM_GFPOLY_HPP

#include <vector>

#include "approxdim/field.hpp"
#include "approxdim/rng.hpp"

namespace approxdim::gfpoly {

// univariate polynomial over GF(p), coefficients low-degree first, no
// trailing zeros; the empty vector is the zero polynomial
using Poly = std::vector<Fel>;

int deg(const Poly& f); // -1 for zero
Poly trim(Poly f);
Poly monic(const Fp& F, const Poly& f);
Poly add(const Fp& F, const Poly& a, const Poly& b);
Poly sub(const Fp& F, const Poly& a, const Poly& b);
Poly mul(const Fp& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Fp& F, const Poly& a, const Poly& b);
Poly mod(const Fp& F, const Poly& a, const Poly& b);
Poly gcd(const Fp& F, Poly a, Poly b); // monic
Poly derivative(const Fp& F, const Poly& f);
Poly powmod(const Fp& F, Poly base, std::uint64_t e, const Poly& m);

// any monic irreducible factor of f (deg f >= 1); deterministic for a given
// rng state
Poly any_irreducible_factor(const Fp& F, Poly f, Rng& rng);

// largest e with g^e | f, for g irreducible
int multiplicity(const Fp& F, const Poly& f, const Poly& g);

} // namespace approxdim::gfpoly

#endif
