#ifndef APPROXDIM_RNG_HPP
#define APPROXDIM_RNG_HPP

#include <cstdint>

#include "approxdim/field.hpp"

namespace approxdim {

// splitmix64 stream; self-contained so that seeded runs are byte-identical
// across platforms and standard libraries
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-enough value in [0, n); n > 0
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    Fel field_element(const Fp& f) { return static_cast<Fel>(below(f.p())); }
    Fel nonzero_field_element(const Fp& f)
    {
        return static_cast<Fel>(1 + below(f.p() - 1));
    }

    Rng fork() { return Rng(next()); }

  private:
    std::uint64_t state_;
};

} // namespace approxdim

#endif
