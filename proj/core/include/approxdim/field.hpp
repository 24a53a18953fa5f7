#ifndef APPROXDIM_FIELD_HPP
#define APPROXDIM_FIELD_HPP

#include <cstdint>

#include "approxdim/errors.hpp"

namespace approxdim {

// element of GF(p), always stored reduced to [0, p)
using Fel = std::uint32_t;

constexpr std::uint32_t kDefaultPrime = 32003;

// GF(p) arithmetic for an odd machine-word prime p >= 3
class Fp {
  public:
    Fp() : p_(kDefaultPrime) {}
    explicit Fp(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    Fel add(Fel a, Fel b) const
    {
        Fel s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fel sub(Fel a, Fel b) const { return a >= b ? a - b : a + p_ - b; }
    Fel neg(Fel a) const { return a == 0 ? 0 : p_ - a; }
    Fel mul(Fel a, Fel b) const
    {
        return static_cast<Fel>(std::uint64_t(a) * b % p_);
    }
    Fel pow(Fel a, std::uint64_t e) const;
    Fel inv(Fel a) const;

    // reduce an arbitrary signed integer into [0, p)
    Fel from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p_);
        if (r < 0)
            r += p_;
        return static_cast<Fel>(r);
    }

    bool operator==(const Fp& o) const { return p_ == o.p_; }
    bool operator!=(const Fp& o) const { return p_ != o.p_; }

  private:
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

} // namespace approxdim

#endif
