#ifndef APPROXDIM_TRANSPORT_HPP
#define APPROXDIM_TRANSPORT_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "approxdim/approx.hpp"
#include "approxdim/stable.hpp"

namespace approxdim {

// explicit object-level stable equivalences: the identity, and syzygy powers
// on a self-injective algebra
struct StableFunctor {
    enum class Kind { Identity, SyzygyPower };
    Kind kind = Kind::Identity;
    int power = 0;
    AlgebraPtr source, target;

    std::string describe() const;
    StableFunctor inverse() const;
};
StableFunctor identity_functor(const AlgebraPtr& a);
StableFunctor syzygy_functor(const AlgebraPtr& a, int power); // NotSelfInjective

// memo of functor applications per iso class; safe for concurrent use.
// lookups run on a private rng stream so cache warmth never shifts the
// caller's random sequence
class TransportCache {
  public:
    RepPtr apply(int op, const RepPtr& in, const std::function<RepPtr()>& compute);

  private:
    int intern(const RepPtr& m);
    std::mutex mu_;
    Rng rng_{0x1d6a};
    std::vector<RepPtr> reps_;
    std::map<std::pair<int, int>, int> memo_;
};

struct SummandSplit {
    RepPtr y;      // no injective summands (may keep projective non-injectives)
    RepPtr iprime; // injective without projective summands
    RepPtr pprime; // projective-injective
};
SummandSplit split_module(const RepPtr& m, Rng& rng);

struct PairSpec {
    std::string name;
    AlgebraPtr lambda, gamma;
    StableFunctor functor;
    bool negative_control = false;
    HypothesisReport lambda_report, gamma_report;
    std::shared_ptr<TransportCache> cache;

    bool valid() const
    {
        return lambda_report.valid_for_transfer() && gamma_report.valid_for_transfer();
    }
};

std::vector<std::string> curated_pair_names();
PairSpec curated_pair(const std::string& name, std::uint32_t p = kDefaultPrime);
std::vector<PairSpec> curated_pairs(std::uint32_t p = kDefaultPrime);

// F on the stable category: projective summands are stripped first
RepPtr apply_functor(const PairSpec& pair, const RepPtr& m, Rng& rng);
RepPtr apply_functor_inverse(const PairSpec& pair, const RepPtr& m, Rng& rng);
// F' = tau_Gamma . F . tau_Lambda^{-1} on the costable category: injective
// summands are stripped first
RepPtr apply_functor_prime(const PairSpec& pair, const RepPtr& m, Rng& rng);
RepPtr apply_functor_prime_inverse(const PairSpec& pair, const RepPtr& m, Rng& rng);

// Phi(omega) = F'(X) + F(I) + Q with Q the sum of all indecomposable
// projective-injective Gamma-modules; Psi is its mirror with P over Lambda
RepPtr phi(const PairSpec& pair, const RepPtr& omega, Rng& rng);
RepPtr psi(const PairSpec& pair, const RepPtr& nu, Rng& rng);

enum class QPrimeMode { Zero, FullQ };
// N = F'(Y) + F(I') + Q' for M = Y + I' + P'
RepPtr transport_module(const PairSpec& pair, const RepPtr& m, QPrimeMode q, Rng& rng);

enum class CheckKind {
    Thm35,
    Fadim,
    DomDim,
    ExtIso,
    Wakamatsu,
    Tilting,
    PhiPsi,
    Torsionfree,
    NTorsionfree,
    GdimZero,
    GorProj,
    WTCInstance,
};
const char* check_name(CheckKind kind);
CheckKind parse_check(const std::string& name); // InvalidArgument on unknown
std::vector<CheckKind> all_checks();

struct HypothesisFlag {
    std::string name;
    bool value;
};

struct CheckReport {
    std::string inputs;
    std::string lhs, rhs;
    bool pass = false;
    std::vector<HypothesisFlag> flags;
    std::vector<ApproximationChain> evidence_chains;
    std::vector<std::string> evidence_labels;
};

struct CheckRun {
    std::string pair;
    CheckKind kind;
    int cutoff = 0;
    std::uint64_t seed = 0;
    std::vector<CheckReport> reports;
    bool pass = true;
    bool hypothesis_ok = true;
};
CheckRun run_check(const PairSpec& pair, CheckKind kind, int cutoff, std::uint64_t seed);

} // namespace approxdim

#endif
