#ifndef APPROXDIM_REPORT_HPP
#define APPROXDIM_REPORT_HPP

#include <nlohmann/json.hpp>

#include "approxdim/stable.hpp"
#include "approxdim/transport.hpp"

namespace approxdim {

inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

// evidence record of an approximation chain: per step the dims of T_{i-1},
// the multiplicities of the omega summands in omega_i, and the mono flag
json chain_json(const ApproximationChain& chain);

json hypothesis_report_json(const HypothesisReport& report, const AlgebraPtr& alg);

json check_report_json(const CheckReport& report);
json check_run_json(const CheckRun& run);

// the full verification document; deterministic key order, no timestamps
json emit_report(const std::vector<CheckRun>& runs, std::uint64_t seed);

} // namespace approxdim

#endif
