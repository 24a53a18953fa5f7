#ifndef APPROXDIM_REP_IO_HPP
#define APPROXDIM_REP_IO_HPP

#include <iosfwd>
#include <string>

#include "approxdim/rep.hpp"

namespace approxdim {

// Module file format, bound to an algebra at load time:
//
//   module
//   dims 1 1 1
//   map a 1 x 1
//   1
//   map b 1 x 1
//   1
//
// one 'map' block per arrow (any order, each exactly once), r x c headers
// matching the dims, entries reduced mod p; loading validates the algebra
// relations. Saving is canonical, so save(load(f)) == f for saved files.
RepPtr parse_module(std::istream& in, const AlgebraPtr& alg,
                    const std::string& origin = "<input>");
RepPtr load_module_file(const std::string& path, const AlgebraPtr& alg);
std::string format_module(const Representation& m);
void save_module_file(const Representation& m, const std::string& path);

} // namespace approxdim

#endif
