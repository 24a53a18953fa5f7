#ifndef APPROXDIM_ALGEBRA_IO_HPP
#define APPROXDIM_ALGEBRA_IO_HPP

#include <iosfwd>
#include <string>

#include "approxdim/algebra.hpp"

namespace approxdim {

// Line-oriented UTF-8 algebra format ('#' starts a comment):
//
//   field 32003
//   vertices 3
//   maxlen 30
//   arrow a 1 2
//   arrow b 2 3
//   relation 1*a*b + 31999*c*d
//
// vertices are 1-based in files; relation terms are coeff*arrow*...*arrow
// with at least two arrows, '+'-separated; coefficients may be negative and
// are reduced mod p. Parse errors carry 1-based line numbers.
AlgebraPtr parse_algebra(std::istream& in, const std::string& origin = "<input>");
AlgebraPtr load_algebra_file(const std::string& path);
std::string format_algebra(const Algebra& a);
void save_algebra_file(const Algebra& a, const std::string& path);

} // namespace approxdim

#endif
