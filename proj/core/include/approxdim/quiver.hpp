#ifndef APPROXDIM_QUIVER_HPP
#define APPROXDIM_QUIVER_HPP

#include <string>
#include <vector>

#include "approxdim/field.hpp"

namespace approxdim {

// vertices are 0-based internally; the file format speaks 1-based
struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
};

struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows; // arrow id = index

    void validate() const;
    int arrow_index(const std::string& name) const; // -1 when absent
    Quiver reversed() const;                        // same arrow ids, endpoints swapped
};

// a path is its source plus arrow ids in traversal order; concatenation
// p.q means "traverse p, then q" ("left factor first")
struct Path {
    int source = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    bool operator==(const Path& o) const
    {
        return source == o.source && arrows == o.arrows;
    }
};

int path_target(const Quiver& q, const Path& p);
bool path_composable(const Quiver& q, const Path& p);  // consecutive arrows chain
Path path_concat(const Path& p, const Path& q);
Path path_reversed(const Path& p, const Quiver& q); // as a path of the reversed quiver
std::string path_to_string(const Quiver& q, const Path& p);

// deterministic global order: by length, then arrow sequence, then source
bool path_less(const Path& a, const Path& b);

struct PathTerm {
    Fel coeff = 0;
    Path path;
};
using PathExpr = std::vector<PathTerm>;

} // namespace approxdim

#endif
