#ifndef APPROXDIM_ALGEBRA_HPP
#define APPROXDIM_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "approxdim/matrix.hpp"
#include "approxdim/quiver.hpp"

namespace approxdim {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// a bound quiver algebra kQ/I presented by its reduced path basis and a
// full multiplication table; immutable after build
class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    static constexpr int kDefaultMaxLen = 30;

    static AlgebraPtr build(Quiver q, std::vector<PathExpr> relations,
                            std::uint32_t p = kDefaultPrime, int max_len = kDefaultMaxLen);

    const Fp& field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    int vertex_count() const { return quiver_.vertex_count; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int loewy_bound() const { return loewy_bound_; }
    const std::vector<Path>& basis() const { return basis_; }
    const std::vector<PathExpr>& relations() const { return relations_; }

    int idempotent_index(int vertex) const { return idempotents_[vertex]; }
    int basis_index(const Path& p) const; // -1 when p is not a basis path
    int basis_source(int i) const { return basis_[i].source; }
    int basis_target(int i) const { return basis_target_[i]; }

    // basis indices of paths with the given source (resp. source and target),
    // in basis order
    const std::vector<int>& basis_from(int v) const { return basis_from_[v]; }
    std::vector<int> basis_from_to(int v, int w) const;

    // product of two basis elements as a dense coordinate vector
    const Vec& table(int i, int j) const { return table_[i * basis_.size() + j]; }
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec unit() const; // sum of the idempotents

    // normal form of a path / path expression in basis coordinates;
    // throws RelationIllFormed when the expression does not compose
    Vec reduce_path(const Path& p) const;
    Vec reduce_path_expr(const PathExpr& x) const;

    // the opposite algebra; memoized so that the opposite of the opposite is
    // this very object
    AlgebraPtr opposite() const;
    // image of an element under the reversal anti-isomorphism, in the
    // opposite algebra's basis coordinates
    Vec transfer_to_opposite(const Vec& x) const;

    struct Block {
        std::vector<int> vertices;
        bool semisimple = false;
    };
    std::vector<Block> blocks() const;

    std::string describe_basis_element(int i) const;

  private:
    Algebra() = default;

    Fp field_;
    Quiver quiver_;
    std::vector<PathExpr> relations_;
    std::vector<Path> basis_;
    std::vector<int> basis_target_;
    std::vector<int> idempotents_;          // vertex -> basis index
    std::vector<std::vector<int>> basis_from_;
    std::vector<Vec> table_;                // dim*dim dense products
    std::map<std::vector<int>, int> basis_by_key_; // (source, arrows...) -> index
    int loewy_bound_ = 1;

    mutable std::mutex opposite_mu_;
    mutable std::weak_ptr<const Algebra> opposite_;
};

} // namespace approxdim

#endif
