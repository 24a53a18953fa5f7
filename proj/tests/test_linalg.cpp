#include <doctest.h>

#include "approxdim/gfpoly.hpp"
#include "approxdim/matrix.hpp"
#include "approxdim/rng.hpp"

using namespace approxdim;

namespace {

Matrix random_matrix(const Fp& F, std::size_t r, std::size_t c, Rng& rng)
{
    Matrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rng.field_element(F);
    return m;
}

} // namespace

TEST_CASE("rref on an identity matrix is the identity")
{
    Fp F(32003);
    for (std::size_t n : {1u, 4u, 7u}) {
        Matrix id = Matrix::identity(F, n);
        Rref rr = rref(id);
        CHECK(rr.mat == id);
        CHECK(rr.rank == n);
    }
}

TEST_CASE("rref accepts zero-row and zero-column matrices")
{
    Fp F(32003);
    Matrix a(F, 0, 3);
    Rref rr = rref(a);
    CHECK(rr.rank == 0);
    CHECK(rr.mat.rows() == 0);
    CHECK(rr.mat.cols() == 3);

    Matrix b(F, 3, 0);
    CHECK(rref(b).rank == 0);
    CHECK(kernel_basis(b).rows() == 0);
    CHECK(rref(Matrix(F, 0, 0)).rank == 0);
}

TEST_CASE("rank-1 system over GF(5), hand-reduced")
{
    Fp F(5);
    Matrix a(F, 2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 2;
    a.at(1, 1) = 4;
    Rref rr = rref(a);
    CHECK(rr.rank == 1);
    REQUIRE(rr.pivots.size() == 1);
    CHECK(rr.pivots[0] == 0);

    // x + 2y = 0 mod 5 has kernel line through (3, 1)
    Matrix row(F, 1, 2);
    row.at(0, 0) = 1;
    row.at(0, 1) = 2;
    Matrix k = kernel_basis(row);
    REQUIRE(k.rows() == 1);
    Fel x = k.at(0, 0), y = k.at(0, 1);
    CHECK(F.add(x, F.mul(2, y)) == 0);
    bool proportional = (F.mul(x, 1) == F.mul(3, y));
    CHECK(proportional);

    // consistent rank-1 solve: x + 2y = 3
    Matrix b(F, 2, 1);
    b.at(0, 0) = 3;
    b.at(1, 0) = 1; // 6 mod 5
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.mul(*sol) == b);
}

TEST_CASE("kernel dimensions at the extremes")
{
    Fp F(32003);
    Matrix inv(F, 3, 3);
    inv.at(0, 0) = 2;
    inv.at(1, 1) = 5;
    inv.at(2, 2) = 1;
    inv.at(0, 2) = 7;
    CHECK(kernel_basis(inv).rows() == 0);

    Matrix zero(F, 4, 4);
    Matrix k = kernel_basis(zero);
    CHECK(k.rows() == 4);
    CHECK(rank(k) == 4);
}

TEST_CASE("solve recognizes unsolvable systems")
{
    Fp F(32003);
    Matrix a(F, 2, 2); // zero map
    Matrix b(F, 2, 1);
    b.at(0, 0) = 1;
    CHECK(!solve(a, b).has_value());

    Matrix id = Matrix::identity(F, 3);
    Rng rng(1);
    Matrix rhs = random_matrix(F, 3, 2, rng);
    auto sol = solve(id, rhs);
    REQUIRE(sol.has_value());
    CHECK(*sol == rhs);
}

TEST_CASE("rank-nullity and solve round trips on random matrices")
{
    Fp F(32003);
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = rng.below(6);
        std::size_t c = rng.below(6);
        Matrix a = random_matrix(F, r, c, rng);
        Rref rr = rref(a);
        CHECK(rr.rank == rank(rr.mat));
        Matrix k = kernel_basis(a);
        CHECK(rr.rank + k.rows() == c);
        // every kernel row is annihilated
        for (std::size_t i = 0; i < k.rows(); ++i) {
            Vec v = k.row(i);
            Vec av = a.mul_vec(v);
            for (Fel e : av)
                CHECK(e == 0);
        }
        // B inside the column space: B = A*X0
        Matrix x0 = random_matrix(F, c, 3, rng);
        Matrix b = a.mul(x0);
        auto sol = solve(a, b);
        REQUIRE(sol.has_value());
        CHECK(a.mul(*sol) == b);
    }
}

TEST_CASE("quotient map splits coordinates along a subspace")
{
    Fp F(32003);
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t d = 1 + rng.below(6);
        std::size_t s = rng.below(d + 1);
        Matrix span = random_matrix(F, s, d, rng);
        QuotientMap qm = quotient_map(span);
        std::size_t q = d - rank(span);
        CHECK(qm.proj.rows() == q);
        CHECK(qm.section.cols() == q);
        CHECK(qm.proj.mul(qm.section) == Matrix::identity(F, q));
        // proj kills the subspace
        Matrix killed = qm.proj.mul(span.transpose());
        CHECK(killed.is_zero());
    }
}

TEST_CASE("polynomial factor extraction over GF(p)")
{
    Fp F(32003);
    Rng rng(5);
    using namespace gfpoly;
    // f = (x - 3)^2 (x^2 + 1) — note x^2 + 1 may factor depending on p
    Poly f = mul(F, mul(F, {F.from_int(-3), 1}, {F.from_int(-3), 1}), {1, 0, 1});
    Poly g = any_irreducible_factor(F, f, rng);
    CHECK(deg(g) >= 1);
    CHECK(divmod(F, f, g).second.empty());

    // product of distinct linear factors
    Poly h{1};
    for (int c : {1, 2, 5, 9})
        h = mul(F, h, {F.from_int(-c), 1});
    for (int trial = 0; trial < 5; ++trial) {
        Poly q = any_irreducible_factor(F, h, rng);
        CHECK(deg(q) == 1);
        CHECK(divmod(F, h, q).second.empty());
    }

    // power of a single irreducible: multiplicity recovers the exponent
    Poly lin{F.from_int(-7), 1};
    Poly pw = mul(F, mul(F, lin, lin), lin);
    CHECK(any_irreducible_factor(F, pw, rng) == lin);
    CHECK(multiplicity(F, pw, lin) == 3);
}
