#include <doctest.h>

#include <set>
#include <sstream>

#include "approxdim/algebra_io.hpp"
#include "approxdim/corpus.hpp"
#include "approxdim/rng.hpp"

using namespace approxdim;

TEST_CASE("A3 path algebra has the six reduced paths")
{
    AlgebraPtr a = corpus_algebra("a3");
    CHECK(a->dim() == 6);
    CHECK(a->loewy_bound() == 3);
    std::set<std::string> names;
    for (int i = 0; i < a->dim(); ++i)
        names.insert(a->describe_basis_element(i));
    CHECK(names == std::set<std::string>{"e1", "e2", "e3", "a", "b", "a*b"});
}

TEST_CASE("Nakayama and local corpus algebras have the expected dimensions")
{
    CHECK(corpus_algebra("nak33")->dim() == 9);   // 3 trivial + 3 arrows + 3 length-2
    CHECK(corpus_algebra("nak32")->dim() == 6);
    CHECK(corpus_algebra("kx2")->dim() == 2);     // k[x]/(x^2)
    CHECK(corpus_algebra("kx3")->dim() == 3);
    CHECK(corpus_algebra("square")->dim() == 9);  // 4 + 4 + 1 identified diagonal
}

TEST_CASE("basis paths are partitioned by source vertex")
{
    for (const std::string& name : corpus_algebra_names()) {
        AlgebraPtr a = corpus_algebra(name);
        int total = 0;
        for (int v = 0; v < a->vertex_count(); ++v)
            total += static_cast<int>(a->basis_from(v).size());
        CHECK(total == a->dim());
    }
}

TEST_CASE("multiplication table is associative on random triples")
{
    Rng rng(3);
    for (const std::string& name : corpus_algebra_names()) {
        AlgebraPtr a = corpus_algebra(name);
        for (int trial = 0; trial < 30; ++trial) {
            int i = static_cast<int>(rng.below(a->dim()));
            int j = static_cast<int>(rng.below(a->dim()));
            int k = static_cast<int>(rng.below(a->dim()));
            Vec ei(a->dim(), 0), ej(a->dim(), 0), ek(a->dim(), 0);
            ei[i] = 1;
            ej[j] = 1;
            ek[k] = 1;
            Vec lhs = a->multiply(a->multiply(ei, ej), ek);
            Vec rhs = a->multiply(ei, a->multiply(ej, ek));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("idempotents are orthogonal and sum to the unit")
{
    AlgebraPtr a = corpus_algebra("square");
    Vec unit = a->unit();
    Vec acc(a->dim(), 0);
    for (int v = 0; v < a->vertex_count(); ++v) {
        Vec ev(a->dim(), 0);
        ev[a->idempotent_index(v)] = 1;
        CHECK(a->multiply(ev, ev) == ev);
        for (int w = 0; w < v; ++w) {
            Vec ew(a->dim(), 0);
            ew[a->idempotent_index(w)] = 1;
            CHECK(a->multiply(ev, ew) == Vec(a->dim(), 0));
        }
        for (int k = 0; k < a->dim(); ++k)
            acc[k] = a->field().add(acc[k], ev[k]);
    }
    CHECK(acc == unit);
    CHECK(a->multiply(unit, unit) == unit);
}

TEST_CASE("opposite algebra is an involution fixing the paths")
{
    for (const std::string& name : corpus_algebra_names()) {
        AlgebraPtr a = corpus_algebra(name);
        AlgebraPtr op = a->opposite();
        CHECK(op->dim() == a->dim());
        CHECK(op->loewy_bound() == a->loewy_bound());
        // opposite of opposite is the identical object
        CHECK(op->opposite().get() == a.get());
        // basis paths biject under reversal
        for (int i = 0; i < a->dim(); ++i) {
            Path rev = path_reversed(a->basis()[i], a->quiver());
            CHECK(op->basis_index(rev) >= 0);
        }
    }
    // one-loop algebras are isomorphic to their opposite on the nose
    AlgebraPtr kx2 = corpus_algebra("kx2");
    CHECK(kx2->opposite()->dim() == 2);
}

TEST_CASE("transfer to the opposite algebra is a linear anti-isomorphism")
{
    Rng rng(11);
    AlgebraPtr a = corpus_algebra("square");
    AlgebraPtr op = a->opposite();
    for (int trial = 0; trial < 20; ++trial) {
        Vec x(a->dim(), 0), y(a->dim(), 0);
        for (int k = 0; k < a->dim(); ++k) {
            x[k] = rng.field_element(a->field());
            y[k] = rng.field_element(a->field());
        }
        Vec lhs = a->transfer_to_opposite(a->multiply(x, y));
        Vec rhs = op->multiply(a->transfer_to_opposite(y), a->transfer_to_opposite(x));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("blocks detect connectivity and arrowless components")
{
    AlgebraPtr a3 = corpus_algebra("a3");
    auto blocks = a3->blocks();
    REQUIRE(blocks.size() == 1);
    CHECK(!blocks[0].semisimple);

    // A3 plus an isolated vertex
    Quiver q;
    q.vertex_count = 4;
    q.arrows.push_back({"a", 0, 1});
    q.arrows.push_back({"b", 1, 2});
    AlgebraPtr ext = Algebra::build(q, {});
    auto blocks2 = ext->blocks();
    REQUIRE(blocks2.size() == 2);
    CHECK(!blocks2[0].semisimple);
    CHECK(blocks2[1].semisimple);
    CHECK(blocks2[1].vertices == std::vector<int>{3});

    auto nak = corpus_algebra("nak33")->blocks();
    REQUIRE(nak.size() == 1);
    CHECK(!nak[0].semisimple);
}

TEST_CASE("reduce_path_expr computes normal forms")
{
    AlgebraPtr a = corpus_algebra("a3");
    // trivial path reduces to its unit coordinate
    Path e2{1, {}};
    Vec v = a->reduce_path(e2);
    Vec expect(a->dim(), 0);
    expect[a->idempotent_index(1)] = 1;
    CHECK(v == expect);

    // a*b is itself a basis path
    Path ab{0, {0, 1}};
    Vec w = a->reduce_path(ab);
    int idx = a->basis_index(ab);
    REQUIRE(idx >= 0);
    CHECK(w[idx] == 1);

    // any path of length >= loewy bound vanishes
    AlgebraPtr kx2 = corpus_algebra("kx2");
    Path xx{0, {0, 0}};
    CHECK(kx2->reduce_path(xx) == Vec(kx2->dim(), 0));

    // in the square, a*b and c*d share a normal form
    AlgebraPtr sq = corpus_algebra("square");
    Path p1{0, {0, 1}};
    Path p2{0, {2, 3}};
    CHECK(sq->reduce_path(p1) == sq->reduce_path(p2));
}

TEST_CASE("build rejects ill-formed and non-admissible input")
{
    Quiver loop;
    loop.vertex_count = 1;
    loop.arrows.push_back({"x", 0, 0});

    // free loop algebra is infinite-dimensional
    CHECK_THROWS_AS(Algebra::build(loop, {}, kDefaultPrime, 12), Error);
    try {
        Algebra::build(loop, {}, kDefaultPrime, 12);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAdmissibleWithinBound);
    }

    // length-1 relation term
    Path x{0, {0}};
    CHECK_THROWS_AS(Algebra::build(loop, {{{1, x}}}), Error);

    // mixed source/target inside one relation
    Quiver q;
    q.vertex_count = 3;
    q.arrows.push_back({"a", 0, 1});
    q.arrows.push_back({"b", 1, 2});
    Path ab{0, {0, 1}};
    Path bb_bad{1, {1, 1}};
    CHECK(!path_composable(q, bb_bad));
    PathExpr mixed{{1, ab}, {1, Path{1, {1}}}};
    CHECK_THROWS_AS(Algebra::build(q, {mixed}), Error);
}

TEST_CASE("build is deterministic")
{
    AlgebraPtr a = corpus_algebra("square");
    AlgebraPtr b = corpus_algebra("square");
    REQUIRE(a->dim() == b->dim());
    for (int i = 0; i < a->dim(); ++i)
        CHECK(a->basis()[i] == b->basis()[i]);
    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < a->dim(); ++j)
            CHECK(a->table(i, j) == b->table(i, j));
}

TEST_CASE("algebra file format round trips and reports parse errors")
{
    std::string text = "field 32003\n"
                       "vertices 3\n"
                       "arrow a 1 2\n"
                       "arrow b 2 3\n"
                       "relation 1*a*b        # kill the long path\n";
    std::istringstream in(text);
    AlgebraPtr a = parse_algebra(in, "inline");
    CHECK(a->dim() == 5); // e1 e2 e3 a b
    CHECK(a->loewy_bound() == 2);

    std::string canon = format_algebra(*a);
    std::istringstream in2(canon);
    AlgebraPtr b = parse_algebra(in2, "inline2");
    CHECK(format_algebra(*b) == canon);
    CHECK(b->dim() == a->dim());

    std::istringstream bad("vertices 2\narrow a 1 5\n");
    try {
        parse_algebra(bad, "badfile");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("badfile:2") != std::string::npos);
    }

    std::istringstream bad2("vertices 1\narrow x 1 1\nrelation 1*x\n");
    CHECK_THROWS_AS(parse_algebra(bad2, "short"), Error);
}

TEST_CASE("inhomogeneous admissible relations reduce correctly")
{
    // one loop with x^2 = x^3 and x^4 = 0 forces x^2 = 0
    Quiver loop;
    loop.vertex_count = 1;
    loop.arrows.push_back({"x", 0, 0});
    Fp F(kDefaultPrime);
    Path x2{0, {0, 0}};
    Path x3{0, {0, 0, 0}};
    Path x4{0, {0, 0, 0, 0}};
    PathExpr mixed{{1, x2}, {F.neg(1), x3}};
    AlgebraPtr a = Algebra::build(loop, {mixed, {{1, x4}}});
    CHECK(a->dim() == 2);
    CHECK(a->loewy_bound() == 2);
    CHECK(a->reduce_path(x2) == Vec(a->dim(), 0));
}

TEST_CASE("algebras work over other odd primes")
{
    AlgebraPtr a = corpus_algebra("a3", 101);
    CHECK(a->field().p() == 101);
    CHECK(a->dim() == 6);
    AlgebraPtr sq = corpus_algebra("square", 101);
    CHECK(sq->dim() == 9);
    // non-prime or tiny moduli are rejected
    CHECK_THROWS_AS(corpus_algebra("a3", 100), Error);
    CHECK_THROWS_AS(corpus_algebra("a3", 2), Error);
}

TEST_CASE("maxlen directive bounds the admissibility search")
{
    std::istringstream in("vertices 1\nmaxlen 4\narrow x 1 1\nrelation 1*x*x*x\n");
    AlgebraPtr a = parse_algebra(in, "inline");
    CHECK(a->dim() == 3);

    std::istringstream bad("vertices 1\nmaxlen 2\narrow x 1 1\nrelation 1*x*x*x\n");
    CHECK_THROWS_AS(parse_algebra(bad, "inline"), Error);
}

TEST_CASE("algebras beyond the default maxlen still round trip")
{
    std::ostringstream in_text;
    in_text << "vertices 1\nmaxlen 40\narrow x 1 1\nrelation 1";
    for (int i = 0; i < 35; ++i)
        in_text << "*x";
    in_text << "\n";
    std::istringstream in(in_text.str());
    AlgebraPtr a = parse_algebra(in, "long");
    CHECK(a->dim() == 35);
    CHECK(a->loewy_bound() == 35);
    std::istringstream again(format_algebra(*a));
    CHECK(parse_algebra(again, "long2")->dim() == 35);
}
