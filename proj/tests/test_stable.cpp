#include <doctest.h>

#include "approxdim/corpus.hpp"
#include "approxdim/stable.hpp"

using namespace approxdim;

namespace {

RepPtr simple(const AlgebraPtr& a, int v)
{
    return standard_module(a, StandardKind::Simple, v);
}
RepPtr proj(const AlgebraPtr& a, int v)
{
    return standard_module(a, StandardKind::Projective, v);
}

} // namespace

TEST_CASE("stable hom dimensions")
{
    AlgebraPtr kx2 = corpus_algebra("kx2");
    RepPtr s = simple(kx2, 0);
    CHECK(hom_dim(s, s) == 1);
    CHECK(stable_hom_dim(s, s) == 1); // nothing factors through Lambda
    CHECK(stable_hom_dim(regular_module(kx2), s) == 0);
    CHECK(stable_hom_dim(s, regular_module(kx2)) == 0);

    AlgebraPtr a = corpus_algebra("a3");
    for (int v = 0; v < 3; ++v)
        CHECK(stable_hom_dim(proj(a, v), simple(a, v)) == 0);

    // projective direct summands vanish stably
    RepPtr padded = direct_sum({s, regular_module(kx2)}).sum;
    CHECK(stable_hom_dim(padded, s) == stable_hom_dim(s, s));
}

TEST_CASE("almost split sequence over k[x]/(x^3) starting at the simple")
{
    Rng rng(0);
    AlgebraPtr a = corpus_algebra("kx3");
    RepPtr s = simple(a, 0);
    AlmostSplitSequence seq = almost_split_starting_at(s, rng);
    CHECK(seq.middle->total_dim() == 2);
    REQUIRE(seq.middle_parts.size() == 1); // the length-2 uniserial k[x]/(x^2)
    CHECK(seq.middle_parts[0]->total_dim() == 2);
    CHECK(!is_projective(seq.middle_parts[0]));
    CHECK(seq.right->dims == s->dims); // tau^{-1} S = S over a symmetric algebra
}

TEST_CASE("almost split sequences over N(3,2) have projective middles")
{
    Rng rng(0);
    AlgebraPtr a = corpus_algebra("nak32");
    for (int v = 0; v < 3; ++v) {
        AlmostSplitSequence seq = almost_split_starting_at(simple(a, v), rng);
        REQUIRE(seq.middle_parts.size() == 1);
        CHECK(is_projective(seq.middle_parts[0]));
        CHECK(seq.middle_parts[0]->total_dim() == 2);
    }
}

TEST_CASE("almost split sequence over A3 starting at S2")
{
    Rng rng(0);
    AlgebraPtr a = corpus_algebra("a3");
    AlmostSplitSequence seq = almost_split_starting_at(simple(a, 1), rng);
    CHECK(seq.middle->dims == std::vector<int>{1, 1, 0}); // I(2)
    REQUIRE(seq.middle_parts.size() == 1);
    CHECK(is_injective(seq.middle_parts[0]));
    CHECK(seq.right->dims == simple(a, 0)->dims); // tau^{-1} S2 = S1
}

TEST_CASE("almost split errors on bad input")
{
    Rng rng(0);
    AlgebraPtr a = corpus_algebra("a3");
    CHECK_THROWS_AS(almost_split_starting_at(simple(a, 0), rng), Error); // S1 = I(1)
    try {
        almost_split_starting_at(simple(a, 0), rng);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IsInjective);
    }
    RepPtr two = direct_sum({simple(a, 1), simple(a, 1)}).sum;
    try {
        almost_split_starting_at(two, rng);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotIndecomposable);
    }
}

TEST_CASE("node detection across the corpus")
{
    Rng rng(0);
    AlgebraPtr kx2 = corpus_algebra("kx2");
    CHECK(is_node(simple(kx2, 0), rng));

    AlgebraPtr nak32 = corpus_algebra("nak32");
    for (int v = 0; v < 3; ++v)
        CHECK(is_node(simple(nak32, v), rng));

    AlgebraPtr nak33 = corpus_algebra("nak33");
    for (int v = 0; v < 3; ++v)
        CHECK(!is_node(simple(nak33, v), rng));

    AlgebraPtr kx3 = corpus_algebra("kx3");
    CHECK(!is_node(simple(kx3, 0), rng));

    AlgebraPtr a3 = corpus_algebra("a3");
    for (int v = 0; v < 3; ++v)
        CHECK(!is_node(simple(a3, v), rng));
}

TEST_CASE("hypothesis reports")
{
    Rng rng(0);
    HypothesisReport nak33 = hypothesis_report(corpus_algebra("nak33"), rng);
    CHECK(nak33.node_vertices.empty());
    CHECK(nak33.semisimple_blocks.empty());
    CHECK(nak33.self_injective);
    CHECK(nak33.proj_inj.size() == 3);
    CHECK(nak33.valid_for_transfer());

    HypothesisReport kx2 = hypothesis_report(corpus_algebra("kx2"), rng);
    CHECK(kx2.node_vertices == std::vector<int>{0});
    CHECK(!kx2.valid_for_transfer());

    HypothesisReport a3 = hypothesis_report(corpus_algebra("a3"), rng);
    CHECK(a3.node_vertices.empty());
    CHECK(a3.proj_inj.size() == 1); // P(1) = I(3)
    CHECK(!a3.self_injective);
    CHECK(a3.valid_for_transfer());

    HypothesisReport sq = hypothesis_report(corpus_algebra("square"), rng);
    CHECK(sq.valid_for_transfer());
}

TEST_CASE("costable hom is the dual notion")
{
    AlgebraPtr kx2 = corpus_algebra("kx2");
    RepPtr s = simple(kx2, 0);
    CHECK(costable_hom_dim(s, s) == 1);
    CHECK(costable_hom_dim(regular_module(kx2), s) == 0);

    AlgebraPtr a = corpus_algebra("a3");
    // maps out of an injective vanish costably
    CHECK(costable_hom_dim(standard_module(a, StandardKind::Injective, 1), simple(a, 0))
          == 0);
}
