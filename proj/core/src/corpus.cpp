#include "approxdim/corpus.hpp"

#include <filesystem>

#include "approxdim/rep_io.hpp"

namespace approxdim {

namespace {

Quiver cyclic_quiver(int n)
{
    Quiver q;
    q.vertex_count = n;
    for (int i = 0; i < n; ++i)
        q.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
    return q;
}

std::vector<PathExpr> cyclic_power_relations(const Quiver& q, int len)
{
    // all paths of the given length, one relation each
    std::vector<PathExpr> rels;
    for (int start = 0; start < q.vertex_count; ++start) {
        Path p;
        p.source = start;
        int at = start;
        for (int k = 0; k < len; ++k) {
            p.arrows.push_back(at);
            at = (at + 1) % q.vertex_count;
        }
        rels.push_back({{1, p}});
    }
    return rels;
}

Quiver loop_quiver()
{
    Quiver q;
    q.vertex_count = 1;
    q.arrows.push_back({"x", 0, 0});
    return q;
}

PathExpr loop_power(int n)
{
    Path p;
    p.source = 0;
    p.arrows.assign(n, 0);
    return {{1, p}};
}

} // namespace

std::vector<std::string> corpus_algebra_names()
{
    return {"a3", "nak33", "nak32", "kx2", "kx3", "square"};
}

std::string corpus_algebra_description(const std::string& name)
{
    if (name == "a3")
        return "path algebra of the linear quiver 1 -> 2 -> 3";
    if (name == "nak33")
        return "self-injective Nakayama algebra: cyclic 3-quiver mod paths of length 3";
    if (name == "nak32")
        return "Nakayama algebra: cyclic 3-quiver mod paths of length 2 (every simple is a node)";
    if (name == "kx2")
        return "one loop mod x^2 (dual numbers; the simple is a node)";
    if (name == "kx3")
        return "one loop mod x^3";
    if (name == "square")
        return "commutative square: 1 -> 2,3 -> 4 with the two length-2 paths identified";
    fail(Errc::InvalidArgument, "unknown corpus algebra '" + name + "'");
}

AlgebraPtr corpus_algebra(const std::string& name, std::uint32_t p)
{
    if (name == "a3") {
        Quiver q;
        q.vertex_count = 3;
        q.arrows.push_back({"a", 0, 1});
        q.arrows.push_back({"b", 1, 2});
        return Algebra::build(q, {}, p);
    }
    if (name == "nak33") {
        Quiver q = cyclic_quiver(3);
        return Algebra::build(q, cyclic_power_relations(q, 3), p);
    }
    if (name == "nak32") {
        Quiver q = cyclic_quiver(3);
        return Algebra::build(q, cyclic_power_relations(q, 2), p);
    }
    if (name == "kx2")
        return Algebra::build(loop_quiver(), {loop_power(2)}, p);
    if (name == "kx3")
        return Algebra::build(loop_quiver(), {loop_power(3)}, p);
    if (name == "square") {
        Quiver q;
        q.vertex_count = 4;
        q.arrows.push_back({"a", 0, 1});
        q.arrows.push_back({"b", 1, 3});
        q.arrows.push_back({"c", 0, 2});
        q.arrows.push_back({"d", 2, 3});
        Fp F(p);
        Path ab{0, {0, 1}};
        Path cd{0, {2, 3}};
        PathExpr rel{{1, ab}, {F.neg(1), cd}};
        return Algebra::build(q, {rel}, p);
    }
    fail(Errc::InvalidArgument, "unknown corpus algebra '" + name + "'");
}

RepPtr resolve_module_spec(const AlgebraPtr& a, const std::string& spec)
{
    require(!spec.empty(), Errc::InvalidArgument, "empty module specifier");
    if (spec == "regular")
        return regular_module(a);
    if (spec == "coregular")
        return cogenerator_module(a);
    if (spec == "zero")
        return zero_module(a);
    if (spec == "projinj") {
        std::vector<RepPtr> parts;
        for (int v = 0; v < a->vertex_count(); ++v) {
            RepPtr p = standard_module(a, StandardKind::Projective, v);
            if (is_injective(p))
                parts.push_back(p);
        }
        if (parts.empty())
            return zero_module(a);
        return direct_sum(parts).sum;
    }
    if ((spec[0] == 'P' || spec[0] == 'I' || spec[0] == 'S') && spec.size() > 1
        && !std::filesystem::exists(spec)) {
        int v = 0;
        try {
            v = std::stoi(spec.substr(1));
        } catch (const std::exception&) {
            v = 0;
        }
        if (v >= 1 && v <= a->vertex_count()) {
            StandardKind kind = spec[0] == 'P' ? StandardKind::Projective
                : spec[0] == 'I'               ? StandardKind::Injective
                                               : StandardKind::Simple;
            return standard_module(a, kind, v - 1);
        }
        fail(Errc::InvalidArgument,
             "module specifier '" + spec + "' has a vertex outside 1.."
                 + std::to_string(a->vertex_count()));
    }
    return load_module_file(spec, a);
}

} // namespace approxdim

// ---------------------------------------------------------------------------
// module family and subset searches
// ---------------------------------------------------------------------------

#include <functional>

#include "approxdim/approx.hpp"
#include "approxdim/stable.hpp"

namespace approxdim {

namespace {

bool same_class(const RepPtr& a, const RepPtr& b, Rng& rng)
{
    return a->dims == b->dims && is_isomorphic(a, b, rng);
}

// a random extension middle of n by m, via a random cocycle on the
// presentation of n
RepPtr random_extension(const RepPtr& n, const RepPtr& m, Rng& rng)
{
    Cover cov = projective_cover(n);
    SubObject omega_n = sub_quotient(cov.pi).ker;
    std::vector<Morphism> hb = hom_basis(omega_n.rep, m);
    if (hb.empty())
        return direct_sum({m, n}).sum;
    const Fp& F = m->alg->field();
    Morphism cocycle = zero_morphism(omega_n.rep, m);
    for (const Morphism& h : hb)
        cocycle = morph_add(cocycle, morph_scale(h, rng.field_element(F)));
    DirectSum mp = direct_sum({m, cov.proj.rep});
    std::vector<Matrix> glue;
    for (int v = 0; v < m->alg->vertex_count(); ++v)
        glue.push_back(vstack(cocycle.comps[v], omega_n.incl.comps[v].scale(F.neg(1))));
    return quotient_by_columns(mp.sum, glue).rep;
}

} // namespace

std::vector<RepPtr> module_family(const AlgebraPtr& a, std::uint64_t seed, int max_total_dim)
{
    Rng rng(seed);
    std::vector<RepPtr> pool;
    auto intern = [&](const RepPtr& cand) {
        if (cand->is_zero() || cand->total_dim() > max_total_dim)
            return;
        for (const RepPtr& have : pool)
            if (same_class(cand, have, rng))
                return;
        pool.push_back(cand);
    };
    auto intern_parts = [&](const RepPtr& cand) {
        if (cand->is_zero() || cand->total_dim() > 2 * max_total_dim)
            return;
        for (const RepPtr& part : decompose(cand, rng).parts)
            intern(part);
    };

    for (int v = 0; v < a->vertex_count(); ++v) {
        intern(standard_module(a, StandardKind::Simple, v));
        intern(standard_module(a, StandardKind::Projective, v));
        intern(standard_module(a, StandardKind::Injective, v));
    }

    // close under structural neighbours a few rounds
    constexpr int kRounds = 6;
    std::size_t scanned = 0;
    for (int round = 0; round < kRounds && scanned < pool.size() && pool.size() < 48; ++round) {
        std::size_t end = pool.size();
        for (std::size_t i = scanned; i < end; ++i) {
            RepPtr mref = pool[i];
            RadSocTop rst = radical_socle_top(mref);
            intern_parts(rst.rad.rep);
            intern_parts(rst.top.rep);
            intern_parts(quotient_by_columns(mref, [&] {
                             std::vector<Matrix> cols;
                             for (int v = 0; v < a->vertex_count(); ++v)
                                 cols.push_back(rst.soc.incl.comps[v]);
                             return cols;
                         }()).rep);
            intern_parts(syzygy(mref));
            intern_parts(cosyzygy(mref));
            intern_parts(tau(mref));
            intern_parts(tau_inverse(mref));
        }
        scanned = end;
    }

    // seeded random extensions between family members
    for (int trial = 0; trial < 24 && pool.size() < 64; ++trial) {
        const RepPtr& m = pool[rng.below(pool.size())];
        const RepPtr& n = pool[rng.below(pool.size())];
        if (m->total_dim() + n->total_dim() > max_total_dim)
            continue;
        intern_parts(random_extension(n, m, rng));
    }

    std::stable_sort(pool.begin(), pool.end(), [](const RepPtr& x, const RepPtr& y) {
        if (x->total_dim() != y->total_dim())
            return x->total_dim() < y->total_dim();
        return x->dims < y->dims;
    });
    return pool;
}

namespace {

std::vector<RepPtr> subset_search(const AlgebraPtr& a, int cutoff, std::uint64_t seed,
                                  bool wakamatsu_mode)
{
    Rng rng(seed);
    std::vector<RepPtr> fam = module_family(a, seed);
    // drop anything with a self-extension in degree one; candidates must be
    // pairwise Ext^1-orthogonal as well
    std::vector<RepPtr> pool;
    for (const RepPtr& m : fam)
        if (ext_dim(m, m, 1) == 0)
            pool.push_back(m);
    const int k = static_cast<int>(pool.size());
    std::vector<std::vector<int>> ext1(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                ext1[i][j] = ext_dim(pool[i], pool[j], 1);

    std::vector<RepPtr> found;
    const int n = a->vertex_count();
    std::vector<int> idx;
    auto consider = [&]() {
        std::vector<RepPtr> parts;
        for (int i : idx)
            parts.push_back(pool[i]);
        RepPtr omega = direct_sum(parts).sum;
        if (wakamatsu_mode) {
            if (is_wakamatsu(omega, cutoff, rng).kind != WakamatsuVerdict::Kind::No)
                found.push_back(omega);
        } else {
            if (is_tilting(omega, cutoff, rng).kind == TiltingVerdict::Kind::Yes)
                found.push_back(omega);
        }
    };
    // enumerate pairwise Ext^1-orthogonal subsets of size exactly n
    std::function<void(int)> recurse = [&](int start) {
        if (static_cast<int>(idx.size()) == n) {
            consider();
            return;
        }
        for (int i = start; i < k; ++i) {
            bool ok = true;
            for (int j : idx)
                if (ext1[i][j] != 0 || ext1[j][i] != 0) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            idx.push_back(i);
            recurse(i + 1);
            idx.pop_back();
        }
    };
    recurse(0);
    return found;
}

} // namespace

std::vector<RepPtr> tilting_search(const AlgebraPtr& a, int cutoff, std::uint64_t seed)
{
    return subset_search(a, cutoff, seed, false);
}

std::vector<RepPtr> wakamatsu_search(const AlgebraPtr& a, int cutoff, std::uint64_t seed)
{
    return subset_search(a, cutoff, seed, true);
}

} // namespace approxdim
