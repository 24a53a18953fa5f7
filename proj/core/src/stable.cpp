#include "approxdim/stable.hpp"

namespace approxdim {

namespace {

Matrix morphism_rows(const std::vector<Morphism>& fs, std::size_t flat_len, const Fp& F)
{
    Matrix rows(F, fs.size(), flat_len);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Vec flat = morph_flatten(fs[i]);
        for (std::size_t j = 0; j < flat_len; ++j)
            rows.at(i, j) = flat[j];
    }
    return rows;
}

} // namespace

int stable_hom_dim(const RepPtr& m, const RepPtr& n)
{
    const int full = hom_dim(m, n);
    if (full == 0)
        return 0;
    Cover c = projective_cover(n);
    std::vector<Morphism> through = hom_basis(m, c.proj.rep);
    if (through.empty())
        return full;
    std::vector<Morphism> images;
    for (const Morphism& g : through)
        images.push_back(compose(g, c.pi));
    const std::size_t flat_len = morph_flatten(zero_morphism(m, n)).size();
    return full - static_cast<int>(rank(morphism_rows(images, flat_len, m->alg->field())));
}

int costable_hom_dim(const RepPtr& m, const RepPtr& n)
{
    const int full = hom_dim(m, n);
    if (full == 0)
        return 0;
    Envelope e = injective_envelope(m);
    std::vector<Morphism> through = hom_basis(e.env, n);
    if (through.empty())
        return full;
    std::vector<Morphism> images;
    for (const Morphism& g : through)
        images.push_back(compose(e.iota, g));
    const std::size_t flat_len = morph_flatten(zero_morphism(m, n)).size();
    return full - static_cast<int>(rank(morphism_rows(images, flat_len, m->alg->field())));
}

AlmostSplitSequence almost_split_starting_at(const RepPtr& m, Rng& rng)
{
    require(!m->is_zero(), Errc::NotIndecomposable, "the zero module is not indecomposable");
    require(!is_injective(m), Errc::IsInjective,
            "no almost split sequence starts at an injective module");
    {
        EndAlgebra em = end_algebra(m);
        require(em.local(), Errc::NotIndecomposable,
                "almost split sequences start at indecomposable modules");
    }
    const Fp& F = m->alg->field();
    RepPtr x = tau_inverse(m);

    // presentation 0 -> Omega X -> P0 -> X -> 0
    Cover cov = projective_cover(x);
    SubObject omega_x = sub_quotient(cov.pi).ker;

    // Ext^1(X, M) = Hom(Omega X, M) / restrictions from P0
    std::vector<Morphism> cocycles = hom_basis(omega_x.rep, m);
    require(!cocycles.empty(), Errc::Internal, "Ext^1(tau^{-1}M, M) vanished");
    const std::size_t flat_len = morph_flatten(zero_morphism(omega_x.rep, m)).size();
    Matrix cocycle_rows = morphism_rows(cocycles, flat_len, F);
    Rref cocycle_rref = rref(cocycle_rows);

    auto coords_in_basis = [&](const Morphism& f) {
        Vec flat = morph_flatten(f);
        Matrix target(F, flat.size(), 1);
        for (std::size_t i = 0; i < flat.size(); ++i)
            target.at(i, 0) = flat[i];
        auto sol = solve(cocycle_rows.transpose(), target);
        require(sol.has_value(), Errc::Internal, "cocycle outside the hom space");
        return sol->col(0);
    };

    std::vector<Morphism> restrictions;
    for (const Morphism& g : hom_basis(cov.proj.rep, m))
        restrictions.push_back(compose(omega_x.incl, g));
    Matrix boundary(F, restrictions.size(), cocycles.size());
    for (std::size_t i = 0; i < restrictions.size(); ++i) {
        Vec cds = coords_in_basis(restrictions[i]);
        for (std::size_t j = 0; j < cds.size(); ++j)
            boundary.at(i, j) = cds[j];
    }
    QuotientMap ext = quotient_map(boundary);
    const std::size_t ext_dim1 = ext.proj.rows();
    require(ext_dim1 >= 1, Errc::Internal, "Ext^1(tau^{-1}M, M) vanished after boundaries");

    // right End(X)-action on Ext^1(X, M): lift endomorphisms through the
    // presentation and precompose cocycles
    EndAlgebra ex = end_algebra(x);
    std::vector<Matrix> actions;
    for (std::size_t r = 0; r < ex.radical.rows(); ++r) {
        Morphism e = zero_morphism(x, x);
        for (std::size_t k = 0; k < ex.basis.size(); ++k)
            e = morph_add(e, morph_scale(ex.basis[k], ex.radical.at(r, k)));
        // lift to P0
        Morphism e_after_pi = compose(cov.pi, e);
        std::vector<Vec> lift_gens;
        for (int s = 0; s < cov.proj.summands(); ++s) {
            const int v = cov.proj.vertices[s];
            Vec target_col = e_after_pi.comps[v].col(cov.proj.generator_coord(s));
            Matrix b(F, target_col.size(), 1);
            for (std::size_t i = 0; i < target_col.size(); ++i)
                b.at(i, 0) = target_col[i];
            auto sol = solve(cov.pi.comps[v], b);
            require(sol.has_value(), Errc::Internal, "cover lift failed");
            lift_gens.push_back(sol->col(0));
        }
        Morphism e0 = hom_from_gens(cov.proj, cov.proj.rep, lift_gens);
        // restrict to Omega X
        Morphism e_omega{omega_x.rep, omega_x.rep, {}};
        for (int v = 0; v < m->alg->vertex_count(); ++v) {
            Matrix rhs = e0.comps[v].mul(omega_x.incl.comps[v]);
            auto sol = solve(omega_x.incl.comps[v], rhs);
            require(sol.has_value(), Errc::Internal, "kernel restriction failed");
            e_omega.comps.push_back(std::move(*sol));
        }
        // matrix of the action on Ext coordinates
        Matrix act(F, ext_dim1, ext_dim1);
        for (std::size_t j = 0; j < ext_dim1; ++j) {
            Vec lift_coords = ext.section.col(j);
            Morphism c = zero_morphism(omega_x.rep, m);
            for (std::size_t k = 0; k < cocycles.size(); ++k)
                c = morph_add(c, morph_scale(cocycles[k], lift_coords[k]));
            Morphism moved = compose(e_omega, c);
            Vec out = ext.proj.mul_vec(coords_in_basis(moved));
            for (std::size_t i = 0; i < ext_dim1; ++i)
                act.at(i, j) = out[i];
        }
        actions.push_back(std::move(act));
    }
    // socle of the right action: classes killed by the whole radical
    Vec class_coords;
    if (actions.empty()) {
        class_coords.assign(ext_dim1, 0);
        class_coords[0] = 1;
    } else {
        Matrix stacked = actions[0];
        for (std::size_t i = 1; i < actions.size(); ++i)
            stacked = vstack(stacked, actions[i]);
        Matrix ann = kernel_basis(stacked);
        require(ann.rows() >= 1, Errc::Internal, "socle of Ext^1 vanished");
        class_coords = ann.row(0);
    }

    // materialize the extension as a pushout of the presentation along c
    Vec hom_coords = ext.section.mul_vec(class_coords);
    Morphism cocycle = zero_morphism(omega_x.rep, m);
    for (std::size_t k = 0; k < cocycles.size(); ++k)
        cocycle = morph_add(cocycle, morph_scale(cocycles[k], hom_coords[k]));

    DirectSum mp = direct_sum({m, cov.proj.rep});
    std::vector<Matrix> glue_cols;
    for (int v = 0; v < m->alg->vertex_count(); ++v) {
        // columns (c(w), -incl(w)) over a basis of Omega X at v
        const Matrix& cv = cocycle.comps[v];
        const Matrix& iv = omega_x.incl.comps[v];
        glue_cols.push_back(vstack(cv, iv.scale(F.neg(1))));
    }
    QuotObject mid = quotient_by_columns(mp.sum, glue_cols);

    AlmostSplitSequence seq;
    seq.left = m;
    seq.right = x;
    seq.middle = mid.rep;
    seq.left_map = compose(mp.injections[0], mid.proj);
    // the epi mid -> X induced by (0 | pi): compose a section of the
    // quotient with (0 | pi); sections differ by the glued subspace, which
    // (0 | pi) kills, hence this is well defined
    Morphism zero_pi = cotuple_morphism(mp, {zero_morphism(m, x), cov.pi});
    Morphism right{mid.rep, x, {}};
    for (int v = 0; v < m->alg->vertex_count(); ++v) {
        QuotientMap qm = quotient_map(glue_cols[v].transpose());
        right.comps.push_back(zero_pi.comps[v].mul(qm.section));
    }
    seq.right_map = std::move(right);

    require(is_mono(seq.left_map), Errc::Internal, "almost split left map is not mono");
    require(is_epi(seq.right_map), Errc::Internal, "almost split right map is not epi");
    require(compose(seq.left_map, seq.right_map).is_zero(), Errc::Internal,
            "almost split composite is nonzero");
    require(seq.middle->total_dim() == m->total_dim() + x->total_dim(), Errc::Internal,
            "almost split middle has wrong dimension");
    require(intertwines(seq.left_map) && intertwines(seq.right_map), Errc::Internal,
            "almost split maps do not intertwine");

    // non-split: no section of the right map
    {
        std::vector<Morphism> sections = hom_basis(x, mid.rep);
        std::vector<Morphism> composed;
        composed.reserve(sections.size());
        for (const Morphism& s : sections)
            composed.push_back(compose(s, seq.right_map));
        const std::size_t flat_len2 = morph_flatten(identity_morphism(x)).size();
        Matrix rows = morphism_rows(composed, flat_len2, F);
        Vec idv = morph_flatten(identity_morphism(x));
        Matrix target(F, flat_len2, 1);
        for (std::size_t i = 0; i < flat_len2; ++i)
            target.at(i, 0) = idv[i];
        bool split = rows.rows() > 0 && solve(rows.transpose(), target).has_value();
        require(!split, Errc::Internal, "almost split sequence split");
    }
    // end terms: left is tau(right) up to isomorphism
    require(is_isomorphic(m, tau(x), rng), Errc::Internal,
            "almost split left term is not tau of the right term");

    seq.middle_parts = decompose(seq.middle, rng).parts;
    return seq;
}

bool is_node(const RepPtr& s, Rng& rng)
{
    require(s->total_dim() == 1, Errc::InvalidArgument, "node test expects a simple module");
    if (is_projective(s) || is_injective(s))
        return false;
    AlmostSplitSequence seq = almost_split_starting_at(s, rng);
    for (const RepPtr& part : seq.middle_parts)
        if (!is_projective(part))
            return false;
    return true;
}

HypothesisReport hypothesis_report(const AlgebraPtr& alg, Rng& rng)
{
    HypothesisReport out;
    for (int v = 0; v < alg->vertex_count(); ++v)
        if (is_node(standard_module(alg, StandardKind::Simple, v), rng))
            out.node_vertices.push_back(v);
    for (const Algebra::Block& b : alg->blocks())
        if (b.semisimple)
            out.semisimple_blocks.push_back(b.vertices);
    out.self_injective = true;
    for (int v = 0; v < alg->vertex_count(); ++v) {
        RepPtr p = standard_module(alg, StandardKind::Projective, v);
        if (is_injective(p))
            out.proj_inj.push_back(p);
        else
            out.self_injective = false;
    }
    return out;
}

} // namespace approxdim
