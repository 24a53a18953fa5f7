#include "approxdim/rep.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace approxdim {

int Representation::total_dim() const
{
    return std::accumulate(dims.begin(), dims.end(), 0);
}

bool Representation::operator==(const Representation& o) const
{
    return alg == o.alg && dims == o.dims && arrow_maps == o.arrow_maps;
}

RepPtr make_rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> maps)
{
    require(static_cast<int>(dims.size()) == alg->vertex_count(), Errc::DimensionMismatch,
            "dims length does not match the vertex count");
    require(maps.size() == alg->quiver().arrows.size(), Errc::DimensionMismatch,
            "one matrix per arrow required");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        require(maps[a].rows() == static_cast<std::size_t>(dims[ar.target])
                    && maps[a].cols() == static_cast<std::size_t>(dims[ar.source]),
                Errc::DimensionMismatch, "arrow map '" + ar.name + "' has the wrong shape");
    }
    auto r = std::make_shared<Representation>();
    r->alg = std::move(alg);
    r->dims = std::move(dims);
    r->arrow_maps = std::move(maps);
    return r;
}

RepPtr zero_module(const AlgebraPtr& alg)
{
    std::vector<int> dims(alg->vertex_count(), 0);
    std::vector<Matrix> maps(alg->quiver().arrows.size(), Matrix(alg->field(), 0, 0));
    return make_rep(alg, std::move(dims), std::move(maps));
}

Matrix path_action(const Representation& m, const Path& p)
{
    Matrix act = Matrix::identity(m.alg->field(), m.dims[p.source]);
    for (int a : p.arrows)
        act = m.arrow_maps[a].mul(act);
    return act;
}

Matrix element_action(const Representation& m, const Vec& elem, int v_from, int v_to)
{
    Matrix out(m.alg->field(), m.dims[v_to], m.dims[v_from]);
    for (int i : m.alg->basis_from(v_from)) {
        if (m.alg->basis_target(i) != v_to || elem[i] == 0)
            continue;
        out = out.add(path_action(m, m.alg->basis()[i]).scale(elem[i]));
    }
    return out;
}

std::string Violation::describe(const Algebra& a) const
{
    std::string s = "relation #" + std::to_string(relation_index + 1) + " (";
    const PathExpr& r = a.relations()[relation_index];
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i)
            s += " + ";
        s += std::to_string(r[i].coeff) + "*" + path_to_string(a.quiver(), r[i].path);
    }
    s += ") does not annihilate the module";
    return s;
}

ValidationReport validate_module(const Representation& m)
{
    ValidationReport rep;
    const auto& rels = m.alg->relations();
    for (std::size_t r = 0; r < rels.size(); ++r) {
        const PathExpr& x = rels[r];
        if (x.empty())
            continue;
        int s = x[0].path.source;
        int t = path_target(m.alg->quiver(), x[0].path);
        Matrix acc(m.alg->field(), m.dims[t], m.dims[s]);
        for (const PathTerm& term : x)
            acc = acc.add(path_action(m, term.path).scale(term.coeff));
        if (!acc.is_zero()) {
            rep.ok = false;
            rep.violations.push_back({static_cast<int>(r), acc});
        }
    }
    return rep;
}

RepPtr standard_module(const AlgebraPtr& alg, StandardKind kind, int vertex)
{
    require(vertex >= 0 && vertex < alg->vertex_count(), Errc::InvalidArgument,
            "vertex out of range");
    switch (kind) {
    case StandardKind::Simple: {
        std::vector<int> dims(alg->vertex_count(), 0);
        dims[vertex] = 1;
        std::vector<Matrix> maps;
        for (const Arrow& a : alg->quiver().arrows)
            maps.emplace_back(alg->field(), dims[a.target], dims[a.source]);
        return make_rep(alg, std::move(dims), std::move(maps));
    }
    case StandardKind::Projective:
        return projective_sum(alg, {vertex}).rep;
    case StandardKind::Injective:
        return dual(standard_module(alg->opposite(), StandardKind::Projective, vertex));
    }
    fail(Errc::Internal, "unreachable standard kind");
}

RepPtr regular_module(const AlgebraPtr& alg)
{
    std::vector<int> all(alg->vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return projective_sum(alg, all).rep;
}

RepPtr cogenerator_module(const AlgebraPtr& alg)
{
    std::vector<RepPtr> parts;
    for (int v = 0; v < alg->vertex_count(); ++v)
        parts.push_back(standard_module(alg, StandardKind::Injective, v));
    return direct_sum(parts).sum;
}

bool Morphism::is_zero() const
{
    return std::all_of(comps.begin(), comps.end(),
                       [](const Matrix& c) { return c.is_zero(); });
}

Morphism zero_morphism(const RepPtr& m, const RepPtr& n)
{
    require(m->alg == n->alg, Errc::AlgebraMismatch, "morphism across different algebras");
    Morphism f{m, n, {}};
    for (int v = 0; v < m->alg->vertex_count(); ++v)
        f.comps.emplace_back(m->alg->field(), n->dims[v], m->dims[v]);
    return f;
}

Morphism identity_morphism(const RepPtr& m)
{
    Morphism f{m, m, {}};
    for (int v = 0; v < m->alg->vertex_count(); ++v)
        f.comps.push_back(Matrix::identity(m->alg->field(), m->dims[v]));
    return f;
}

Morphism compose(const Morphism& f, const Morphism& g)
{
    require(f.target->dims == g.source->dims, Errc::DimensionMismatch,
            "composition through mismatched middle object");
    Morphism h{f.source, g.target, {}};
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        h.comps.push_back(g.comps[v].mul(f.comps[v]));
    return h;
}

Morphism morph_add(const Morphism& f, const Morphism& g)
{
    Morphism h{f.source, f.target, {}};
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        h.comps.push_back(f.comps[v].add(g.comps[v]));
    return h;
}

Morphism morph_scale(const Morphism& f, Fel c)
{
    Morphism h{f.source, f.target, {}};
    for (const Matrix& m : f.comps)
        h.comps.push_back(m.scale(c));
    return h;
}

bool is_mono(const Morphism& f)
{
    for (const Matrix& c : f.comps)
        if (rank(c) != c.cols())
            return false;
    return true;
}

bool is_epi(const Morphism& f)
{
    for (const Matrix& c : f.comps)
        if (rank(c) != c.rows())
            return false;
    return true;
}

bool is_iso(const Morphism& f)
{
    return f.source->dims == f.target->dims && is_mono(f);
}

bool intertwines(const Morphism& f)
{
    const auto& arrows = f.source->alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        Matrix lhs = f.comps[arrows[a].target].mul(f.source->arrow_maps[a]);
        Matrix rhs = f.target->arrow_maps[a].mul(f.comps[arrows[a].source]);
        if (lhs != rhs)
            return false;
    }
    return true;
}

DirectSum direct_sum(const std::vector<RepPtr>& parts)
{
    require(!parts.empty(), Errc::InvalidArgument, "direct sum of an empty list");
    AlgebraPtr alg = parts[0]->alg;
    const Fp& F = alg->field();
    for (const RepPtr& p : parts)
        require(p->alg == alg, Errc::AlgebraMismatch, "direct sum across different algebras");

    const int n = alg->vertex_count();
    std::vector<int> dims(n, 0);
    std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(n, 0));
    for (std::size_t s = 0; s < parts.size(); ++s)
        for (int v = 0; v < n; ++v) {
            offsets[s][v] = dims[v];
            dims[v] += parts[s]->dims[v];
        }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg->quiver().arrows.size(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        Matrix m(F, dims[ar.target], dims[ar.source]);
        for (std::size_t s = 0; s < parts.size(); ++s) {
            const Matrix& blk = parts[s]->arrow_maps[a];
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    m.at(offsets[s][ar.target] + r, offsets[s][ar.source] + c) = blk.at(r, c);
        }
        maps.push_back(std::move(m));
    }
    DirectSum out;
    out.sum = make_rep(alg, dims, std::move(maps));
    for (std::size_t s = 0; s < parts.size(); ++s) {
        Morphism inj{parts[s], out.sum, {}};
        Morphism prj{out.sum, parts[s], {}};
        for (int v = 0; v < n; ++v) {
            Matrix iv(F, static_cast<std::size_t>(dims[v]), parts[s]->dims[v]);
            Matrix pv(F, parts[s]->dims[v], static_cast<std::size_t>(dims[v]));
            for (int k = 0; k < parts[s]->dims[v]; ++k) {
                iv.at(offsets[s][v] + k, k) = 1;
                pv.at(k, offsets[s][v] + k) = 1;
            }
            inj.comps.push_back(std::move(iv));
            prj.comps.push_back(std::move(pv));
        }
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(prj));
    }
    return out;
}

Morphism tuple_morphism(const DirectSum& ds, const std::vector<Morphism>& from_parts)
{
    require(!from_parts.empty(), Errc::InvalidArgument, "empty tuple");
    Morphism out = compose(from_parts[0], ds.injections[0]);
    for (std::size_t s = 1; s < from_parts.size(); ++s)
        out = morph_add(out, compose(from_parts[s], ds.injections[s]));
    return out;
}

Morphism cotuple_morphism(const DirectSum& ds, const std::vector<Morphism>& to_parts)
{
    require(!to_parts.empty(), Errc::InvalidArgument, "empty cotuple");
    Morphism out = compose(ds.projections[0], to_parts[0]);
    for (std::size_t s = 1; s < to_parts.size(); ++s)
        out = morph_add(out, compose(ds.projections[s], to_parts[s]));
    return out;
}

Vec morph_flatten(const Morphism& f)
{
    Vec flat;
    for (const Matrix& c : f.comps)
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t k = 0; k < c.cols(); ++k)
                flat.push_back(c.at(r, k));
    return flat;
}

Morphism morph_unflatten(const RepPtr& m, const RepPtr& n, const Vec& flat)
{
    Morphism f = zero_morphism(m, n);
    std::size_t at = 0;
    for (Matrix& c : f.comps)
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t k = 0; k < c.cols(); ++k)
                c.at(r, k) = flat[at++];
    require(at == flat.size(), Errc::DimensionMismatch, "flat morphism of wrong length");
    return f;
}

std::vector<Morphism> hom_basis(const RepPtr& m, const RepPtr& n)
{
    require(m->alg == n->alg, Errc::AlgebraMismatch, "hom across different algebras");
    const Fp& F = m->alg->field();
    const int nv = m->alg->vertex_count();

    std::vector<std::size_t> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(n->dims[v]) * m->dims[v];
    const std::size_t unknowns = off[nv];

    std::size_t eqs = 0;
    const auto& arrows = m->alg->quiver().arrows;
    for (const Arrow& a : arrows)
        eqs += static_cast<std::size_t>(n->dims[a.target]) * m->dims[a.source];

    // unknown f_v[r,c] sits at off[v] + r*dims_m[v] + c
    Matrix sys(F, eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        const Matrix& ma = m->arrow_maps[a];
        const Matrix& na = n->arrow_maps[a];
        for (int r = 0; r < n->dims[j]; ++r) {
            for (int c = 0; c < m->dims[i]; ++c) {
                for (int k = 0; k < m->dims[j]; ++k) {
                    std::size_t u = off[j] + static_cast<std::size_t>(r) * m->dims[j] + k;
                    sys.at(row, u) = F.add(sys.at(row, u), ma.at(k, c));
                }
                for (int k = 0; k < n->dims[i]; ++k) {
                    std::size_t u = off[i] + static_cast<std::size_t>(k) * m->dims[i] + c;
                    sys.at(row, u) = F.sub(sys.at(row, u), na.at(r, k));
                }
                ++row;
            }
        }
    }
    Matrix ker = kernel_basis(sys);
    std::vector<Morphism> basis;
    for (std::size_t r = 0; r < ker.rows(); ++r)
        basis.push_back(morph_unflatten(m, n, ker.row(r)));
    return basis;
}

int hom_dim(const RepPtr& m, const RepPtr& n)
{
    return static_cast<int>(hom_basis(m, n).size());
}

SubObject subrep_from_columns(const RepPtr& m, const std::vector<Matrix>& columns)
{
    const int nv = m->alg->vertex_count();
    std::vector<Matrix> incl(nv);
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        incl[v] = column_space_basis(columns[v]);
        dims[v] = static_cast<int>(incl[v].cols());
    }
    std::vector<Matrix> maps;
    const auto& arrows = m->alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        auto sol = solve(incl[j], m->arrow_maps[a].mul(incl[i]));
        require(sol.has_value(), Errc::Internal, "column spaces are not arrow-invariant");
        maps.push_back(std::move(*sol));
    }
    SubObject out;
    out.rep = make_rep(m->alg, std::move(dims), std::move(maps));
    out.incl = Morphism{out.rep, m, std::move(incl)};
    return out;
}

QuotObject quotient_by_columns(const RepPtr& m, const std::vector<Matrix>& columns)
{
    const int nv = m->alg->vertex_count();
    std::vector<Matrix> proj(nv), section(nv);
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        QuotientMap qm = quotient_map(columns[v].transpose());
        proj[v] = std::move(qm.proj);
        section[v] = std::move(qm.section);
        dims[v] = static_cast<int>(proj[v].rows());
    }
    std::vector<Matrix> maps;
    const auto& arrows = m->alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        maps.push_back(proj[j].mul(m->arrow_maps[a]).mul(section[i]));
    }
    QuotObject out;
    out.rep = make_rep(m->alg, std::move(dims), std::move(maps));
    out.proj = Morphism{m, out.rep, std::move(proj)};
    return out;
}

namespace {
std::atomic<std::size_t> g_sub_quotient_calls{0};
}

std::size_t sub_quotient_call_count()
{
    return g_sub_quotient_calls.load();
}

SubQuotient sub_quotient(const Morphism& f)
{
    g_sub_quotient_calls.fetch_add(1, std::memory_order_relaxed);
    const RepPtr& m = f.source;
    const RepPtr& n = f.target;
    const int nv = m->alg->vertex_count();

    std::vector<Matrix> ker_cols(nv), im_cols(nv);
    for (int v = 0; v < nv; ++v) {
        ker_cols[v] = kernel_basis(f.comps[v]).transpose();
        im_cols[v] = column_space_basis(f.comps[v]);
        require(ker_cols[v].cols() + im_cols[v].cols() == static_cast<std::size_t>(m->dims[v]),
                Errc::Internal, "rank-nullity violated in sub_quotient");
    }
    SubQuotient out;
    out.ker = subrep_from_columns(m, ker_cols);
    out.im = subrep_from_columns(n, im_cols);
    Morphism epi{m, out.im.rep, {}};
    for (int v = 0; v < nv; ++v) {
        auto sol = solve(out.im.incl.comps[v], f.comps[v]);
        require(sol.has_value(), Errc::Internal, "image factorization failed");
        epi.comps.push_back(std::move(*sol));
    }
    out.im_epi = std::move(epi);
    out.coker = quotient_by_columns(n, im_cols);
    return out;
}

RadSocTop radical_socle_top(const RepPtr& m)
{
    const Fp& F = m->alg->field();
    const int nv = m->alg->vertex_count();
    const auto& arrows = m->alg->quiver().arrows;

    std::vector<Matrix> rad_cols(nv), soc_cols(nv);
    for (int v = 0; v < nv; ++v) {
        Matrix incoming(F, m->dims[v], 0);
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].target == v)
                incoming = hstack(incoming, m->arrow_maps[a]);
        rad_cols[v] = std::move(incoming);

        Matrix outgoing(F, 0, m->dims[v]);
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].source == v)
                outgoing = vstack(outgoing, m->arrow_maps[a]);
        soc_cols[v] = kernel_basis(outgoing).transpose();
    }
    RadSocTop out;
    out.rad = subrep_from_columns(m, rad_cols);
    out.soc = subrep_from_columns(m, soc_cols);
    out.top = quotient_by_columns(m, rad_cols);
    return out;
}

int ProjSum::block_offset(int s, int w) const
{
    int off = 0;
    for (int t = 0; t < s; ++t)
        off += static_cast<int>(alg->basis_from_to(vertices[t], w).size());
    return off;
}

int ProjSum::generator_coord(int s) const
{
    const int v = vertices[s];
    auto paths = alg->basis_from_to(v, v);
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i] == alg->idempotent_index(v))
            return block_offset(s, v) + static_cast<int>(i);
    fail(Errc::Internal, "trivial path missing from projective block");
}

ProjSum projective_sum(const AlgebraPtr& alg, std::vector<int> vertices)
{
    const Fp& F = alg->field();
    const int nv = alg->vertex_count();
    ProjSum out;
    out.alg = alg;
    out.vertices = std::move(vertices);

    // coordinates at vertex w: per summand s in order, basis paths v_s -> w
    std::vector<int> dims(nv, 0);
    std::vector<std::vector<std::pair<int, int>>> coords(nv); // (summand, basis idx)
    for (std::size_t s = 0; s < out.vertices.size(); ++s) {
        require(out.vertices[s] >= 0 && out.vertices[s] < nv, Errc::InvalidArgument,
                "projective summand vertex out of range");
        for (int w = 0; w < nv; ++w)
            for (int b : alg->basis_from_to(out.vertices[s], w)) {
                coords[w].push_back({static_cast<int>(s), b});
                ++dims[w];
            }
    }
    for (int w = 0; w < nv; ++w)
        std::stable_sort(coords[w].begin(), coords[w].end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<Matrix> maps;
    const auto& arrows = alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        Matrix mat(F, dims[j], dims[i]);
        Path arrow_path;
        arrow_path.source = i;
        arrow_path.arrows = {static_cast<int>(a)};
        const int a_idx = alg->basis_index(arrow_path);
        require(a_idx >= 0, Errc::Internal, "arrow missing from algebra basis");
        // the arrow acts by appending: basis path q |-> normal form of q*a
        for (std::size_t col = 0; col < coords[i].size(); ++col) {
            auto [s, q_idx] = coords[i][col];
            const Vec& prod = alg->table(q_idx, a_idx);
            for (std::size_t row = 0; row < coords[j].size(); ++row) {
                auto [s2, r_idx] = coords[j][row];
                if (s2 == s && prod[r_idx] != 0)
                    mat.at(row, col) = prod[r_idx];
            }
        }
        maps.push_back(std::move(mat));
    }
    out.rep = make_rep(alg, std::move(dims), std::move(maps));
    return out;
}

Morphism hom_from_gens(const ProjSum& p, const RepPtr& n, const std::vector<Vec>& gen_images)
{
    require(p.alg == n->alg, Errc::AlgebraMismatch, "generator images over a different algebra");
    require(gen_images.size() == p.vertices.size(), Errc::DimensionMismatch,
            "one generator image per summand required");
    const Fp& F = p.alg->field();
    const int nv = p.alg->vertex_count();
    Morphism f{p.rep, n, {}};
    for (int w = 0; w < nv; ++w) {
        Matrix comp(F, n->dims[w], p.rep->dims[w]);
        int col = 0;
        for (std::size_t s = 0; s < p.vertices.size(); ++s) {
            const int v = p.vertices[s];
            require(gen_images[s].size() == static_cast<std::size_t>(n->dims[v]),
                    Errc::DimensionMismatch, "generator image of wrong length");
            for (int b : p.alg->basis_from_to(v, w)) {
                Vec img = path_action(*n, p.alg->basis()[b]).mul_vec(gen_images[s]);
                for (int r = 0; r < n->dims[w]; ++r)
                    comp.at(r, col) = img[r];
                ++col;
            }
        }
        f.comps.push_back(std::move(comp));
    }
    return f;
}

std::vector<Vec> gens_of_hom(const ProjSum& p, const Morphism& f)
{
    std::vector<Vec> out;
    for (int s = 0; s < p.summands(); ++s)
        out.push_back(f.comps[p.vertices[s]].col(p.generator_coord(s)));
    return out;
}

Cover projective_cover(const RepPtr& m)
{
    RadSocTop rst = radical_socle_top(m);
    const int nv = m->alg->vertex_count();

    // a section of the top projection picks one generator per top basis
    // vector; images generate m by Nakayama
    std::vector<int> vertices;
    std::vector<Vec> gens;
    for (int v = 0; v < nv; ++v) {
        QuotientMap qm = quotient_map(rst.rad.incl.comps[v].transpose());
        for (int k = 0; k < rst.top.rep->dims[v]; ++k) {
            vertices.push_back(v);
            gens.push_back(qm.section.col(k));
        }
    }
    Cover out;
    out.proj = projective_sum(m->alg, std::move(vertices));
    out.pi = hom_from_gens(out.proj, m, gens);
    for (int v = 0; v < nv; ++v)
        require(rank(out.pi.comps[v]) == static_cast<std::size_t>(m->dims[v]), Errc::LiftFailed,
                "projective cover is not surjective");
    return out;
}

bool is_projective(const RepPtr& m)
{
    return projective_cover(m).proj.rep->total_dim() == m->total_dim();
}

RepPtr syzygy(const RepPtr& m, int k)
{
    require(k >= 1, Errc::InvalidArgument, "syzygy index must be >= 1");
    RepPtr cur = m;
    for (int i = 0; i < k; ++i)
        cur = sub_quotient(projective_cover(cur).pi).ker.rep;
    return cur;
}

Presentation minimal_presentation(const RepPtr& m)
{
    Presentation out;
    out.cover = projective_cover(m);
    out.ker = sub_quotient(out.cover.pi).ker;
    out.ker_cover = projective_cover(out.ker.rep);
    out.d = compose(out.ker_cover.pi, out.ker.incl);
    return out;
}

std::vector<std::vector<Vec>> proj_hom_elements(const ProjSum& codomain,
                                                const ProjSum& domain, const Morphism& d)
{
    const AlgebraPtr& alg = codomain.alg;
    std::vector<Vec> gen_images = gens_of_hom(domain, d);

    std::vector<std::vector<Vec>> x(
        codomain.summands(), std::vector<Vec>(domain.summands(), Vec(alg->dim(), 0)));
    for (int b = 0; b < domain.summands(); ++b) {
        const int vb = domain.vertices[b];
        const Vec& img = gen_images[b]; // element of the codomain at vertex vb
        for (int c = 0; c < codomain.summands(); ++c) {
            const int vc = codomain.vertices[c];
            auto paths = alg->basis_from_to(vc, vb);
            const int off = codomain.block_offset(c, vb);
            Vec elem(alg->dim(), 0);
            for (std::size_t i = 0; i < paths.size(); ++i)
                elem[paths[i]] = img[off + i];
            x[c][b] = std::move(elem);
        }
    }
    return x;
}

std::vector<std::vector<Vec>> presentation_elements(const Presentation& pres)
{
    return proj_hom_elements(pres.cover.proj, pres.ker_cover.proj, pres.d);
}

ProjResolution resolve_projective(const RepPtr& m, int length)
{
    ProjResolution res;
    res.m = m;
    Cover c0 = projective_cover(m);
    SubObject ker = sub_quotient(c0.pi).ker;
    res.terms.push_back(std::move(c0.proj));
    for (int i = 1; i <= length; ++i) {
        Cover c = projective_cover(ker.rep);
        res.maps.push_back(compose(c.pi, ker.incl));
        ker = sub_quotient(c.pi).ker;
        res.terms.push_back(std::move(c.proj));
    }
    return res;
}

} // namespace approxdim
