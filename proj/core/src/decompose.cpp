#include "approxdim/decompose.hpp"

#include "approxdim/gfpoly.hpp"

namespace approxdim {

namespace {

// coordinates of a morphism with respect to a flattened hom basis
Matrix flat_basis_rows(const std::vector<Morphism>& basis)
{
    require(!basis.empty(), Errc::Internal, "empty basis");
    Vec first = morph_flatten(basis[0]);
    Matrix rows(basis[0].source->alg->field(), basis.size(), first.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vec row = morph_flatten(basis[i]);
        for (std::size_t j = 0; j < row.size(); ++j)
            rows.at(i, j) = row[j];
    }
    return rows;
}

Vec coords_of(const Matrix& basis_rows, const Morphism& f)
{
    Vec flat = morph_flatten(f);
    Matrix b(basis_rows.field(), flat.size(), 1);
    for (std::size_t i = 0; i < flat.size(); ++i)
        b.at(i, 0) = flat[i];
    auto sol = solve(basis_rows.transpose(), b);
    require(sol.has_value(), Errc::Internal, "morphism outside the hom space");
    return sol->col(0);
}

// total-space block-diagonal matrix of an endomorphism
Matrix total_matrix(const Morphism& f)
{
    Matrix t = f.comps[0];
    for (std::size_t v = 1; v < f.comps.size(); ++v)
        t = block_diag(t, f.comps[v]);
    return t;
}

gfpoly::Poly minimal_polynomial(const Matrix& t)
{
    const Fp& F = t.field();
    const std::size_t d = t.rows();
    if (d == 0)
        return {0, 1}; // the zero operator on the zero space
    std::vector<Matrix> powers{Matrix::identity(F, d)};
    for (;;) {
        // does the newest power depend on the previous ones?
        const Matrix& last = powers.back();
        Matrix rows(F, powers.size() - 1, d * d);
        for (std::size_t i = 0; i + 1 < powers.size(); ++i)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    rows.at(i, r * d + c) = powers[i].at(r, c);
        Matrix target(F, d * d, 1);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                target.at(r * d + c, 0) = last.at(r, c);
        if (powers.size() > 1) {
            auto sol = solve(rows.transpose(), target);
            if (sol.has_value()) {
                gfpoly::Poly mu(powers.size(), 0);
                for (std::size_t i = 0; i + 1 < powers.size(); ++i)
                    mu[i] = F.neg(sol->at(i, 0));
                mu[powers.size() - 1] = 1;
                return mu;
            }
        }
        powers.push_back(t.mul(powers.back()));
        require(powers.size() <= d + 2, Errc::Internal, "minimal polynomial overran");
    }
}

Morphism evaluate_poly(const gfpoly::Poly& f, const Morphism& phi)
{
    const RepPtr& m = phi.source;
    Morphism acc = zero_morphism(m, m);
    // Horner in the endomorphism ring
    for (std::size_t k = f.size(); k-- > 0;) {
        acc = compose(acc, phi);
        Morphism c = morph_scale(identity_morphism(m), f[k]);
        acc = morph_add(acc, c);
    }
    return acc;
}

Morphism morph_power(const Morphism& f, int e)
{
    Morphism acc = identity_morphism(f.source);
    for (int i = 0; i < e; ++i)
        acc = compose(acc, f);
    return acc;
}

} // namespace

int EndAlgebra::semisimple_dim() const
{
    return dim() - static_cast<int>(radical.rows());
}

EndAlgebra end_algebra(const RepPtr& m)
{
    EndAlgebra out;
    out.m = m;
    out.basis = hom_basis(m, m);
    const Fp& F = m->alg->field();
    const int d = out.dim();
    require(F.p() > static_cast<std::uint32_t>(d), Errc::FieldTooSmall,
            "field characteristic must exceed dim End(M)");
    if (d == 0) {
        out.radical = Matrix(F, 0, 0);
        return out;
    }

    Matrix rows = flat_basis_rows(out.basis);
    out.products.assign(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out.products[i][j] =
                coords_of(rows, compose(out.basis[j], out.basis[i]));

    // trace of left multiplication per basis element, then the Gram matrix
    // of the regular trace form; its kernel is the radical when p > dim End
    Vec ltrace(d, 0);
    for (int i = 0; i < d; ++i) {
        Fel tr = 0;
        for (int j = 0; j < d; ++j)
            tr = F.add(tr, out.products[i][j][j]);
        ltrace[i] = tr;
    }
    Matrix gram(F, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Fel g = 0;
            for (int k = 0; k < d; ++k)
                g = F.add(g, F.mul(out.products[i][j][k], ltrace[k]));
            gram.at(i, j) = g;
        }
    out.radical = kernel_basis(gram);
    return out;
}

Decomposition decompose(const RepPtr& m, Rng& rng)
{
    const Fp& F = m->alg->field();
    if (m->is_zero())
        return {{}, identity_morphism(m)};
    const long long total = m->total_dim();
    require(F.p() > static_cast<std::uint64_t>(total) * total, Errc::FieldTooSmall,
            "field characteristic must exceed total_dim(M)^2");

    EndAlgebra end = end_algebra(m);
    if (end.local())
        return {{m}, identity_morphism(m)};

    constexpr int kMaxTries = 64;
    for (int attempt = 0; attempt < kMaxTries; ++attempt) {
        Morphism phi = zero_morphism(m, m);
        for (const Morphism& b : end.basis)
            phi = morph_add(phi, morph_scale(b, rng.field_element(F)));
        gfpoly::Poly mu = minimal_polynomial(total_matrix(phi));
        if (gfpoly::deg(mu) < 1)
            continue;
        gfpoly::Poly f = gfpoly::any_irreducible_factor(F, mu, rng);
        int mult = gfpoly::multiplicity(F, mu, f);
        if (gfpoly::deg(f) * mult == gfpoly::deg(mu))
            continue; // primary minimal polynomial, no split from phi

        Morphism psi = morph_power(evaluate_poly(f, phi), static_cast<int>(total));
        SubQuotient sq = sub_quotient(psi);
        const RepPtr& k = sq.ker.rep;
        const RepPtr& im = sq.im.rep;
        if (k->is_zero() || im->is_zero())
            continue;

        DirectSum ds = direct_sum({k, im});
        Morphism fitting = cotuple_morphism(ds, {sq.ker.incl, sq.im.incl});
        require(is_iso(fitting), Errc::Internal, "Fitting split is not an isomorphism");

        Decomposition dk = decompose(k, rng);
        Decomposition di = decompose(im, rng);
        Decomposition out;
        std::vector<Morphism> to_m;
        DirectSum dsk = direct_sum(dk.parts.empty() ? std::vector<RepPtr>{k} : dk.parts);
        for (std::size_t i = 0; i < dk.parts.size(); ++i) {
            out.parts.push_back(dk.parts[i]);
            to_m.push_back(compose(compose(dsk.injections[i], dk.iso), sq.ker.incl));
        }
        DirectSum dsi = direct_sum(di.parts.empty() ? std::vector<RepPtr>{im} : di.parts);
        for (std::size_t i = 0; i < di.parts.size(); ++i) {
            out.parts.push_back(di.parts[i]);
            to_m.push_back(compose(compose(dsi.injections[i], di.iso), sq.im.incl));
        }
        DirectSum all = direct_sum(out.parts);
        out.iso = cotuple_morphism(all, to_m);
        require(is_iso(out.iso), Errc::Internal, "recombined decomposition is not an iso");
        return out;
    }
    fail(Errc::RandomizationExhausted,
         "no splitting endomorphism found within the retry budget");
}

namespace {

// complete isomorphism test for indecomposables: some basis element of
// Hom(M,N) is invertible iff M and N are isomorphic
bool indec_isomorphic(const RepPtr& m, const RepPtr& n)
{
    if (m->dims != n->dims)
        return false;
    for (const Morphism& f : hom_basis(m, n))
        if (is_iso(f))
            return true;
    return false;
}

} // namespace

bool is_isomorphic(const RepPtr& m, const RepPtr& n, Rng& rng)
{
    require(m->alg == n->alg, Errc::AlgebraMismatch, "isomorphism across different algebras");
    if (m->dims != n->dims)
        return false;
    if (m->total_dim() == 0)
        return true;
    const Fp& F = m->alg->field();

    std::vector<Morphism> basis = hom_basis(m, n);
    for (const Morphism& f : basis)
        if (is_iso(f))
            return true;
    for (int trial = 0; trial < 12; ++trial) {
        Morphism f = zero_morphism(m, n);
        for (const Morphism& b : basis)
            f = morph_add(f, morph_scale(b, rng.field_element(F)));
        if (is_iso(f))
            return true;
    }

    // match indecomposable parts
    Decomposition dm = decompose(m, rng);
    Decomposition dn = decompose(n, rng);
    if (dm.parts.size() != dn.parts.size())
        return false;
    std::vector<bool> used(dn.parts.size(), false);
    for (const RepPtr& part : dm.parts) {
        bool matched = false;
        for (std::size_t j = 0; j < dn.parts.size(); ++j) {
            if (used[j])
                continue;
            if (indec_isomorphic(part, dn.parts[j])) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched)
            return false;
    }
    return true;
}

std::vector<IsoClass> decompose_classes(const RepPtr& m, Rng& rng)
{
    Decomposition d = decompose(m, rng);
    std::vector<IsoClass> classes;
    for (const RepPtr& part : d.parts) {
        bool found = false;
        for (IsoClass& c : classes)
            if (indec_isomorphic(part, c.representative)) {
                ++c.multiplicity;
                found = true;
                break;
            }
        if (!found)
            classes.push_back({part, 1});
    }
    return classes;
}

std::vector<RepPtr> basic_summands(const RepPtr& m, Rng& rng)
{
    std::vector<RepPtr> out;
    for (const IsoClass& c : decompose_classes(m, rng))
        out.push_back(c.representative);
    return out;
}

} // namespace approxdim
