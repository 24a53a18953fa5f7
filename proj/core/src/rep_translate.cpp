#include "approxdim/rep.hpp"

namespace approxdim {

RepPtr dual(const RepPtr& m)
{
    AlgebraPtr op = m->alg->opposite();
    // op arrow k is the reversal of arrow k; duality transposes its matrix
    std::vector<Matrix> maps;
    for (const Matrix& a : m->arrow_maps)
        maps.push_back(a.transpose());
    return make_rep(op, m->dims, std::move(maps));
}

Morphism dual(const Morphism& f)
{
    Morphism g{dual(f.target), dual(f.source), {}};
    for (const Matrix& c : f.comps)
        g.comps.push_back(c.transpose());
    return g;
}

Envelope injective_envelope(const RepPtr& m)
{
    Cover c = projective_cover(dual(m));
    Envelope out;
    out.env = dual(c.proj.rep);
    Morphism iota{m, out.env, {}};
    for (const Matrix& comp : c.pi.comps)
        iota.comps.push_back(comp.transpose());
    out.iota = std::move(iota);
    return out;
}

bool is_injective(const RepPtr& m)
{
    return injective_envelope(m).env->total_dim() == m->total_dim();
}

RepPtr cosyzygy(const RepPtr& m, int k)
{
    require(k >= 1, Errc::InvalidArgument, "cosyzygy index must be >= 1");
    return dual(syzygy(dual(m), k));
}

RepPtr transpose(const RepPtr& m)
{
    Presentation pres = minimal_presentation(m);
    AlgebraPtr op = m->alg->opposite();

    // Hom(-, A) turns the presentation P1 -> P0 into a map between the
    // corresponding opposite projectives with reversed components
    ProjSum op_p0 = projective_sum(op, pres.cover.proj.vertices);
    ProjSum op_p1 = projective_sum(op, pres.ker_cover.proj.vertices);
    auto x = presentation_elements(pres);

    std::vector<Vec> gens;
    for (int c = 0; c < op_p0.summands(); ++c) {
        const int vc = op_p0.vertices[c];
        Vec img(op_p1.rep->dims[vc], 0);
        for (int b = 0; b < op_p1.summands(); ++b) {
            const int vb = op_p1.vertices[b];
            Vec rev = m->alg->transfer_to_opposite(x[c][b]);
            auto paths = op->basis_from_to(vb, vc);
            const int off = op_p1.block_offset(b, vc);
            for (std::size_t i = 0; i < paths.size(); ++i)
                img[off + i] = rev[paths[i]];
        }
        gens.push_back(std::move(img));
    }
    Morphism delta = hom_from_gens(op_p0, op_p1.rep, gens);
    return sub_quotient(delta).coker.rep;
}

RepPtr tau(const RepPtr& m)
{
    return dual(transpose(m));
}

RepPtr tau_inverse(const RepPtr& m)
{
    return transpose(dual(m));
}

} // namespace approxdim
