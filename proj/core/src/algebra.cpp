#include "approxdim/algebra.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace approxdim {

void Quiver::validate() const
{
    require(vertex_count >= 1, Errc::InvalidArgument, "quiver needs at least one vertex");
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& a = arrows[i];
        require(!a.name.empty(), Errc::InvalidArgument, "arrow with empty name");
        require(a.source >= 0 && a.source < vertex_count && a.target >= 0
                    && a.target < vertex_count,
                Errc::InvalidArgument, "arrow '" + a.name + "' has endpoints out of range");
        require(seen.emplace(a.name, static_cast<int>(i)).second, Errc::InvalidArgument,
                "duplicate arrow name '" + a.name + "'");
    }
}

int Quiver::arrow_index(const std::string& name) const
{
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name)
            return static_cast<int>(i);
    return -1;
}

Quiver Quiver::reversed() const
{
    Quiver r;
    r.vertex_count = vertex_count;
    r.arrows = arrows;
    for (Arrow& a : r.arrows)
        std::swap(a.source, a.target);
    return r;
}

int path_target(const Quiver& q, const Path& p)
{
    return p.arrows.empty() ? p.source : q.arrows[p.arrows.back()].target;
}

bool path_composable(const Quiver& q, const Path& p)
{
    int at = p.source;
    for (int a : p.arrows) {
        if (a < 0 || a >= static_cast<int>(q.arrows.size()))
            return false;
        if (q.arrows[a].source != at)
            return false;
        at = q.arrows[a].target;
    }
    return true;
}

Path path_concat(const Path& p, const Path& q)
{
    Path r = p;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

Path path_reversed(const Path& p, const Quiver& q)
{
    Path r;
    r.source = path_target(q, p);
    r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    return r;
}

std::string path_to_string(const Quiver& q, const Path& p)
{
    if (p.trivial())
        return "e" + std::to_string(p.source + 1);
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i)
            s += "*";
        s += q.arrows[p.arrows[i]].name;
    }
    return s;
}

bool path_less(const Path& a, const Path& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.arrows != b.arrows)
        return a.arrows < b.arrows;
    return a.source < b.source;
}

namespace {

std::vector<int> path_key(const Path& p)
{
    std::vector<int> k;
    k.reserve(p.arrows.size() + 1);
    k.push_back(p.source);
    k.insert(k.end(), p.arrows.begin(), p.arrows.end());
    return k;
}

constexpr std::size_t kPathBudget = 200000;

// incremental row-reduced span with fully reduced rows, pivot -> row
struct Span {
    Fp F;
    std::map<std::size_t, Vec> rows;

    explicit Span(const Fp& f) : F(f) {}
    Span(const Span&) = default;
    Span& operator=(Span&&) = default;

    // reduce v against the rows in place; returns leading index or npos
    std::size_t reduce(Vec& v) const
    {
        for (const auto& [piv, row] : rows) {
            if (v[piv] == 0)
                continue;
            Fel t = v[piv];
            for (std::size_t k = piv; k < v.size(); ++k)
                v[k] = F.sub(v[k], F.mul(t, row[k]));
        }
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0)
                return k;
        return static_cast<std::size_t>(-1);
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // returns the new pivot column, or npos when v was already in the span
    std::size_t insert(Vec v)
    {
        std::size_t lead = reduce(v);
        if (lead == npos)
            return npos;
        Fel s = F.inv(v[lead]);
        for (std::size_t k = lead; k < v.size(); ++k)
            v[k] = F.mul(v[k], s);
        for (auto& [piv, row] : rows) {
            if (row[lead] == 0)
                continue;
            Fel t = row[lead];
            for (std::size_t k = lead; k < v.size(); ++k)
                row[k] = F.sub(row[k], F.mul(t, v[k]));
        }
        rows.emplace(lead, std::move(v));
        return lead;
    }

    bool contains_pivot(std::size_t c) const { return rows.count(c) != 0; }
};

} // namespace

AlgebraPtr Algebra::build(Quiver q, std::vector<PathExpr> relations, std::uint32_t p, int max_len)
{
    q.validate();
    Fp F(p);
    require(max_len >= 1, Errc::InvalidArgument, "max_len must be positive");

    // normalize and validate the relation list
    std::vector<PathExpr> rels;
    for (const PathExpr& x : relations) {
        std::map<std::vector<int>, Fel> combined;
        int src = -1, tgt = -1;
        for (const PathTerm& t : x) {
            require(path_composable(q, t.path), Errc::RelationIllFormed,
                    "relation term is not a composable path");
            require(t.path.length() >= 2, Errc::RelationIllFormed,
                    "relation term of length < 2");
            int s = t.path.source, g = path_target(q, t.path);
            if (src == -1) {
                src = s;
                tgt = g;
            }
            require(s == src && g == tgt, Errc::RelationIllFormed,
                    "relation mixes sources or targets");
            Fel c = static_cast<Fel>(t.coeff % F.p());
            auto& slot = combined[path_key(t.path)];
            slot = F.add(slot, c);
        }
        PathExpr norm;
        for (const auto& [key, c] : combined) {
            if (c == 0)
                continue;
            Path pt;
            pt.source = key[0];
            pt.arrows.assign(key.begin() + 1, key.end());
            norm.push_back({c, pt});
        }
        if (!norm.empty())
            rels.push_back(std::move(norm));
    }

    // enumerate paths length by length; paths_by_len[l] holds ids
    std::vector<Path> all_paths;
    std::map<std::vector<int>, int> path_id;
    std::vector<std::vector<int>> by_len;
    auto add_path = [&](const Path& pt) {
        int id = static_cast<int>(all_paths.size());
        path_id.emplace(path_key(pt), id);
        all_paths.push_back(pt);
        return id;
    };
    by_len.emplace_back();
    for (int v = 0; v < q.vertex_count; ++v) {
        Path e;
        e.source = v;
        by_len[0].push_back(add_path(e));
    }
    auto extend_to_length = [&](int len) {
        while (static_cast<int>(by_len.size()) <= len) {
            int l = static_cast<int>(by_len.size());
            by_len.emplace_back();
            for (int id : by_len[l - 1]) {
                Path base = all_paths[id];
                int at = path_target(q, base);
                for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                    if (q.arrows[a].source != at)
                        continue;
                    Path ext = base;
                    ext.arrows.push_back(static_cast<int>(a));
                    by_len[l].push_back(add_path(ext));
                    require(all_paths.size() <= kPathBudget, Errc::NotAdmissibleWithinBound,
                            "path count exceeds budget while searching for a Loewy bound");
                }
            }
        }
    };

    // find the least l <= max_len with every length-l path inside the ideal
    // closure computed modulo paths of length > l
    int loewy = -1;
    Span span(F);
    for (int l = 1; l <= max_len; ++l) {
        extend_to_length(l);
        std::size_t ncoords = 0;
        for (int m = 0; m <= l; ++m)
            ncoords += by_len[m].size();

        span = Span(F);
        std::queue<Vec> queue;
        for (const PathExpr& r : rels) {
            Vec v(ncoords, 0);
            for (const PathTerm& t : r) {
                if (t.path.length() > l)
                    continue; // truncated away modulo longer paths
                v[path_id.at(path_key(t.path))] = t.coeff;
            }
            std::size_t piv = span.insert(v);
            if (piv != Span::npos)
                queue.push(span.rows.at(piv));
        }
        // close under multiplication by arrows on both sides; snapshots are
        // fine even though rows mutate later, every insertion is re-queued
        while (!queue.empty()) {
            Vec v = queue.front();
            queue.pop();
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                for (int side = 0; side < 2; ++side) {
                    Vec w(ncoords, 0);
                    bool any = false;
                    for (std::size_t c = 0; c < ncoords; ++c) {
                        if (v[c] == 0)
                            continue;
                        const Path& pt = all_paths[c];
                        if (pt.length() + 1 > l)
                            continue;
                        Path ext;
                        if (side == 0) { // arrow then path
                            if (q.arrows[a].target != pt.source)
                                continue;
                            ext.source = static_cast<int>(q.arrows[a].source);
                            ext.arrows.push_back(static_cast<int>(a));
                            ext.arrows.insert(ext.arrows.end(), pt.arrows.begin(),
                                              pt.arrows.end());
                        } else { // path then arrow
                            if (path_target(q, pt) != q.arrows[a].source)
                                continue;
                            ext = pt;
                            ext.arrows.push_back(static_cast<int>(a));
                        }
                        w[path_id.at(path_key(ext))] = F.add(w[path_id.at(path_key(ext))], v[c]);
                        any = true;
                    }
                    if (!any)
                        continue;
                    std::size_t piv = span.insert(w);
                    if (piv != Span::npos)
                        queue.push(span.rows.at(piv));
                }
            }
        }

        bool annihilated = true;
        for (int id : by_len[l])
            if (!span.contains_pivot(static_cast<std::size_t>(id))) {
                annihilated = false;
                break;
            }
        if (annihilated) {
            loewy = l;
            break;
        }
    }
    require(loewy != -1, Errc::NotAdmissibleWithinBound,
            "no length <= max_len is annihilated by the relation ideal");

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->field_ = F;
    alg->quiver_ = std::move(q);
    alg->relations_ = std::move(rels);
    alg->loewy_bound_ = loewy;

    std::size_t ncoords = 0;
    for (int m = 0; m <= loewy; ++m)
        ncoords += by_len[m].size();

    // basis = non-pivot coordinates; the Loewy certificate makes every
    // length-loewy path a pivot, so basis paths have length < loewy
    std::vector<int> coord_to_basis(ncoords, -1);
    for (std::size_t c = 0; c < ncoords; ++c) {
        if (span.contains_pivot(c))
            continue;
        coord_to_basis[c] = static_cast<int>(alg->basis_.size());
        alg->basis_.push_back(all_paths[c]);
    }
    const int dim = alg->dim();
    alg->basis_target_.resize(dim);
    alg->basis_from_.assign(alg->quiver_.vertex_count, {});
    alg->idempotents_.assign(alg->quiver_.vertex_count, -1);
    for (int i = 0; i < dim; ++i) {
        const Path& pt = alg->basis_[i];
        alg->basis_target_[i] = path_target(alg->quiver_, pt);
        alg->basis_from_[pt.source].push_back(i);
        alg->basis_by_key_.emplace(path_key(pt), i);
        if (pt.trivial())
            alg->idempotents_[pt.source] = i;
    }

    // normal forms of every enumerated path, then the multiplication table
    std::vector<Vec> nf(ncoords);
    for (std::size_t c = 0; c < ncoords; ++c) {
        Vec unit(ncoords, 0);
        unit[c] = 1;
        span.reduce(unit);
        Vec out(dim, 0);
        for (std::size_t k = 0; k < ncoords; ++k)
            if (unit[k] != 0)
                out[coord_to_basis[k]] = unit[k];
        nf[c] = std::move(out);
    }
    alg->table_.assign(static_cast<std::size_t>(dim) * dim, Vec(dim, 0));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const Path& u = alg->basis_[i];
            const Path& v = alg->basis_[j];
            if (alg->basis_target_[i] != v.source)
                continue;
            Path w = path_concat(u, v);
            if (w.length() > loewy)
                continue; // lies in the annihilated power
            alg->table_[static_cast<std::size_t>(i) * dim + j] =
                nf[static_cast<std::size_t>(path_id.at(path_key(w)))];
        }
    }
    return alg;
}

int Algebra::basis_index(const Path& p) const
{
    auto it = basis_by_key_.find(path_key(p));
    return it == basis_by_key_.end() ? -1 : it->second;
}

std::vector<int> Algebra::basis_from_to(int v, int w) const
{
    std::vector<int> out;
    for (int i : basis_from_[v])
        if (basis_target_[i] == w)
            out.push_back(i);
    return out;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const
{
    require(x.size() == static_cast<std::size_t>(dim())
                && y.size() == static_cast<std::size_t>(dim()),
            Errc::DimensionMismatch, "algebra element of wrong length");
    Vec out(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j] == 0)
                continue;
            Fel c = field_.mul(x[i], y[j]);
            const Vec& t = table(i, j);
            for (int k = 0; k < dim(); ++k)
                if (t[k] != 0)
                    out[k] = field_.add(out[k], field_.mul(c, t[k]));
        }
    }
    return out;
}

Vec Algebra::unit() const
{
    Vec u(dim(), 0);
    for (int v = 0; v < vertex_count(); ++v)
        u[idempotents_[v]] = 1;
    return u;
}

Vec Algebra::reduce_path(const Path& p) const
{
    require(path_composable(quiver_, p), Errc::RelationIllFormed,
            "path does not compose in the quiver");
    Vec acc(dim(), 0);
    acc[idempotents_[p.source]] = 1;
    for (int a : p.arrows) {
        Path arrow_path;
        arrow_path.source = quiver_.arrows[a].source;
        arrow_path.arrows = {a};
        int bi = basis_index(arrow_path);
        require(bi >= 0, Errc::Internal, "arrow missing from basis");
        Vec unit(dim(), 0);
        unit[bi] = 1;
        acc = multiply(acc, unit);
    }
    return acc;
}

Vec Algebra::reduce_path_expr(const PathExpr& x) const
{
    Vec out(dim(), 0);
    for (const PathTerm& t : x) {
        Vec v = reduce_path(t.path);
        for (int k = 0; k < dim(); ++k)
            out[k] = field_.add(out[k], field_.mul(field_.from_int(t.coeff), v[k]));
    }
    return out;
}

AlgebraPtr Algebra::opposite() const
{
    std::lock_guard<std::mutex> lock(opposite_mu_);
    if (auto op = opposite_.lock())
        return op;
    std::vector<PathExpr> op_rels;
    for (const PathExpr& r : relations_) {
        PathExpr rr;
        for (const PathTerm& t : r)
            rr.push_back({t.coeff, path_reversed(t.path, quiver_)});
        op_rels.push_back(std::move(rr));
    }
    AlgebraPtr op = build(quiver_.reversed(), std::move(op_rels), field_.p(),
                          std::max(loewy_bound_, 1));
    opposite_ = op;
    {
        std::lock_guard<std::mutex> lock2(op->opposite_mu_);
        op->opposite_ = weak_from_this();
    }
    return op;
}

Vec Algebra::transfer_to_opposite(const Vec& x) const
{
    AlgebraPtr op = opposite();
    Vec out(op->dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        Vec nf = op->reduce_path(path_reversed(basis_[i], quiver_));
        for (int k = 0; k < op->dim(); ++k)
            out[k] = field_.add(out[k], field_.mul(x[i], nf[k]));
    }
    return out;
}

std::vector<Algebra::Block> Algebra::blocks() const
{
    const int n = vertex_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Arrow& a : quiver_.arrows) {
        int x = find(a.source), y = find(a.target);
        if (x != y)
            parent[std::max(x, y)] = std::min(x, y);
    }
    std::map<int, Block> comps;
    for (int v = 0; v < n; ++v) {
        comps[find(v)].vertices.push_back(v);
        comps[find(v)].semisimple = true;
    }
    for (const Arrow& a : quiver_.arrows)
        comps[find(a.source)].semisimple = false;
    std::vector<Block> out;
    for (auto& [root, b] : comps)
        out.push_back(std::move(b));
    return out;
}

std::string Algebra::describe_basis_element(int i) const
{
    return path_to_string(quiver_, basis_[i]);
}

} // namespace approxdim
