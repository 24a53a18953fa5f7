#include "approxdim/gfpoly.hpp"

#include "approxdim/errors.hpp"

namespace approxdim::gfpoly {

int deg(const Poly& f)
{
    return static_cast<int>(f.size()) - 1;
}

Poly trim(Poly f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
    return f;
}

Poly monic(const Fp& F, const Poly& f)
{
    Poly g = trim(f);
    if (g.empty() || g.back() == 1)
        return g;
    Fel s = F.inv(g.back());
    for (Fel& c : g)
        c = F.mul(c, s);
    return g;
}

Poly add(const Fp& F, const Poly& a, const Poly& b)
{
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Fel x = i < a.size() ? a[i] : 0;
        Fel y = i < b.size() ? b[i] : 0;
        c[i] = F.add(x, y);
    }
    return trim(c);
}

Poly sub(const Fp& F, const Poly& a, const Poly& b)
{
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Fel x = i < a.size() ? a[i] : 0;
        Fel y = i < b.size() ? b[i] : 0;
        c[i] = F.sub(x, y);
    }
    return trim(c);
}

Poly mul(const Fp& F, const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    return trim(c);
}

std::pair<Poly, Poly> divmod(const Fp& F, const Poly& a, const Poly& b)
{
    Poly bb = trim(b);
    require(!bb.empty(), Errc::Internal, "polynomial division by zero");
    Poly r = trim(a);
    if (deg(r) < deg(bb))
        return {{}, r};
    Poly q(r.size() - bb.size() + 1, 0);
    Fel lead_inv = F.inv(bb.back());
    for (int i = deg(r); i >= deg(bb); --i) {
        if (r[i] == 0)
            continue;
        Fel c = F.mul(r[i], lead_inv);
        q[i - deg(bb)] = c;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            std::size_t k = i - deg(bb) + j;
            r[k] = F.sub(r[k], F.mul(c, bb[j]));
        }
    }
    return {trim(q), trim(r)};
}

Poly mod(const Fp& F, const Poly& a, const Poly& b)
{
    return divmod(F, a, b).second;
}

Poly gcd(const Fp& F, Poly a, Poly b)
{
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = b;
        b = r;
    }
    return monic(F, a);
}

Poly derivative(const Fp& F, const Poly& f)
{
    if (f.size() < 2)
        return {};
    Poly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        d[i - 1] = F.mul(f[i], F.from_int(static_cast<long long>(i)));
    return trim(d);
}

Poly powmod(const Fp& F, Poly base, std::uint64_t e, const Poly& m)
{
    Poly r{1};
    base = mod(F, base, m);
    while (e) {
        if (e & 1)
            r = mod(F, mul(F, r, base), m);
        base = mod(F, mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

namespace {

// pull out a p-th root when f' = 0, i.e. f(x) = h(x)^p with h_i = f_{p i}
Poly pth_root(const Fp& F, const Poly& f)
{
    Poly h;
    for (std::size_t i = 0; i < f.size(); i += F.p())
        h.push_back(f[i]);
    return trim(h);
}

// split a product of distinct irreducibles of common degree d via the
// Cantor-Zassenhaus norm map
Poly equal_degree_factor(const Fp& F, Poly g, int d, Rng& rng)
{
    for (;;) {
        if (deg(g) == d)
            return monic(F, g);
        // norm of a random element onto the prime field, then a square test
        Poly r(static_cast<std::size_t>(deg(g)), 0);
        for (Fel& c : r)
            c = rng.field_element(F);
        r = trim(r);
        if (deg(r) < 1)
            continue;
        Poly nrm = r;
        Poly frob = r;
        for (int i = 1; i < d; ++i) {
            frob = powmod(F, frob, F.p(), g);
            nrm = mod(F, mul(F, nrm, frob), g);
        }
        Poly e = powmod(F, nrm, (F.p() - 1) / 2, g);
        if (e.empty())
            continue;
        Poly e1 = e;
        e1[0] = F.sub(e1[0], 1);
        Poly h = gcd(F, g, trim(e1));
        if (deg(h) >= 1 && deg(h) < deg(g))
            g = h;
    }
}

} // namespace

Poly any_irreducible_factor(const Fp& F, Poly f, Rng& rng)
{
    f = monic(F, f);
    require(deg(f) >= 1, Errc::Internal, "factor of a constant polynomial");
    for (;;) {
        if (deg(f) == 1)
            return f;
        Poly fp = derivative(F, f);
        if (fp.empty()) {
            f = pth_root(F, f);
            continue;
        }
        Poly g = gcd(F, f, fp);
        if (deg(g) >= 1) {
            // f/g is squarefree and nonconstant whenever f' != 0
            f = monic(F, divmod(F, f, g).first);
            continue;
        }
        break;
    }
    // distinct-degree scan on the squarefree f
    Poly x{0, 1};
    Poly w = x;
    Poly rest = f;
    for (int d = 1; deg(rest) >= 1; ++d) {
        if (2 * d > deg(rest))
            return monic(F, rest); // rest itself is irreducible
        w = powmod(F, w, F.p(), rest);
        Poly diff = sub(F, w, x);
        Poly g = gcd(F, rest, diff);
        if (deg(g) >= 1)
            return equal_degree_factor(F, g, d, rng);
    }
    fail(Errc::Internal, "irreducible factor scan fell through");
}

int multiplicity(const Fp& F, const Poly& f, const Poly& g)
{
    int e = 0;
    Poly r = trim(f);
    for (;;) {
        auto [q, rem] = divmod(F, r, g);
        if (!rem.empty())
            return e;
        r = q;
        ++e;
    }
}

} // namespace approxdim::gfpoly
