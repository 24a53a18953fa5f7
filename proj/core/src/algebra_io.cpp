#include "approxdim/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace approxdim {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& msg)
{
    fail(Errc::ParseError, origin + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

AlgebraPtr parse_algebra(std::istream& in, const std::string& origin)
{
    long long field = kDefaultPrime;
    int max_len = Algebra::kDefaultMaxLen;
    int vertices = -1;
    Quiver q;
    std::vector<PathExpr> relations;
    std::vector<std::string> relation_texts;
    std::vector<int> relation_lines;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto toks = split_ws(line);
        if (toks.empty())
            continue;
        const std::string& kw = toks[0];
        if (kw == "field") {
            if (toks.size() != 2)
                parse_fail(origin, lineno, "expected: field <prime>");
            try {
                field = std::stoll(toks[1]);
            } catch (const std::exception&) {
                parse_fail(origin, lineno, "bad field modulus '" + toks[1] + "'");
            }
            if (field < 3 || field > 0x7fffffff || !is_prime_u32(static_cast<std::uint32_t>(field)))
                parse_fail(origin, lineno, "field modulus must be an odd prime >= 3");
        } else if (kw == "vertices") {
            if (toks.size() != 2)
                parse_fail(origin, lineno, "expected: vertices <count>");
            try {
                vertices = std::stoi(toks[1]);
            } catch (const std::exception&) {
                vertices = -1;
            }
            if (vertices < 1)
                parse_fail(origin, lineno, "vertex count must be a positive integer");
            q.vertex_count = vertices;
        } else if (kw == "maxlen") {
            if (toks.size() != 2)
                parse_fail(origin, lineno, "expected: maxlen <count>");
            try {
                max_len = std::stoi(toks[1]);
            } catch (const std::exception&) {
                max_len = 0;
            }
            if (max_len < 1)
                parse_fail(origin, lineno, "maxlen must be a positive integer");
        } else if (kw == "arrow") {
            if (vertices < 0)
                parse_fail(origin, lineno, "arrow before vertices line");
            if (toks.size() != 4)
                parse_fail(origin, lineno, "expected: arrow <name> <source> <target>");
            int s = 0, t = 0;
            try {
                s = std::stoi(toks[2]);
                t = std::stoi(toks[3]);
            } catch (const std::exception&) {
                parse_fail(origin, lineno, "arrow endpoints must be integers");
            }
            if (s < 1 || s > vertices || t < 1 || t > vertices)
                parse_fail(origin, lineno, "arrow endpoints out of range 1.."
                                               + std::to_string(vertices));
            if (q.arrow_index(toks[1]) != -1)
                parse_fail(origin, lineno, "duplicate arrow name '" + toks[1] + "'");
            q.arrows.push_back({toks[1], s - 1, t - 1});
        } else if (kw == "relation") {
            std::string rest = line.substr(line.find("relation") + 8);
            relation_texts.push_back(rest);
            relation_lines.push_back(lineno);
        } else {
            parse_fail(origin, lineno, "unknown directive '" + kw + "'");
        }
    }
    if (vertices < 0)
        parse_fail(origin, lineno ? lineno : 1, "missing vertices line");

    Fp F(static_cast<std::uint32_t>(field));
    for (std::size_t r = 0; r < relation_texts.size(); ++r) {
        const std::string& text = relation_texts[r];
        int lno = relation_lines[r];
        PathExpr expr;
        std::stringstream terms(text);
        std::string term;
        bool any = false;
        while (std::getline(terms, term, '+')) {
            auto ttoks = split_ws(term);
            std::string joined;
            for (const auto& t : ttoks)
                joined += t;
            if (joined.empty())
                parse_fail(origin, lno, "empty relation term");
            any = true;
            std::vector<std::string> parts;
            std::stringstream ps(joined);
            std::string piece;
            while (std::getline(ps, piece, '*'))
                parts.push_back(piece);
            if (parts.size() < 3)
                parse_fail(origin, lno,
                           "relation term needs a coefficient and at least two arrows");
            long long coeff = 0;
            try {
                coeff = std::stoll(parts[0]);
            } catch (const std::exception&) {
                parse_fail(origin, lno, "bad coefficient '" + parts[0] + "'");
            }
            Path p;
            for (std::size_t i = 1; i < parts.size(); ++i) {
                int a = q.arrow_index(parts[i]);
                if (a == -1)
                    parse_fail(origin, lno, "unknown arrow '" + parts[i] + "'");
                if (i == 1)
                    p.source = q.arrows[a].source;
                else if (q.arrows[p.arrows.back()].target != q.arrows[a].source)
                    parse_fail(origin, lno, "arrows '" + parts[i - 1] + "' and '" + parts[i]
                                                + "' do not compose");
                p.arrows.push_back(a);
            }
            expr.push_back({F.from_int(coeff), p});
        }
        if (!any)
            parse_fail(origin, lno, "relation without terms");
        relations.push_back(std::move(expr));
    }

    try {
        return Algebra::build(std::move(q), std::move(relations),
                              static_cast<std::uint32_t>(field), max_len);
    } catch (const Error& e) {
        if (e.code() == Errc::RelationIllFormed || e.code() == Errc::InvalidArgument)
            fail(Errc::ParseError, origin + ": " + e.what());
        throw;
    }
}

AlgebraPtr load_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), Errc::ParseError, "cannot open algebra file '" + path + "'");
    return parse_algebra(in, path);
}

std::string format_algebra(const Algebra& a)
{
    std::ostringstream out;
    out << "field " << a.field().p() << "\n";
    out << "vertices " << a.vertex_count() << "\n";
    if (a.loewy_bound() > Algebra::kDefaultMaxLen)
        out << "maxlen " << a.loewy_bound() << "\n";
    for (const Arrow& ar : a.quiver().arrows)
        out << "arrow " << ar.name << " " << ar.source + 1 << " " << ar.target + 1 << "\n";
    for (const PathExpr& r : a.relations()) {
        out << "relation ";
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i)
                out << " + ";
            out << r[i].coeff;
            for (int arrow : r[i].path.arrows)
                out << "*" << a.quiver().arrows[arrow].name;
        }
        out << "\n";
    }
    return out.str();
}

void save_algebra_file(const Algebra& a, const std::string& path)
{
    std::ofstream out(path);
    require(out.good(), Errc::ParseError, "cannot write algebra file '" + path + "'");
    out << format_algebra(a);
}

} // namespace approxdim
