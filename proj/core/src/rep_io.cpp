#include "approxdim/rep_io.hpp"

#include <fstream>
#include <sstream>

namespace approxdim {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& msg)
{
    fail(Errc::ParseError, origin + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

RepPtr parse_module(std::istream& in, const AlgebraPtr& alg, const std::string& origin)
{
    const Fp& F = alg->field();
    const int nv = alg->vertex_count();
    std::string raw;
    int lineno = 0;

    auto next_line = [&](std::vector<std::string>& toks) {
        toks.clear();
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = raw.substr(0, raw.find('#'));
            std::istringstream is(line);
            std::string t;
            while (is >> t)
                toks.push_back(t);
            if (!toks.empty())
                return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_line(toks) || toks.size() != 1 || toks[0] != "module")
        parse_fail(origin, lineno ? lineno : 1, "expected leading 'module' line");
    if (!next_line(toks) || toks[0] != "dims")
        parse_fail(origin, lineno ? lineno : 1, "expected 'dims d1 d2 ...' line");
    if (static_cast<int>(toks.size()) != nv + 1)
        parse_fail(origin, lineno, "expected " + std::to_string(nv) + " vertex dimensions");
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        try {
            dims[v] = std::stoi(toks[v + 1]);
        } catch (const std::exception&) {
            dims[v] = -1;
        }
        if (dims[v] < 0)
            parse_fail(origin, lineno, "bad dimension '" + toks[v + 1] + "'");
    }

    std::vector<Matrix> maps(alg->quiver().arrows.size());
    std::vector<bool> seen(maps.size(), false);
    while (next_line(toks)) {
        if (toks[0] != "map")
            parse_fail(origin, lineno, "expected 'map <arrow> r x c' block");
        bool with_x = toks.size() == 5 && toks[3] == "x";
        if (!(with_x || toks.size() == 4))
            parse_fail(origin, lineno, "expected 'map <arrow> r x c'");
        int a = alg->quiver().arrow_index(toks[1]);
        if (a < 0)
            parse_fail(origin, lineno, "unknown arrow '" + toks[1] + "'");
        if (seen[a])
            parse_fail(origin, lineno, "duplicate map block for arrow '" + toks[1] + "'");
        long long r = -1, c = -1;
        try {
            r = std::stoll(toks[2]);
            c = std::stoll(toks[with_x ? 4 : 3]);
        } catch (const std::exception&) {
        }
        const Arrow& ar = alg->quiver().arrows[a];
        if (r != dims[ar.target] || c != dims[ar.source])
            parse_fail(origin, lineno,
                       "map '" + toks[1] + "' must be " + std::to_string(dims[ar.target])
                           + " x " + std::to_string(dims[ar.source]));
        Matrix m(F, static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        for (long long i = 0; i < r; ++i) {
            std::vector<std::string> row;
            if (!next_line(row) || static_cast<long long>(row.size()) != c)
                parse_fail(origin, lineno, "expected a row of " + std::to_string(c) + " entries");
            for (long long j = 0; j < c; ++j) {
                try {
                    m.at(i, j) = F.from_int(std::stoll(row[j]));
                } catch (const std::exception&) {
                    parse_fail(origin, lineno, "bad entry '" + row[j] + "'");
                }
            }
        }
        maps[a] = std::move(m);
        seen[a] = true;
    }
    for (std::size_t a = 0; a < maps.size(); ++a)
        if (!seen[a]) {
            const Arrow& ar = alg->quiver().arrows[a];
            if (dims[ar.target] == 0 || dims[ar.source] == 0)
                maps[a] = Matrix(F, dims[ar.target], dims[ar.source]);
            else
                parse_fail(origin, lineno, "missing map block for arrow '" + ar.name + "'");
        }

    RepPtr rep = make_rep(alg, std::move(dims), std::move(maps));
    ValidationReport vr = validate_module(*rep);
    if (!vr.ok)
        parse_fail(origin, lineno, vr.violations.front().describe(*alg));
    return rep;
}

RepPtr load_module_file(const std::string& path, const AlgebraPtr& alg)
{
    std::ifstream in(path);
    require(in.good(), Errc::ParseError, "cannot open module file '" + path + "'");
    return parse_module(in, alg, path);
}

std::string format_module(const Representation& m)
{
    std::ostringstream out;
    out << "module\n";
    out << "dims";
    for (int d : m.dims)
        out << " " << d;
    out << "\n";
    for (std::size_t a = 0; a < m.arrow_maps.size(); ++a) {
        const Matrix& mat = m.arrow_maps[a];
        out << "map " << m.alg->quiver().arrows[a].name << " " << mat.rows() << " x "
            << mat.cols() << "\n";
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            for (std::size_t c = 0; c < mat.cols(); ++c) {
                if (c)
                    out << " ";
                out << mat.at(r, c);
            }
            out << "\n";
        }
    }
    return out.str();
}

void save_module_file(const Representation& m, const std::string& path)
{
    std::ofstream out(path);
    require(out.good(), Errc::ParseError, "cannot write module file '" + path + "'");
    out << format_module(m);
}

} // namespace approxdim
