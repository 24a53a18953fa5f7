#include "approxdim/matrix.hpp"

#include <algorithm>

namespace approxdim {

Fp::Fp(std::uint32_t p) : p_(p)
{
    require(p >= 3, Errc::InvalidArgument, "field modulus must be at least 3");
    require(is_prime_u32(p), Errc::InvalidArgument,
            "field modulus " + std::to_string(p) + " is not prime");
}

bool is_prime_u32(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Fel Fp::pow(Fel a, std::uint64_t e) const
{
    Fel r = 1 % p_;
    Fel b = a;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Fel Fp::inv(Fel a) const
{
    require(a != 0, Errc::Internal, "division by zero in GF(p)");
    return pow(a, p_ - 2);
}

Matrix Matrix::identity(const Fp& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Fp& f, const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, Errc::DimensionMismatch, "bad row length");
        std::copy(rows[r].begin(), rows[r].end(), m.row_ptr(r));
    }
    return m;
}

bool Matrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](Fel x) { return x == 0; });
}

Vec Matrix::row(std::size_t r) const
{
    return Vec(row_ptr(r), row_ptr(r) + cols_);
}

Vec Matrix::col(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::mul(const Matrix& rhs) const
{
    require(cols_ == rhs.rows_, Errc::DimensionMismatch, "matrix product shape mismatch");
    const std::uint64_t p = field_.p();
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                acc += std::uint64_t(at(i, k)) * rhs.at(k, j);
                if (acc >> 62)
                    acc %= p;
            }
            out.at(i, j) = static_cast<Fel>(acc % p);
        }
    }
    return out;
}

Vec Matrix::mul_vec(const Vec& x) const
{
    require(x.size() == cols_, Errc::DimensionMismatch, "matrix-vector shape mismatch");
    const std::uint64_t p = field_.p();
    Vec y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
            acc += std::uint64_t(at(i, k)) * x[k];
            if (acc >> 62)
                acc %= p;
        }
        y[i] = static_cast<Fel>(acc % p);
    }
    return y;
}

Matrix Matrix::add(const Matrix& rhs) const
{
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::DimensionMismatch, "matrix sum shape");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = field_.add(a_[i], rhs.a_[i]);
    return out;
}

Matrix Matrix::sub(const Matrix& rhs) const
{
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::DimensionMismatch, "matrix diff shape");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = field_.sub(a_[i], rhs.a_[i]);
    return out;
}

Matrix Matrix::scale(Fel c) const
{
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = field_.mul(a_[i], c);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    require(a.rows() == b.rows(), Errc::DimensionMismatch, "hstack row mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    require(a.cols() == b.cols(), Errc::DimensionMismatch, "vstack col mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b)
{
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return out;
}

bool Rref::is_pivot_col(std::size_t c) const
{
    return std::binary_search(pivots.begin(), pivots.end(), c);
}

Rref rref(const Matrix& a)
{
    Rref out;
    out.mat = a;
    Matrix& m = out.mat;
    const Fp& f = a.field();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < m.rows() && m.at(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != lead)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m.at(lead, k), m.at(piv, k));
        Fel s = f.inv(m.at(lead, c));
        for (std::size_t k = c; k < m.cols(); ++k)
            m.at(lead, k) = f.mul(m.at(lead, k), s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, c) == 0)
                continue;
            Fel t = m.at(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m.at(r, k) = f.sub(m.at(r, k), f.mul(t, m.at(lead, k)));
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank(const Matrix& a)
{
    return rref(a).rank;
}

Vec reduce_row(const Rref& rr, Vec v)
{
    const Matrix& m = rr.mat;
    const Fp& f = m.field();
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::size_t c = rr.pivots[r];
        if (v[c] == 0)
            continue;
        Fel t = v[c];
        for (std::size_t k = c; k < m.cols(); ++k)
            v[k] = f.sub(v[k], f.mul(t, m.at(r, k)));
    }
    return v;
}

Matrix kernel_basis(const Matrix& a)
{
    Rref rr = rref(a);
    const Fp& f = a.field();
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!rr.is_pivot_col(c))
            free_cols.push_back(c);
    Matrix out(f, free_cols.size(), a.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        out.at(i, fc) = 1;
        for (std::size_t r = 0; r < rr.rank; ++r)
            out.at(i, rr.pivots[r]) = f.neg(rr.mat.at(r, fc));
    }
    return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    require(a.rows() == b.rows(), Errc::DimensionMismatch, "solve: row counts differ");
    Rref rr = rref(hstack(a, b));
    // a pivot inside the B block means B is outside the column space
    if (!rr.pivots.empty() && rr.pivots.back() >= a.cols())
        return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(rr.pivots[r], j) = rr.mat.at(r, a.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& a)
{
    if (a.rows() != a.cols())
        return std::nullopt;
    if (a.rows() == 0)
        return a;
    // [A | I] always has full row rank; A is invertible iff no pivot lands
    // in the identity block
    Rref rr = rref(hstack(a, Matrix::identity(a.field(), a.rows())));
    if (rr.pivots.back() >= a.cols())
        return std::nullopt;
    Matrix inv(a.field(), a.rows(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            inv.at(r, c) = rr.mat.at(r, a.cols() + c);
    return inv;
}

bool is_invertible(const Matrix& a)
{
    return a.rows() == a.cols() && rank(a) == a.rows();
}

Matrix column_space_basis(const Matrix& a)
{
    Rref rr = rref(a);
    Matrix out(a.field(), a.rows(), rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t r = 0; r < a.rows(); ++r)
            out.at(r, i) = a.at(r, rr.pivots[i]);
    return out;
}

QuotientMap quotient_map(const Matrix& span_rows)
{
    const Fp& f = span_rows.field();
    const std::size_t d = span_rows.cols();
    Rref rr = rref(span_rows);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < d; ++c)
        if (!rr.is_pivot_col(c))
            free_cols.push_back(c);
    const std::size_t q = free_cols.size();

    QuotientMap out{Matrix(f, q, d), Matrix(f, d, q)};
    // proj(e_c) = residue of e_c restricted to free coordinates
    for (std::size_t c = 0; c < d; ++c) {
        Vec e(d, 0);
        e[c] = 1;
        Vec res = reduce_row(rr, e);
        for (std::size_t i = 0; i < q; ++i)
            out.proj.at(i, c) = res[free_cols[i]];
    }
    for (std::size_t i = 0; i < q; ++i)
        out.section.at(free_cols[i], i) = 1;
    return out;
}

const char* errc_name(Errc code)
{
    switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotAdmissibleWithinBound: return "NotAdmissibleWithinBound";
    case Errc::RelationIllFormed: return "RelationIllFormed";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::LiftFailed: return "LiftFailed";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::RandomizationExhausted: return "RandomizationExhausted";
    case Errc::IsInjective: return "IsInjective";
    case Errc::NotIndecomposable: return "NotIndecomposable";
    case Errc::NotSelfInjective: return "NotSelfInjective";
    case Errc::HypothesisUnverifiable: return "HypothesisUnverifiable";
    case Errc::NotWakamatsu: return "NotWakamatsu";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace approxdim
