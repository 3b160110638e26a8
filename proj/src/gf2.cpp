#include "lacet/gf2.hpp"

#include "lacet/errors.hpp"

#include <bit>

namespace lacet::gf2 {

BitVec BitVec::unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i);
    return v;
}

BitVec BitVec::ones(std::size_t n) {
    BitVec v(n);
    for (auto& w : v.w_) w = ~std::uint64_t{0};
    if (n & 63) v.w_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
    return v;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            fail(Errc::bad_coloring, "bit string may contain only 0 and 1");
    }
    return v;
}

void BitVec::set(std::size_t i, bool v) {
    if (i >= n_) fail(Errc::dimension_mismatch, "bit index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
        w_[i >> 6] |= mask;
    else
        w_[i >> 6] &= ~mask;
}

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVec::lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return npos;
}

void BitVec::check_same_size(const BitVec& o) const {
    if (n_ != o.n_) fail(Errc::dimension_mismatch, "bit vector sizes differ");
}

BitVec& BitVec::operator^=(const BitVec& o) {
    check_same_size(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
    check_same_size(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
    check_same_size(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
}

BitVec BitVec::operator~() const {
    BitVec v(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) v.w_[k] = ~w_[k];
    if (n_ & 63) v.w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    return v;
}

bool BitVec::dot(const BitVec& o) const {
    check_same_size(o);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
    if (begin + len > n_) fail(Errc::dimension_mismatch, "slice out of range");
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i)
        if (test(begin + i)) v.set(i);
    return v;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

std::vector<std::size_t> BitVec::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

bool lex_less(const BitVec& a, const BitVec& b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.test(i) != b.test(i)) return b.test(i);
    }
    return a.size() < b.size();
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    BitMatrix m;
    for (const auto& r : rows) m.append_row(BitVec::from_string(r));
    return m;
}

void BitMatrix::append_row(BitVec r) {
    if (rows_.empty())
        cols_ = r.size();
    else if (r.size() != cols_)
        fail(Errc::dimension_mismatch, "appended row has wrong length");
    rows_.push_back(std::move(r));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j)) t.set(j, i);
    return t;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.at(i, k)) out.row(i) ^= b.row(k);
    return out;
}

Rref rref(BitMatrix m) {
    const std::size_t nrows = m.rows();
    BitMatrix t = BitMatrix::identity(nrows);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < nrows; ++c) {
        std::size_t pr = npos;
        for (std::size_t i = r; i < nrows; ++i)
            if (m.at(i, c)) {
                pr = i;
                break;
            }
        if (pr == npos) continue;
        m.swap_rows(pr, r);
        t.swap_rows(pr, r);
        for (std::size_t i = 0; i < nrows; ++i)
            if (i != r && m.at(i, c)) {
                m.row(i) ^= m.row(r);
                t.row(i) ^= t.row(r);
            }
        pivots.push_back(c);
        ++r;
    }
    return Rref{std::move(m), std::move(t), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m0) {
    BitMatrix m = m0;
    const std::size_t nrows = m.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < nrows; ++c) {
        std::size_t pr = npos;
        for (std::size_t i = r; i < nrows; ++i)
            if (m.at(i, c)) {
                pr = i;
                break;
            }
        if (pr == npos) continue;
        m.swap_rows(pr, r);
        for (std::size_t i = r + 1; i < nrows; ++i)
            if (m.at(i, c)) m.row(i) ^= m.row(r);
        ++r;
    }
    return r;
}

AffineSolveOutcome solve_affine(const BitMatrix& l, const BitVec& r) {
    if (r.size() != l.rows()) fail(Errc::dimension_mismatch, "rhs length != row count");
    const Rref e = rref(l);
    const std::size_t nrows = l.rows(), ncols = l.cols(), rk = e.rank();

    BitVec rhs(nrows); // transformed right-hand side
    for (std::size_t i = 0; i < nrows; ++i)
        if (e.transform.row(i).dot(r)) rhs.set(i);

    for (std::size_t i = rk; i < nrows; ++i) {
        if (rhs.test(i)) {
            Infeasible out{e.transform.row(i)};
            if (!verify_certificate(l, r, out.certificate))
                fail(Errc::internal_inconsistency, "certificate failed self-check");
            return out;
        }
    }

    Solutions out;
    out.particular = BitVec(ncols);
    for (std::size_t i = 0; i < rk; ++i)
        if (rhs.test(i)) out.particular.set(e.pivot_cols[i]);

    std::vector<bool> is_pivot(ncols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        BitVec v = BitVec::unit(ncols, f);
        for (std::size_t i = 0; i < rk; ++i)
            if (e.reduced.at(i, f)) v.set(e.pivot_cols[i]);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

std::vector<BitVec> enumerate_affine(const Solutions& s, std::uint64_t cap) {
    const std::size_t dim = s.nullspace.size();
    if (dim >= 64 || (std::uint64_t{1} << dim) > cap)
        fail(Errc::too_many_solutions,
             "solution space dimension " + std::to_string(dim) + " exceeds enumeration cap " +
                 std::to_string(cap));
    const std::uint64_t total = std::uint64_t{1} << dim;
    std::vector<BitVec> out;
    out.reserve(total);
    for (std::uint64_t k = 0; k < total; ++k) {
        BitVec x = s.particular;
        for (std::size_t j = 0; j < dim; ++j)
            if ((k >> (dim - 1 - j)) & 1) x ^= s.nullspace[j];
        out.push_back(std::move(x));
    }
    return out;
}

bool verify_certificate(const BitMatrix& l, const BitVec& r, const BitVec& nu) {
    if (nu.size() != l.rows() || r.size() != l.rows())
        fail(Errc::dimension_mismatch, "certificate dimensions do not match the system");
    BitVec acc(l.cols());
    for (std::size_t i = 0; i < l.rows(); ++i)
        if (nu.test(i)) acc ^= l.row(i);
    return acc.none() && nu.dot(r);
}

std::variant<RankFactors, RankExceedsP> rank_factorize(const BitMatrix& b, std::size_t p) {
    const Rref e = rref(b);
    const std::size_t rk = e.rank();
    if (rk > p) return RankExceedsP{rk};

    // b = (pivot-column selector) * (nonzero rows of the rref):
    // row i of b restricted to the pivot columns gives its coefficients
    // over the rref rows, because the rref is the identity there.
    RankFactors out;
    out.d = BitMatrix(b.rows(), p);
    out.f = BitMatrix(b.cols(), p);
    for (std::size_t j = 0; j < rk; ++j) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            if (b.at(i, e.pivot_cols[j])) out.d.set(i, j);
        for (std::size_t z = 0; z < b.cols(); ++z)
            if (e.reduced.at(j, z)) out.f.set(z, j);
    }
    return out;
}

} // namespace lacet::gf2
