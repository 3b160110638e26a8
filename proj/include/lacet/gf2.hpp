#pragma once

// Bit-packed dense linear algebra over Z2: rank, reduced row echelon form
// with row-operation tracking, affine solving with nullspace basis or an
// inconsistency certificate, solution enumeration, and rank factorization.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lacet::gf2 {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// 0/1 vector packed into 64-bit words. Addition is XOR. Tail bits of the
// last word are kept zero so that operator== is plain word comparison.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_(words_for(n), 0) {}

    static BitVec unit(std::size_t n, std::size_t i);
    static BitVec ones(std::size_t n);
    static BitVec from_string(std::string_view bits); // e.g. "0110"

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }
    bool odd() const { return count() & 1; }
    std::size_t lowest() const; // index of lowest set bit, npos if none

    BitVec& operator^=(const BitVec& o);
    BitVec& operator&=(const BitVec& o);
    BitVec& operator|=(const BitVec& o);
    BitVec operator~() const; // complement within size()

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend bool operator==(const BitVec&, const BitVec&) = default;

    bool dot(const BitVec& o) const; // parity of the AND

    BitVec slice(std::size_t begin, std::size_t len) const;

    std::string to_string() const;
    std::vector<std::size_t> set_bits() const; // ascending indices

private:
    static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
    void check_same_size(const BitVec& o) const;

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// a < b with bit 0 as the most significant digit; the order used for
// deterministic solution listings ("bit string as binary integer").
bool lex_less(const BitVec& a, const BitVec& b);

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVec& row(std::size_t i) const { return rows_[i]; }
    BitVec& row(std::size_t i) { return rows_[i]; }
    bool at(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }

    void append_row(BitVec r);
    void swap_rows(std::size_t i, std::size_t j) { std::swap(rows_[i], rows_[j]); }

    BitMatrix transposed() const;

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct Rref {
    BitMatrix reduced;                    // row-reduced echelon form, pivot rows first
    BitMatrix transform;                  // square; transform * input = reduced
    std::vector<std::size_t> pivot_cols;  // one per pivot row
    std::size_t rank() const { return pivot_cols.size(); }
};

Rref rref(BitMatrix m);
std::size_t rank(const BitMatrix& m);

struct Solutions {
    BitVec particular;
    std::vector<BitVec> nullspace; // linearly independent kernel basis
};
struct Infeasible {
    BitVec certificate; // nu with nu^T L = 0 and nu^T r = 1
};
using AffineSolveOutcome = std::variant<Solutions, Infeasible>;

// Solve L x = r. The certificate of an infeasible system is the row of the
// accumulated row-operation transform that produced the 0...0|1 row; it is
// re-checked with verify_certificate before being returned.
AffineSolveOutcome solve_affine(const BitMatrix& l, const BitVec& r);

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 20;

// All 2^dim solutions, ordered lexicographically by the basis coefficient
// vector. Throws too_many_solutions when 2^dim exceeds cap.
std::vector<BitVec> enumerate_affine(const Solutions& s, std::uint64_t cap = kDefaultEnumCap);

bool verify_certificate(const BitMatrix& l, const BitVec& r, const BitVec& nu);

struct RankFactors {
    BitMatrix d; // rows(b) x p
    BitMatrix f; // cols(b) x p, with d * f^T = b
};
struct RankExceedsP {
    std::size_t rank;
};

// Factor b = d * f^T with inner dimension p, padding unused columns with
// zeros; reports the actual rank when it exceeds p.
std::variant<RankFactors, RankExceedsP> rank_factorize(const BitMatrix& b, std::size_t p);

} // namespace lacet::gf2
