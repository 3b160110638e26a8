#pragma once

// Gauss codes: parsing, validation, the interlacement operator and its
// square, and the odd/even parity partition of the labels.

#include "lacet/gf2.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lacet {

// Subset of the label set E = {1..n}; bit x-1 holds label x.
using EdgeSet = gf2::BitVec;

// Cyclic double-occurrence sequence of length 2n over labels {1..n},
// stored linearly. Tokens the code was parsed from are kept per label so
// user input round-trips through relabelings.
class GaussCode {
public:
    static GaussCode from_sequence(std::vector<int> seq, std::vector<std::string> names = {});

    int n() const { return n_; }
    const std::vector<int>& sequence() const { return seq_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name_of(int label) const;

    // positions of the two occurrences of label x, in linear order
    std::pair<int, int> occurrences(int x) const;

private:
    int n_ = 0;
    std::vector<int> seq_;
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> occ_;
};

// Tokens are whitespace- or comma-separated; with compact_digits every
// non-separator character is its own token. Tokens forming exactly the set
// {1..n} keep their numeric values as labels; any other token set is
// relabeled in first-occurrence order.
GaussCode parse_gauss_code(std::string_view text, bool compact_digits = false);

// Labels occurring exactly once strictly between the two occurrences of x.
EdgeSet interlace(const GaussCode& code, int x);

// XOR-sum of interlace(y) over y in interlace(x).
EdgeSet interlace_squared(const GaussCode& code, int x);

// Row x-1 = interlace(x). Its square (matrix product with itself) has
// row x-1 = interlace_squared(x).
gf2::BitMatrix interlace_matrix(const GaussCode& code);

struct ParityPartition {
    EdgeSet odd;  // labels x with |interlace(x)| odd
    EdgeSet even; // complement
};
ParityPartition parity_partition(const GaussCode& code);

// Relabels by first-occurrence order, keeping positions; the result starts
// at the first occurrence of label 1. Idempotent.
GaussCode canonicalize(const GaussCode& code);

// Cyclic rotation / reversal with labels and names untouched.
GaussCode rotated(const GaussCode& code, int k);
GaussCode reversed(const GaussCode& code);

std::vector<int> labels_of(const EdgeSet& s);
std::string to_label_set_string(const EdgeSet& s); // "{2,6,7,8}"

} // namespace lacet
