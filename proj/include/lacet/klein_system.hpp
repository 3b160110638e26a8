#pragma once

// The affine linear system over Z2 whose solutions are exactly the
// 2-face-colorable realizations of a Gauss code on the sphere, the
// projective plane, or the Klein bottle: construction from the label-pair
// implication classes, solving with full enumeration, per-solution
// verification against the image pattern of b, and infeasibility
// certificates with row provenance.

#include "lacet/lacet_algebra.hpp"

#include <string>
#include <variant>
#include <vector>

namespace lacet {

// Restriction class of an ordered label pair (k, l), determined by the
// parities of k and l and the position of l relative to interlace(k) and
// interlace_squared(k). I13 pairs (l in neither) impose no restriction.
enum class ImplicationClass {
    i1 = 1, i2, i3,    // k odd,  l odd:  i2\i, both, i\i2
    i4, i5, i6,        // k odd,  l even
    i7, i8, i9,        // k even, l odd
    i10, i11, i12,     // k even, l even
    i13,
};

std::string_view to_string(ImplicationClass cls);

ImplicationClass classify_pair(const GaussCode& code, int k, int l);

struct RowOrigin {
    int k, l;
    ImplicationClass cls;
    friend bool operator==(const RowOrigin&, const RowOrigin&) = default;
};

struct KleinLinearSystem {
    gf2::BitMatrix lhs; // m x 2n; column x-1 = gamma_x, column n+x-1 = delta_x
    gf2::BitVec rhs;    // length m
    std::vector<RowOrigin> origin;
    int n = 0;

    std::size_t m() const { return lhs.rows(); }
};

// One row per unordered pair {k, l} with class != I13, ordered by (k, l).
// Each row touches only columns k, l, n+k, n+l. m <= n(n-1)/2.
KleinLinearSystem build_system(const GaussCode& code);

// "m n" header, m rows of 2n bits, the right-hand side as one line of m
// bits, then one "k l class" line per row.
std::string dump_system(const KleinLinearSystem& sys);

struct KleinSolution {
    Coloring gamma;
    gf2::BitVec delta;
};

struct PartitionWitness {
    EdgeSet o0, o1; // odd labels with delta 0 / 1
    EdgeSet e0, e1; // even labels with delta 0 / 1
};

PartitionWitness solution_partition(const GaussCode& code, const KleinSolution& sol);

// Checks the image pattern of b against the partition induced by delta:
// b(x) = O0+E1 on O0, O1+E1 on O1, empty on E0, O on E1; for colorings
// realizing the Klein bottle additionally at least two of O0, O1, E1 are
// nonempty (the partition labeling may be swapped on the odd side).
bool verify_solution(const GaussCode& code, const KleinSolution& sol);

struct RealizedSolution {
    KleinSolution solution;
    SurfaceClass surface;
    PartitionWitness partition;
    bool verified;
};

struct Realizable {
    std::vector<RealizedSolution> solutions; // sorted by (gamma, delta)
    std::size_t affine_dim;
};

struct NotRealizable {
    gf2::BitVec certificate; // indexed over the retained rows
};

struct RealizabilityReport {
    KleinLinearSystem system;
    std::variant<Realizable, NotRealizable> outcome;

    bool realizable() const { return std::holds_alternative<Realizable>(outcome); }
};

RealizabilityReport solve_realizability(const GaussCode& code,
                                        std::uint64_t max_enum = gf2::kDefaultEnumCap);

} // namespace lacet
