#pragma once

// The operator algebra attached to a colored Gauss code: kappa, the cycle
// maps c and its antimap partner, the bilinear operator b, surface
// connectivity and classification, and the exhaustive minimal-connectivity
// search over colorings.

#include "lacet/gauss_code.hpp"

#include <cstdint>
#include <functional>
#include <string_view>

namespace lacet {

// Black/white assignment: gamma_x = 1 means label x is black (traversed
// twice in the same direction).
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(gf2::BitVec bits) : bits_(std::move(bits)) {}

    // one character per label, '0' white / '1' black, label 1 first
    static Coloring from_string(std::string_view s) { return Coloring(gf2::BitVec::from_string(s)); }
    // bit string read as a binary integer, label 1 as the most significant digit
    static Coloring from_mask(int n, std::uint64_t mask);

    int n() const { return static_cast<int>(bits_.size()); }
    bool black(int label) const { return bits_.test(static_cast<std::size_t>(label) - 1); }
    const gf2::BitVec& bits() const { return bits_; }
    std::string to_string() const { return bits_.to_string(); }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    gf2::BitVec bits_;
};

// {x} if x is black, empty otherwise; on a set, the black members.
EdgeSet kappa(const Coloring& gamma, int x);
EdgeSet kappa(const Coloring& gamma, const EdgeSet& a);

// c(x) = kappa(x) + interlace(x); c~(x) = c(x) + {x}. Linear extension over
// a set XORs the per-label values.
EdgeSet c_map(const GaussCode& code, const Coloring& gamma, int x);
EdgeSet c_map(const GaussCode& code, const Coloring& gamma, const EdgeSet& a);
EdgeSet c_antimap(const GaussCode& code, const Coloring& gamma, int x);

// b(x) = interlace_squared(x) + { y in interlace(x) : gamma_y = gamma_x }.
// Coincides with c(c(x)) + c(x).
EdgeSet b_map(const GaussCode& code, const Coloring& gamma, int x);

// Row x-1 = b_map(x). Symmetric; diagonal bit set exactly on odd labels.
gf2::BitMatrix b_matrix(const GaussCode& code, const Coloring& gamma);

// Same, assembled from precomputed interlacement tables (inter2 = inter*inter).
gf2::BitMatrix b_matrix_from(const gf2::BitMatrix& inter, const gf2::BitMatrix& inter2,
                             const Coloring& gamma);

// rank of the b matrix = connectivity of the realizing surface
int connectivity(const GaussCode& code, const Coloring& gamma);

// No odd-interlacement label means no orientation-reversing cycle, for any
// coloring.
bool is_orientable(const GaussCode& code);

struct SurfaceClass {
    enum class Kind { sphere, projective_plane, torus, klein_bottle, higher };
    Kind kind;
    int connectivity;
    bool orientable;

    std::string_view name() const;
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

SurfaceClass classify_surface(const GaussCode& code, const Coloring& gamma);

// Visits all 2^n colorings in ascending numeric order with their surface
// connectivity; stops early when fn returns false. Requires n <= 63.
void for_each_coloring_connectivity(const GaussCode& code,
                                    const std::function<bool(std::uint64_t mask, int conn)>& fn);

struct MinConn2 {
    int connectivity;
    Coloring witness; // first minimizer in numeric gamma order
};

MinConn2 min_conn2(const GaussCode& code, int n_limit = 20);

} // namespace lacet
