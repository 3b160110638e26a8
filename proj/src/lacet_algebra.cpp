#include "lacet/lacet_algebra.hpp"

#include "lacet/errors.hpp"

#include <bit>

namespace lacet {

namespace {

void check_coloring(const GaussCode& code, const Coloring& gamma) {
    if (gamma.n() != code.n())
        fail(Errc::dimension_mismatch, "coloring length " + std::to_string(gamma.n()) +
                                           " != n = " + std::to_string(code.n()));
}

} // namespace

Coloring Coloring::from_mask(int n, std::uint64_t mask) {
    gf2::BitVec bits(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        if ((mask >> (n - k)) & 1) bits.set(k - 1);
    return Coloring(std::move(bits));
}

EdgeSet kappa(const Coloring& gamma, int x) {
    if (x < 1 || x > gamma.n())
        fail(Errc::label_out_of_range, "label " + std::to_string(x) + " outside 1..n");
    EdgeSet out(gamma.n());
    if (gamma.black(x)) out.set(x - 1);
    return out;
}

EdgeSet kappa(const Coloring& gamma, const EdgeSet& a) { return a & gamma.bits(); }

EdgeSet c_map(const GaussCode& code, const Coloring& gamma, int x) {
    check_coloring(code, gamma);
    return kappa(gamma, x) ^ interlace(code, x);
}

EdgeSet c_map(const GaussCode& code, const Coloring& gamma, const EdgeSet& a) {
    EdgeSet acc(code.n());
    for (auto bit : a.set_bits()) acc ^= c_map(code, gamma, static_cast<int>(bit) + 1);
    return acc;
}

EdgeSet c_antimap(const GaussCode& code, const Coloring& gamma, int x) {
    EdgeSet out = c_map(code, gamma, x);
    out.flip(static_cast<std::size_t>(x) - 1);
    return out;
}

EdgeSet b_map(const GaussCode& code, const Coloring& gamma, int x) {
    check_coloring(code, gamma);
    const EdgeSet ix = interlace(code, x);
    const EdgeSet same_color = gamma.black(x) ? ix & gamma.bits() : ix & ~gamma.bits();
    return interlace_squared(code, x) ^ same_color;
}

gf2::BitMatrix b_matrix(const GaussCode& code, const Coloring& gamma) {
    const gf2::BitMatrix inter = interlace_matrix(code);
    return b_matrix_from(inter, inter * inter, gamma);
}

gf2::BitMatrix b_matrix_from(const gf2::BitMatrix& inter, const gf2::BitMatrix& inter2,
                             const Coloring& gamma) {
    const std::size_t n = inter.rows();
    if (gamma.bits().size() != n) fail(Errc::dimension_mismatch, "coloring length != n");
    gf2::BitMatrix b(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        b.row(x) = inter2.row(x);
        b.row(x) ^= gamma.bits().test(x) ? inter.row(x) & gamma.bits()
                                         : inter.row(x) & ~gamma.bits();
    }
    return b;
}

int connectivity(const GaussCode& code, const Coloring& gamma) {
    return static_cast<int>(gf2::rank(b_matrix(code, gamma)));
}

bool is_orientable(const GaussCode& code) { return parity_partition(code).odd.none(); }

std::string_view SurfaceClass::name() const {
    switch (kind) {
    case Kind::sphere: return "sphere";
    case Kind::projective_plane: return "projective_plane";
    case Kind::torus: return "torus";
    case Kind::klein_bottle: return "klein_bottle";
    case Kind::higher: return "higher";
    }
    return "higher";
}

SurfaceClass classify_surface(const GaussCode& code, const Coloring& gamma) {
    const int conn = connectivity(code, gamma);
    const bool orientable = is_orientable(code);
    if (orientable && (conn % 2 != 0))
        fail(Errc::internal_inconsistency,
             "odd connectivity " + std::to_string(conn) + " on an orientable code");
    SurfaceClass::Kind kind = SurfaceClass::Kind::higher;
    if (conn == 0 && orientable)
        kind = SurfaceClass::Kind::sphere;
    else if (conn == 1 && !orientable)
        kind = SurfaceClass::Kind::projective_plane;
    else if (conn == 2 && orientable)
        kind = SurfaceClass::Kind::torus;
    else if (conn == 2 && !orientable)
        kind = SurfaceClass::Kind::klein_bottle;
    return SurfaceClass{kind, conn, orientable};
}

namespace {

// xor-basis rank for single-word rows
int rank_words(const std::uint64_t* rows, int n) {
    std::uint64_t basis[64] = {0};
    int r = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t v = rows[i];
        while (v) {
            const int hi = 63 - std::countl_zero(v);
            if (!basis[hi]) {
                basis[hi] = v;
                ++r;
                break;
            }
            v ^= basis[hi];
        }
    }
    return r;
}

} // namespace

void for_each_coloring_connectivity(const GaussCode& code,
                                    const std::function<bool(std::uint64_t, int)>& fn) {
    const int n = code.n();
    if (n > 63) fail(Errc::too_large, "coloring sweep supports n <= 63");

    // packed tables: word bit x-1 <-> label x
    std::vector<std::uint64_t> inter(n, 0), inter2(n, 0);
    const gf2::BitMatrix im = interlace_matrix(code);
    const gf2::BitMatrix im2 = im * im;
    for (int x = 0; x < n; ++x) {
        for (auto b : im.row(x).set_bits()) inter[x] |= std::uint64_t{1} << b;
        for (auto b : im2.row(x).set_bits()) inter2[x] |= std::uint64_t{1} << b;
    }

    const std::uint64_t span = std::uint64_t{1} << n;
    std::vector<std::uint64_t> rows(n);
    for (std::uint64_t mask = 0; mask < span; ++mask) {
        std::uint64_t packed = 0; // bit x-1 = gamma_x
        for (int k = 1; k <= n; ++k)
            if ((mask >> (n - k)) & 1) packed |= std::uint64_t{1} << (k - 1);
        for (int x = 0; x < n; ++x) {
            const std::uint64_t same =
                (packed >> x) & 1 ? inter[x] & packed : inter[x] & ~packed;
            rows[x] = inter2[x] ^ same;
        }
        if (!fn(mask, rank_words(rows.data(), n))) return;
    }
}

MinConn2 min_conn2(const GaussCode& code, int n_limit) {
    const int n = code.n();
    if (n > n_limit)
        fail(Errc::too_large, "n = " + std::to_string(n) + " exceeds the sweep limit " +
                                  std::to_string(n_limit));
    int best = n + 1;
    std::uint64_t best_mask = 0;
    for_each_coloring_connectivity(code, [&](std::uint64_t mask, int conn) {
        if (conn < best) {
            best = conn;
            best_mask = mask;
        }
        return best > 0;
    });
    return MinConn2{best, Coloring::from_mask(n, best_mask)};
}

} // namespace lacet
