#include "lacet/lacet_algebra.hpp"

#include "lacet/errors.hpp"
#include "example_data.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace lacet;
using testutil::make_set;

namespace {

const GaussCode& ref_code() {
    static const GaussCode code = parse_gauss_code(refdata::kCode);
    return code;
}

const Coloring& ref_gamma() {
    static const Coloring gamma = Coloring::from_string(refdata::kGamma);
    return gamma;
}

// compositional route, independent of the formula used by b_map
EdgeSet b_by_composition(const GaussCode& code, const Coloring& gamma, int x) {
    const EdgeSet cx = c_map(code, gamma, x);
    return c_map(code, gamma, cx) ^ cx;
}

} // namespace

TEST_CASE("coloring accessors") {
    const Coloring gamma = ref_gamma();
    CHECK(gamma.n() == 8);
    CHECK(gamma.black(3));
    CHECK_FALSE(gamma.black(1));
    CHECK(gamma.to_string() == refdata::kGamma);
    CHECK(Coloring::from_mask(8, 0b00111011) == gamma);
    CHECK_THROWS_AS(Coloring::from_string("0102"), Error);
}

TEST_CASE("kappa") {
    const Coloring gamma = ref_gamma();
    CHECK(kappa(gamma, 3) == make_set(8, {3}));
    CHECK(kappa(gamma, 1) == make_set(8, {}));
    CHECK_THROWS_AS(kappa(gamma, 9), Error);

    // linear on sets: kappa(A ^ B) = kappa(A) ^ kappa(B)
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        EdgeSet a(8), b(8);
        for (int i = 0; i < 8; ++i) {
            if (rng() & 1) a.set(i);
            if (rng() & 1) b.set(i);
        }
        CHECK(kappa(gamma, a ^ b) == (kappa(gamma, a) ^ kappa(gamma, b)));
    }
}

TEST_CASE("c map and antimap on the reference code") {
    const GaussCode& code = ref_code();
    const Coloring& gamma = ref_gamma();
    for (int x = 1; x <= 8; ++x) {
        CHECK(c_map(code, gamma, x) == make_set(8, refdata::kCTable[x - 1]));
        CHECK(c_antimap(code, gamma, x) == make_set(8, refdata::kCAntiTable[x - 1]));
        // antimap differs from the map exactly at x
        CHECK((c_map(code, gamma, x) ^ c_antimap(code, gamma, x)) == make_set(8, {x}));
    }
}

TEST_CASE("c map on the one-crossing code") {
    const GaussCode one = parse_gauss_code("1 1");
    CHECK(c_map(one, Coloring::from_string("1"), 1) == make_set(1, {1}));
    CHECK(c_map(one, Coloring::from_string("0"), 1) == make_set(1, {}));
    CHECK_THROWS_AS(c_map(one, Coloring::from_string("11"), 1), Error);
}

TEST_CASE("b map on the reference code") {
    const GaussCode& code = ref_code();
    const Coloring& gamma = ref_gamma();
    for (int x = 1; x <= 8; ++x)
        CHECK(b_map(code, gamma, x) == make_set(8, refdata::kBTable[x - 1]));
}

TEST_CASE("b map small cases with compositional cross-check") {
    const GaussCode code = parse_gauss_code("1 2 1 2");
    const Coloring white = Coloring::from_string("00");
    CHECK(b_map(code, white, 1) == make_set(2, {1, 2}));
    CHECK(b_map(code, white, 1) == b_by_composition(code, white, 1));

    const Coloring mixed = Coloring::from_string("01");
    const gf2::BitMatrix b = b_matrix(code, mixed);
    CHECK(b.row(0) == make_set(2, {1}));
    CHECK(b.row(1) == make_set(2, {2}));
}

TEST_CASE("b agrees with the compositional route everywhere") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& word : testutil::all_matching_words(n)) {
            const GaussCode code = GaussCode::from_sequence(word);
            for (const auto& gamma : testutil::all_colorings(n))
                for (int x = 1; x <= n; ++x)
                    CHECK(b_map(code, gamma, x) == b_by_composition(code, gamma, x));
        }
    }
    std::mt19937 rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 8);
        const GaussCode code = testutil::random_code(rng, n);
        const Coloring gamma = Coloring::from_mask(n, rng() & ((1u << n) - 1));
        for (int x = 1; x <= n; ++x)
            CHECK(b_map(code, gamma, x) == b_by_composition(code, gamma, x));
    }
}

TEST_CASE("dual-path b identity, exhaustive through n = 6") {
    // matrix form of the same identity: with C = interlacement + black
    // diagonal, B = C*C + C row by row
    for (int n = 1; n <= 6; ++n) {
        std::size_t violations = 0;
        for (const auto& word : testutil::all_matching_words(n)) {
            const GaussCode code = GaussCode::from_sequence(word);
            const gf2::BitMatrix inter = interlace_matrix(code);
            const gf2::BitMatrix inter2 = inter * inter;
            for (const auto& gamma : testutil::all_colorings(n)) {
                gf2::BitMatrix c = inter;
                for (int x = 0; x < n; ++x)
                    if (gamma.bits().test(x)) c.set(x, x);
                gf2::BitMatrix composed = c * c;
                for (int x = 0; x < n; ++x) composed.row(x) ^= c.row(x);
                if (composed != b_matrix_from(inter, inter2, gamma)) ++violations;
            }
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("b matrix structure") {
    const gf2::BitMatrix b = b_matrix(ref_code(), ref_gamma());
    for (std::size_t x = 0; x < 8; ++x)
        CHECK(b.row(x) == make_set(8, refdata::kBTable[x]));

    CHECK(b_matrix(parse_gauss_code("1 1"), Coloring::from_string("1")) == gf2::BitMatrix(1, 1));
}

TEST_CASE("connectivity") {
    CHECK(connectivity(ref_code(), ref_gamma()) == 2);
    CHECK(connectivity(parse_gauss_code("1 1"), Coloring::from_string("0")) == 0);
    const GaussCode code = parse_gauss_code("1 2 1 2");
    CHECK(connectivity(code, Coloring::from_string("00")) == 1);
    CHECK(connectivity(code, Coloring::from_string("01")) == 2);
}

TEST_CASE("orientability") {
    CHECK_FALSE(is_orientable(ref_code()));
    CHECK(is_orientable(parse_gauss_code("1 1")));
    CHECK_FALSE(is_orientable(parse_gauss_code("1 2 1 2")));
    CHECK(is_orientable(parse_gauss_code("1 2 3 1 2 3")));
}

TEST_CASE("surface classification") {
    CHECK(classify_surface(ref_code(), ref_gamma()).kind == SurfaceClass::Kind::klein_bottle);
    CHECK(classify_surface(parse_gauss_code("1 2 1 2"), Coloring::from_string("00")).kind ==
          SurfaceClass::Kind::projective_plane);
    CHECK(classify_surface(parse_gauss_code("1 1"), Coloring::from_string("0")).kind ==
          SurfaceClass::Kind::sphere);
    CHECK(classify_surface(parse_gauss_code("1 2 1 2"), Coloring::from_string("01")).kind ==
          SurfaceClass::Kind::klein_bottle);

    // an orientable code at even connectivity 2: the torus
    const GaussCode trefoil = parse_gauss_code("1 2 3 1 2 3");
    const SurfaceClass torus = classify_surface(trefoil, Coloring::from_string("100"));
    CHECK(torus.kind == SurfaceClass::Kind::torus);
    CHECK(torus.orientable);
    CHECK(torus.connectivity == 2);
    CHECK(torus.name() == "torus");
}

TEST_CASE("parity of connectivity matches orientability on small codes") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& word : testutil::all_matching_words(n)) {
            const GaussCode code = GaussCode::from_sequence(word);
            const bool orientable = is_orientable(code);
            for (const auto& gamma : testutil::all_colorings(n)) {
                const SurfaceClass sc = classify_surface(code, gamma); // must not throw
                if (orientable) CHECK(sc.connectivity % 2 == 0);
            }
        }
    }
}

TEST_CASE("min_conn2") {
    const MinConn2 tiny = min_conn2(parse_gauss_code("1 1"));
    CHECK(tiny.connectivity == 0);
    CHECK(tiny.witness == Coloring::from_string("0"));

    const MinConn2 rp2 = min_conn2(parse_gauss_code("1 2 1 2"));
    CHECK(rp2.connectivity == 1);
    CHECK(rp2.witness == Coloring::from_string("00"));

    const MinConn2 ref = min_conn2(ref_code());
    CHECK(ref.connectivity <= 2);
    CHECK(connectivity(ref_code(), ref.witness) == ref.connectivity);
    // the witness is the first minimizer in numeric order
    bool earlier_beats = false;
    for (std::uint64_t mask = 0;
         mask < (std::uint64_t{1} << 8) && Coloring::from_mask(8, mask) != ref.witness; ++mask)
        if (connectivity(ref_code(), Coloring::from_mask(8, mask)) <= ref.connectivity)
            earlier_beats = true;
    CHECK_FALSE(earlier_beats);

    CHECK_THROWS_AS(min_conn2(ref_code(), 4), Error);
    try {
        min_conn2(ref_code(), 4);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::too_large);
    }
}

TEST_CASE("min_conn2 lower-bounds every sampled coloring") {
    std::mt19937 rng(707);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const GaussCode code = testutil::random_code(rng, n);
        const MinConn2 mc = min_conn2(code);
        for (const auto& gamma : testutil::all_colorings(n))
            CHECK(mc.connectivity <= connectivity(code, gamma));
    }
}
