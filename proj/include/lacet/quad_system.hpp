#pragma once

// Quadratic systems over Z2 characterizing realizability on a surface of
// connectivity at most p: the alpha/beta constant tables, the n^2 scalar
// equations over gamma, delta, epsilon, constructive solving for a fixed
// coloring via rank factorization, the exhaustive conn2 decision, and ANF
// text export.

#include "lacet/lacet_algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lacet {

struct QuadraticSystem {
    int n = 0;
    int p = 0;
    gf2::BitMatrix alpha; // alpha[x-1][y-1] = 1 iff y in interlace(x)
    gf2::BitMatrix beta;  // beta[x-1][y-1] = 1 iff y in interlace(x) + interlace_squared(x)

    std::size_t equations() const { return static_cast<std::size_t>(n) * n; }
    std::size_t variables() const { return static_cast<std::size_t>(n) * (2 * p + 1); }
};

std::pair<gf2::BitMatrix, gf2::BitMatrix> alpha_beta(const GaussCode& code);

// Equations alpha_xy (gamma_x + gamma_y) + sum_j delta_yj epsilon_xj = beta_xy
// for all x, y in E, over the n(2p+1) variables gamma, delta, epsilon.
QuadraticSystem build_quadratic(const GaussCode& code, int p);

struct QuadAssignment {
    Coloring gamma;
    gf2::BitMatrix delta;   // n x p
    gf2::BitMatrix epsilon; // n x p
};

// Violated (x, y) pairs, 1-based, x-major order; empty iff satisfied.
std::vector<std::pair<int, int>> evaluate(const QuadraticSystem& sys, const QuadAssignment& a);

// For fixed gamma the system asks for an inner-dimension-p factorization of
// the b matrix; solved by rank factorization, infeasible exactly when
// rank(b) > p.
std::variant<QuadAssignment, gf2::RankExceedsP> solve_fixed_gamma(const GaussCode& code,
                                                                  const Coloring& gamma, int p);

struct Conn2Decision {
    bool satisfiable;
    std::optional<QuadAssignment> witness; // first witness in numeric gamma order
};

// conn2(code) <= p, decided by sweeping all 2^n colorings.
Conn2Decision decide_conn2_le_p(const GaussCode& code, int p, int n_limit = 20);

// One "# n=.. p=.. vars=.." header line, then one polynomial-= 0 line per
// equation (x-major then y) over variables g<x>, d<x>_<j>, e<x>_<j>.
std::string export_anf(const QuadraticSystem& sys);

} // namespace lacet
