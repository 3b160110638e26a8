#include "lacet/quad_system.hpp"

#include "lacet/errors.hpp"

#include <sstream>

namespace lacet {

std::pair<gf2::BitMatrix, gf2::BitMatrix> alpha_beta(const GaussCode& code) {
    const gf2::BitMatrix inter = interlace_matrix(code);
    const gf2::BitMatrix inter2 = inter * inter;
    gf2::BitMatrix beta = inter;
    for (std::size_t x = 0; x < beta.rows(); ++x) beta.row(x) ^= inter2.row(x);
    return {inter, std::move(beta)};
}

QuadraticSystem build_quadratic(const GaussCode& code, int p) {
    if (p < 0) fail(Errc::dimension_mismatch, "p must be nonnegative");
    auto [alpha, beta] = alpha_beta(code);
    return QuadraticSystem{code.n(), p, std::move(alpha), std::move(beta)};
}

std::vector<std::pair<int, int>> evaluate(const QuadraticSystem& sys, const QuadAssignment& a) {
    const std::size_t n = static_cast<std::size_t>(sys.n);
    const std::size_t p = static_cast<std::size_t>(sys.p);
    if (a.gamma.n() != sys.n || a.delta.rows() != n || a.epsilon.rows() != n ||
        a.delta.cols() != p || a.epsilon.cols() != p)
        fail(Errc::dimension_mismatch, "assignment dimensions do not match the system");

    std::vector<std::pair<int, int>> violated;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            bool lhs = a.delta.row(y).dot(a.epsilon.row(x));
            if (sys.alpha.at(x, y) && (a.gamma.bits().test(x) ^ a.gamma.bits().test(y)))
                lhs = !lhs;
            if (lhs != sys.beta.at(x, y))
                violated.emplace_back(static_cast<int>(x) + 1, static_cast<int>(y) + 1);
        }
    }
    return violated;
}

std::variant<QuadAssignment, gf2::RankExceedsP> solve_fixed_gamma(const GaussCode& code,
                                                                  const Coloring& gamma, int p) {
    if (p < 0) fail(Errc::dimension_mismatch, "p must be nonnegative");
    const gf2::BitMatrix b = b_matrix(code, gamma);
    auto factored = gf2::rank_factorize(b.transposed(), static_cast<std::size_t>(p));
    if (const auto* over = std::get_if<gf2::RankExceedsP>(&factored)) return *over;
    auto& factors = std::get<gf2::RankFactors>(factored);
    return QuadAssignment{gamma, std::move(factors.d), std::move(factors.f)};
}

Conn2Decision decide_conn2_le_p(const GaussCode& code, int p, int n_limit) {
    if (p < 0) fail(Errc::dimension_mismatch, "p must be nonnegative");
    const int n = code.n();
    if (n > n_limit)
        fail(Errc::too_large, "n = " + std::to_string(n) + " exceeds the sweep limit " +
                                  std::to_string(n_limit));
    std::optional<std::uint64_t> found;
    for_each_coloring_connectivity(code, [&](std::uint64_t mask, int conn) {
        if (conn <= p) {
            found = mask;
            return false;
        }
        return true;
    });
    if (!found) return Conn2Decision{false, std::nullopt};
    auto assignment = solve_fixed_gamma(code, Coloring::from_mask(n, *found), p);
    return Conn2Decision{true, std::get<QuadAssignment>(std::move(assignment))};
}

std::string export_anf(const QuadraticSystem& sys) {
    std::ostringstream out;
    out << "# n=" << sys.n << " p=" << sys.p << " vars=" << sys.variables() << '\n';
    for (int x = 1; x <= sys.n; ++x) {
        for (int y = 1; y <= sys.n; ++y) {
            std::string line;
            const auto add = [&line](const std::string& term) {
                if (!line.empty()) line += " + ";
                line += term;
            };
            if (sys.alpha.at(x - 1, static_cast<std::size_t>(y) - 1)) {
                add("g" + std::to_string(x));
                add("g" + std::to_string(y));
            }
            for (int j = 1; j <= sys.p; ++j)
                add("d" + std::to_string(y) + "_" + std::to_string(j) + "*e" + std::to_string(x) +
                    "_" + std::to_string(j));
            if (sys.beta.at(x - 1, static_cast<std::size_t>(y) - 1)) add("1");
            if (line.empty()) line = "0";
            out << line << " = 0\n";
        }
    }
    return out.str();
}

} // namespace lacet
