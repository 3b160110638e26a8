#include "lacet/klein_system.hpp"

#include "lacet/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace lacet {

namespace {

// Row template per class: coefficients of gamma_k, gamma_l, delta_k,
// delta_l and the right-hand side.
struct RowPattern {
    bool gk, gl, dk, dl, rhs;
};

constexpr std::array<RowPattern, 12> kPatterns{{
    {0, 0, 1, 1, 0}, // I1
    {1, 1, 1, 1, 1}, // I2
    {1, 1, 1, 1, 0}, // I3
    {0, 0, 0, 1, 1}, // I4
    {1, 1, 0, 1, 0}, // I5
    {1, 1, 0, 1, 1}, // I6
    {0, 0, 1, 0, 1}, // I7
    {1, 1, 1, 0, 0}, // I8
    {1, 1, 1, 0, 1}, // I9
    {0, 0, 0, 0, 1}, // I10
    {1, 1, 0, 0, 0}, // I11
    {1, 1, 0, 0, 1}, // I12
}};

ImplicationClass classify_from(const gf2::BitMatrix& inter, const gf2::BitMatrix& inter2,
                               int k, int l) {
    const bool in_i = inter.at(k - 1, static_cast<std::size_t>(l) - 1);
    const bool in_i2 = inter2.at(k - 1, static_cast<std::size_t>(l) - 1);
    if (!in_i && !in_i2) return ImplicationClass::i13;
    const bool k_odd = inter.row(k - 1).odd();
    const bool l_odd = inter.row(static_cast<std::size_t>(l) - 1).odd();
    const int block = (k_odd ? 0 : 2) + (l_odd ? 0 : 1);
    const int kind = in_i2 && !in_i ? 0 : (in_i && in_i2 ? 1 : 2);
    return static_cast<ImplicationClass>(block * 3 + kind + 1);
}

} // namespace

std::string_view to_string(ImplicationClass cls) {
    static constexpr std::array<std::string_view, 13> names{
        "I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10", "I11", "I12", "I13"};
    return names[static_cast<int>(cls) - 1];
}

ImplicationClass classify_pair(const GaussCode& code, int k, int l) {
    if (k == l) fail(Errc::same_pair, "pair (" + std::to_string(k) + "," + std::to_string(l) +
                                          ") has equal elements");
    const EdgeSet ik = interlace(code, k);
    const EdgeSet i2k = interlace_squared(code, k);
    const bool in_i = ik.test(static_cast<std::size_t>(l) - 1);
    const bool in_i2 = i2k.test(static_cast<std::size_t>(l) - 1);
    if (!in_i && !in_i2) return ImplicationClass::i13;
    const bool k_odd = ik.odd();
    const bool l_odd = interlace(code, l).odd();
    const int block = (k_odd ? 0 : 2) + (l_odd ? 0 : 1);
    const int kind = in_i2 && !in_i ? 0 : (in_i && in_i2 ? 1 : 2);
    return static_cast<ImplicationClass>(block * 3 + kind + 1);
}

KleinLinearSystem build_system(const GaussCode& code) {
    const int n = code.n();
    const gf2::BitMatrix inter = interlace_matrix(code);
    const gf2::BitMatrix inter2 = inter * inter;

    KleinLinearSystem sys;
    sys.n = n;
    std::vector<bool> rhs_bits;
    for (int k = 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
            const ImplicationClass cls = classify_from(inter, inter2, k, l);
            if (cls == ImplicationClass::i13) continue;
            const RowPattern& pat = kPatterns[static_cast<int>(cls) - 1];
            gf2::BitVec row(2 * static_cast<std::size_t>(n));
            if (pat.gk) row.set(k - 1);
            if (pat.gl) row.set(static_cast<std::size_t>(l) - 1);
            if (pat.dk) row.set(static_cast<std::size_t>(n) + k - 1);
            if (pat.dl) row.set(static_cast<std::size_t>(n) + l - 1);
            sys.lhs.append_row(std::move(row));
            rhs_bits.push_back(pat.rhs);
            sys.origin.push_back(RowOrigin{k, l, cls});
        }
    }
    if (sys.lhs.rows() == 0) sys.lhs = gf2::BitMatrix(0, 2 * static_cast<std::size_t>(n));
    sys.rhs = gf2::BitVec(rhs_bits.size());
    for (std::size_t i = 0; i < rhs_bits.size(); ++i)
        if (rhs_bits[i]) sys.rhs.set(i);
    return sys;
}

std::string dump_system(const KleinLinearSystem& sys) {
    std::ostringstream out;
    out << sys.m() << ' ' << sys.n << '\n';
    for (std::size_t i = 0; i < sys.m(); ++i) out << sys.lhs.row(i).to_string() << '\n';
    out << sys.rhs.to_string() << '\n';
    for (const auto& o : sys.origin) out << o.k << ' ' << o.l << ' ' << to_string(o.cls) << '\n';
    return out.str();
}

PartitionWitness solution_partition(const GaussCode& code, const KleinSolution& sol) {
    if (sol.gamma.n() != code.n() || static_cast<int>(sol.delta.size()) != code.n())
        fail(Errc::dimension_mismatch, "solution dimensions do not match the code");
    const ParityPartition pp = parity_partition(code);
    PartitionWitness w;
    w.o0 = pp.odd & ~sol.delta;
    w.o1 = pp.odd & sol.delta;
    w.e0 = pp.even & ~sol.delta;
    w.e1 = pp.even & sol.delta;
    return w;
}

bool verify_solution(const GaussCode& code, const KleinSolution& sol) {
    const int n = code.n();
    if (sol.gamma.n() != n || static_cast<int>(sol.delta.size()) != n)
        fail(Errc::dimension_mismatch, "solution dimensions do not match the code");
    const ParityPartition pp = parity_partition(code);
    const PartitionWitness w = solution_partition(code, sol);
    const gf2::BitMatrix b = b_matrix(code, sol.gamma);

    const EdgeSet on_o0 = w.o0 | w.e1;
    const EdgeSet on_o1 = w.o1 | w.e1;
    const EdgeSet empty(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        const EdgeSet& expected = w.o0.test(x)   ? on_o0
                                  : w.o1.test(x) ? on_o1
                                  : w.e0.test(x) ? empty
                                                 : pp.odd;
        if (b.row(x) != expected) return false;
    }

    if (!pp.odd.none() && gf2::rank(b) == 2) {
        // Klein side condition, labeling-swap tolerant: with O0, O1, E1 at
        // least two must be nonempty.
        const int nonempty = (w.o0.any() ? 1 : 0) + (w.o1.any() ? 1 : 0) + (w.e1.any() ? 1 : 0);
        if (nonempty < 2) return false;
    }
    return true;
}

RealizabilityReport solve_realizability(const GaussCode& code, std::uint64_t max_enum) {
    const int n = code.n();
    RealizabilityReport report{build_system(code), Realizable{}};
    const gf2::AffineSolveOutcome outcome = gf2::solve_affine(report.system.lhs, report.system.rhs);

    if (const auto* inf = std::get_if<gf2::Infeasible>(&outcome)) {
        report.outcome = NotRealizable{inf->certificate};
        return report;
    }

    const auto& sols = std::get<gf2::Solutions>(outcome);
    Realizable out;
    out.affine_dim = sols.nullspace.size();
    for (const gf2::BitVec& xi : gf2::enumerate_affine(sols, max_enum)) {
        KleinSolution sol{Coloring(xi.slice(0, n)), xi.slice(n, n)};
        RealizedSolution rs{sol, classify_surface(code, sol.gamma),
                            solution_partition(code, sol), verify_solution(code, sol)};
        out.solutions.push_back(std::move(rs));
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const RealizedSolution& a, const RealizedSolution& b) {
                  if (a.solution.gamma.bits() != b.solution.gamma.bits())
                      return gf2::lex_less(a.solution.gamma.bits(), b.solution.gamma.bits());
                  return gf2::lex_less(a.solution.delta, b.solution.delta);
              });
    report.outcome = std::move(out);
    return report;
}

} // namespace lacet
