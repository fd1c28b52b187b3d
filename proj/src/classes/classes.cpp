#include "configres/classes.hpp"

#include <algorithm>
#include <functional>

#include "configres/arith/matrix.hpp"
#include "configres/errors.hpp"

namespace configres {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

ClassPoly motivic_class(const Matroid& m) {
    if (loops(m) != 0) throw Error(ErrorCode::HasLoops, "matroid has loops");
    if (!is_connected(m)) throw Error(ErrorCode::NotConnected, "matroid is not connected");
    const int n = static_cast<int>(m.size());
    ClassPoly total;
    for (Subset f : flats(m).proper()) {
        ClassPoly chi_bar;
        if (!char_poly(contract(m, f)).divide_by_t_minus_one(chi_bar))
            throw Error(ErrorCode::DivisionFailure, "chi of M/" + subset_label(f, m.size()) + " is not divisible by L-1");
        const int rest = rank_of(m, m.ground() & ~f);
        total += chi_bar * ClassPoly::projective_space(n - rest - 1);
    }
    return total;
}

ClassPoly x_motivic_example() {
    const Matroid g = matroid_from_graph({{1, 3}, {1, 2}, {3, 4}, {2, 3}, {4, 1}});
    const ClassPoly two_l_plus_one({1, 2});
    return two_l_plus_one + motivic_class(g) - ClassPoly({1, 1}) * two_l_plus_one;
}

std::string BiDegree::to_string() const {
    std::string out;
    auto power = [](const char* sym, int e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(e);
    };
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        auto [ij, c] = *it;
        if (c == 0) continue;
        if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
        std::int64_t a = c < 0 ? -c : c;
        std::string mono = power("H", ij.first) + power("H*", ij.second);
        if (a != 1 || mono.empty()) out += std::to_string(a);
        out += mono;
    }
    return out.empty() ? "0" : out;
}

BiDegree chow_bidegree(int n, int r) {
    if (r <= 0 || r >= n) throw Error(ErrorCode::InvalidArgument, "need 0 < r < n");
    BiDegree d;
    for (int k = 0; k <= r; ++k) d.coeffs[{n - k, k}] = binomial(r, k);
    return d;
}

std::vector<std::int64_t> cohomology_basis(const Matroid& m) {
    const int n = static_cast<int>(m.size()), r = m.rank();
    if (r == 1) throw Error(ErrorCode::Degenerate, "rank 1: the hypersurface is a hyperplane");
    if (!is_round(m)) throw Error(ErrorCode::NotRound, "matroid is not round");
    // g = sum_{k<r} C(n,k) (-a)^k b^{n-r-k}: the terms k >= r vanish modulo a^r, and
    // roundness forces n >= 2r - 1, so no negative power of b survives
    const int gdeg = n - r;
    std::vector<std::pair<int, std::int64_t>> g;  // (power of a, coefficient)
    for (int k = 0; k < r && k <= gdeg; ++k) g.emplace_back(k, (k % 2 ? -1 : 1) * binomial(n, k));

    std::vector<std::int64_t> ranks;
    for (int d = 0; d <= n; ++d) {
        // monomials a^i b^(d-i) are indexed by i; the ideal in degree d is spanned by a^r m and g m
        std::vector<Vector> rows;
        for (int i = 0; i + r <= d; ++i) {
            Vector row(static_cast<std::size_t>(d) + 1, Scalar(0));
            row[static_cast<std::size_t>(i + r)] = Scalar(1);
            rows.push_back(row);
        }
        for (int i = 0; i + gdeg <= d; ++i) {
            Vector row(static_cast<std::size_t>(d) + 1, Scalar(0));
            for (auto [k, c] : g) row[static_cast<std::size_t>(i + k)] += Scalar(static_cast<long>(c));
            rows.push_back(row);
        }
        const std::size_t rk = rows.empty() ? 0 : matrix_rank(Matrix::from_rows(rows));
        ranks.push_back(static_cast<std::int64_t>(d + 1) - static_cast<std::int64_t>(rk));
    }
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return ranks;
}

std::int64_t BettiTable::rank(std::size_t i) const {
    std::int64_t total = 0;
    for (auto [twist, mult] : modules.at(i)) total += mult;
    return total;
}

ClassPoly BettiTable::k_polynomial() const {
    ClassPoly k;
    for (std::size_t i = 0; i < modules.size(); ++i)
        for (auto [twist, mult] : modules[i])
            k += ClassPoly::monomial(static_cast<unsigned>(-twist), i % 2 ? -mult : mult);
    return k;
}

std::string BettiTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        std::string line = "F" + std::to_string(i) + ":";
        line.resize(6, ' ');
        for (std::size_t j = 0; j < modules[i].size(); ++j) {
            auto [twist, mult] = modules[i][j];
            line += (j ? " + " : "") + std::string("R(") + std::to_string(twist) + ")^" + std::to_string(mult);
        }
        out += line + "\n";
    }
    return out;
}

BettiTable resolution_betti(int n, int r) {
    if (r <= 0 || r >= n) throw Error(ErrorCode::InvalidArgument, "need 0 < r < n");
    BettiTable t;
    t.modules.push_back({{0, 1}});
    for (int i = 1; i < r; ++i) {
        std::map<int, std::int64_t, std::greater<>> terms;
        terms[-2 * i] += binomial(r, i);
        terms[-r - i + 1] += binomial(r, i - 1);
        t.modules.emplace_back(terms.begin(), terms.end());
    }
    t.modules.push_back({{1 - 2 * r, binomial(r, r - 1)}});
    return t;
}

int a_invariant(int n, int r) {
    const BettiTable t = resolution_betti(n, r);
    int top = 0;
    for (const auto& mod : t.modules)
        for (auto [twist, mult] : mod) top = std::max(top, -twist);
    return top - (r + n);
}

std::int64_t resolution_type(int n, int r) { return resolution_betti(n, r).rank(static_cast<std::size_t>(r)); }

}  // namespace configres
