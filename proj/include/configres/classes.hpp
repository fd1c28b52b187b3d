#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "configres/arith/class_poly.hpp"
#include "configres/matroid.hpp"

namespace configres {

/// Sum over flats F != E of rbar_{M/F}(L) [P^{n - rank(M \ F) - 1}].
/// Throws NotConnected, HasLoops, DivisionFailure.
ClassPoly motivic_class(const Matroid& m);

/// [X_G] for the Fig-1 graph via (2L+1) + [Lambda_G] - (L+1)(2L+1).
ClassPoly x_motivic_example();

/// Coefficients of H^i H*^j in a class of the biprojective space.
struct BiDegree {
    std::map<std::pair<int, int>, std::int64_t> coeffs;
    /// "H^5+3H^4H*+3H^3H*^2+H^2H*^3", highest H-power first.
    std::string to_string() const;
};

/// [H]^{n-r} ([H] + [H*])^r; throws InvalidArgument unless 0 < r < n.
BiDegree chow_bidegree(int n, int r);

/// Graded ranks of Z[a,b]/(a^r, sum_k C(n,k) (-a)^k b^{n-r-k}) in degrees 0, 1, ...,
/// trailing zeros dropped. Throws NotRound, Degenerate (r = 1).
std::vector<std::int64_t> cohomology_basis(const Matroid& m);

struct BettiTable {
    /// modules[i] lists (twist, multiplicity) of F_i, twists decreasing.
    std::vector<std::vector<std::pair<int, std::int64_t>>> modules;

    std::int64_t rank(std::size_t i) const;
    /// sum_i (-1)^i sum mult * t^{-twist}.
    ClassPoly k_polynomial() const;
    std::string to_string() const;
};

/// Minimal free resolution of R/(I_W + psi_W) over K[u, x]; throws InvalidArgument unless 0 < r < n.
BettiTable resolution_betti(int n, int r);
int a_invariant(int n, int r);
/// Rank of the last module of the resolution.
std::int64_t resolution_type(int n, int r);

std::int64_t binomial(int n, int k);

}  // namespace configres
