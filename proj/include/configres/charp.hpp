#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "configres/arith/poly.hpp"
#include "configres/config.hpp"

namespace configres {

/// (I | B) after the column permutation: column k of `config` is column permutation[k] of the input.
struct StandardForm {
    Configuration config;
    std::vector<std::size_t> permutation;
};

/// Throws RankDeficient.
StandardForm row_reduce_to_standard(const Configuration& c);

/// x1 > ... > xn compared lexicographically, ties broken by u1 > ... > ur.
TermOrder x_then_u_order(std::size_t n, std::size_t r);

/// Re-checkable record of a certificate-level verification.
struct Certificate {
    std::string kind;  // InitialIdeal, FPurity or Linkage
    std::string order = "x-lex,u-lex";
    std::vector<std::string> leads;
    std::string witness;
    std::uint64_t p = 0;
    bool pass = false;
    std::string reason;
    std::vector<std::size_t> permutation;
    std::vector<std::string> generators;
    std::vector<std::string> cited;  // conclusions quoted from the literature, not computed here

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Checks lead(q_i) = x_i u_i, squarefree and pairwise coprime; throws OrderViolation otherwise.
/// With `strict`, also reduces every S-pair of the q_i to zero by full division.
Certificate lead_term_certificate(const Configuration& c, bool strict = false);

/// S-pairs of the q_i all reduce to zero under the block order.
bool s_pairs_reduce_to_zero(const Configuration& c);

/// Witness lead(Q)^{p-1} = prod (x_i u_i)^{p-1} with Q = prod q_i over F_p; throws LeadTermFailure.
/// With `expand`, Q^{p-1} is also multiplied out and its lead compared.
Certificate fedder_witness(const Configuration& c, std::uint64_t p, bool expand = false);

/// q_1..q_r and psi_W in K[x1..xn, u1..ur]; throws Mismatch if det(Q_W) differs from psi_W.
std::vector<MultiPoly> linkage_generators(const Configuration& c);
Certificate linkage_certificate(const Configuration& c);

}  // namespace configres
