#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "configres/arith/class_poly.hpp"
#include "configres/arith/matrix.hpp"

namespace configres {

/// Subset of the ground set {1..n}; bit i-1 stands for element i.
using Subset = std::uint32_t;

inline constexpr std::size_t kMaxGroundSet = 16;

inline Subset full_set(std::size_t n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
inline Subset element(std::size_t i) { return Subset{1} << (i - 1); }  // 1-based
inline int cardinality(Subset s) { return __builtin_popcount(s); }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

/// "∅", "E", "124"; elements are comma separated once n exceeds 9.
std::string subset_label(Subset s, std::size_t n);
/// Inverse of subset_label; also accepts "empty", "0" for the empty set and "1,2,4".
Subset parse_subset(const std::string& text, std::size_t n);

struct FlatLattice {
    std::vector<Subset> flats;                       // sorted by (rank, bitmask)
    std::vector<int> ranks;                          // parallel to flats
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) indices

    std::size_t size() const { return flats.size(); }
    bool contains(Subset s) const;
    /// Proper flats: every flat except E (including the closure of the empty set).
    std::vector<Subset> proper() const;
};

/// Matroid on {1..n} with explicitly stored bases (bitmasks, sorted, no duplicates).
class Matroid {
public:
    /// Validates equal cardinality and (for n <= 10) the basis-exchange axiom.
    static Matroid from_bases(std::size_t n, std::vector<Subset> bases);
    static Matroid uniform(std::size_t r, std::size_t n);

    std::size_t size() const noexcept { return n_; }
    int rank() const noexcept { return r_; }
    Subset ground() const { return full_set(n_); }
    const std::vector<Subset>& bases() const noexcept { return bases_; }
    bool is_basis(Subset s) const;

    friend bool operator==(const Matroid&, const Matroid&) = default;

private:
    Matroid(std::size_t n, int r, std::vector<Subset> bases) : n_(n), r_(r), bases_(std::move(bases)) {}

    std::size_t n_ = 0;
    int r_ = 0;
    std::vector<Subset> bases_;
};

/// Column matroid of a full-row-rank r x n matrix with 0 < r < n.
Matroid matroid_from_matrix(const Matrix& a);
/// Cycle matroid of a connected graph; edges labeled 1..n in input order.
Matroid matroid_from_graph(const std::vector<std::pair<int, int>>& edges);
/// Oriented vertex-edge incidence matrix with the row of the first vertex removed.
Matrix graph_incidence_matrix(const std::vector<std::pair<int, int>>& edges);

int rank_of(const Matroid& m, Subset s);
Subset closure(const Matroid& m, Subset s);
bool is_flat(const Matroid& m, Subset s);
FlatLattice flats(const Matroid& m);

Matroid dual(const Matroid& m);
/// Minors on E \ f, relabeled to 1..n-|f| preserving order.
Matroid delete_elements(const Matroid& m, Subset f);
Matroid contract(const Matroid& m, Subset f);

Subset loops(const Matroid& m);
Subset coloops(const Matroid& m);
bool is_connected(const Matroid& m);
bool is_round(const Matroid& m);

/// chi_M(t) via the Moebius function of the flat lattice; throws HasLoops.
ClassPoly char_poly(const Matroid& m);
/// chi_M(t) / (t - 1); throws HasLoops, NonDivisible.
ClassPoly reduced_char_poly(const Matroid& m);

}  // namespace configres
