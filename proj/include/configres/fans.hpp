#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "configres/matroid.hpp"

namespace configres {

/// Element of N_{E,E} = Z^E/Z(1..1) + Z^E/Z(1..1): an e-block and an f-block.
/// Each block is stored with its minimum shifted to 0, so equal classes compare equal.
struct LatticeVector {
    std::vector<std::int64_t> e;
    std::vector<std::int64_t> f;

    LatticeVector() = default;
    LatticeVector(std::vector<std::int64_t> e_block, std::vector<std::int64_t> f_block);

    static LatticeVector zero(std::size_t n);
    /// e_S (f_S when `second_block`).
    static LatticeVector indicator(std::size_t n, Subset s, bool second_block = false);

    std::size_t size() const { return e.size(); }
    bool is_zero() const;
    /// gcd of the entries of the canonical blocks is 1.
    bool is_primitive() const;

    LatticeVector operator+(const LatticeVector& rhs) const;
    LatticeVector operator-() const;
    LatticeVector operator*(std::int64_t k) const;
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

    /// Coordinates in Z^{2(n-1)} via x_i - x_n in each block.
    std::vector<std::int64_t> reduced_coordinates() const;
    std::string to_string() const;
};

enum class MuDirection { Forward, Inverse, Minus };
/// Forward: (x,y) -> (x, x+y); Inverse: (x,y) -> (x, y-x); Minus: (x,y) -> (-x, -x-y).
LatticeVector mu_apply(const LatticeVector& v, MuDirection direction);

struct SquareBiflat {
    Subset F;  // flat of M
    Subset G;  // flat of the dual matroid
    friend bool operator==(const SquareBiflat&, const SquareBiflat&) = default;
    friend auto operator<=>(const SquareBiflat&, const SquareBiflat&) = default;
};
/// "124⊆E".
std::string biflat_label(const SquareBiflat& b, std::size_t n);
SquareBiflat parse_biflat(const std::string& text, std::size_t n);

/// Simplicial fan given by rays and its maximal cones (sorted ray indices).
/// A fan without cones is the trivial fan {0}.
struct Fan {
    std::size_t n = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> cones;

    std::size_t ray_index(const LatticeVector& v) const;  // npos when absent
    int dimension() const;
};

using Cone = std::vector<LatticeVector>;

Cone cone_generators(const Fan& fan, const std::vector<std::size_t>& cone);
/// Every face of every maximal cone, including the empty face.
std::set<std::vector<std::size_t>> all_cones(const Fan& fan);
/// Drops cones contained in another cone of the list; sorts the result.
std::vector<std::vector<std::size_t>> maximal_only(std::vector<std::vector<std::size_t>> cones);
std::size_t count_maximal_cones(const Fan& fan);
/// Rank of the generators over Q.
std::size_t cone_dimension(const Cone& c);

/// Rays e_F for nonempty proper flats, cones from strict flags; throws HasLoops.
Fan bergman_fan(const Matroid& m);

/// All (F, G) with F a flat of M, G a flat of the dual, F in G, and (E\F)|G a bisubset.
/// Throws LoopOrColoop.
std::vector<SquareBiflat> square_biflats(const Matroid& m);

/// Biflag test: the pairs (E\F_i, G_i) are totally ordered by S increasing with T
/// decreasing and the union of the G_i \ F_i is not E.
bool is_biflag(const std::vector<SquareBiflat>& family, std::size_t n);

/// Rays -e_F + f_G over square biflats, cones over maximal biflags.
Fan square_conormal_fan(const Matroid& m);
/// -mu applied to the square conormal fan: rays e_F - f_{G\F}.
Fan delta_tilde_fan(const Matroid& m);
/// -mu((-Sigma_M) x Sigma_{M perp}): rays (e_F, e_F) and (0, -f_G), cones are products of flags.
Fan delta_fan(const Matroid& m);

/// Generators extend to a lattice basis; false when not linearly independent.
bool is_unimodular(const Cone& c);

enum class Block { First, Second };
enum class Sign { Plus, Minus };
/// The projected and signed generators share a coordinate where each attains its minimum.
bool maps_into_coordinate_fan(const Cone& c, Block block, Sign sign);

/// Subdivision certificate; throws NotPure or NotSimplicial.
struct RefinementReport {
    bool ok = false;
    std::string reason;  // empty when ok
};
RefinementReport check_refinement(const Fan& fine, const Fan& coarse);
bool refines(const Fan& fine, const Fan& coarse);

/// The divisors of the given biflats meet; equivalently they form a biflag.
bool divisor_incidence(const std::vector<SquareBiflat>& biflats, std::size_t n);

/// Induced subfan of delta_tilde on biflats F' in G' with F' in F and G' \ F' in S; throws NotAFlat.
Fan fibre_fan(const Matroid& m, Subset flat, Subset s);

/// Labels of maximal cones of `fan` failing maps_into_coordinate_fan(block, sign).
std::vector<std::string> coordinate_fan_failures(const Fan& fan, Block block, Sign sign);

}  // namespace configres
