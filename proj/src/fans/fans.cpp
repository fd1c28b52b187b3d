#include "configres/fans.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include <gmpxx.h>

#include "configres/arith/matrix.hpp"
#include "configres/errors.hpp"

namespace configres {

namespace {

void normalize_block(std::vector<std::int64_t>& block) {
    if (block.empty()) return;
    const std::int64_t lo = *std::min_element(block.begin(), block.end());
    for (auto& x : block) x -= lo;
}

std::int64_t gcd_of(const std::vector<std::int64_t>& xs) {
    std::int64_t g = 0;
    for (auto x : xs) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

}  // namespace

LatticeVector::LatticeVector(std::vector<std::int64_t> e_block, std::vector<std::int64_t> f_block)
    : e(std::move(e_block)), f(std::move(f_block)) {
    if (e.size() != f.size()) throw Error(ErrorCode::InvalidArgument, "lattice blocks differ in length");
    normalize_block(e);
    normalize_block(f);
}

LatticeVector LatticeVector::zero(std::size_t n) { return LatticeVector(std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0)); }

LatticeVector LatticeVector::indicator(std::size_t n, Subset s, bool second_block) {
    std::vector<std::int64_t> ind(n, 0), none(n, 0);
    for (std::size_t i = 1; i <= n; ++i)
        if (s & element(i)) ind[i - 1] = 1;
    return second_block ? LatticeVector(none, ind) : LatticeVector(ind, none);
}

bool LatticeVector::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; }) &&
           std::all_of(f.begin(), f.end(), [](auto x) { return x == 0; });
}

bool LatticeVector::is_primitive() const { return std::gcd(gcd_of(e), gcd_of(f)) == 1; }

LatticeVector LatticeVector::operator+(const LatticeVector& rhs) const {
    std::vector<std::int64_t> a(e), b(f);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += rhs.e[i];
        b[i] += rhs.f[i];
    }
    return LatticeVector(a, b);
}

LatticeVector LatticeVector::operator-() const { return *this * -1; }

LatticeVector LatticeVector::operator*(std::int64_t k) const {
    std::vector<std::int64_t> a(e), b(f);
    for (auto& x : a) x *= k;
    for (auto& x : b) x *= k;
    return LatticeVector(a, b);
}

std::vector<std::int64_t> LatticeVector::reduced_coordinates() const {
    std::vector<std::int64_t> out;
    const std::size_t n = e.size();
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(e[i] - e[n - 1]);
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(f[i] - f[n - 1]);
    return out;
}

std::string LatticeVector::to_string() const {
    auto block = [](const std::vector<std::int64_t>& b) {
        std::string s = "(";
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
        return s + ")";
    };
    return block(e) + "|" + block(f);
}

LatticeVector mu_apply(const LatticeVector& v, MuDirection direction) {
    std::vector<std::int64_t> x(v.e), y(v.f);
    for (std::size_t i = 0; i < x.size(); ++i) {
        switch (direction) {
            case MuDirection::Forward: y[i] = v.f[i] + v.e[i]; break;
            case MuDirection::Inverse: y[i] = v.f[i] - v.e[i]; break;
            case MuDirection::Minus:
                x[i] = -v.e[i];
                y[i] = -v.e[i] - v.f[i];
                break;
        }
    }
    return LatticeVector(x, y);
}

std::string biflat_label(const SquareBiflat& b, std::size_t n) { return subset_label(b.F, n) + "⊆" + subset_label(b.G, n); }

SquareBiflat parse_biflat(const std::string& text, std::size_t n) {
    static const std::string sep = "⊆";
    auto pos = text.find(sep);
    std::size_t width = sep.size();
    if (pos == std::string::npos) {
        pos = text.find("<=");
        width = 2;
    }
    if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "biflat '" + text + "' needs F⊆G");
    return {parse_subset(text.substr(0, pos), n), parse_subset(text.substr(pos + width), n)};
}

std::size_t Fan::ray_index(const LatticeVector& v) const {
    auto it = std::find(rays.begin(), rays.end(), v);
    return it == rays.end() ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(it - rays.begin());
}

int Fan::dimension() const {
    std::size_t best = 0;
    for (const auto& c : cones) best = std::max(best, cone_dimension(cone_generators(*this, c)));
    return static_cast<int>(best);
}

Cone cone_generators(const Fan& fan, const std::vector<std::size_t>& cone) {
    Cone out;
    for (std::size_t i : cone) out.push_back(fan.rays.at(i));
    return out;
}

std::set<std::vector<std::size_t>> all_cones(const Fan& fan) {
    std::set<std::vector<std::size_t>> out{{}};
    for (const auto& c : fan.cones) {
        const std::size_t k = c.size();
        for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1U << i)) face.push_back(c[i]);
            out.insert(face);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> maximal_only(std::vector<std::vector<std::size_t>> cones) {
    for (auto& c : cones) std::sort(c.begin(), c.end());
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    std::vector<std::vector<std::size_t>> out;
    for (const auto& c : cones) {
        bool contained = false;
        for (const auto& d : cones)
            if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                contained = true;
                break;
            }
        if (!contained && !c.empty()) out.push_back(c);
    }
    return out;
}

std::size_t count_maximal_cones(const Fan& fan) { return fan.cones.empty() ? 1 : fan.cones.size(); }

namespace {

Matrix generator_matrix(const Cone& c) {
    // columns are the reduced coordinates of the generators
    if (c.empty()) return Matrix();
    const std::size_t dim = c.front().reduced_coordinates().size();
    Matrix m(dim, c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        auto coords = c[j].reduced_coordinates();
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = Scalar(static_cast<long>(coords[i]));
    }
    return m;
}

Vector as_vector(const LatticeVector& v) {
    Vector out;
    for (auto x : v.reduced_coordinates()) out.emplace_back(static_cast<long>(x));
    return out;
}

void require_no_loops_or_coloops(const Matroid& m) {
    if (loops(m) != 0 || coloops(m) != 0) throw Error(ErrorCode::LoopOrColoop, "matroid has a loop or a coloop");
}

// Maximal chains of a strict partial order on items, listed as index vectors.
template <typename Less>
std::vector<std::vector<std::size_t>> maximal_chains(std::size_t count, Less less) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chain;
    auto dfs = [&](auto&& self, std::size_t last) -> void {
        bool extended = false;
        for (std::size_t j = 0; j < count; ++j) {
            if (!chain.empty() && !less(last, j)) continue;
            // only extend with covers so that every chain is saturated
            bool cover = true;
            for (std::size_t k = 0; k < count && cover; ++k)
                if ((chain.empty() || less(last, k)) && less(k, j)) cover = false;
            if (!cover) continue;
            extended = true;
            chain.push_back(j);
            self(self, j);
            chain.pop_back();
        }
        if (!extended && !chain.empty()) out.push_back(chain);
    };
    dfs(dfs, 0);
    return out;
}

std::vector<Subset> nonempty_proper_flats(const Matroid& m) {
    std::vector<Subset> out;
    for (Subset f : flats(m).proper())
        if (f != 0) out.push_back(f);
    return out;
}

}  // namespace

std::size_t cone_dimension(const Cone& c) { return c.empty() ? 0 : matrix_rank(generator_matrix(c)); }

Fan bergman_fan(const Matroid& m) {
    if (loops(m) != 0) throw Error(ErrorCode::HasLoops, "Bergman fan of a matroid with loops");
    Fan fan;
    fan.n = m.size();
    std::vector<Subset> fl = nonempty_proper_flats(m);
    for (Subset f : fl) {
        fan.rays.push_back(LatticeVector::indicator(m.size(), f));
        fan.labels.push_back(subset_label(f, m.size()));
    }
    auto chains = maximal_chains(fl.size(), [&](std::size_t a, std::size_t b) { return fl[a] != fl[b] && is_subset(fl[a], fl[b]); });
    fan.cones = maximal_only(chains);
    return fan;
}

std::vector<SquareBiflat> square_biflats(const Matroid& m) {
    require_no_loops_or_coloops(m);
    const Subset e = m.ground();
    std::vector<Subset> mf = flats(m).flats, df = flats(dual(m)).flats;
    std::vector<SquareBiflat> out;
    for (Subset f : mf)
        for (Subset g : df) {
            if (!is_subset(f, g) || f == e || g == 0) continue;  // S = E\F and T = G nonempty
            if ((g & ~f) == e) continue;                       // S n T = G\F must not be E
            out.push_back({f, g});
        }
    std::sort(out.begin(), out.end(), [](const SquareBiflat& a, const SquareBiflat& b) {
        auto key = [](const SquareBiflat& x) { return std::make_tuple(-cardinality(x.F), cardinality(x.G), x.F, x.G); };
        return key(a) < key(b);
    });
    return out;
}

namespace {

// b precedes c in a biflag: S_b in S_c and T_b contains T_c, i.e. F_b contains F_c and G_b contains G_c.
bool biflag_before(const SquareBiflat& b, const SquareBiflat& c) {
    return !(b == c) && is_subset(c.F, b.F) && is_subset(c.G, b.G);
}

}  // namespace

bool is_biflag(const std::vector<SquareBiflat>& family, std::size_t n) {
    Subset uni = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        uni |= family[i].G & ~family[i].F;
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!biflag_before(family[i], family[j]) && !biflag_before(family[j], family[i])) return false;
    }
    return uni != full_set(n);
}

Fan square_conormal_fan(const Matroid& m) {
    std::vector<SquareBiflat> bf = square_biflats(m);
    const std::size_t n = m.size();
    Fan fan;
    fan.n = n;
    for (const auto& b : bf) {
        fan.rays.push_back(-LatticeVector::indicator(n, b.F) + LatticeVector::indicator(n, b.G, true));
        fan.labels.push_back(biflat_label(b, n));
    }
    // depth-first chain extension; sorting by |S| - |T| is a linear extension of the biflag order
    std::vector<std::size_t> order(bf.size());
    std::iota(order.begin(), order.end(), 0);
    auto rank_key = [&](std::size_t i) { return static_cast<int>(n) - cardinality(bf[i].F) - cardinality(bf[i].G); };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank_key(a) < rank_key(b); });

    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> chain;
    auto dfs = [&](auto&& self, std::size_t start, Subset uni) -> void {
        if (!chain.empty()) chains.push_back(chain);
        for (std::size_t k = start; k < order.size(); ++k) {
            std::size_t j = order[k];
            if (!chain.empty() && !biflag_before(bf[chain.back()], bf[j])) continue;
            Subset next = uni | (bf[j].G & ~bf[j].F);
            if (next == m.ground()) continue;  // the union condition only grows along a chain
            chain.push_back(j);
            self(self, k + 1, next);
            chain.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    fan.cones = maximal_only(chains);
    return fan;
}

Fan delta_tilde_fan(const Matroid& m) {
    Fan fan = square_conormal_fan(m);
    for (auto& r : fan.rays) r = mu_apply(r, MuDirection::Minus);
    return fan;
}

Fan delta_fan(const Matroid& m) {
    require_no_loops_or_coloops(m);
    const std::size_t n = m.size();
    Fan fan;
    fan.n = n;
    std::vector<Subset> mf = nonempty_proper_flats(m), df = nonempty_proper_flats(dual(m));
    for (Subset f : mf) {
        fan.rays.push_back(mu_apply(-LatticeVector::indicator(n, f), MuDirection::Minus));
        fan.labels.push_back(subset_label(f, n));
    }
    for (Subset g : df) {
        fan.rays.push_back(mu_apply(LatticeVector::indicator(n, g, true), MuDirection::Minus));
        fan.labels.push_back("⊥" + subset_label(g, n));
    }
    auto subset_order = [](const std::vector<Subset>& v) {
        return [&v](std::size_t a, std::size_t b) { return v[a] != v[b] && is_subset(v[a], v[b]); };
    };
    auto first = maximal_chains(mf.size(), subset_order(mf));
    auto second = maximal_chains(df.size(), subset_order(df));
    if (first.empty()) first.push_back({});
    if (second.empty()) second.push_back({});
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& a : first)
        for (const auto& b : second) {
            std::vector<std::size_t> c(a);
            for (std::size_t j : b) c.push_back(mf.size() + j);
            cones.push_back(c);
        }
    fan.cones = maximal_only(cones);
    return fan;
}

bool is_unimodular(const Cone& c) {
    if (c.empty()) return true;
    const std::size_t k = c.size();
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& g : c) {
        std::vector<mpz_class> row;
        for (auto x : g.reduced_coordinates()) row.emplace_back(static_cast<long>(x));
        rows.push_back(std::move(row));
    }
    const std::size_t m = rows.front().size();
    if (k > m) return false;
    // unimodular column operations bring the k x m matrix to [H | 0] with H lower triangular;
    // the gcd of the maximal minors is then |det H|
    for (std::size_t i = 0; i < k; ++i) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t j = i; j < m; ++j)
                if (rows[i][j] != 0 && (best == m || abs(rows[i][j]) < abs(rows[i][best]))) best = j;
            if (best == m) return false;  // dependent generators
            for (auto& row : rows) std::swap(row[i], row[best]);
            bool cleared = true;
            for (std::size_t j = i + 1; j < m; ++j) {
                if (rows[i][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][j].get_mpz_t(), rows[i][i].get_mpz_t());
                for (auto& row : rows) row[j] -= q * row[i];
                if (rows[i][j] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (abs(rows[i][i]) != 1) return false;
    }
    return true;
}

bool maps_into_coordinate_fan(const Cone& c, Block block, Sign sign) {
    if (c.empty()) return true;
    const std::size_t n = c.front().size();
    std::vector<bool> common(n, true);
    for (const auto& g : c) {
        std::vector<std::int64_t> v = block == Block::First ? g.e : g.f;
        if (sign == Sign::Minus)
            for (auto& x : v) x = -x;
        const std::int64_t lo = *std::min_element(v.begin(), v.end());
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != lo) common[j] = false;
    }
    return std::find(common.begin(), common.end(), true) != common.end();
}

std::vector<std::string> coordinate_fan_failures(const Fan& fan, Block block, Sign sign) {
    std::vector<std::string> out;
    for (const auto& c : fan.cones) {
        if (maps_into_coordinate_fan(cone_generators(fan, c), block, sign)) continue;
        std::string label = "{";
        for (std::size_t i = 0; i < c.size(); ++i) label += (i ? ", " : "") + fan.labels[c[i]];
        out.push_back(label + "}");
    }
    return out;
}

namespace {

void require_pure_simplicial(const Fan& fan, const char* which) {
    std::optional<std::size_t> size;
    for (const auto& c : fan.cones) {
        if (cone_dimension(cone_generators(fan, c)) != c.size())
            throw Error(ErrorCode::NotSimplicial, std::string(which) + " fan has a non-simplicial cone");
        if (size && *size != c.size()) throw Error(ErrorCode::NotPure, std::string(which) + " fan is not pure");
        size = c.size();
    }
}

// Coefficients of v in the generators of a simplicial cone, if v lies in the cone.
std::optional<Vector> cone_coefficients(const Matrix& gens, const LatticeVector& v) {
    auto sol = solve(gens, as_vector(v));
    if (!sol) return std::nullopt;
    for (const Scalar& s : *sol)
        if (s.sign() < 0) return std::nullopt;
    return sol;
}

}  // namespace

RefinementReport check_refinement(const Fan& fine, const Fan& coarse) {
    require_pure_simplicial(fine, "fine");
    require_pure_simplicial(coarse, "coarse");
    if (fine.dimension() != coarse.dimension()) throw Error(ErrorCode::NotPure, "fans have different dimensions");
    if (fine.n != coarse.n) throw Error(ErrorCode::InvalidArgument, "fans live in different lattices");
    if (coarse.cones.empty()) return {fine.cones.empty(), fine.cones.empty() ? "" : "coarse fan is trivial"};

    std::vector<Matrix> gens;
    for (const auto& c : coarse.cones) gens.push_back(generator_matrix(cone_generators(coarse, c)));
    // coefficient table: ray index -> coarse cone -> coefficients
    std::vector<std::vector<std::optional<Vector>>> coeff(fine.rays.size(), std::vector<std::optional<Vector>>(coarse.cones.size()));
    for (std::size_t r = 0; r < fine.rays.size(); ++r) {
        bool inside = false;
        for (std::size_t s = 0; s < coarse.cones.size(); ++s) {
            coeff[r][s] = cone_coefficients(gens[s], fine.rays[r]);
            inside = inside || coeff[r][s].has_value();
        }
        if (!inside) return {false, "ray " + fine.labels[r] + " lies outside the coarse support"};
    }

    std::vector<std::vector<std::size_t>> assigned(coarse.cones.size());
    for (std::size_t t = 0; t < fine.cones.size(); ++t) {
        bool placed = false;
        for (std::size_t s = 0; s < coarse.cones.size(); ++s) {
            const auto& c = fine.cones[t];
            if (std::all_of(c.begin(), c.end(), [&](std::size_t r) { return coeff[r][s].has_value(); })) {
                assigned[s].push_back(t);
                placed = true;
            }
        }
        if (!placed) return {false, "a fine cone lies in no single coarse cone"};
    }

    for (std::size_t s = 0; s < coarse.cones.size(); ++s) {
        if (assigned[s].empty()) return {false, "coarse cone " + std::to_string(s) + " contains no fine cone"};
        std::map<std::vector<std::size_t>, int> facets;
        for (std::size_t t : assigned[s]) {
            const auto& c = fine.cones[t];
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                std::vector<std::size_t> facet;
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (i != drop) facet.push_back(c[i]);
                ++facets[facet];
            }
        }
        const std::size_t k = coarse.cones[s].size();
        for (const auto& [facet, count] : facets) {
            // on the boundary of the coarse cone iff some coarse generator is unused by every facet ray
            bool boundary = false;
            for (std::size_t g = 0; g < k && !boundary; ++g)
                boundary = std::all_of(facet.begin(), facet.end(), [&](std::size_t r) { return (*coeff[r][s])[g].is_zero(); });
            if (boundary ? count != 1 : count != 2)
                return {false, "facet matching fails in coarse cone " + std::to_string(s)};
        }
    }
    return {true, ""};
}

bool refines(const Fan& fine, const Fan& coarse) { return check_refinement(fine, coarse).ok; }

bool divisor_incidence(const std::vector<SquareBiflat>& biflats, std::size_t n) { return is_biflag(biflats, n); }

Fan fibre_fan(const Matroid& m, Subset flat, Subset s) {
    if (!is_flat(m, flat)) throw Error(ErrorCode::NotAFlat, subset_label(flat, m.size()) + " is not a flat");
    Fan full = delta_tilde_fan(m);
    std::vector<SquareBiflat> bf = square_biflats(m);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < bf.size(); ++i)
        if (is_subset(bf[i].F, flat) && is_subset(bf[i].G & ~bf[i].F, s)) keep.push_back(i);
    Fan fan;
    fan.n = full.n;
    std::vector<std::size_t> remap(full.rays.size(), static_cast<std::size_t>(-1));
    for (std::size_t i : keep) {
        remap[i] = fan.rays.size();
        fan.rays.push_back(full.rays[i]);
        fan.labels.push_back(full.labels[i]);
    }
    std::vector<std::vector<std::size_t>> faces;
    for (const auto& c : full.cones) {
        std::vector<std::size_t> face;
        for (std::size_t r : c)
            if (remap[r] != static_cast<std::size_t>(-1)) face.push_back(remap[r]);
        faces.push_back(face);
    }
    fan.cones = maximal_only(faces);
    return fan;
}

}  // namespace configres
