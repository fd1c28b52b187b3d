#include "configres/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "configres/errors.hpp"

namespace configres {

std::string subset_label(Subset s, std::size_t n) {
    if (s == 0) return "∅";
    if (s == full_set(n)) return "E";
    std::string out;
    for (std::size_t i = 1; i <= n; ++i) {
        if (!(s & element(i))) continue;
        if (n > 9 && !out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

Subset parse_subset(const std::string& text, std::size_t n) {
    if (text == "∅" || text == "empty" || text == "0" || text == "{}") return 0;
    if (text == "E") return full_set(n);
    Subset s = 0;
    auto add = [&](std::size_t i) {
        if (i < 1 || i > n) throw Error(ErrorCode::ParseError, "element " + std::to_string(i) + " outside 1.." + std::to_string(n));
        s |= element(i);
    };
    if (text.find(',') != std::string::npos || n > 9) {
        std::string token;
        for (char ch : text + ",") {
            if (ch == ',' || ch == ' ') {
                if (!token.empty()) add(std::stoul(token));
                token.clear();
            } else if (ch != '{' && ch != '}') {
                if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error(ErrorCode::ParseError, "bad subset '" + text + "'");
                token += ch;
            }
        }
    } else {
        for (char ch : text) {
            if (ch == '{' || ch == '}') continue;
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error(ErrorCode::ParseError, "bad subset '" + text + "'");
            add(static_cast<std::size_t>(ch - '0'));
        }
    }
    return s;
}

bool FlatLattice::contains(Subset s) const { return std::find(flats.begin(), flats.end(), s) != flats.end(); }

std::vector<Subset> FlatLattice::proper() const {
    std::vector<Subset> out(flats.begin(), flats.end());
    if (!out.empty()) out.pop_back();  // E is the unique top element
    return out;
}

namespace {

bool exchange_axiom_holds(const std::vector<Subset>& bases) {
    std::set<Subset> lookup(bases.begin(), bases.end());
    for (Subset a : bases)
        for (Subset b : bases) {
            Subset only_a = a & ~b;
            for (Subset x = only_a; x; x &= x - 1) {
                Subset ex = x & -x;
                bool found = false;
                for (Subset y = b & ~a; y && !found; y &= y - 1) {
                    Subset ey = y & -y;
                    found = lookup.count((a & ~ex) | ey) > 0;
                }
                if (!found) return false;
            }
        }
    return true;
}

void check_size(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty ground set");
    if (n > kMaxGroundSet) throw Error(ErrorCode::TooLarge, "ground set of size " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroundSet));
}

// Enumerates all k-subsets of {1..n} as bitmasks in increasing order (Gosper's hack).
template <typename F>
void for_each_k_subset(std::size_t n, int k, F&& f) {
    if (k < 0 || static_cast<std::size_t>(k) > n) return;
    if (k == 0) {
        f(Subset{0});
        return;
    }
    Subset s = (Subset{1} << k) - 1;
    const Subset limit = Subset{1} << n;
    while (s < limit) {
        f(s);
        Subset c = s & -s;
        Subset r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

}  // namespace

Matroid Matroid::from_bases(std::size_t n, std::vector<Subset> bases) {
    check_size(n);
    if (bases.empty()) throw Error(ErrorCode::InvalidBases, "no bases");
    std::sort(bases.begin(), bases.end());
    if (std::adjacent_find(bases.begin(), bases.end()) != bases.end()) throw Error(ErrorCode::InvalidBases, "duplicate basis");
    const int r = cardinality(bases.front());
    for (Subset b : bases) {
        if (!is_subset(b, full_set(n))) throw Error(ErrorCode::InvalidBases, "basis outside ground set");
        if (cardinality(b) != r) throw Error(ErrorCode::InvalidBases, "bases of different sizes");
    }
    if (n <= 10 && !exchange_axiom_holds(bases)) throw Error(ErrorCode::InvalidBases, "basis exchange axiom fails");
    return Matroid(n, r, std::move(bases));
}

Matroid Matroid::uniform(std::size_t r, std::size_t n) {
    check_size(n);
    if (r > n) throw Error(ErrorCode::InvalidArgument, "uniform matroid with r > n");
    std::vector<Subset> bases;
    for_each_k_subset(n, static_cast<int>(r), [&](Subset s) { bases.push_back(s); });
    return Matroid(n, static_cast<int>(r), std::move(bases));
}

bool Matroid::is_basis(Subset s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

Matroid matroid_from_matrix(const Matrix& a) {
    const std::size_t n = a.cols();
    check_size(n);
    const std::size_t r = a.rows();
    if (r == 0 || r >= n) throw Error(ErrorCode::Degenerate, "need 0 < r < n, got r=" + std::to_string(r) + ", n=" + std::to_string(n));
    if (matrix_rank(a) != r) throw Error(ErrorCode::RankDeficient, "matrix rows are dependent");
    std::vector<Subset> bases;
    for_each_k_subset(n, static_cast<int>(r), [&](Subset s) {
        std::vector<std::size_t> cols;
        for (std::size_t i = 1; i <= n; ++i)
            if (s & element(i)) cols.push_back(i - 1);
        if (!det(a.select_columns(cols)).is_zero()) bases.push_back(s);
    });
    return Matroid::from_bases(n, std::move(bases));
}

namespace {

std::vector<int> vertex_list(const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> vertices;
    for (auto [u, v] : edges) {
        for (int x : {u, v})
            if (std::find(vertices.begin(), vertices.end(), x) == vertices.end()) vertices.push_back(x);
    }
    return vertices;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

Matroid matroid_from_graph(const std::vector<std::pair<int, int>>& edges) {
    const std::size_t n = edges.size();
    check_size(n);
    std::vector<int> vertices = vertex_list(edges);
    auto index = [&](int v) { return static_cast<int>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin()); };
    const int nv = static_cast<int>(vertices.size());

    // a spanning forest with nv - 1 edges is a spanning tree of a connected graph
    auto forest_size = [&](Subset s) {
        std::vector<int> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        int merged = 0;
        for (std::size_t e = 0; e < n; ++e) {
            if (!(s & element(e + 1))) continue;
            int a = find_root(parent, index(edges[e].first));
            int b = find_root(parent, index(edges[e].second));
            if (a == b) return -1;
            parent[a] = b;
            ++merged;
        }
        return merged;
    };
    if (forest_size(0) != 0 || nv < 2) throw Error(ErrorCode::DisconnectedGraph, "graph needs at least one non-loop edge");
    {
        std::vector<int> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        int components = nv;
        for (auto [u, v] : edges) {
            int a = find_root(parent, index(u));
            int b = find_root(parent, index(v));
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        if (components != 1) throw Error(ErrorCode::DisconnectedGraph, std::to_string(components) + " components");
    }
    std::vector<Subset> trees;
    for_each_k_subset(n, nv - 1, [&](Subset s) {
        if (forest_size(s) == nv - 1) trees.push_back(s);
    });
    return Matroid::from_bases(n, std::move(trees));
}

Matrix graph_incidence_matrix(const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> vertices = vertex_list(edges);
    if (vertices.size() < 2) throw Error(ErrorCode::DisconnectedGraph, "graph needs two vertices");
    Matrix m(vertices.size() - 1, edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (u == v) continue;
        auto iu = static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), u) - vertices.begin());
        auto iv = static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
        if (iu > 0) m(iu - 1, e) = Scalar(1);
        if (iv > 0) m(iv - 1, e) = Scalar(-1);
    }
    return m;
}

int rank_of(const Matroid& m, Subset s) {
    int best = 0;
    for (Subset b : m.bases()) best = std::max(best, cardinality(b & s));
    return best;
}

Subset closure(const Matroid& m, Subset s) {
    const int rs = rank_of(m, s);
    Subset out = s;
    for (std::size_t i = 1; i <= m.size(); ++i)
        if (!(s & element(i)) && rank_of(m, s | element(i)) == rs) out |= element(i);
    return out;
}

bool is_flat(const Matroid& m, Subset s) { return is_subset(s, m.ground()) && closure(m, s) == s; }

FlatLattice flats(const Matroid& m) {
    const std::size_t n = m.size();
    std::vector<int> rank(std::size_t{1} << n);
    for (Subset s = 0; s <= m.ground(); ++s) {
        rank[s] = rank_of(m, s);
        if (s == m.ground()) break;
    }
    std::set<std::pair<int, Subset>> found;
    for (Subset s = 0;; ++s) {
        Subset c = s;
        for (std::size_t i = 1; i <= n; ++i)
            if (rank[s | element(i)] == rank[s]) c |= element(i);
        found.emplace(rank[c], c);
        if (s == m.ground()) break;
    }
    FlatLattice lattice;
    for (auto [r, f] : found) {
        lattice.flats.push_back(f);
        lattice.ranks.push_back(r);
    }
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t j = 0; j < lattice.size(); ++j)
            if (lattice.ranks[j] == lattice.ranks[i] + 1 && is_subset(lattice.flats[i], lattice.flats[j]))
                lattice.covers.emplace_back(i, j);
    return lattice;
}

Matroid dual(const Matroid& m) {
    std::vector<Subset> bases;
    bases.reserve(m.bases().size());
    for (Subset b : m.bases()) bases.push_back(m.ground() & ~b);
    return Matroid::from_bases(m.size(), std::move(bases));
}

namespace {

Subset compress(Subset s, Subset keep, std::size_t n) {
    Subset out = 0;
    int pos = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (!(keep & element(i))) continue;
        if (s & element(i)) out |= Subset{1} << pos;
        ++pos;
    }
    return out;
}

Matroid restrict_bases(const Matroid& m, Subset f, bool contraction) {
    const Subset keep = m.ground() & ~f;
    if (keep == 0) throw Error(ErrorCode::EmptyResult, "minor has empty ground set");
    const std::size_t n = static_cast<std::size_t>(cardinality(keep));
    std::set<Subset> out;
    if (contraction) {
        const int rf = rank_of(m, f);
        for (Subset b : m.bases())
            if (cardinality(b & f) == rf) out.insert(compress(b & keep, keep, m.size()));
    } else {
        const int rk = rank_of(m, keep);
        for (Subset b : m.bases())
            if (cardinality(b & keep) == rk) out.insert(compress(b & keep, keep, m.size()));
    }
    return Matroid::from_bases(n, std::vector<Subset>(out.begin(), out.end()));
}

}  // namespace

Matroid delete_elements(const Matroid& m, Subset f) { return restrict_bases(m, f, false); }
Matroid contract(const Matroid& m, Subset f) { return restrict_bases(m, f, true); }

Subset loops(const Matroid& m) {
    Subset any = 0;
    for (Subset b : m.bases()) any |= b;
    return m.ground() & ~any;
}

Subset coloops(const Matroid& m) {
    Subset all = m.ground();
    for (Subset b : m.bases()) all &= b;
    return all;
}

bool is_connected(const Matroid& m) {
    const Subset e = m.ground();
    // E_1 ranges over nonempty proper subsets containing element 1
    for (Subset s = 1; s < e; s += 2) {
        if (rank_of(m, s) + rank_of(m, e & ~s) == m.rank()) return false;
    }
    return true;
}

bool is_round(const Matroid& m) {
    for (Subset f : flats(m).proper())
        if (rank_of(m, m.ground() & ~f) != m.rank()) return false;
    return true;
}

ClassPoly char_poly(const Matroid& m) {
    if (loops(m) != 0) throw Error(ErrorCode::HasLoops, "characteristic polynomial of a matroid with loops");
    FlatLattice lat = flats(m);
    std::vector<std::int64_t> mu(lat.size(), 0);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(m.rank()) + 1, 0);
    for (std::size_t j = 0; j < lat.size(); ++j) {
        if (j == 0) {
            mu[j] = 1;  // the empty flat is the bottom element
        } else {
            std::int64_t sum = 0;
            for (std::size_t i = 0; i < j; ++i)
                if (lat.ranks[i] < lat.ranks[j] && is_subset(lat.flats[i], lat.flats[j])) sum += mu[i];
            mu[j] = -sum;
        }
        coeffs[static_cast<std::size_t>(m.rank() - lat.ranks[j])] += mu[j];
    }
    return ClassPoly(std::move(coeffs));
}

ClassPoly reduced_char_poly(const Matroid& m) {
    ClassPoly reduced;
    if (!char_poly(m).divide_by_t_minus_one(reduced)) throw Error(ErrorCode::NonDivisible, "chi_M(1) != 0");
    return reduced;
}

}  // namespace configres
