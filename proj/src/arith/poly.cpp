#include "configres/arith/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "configres/errors.hpp"

namespace configres {

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    return m;
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial m(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return m;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial m(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = other.exps_[i] - exps_[i];
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
    return m;
}

// --- TermOrder --------------------------------------------------------------

TermOrder TermOrder::lex(std::size_t nvars) {
    std::vector<std::size_t> priority(nvars);
    std::iota(priority.begin(), priority.end(), 0);
    return lex(std::move(priority));
}

TermOrder TermOrder::lex(std::vector<std::size_t> priority) {
    TermOrder ord;
    ord.blocks_.push_back(std::move(priority));
    ord.name_ = "lex";
    return ord;
}

TermOrder TermOrder::block(std::vector<std::size_t> first, std::vector<std::size_t> second, std::string name) {
    TermOrder ord;
    ord.blocks_.push_back(std::move(first));
    ord.blocks_.push_back(std::move(second));
    ord.name_ = name.empty() ? "block-lex" : std::move(name);
    return ord;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_)
        for (std::size_t v : blk) {
            if (a[v] != b[v]) return a[v] < b[v];
        }
    return false;
}

// --- variables --------------------------------------------------------------

VariableList make_variables(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VariableList indexed_variables(std::string_view stem, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(stem) + std::to_string(i));
    return make_variables(std::move(names));
}

VariableList ux_variables(std::size_t n, std::size_t r) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= r; ++i) names.push_back("u" + std::to_string(i));
    return make_variables(std::move(names));
}

// --- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(VariableList vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(VariableList vars, const Scalar& c) {
    MultiPoly p(vars);
    p.add_term(Monomial(vars->size()), c);
    return p;
}

MultiPoly MultiPoly::variable(VariableList vars, std::size_t index) {
    MultiPoly p(vars);
    p.add_term(Monomial::variable(vars->size(), index), Scalar(1));
    return p;
}

MultiPoly MultiPoly::term(VariableList vars, Monomial m, const Scalar& c) {
    MultiPoly p(std::move(vars));
    p.add_term(m, c);
    return p;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::require_same_ring(const MultiPoly& other) const {
    if (!vars_ || !other.vars_ || vars_ == other.vars_) return;
    if (*vars_ != *other.vars_) throw Error(ErrorCode::InvalidArgument, "polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_ring(rhs);
    if (!vars_) vars_ = rhs.vars_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_ring(rhs);
    if (!vars_) vars_ = rhs.vars_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b);
    MultiPoly out(a.vars_ ? a.vars_ : b.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty()) a.require_same_ring(b);
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, Scalar(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * Scalar(static_cast<long>(m[var])));
    }
    return out;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars()) throw Error(ErrorCode::InvalidArgument, "evaluate: point has wrong length");
    Scalar total;
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
        total += t;
    }
    if (!point.empty()) total = total.in_field_of(point.front());
    return total;
}

MultiPoly MultiPoly::rename(VariableList target, const std::vector<std::size_t>& map) const {
    MultiPoly out(target);
    for (const auto& [m, c] : terms_) {
        Monomial n(target->size());
        for (std::size_t i = 0; i < m.size(); ++i) n[map.at(i)] += m[i];
        out.add_term(n, c);
    }
    return out;
}

MultiPoly MultiPoly::mod(std::uint64_t p) const {
    Scalar unit = Scalar::fp(1, p);
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) out.add_term(m, c.in_field_of(unit));
    return out;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> ordered;
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        const Monomial& x = a->first;
        const Monomial& y = b->first;
        for (std::size_t i = x.size(); i-- > 0;)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    });
    std::string out;
    for (const auto* t : ordered) {
        const auto& [m, c] = *t;
        std::string coeff = c.to_string();
        bool negative = !coeff.empty() && coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (!out.empty() || negative) out += negative ? "-" : "+";
        if (m.is_one()) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + "*";
            out += monomial_string(m, *vars_);
        }
    }
    return out;
}

std::pair<Monomial, Scalar> lead_term(const MultiPoly& p, const TermOrder& ord) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "lead term of zero polynomial");
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& g, const TermOrder& ord) {
    std::vector<std::pair<Monomial, Scalar>> leads;
    for (const auto& gi : g) leads.push_back(lead_term(gi, ord));
    MultiPoly rest = p;
    MultiPoly remainder(p.variables());
    while (!rest.is_zero()) {
        auto [lm, lc] = lead_term(rest, ord);
        bool divided = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!leads[i].first.divides(lm)) continue;
            Monomial q = leads[i].first.quotient_of(lm);
            rest -= MultiPoly::term(p.variables(), q, lc / leads[i].second) * g[i];
            divided = true;
            break;
        }
        if (!divided) {
            remainder.add_term(lm, lc);
            rest.add_term(lm, -lc);
        }
    }
    return remainder;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& ord) {
    auto [mf, cf] = lead_term(f, ord);
    auto [mg, cg] = lead_term(g, ord);
    Monomial l = mf.lcm(mg);
    MultiPoly a = MultiPoly::term(f.variables(), mf.quotient_of(l), cf.inverse()) * f;
    MultiPoly b = MultiPoly::term(g.variables(), mg.quotient_of(l), cg.inverse()) * g;
    return a - b;
}

MultiPoly poly_det(const PolyMatrix& m, VariableList vars) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error(ErrorCode::NonSquare, "poly_det on non-square matrix");
    if (n > 20) throw Error(ErrorCode::TooLarge, "poly_det limited to 20x20");
    if (n == 0) return MultiPoly::constant(vars, Scalar(1));
    // minor[mask] = det of the last popcount(mask) rows restricted to the columns in mask
    std::map<std::uint32_t, MultiPoly> minor;
    minor.emplace(0U, MultiPoly::constant(vars, Scalar(1)));
    for (std::size_t size = 1; size <= n; ++size) {
        std::map<std::uint32_t, MultiPoly> next;
        const std::size_t row = n - size;
        for (const auto& [mask, sub] : minor) {
            for (std::size_t col = 0; col < n; ++col) {
                if (mask & (1U << col)) continue;
                const MultiPoly& entry = m[row][col];
                if (entry.is_zero() || sub.is_zero()) continue;
                // sign from the position of col among the columns of mask | col
                int below = __builtin_popcount(mask & ((1U << col) - 1));
                MultiPoly term = entry * sub;
                if (below % 2) term = -term;
                auto [it, inserted] = next.try_emplace(mask | (1U << col), MultiPoly(vars));
                it->second += term;
            }
        }
        minor = std::move(next);
    }
    auto it = minor.find((n == 32 ? 0U : (1U << n)) - 1);
    return it == minor.end() ? MultiPoly(vars) : it->second;
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '\n') s += ch;
    return s;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, VariableList vars, std::uint64_t p) {
    std::string s = strip_spaces(text);
    MultiPoly out(vars);
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
    if (s == "0") return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + s + "'");
        Scalar coeff = p ? Scalar::fp(1, p) : Scalar(1);
        Monomial m(vars->size());
        std::stringstream factors(term);
        std::string factor;
        while (std::getline(factors, factor, '*')) {
            if (factor.empty()) throw Error(ErrorCode::ParseError, "empty factor in '" + term + "'");
            if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
                coeff *= Scalar::parse(factor, p);
                continue;
            }
            unsigned power = 1;
            std::string name = factor;
            if (auto caret = factor.find('^'); caret != std::string::npos) {
                name = factor.substr(0, caret);
                try {
                    power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
                } catch (const std::exception&) {
                    throw Error(ErrorCode::ParseError, "bad exponent in '" + factor + "'");
                }
            }
            auto it = std::find(vars->begin(), vars->end(), name);
            if (it == vars->end()) throw Error(ErrorCode::ParseError, "unknown variable '" + name + "'");
            m[static_cast<std::size_t>(it - vars->begin())] += power;
        }
        out.add_term(m, negative ? -coeff : coeff);
        pos = end;
    }
    return out;
}

}  // namespace configres
