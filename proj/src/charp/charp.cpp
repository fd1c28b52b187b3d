#include "configres/charp.hpp"

#include <algorithm>
#include <numeric>

#include "configres/errors.hpp"

namespace configres {

StandardForm row_reduce_to_standard(const Configuration& c) {
    RowEchelon ech = row_echelon(c.matrix());
    if (ech.pivots.size() != c.rank()) throw Error(ErrorCode::RankDeficient, "matrix rows are dependent");
    std::vector<std::size_t> perm(ech.pivots);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (std::find(ech.pivots.begin(), ech.pivots.end(), j) == ech.pivots.end()) perm.push_back(j);
    return {Configuration(ech.reduced.select_columns(perm)), perm};
}

TermOrder x_then_u_order(std::size_t n, std::size_t r) {
    std::vector<std::size_t> xs(n), us(r);
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(us.begin(), us.end(), n);
    return TermOrder::block(xs, us, "x-lex,u-lex");
}

namespace {

Monomial expected_lead(std::size_t n, std::size_t r, std::size_t i) {
    Monomial m(n + r);
    m[i] = 1;
    m[n + i] = 1;
    return m;
}

// Leads of the q_i over the given matrix; throws `code` unless lead(q_i) = x_i u_i with coefficient 1.
std::vector<Monomial> verified_leads(const Matrix& a, ErrorCode code, std::vector<std::string>& names) {
    const std::size_t r = a.rows(), n = a.cols();
    LambdaSystem sys = lambda_system(a);
    TermOrder ord = x_then_u_order(n, r);
    std::vector<Monomial> leads;
    for (std::size_t i = 0; i < r; ++i) {
        if (sys.q[i].is_zero()) throw Error(code, "q" + std::to_string(i + 1) + " vanishes");
        auto [lm, lc] = lead_term(sys.q[i], ord);
        names.push_back(monomial_string(lm, *sys.vars));
        if (!(lm == expected_lead(n, r, i)) || !lc.is_one())
            throw Error(code, "lead term of q" + std::to_string(i + 1) + " is " + names.back() + "; standard form expected");
        leads.push_back(lm);
    }
    return leads;
}

}  // namespace

bool s_pairs_reduce_to_zero(const Configuration& c) {
    LambdaSystem sys = lambda_system(c);
    TermOrder ord = x_then_u_order(c.size(), c.rank());
    for (std::size_t i = 0; i < sys.q.size(); ++i)
        for (std::size_t j = i + 1; j < sys.q.size(); ++j)
            if (!reduce(s_polynomial(sys.q[i], sys.q[j], ord), sys.q, ord).is_zero()) return false;
    return true;
}

Certificate lead_term_certificate(const Configuration& c, bool strict) {
    Certificate cert;
    cert.kind = "InitialIdeal";
    std::vector<Monomial> leads = verified_leads(c.matrix(), ErrorCode::OrderViolation, cert.leads);
    cert.pass = true;
    for (std::size_t i = 0; i < leads.size() && cert.pass; ++i) {
        if (!leads[i].is_squarefree()) {
            cert.pass = false;
            cert.reason = "lead " + cert.leads[i] + " is not squarefree";
        }
        for (std::size_t j = i + 1; j < leads.size() && cert.pass; ++j)
            if (!leads[i].coprime(leads[j])) {
                cert.pass = false;
                cert.reason = "leads " + cert.leads[i] + " and " + cert.leads[j] + " share a variable";
            }
    }
    if (cert.pass && strict && !s_pairs_reduce_to_zero(c)) {
        cert.pass = false;
        cert.reason = "an S-pair has a nonzero remainder";
    }
    if (cert.pass) {
        cert.reason = strict ? "leads pairwise coprime and squarefree; all S-pairs reduce to 0"
                             : "leads pairwise coprime and squarefree";
        cert.cited = {"the q_i form a Groebner basis with initial ideal (x_1u_1,...,x_ru_r)",
                      "I_W is a radical complete intersection of height r"};
    }
    return cert;
}

Certificate fedder_witness(const Configuration& c, std::uint64_t p, bool expand) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    Certificate cert;
    cert.kind = "FPurity";
    cert.p = p;
    const Matrix ap = c.matrix().mod(p);
    std::vector<Monomial> leads = verified_leads(ap, ErrorCode::LeadTermFailure, cert.leads);
    const std::size_t n = c.size(), r = c.rank();
    Monomial lead_q(n + r);
    for (const auto& m : leads) lead_q = lead_q * m;
    Monomial witness(n + r);
    for (unsigned k = 0; k + 1 < p; ++k) witness = witness * lead_q;
    const VariableList vars = ux_variables(n, r);
    cert.witness = monomial_string(witness, *vars);

    // the witness lies outside m^[p] iff every exponent is below p
    const auto& exps = witness.exponents();
    cert.pass = std::all_of(exps.begin(), exps.end(), [&](unsigned e) { return e < p; });
    cert.reason = cert.pass ? "every exponent of lead(Q^(p-1)) is p-1 < p" : "witness lies in m^[p]";

    if (cert.pass && expand) {
        LambdaSystem sys = lambda_system(ap);
        MultiPoly q = MultiPoly::constant(sys.vars, Scalar::fp(1, p));
        for (const auto& qi : sys.q) q *= qi;
        auto [lm, lc] = lead_term(q.pow(static_cast<unsigned>(p - 1)), x_then_u_order(n, r));
        if (!(lm == witness) || lc.is_zero()) {
            cert.pass = false;
            cert.reason = "expanded Q^(p-1) has lead " + monomial_string(lm, *vars);
        } else {
            cert.reason += "; confirmed on the expanded power";
        }
    }
    if (cert.pass)
        cert.cited = {"Fedder's criterion (graded form): K[u,x]/I_W is F-pure",
                      "linkage containment: K[u,x]/I_{W,0} with I_{W,0} = I_W + (psi_W) is F-pure"};
    return cert;
}

std::vector<MultiPoly> linkage_generators(const Configuration& c) {
    LambdaSystem sys = lambda_system(c);
    MultiPoly psi = psi_det(c);
    std::vector<std::size_t> into(c.size());
    std::iota(into.begin(), into.end(), 0);
    std::vector<MultiPoly> out = sys.q;
    out.push_back(psi.rename(sys.vars, into));
    return out;
}

Certificate linkage_certificate(const Configuration& c) {
    Certificate cert;
    cert.kind = "Linkage";
    cert.order = "";
    for (const auto& g : linkage_generators(c)) cert.generators.push_back(g.to_string());
    cert.pass = true;
    cert.reason = "det(A D_x A^T) equals the basis expansion of psi_W";
    cert.cited = {"I_{W,0} = I_W + (psi_W) is linked to I_W"};
    return cert;
}

}  // namespace configres
