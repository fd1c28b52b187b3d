#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "configres/charp.hpp"
#include "configres/classes.hpp"
#include "configres/config.hpp"
#include "configres/errors.hpp"
#include "configres/fans.hpp"
#include "configres/io.hpp"

using namespace configres;

namespace {

enum Exit { kOk = 0, kComputation = 1, kParse = 2, kVerify = 3 };

struct Job {
    std::string input;
    std::string format;
    bool json = false;
    std::uint64_t seed = 0;
};

std::size_t max_ground_set() {
    if (const char* env = std::getenv("CONFIG_RESOLVE_MAX_N")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "CONFIG_RESOLVE_MAX_N must be a positive integer");
        }
    }
    return 12;
}

LoadedInput load(const Job& job) {
    std::optional<InputFormat> fmt;
    if (!job.format.empty()) fmt = parse_format_name(job.format);
    LoadedInput in = load_input(job.input, fmt);
    if (in.matroid.size() > max_ground_set())
        throw Error(ErrorCode::TooLarge, "ground set of size " + std::to_string(in.matroid.size()) +
                                             " exceeds CONFIG_RESOLVE_MAX_N=" + std::to_string(max_ground_set()));
    return in;
}

const Configuration& require_config(const LoadedInput& in) {
    if (!in.config) throw Error(ErrorCode::InvalidArgument, "this command needs a matrix or graph input");
    return *in.config;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string vector_string(const Vector& v) {
    std::vector<std::string> parts;
    for (const auto& s : v) parts.push_back(s.to_string());
    return "(" + join(parts, ",") + ")";
}

std::vector<std::string> labels(const std::vector<Subset>& sets, std::size_t n) {
    std::vector<std::string> out;
    for (Subset s : sets) out.push_back(subset_label(s, n));
    return out;
}

void emit(const Job& job, const Json& j, const std::string& text) {
    if (job.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << "seed: " << job.seed << "\n" << text;
}

int cmd_matroid_info(const Job& job) {
    const LoadedInput in = load(job);
    const Matroid& m = in.matroid;
    const std::size_t n = m.size();
    std::ostringstream out;
    Json j = {{"seed", job.seed}, {"n", n}, {"rank", m.rank()}, {"bases", m.bases().size()}};

    const FlatLattice lat = flats(m);
    Json by_rank = Json::object();
    for (int k = 0; k <= m.rank(); ++k) {
        std::vector<std::string> at;
        for (std::size_t i = 0; i < lat.flats.size(); ++i)
            if (lat.ranks[i] == k) at.push_back(subset_label(lat.flats[i], n));
        by_rank[std::to_string(k)] = at;
        out << "flats of rank " << k << ": " << join(at, ", ") << "\n";
    }
    j["flats"] = by_rank;

    std::vector<Subset> nonround;
    for (Subset f : lat.proper())
        if (rank_of(m, m.ground() & ~f) < m.rank()) nonround.push_back(f);
    const bool connected = is_connected(m), round = nonround.empty();
    j["connected"] = connected;
    j["round"] = round;
    j["nonround_flats"] = labels(nonround, n);
    out << "n: " << n << "; rank: " << m.rank() << "; bases: " << m.bases().size() << "\n";
    out << "connected: " << (connected ? "true" : "false") << "\n";
    out << "round: " << (round ? "true" : "false");
    if (!round) out << "; non-round flats: " << join(labels(nonround, n), ", ");
    out << "\n";

    if (loops(m) == 0) {
        const ClassPoly chi = char_poly(m), chibar = reduced_char_poly(m);
        j["chi"] = chi.to_string('t');
        j["chi_bar"] = chibar.to_string('t');
        out << "chi: " << chi.to_string('t') << "; chi_bar: " << chibar.to_string('t') << "\n";
    } else {
        out << "chi: 0 (matroid has loops)\n";
    }

    const Matroid d = dual(m);
    j["dual"] = {{"rank", d.rank()}, {"bases", d.bases().size()}, {"round", is_round(d)}};
    out << "dual: rank " << d.rank() << ", " << d.bases().size() << " bases, round: " << (is_round(d) ? "true" : "false")
        << "\n";

    // singular points of Lambda over the non-round strata, drawn with the given seed
    if (in.config && connected) {
        Rng rng(job.seed);
        Json witnesses = Json::array();
        for (Subset f : nonround) {
            auto pt = singular_witness(*in.config, f, rng);
            if (!pt) continue;
            const std::size_t rk = jacobian_rank(*in.config, *pt);
            witnesses.push_back({{"flat", subset_label(f, n)},
                                 {"w", vector_string(pt->w)},
                                 {"beta", vector_string(pt->beta)},
                                 {"jacobian_rank", rk}});
            out << "witness on stratum " << subset_label(f, n) << ": w=" << vector_string(pt->w)
                << ", beta=" << vector_string(pt->beta) << ", jacobian rank " << rk << " < " << m.rank() << "\n";
        }
        j["witnesses"] = witnesses;
    }
    emit(job, j, out.str());
    return kOk;
}

int cmd_psi(const Job& job, bool check_det) {
    const LoadedInput in = load(job);
    const Configuration& c = require_config(in);
    const MultiPoly psi = psi_basis_expansion(c);
    Json j = {{"seed", job.seed}, {"psi", to_json(psi)}};
    std::string text = "psi: " + psi.to_string() + "\n";
    int code = kOk;
    if (check_det) {
        const bool same = poly_det(qw_matrix(c), c.x_variables()) == psi;
        j["det_check"] = same ? "pass" : "fail";
        text += std::string("det check: ") + (same ? "pass" : "fail") + "\n";
        if (!same) code = kVerify;
    }
    emit(job, j, text);
    return code;
}

int cmd_fan(const Job& job, const std::string& which, bool unimodular, bool maps, bool refine) {
    const Matroid m = load(job).matroid;
    Fan fan;
    if (which == "bergman")
        fan = bergman_fan(m);
    else if (which == "square-conormal")
        fan = square_conormal_fan(m);
    else if (which == "delta")
        fan = delta_fan(m);
    else
        fan = delta_tilde_fan(m);

    Json j = to_json(fan);
    j["seed"] = job.seed;
    j["which"] = which;
    std::ostringstream out;
    out << "fan: " << which << "; rays: " << fan.rays.size() << "; maximal cones: " << count_maximal_cones(fan)
        << "; dimension: " << fan.dimension() << "\n";
    for (std::size_t i = 0; i < fan.rays.size(); ++i) out << "  ray " << i << " " << fan.labels[i] << " " << fan.rays[i].to_string() << "\n";
    bool ok = true;

    if (unimodular) {
        std::vector<std::string> bad;
        for (const auto& cone : fan.cones)
            if (!is_unimodular(cone_generators(fan, cone))) {
                std::vector<std::string> names;
                for (std::size_t i : cone) names.push_back(fan.labels[i]);
                bad.push_back("{" + join(names, " ") + "}");
            }
        j["unimodular"] = bad.empty() ? "pass" : "fail";
        out << "unimodular: " << (bad.empty() ? "pass" : "fail: " + join(bad, ", ")) << "\n";
        ok = ok && bad.empty();
    }
    if (maps) {
        if (which == "bergman") throw Error(ErrorCode::InvalidArgument, "--verify-maps needs a fan in N_{E,E}");
        auto first = coordinate_fan_failures(fan, Block::First, Sign::Plus);
        auto second = coordinate_fan_failures(fan, Block::Second, Sign::Minus);
        j["maps"] = {{"pi1", first.empty() ? "pass" : "fail"}, {"-pi2", second.empty() ? "pass" : "fail"}};
        out << "π1: " << (first.empty() ? "pass" : "fail") << ", -π2: " << (second.empty() ? "pass" : "fail") << "\n";
        if (!first.empty()) out << "  π1 counterexamples: " << join(first, ", ") << "\n";
        if (!second.empty()) out << "  -π2 counterexamples: " << join(second, ", ") << "\n";
        ok = ok && first.empty() && second.empty();
    }
    if (refine) {
        if (which != "delta-tilde" && which != "delta")
            throw Error(ErrorCode::InvalidArgument, "--verify-refines compares delta-tilde or delta against delta");
        const RefinementReport rep = check_refinement(fan, delta_fan(m));
        j["refines"] = rep.ok ? "pass" : "fail";
        out << "refines delta: " << (rep.ok ? "pass" : "fail: " + rep.reason) << "\n";
        ok = ok && rep.ok;
    }
    emit(job, j, out.str());
    return ok ? kOk : kVerify;
}

int cmd_resolve_report(const Job& job, const std::string& flat_label, const std::string& s_label,
                       const std::vector<std::string>& pair) {
    const Matroid m = load(job).matroid;
    const std::size_t n = m.size();
    std::ostringstream out;
    Json j = {{"seed", job.seed}};
    if (!flat_label.empty()) {
        const Subset f = parse_subset(flat_label, n), s = parse_subset(s_label, n);
        const Fan fib = fibre_fan(m, f, s);
        std::vector<SquareBiflat> divisors;
        for (const auto& l : fib.labels) divisors.push_back(parse_biflat(l, n));
        out << "F=" << subset_label(f, n) << ", S=" << subset_label(s, n) << ": " << fib.rays.size() << " rays\n";
        for (std::size_t i = 0; i < fib.rays.size(); ++i) out << "  " << fib.labels[i] << "  " << fib.rays[i].to_string() << "\n";
        out << "maximal cones: " << fib.cones.size() << "\n";
        Json table = Json::array();
        out << "incidence:\n";
        for (std::size_t a = 0; a < divisors.size(); ++a)
            for (std::size_t b = a + 1; b < divisors.size(); ++b) {
                const bool meet = divisor_incidence({divisors[a], divisors[b]}, n);
                table.push_back({fib.labels[a], fib.labels[b], meet ? "meet" : "disjoint"});
                out << "  " << fib.labels[a] << " , " << fib.labels[b] << ": " << (meet ? "meet" : "disjoint") << "\n";
            }
        j["fibre_fan"] = to_json(fib);
        j["divisors"] = fib.labels;
        j["incidence"] = table;
    }
    if (!pair.empty()) {
        std::vector<SquareBiflat> bs;
        for (const auto& l : pair) bs.push_back(parse_biflat(l, n));
        const bool meet = divisor_incidence(bs, n);
        j["query"] = {{"divisors", pair}, {"incidence", meet ? "meet" : "disjoint"}};
        out << "incidence(" << join(pair, ", ") << "): " << (meet ? "meet" : "disjoint") << "\n";
    }
    if (flat_label.empty() && pair.empty()) throw Error(ErrorCode::InvalidArgument, "pass --F and --S, or --incidence");
    emit(job, j, out.str());
    return kOk;
}

int cmd_classes(const Job& job) {
    const Matroid m = load(job).matroid;
    const int n = static_cast<int>(m.size()), r = m.rank();
    const ClassPoly lambda = motivic_class(m);
    const BiDegree bideg = chow_bidegree(n, r);
    const BettiTable betti = resolution_betti(n, r);
    const int a = a_invariant(n, r);
    const std::int64_t type = resolution_type(n, r);

    Json j = {{"seed", job.seed},   {"lambda_class", to_json(lambda)}, {"bidegree", bideg.to_string()},
              {"a_invariant", a}, {"type", type},                   {"betti", to_json(betti)}};
    std::ostringstream out;
    out << "[Λ]=" << lambda.to_string() << "; bidegree " << bideg.to_string() << "; a-inv=" << a << "; type=" << type << "\n";
    out << "Betti table:\n" << betti.to_string();
    if (r > 1 && is_round(m)) {
        const auto ranks = cohomology_basis(m);
        j["cohomology_ranks"] = ranks;
        std::vector<std::string> parts;
        for (auto x : ranks) parts.push_back(std::to_string(x));
        out << "cohomology ranks: " << join(parts, ",") << "\n";
        j["boundary_case"] = n == 2 * r - 1;
        if (n == 2 * r - 1)
            out << "note: n = 2r-1, the relation's a^r b^(n-2r) term has a negative b-power and is dropped "
                   "(it lies in (a^r)); review this boundary case by hand\n";
    } else {
        j["cohomology_ranks"] = nullptr;
        out << "cohomology ranks: n/a (" << (r == 1 ? "rank 1" : "not round") << ")\n";
    }
    emit(job, j, out.str());
    return kOk;
}

int cmd_charp(const Job& job, std::uint64_t p, bool strict) {
    const LoadedInput in = load(job);
    const Configuration& c = require_config(in);
    const StandardForm sf = row_reduce_to_standard(c);
    std::vector<Certificate> certs{lead_term_certificate(sf.config, strict)};
    if (p != 0) certs.push_back(fedder_witness(sf.config, p));
    certs.push_back(linkage_certificate(sf.config));

    Json list = Json::array();
    std::ostringstream out;
    std::vector<std::string> perm;
    for (std::size_t k : sf.permutation) perm.push_back(std::to_string(k + 1));
    out << "column order: " << join(perm, " ") << "\n";
    bool ok = true;
    for (auto& cert : certs) {
        cert.permutation = sf.permutation;
        list.push_back(to_json(cert));
        ok = ok && cert.pass;
        out << cert.kind << (cert.p ? " (p=" + std::to_string(cert.p) + ")" : "") << ": " << (cert.pass ? "pass" : "fail")
            << " - " << cert.reason << "\n";
        if (!cert.leads.empty()) out << "  leads: " << join(cert.leads, ", ") << "\n";
        if (!cert.witness.empty()) out << "  witness: " << cert.witness << "\n";
        for (const auto& g : cert.generators) out << "  generator: " << g << "\n";
        for (const auto& note : cert.cited) out << "  cited, not computed: " << note << "\n";
    }
    emit(job, {{"seed", job.seed}, {"certificates", list}}, out.str());
    return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"configres: configuration hypersurfaces, Bloch incidence varieties and their tropical resolutions"};
    app.require_subcommand(1);
    Job job;
    app.add_flag("--json", job.json, "Emit JSON instead of text");
    app.add_option("--seed", job.seed, "Seed for randomized searches")->capture_default_str();
    app.add_option("--format", job.format, "Input format, overriding the file extension")
        ->check(CLI::IsMember({"graph", "matrix", "bases"}));
    app.fallthrough();

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", job.input, "Input file")->required(); };

    auto* info = app.add_subcommand("matroid-info", "Rank, flats, connectivity, roundness, characteristic polynomials");
    add_input(info);

    bool check_det = false;
    auto* psi = app.add_subcommand("psi", "Configuration polynomial");
    add_input(psi);
    psi->add_flag("--check-det", check_det, "Cross-check against det(A diag(x) A^T)");

    std::string which = "delta-tilde";
    bool v_unimodular = false, v_maps = false, v_refines = false;
    auto* fan = app.add_subcommand("fan", "Fans in N_{E,E} and the Bergman fan");
    add_input(fan);
    fan->add_option("--which", which)->check(CLI::IsMember({"bergman", "square-conormal", "delta", "delta-tilde"}))->capture_default_str();
    fan->add_flag("--verify-unimodular", v_unimodular);
    fan->add_flag("--verify-maps", v_maps);
    fan->add_flag("--verify-refines", v_refines);

    std::string flat_label, s_label;
    std::vector<std::string> pair;
    auto* report = app.add_subcommand("resolve-report", "Fibre fan over a stratum and boundary divisor incidence");
    add_input(report);
    auto* f_opt = report->add_option("--F", flat_label, "Flat label, e.g. 124");
    report->add_option("--S", s_label, "Subset label, e.g. 2345")->needs(f_opt);
    f_opt->needs(report->get_option("--S"));
    report->add_option("--incidence", pair, "Square biflats whose divisors are tested, e.g. ∅⊆24 ∅⊆35")->expected(2, 16);

    auto* classes = app.add_subcommand("classes", "Motivic class, Chow bidegree, Betti table, cohomology");
    add_input(classes);

    std::uint64_t p = 0;
    bool strict = false;
    auto* charp = app.add_subcommand("charp", "Lead-term, Fedder and linkage certificates");
    add_input(charp);
    charp->add_option("--p", p, "Prime for the Fedder witness");
    charp->add_flag("--strict", strict, "Also reduce all S-pairs to zero");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    }

    try {
        if (*info) return cmd_matroid_info(job);
        if (*psi) return cmd_psi(job, check_det);
        if (*fan) return cmd_fan(job, which, v_unimodular, v_maps, v_refines);
        if (*report) return cmd_resolve_report(job, flat_label, s_label, pair);
        if (*classes) return cmd_classes(job);
        if (*charp) return cmd_charp(job, p, strict);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? kParse : kComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    }
    return kComputation;
}
