#include "configres/io.hpp"

#include <fstream>
#include <sstream>

#include "configres/errors.hpp"

namespace configres {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

// Wraps json accessor failures (missing keys, wrong types) as ParseError.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace

InputFormat detect_format(const std::string& path) {
    if (ends_with(path, ".graph")) return InputFormat::Graph;
    if (ends_with(path, ".mat.json")) return InputFormat::Matrix;
    if (ends_with(path, ".bases.json")) return InputFormat::Bases;
    throw Error(ErrorCode::ParseError, "cannot infer the input format of " + path + "; pass --format");
}

InputFormat parse_format_name(const std::string& name) {
    if (name == "graph") return InputFormat::Graph;
    if (name == "matrix") return InputFormat::Matrix;
    if (name == "bases") return InputFormat::Bases;
    throw Error(ErrorCode::ParseError, "unknown format '" + name + "'");
}

std::vector<std::pair<int, int>> parse_graph_text(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::istringstream in(text);
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int u, v;
        if (!(fields >> u)) continue;
        std::string extra;
        if (!(fields >> v) || (fields >> extra))
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'u v'");
        edges.emplace_back(u, v);
    }
    if (edges.empty()) throw Error(ErrorCode::ParseError, "graph has no edges");
    return edges;
}

Matrix parse_matrix_json(const std::string& text) {
    const Json j = parse_json(text);
    return guarded([&] {
        std::uint64_t p = 0;
        const std::string field = j.value("field", std::string("Q"));
        if (field == "Fp") {
            p = j.at("p").get<std::uint64_t>();
            if (!is_prime(p)) throw Error(ErrorCode::ParseError, std::to_string(p) + " is not prime");
        } else if (field != "Q") {
            throw Error(ErrorCode::ParseError, "field must be Q or Fp");
        }
        std::vector<Vector> rows;
        for (const auto& row : j.at("rows")) {
            Vector v;
            for (const auto& entry : row) {
                const std::string s = entry.is_string() ? entry.get<std::string>() : entry.dump();
                try {
                    v.push_back(Scalar::parse(s, p));
                } catch (const Error& e) {
                    throw Error(ErrorCode::ParseError, "bad matrix entry '" + s + "'");
                }
            }
            if (!rows.empty() && v.size() != rows.front().size())
                throw Error(ErrorCode::ParseError, "rows have different lengths");
            rows.push_back(std::move(v));
        }
        if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::ParseError, "empty matrix");
        return Matrix::from_rows(rows);
    });
}

Matroid parse_bases_json(const std::string& text) {
    const Json j = parse_json(text);
    return guarded([&] {
        const auto n = j.at("n").get<std::size_t>();
        if (n == 0 || n > kMaxGroundSet) throw Error(ErrorCode::ParseError, "n out of range");
        std::vector<Subset> bases;
        for (const auto& b : j.at("bases")) {
            if (b.is_string()) {
                bases.push_back(parse_subset(b.get<std::string>(), n));
                continue;
            }
            Subset s = 0;
            for (int e : b.get<std::vector<int>>()) {
                if (e < 1 || static_cast<std::size_t>(e) > n) throw Error(ErrorCode::ParseError, "element out of range");
                s |= element(static_cast<std::size_t>(e));
            }
            bases.push_back(s);
        }
        return Matroid::from_bases(n, bases);
    });
}

LoadedInput parse_input(const std::string& text, InputFormat format) {
    switch (format) {
        case InputFormat::Graph: {
            auto edges = parse_graph_text(text);
            Matroid m = matroid_from_graph(edges);
            return {format, m, Configuration(graph_incidence_matrix(edges)), edges};
        }
        case InputFormat::Matrix: {
            Configuration c(parse_matrix_json(text));
            return {format, c.matroid(), c, {}};
        }
        case InputFormat::Bases:
            return {format, parse_bases_json(text), std::nullopt, {}};
    }
    throw Error(ErrorCode::ParseError, "unknown format");
}

LoadedInput load_input(const std::string& path, std::optional<InputFormat> format) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str(), format ? *format : detect_format(path));
}

Json to_json(const Fan& fan) {
    Json rays = Json::array();
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        rays.push_back({{"label", i < fan.labels.size() ? fan.labels[i] : ""}, {"e", fan.rays[i].e}, {"f", fan.rays[i].f}});
    return {{"n", fan.n}, {"rays", rays}, {"cones", fan.cones}};
}

Fan fan_from_json(const Json& j) {
    return guarded([&] {
        Fan fan;
        fan.n = j.at("n").get<std::size_t>();
        for (const auto& r : j.at("rays")) {
            fan.rays.emplace_back(r.at("e").get<std::vector<std::int64_t>>(), r.at("f").get<std::vector<std::int64_t>>());
            fan.labels.push_back(r.value("label", std::string()));
        }
        fan.cones = j.at("cones").get<std::vector<std::vector<std::size_t>>>();
        for (const auto& cone : fan.cones)
            for (std::size_t i : cone)
                if (i >= fan.rays.size()) throw Error(ErrorCode::ParseError, "cone refers to a missing ray");
        return fan;
    });
}

Json to_json(const MultiPoly& p) {
    std::uint64_t modulus = 0;
    if (!p.is_zero()) modulus = p.terms().begin()->second.modulus();
    return {{"variables", p.variables() ? *p.variables() : std::vector<std::string>{}},
            {"p", modulus},
            {"polynomial", p.to_string()}};
}

MultiPoly poly_from_json(const Json& j) {
    return guarded([&] {
        VariableList vars = make_variables(j.at("variables").get<std::vector<std::string>>());
        return parse_poly(j.at("polynomial").get<std::string>(), vars, j.value("p", std::uint64_t{0}));
    });
}

Json to_json(const Certificate& c) {
    Json j = {{"kind", c.kind}, {"order", c.order}, {"leads", c.leads}, {"witness", c.witness},
              {"p", c.p},       {"verdict", c.pass ? "pass" : "fail"}, {"reason", c.reason}};
    if (!c.permutation.empty()) {
        std::vector<std::size_t> one_based;
        for (std::size_t k : c.permutation) one_based.push_back(k + 1);
        j["permutation"] = one_based;
    }
    if (!c.generators.empty()) j["generators"] = c.generators;
    if (!c.cited.empty()) j["cited"] = c.cited;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    return guarded([&] {
        Certificate c;
        c.kind = j.at("kind").get<std::string>();
        c.order = j.value("order", std::string());
        c.leads = j.value("leads", std::vector<std::string>{});
        c.witness = j.value("witness", std::string());
        c.p = j.value("p", std::uint64_t{0});
        const std::string verdict = j.at("verdict").get<std::string>();
        if (verdict != "pass" && verdict != "fail") throw Error(ErrorCode::ParseError, "verdict must be pass or fail");
        c.pass = verdict == "pass";
        c.reason = j.value("reason", std::string());
        for (std::size_t k : j.value("permutation", std::vector<std::size_t>{})) {
            if (k == 0) throw Error(ErrorCode::ParseError, "permutation entries are 1-based");
            c.permutation.push_back(k - 1);
        }
        c.generators = j.value("generators", std::vector<std::string>{});
        c.cited = j.value("cited", std::vector<std::string>{});
        return c;
    });
}

Json to_json(const BettiTable& t) {
    Json modules = Json::array();
    for (const auto& mod : t.modules) {
        Json terms = Json::array();
        for (auto [twist, mult] : mod) terms.push_back({{"twist", twist}, {"rank", mult}});
        modules.push_back(terms);
    }
    return {{"modules", modules}};
}

BettiTable betti_from_json(const Json& j) {
    return guarded([&] {
        BettiTable t;
        for (const auto& mod : j.at("modules")) {
            auto& out = t.modules.emplace_back();
            for (const auto& term : mod) out.emplace_back(term.at("twist").get<int>(), term.at("rank").get<std::int64_t>());
        }
        return t;
    });
}

Json to_json(const ClassPoly& c) { return {{"coefficients", c.coefficients()}, {"text", c.to_string()}}; }

}  // namespace configres
