#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "configres/charp.hpp"
#include "configres/classes.hpp"
#include "configres/config.hpp"
#include "configres/fans.hpp"

namespace configres {

using Json = nlohmann::ordered_json;

enum class InputFormat { Graph, Matrix, Bases };

/// By extension: .graph, .mat.json, .bases.json; throws ParseError.
InputFormat detect_format(const std::string& path);
/// "graph", "matrix" or "bases"; throws ParseError.
InputFormat parse_format_name(const std::string& name);

/// Edge list, one "u v" pair per line; '#' starts a comment.
std::vector<std::pair<int, int>> parse_graph_text(const std::string& text);
/// {"rows": [["1","0","1/2"], ...], "field": "Q" | "Fp", "p": prime}.
Matrix parse_matrix_json(const std::string& text);
/// {"n": 4, "bases": ["12", "13", ...]} or with bases as arrays of 1-based elements.
Matroid parse_bases_json(const std::string& text);

struct LoadedInput {
    InputFormat format;
    Matroid matroid;
    std::optional<Configuration> config;  // absent for basis lists
    std::vector<std::pair<int, int>> edges;
};
/// Graphs become configurations through their pruned incidence matrix.
LoadedInput parse_input(const std::string& text, InputFormat format);
LoadedInput load_input(const std::string& path, std::optional<InputFormat> format = std::nullopt);

Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

Json to_json(const ClassPoly& c);

}  // namespace configres
