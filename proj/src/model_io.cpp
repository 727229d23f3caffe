#include "qsl/model_io.hpp"

#include "qsl/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace qsl {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw FormatError("field '" + field + "': " + what);
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line/column pair.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                          ": JSON syntax error");
    }
}

Complex parse_entry(const json& pair, const std::string& field) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        field_error(field, "expected a [re, im] pair of numbers");
    }
    return {pair[0].get<double>(), pair[1].get<double>()};
}

Matrix parse_matrix(const json& node, int dim, const std::string& field) {
    if (!node.is_array()) field_error(field, "expected an array");
    Matrix m(dim, dim);
    const auto n = static_cast<std::size_t>(dim);
    const bool nested = !node.empty() && node[0].is_array() && !node[0].empty() && node[0][0].is_array();
    if (nested) {
        if (node.size() != n) field_error(field, "expected " + std::to_string(dim) + " rows");
        for (std::size_t r = 0; r < n; ++r) {
            const std::string row_field = field + "[" + std::to_string(r) + "]";
            if (!node[r].is_array() || node[r].size() != n) {
                field_error(row_field, "expected " + std::to_string(dim) + " entries");
            }
            for (std::size_t c = 0; c < n; ++c) {
                m(static_cast<int>(r), static_cast<int>(c)) =
                    parse_entry(node[r][c], row_field + "[" + std::to_string(c) + "]");
            }
        }
    } else {
        if (node.size() != n * n) field_error(field, "expected " + std::to_string(n * n) + " [re, im] pairs");
        for (std::size_t i = 0; i < n * n; ++i) {
            m(static_cast<int>(i / n), static_cast<int>(i % n)) =
                parse_entry(node[i], field + "[" + std::to_string(i) + "]");
        }
    }
    return m;
}

int infer_dim(const json& node, const std::string& field) {
    if (!node.is_array() || node.empty()) field_error(field, "expected a non-empty array");
    if (node[0].is_array() && !node[0].empty() && node[0][0].is_array()) return static_cast<int>(node.size());
    const auto root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(node.size()))));
    if (static_cast<std::size_t>(root * root) != node.size()) field_error(field, "entry count is not a square");
    return root;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

LindbladModel parse_model_json(std::string_view text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw FormatError("field '<root>': expected an object");

    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) field_error("dim", "missing or not an integer");
    const int dim = doc["dim"].get<int>();
    if (dim < kMinDim || dim > kMaxDim) field_error("dim", "must be in [2, 8], got " + std::to_string(dim));

    std::string name = "custom";
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) field_error("name", "expected a string");
        name = doc["name"].get<std::string>();
    }

    if (!doc.contains("hamiltonian")) field_error("hamiltonian", "missing");
    const Matrix h = parse_matrix(doc["hamiltonian"], dim, "hamiltonian");
    std::optional<HermitianMatrix> hamiltonian;
    try {
        hamiltonian.emplace(h);
    } catch (const Error& e) {
        field_error("hamiltonian", e.what());
    }

    std::vector<JumpOperator> jumps;
    if (doc.contains("jumps")) {
        const json& list = doc["jumps"];
        if (!list.is_array()) field_error("jumps", "expected an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string field = "jumps[" + std::to_string(k) + "]";
            const json& item = list[k];
            if (!item.is_object()) field_error(field, "expected an object");
            if (!item.contains("matrix")) field_error(field + ".matrix", "missing");
            if (!item.contains("rate") || !item["rate"].is_number()) field_error(field + ".rate", "missing or not a number");
            const double rate = item["rate"].get<double>();
            if (!(rate >= 0.0) || !std::isfinite(rate)) field_error(field + ".rate", "must be >= 0");
            jumps.push_back({parse_matrix(item["matrix"], dim, field + ".matrix"), rate});
        }
    }
    return LindbladModel(std::move(name), std::move(*hamiltonian), std::move(jumps));
}

LindbladModel load_model_file(const std::string& path) {
    try {
        return parse_model_json(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

DensityMatrix parse_state_json(std::string_view text) {
    const json doc = parse_document(text);
    const json& node = doc.is_object() ? (doc.contains("matrix") ? doc["matrix"] : json()) : doc;
    if (node.is_null()) field_error("matrix", "missing");
    const int dim = infer_dim(node, "matrix");
    if (dim < kMinDim || dim > kMaxDim) field_error("matrix", "dimension must be in [2, 8]");
    try {
        return DensityMatrix(parse_matrix(node, dim, "matrix"));
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        field_error("matrix", e.what());
    }
}

DensityMatrix load_state_file(const std::string& path) {
    try {
        return parse_state_json(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

std::string model_to_json(const LindbladModel& model) {
    json doc;
    doc["name"] = model.name();
    doc["dim"] = model.dim();
    doc["hamiltonian"] = matrix_to_json(model.hamiltonian().matrix());
    doc["jumps"] = json::array();
    for (const JumpOperator& j : model.jumps()) {
        doc["jumps"].push_back({{"matrix", matrix_to_json(j.op)}, {"rate", j.rate}});
    }
    return doc.dump(2);
}

}  // namespace qsl
