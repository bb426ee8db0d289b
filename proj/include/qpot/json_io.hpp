#ifndef QPOT_JSON_IO_HPP
#define QPOT_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qpot/error.hpp"
#include "qpot/matrix.hpp"
#include "qpot/potential.hpp"
#include "qpot/quiver.hpp"
#include "qpot/scalar.hpp"

namespace qpot {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Real scalars become "p/q" strings; others {"re": "...", "im": "..."}.
inline json to_json(const Scalar& s) {
    if (s.is_real()) return s.re().get_str();
    return json{{"re", s.re().get_str()}, {"im", s.im().get_str()}};
}

namespace json_detail {
inline mpq_class rational_from(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) return Scalar::parse_rational(j.get<std::string>());
    throw InputError("expected an integer or rational string, got " + j.dump());
}
} // namespace json_detail

inline Scalar scalar_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("re")) throw InputError("complex scalar needs \"re\": " + j.dump());
        const mpq_class re = json_detail::rational_from(j.at("re"));
        const mpq_class im = j.contains("im") ? json_detail::rational_from(j.at("im")) : mpq_class(0);
        return Scalar(re, im);
    }
    return Scalar(json_detail::rational_from(j));
}

inline json to_json(const ScalarMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Nested row arrays; `cols` is needed to size matrices with no rows' worth of entries.
inline ScalarMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows) throw InputError(what + " must be an array of " + std::to_string(rows) + " rows");
    ScalarMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InputError(what + " row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

inline json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
}

inline json to_json(const FramedRep& rho) {
    return json{{"n", rho.n}, {"r", rho.r}, {"A", to_json(rho.A)}, {"B", to_json(rho.B)},
                {"C", to_json(rho.C)}, {"V", to_json(rho.V)}};
}

inline FramedRep framed_rep_from_json(const json& j) {
    if (!j.is_object()) throw InputError("framed representation must be a JSON object");
    for (const char* key : {"n", "r", "A", "B", "C", "V"})
        if (!j.contains(key)) throw InputError(std::string("framed representation is missing \"") + key + "\"");
    if (!j["n"].is_number_unsigned() || !j["r"].is_number_unsigned())
        throw InputError("n and r must be nonnegative integers");
    const auto n = j["n"].get<std::size_t>(), r = j["r"].get<std::size_t>();
    FramedRep rho{n, r, matrix_from_json(j["A"], n, n, "A"), matrix_from_json(j["B"], n, n, "B"),
                  matrix_from_json(j["C"], n, n, "C"), matrix_from_json(j["V"], n, r, "V")};
    rho.validate();
    return rho;
}

inline json to_json(const PolystableData& d) {
    json pts = json::array();
    for (const auto& p : d.points) pts.push_back(json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}));
    return json{{"points", pts}, {"mults", d.mults}};
}

inline PolystableData polystable_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("mults"))
        throw InputError("polystable data needs \"points\" and \"mults\"");
    PolystableData d;
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 3) throw InputError("each point must have three coordinates");
        d.points.push_back({scalar_from_json(p[0]), scalar_from_json(p[1]), scalar_from_json(p[2])});
    }
    for (const auto& a : j["mults"]) {
        if (!a.is_number_integer() || a.get<long>() < 1) throw InputError("multiplicities must be positive integers");
        d.mults.push_back(a.get<std::size_t>());
    }
    d.validate();
    return d;
}

inline json to_json(const Quiver& q) {
    json edges = json::array();
    for (const auto& e : q.edges()) edges.push_back(json{{"source", e.source}, {"target", e.target}, {"label", e.label}});
    return json{{"vertices", q.vertex_count()}, {"edges", edges}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace qpot

#endif // QPOT_JSON_IO_HPP
