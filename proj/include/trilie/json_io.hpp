#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trilie/algebra.hpp"
#include "trilie/cohomology.hpp"
#include "trilie/error.hpp"
#include "trilie/matrix.hpp"
#include "trilie/representation.hpp"
#include "trilie/subspace.hpp"

namespace trilie {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// scalars: [num, den] pairs, 1-based indices at the file boundary
// ---------------------------------------------------------------------------

inline Rational parse_rational(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError("expected [numerator, denominator] at " + where, where);
    auto part = [&](const Json& v) -> BigInt {
        if (v.is_number_integer()) return BigInt(v.get<long long>());
        if (v.is_string()) return BigInt(v.get<std::string>());
        throw SchemaError("expected integer or integer string at " + where, where);
    };
    BigInt num = part(j[0]);
    BigInt den = part(j[1]);
    if (den == 0) throw SchemaError("zero denominator at " + where, where);
    return Rational(num, den);
}

inline Json rational_to_json(const Rational& q) {
    auto part = [](const BigInt& v) -> Json {
        static const BigInt lo = std::numeric_limits<long long>::min();
        static const BigInt hi = std::numeric_limits<long long>::max();
        if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
        return Json(v.str());
    };
    return Json::array({part(numerator(q)), part(denominator(q))});
}

inline Vec parse_vec(const Json& j, int dim, const std::string& where) {
    if (!j.is_array() || int(j.size()) != dim)
        throw SchemaError("expected a coordinate array of length " + std::to_string(dim) + " at " + where, where);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = parse_rational(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

inline Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(rational_to_json(x));
    return j;
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat parse_mat(const Json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || int(j.size()) != rows)
        throw SchemaError("expected " + std::to_string(rows) + " matrix rows at " + where, where);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        Vec row = parse_vec(j[i], cols, where + "[" + std::to_string(i) + "]");
        for (int c = 0; c < cols; ++c) m(i, c) = std::move(row[c]);
    }
    return m;
}

// ---------------------------------------------------------------------------
// algebra files: {"dim": d, "bracket": [[i, j, k, [num,den] x d], ...]}
// ---------------------------------------------------------------------------

inline std::vector<StructureEntry> parse_structure_entries(const Json& j, int dim, const std::string& where) {
    if (!j.is_array()) throw SchemaError("expected an entry array at " + where, where);
    std::vector<StructureEntry> entries;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const Json& e = j[t];
        const std::string loc = where + "[" + std::to_string(t) + "]";
        if (!e.is_array() || int(e.size()) != 3 + dim)
            throw SchemaError("expected [i, j, k, " + std::to_string(dim) + " coordinates] at " + loc, loc);
        if (!e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_number_integer())
            throw SchemaError("expected integer indices at " + loc, loc);
        StructureEntry s;
        s.i = e[0].get<int>() - 1;
        s.j = e[1].get<int>() - 1;
        s.k = e[2].get<int>() - 1;
        s.value.resize(dim);
        for (int c = 0; c < dim; ++c) s.value[c] = parse_rational(e[3 + c], loc);
        entries.push_back(std::move(s));
    }
    return entries;
}

inline BracketTensor parse_bracket_tensor(const Json& j, const std::string& where = "algebra") {
    if (!j.is_object() || !j.contains("dim") || !j.contains("bracket"))
        throw SchemaError("expected an object with \"dim\" and \"bracket\" at " + where, where);
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() <= 0)
        throw SchemaError("\"dim\" must be a positive integer at " + where, where);
    const int dim = j["dim"].get<int>();
    return BracketTensor::from_entries(dim, parse_structure_entries(j["bracket"], dim, where + ".bracket"));
}

inline ThreeLieAlgebra parse_algebra(const Json& j, const std::string& where = "algebra") {
    return ThreeLieAlgebra(parse_bracket_tensor(j, where));
}

inline Json algebra_to_json(const ThreeLieAlgebra& a) {
    Json j;
    j["dim"] = a.dim();
    Json entries = Json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int k = i + 1; k < a.dim(); ++k)
            for (int l = k + 1; l < a.dim(); ++l) {
                Vec v = a.bracket_basis(i, k, l);
                if (is_zero(v)) continue;
                Json e = Json::array({i + 1, k + 1, l + 1});
                for (const auto& x : v) e.push_back(rational_to_json(x));
                entries.push_back(std::move(e));
            }
    j["bracket"] = std::move(entries);
    return j;
}

// ---------------------------------------------------------------------------
// linear map files: {"source_dim": d, "target_dim": e, "matrix": e rows x d}
// ---------------------------------------------------------------------------

inline LinearMap parse_linear_map(const Json& j, const std::string& where = "map") {
    if (!j.is_object() || !j.contains("source_dim") || !j.contains("target_dim") || !j.contains("matrix"))
        throw SchemaError("expected an object with \"source_dim\", \"target_dim\", \"matrix\" at " + where, where);
    const int src = j["source_dim"].get<int>();
    const int tgt = j["target_dim"].get<int>();
    if (src <= 0 || tgt <= 0) throw SchemaError("map dimensions must be positive at " + where, where);
    return LinearMap(src, tgt, parse_mat(j["matrix"], tgt, src, where + ".matrix"));
}

inline Json linear_map_to_json(const LinearMap& f) {
    Json j;
    j["source_dim"] = f.source_dim;
    j["target_dim"] = f.target_dim;
    j["matrix"] = mat_to_json(f.mat);
    return j;
}

// ---------------------------------------------------------------------------
// representation files mirror the algebra format, keyed by pairs [i, j]:
// {"dim": d, "module_dim": m, "pairs": [[i, j, col_1, ..., col_m], ...]}
// where col_b lists the output coordinates of the b-th module basis vector.
// ---------------------------------------------------------------------------

inline Representation parse_representation(const Json& j, const ThreeLieAlgebra& a,
                                           const std::string& where = "representation") {
    if (!j.is_object() || !j.contains("dim") || !j.contains("module_dim") || !j.contains("pairs"))
        throw SchemaError("expected an object with \"dim\", \"module_dim\", \"pairs\" at " + where, where);
    const int dim = j["dim"].get<int>();
    const int m = j["module_dim"].get<int>();
    if (dim != a.dim()) throw SchemaError("representation \"dim\" does not match the algebra at " + where, where);
    if (m < 0) throw SchemaError("\"module_dim\" must be nonnegative at " + where, where);
    PairBasis pb(dim);
    std::vector<Mat> actions(pb.count(), Mat(m, m));
    const Json& pairs = j["pairs"];
    if (!pairs.is_array()) throw SchemaError("expected a pair array at " + where + ".pairs", where);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const Json& e = pairs[t];
        const std::string loc = where + ".pairs[" + std::to_string(t) + "]";
        if (!e.is_array() || int(e.size()) != 2 + m)
            throw SchemaError("expected [i, j, " + std::to_string(m) + " columns] at " + loc, loc);
        const int i = e[0].get<int>() - 1;
        const int jj = e[1].get<int>() - 1;
        if (!(0 <= i && i < jj && jj < dim))
            throw IndexOutOfRange("representation pair indices must satisfy 1 <= i < j <= dim");
        Mat act(m, m);
        for (int b = 0; b < m; ++b) act.set_col(b, parse_vec(e[2 + b], m, loc));
        actions[pb.rank(i, jj)] = std::move(act);
    }
    return make_representation(a, m, std::move(actions));
}

// ---------------------------------------------------------------------------
// subspace files: {"ambient_dim": d, "basis": [vector x k]}
// ---------------------------------------------------------------------------

inline Subspace parse_subspace(const Json& j, const std::string& where = "subspace") {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis"))
        throw SchemaError("expected an object with \"ambient_dim\" and \"basis\" at " + where, where);
    const int d = j["ambient_dim"].get<int>();
    const Json& basis = j["basis"];
    if (!basis.is_array() || basis.empty())
        throw SchemaError("expected a nonempty basis array at " + where + ".basis", where);
    std::vector<Vec> cols;
    for (std::size_t t = 0; t < basis.size(); ++t)
        cols.push_back(parse_vec(basis[t], d, where + ".basis[" + std::to_string(t) + "]"));
    return Subspace(d, Mat::from_cols(d, cols));
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

inline Json report_to_json(const CohomologyReport& r, const std::string& verdict = "") {
    Json j;
    j["degree"] = r.degree;
    j["dimC"] = r.dim_cochain;
    j["dimZ"] = r.dim_cocycle;
    j["dimB"] = r.dim_coboundary;
    j["dimH"] = r.dim_cohomology;
    j["verdict"] = verdict;
    return j;
}

inline Json json_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path, path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("JSON parse error in " + path + ": " + e.what(), path);
    }
    return j;
}

}  // namespace trilie
