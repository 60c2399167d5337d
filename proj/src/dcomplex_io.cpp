#include "lhom/dcomplex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lhom {

using nlohmann::json;

namespace {

std::string key_of(std::size_t i, std::size_t j) {
    return std::to_string(i) + "," + std::to_string(j);
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Scalar entry_from_json(FieldSpec f, const json& v, const std::string& where) {
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::of_int(f, v.get<long>());
    throw ParseError(where, "matrix entry must be a string or an integer");
}

Mat mat_from_json(FieldSpec f, std::size_t rows, std::size_t cols, const json& v,
                  const std::string& where) {
    if (!v.is_array() || v.size() != rows)
        throw ParseError(where, "expected " + std::to_string(rows) + " rows");
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(where + "[" + std::to_string(i) + "]",
                             "expected " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = entry_from_json(f, row[j], where + "[" + std::to_string(i) + "]");
    }
    return m;
}

std::size_t uint_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string("$.") + key, "expected a non-negative integer");
    return j[key].get<std::size_t>();
}

std::pair<std::size_t, std::size_t> parse_key(const std::string& key, const std::string& where) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError(where, "map key must be \"i,j\"");
    try {
        std::size_t pos1 = 0, pos2 = 0;
        const std::size_t i = std::stoul(key.substr(0, comma), &pos1);
        const std::size_t j = std::stoul(key.substr(comma + 1), &pos2);
        if (pos1 != comma || pos2 != key.size() - comma - 1)
            throw ParseError(where, "map key must be \"i,j\" with decimal indices");
        return {i, j};
    } catch (const std::logic_error&) {
        throw ParseError(where, "map key must be \"i,j\" with decimal indices");
    }
}

}  // namespace

std::string save(const DoubleComplex& dc) {
    json j;
    if (dc.field().is_rationals())
        j["field"] = "Q";
    else
        j["field"] = json{{"Fp", dc.field().characteristic()}};
    j["rows"] = dc.rows();
    j["cols"] = dc.cols();
    json dims = json::array();
    for (std::size_t i = 0; i < dc.rows(); ++i) {
        json row = json::array();
        for (std::size_t jx = 0; jx < dc.cols(); ++jx) row.push_back(dc.dim_at({i, jx}));
        dims.push_back(std::move(row));
    }
    j["dims"] = std::move(dims);

    json hmaps = json::object(), vmaps = json::object();
    for (std::size_t i = 0; i < dc.rows(); ++i)
        for (std::size_t jx = 0; jx + 1 < dc.cols(); ++jx) {
            const Mat& m = dc.hmap(i, jx);
            if (m.rows() > 0 && m.cols() > 0) hmaps[key_of(i, jx)] = mat_to_json(m);
        }
    for (std::size_t i = 0; i + 1 < dc.rows(); ++i)
        for (std::size_t jx = 0; jx < dc.cols(); ++jx) {
            const Mat& m = dc.vmap(i, jx);
            if (m.rows() > 0 && m.cols() > 0) vmaps[key_of(i, jx)] = mat_to_json(m);
        }
    j["hmaps"] = std::move(hmaps);
    j["vmaps"] = std::move(vmaps);
    return j.dump(1) + "\n";
}

void save_file(const DoubleComplex& dc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open for writing: " + path);
    out << save(dc);
}

DoubleComplex load(const std::string& text, bool check_laws) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!j.is_object()) throw ParseError("$", "expected an object");
    for (const auto& [key, _] : j.items())
        if (key != "field" && key != "rows" && key != "cols" && key != "dims" &&
            key != "hmaps" && key != "vmaps")
            throw ParseError("$." + key, "unknown key");

    if (!j.contains("field")) throw ParseError("$.field", "missing");
    FieldSpec field = FieldSpec::rationals();
    const json& fj = j["field"];
    if (fj.is_string() && fj.get<std::string>() == "Q") {
        field = FieldSpec::rationals();
    } else if (fj.is_object() && fj.contains("Fp") && fj["Fp"].is_number_unsigned()) {
        try {
            field = FieldSpec::prime_field(fj["Fp"].get<std::uint32_t>());
        } catch (const InputError& e) {
            throw ParseError("$.field.Fp", e.what());
        }
    } else {
        throw ParseError("$.field", "expected \"Q\" or {\"Fp\": <prime>}");
    }

    const std::size_t rows = uint_field(j, "rows");
    const std::size_t cols = uint_field(j, "cols");
    if (rows == 0 || cols == 0) throw ParseError("$.rows", "grid must be non-empty");

    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != rows)
        throw ParseError("$.dims", "expected " + std::to_string(rows) + " rows");
    std::vector<std::size_t> dims(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j["dims"][i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("$.dims[" + std::to_string(i) + "]",
                             "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_unsigned())
                throw ParseError("$.dims[" + std::to_string(i) + "]",
                                 "dimensions must be non-negative integers");
            dims[i * cols + c] = row[c].get<std::size_t>();
        }
    }

    auto load_maps = [&](const char* name, bool horizontal) {
        std::vector<Mat> maps;
        const std::size_t map_rows = horizontal ? rows : rows - 1;
        const std::size_t map_cols = horizontal ? cols - 1 : cols;
        for (std::size_t i = 0; i < map_rows; ++i)
            for (std::size_t c = 0; c < map_cols; ++c) {
                const std::size_t tgt = horizontal ? dims[i * cols + c + 1] : dims[(i + 1) * cols + c];
                const std::size_t src = dims[i * cols + c];
                maps.push_back(Mat::zero(field, tgt, src));
            }
        if (!j.contains(name)) {
            // legal only if every map has a zero-dimensional endpoint
            for (const Mat& m : maps)
                if (m.rows() > 0 && m.cols() > 0)
                    throw ParseError(std::string("$.") + name, "missing");
            return maps;
        }
        const json& obj = j[name];
        if (!obj.is_object()) throw ParseError(std::string("$.") + name, "expected an object");
        std::vector<bool> seen(maps.size(), false);
        for (const auto& [key, value] : obj.items()) {
            const std::string where = std::string("$.") + name + "[\"" + key + "\"]";
            const auto [i, c] = parse_key(key, where);
            if (i >= map_rows || c >= map_cols) throw ParseError(where, "index out of range");
            const std::size_t idx = i * map_cols + c;
            const Mat& shape = maps[idx];
            maps[idx] = mat_from_json(field, shape.rows(), shape.cols(), value, where);
            seen[idx] = true;
        }
        for (std::size_t idx = 0; idx < maps.size(); ++idx)
            if (!seen[idx] && maps[idx].rows() > 0 && maps[idx].cols() > 0)
                throw ParseError(std::string("$.") + name,
                                 "missing map \"" + key_of(idx / map_cols, idx % map_cols) + "\"");
        return maps;
    };

    std::vector<Mat> hmaps = load_maps("hmaps", true);
    std::vector<Mat> vmaps = load_maps("vmaps", false);

    DoubleComplex dc(field, rows, cols, std::move(dims), std::move(hmaps), std::move(vmaps));
    if (check_laws) {
        ValidationReport report = validate(dc);
        if (!report.ok()) throw ValidationError(std::move(report));
    }
    return dc;
}

DoubleComplex load_file(const std::string& path, bool check_laws) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load(ss.str(), check_laws);
}

}  // namespace lhom
