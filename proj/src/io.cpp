#include "qrep/io.hpp"

#include <sstream>

#include "json.hpp"

namespace qrep {

using nlohmann::json;

namespace {

json field_to_json(const FieldSpec& f) {
    if (f.is_rational()) return json{{"kind", "q"}};
    return json{{"kind", "gf"}, {"p", f.p}};
}

FieldSpec field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "q") return FieldSpec::rationals();
    if (kind == "gf") return FieldSpec::gf(j.at("p").get<std::int64_t>());
    throw std::invalid_argument("unknown field kind: " + kind);
}

json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return json(s.residue());
    const Rational& r = s.rational();
    if (r.den.is_one()) {
        // emit small integers as numbers, large ones as strings
        std::string txt = r.num.to_string();
        if (txt.size() <= 15) return json(std::stoll(txt));
        return json(txt);
    }
    return json(r.to_string());
}

Scalar scalar_from_json(const json& j, const FieldSpec& f) {
    if (j.is_number_integer()) return Scalar::of_int(f, j.get<long long>());
    if (j.is_string()) {
        if (f.is_prime_field())
            throw std::invalid_argument("prime-field entries must be integers");
        std::string txt = j.get<std::string>();
        auto slash = txt.find('/');
        if (slash == std::string::npos) return Scalar::of_rational(Rational(BigInt::from_string(txt), BigInt(1)));
        return Scalar::of_rational(Rational(BigInt::from_string(txt.substr(0, slash)),
                                            BigInt::from_string(txt.substr(slash + 1))));
    }
    throw std::invalid_argument("matrix entries must be integers or fraction strings");
}

json matrix_to_json(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return json::array();
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const json& j, const FieldSpec& f, int rows, int cols) {
    Mat m(f, rows, cols);
    if (rows == 0 || cols == 0) {
        if (!j.is_array() || !j.empty())
            throw std::invalid_argument("zero-dimension matrices must serialize as []");
        return m;
    }
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw std::invalid_argument("matrix row count disagrees with dims");
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix column count disagrees with dims");
        for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(row.at(c), f);
    }
    return m;
}

}  // namespace

std::string write_repfile(const Presentation& v) {
    DimVector d = v.dims();
    json j;
    j["field"] = field_to_json(v.field);
    j["dims"] = {d[0], d[1], d[2], d[3]};
    j["alpha"] = matrix_to_json(v.A);
    j["beta"] = matrix_to_json(v.B);
    j["gamma"] = matrix_to_json(v.G);
    j["delta"] = matrix_to_json(v.D);
    return j.dump(2) + "\n";
}

Presentation read_repfile(const std::string& text) {
    json j = json::parse(text);
    FieldSpec f = field_from_json(j.at("field"));
    const json& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 4)
        throw std::invalid_argument("dims must be a vector of four sizes");
    int d1 = dims.at(0).get<int>(), d2 = dims.at(1).get<int>(), d3 = dims.at(2).get<int>(),
        d4 = dims.at(3).get<int>();
    if (d1 < 0 || d2 < 0 || d3 < 0 || d4 < 0)
        throw std::invalid_argument("dims must be nonnegative");
    return Presentation(f, matrix_from_json(j.at("alpha"), f, d1, d3),
                        matrix_from_json(j.at("beta"), f, d2, d3),
                        matrix_from_json(j.at("gamma"), f, d1, d4),
                        matrix_from_json(j.at("delta"), f, d2, d4));
}

std::string write_matrix_json(const Mat& m) {
    json j;
    j["field"] = field_to_json(m.field());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = matrix_to_json(m);
    return j.dump(2) + "\n";
}

Mat read_matrix_json(const std::string& text, const FieldSpec& f) {
    json j = json::parse(text);
    if (j.contains("field")) {
        FieldSpec ff = field_from_json(j.at("field"));
        if (ff != f) throw std::invalid_argument("matrix field disagrees with the request");
    }
    return matrix_from_json(j.at("entries"), f, j.at("rows").get<int>(), j.at("cols").get<int>());
}

std::string decomposition_json(const Decomposition& d) {
    json j;
    j["dims"] = {d.total[0], d.total[1], d.total[2], d.total[3]};
    j["exact"] = d.exact;
    json parts = json::array();
    for (const DecompPart& p : d.parts) {
        json e;
        e["type"] = dtype_name(p.desc.type);
        e["n"] = p.desc.n;
        e["variant"] = variant_name(p.desc.variant);
        e["count"] = p.count;
        if (p.desc.type == DType::T0) {
            json poly = json::array();
            for (int i = 0; i <= p.desc.p.degree(); ++i)
                poly.push_back(scalar_to_json(p.desc.p.coeff(i)));
            e["poly"] = std::move(poly);
            e["s"] = p.desc.s;
            e["granularity"] = p.desc.primary_exact ? "primary" : "invariant_factor";
        }
        parts.push_back(std::move(e));
    }
    j["parts"] = std::move(parts);
    return j.dump(2) + "\n";
}

std::string field_json(const FieldSpec& f) { return field_to_json(f).dump(); }

FieldSpec parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return FieldSpec::rationals();
    std::string t = text;
    if (t.rfind("gf:", 0) == 0) t = t.substr(3);
    try {
        size_t used = 0;
        long long p = std::stoll(t, &used);
        if (used != t.size()) throw std::invalid_argument("");
        return FieldSpec::gf(p);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse field '" + text + "' (use gf:p or q)");
    }
}

Poly parse_poly(const std::string& text, const FieldSpec& f) {
    std::vector<long long> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty polynomial coefficient");
        coeffs.push_back(std::stoll(item));
    }
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial");
    return Poly::from_ints(f, coeffs);
}

DType parse_dtype(const std::string& name) {
    if (name == "0") return DType::T0;
    if (name == "I") return DType::TI;
    if (name == "II") return DType::TII;
    if (name == "III") return DType::TIII;
    if (name == "III*" || name == "IIIs") return DType::TIIIs;
    if (name == "IV") return DType::TIV;
    if (name == "IV*" || name == "IVs") return DType::TIVs;
    throw std::invalid_argument("unknown type '" + name + "'");
}

Variant parse_variant(const std::string& name) {
    if (name == "e" || name.empty()) return Variant::e;
    if (name == "swap12" || name == "s12") return Variant::s12;
    if (name == "swap34" || name == "s34") return Variant::s34;
    if (name == "swap1234" || name == "s1234" || name == "s12s34") return Variant::s12s34;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

}  // namespace qrep
