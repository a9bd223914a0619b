#include "tropgroup/io.hpp"

#include "tropgroup/errors.hpp"

namespace tropgroup::io {

std::string to_string(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::Matrix: return "matrix";
        case DocumentKind::MatrixList: return "matrix_list";
        case DocumentKind::GroupSample: return "group_sample";
        case DocumentKind::WreathList: return "wreath_list";
    }
    return "?";
}

DocumentKind document_kind_from_string(const std::string& s) {
    if (s == "matrix") return DocumentKind::Matrix;
    if (s == "matrix_list") return DocumentKind::MatrixList;
    if (s == "group_sample") return DocumentKind::GroupSample;
    if (s == "wreath_list") return DocumentKind::WreathList;
    throw ParseError("unknown document kind: " + s);
}

json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return scalar_from_string(j.get<std::string>());
    // Bare JSON numbers are accepted only when exactly representable,
    // i.e. integers; floating literals have no canonical rational reading.
    if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
    throw ParseError("matrix entry must be a string or an integer: " + j.dump());
}

json matrix_to_json(const TropMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

TropMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& jr : j) {
        if (!jr.is_array() || jr.empty()) throw ParseError("matrix row must be a nonempty array");
        std::vector<Scalar> row;
        for (const auto& je : jr) row.push_back(scalar_from_json(je));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    return TropMatrix::from_rows(rows);
}

json perm_to_json(const Perm& p) {
    json out = json::array();
    for (std::size_t v : p.one_line()) out.push_back(v + 1);
    return out;
}

Perm perm_from_json(const json& j, std::size_t expected_n) {
    if (!j.is_array() || j.size() != expected_n)
        throw ParseError("sigma must be a one-line permutation of length " +
                         std::to_string(expected_n));
    std::vector<std::size_t> image;
    for (const auto& je : j) {
        if (!je.is_number_integer()) throw ParseError("sigma entries must be integers");
        const long long v = je.get<long long>();
        if (v < 1 || static_cast<std::size_t>(v) > expected_n)
            throw ParseError("sigma entries must lie in 1.." + std::to_string(expected_n));
        image.push_back(static_cast<std::size_t>(v) - 1);
    }
    try {
        return Perm(std::move(image));
    } catch (const std::invalid_argument&) {
        throw ParseError("sigma is not a bijection");
    }
}

json wreath_to_json(const WreathElement& w) {
    json d = json::array();
    for (const auto& v : w.d) d.push_back(v.str());
    return json{{"sigma", perm_to_json(w.sigma)}, {"d", std::move(d)}};
}

WreathElement wreath_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sigma") || !j.contains("d"))
        throw ParseError("wreath element must be an object with sigma and d");
    const auto& jd = j.at("d");
    if (!jd.is_array() || jd.empty()) throw ParseError("d must be a nonempty array");
    std::vector<Rational> d;
    for (const auto& je : jd) {
        const Scalar s = scalar_from_json(je);
        if (s.is_neg_inf()) throw ParseError("wreath weights must be finite");
        d.push_back(s.value());
    }
    Perm sigma = perm_from_json(j.at("sigma"), d.size());
    return {std::move(sigma), std::move(d)};
}

namespace {

const char* payload_key(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::Matrix:
        case DocumentKind::MatrixList: return "matrices";
        case DocumentKind::GroupSample: return "generators";
        case DocumentKind::WreathList: return "elements";
    }
    return "?";
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("document needs a string field 'kind'");

    InputDocument doc;
    doc.kind = document_kind_from_string(j.at("kind").get<std::string>());

    if (!j.contains("dimension") || !j.at("dimension").is_number_integer() ||
        j.at("dimension").get<long long>() < 1)
        throw ParseError("document needs a positive integer field 'dimension'");
    doc.dimension = j.at("dimension").get<std::size_t>();

    const char* key = payload_key(doc.kind);
    if (!j.contains(key) || !j.at(key).is_array() || j.at(key).empty())
        throw ParseError(std::string("document needs a nonempty array field '") + key + "'");

    if (doc.kind == DocumentKind::WreathList) {
        for (const auto& je : j.at(key)) {
            WreathElement w = wreath_from_json(je);
            if (w.dim() != doc.dimension)
                throw ParseError("wreath element dimension differs from the document dimension");
            doc.elements.push_back(std::move(w));
        }
    } else {
        for (const auto& jm : j.at(key)) {
            TropMatrix m = matrix_from_json(jm);
            if (doc.kind != DocumentKind::Matrix &&
                (m.rows() != doc.dimension || m.cols() != doc.dimension))
                throw ParseError("matrix shape differs from the document dimension");
            if (doc.kind == DocumentKind::Matrix && m.rows() != doc.dimension)
                throw ParseError("matrix row count differs from the document dimension");
            doc.matrices.push_back(std::move(m));
        }
        if (doc.kind == DocumentKind::Matrix && doc.matrices.size() != 1)
            throw ParseError("kind 'matrix' carries exactly one matrix");
    }

    if (j.contains("options")) {
        const auto& jo = j.at("options");
        if (!jo.is_object()) throw ParseError("options must be an object");
        if (jo.contains("assume_group")) {
            if (!jo.at("assume_group").is_boolean())
                throw ParseError("options.assume_group must be a boolean");
            doc.options.assume_group = jo.at("assume_group").get<bool>();
        }
        if (jo.contains("closure_cap")) {
            if (!jo.at("closure_cap").is_number_integer() ||
                jo.at("closure_cap").get<long long>() < 1)
                throw ParseError("options.closure_cap must be a positive integer");
            doc.options.closure_cap = jo.at("closure_cap").get<std::size_t>();
        }
    }
    return doc;
}

json document_to_json(const InputDocument& doc) {
    json j{{"kind", to_string(doc.kind)}, {"dimension", doc.dimension}};
    json payload = json::array();
    if (doc.kind == DocumentKind::WreathList) {
        for (const auto& w : doc.elements) payload.push_back(wreath_to_json(w));
    } else {
        for (const auto& m : doc.matrices) payload.push_back(matrix_to_json(m));
    }
    j[payload_key(doc.kind)] = std::move(payload);
    j["options"] = json{{"assume_group", doc.options.assume_group},
                        {"closure_cap", doc.options.closure_cap}};
    return j;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace tropgroup::io
