#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropgroup/group.hpp"
#include "tropgroup/matrix.hpp"
#include "tropgroup/wreath.hpp"

namespace tropgroup::io {

using json = nlohmann::ordered_json;

/// Document kinds accepted on the command line. Payload key per kind:
/// matrix and matrix_list carry "matrices", group_sample carries
/// "generators", wreath_list carries "elements".
enum class DocumentKind { Matrix, MatrixList, GroupSample, WreathList };

std::string to_string(DocumentKind kind);
DocumentKind document_kind_from_string(const std::string& s);

struct DocumentOptions {
    bool assume_group = false;
    std::size_t closure_cap = kDefaultClosureCap;

    bool operator==(const DocumentOptions& o) const = default;
};

struct InputDocument {
    DocumentKind kind;
    std::size_t dimension = 0;
    std::vector<TropMatrix> matrices;       // matrix / matrix_list / group_sample
    std::vector<WreathElement> elements;    // wreath_list
    DocumentOptions options;

    bool operator==(const InputDocument& o) const = default;
};

// Entry syntax: "-inf" or exact rational text ("3", "-5/2"); integral JSON
// numbers are accepted on input, strings are canonical on output.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json matrix_to_json(const TropMatrix& m);
TropMatrix matrix_from_json(const json& j);

// Permutations serialized 1-indexed one-line, e.g. [2, 1, 3].
json perm_to_json(const Perm& p);
Perm perm_from_json(const json& j, std::size_t expected_n);

json wreath_to_json(const WreathElement& w);
WreathElement wreath_from_json(const json& j);

/// Throws ParseError on any malformed or inconsistent document.
InputDocument parse_document(const std::string& text);

json document_to_json(const InputDocument& doc);

/// Canonical serialization: two-space indent, trailing newline. Byte-stable.
std::string dump_report(const json& report);

}  // namespace tropgroup::io
