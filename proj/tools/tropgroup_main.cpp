// tropgroup: command-line front end for the tropical matrix-group toolkit.
//
// Subcommands: mul, rank, verify, closure, monomialize, analyze, realize.
// Reads one JSON document (--in FILE), writes one JSON report to stdout.
// Exit codes: 0 success, 2 parse/validation error, 3 mathematical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "tropgroup/errors.hpp"
#include "tropgroup/group.hpp"
#include "tropgroup/io.hpp"
#include "tropgroup/rep.hpp"
#include "tropgroup/wreath.hpp"

namespace {

using tropgroup::io::json;
using namespace tropgroup;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitMath = 3;

struct Outcome {
    json report;
    int code = kExitOk;
};

bool g_verbose = false;

void note(const std::string& line) {
    if (g_verbose) std::cerr << line << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json indices_1based(const std::vector<std::size_t>& v) {
    json out = json::array();
    for (std::size_t i : v) out.push_back(i + 1);
    return out;
}

json lambdas_to_json(const std::vector<Scalar>& lambdas) {
    json out = json::array();
    for (const auto& l : lambdas) out.push_back(to_string(l));
    return out;
}

json error_block(const std::string& type, const std::string& detail) {
    return json{{"type", type}, {"detail", detail}};
}

json axiom_failure_to_json(const GroupAxiomFailure& f) {
    json e = error_block("GroupAxiomFailure", f.detail);
    e["axiom"] = to_string(f.axiom);
    e["witnesses"] = indices_1based({f.lhs, f.rhs});
    return e;
}

json factor_error_to_json(const FactorError& f) {
    json e = error_block("FactorError", f.detail);
    e["kind"] = to_string(f.kind);
    e["row"] = f.row + 1;
    return e;
}

json reduce_error_to_json(const ReduceError& r) {
    json e = error_block("ReduceError", r.detail);
    e["kind"] = to_string(r.kind);
    e["element"] = r.element + 1;
    return e;
}

io::InputDocument load(const std::string& path) {
    io::InputDocument doc = io::parse_document(read_file(path));
    note("parsed " + to_string(doc.kind) + " document, dimension " +
         std::to_string(doc.dimension));
    return doc;
}

void require_kind(const io::InputDocument& doc, io::DocumentKind kind) {
    if (doc.kind != kind)
        throw ParseError("this command needs a '" + to_string(kind) + "' document, got '" +
                         to_string(doc.kind) + "'");
}

// Either a checked group or an assumed sample, per the document options.
std::variant<MatrixGroup, GroupAxiomFailure> build_group(const io::InputDocument& doc,
                                                         bool assume_flag) {
    require_kind(doc, io::DocumentKind::GroupSample);
    const bool assume = assume_flag || doc.options.assume_group;
    note(assume ? "treating elements as an assumed group sample"
                : "verifying group axioms on the element list");
    return assume ? assume_group(doc.matrices) : verify_group(doc.matrices);
}

Outcome cmd_mul(const io::InputDocument& doc) {
    require_kind(doc, io::DocumentKind::MatrixList);
    if (doc.matrices.size() != 2) throw ParseError("mul needs exactly two matrices");
    TropMatrix product = doc.matrices[0] * doc.matrices[1];
    io::InputDocument out{io::DocumentKind::Matrix, product.rows(), {product}, {}, {}};
    return {document_to_json(out), kExitOk};
}

Outcome cmd_rank(const io::InputDocument& doc) {
    require_kind(doc, io::DocumentKind::Matrix);
    const TropMatrix& m = doc.matrices.front();
    json report{{"command", "rank"}, {"rows", m.rows()}, {"cols", m.cols()}};
    const auto deficiency = row_rank_deficiency(m);
    report["full_row_rank"] = !deficiency;
    if (deficiency) {
        report["deficiency"] = json{{"row", deficiency->target_row + 1},
                                    {"lambdas", lambdas_to_json(deficiency->lambdas)}};
    }
    return {report, kExitOk};
}

Outcome cmd_verify(const io::InputDocument& doc) {
    require_kind(doc, io::DocumentKind::GroupSample);
    GroupResult res = verify_group(doc.matrices);
    json report{{"command", "verify"}, {"dimension", doc.dimension}};
    if (const auto* fail = std::get_if<GroupAxiomFailure>(&res)) {
        report["error"] = axiom_failure_to_json(*fail);
        return {report, kExitMath};
    }
    const auto& g = std::get<MatrixGroup>(res);
    report["verdict"] = "verified";
    report["order"] = g.order();
    report["neutral_index"] = g.neutral_index + 1;
    return {report, kExitOk};
}

Outcome cmd_closure(const io::InputDocument& doc, std::size_t cap_flag) {
    require_kind(doc, io::DocumentKind::GroupSample);
    const std::size_t cap = cap_flag != 0 ? cap_flag : doc.options.closure_cap;
    note("closing " + std::to_string(doc.matrices.size()) + " generators, cap " +
         std::to_string(cap));
    json report{{"command", "closure"}, {"dimension", doc.dimension}, {"cap", cap}};
    const auto closed = closure(doc.matrices, cap);
    if (!closed) {
        report["error"] = error_block("CapExceeded", "closure exceeded " + std::to_string(cap) +
                                                         " elements; possibly infinite");
        return {report, kExitMath};
    }
    report["order"] = closed->size();
    json elems = json::array();
    for (const auto& m : *closed) elems.push_back(io::matrix_to_json(m));
    report["elements"] = std::move(elems);
    return {report, kExitOk};
}

json representation_to_json(const Representation& rep) {
    json images = json::array();
    for (const auto& m : rep.images) images.push_back(io::wreath_to_json(from_monomial(m)));
    json trace = json::array();
    for (const auto& step : rep.trace) {
        trace.push_back(json{{"source_dimension", step.source_dim},
                             {"removed_row", step.removed_row + 1},
                             {"lambdas", lambdas_to_json(step.lambdas)},
                             {"projector", io::matrix_to_json(step.projector)}});
    }
    return json{{"mode", rep.source.mode == MatrixGroup::Mode::Verified ? "verified" : "assumed"},
                {"source_dimension", rep.source.n},
                {"target_dimension", rep.target_dim},
                {"order", rep.images.size()},
                {"neutral_index", rep.source.neutral_index + 1},
                {"images", std::move(images)},
                {"trace", std::move(trace)},
                {"base_neutral", io::matrix_to_json(rep.base_neutral)}};
}

Outcome run_monomialize(const io::InputDocument& doc, bool assume_flag, bool with_analysis) {
    json report{{"command", with_analysis ? "analyze" : "monomialize"},
                {"dimension", doc.dimension}};
    auto built = build_group(doc, assume_flag);
    if (const auto* fail = std::get_if<GroupAxiomFailure>(&built)) {
        report["error"] = axiom_failure_to_json(*fail);
        return {report, kExitMath};
    }
    const auto& g = std::get<MatrixGroup>(built);
    note("monomializing a group of order " + std::to_string(g.order()));
    RepResult res = monomialize(g);
    if (const auto* err = std::get_if<ReduceError>(&res)) {
        report["error"] = reduce_error_to_json(*err);
        return {report, kExitMath};
    }
    if (const auto* err = std::get_if<FactorError>(&res)) {
        report["error"] = factor_error_to_json(*err);
        return {report, kExitMath};
    }
    const auto& rep = std::get<Representation>(res);
    report["representation"] = representation_to_json(rep);
    note("reached dimension " + std::to_string(rep.target_dim) + " after " +
         std::to_string(rep.trace.size()) + " reduction step(s)");

    if (with_analysis) {
        const GroupAnalysis a = analyze(rep);
        json cosets = json::array();
        for (const auto& c : a.cosets) cosets.push_back(indices_1based(c));
        json analysis{{"diagonal_indices", indices_1based(a.diagonal_indices)},
                      {"cosets", std::move(cosets)},
                      {"index", a.index},
                      {"factorial_bound", a.n_factorial_bound},
                      {"index_within_bound", a.bound_ok},
                      {"diagonal_abelian", a.diagonal_abelian_ok},
                      {"diagonal_torsion_free", a.diagonal_torsion_free_ok}};
        if (rep.source.mode == MatrixGroup::Mode::Assumed)
            analysis["torsion_exponent_cap"] = kTorsionExponentCap;
        report["analysis"] = std::move(analysis);
    }
    return {report, kExitOk};
}

Outcome cmd_realize(const io::InputDocument& doc) {
    require_kind(doc, io::DocumentKind::WreathList);
    const std::vector<TropMatrix> matrices = realize(doc.elements);
    json report{{"command", "realize"},
                {"dimension", doc.dimension},
                {"order", matrices.size()},
                {"pairwise_products_consistent", true}};
    json elems = json::array();
    for (const auto& m : matrices) elems.push_back(io::matrix_to_json(m));
    report["matrices"] = std::move(elems);

    json group_check;
    try {
        GroupResult res = verify_group(matrices);
        if (const auto* fail = std::get_if<GroupAxiomFailure>(&res)) {
            group_check = json{{"verdict", "failed"}, {"axiom", to_string(fail->axiom)}};
        } else {
            group_check = json{{"verdict", "verified"},
                               {"order", std::get<MatrixGroup>(res).order()}};
        }
    } catch (const std::invalid_argument& e) {
        group_check = json{{"verdict", "not_checked"}, {"detail", e.what()}};
    }
    report["group_check"] = std::move(group_check);
    return {report, kExitOk};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical matrix-group toolkit"};
    app.require_subcommand(1);

    std::string in_path;
    bool assume = false;
    std::size_t cap = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--in", in_path, "input JSON document")->required();
        sub->add_flag("--verbose", g_verbose, "human-readable trace on stderr");
    };
    CLI::App* mul = app.add_subcommand("mul", "tropical product of two matrices");
    CLI::App* rank = app.add_subcommand("rank", "full row rank test");
    CLI::App* verify = app.add_subcommand("verify", "check group axioms on an element list");
    CLI::App* clos = app.add_subcommand("closure", "close generators under the product");
    CLI::App* mono = app.add_subcommand("monomialize", "faithful monomial representation");
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "representation plus coset analysis");
    CLI::App* realize_cmd = app.add_subcommand("realize", "dense matrices from wreath elements");
    for (CLI::App* sub : {mul, rank, verify, clos, mono, analyze_cmd, realize_cmd})
        add_common(sub);
    clos->add_option("--cap", cap, "closure size cap");
    for (CLI::App* sub : {mono, analyze_cmd})
        sub->add_flag("--assume-group", assume, "treat elements as a sample, skip axiom checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    Outcome out;
    std::string command;
    try {
        const io::InputDocument doc = load(in_path);
        if (mul->parsed()) out = cmd_mul(doc);
        else if (rank->parsed()) out = cmd_rank(doc);
        else if (verify->parsed()) out = cmd_verify(doc);
        else if (clos->parsed()) out = cmd_closure(doc, cap);
        else if (mono->parsed()) out = run_monomialize(doc, assume, false);
        else if (analyze_cmd->parsed()) out = run_monomialize(doc, assume, true);
        else out = cmd_realize(doc);
    } catch (const ParseError& e) {
        out = {json{{"error", error_block("ParseError", e.what())}}, kExitParse};
    } catch (const DimensionMismatch& e) {
        out = {json{{"error", error_block("DimensionMismatch", e.what())}}, kExitParse};
    } catch (const IndexOutOfRange& e) {
        out = {json{{"error", error_block("IndexOutOfRange", e.what())}}, kExitParse};
    } catch (const std::invalid_argument& e) {
        out = {json{{"error", error_block("InvalidInput", e.what())}}, kExitParse};
    }

    std::cout << io::dump_report(out.report);
    return out.code;
}
