#include "aieo/cli.hpp"

#include "aieo/graph_export.hpp"
#include "aieo/interchange.hpp"
#include "aieo/pipeline.hpp"
#include "aieo/query.hpp"
#include "aieo/reasoner.hpp"
#include "aieo/seed.hpp"
#include "aieo/turtle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace aieo {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "failed while reading " + path);
    return buf.str();
}

// Writes through a sibling temporary file and renames it into place, so a
// failure never leaves a partial file behind.
void write_file_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw Error(ErrorCode::IoError, "failed while writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw Error(ErrorCode::IoError, "cannot move " + tmp.string() + " to " + path + ": " + ec.message());
    }
}

bool has_extension(const std::string& path, std::string_view ext) {
    return fs::path(path).extension().string() == ext;
}

OntologyStore load_store(const std::string& path, std::ostream& err) {
    const std::string text = read_file(path);
    if (has_extension(path, ".json")) return parse_interchange(text);
    if (!has_extension(path, ".ttl")) {
        throw Error(ErrorCode::IoError, path + ": unknown file type (expected .ttl or .json)");
    }
    auto result = parse_turtle_with_warnings(text);
    for (const auto& w : result.warnings) err << path << ":" << w.to_string() << '\n';
    return std::move(result.store);
}

std::string format_store(const OntologyStore& store, const std::string& path) {
    return has_extension(path, ".json") ? serialize_interchange(store) : serialize_turtle(store);
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
    } else {
        write_file_atomic(out_path, content);
    }
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::UnsupportedFeature:
        case ErrorCode::MissingArgument: return kExitUsage;
        case ErrorCode::IoError: return kExitIo;
        default: return kExitValidation;
    }
}

std::string trace_json(const Materialization& mat) {
    const PrefixMap& px = mat.base().prefixes();
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& [fact, traces] : mat.traces()) {
        nlohmann::ordered_json derivations = nlohmann::ordered_json::array();
        for (const auto& t : traces) {
            nlohmann::ordered_json premises = nlohmann::ordered_json::array();
            for (const auto& p : t.premises) premises.push_back(to_string(p, px));
            derivations.push_back({{"rule", std::string(to_string(t.rule))}, {"premises", std::move(premises)}});
        }
        all.push_back({{"fact", to_string(fact, px)}, {"derivations", std::move(derivations)}});
    }
    return all.dump(2) + "\n";
}

std::string violation_line(const ConsistencyViolation& v, const PrefixMap& px) {
    return px.compact(v.individual) + "\t" + px.compact(v.classA) + "\t" + px.compact(v.classB) + "\t" +
           std::string(to_string(v.rule));
}

struct Options {
    std::string file;
    std::string second;
    std::string out;
    std::string report;
    std::string config;
    std::string text;
    std::string ask;
    std::string arg;
    std::string format;
    int level = 1;
    bool trace = false;
    double similarity = -1.0;
};

int cmd_seed(const Options& o, std::ostream& out) {
    const OntologyStore seed = seed_aieo_schema();
    emit(format_store(seed, o.out), o.out, out);
    return kExitOk;
}

int cmd_parse(const Options& o, std::ostream& out, std::ostream& err) {
    const OntologyStore store = load_store(o.file, err);
    out << format_metrics_table(compute_metrics(store));
    return kExitOk;
}

int cmd_reason(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.trace && o.out.empty()) throw Error(ErrorCode::MissingArgument, "--trace needs --out to name the sidecar");
    const OntologyStore store = load_store(o.file, err);
    const Materialization mat = materialize(store);
    for (const auto& v : mat.violations()) err << "warning: inconsistent: " << violation_line(v, store.prefixes()) << '\n';
    emit(format_store(mat.to_store(), o.out), o.out, out);
    if (o.trace) write_file_atomic(o.out + ".trace.json", trace_json(mat));
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    const OntologyStore store = load_store(o.file, err);
    const Materialization mat = materialize(store);
    if (mat.consistent()) {
        out << "consistent\n";
        return kExitOk;
    }
    for (const auto& v : mat.violations()) out << violation_line(v, store.prefixes()) << '\n';
    err << mat.violations().size() << " disjointness violation(s)\n";
    return kExitInconsistent;
}

int cmd_query(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.text.empty() == o.ask.empty()) throw Error(ErrorCode::MissingArgument, "give exactly one of --text or --ask");
    const OntologyStore store = load_store(o.file, err);
    const Materialization mat = materialize(store);
    ResultSet rs;
    if (!o.text.empty()) {
        Query q = parse_query(o.text, store.prefixes());
        for (const auto& w : q.warnings) err << "query:" << w.to_string() << '\n';
        rs = evaluate(q, mat);
    } else {
        auto which = canned_query_from_string(o.ask);
        if (!which) {
            throw Error(ErrorCode::MissingArgument, "unknown canned query '" + o.ask +
                                                        "' (principles_by_framework, describe_concept, scenarios_for, "
                                                        "unique_concepts)");
        }
        std::optional<Iri> arg;
        if (!o.arg.empty()) {
            arg = store.prefixes().try_expand(o.arg);
            if (!arg) throw Error(ErrorCode::UnknownConcept, "cannot resolve --arg " + o.arg);
        }
        rs = canned_query(*which, arg, mat);
    }
    out << (o.format == "json" ? to_json(rs, store.prefixes()) : to_tsv(rs, store.prefixes()));
    return kExitOk;
}

int cmd_ingest(const Options& o, std::ostream& out, std::ostream& err) {
    const OntologyStore store = load_store(o.file, err);
    const FrameworkDocument doc = parse_framework_document(read_file(o.second));
    PipelineConfig cfg = parse_config(read_file(o.config));
    if (o.similarity >= 0.0) {
        if (!(o.similarity > 0.0) || o.similarity > 1.0)
            throw Error(ErrorCode::ValidationError, "--similarity-threshold must be in (0, 1]");
        cfg.similarityThreshold = o.similarity;
    }
    IterationResult result = run_iteration(store, doc, cfg);
    for (const auto& p : result.record.proposals) {
        err << "proposal " << store.prefixes().compact(p.left) << " = " << store.prefixes().compact(p.right)
            << " score=" << p.score << " status=" << to_string(p.status) << '\n';
    }
    const std::string report = iteration_record_to_json(result.record, store.prefixes());
    const std::string body = format_store(result.store, o.out);
    // Everything is rendered before anything is written.
    if (!o.report.empty()) write_file_atomic(o.report, report);
    emit(body, o.out, out);
    return kExitOk;
}

int cmd_metrics(const Options& o, std::ostream& out, std::ostream& err) {
    const MetricsReport m = compute_metrics(load_store(o.file, err));
    out << (o.format == "json" ? metrics_to_json(m) : format_metrics_table(m));
    return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
    auto level = detail_level_from_int(o.level);
    if (!level) throw Error(ErrorCode::MissingArgument, "--level must be 1, 2 or 3");
    const Materialization mat = materialize(load_store(o.file, err));
    const GraphDoc g = export_graph(mat, *level);
    emit(o.format == "json" ? render_json(g) : render_dot(g), o.out, out);
    return kExitOk;
}

int cmd_diff(const Options& o, std::ostream& out, std::ostream& err) {
    const OntologyStore before = load_store(o.file, err);
    const OntologyStore after = load_store(o.second, err);
    PrefixMap px = before.prefixes();
    px.merge(after.prefixes());
    std::vector<std::string> lines;
    for (const auto& ax : before.axioms()) {
        if (!after.contains(ax)) lines.push_back("- " + to_string(ax, px));
    }
    for (const auto& ax : after.axioms()) {
        if (!before.contains(ax)) lines.push_back("+ " + to_string(ax, px));
    }
    for (const auto& l : lines) out << l << '\n';
    const MetricsReport a = compute_metrics(before);
    const MetricsReport b = compute_metrics(after);
    const std::pair<const char*, std::pair<std::size_t, std::size_t>> rows[] = {
        {"Axiom", {a.axiomCount, b.axiomCount}},
        {"Logical axioms count", {a.logicalAxiomCount, b.logicalAxiomCount}},
        {"Declaration axioms count", {a.declarationAxiomCount, b.declarationAxiomCount}},
        {"Annotation assertions", {a.annotationAssertionCount, b.annotationAssertionCount}},
        {"Class count", {a.classCount, b.classCount}},
        {"Object property count", {a.objectPropertyCount, b.objectPropertyCount}},
        {"Data property count", {a.dataPropertyCount, b.dataPropertyCount}},
        {"Individual count", {a.individualCount, b.individualCount}},
        {"Annotation property count", {a.annotationPropertyCount, b.annotationPropertyCount}},
    };
    out << "# metrics\n";
    for (const auto& [label, values] : rows) {
        const auto delta = static_cast<long long>(values.second) - static_cast<long long>(values.first);
        out << label << '\t' << values.first << '\t' << values.second << '\t' << (delta >= 0 ? "+" : "") << delta
            << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"AI ethics ontology toolkit", "aieo"};
    app.require_subcommand(1);
    Options o;

    auto* seed = app.add_subcommand("seed", "Write the seed schema");
    seed->add_option("--out", o.out, "Output file (.ttl or .json); stdout when omitted");

    auto* parse = app.add_subcommand("parse", "Validate a file and print its metrics");
    parse->add_option("file", o.file)->required();

    auto* reason = app.add_subcommand("reason", "Materialize inferred facts");
    reason->add_option("file", o.file)->required();
    reason->add_option("--out", o.out, "Output file; stdout when omitted");
    reason->add_flag("--trace", o.trace, "Also write <out>.trace.json");

    auto* check = app.add_subcommand("check", "Report disjointness violations (exit 3 if any)");
    check->add_option("file", o.file)->required();

    auto* query = app.add_subcommand("query", "Run a query or a canned question");
    query->add_option("file", o.file)->required();
    query->add_option("--text", o.text, "Query text");
    query->add_option("--ask", o.ask, "principles_by_framework | describe_concept | scenarios_for | unique_concepts");
    query->add_option("--arg", o.arg, "IRI argument of the canned query");
    query->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}))->default_val("tsv");

    auto* ingest = app.add_subcommand("ingest", "Run one ingestion iteration");
    ingest->add_option("store", o.file)->required();
    ingest->add_option("doc", o.second)->required();
    ingest->add_option("--config", o.config)->required();
    ingest->add_option("--out", o.out, "Output store; stdout when omitted");
    ingest->add_option("--report", o.report, "Iteration record JSON");
    ingest->add_option("--similarity-threshold", o.similarity, "Overrides the config's similarityThreshold");

    auto* metrics = app.add_subcommand("metrics", "Print ontology metrics");
    metrics->add_option("file", o.file)->required();
    metrics->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}))->default_val("table");

    auto* exp = app.add_subcommand("export", "Export a knowledge graph");
    exp->add_option("file", o.file)->required();
    exp->add_option("--level", o.level, "1, 2 or 3")->check(CLI::Range(1, 3))->default_val(1);
    exp->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->default_val("dot");
    exp->add_option("--out", o.out, "Output file; stdout when omitted");

    auto* diff = app.add_subcommand("diff", "Axiom additions/removals and metric deltas");
    diff->add_option("before", o.file)->required();
    diff->add_option("after", o.second)->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("aieo");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (seed->parsed()) return cmd_seed(o, out);
        if (parse->parsed()) return cmd_parse(o, out, err);
        if (reason->parsed()) return cmd_reason(o, out, err);
        if (check->parsed()) return cmd_check(o, out, err);
        if (query->parsed()) return cmd_query(o, out, err);
        if (ingest->parsed()) return cmd_ingest(o, out, err);
        if (metrics->parsed()) return cmd_metrics(o, out, err);
        if (exp->parsed()) return cmd_export(o, out, err);
        if (diff->parsed()) return cmd_diff(o, out, err);
    } catch (const ParseError& e) {
        for (const auto& d : e.diagnostics()) err << to_string(e.code()) << ": " << d.to_string() << '\n';
        return exit_code_for(e.code());
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}

}  // namespace aieo
