#include <unistd.h>
#include <zlib.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ocedforge/descriptor.hpp"
#include "ocedforge/extension.hpp"
#include "ocedforge/mapper.hpp"
#include "ocedforge/query.hpp"
#include "ocedforge/reasoner.hpp"
#include "ocedforge/turtle.hpp"
#include "ocedforge/validate.hpp"
#include "ocedforge/vocab.hpp"
#include "ocedforge/xes.hpp"

namespace {

using namespace ocedforge;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitConformance = 3;
constexpr int kExitValidation = 4;

bool color_enabled() {
    if (const char* env = std::getenv("OCED_FORGE_COLOR")) {
        if (std::string_view(env) == "0") return false;
        if (std::string_view(env) == "1") return true;
    }
    return isatty(fileno(stderr)) != 0;
}

const char* severity_tag(Severity sev, bool color) {
    if (!color) return sev == Severity::Error ? "error" : "warning";
    return sev == Severity::Error ? "\x1b[31merror\x1b[0m" : "\x1b[33mwarning\x1b[0m";
}

void print_diagnostic(const Diagnostic& d, bool color) {
    std::cerr << severity_tag(d.severity, color) << ": " << d.message;
    if (!d.source.empty() || d.line != 0) {
        std::cerr << " [";
        if (!d.source.empty()) std::cerr << d.source;
        if (d.line != 0) {
            if (!d.source.empty()) std::cerr << ":";
            std::cerr << d.line;
            if (d.column != 0) std::cerr << ":" << d.column;
        }
        std::cerr << "]";
    }
    std::cerr << "\n";
}

std::string base_name(const std::string& path) {
    auto pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
    if (ends_with(path, ".gz")) {
        gzFile gz = gzopen(path.c_str(), "rb");
        if (!gz) throw ParseError("cannot open '" + path + "'");
        std::string out;
        char buf[1 << 16];
        int n;
        while ((n = gzread(gz, buf, sizeof buf)) > 0) out.append(buf, static_cast<size_t>(n));
        bool bad = n < 0;
        gzclose(gz);
        if (bad) throw ParseError("gzip read error in '" + path + "'");
        return out;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << content;
}

// Loads the extension and gates on conformance; conformance findings go
// to stderr. Returns nullopt (and sets exit code) on errors.
std::optional<ExtensionModel> load_checked_ocedd(const std::string& path, bool color,
                                                 int& exit_code) {
    ExtensionModel ext = load_ocedd(read_file(path), base_name(path));
    auto report = check_conformance(ext, ocedo_graph());
    for (const auto& f : report.findings) {
        std::cerr << severity_tag(f.severity, color) << ": [" << to_string(f.code) << "] <"
                  << f.subject.value << ">: " << f.message << "\n";
    }
    if (!report.conformant()) {
        std::cerr << "OCEDD document '" << path << "' has " << report.error_count()
                  << " conformance error(s)\n";
        exit_code = kExitConformance;
        return std::nullopt;
    }
    return ext;
}

int cmd_convert(const std::string& xes_path, const std::string& ocedd_path,
                const std::string& descriptor_path, const std::string& out_path,
                bool reason, bool strict) {
    bool color = color_enabled();
    int exit_code = kExitOk;
    auto ext = load_checked_ocedd(ocedd_path, color, exit_code);
    if (!ext) return exit_code;

    PrefixMap curie_context = ocedo_prefixes();
    curie_context.merge(ext->prefixes);
    Descriptor descriptor = parse_descriptor(read_file(descriptor_path), curie_context,
                                             base_name(descriptor_path));

    std::vector<Diagnostic> xes_warnings;
    std::string xes_text = read_file(xes_path);
    XesLog log = parse_xes(xes_text, base_name(xes_path), &xes_warnings);
    for (const auto& w : xes_warnings) print_diagnostic(w, color);

    ConversionResult result = convert(log, descriptor, *ext, strict);
    for (const auto& f : result.stats.findings) print_diagnostic(f, color);

    Graph output = std::move(result.graph);
    if (reason) {
        output.insert_all(ocedo_graph());
        output.insert_all(ext->source);
        output = rdfs_closure(output);
    }
    write_output(out_path, serialize_turtle(output, result.prefixes));

    const auto& s = result.stats;
    std::cerr << "converted " << s.events_converted << "/" << s.events_in << " events, "
              << s.distinct_objects << " distinct objects, " << s.triple_count
              << " triples";
    if (reason) std::cerr << " (+closure: " << output.size() << " total)";
    std::cerr << "\n";
    if (s.events_skipped > 0) std::cerr << "skipped " << s.events_skipped << " event(s)\n";
    if (s.skipped_objects > 0)
        std::cerr << "skipped " << s.skipped_objects << " object binding(s)\n";
    if (!s.unmapped_keys.empty()) {
        std::cerr << "unmapped event keys:";
        for (const auto& k : s.unmapped_keys) std::cerr << " " << k;
        std::cerr << "\n";
    }

    if (strict && s.has_errors()) return kExitParse;
    return kExitOk;
}

int cmd_validate(const std::string& graph_path, const std::string& ocedd_path, bool strict) {
    bool color = color_enabled();
    int exit_code = kExitOk;
    auto ext = load_checked_ocedd(ocedd_path, color, exit_code);
    if (!ext) return exit_code;

    auto doc = parse_turtle(read_file(graph_path), base_name(graph_path));
    ValidationReport report = validate(doc.graph, ocedo_graph(), *ext);

    for (const auto& f : report.findings) {
        std::cout << (f.severity == Severity::Error ? "ERROR" : "WARNING") << "\t"
                  << to_string(f.code) << "\t" << f.message;
        if (f.triple) std::cout << "\t" << to_ntriples(*f.triple);
        std::cout << "\n";
    }
    std::cout << "findings: " << report.findings.size() << " (" << report.error_count()
              << " error(s))\n";
    if (strict && !report.valid()) return kExitValidation;
    return kExitOk;
}

int cmd_stats(const std::string& graph_path, const std::string& ocedd_path) {
    bool color = color_enabled();
    std::optional<ExtensionModel> ext;
    if (!ocedd_path.empty()) {
        int exit_code = kExitOk;
        ext = load_checked_ocedd(ocedd_path, color, exit_code);
        if (!ext) return exit_code;
    }
    auto doc = parse_turtle(read_file(graph_path), base_name(graph_path));
    GraphStats s = stats(doc.graph, ext ? &*ext : nullptr);
    std::cout << "triples: " << s.triples << "\n"
              << "events: " << s.events << "\n"
              << "objects: " << s.objects << "\n"
              << "event-subclasses: " << s.event_subclasses << "\n"
              << "object-subclasses: " << s.object_subclasses << "\n"
              << "object-relation-triples: " << s.object_relation_triples << "\n"
              << "event-attribute-triples: " << s.event_attribute_triples << "\n";
    return kExitOk;
}

int cmd_query(const std::string& graph_path, const std::vector<std::string>& pattern_args,
              const std::string& pattern_file) {
    auto doc = parse_turtle(read_file(graph_path), base_name(graph_path));

    std::string query_text;
    if (!pattern_file.empty()) query_text = read_file(pattern_file);
    for (const auto& p : pattern_args) {
        if (!query_text.empty() && query_text.back() != '\n') query_text += '\n';
        query_text += p;
    }

    PrefixMap prefixes = ocedo_prefixes();
    prefixes.merge(doc.prefixes);
    auto patterns = parse_query(query_text, prefixes, "query");
    BindingSet bindings = bgp_query(doc.graph, patterns);
    std::cout << to_tsv(bindings);
    std::cerr << bindings.solutions.size() << " solution(s)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oced-forge: compile XES event logs into OCED knowledge graphs"};
    app.require_subcommand(1);

    std::string xes_path, ocedd_path, descriptor_path, graph_path, out_path, pattern_file;
    std::vector<std::string> patterns;
    bool reason = false, strict = false;
    bool emit_ocedo = false, emit_bpic = false;

    auto* convert_cmd =
        app.add_subcommand("convert", "Convert an XES log into an OCEDR Turtle graph");
    convert_cmd->add_option("--xes", xes_path, "XES input (.xes or .xes.gz)")->required();
    convert_cmd->add_option("--ocedd", ocedd_path, "OCEDD extension document")->required();
    convert_cmd->add_option("--descriptor", descriptor_path, "mapping descriptor CSV")
        ->required();
    convert_cmd->add_option("--out", out_path, "output file (default: stdout)");
    convert_cmd->add_flag("--reason", reason, "materialize the RDFS closure");
    convert_cmd->add_flag("--strict", strict,
                          "treat unconvertible events as errors (exit 2)");

    auto* validate_cmd =
        app.add_subcommand("validate", "Validate an OCEDR graph against OCEDO + OCEDD");
    validate_cmd->add_option("--graph", graph_path, "Turtle graph to validate")->required();
    validate_cmd->add_option("--ocedd", ocedd_path, "OCEDD extension document")->required();
    validate_cmd->add_flag("--strict", strict, "exit 4 when error findings exist");

    auto* stats_cmd = app.add_subcommand("stats", "Print corpus statistics for a graph");
    stats_cmd->add_option("--graph", graph_path, "Turtle graph")->required();
    stats_cmd->add_option("--ocedd", ocedd_path,
                          "optional OCEDD document for declared-property counts");

    auto* query_cmd = app.add_subcommand("query", "Run a basic graph pattern query");
    query_cmd->add_option("--graph", graph_path, "Turtle graph")->required();
    query_cmd->add_option("--pattern", patterns,
                          "pattern line (repeatable; ?var, CURIE, <IRI>, \"literal\")");
    query_cmd->add_option("--pattern-file", pattern_file, "file with one pattern per line");

    auto* ontology_cmd = app.add_subcommand("ontology", "Print the embedded vocabularies");
    ontology_cmd->add_flag("--emit", emit_ocedo, "print the OCEDO core+aux Turtle");
    ontology_cmd->add_flag("--emit-bpic2013", emit_bpic,
                           "print the bundled BPIC 2013 OCEDD example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (convert_cmd->parsed())
            return cmd_convert(xes_path, ocedd_path, descriptor_path, out_path, reason,
                               strict);
        if (validate_cmd->parsed()) return cmd_validate(graph_path, ocedd_path, strict);
        if (stats_cmd->parsed()) return cmd_stats(graph_path, ocedd_path);
        if (query_cmd->parsed()) return cmd_query(graph_path, patterns, pattern_file);
        if (ontology_cmd->parsed()) {
            if (emit_bpic) std::cout << bpic2013_ocedd_turtle();
            else std::cout << ocedo_turtle();
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << severity_tag(Severity::Error, color_enabled()) << ": " << e.what()
                  << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << severity_tag(Severity::Error, color_enabled()) << ": " << e.what()
                  << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
