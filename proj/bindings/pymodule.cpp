#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ocedforge/descriptor.hpp"
#include "ocedforge/extension.hpp"
#include "ocedforge/mapper.hpp"
#include "ocedforge/query.hpp"
#include "ocedforge/reasoner.hpp"
#include "ocedforge/turtle.hpp"
#include "ocedforge/validate.hpp"
#include "ocedforge/vocab.hpp"
#include "ocedforge/xes.hpp"

namespace py = pybind11;
using namespace ocedforge;

namespace {

std::string severity_name(Severity s) {
    return s == Severity::Error ? "error" : "warning";
}

py::list findings_to_list(const ConformanceReport& report) {
    py::list out;
    for (const auto& f : report.findings) {
        py::dict d;
        d["severity"] = severity_name(f.severity);
        d["code"] = std::string(to_string(f.code));
        d["subject"] = f.subject.value;
        d["message"] = f.message;
        out.append(d);
    }
    return out;
}

ExtensionModel load_checked(const std::string& ocedd_text) {
    ExtensionModel ext = load_ocedd(ocedd_text, "ocedd");
    auto report = check_conformance(ext, ocedo_graph());
    if (!report.conformant()) {
        std::string msg = "OCEDD document is not conformant:";
        for (const auto& f : report.findings) {
            if (f.severity != Severity::Error) continue;
            msg += "\n  [" + std::string(to_string(f.code)) + "] <" + f.subject.value +
                   ">: " + f.message;
        }
        throw ParseError(msg);
    }
    return ext;
}

py::dict py_convert(const std::string& xes_text, const std::string& ocedd_text,
                    const std::string& descriptor_csv, const std::string& source_name,
                    bool strict, bool reason) {
    ExtensionModel ext = load_checked(ocedd_text);
    PrefixMap context = ocedo_prefixes();
    context.merge(ext.prefixes);
    Descriptor descriptor = parse_descriptor(descriptor_csv, context, "descriptor");

    std::vector<Diagnostic> warnings;
    XesLog log = parse_xes(xes_text, source_name, &warnings);
    ConversionResult result = convert(log, descriptor, ext, strict);

    Graph output = std::move(result.graph);
    if (reason) {
        output.insert_all(ocedo_graph());
        output.insert_all(ext.source);
        output = rdfs_closure(output);
    }

    py::dict stats;
    stats["events_in"] = result.stats.events_in;
    stats["events_converted"] = result.stats.events_converted;
    stats["events_skipped"] = result.stats.events_skipped;
    stats["distinct_objects"] = result.stats.distinct_objects;
    stats["triples"] = result.stats.triple_count;
    stats["skipped_objects"] = result.stats.skipped_objects;
    stats["unmapped_keys"] = result.stats.unmapped_keys;

    py::list notes;
    for (const auto& w : warnings) notes.append(w.render());
    for (const auto& f : result.stats.findings) notes.append(f.render());

    py::dict out;
    out["turtle"] = serialize_turtle(output, result.prefixes);
    out["stats"] = stats;
    out["findings"] = notes;
    return out;
}

py::dict py_validate(const std::string& graph_ttl, const std::string& ocedd_text) {
    ExtensionModel ext = load_checked(ocedd_text);
    auto doc = parse_turtle(graph_ttl, "graph");
    ValidationReport report = validate(doc.graph, ocedo_graph(), ext);
    py::list findings;
    for (const auto& f : report.findings) {
        py::dict d;
        d["severity"] = severity_name(f.severity);
        d["code"] = std::string(to_string(f.code));
        d["message"] = f.message;
        if (f.triple) d["triple"] = to_ntriples(*f.triple);
        findings.append(d);
    }
    py::dict out;
    out["valid"] = report.valid();
    out["findings"] = findings;
    return out;
}

py::dict py_stats(const std::string& graph_ttl, const std::optional<std::string>& ocedd_text) {
    std::optional<ExtensionModel> ext;
    if (ocedd_text) ext = load_checked(*ocedd_text);
    auto doc = parse_turtle(graph_ttl, "graph");
    GraphStats s = stats(doc.graph, ext ? &*ext : nullptr);
    py::dict out;
    out["triples"] = s.triples;
    out["events"] = s.events;
    out["objects"] = s.objects;
    out["event_subclasses"] = s.event_subclasses;
    out["object_subclasses"] = s.object_subclasses;
    out["object_relation_triples"] = s.object_relation_triples;
    out["event_attribute_triples"] = s.event_attribute_triples;
    return out;
}

py::dict py_query(const std::string& graph_ttl, const std::string& query_text) {
    auto doc = parse_turtle(graph_ttl, "graph");
    PrefixMap prefixes = ocedo_prefixes();
    prefixes.merge(doc.prefixes);
    auto patterns = parse_query(query_text, prefixes, "query");
    BindingSet bindings = bgp_query(doc.graph, patterns);

    py::list rows;
    for (const auto& sol : bindings.solutions) {
        py::dict row;
        for (const auto& v : bindings.variables) row[py::str(v)] = to_ntriples(sol.at(v));
        rows.append(row);
    }
    py::dict out;
    out["variables"] = bindings.variables;
    out["rows"] = rows;
    out["tsv"] = to_tsv(bindings);
    return out;
}

std::string py_closure(const std::string& graph_ttl) {
    auto doc = parse_turtle(graph_ttl, "graph");
    return serialize_turtle(rdfs_closure(doc.graph), doc.prefixes);
}

std::string py_normalize(const std::string& graph_ttl) {
    auto doc = parse_turtle(graph_ttl, "graph");
    return serialize_turtle(doc.graph, doc.prefixes);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "oced-forge: XES event logs to OCED knowledge graphs";

    m.def("ocedo_turtle", [] { return std::string(ocedo_turtle()); },
          "The embedded OCEDO (core + auxiliary) ontology as Turtle.");
    m.def("bpic2013_ocedd_turtle", [] { return std::string(bpic2013_ocedd_turtle()); },
          "The bundled BPIC 2013 OCEDD extension as Turtle.");
    m.def("check_ocedd",
          [](const std::string& text) {
              ExtensionModel ext = load_ocedd(text, "ocedd");
              return findings_to_list(check_conformance(ext, ocedo_graph()));
          },
          py::arg("ocedd_turtle"), "Conformance findings for an OCEDD document.");
    m.def("convert_xes", &py_convert, py::arg("xes"), py::arg("ocedd"),
          py::arg("descriptor"), py::arg("source_name") = "log", py::arg("strict") = false,
          py::arg("reason") = false,
          "Convert an XES document to an OCEDR Turtle graph; returns turtle, stats, "
          "and findings.");
    m.def("validate_graph", &py_validate, py::arg("graph"), py::arg("ocedd"),
          "Validate an OCEDR graph against OCEDO plus an extension.");
    m.def("graph_stats", &py_stats, py::arg("graph"), py::arg("ocedd") = py::none(),
          "Corpus statistics for a Turtle graph.");
    m.def("bgp_query", &py_query, py::arg("graph"), py::arg("query"),
          "Run a basic graph pattern query (one pattern per line).");
    m.def("rdfs_closure", &py_closure, py::arg("graph"),
          "Materialize the RDFS closure of a Turtle graph.");
    m.def("normalize_turtle", &py_normalize, py::arg("graph"),
          "Parse and deterministically re-serialize a Turtle document.");

    py::register_exception<ParseError>(m, "ParseError");
}
