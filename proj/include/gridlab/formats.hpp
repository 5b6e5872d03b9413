#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gridlab/embedded_graph.hpp"
#include "gridlab/minor_models.hpp"
#include "gridlab/simple_graph.hpp"
#include "gridlab/tree_decomposition.hpp"

namespace gridlab {

// All readers skip blank lines and lines starting with 'c', and throw
// ParseError carrying the offending line number. Writers are canonical, so
// write(read(write(x))) == write(x) byte for byte.

/// PACE graph: "p tw <n> <m>", then one "<u> <v>" line per edge, 1-indexed.
std::string write_gr(const SimpleGraph& g);
SimpleGraph read_gr(std::string_view text);

/// PACE decomposition: "s td <bags> <max bag size> <n>", "b <id> <vertices>"
/// lines (1-indexed), then one "<x> <y>" line per tree edge.
struct TdFile {
    TreeDecomposition td;
    int num_vertices = 0;
};
std::string write_td(const TreeDecomposition& td, int num_vertices);
TdFile read_td(std::string_view text);

/// Combinatorial map: "emb <darts>", then "twin ...", "next ...",
/// "vertex_of ..." with one 0-based entry per dart, and optionally
/// "nations <face ids>".
struct EmbFile {
    EmbeddedGraph graph;
    std::optional<FaceLabeling> labels;
};
std::string write_emb(const EmbeddedGraph& e, const FaceLabeling* labels = nullptr);
EmbFile read_emb(std::string_view text);

/// Minor model certificate (JSON). The host graph is named by `host_ref`
/// and checked by vertex and edge count when read back.
std::string write_model_json(const MinorModel& m, const std::string& host_ref);
MinorModel read_model_json(std::string_view text, const SimpleGraph& host);

struct SequenceCertificate {
    ContractionSequence sequence;
    std::string host_ref;
    int host_vertices = 0;
    int host_edges = 0;
};
std::string write_sequence_json(const SequenceCertificate& cert);
SequenceCertificate read_sequence_json(std::string_view text);

/// The "type" field of a JSON certificate ("minor_model" or
/// "contraction_sequence").
std::string certificate_type(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gridlab
