#pragma once

#include <string>

#include "matcoh/arrangement.hpp"
#include "matcoh/complex.hpp"
#include "matcoh/graph.hpp"
#include "matcoh/quasirep.hpp"
#include "matcoh/verify.hpp"

namespace matcoh {

// Parsed job input: a matroid (with optional representation data), a graph,
// or an arrangement, depending on the descriptor type.
struct ParsedInput {
    enum class Kind { MatroidInput, GraphInput, ArrangementInput } kind;
    Matroid matroid;
    std::optional<IntMatrix> rep;      // representing matrix when given
    std::optional<Graph> graph;
    std::optional<Arrangement> arrangement;
    std::optional<QuasiRep> quasirep;  // set when the input pins one (u22_diagonal)
};

ParsedInput parse_input_file(const std::string& path);
ParsedInput parse_input_json(const std::string& text);

// Resolves a quasi-representation descriptor ("canonical", "free_default",
// "graphic", "u22_diagonal", or a path to an explicit flats file).
QuasiRep resolve_quasirep(const ParsedInput& in, const std::string& descriptor);

std::string table_to_json(const CohomologyTable& t, const std::string& ring);
CohomologyTable table_from_json(const std::string& text);

std::string field_table_to_json(const std::map<std::pair<int, int>, int>& dims, int n, int jmax,
                                const std::string& ring);

std::string report_to_json(const std::vector<Verdict>& verdicts);

void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace matcoh
