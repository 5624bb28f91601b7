#include "matcoh/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace matcoh {

using json = nlohmann::ordered_json;

namespace {

Int int_from_json(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw CheckError("expected an integer value");
}

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(v.convert_to<long long>());
    return json(v.str());
}

IntMatrix matrix_from_json(const json& rows) {
    if (!rows.is_array()) throw CheckError("matrix must be an array of rows");
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw CheckError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = int_from_json(rows[i][j]);
    }
    return m;
}

}  // namespace

ParsedInput parse_input_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw CheckError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type")) throw CheckError("input needs a \"type\" field");
    std::string type = j["type"].get<std::string>();
    ParsedInput in{ParsedInput::Kind::MatroidInput, {}, {}, {}, {}, {}};

    if (type == "uniform") {
        int k = j.at("k").get<int>(), n = j.at("n").get<int>();
        in.matroid = from_uniform(k, n);
        in.rep = uniform_regular_matrix(k, n);
    } else if (type == "graph") {
        int nv = j.at("vertices").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2) throw CheckError("each edge needs two endpoints");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        in.kind = ParsedInput::Kind::GraphInput;
        in.graph = Graph(nv, edges);
        in.matroid = from_graph(*in.graph);
    } else if (type == "matrix") {
        IntMatrix a = matrix_from_json(j.at("entries"));
        in.rep = a;
        in.matroid = from_matrix(a);
    } else if (type == "rank_table") {
        int n = j.at("n").get<int>();
        std::vector<uint8_t> tbl;
        for (const auto& v : j.at("ranks")) tbl.push_back(uint8_t(v.get<int>()));
        in.matroid = from_rank_table(n, std::move(tbl));
        AxiomReport rep = validate_axioms(in.matroid);
        if (!rep.ok) throw CheckError("rank table violates the matroid axioms: " + rep.message);
    } else if (type == "pappus") {
        in.matroid = pappus_matroid();
    } else if (type == "non_pappus") {
        in.matroid = non_pappus_matroid();
    } else if (type == "u22_diagonal") {
        Int a = int_from_json(j.at("a")), b = int_from_json(j.at("b"));
        in.quasirep = diagonal_u22(a, b);
        in.matroid = in.quasirep->m;
    } else if (type == "arrangement") {
        in.kind = ParsedInput::Kind::ArrangementInput;
        int dim = j.at("dim").get<int>();
        const auto& normals = j.at("normals");
        IntMatrix cols(dim, int(normals.size()));
        for (int p = 0; p < int(normals.size()); ++p) {
            if (int(normals[p].size()) != dim) throw CheckError("normal vector has wrong length");
            for (int i = 0; i < dim; ++i) cols(i, p) = int_from_json(normals[p][i]);
        }
        in.arrangement = Arrangement{dim, cols};
        in.matroid = from_matrix(cols);
    } else {
        throw CheckError("unknown input type: " + type);
    }
    return in;
}

ParsedInput parse_input_file(const std::string& path) { return parse_input_json(read_file(path)); }

QuasiRep resolve_quasirep(const ParsedInput& in, const std::string& descriptor) {
    if (in.quasirep) return *in.quasirep;
    if (descriptor == "free_default") return free_default(in.matroid);
    if (descriptor == "canonical") {
        if (!in.rep && in.graph) return graphic_quasirep(*in.graph);
        if (!in.rep) throw CheckError("canonical quasi-representation needs a matrix or graph input");
        return canonical_from_matrix(in.matroid, *in.rep);
    }
    if (descriptor == "graphic") {
        if (!in.graph) throw CheckError("graphic quasi-representation needs a graph input");
        return graphic_quasirep(*in.graph);
    }
    if (descriptor == "u22_diagonal")
        throw CheckError("u22_diagonal is an input type: {\"type\":\"u22_diagonal\",\"a\":..,\"b\":..}");
    // otherwise: a path to an explicit flats file
    json j;
    try {
        j = json::parse(read_file(descriptor));
    } catch (const std::exception& e) {
        throw CheckError("cannot read quasirep descriptor '" + descriptor + "': " + e.what());
    }
    int gens = j.contains("ambient_gens") ? j["ambient_gens"].get<int>() : in.matroid.rank();
    IntMatrix rel =
        j.contains("ambient_relations") ? matrix_from_json(j["ambient_relations"]) : IntMatrix(gens, 0);
    std::map<uint32_t, IntMatrix> assign;
    for (const auto& [key, val] : j.at("flats").items())
        assign[uint32_t(std::stoul(key))] = matrix_from_json(val);
    return from_assignment(in.matroid, PresentedModule{gens, rel}, assign, "explicit");
}

std::string table_to_json(const CohomologyTable& t, const std::string& ring) {
    json j;
    j["matroid"] = t.matroid_desc;
    j["quasirep"] = t.quasirep_desc;
    j["ring"] = ring;
    j["n"] = t.n;
    j["jmax"] = t.jmax;
    j["cells"] = json::array();
    for (const auto& [key, cls] : t.cells) {
        json cell;
        cell["i"] = key.first;
        cell["j"] = key.second;
        cell["free"] = cls.free_rank;
        cell["torsion"] = json::array();
        for (const auto& d : cls.torsion) cell["torsion"].push_back(int_to_json(d));
        j["cells"].push_back(std::move(cell));
    }
    j["euler"] = json::array();
    for (const auto& c : t.euler) j["euler"].push_back(int_to_json(c));
    return j.dump(2) + "\n";
}

CohomologyTable table_from_json(const std::string& text) {
    json j = json::parse(text);
    CohomologyTable t;
    t.matroid_desc = j.at("matroid").get<std::string>();
    t.quasirep_desc = j.at("quasirep").get<std::string>();
    t.n = j.at("n").get<int>();
    t.jmax = j.at("jmax").get<int>();
    for (const auto& cell : j.at("cells")) {
        FgaClass cls;
        cls.free_rank = cell.at("free").get<long>();
        for (const auto& d : cell.at("torsion")) {
            cls.torsion.push_back(int_from_json(d));
            if (cls.torsion.back() < 2) throw CheckError("torsion factors must be at least 2");
            if (cls.torsion.size() >= 2 &&
                cls.torsion.back() % cls.torsion[cls.torsion.size() - 2] != 0)
                throw CheckError("torsion factors must form a divisibility chain");
        }
        t.cells[{cell.at("i").get<int>(), cell.at("j").get<int>()}] = std::move(cls);
    }
    for (const auto& c : j.at("euler")) t.euler.push_back(int_from_json(c));
    return t;
}

std::string field_table_to_json(const std::map<std::pair<int, int>, int>& dims, int n, int jmax,
                                const std::string& ring) {
    json j;
    j["ring"] = ring;
    j["n"] = n;
    j["jmax"] = jmax;
    j["cells"] = json::array();
    for (const auto& [key, d] : dims) {
        json cell;
        cell["i"] = key.first;
        cell["j"] = key.second;
        cell["dim"] = d;
        j["cells"].push_back(std::move(cell));
    }
    return j.dump(2) + "\n";
}

std::string report_to_json(const std::vector<Verdict>& verdicts) {
    json j = json::array();
    for (const auto& v : verdicts) {
        json e;
        e["property"] = v.property;
        e["pass"] = v.pass;
        e["witness"] = v.witness;
        j.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw CheckError("cannot open output file: " + tmp);
        os << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw CheckError("cannot move output into place: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw CheckError("cannot open input file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace matcoh
