#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "matcoh/arrangement.hpp"
#include "matcoh/chromatic.hpp"
#include "matcoh/complex.hpp"
#include "matcoh/json_io.hpp"
#include "matcoh/verify.hpp"

namespace py = pybind11;
using namespace matcoh;

namespace {

IntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw CheckError("ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

py::dict fga_to_dict(const FgaClass& c) {
    py::dict d;
    d["free"] = c.free_rank;
    py::list t;
    for (const auto& x : c.torsion) t.append(x.str());
    d["torsion"] = t;
    return d;
}

py::dict table_to_dict(const CohomologyTable& t) {
    py::dict d;
    d["n"] = t.n;
    d["jmax"] = t.jmax;
    py::list cells;
    for (const auto& [key, cls] : t.cells) {
        py::dict cell = fga_to_dict(cls);
        cell["i"] = key.first;
        cell["j"] = key.second;
        cells.append(cell);
    }
    d["cells"] = cells;
    py::list euler;
    for (const auto& c : t.euler) euler.append(c.str());
    d["euler"] = euler;
    return d;
}

std::vector<std::string> poly_strings(const std::vector<Int>& p) {
    std::vector<std::string> out;
    for (const auto& c : p) out.push_back(c.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact bigraded cohomology of matroids with quasi-representations";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("vertices"), py::arg("edges"))
        .def_readonly("nv", &Graph::nv)
        .def("ne", &Graph::ne)
        .def("connected", &Graph::connected);

    py::class_<Matroid>(m, "Matroid")
        .def_readonly("n", &Matroid::n)
        .def("rank", [](const Matroid& m2) { return m2.rank(); })
        .def("rank_of", [](const Matroid& m2, uint32_t s) { return m2.rank(s); })
        .def("char_poly", [](const Matroid& m2) { return poly_strings(char_poly(m2)); })
        .def("circuit_hyperplanes", [](const Matroid& m2) { return circuit_hyperplanes(m2); })
        .def("is_loop", [](const Matroid& m2, int e) { return is_loop(m2, e); })
        .def("is_coloop", [](const Matroid& m2, int e) { return is_coloop(m2, e); })
        .def("closure", [](const Matroid& m2, uint32_t s) { return closure(m2, s); })
        .def("validate",
             [](const Matroid& m2) {
                 AxiomReport r = validate_axioms(m2);
                 return py::make_tuple(r.ok, r.message);
             })
        .def("deletion", [](const Matroid& m2, int e) { return deletion(m2, e); })
        .def("contraction", [](const Matroid& m2, int e) { return contraction(m2, e); })
        .def("direct_sum", [](const Matroid& a, const Matroid& b) { return direct_sum(a, b); })
        .def("relax", [](const Matroid& m2, uint32_t s0) { return relax(m2, s0); });

    m.def("uniform_matroid", &from_uniform, py::arg("k"), py::arg("n"));
    m.def("graphic_matroid", &from_graph);
    m.def("matrix_matroid", [](const std::vector<std::vector<long long>>& rows) {
        return from_matrix(matrix_from_rows(rows));
    });
    m.def("pappus_matroid", &pappus_matroid);
    m.def("non_pappus_matroid", &non_pappus_matroid);

    py::class_<QuasiRep>(m, "QuasiRep")
        .def_readonly("descriptor", &QuasiRep::descriptor)
        .def_property_readonly("matroid", [](const QuasiRep& q) { return q.m; })
        .def("validate", [](const QuasiRep& q) {
            QValidation v = validate(q);
            return py::make_tuple(v.ok, v.message);
        });

    m.def("free_default", &free_default);
    m.def("canonical_from_matrix", [](const Matroid& mm, const std::vector<std::vector<long long>>& rows) {
        return canonical_from_matrix(mm, matrix_from_rows(rows));
    });
    m.def("graphic_quasirep", &graphic_quasirep);
    m.def("diagonal_u22",
          [](long long a, long long b) { return diagonal_u22(Int(a), Int(b)); });
    m.def("delete_q", &delete_q);
    m.def("contract_q", &contract_q);
    m.def("direct_sum_q", &direct_sum_q);
    m.def("relax_q", &relax_q);

    m.def(
        "cohomology",
        [](const QuasiRep& q, int jmax) {
            BigradedComplex cx = build_complex(q, jmax);
            return table_to_dict(cohomology_table(cx, q));
        },
        py::arg("quasirep"), py::arg("jmax") = -1);
    m.def(
        "cohomology_dims",
        [](const QuasiRep& q, long p, int jmax) {
            BigradedComplex cx = build_complex(q, jmax);
            Field f = p == 0 ? Field::rationals() : Field::mod(p);
            py::dict out;
            for (const auto& [key, d] : field_table(cx, f))
                out[py::make_tuple(key.first, key.second)] = d;
            return out;
        },
        py::arg("quasirep"), py::arg("p") = 0, py::arg("jmax") = -1);
    m.def("graded_euler", [](const QuasiRep& q) {
        return poly_strings(graded_euler(build_complex(q)));
    });

    m.def("chromatic_cohomology",
          [](const Graph& g) { return table_to_dict(chromatic_cohomology(g)); });
    m.def("chromatic_polynomial",
          [](const Graph& g) { return poly_strings(chromatic_polynomial(g)); });
    m.def("chromatic_checks", [](const Graph& g) {
        ChainMaps maps = comparison_maps(g);
        py::dict d;
        d["chain_maps"] = check_chain_maps(maps).pass;
        d["ses_exact"] = check_ses_exactness(maps).pass;
        ChromaticVerdict le = les_rank_check(g);
        d["les_ranks"] = le.pass;
        d["detail"] = le.detail;
        return d;
    });

    m.def("arrangement_compare", [](int dim, const std::vector<std::vector<long long>>& normals) {
        IntMatrix cols(dim, int(normals.size()));
        for (int p = 0; p < int(normals.size()); ++p)
            for (int i = 0; i < dim; ++i) cols(i, p) = normals[p][i];
        Arrangement a{dim, cols};
        ArrVerdict v = compare_with_matroid(a);
        return py::make_tuple(v.pass, v.detail);
    });

    m.def("verify_ses", &verify_ses);
    m.def("verify_coloop", &verify_coloop);
    m.def("verify_les_ranks", &verify_les_ranks);
    m.def("verify_identities", [](const QuasiRep& q) {
        py::list out;
        for (const auto& v : verify_identities(q))
            out.append(py::make_tuple(v.property, v.pass, v.witness));
        return out;
    });

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("property", &Verdict::property)
        .def_readonly("pass_", &Verdict::pass)
        .def_readonly("witness", &Verdict::witness);

    py::register_exception<CheckError>(m, "CheckError");
}
