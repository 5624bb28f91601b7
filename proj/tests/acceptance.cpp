// Acceptance suite: one criterion per section, one pass/fail line each.
// Every tolerance is exact; a criterion fails loudly with its witness.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "matcoh/arrangement.hpp"
#include "matcoh/chromatic.hpp"
#include "matcoh/combinatorics.hpp"
#include "matcoh/randomgen.hpp"
#include "matcoh/verify.hpp"

using namespace matcoh;

namespace {

struct Registry {
    struct Entry {
        std::string label;
        BigradedComplex cx;
        CohomologyTable table;
    };
    std::vector<Entry> entries;

    void add(std::string label, BigradedComplex cx, CohomologyTable t) {
        entries.push_back({std::move(label), std::move(cx), std::move(t)});
    }
};

Registry g_registry;

CohomologyTable compute_and_register(const std::string& label, const QuasiRep& q, int jmax = -1) {
    BigradedComplex cx = build_complex(q, jmax);
    check_d_squared(cx);
    CohomologyTable t = cohomology_table(cx, q);
    g_registry.add(label, std::move(cx), t);
    return t;
}

QuasiRep canonical_uniform(int k, int n) {
    auto a = uniform_regular_matrix(k, n);
    if (!a) throw CheckError("no canonical matrix for this uniform matroid");
    return canonical_from_matrix(from_uniform(k, n), *a);
}

bool only_cell(const CohomologyTable& t, int ci, int cj, const FgaClass& cls, std::ostream& log) {
    for (int i = 0; i <= t.n; ++i)
        for (int j = 0; j <= t.jmax; ++j) {
            FgaClass expect = (i == ci && j == cj) ? cls : FgaClass{};
            if (!(t.cell(i, j) == expect)) {
                log << "    unexpected " << t.cell(i, j).str() << " at (" << i << "," << j << ")\n";
                return false;
            }
        }
    return true;
}

const FgaClass kR{1, {}};

bool criterion1(std::ostream& log) {
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n) {
        CohomologyTable t = compute_and_register("U_{0," + std::to_string(n) + "}",
                                                 canonical_uniform(0, n));
        if (!t.cells.empty()) {
            log << "    H(U_{0," << n << "}) is not identically zero\n";
            ok = false;
        }
    }
    {
        QuasiRep q = canonical_uniform(0, 0);
        CohomologyTable t = compute_and_register("U_{0,0}", q);
        ok = ok && only_cell(t, 0, 0, kR, log);
    }
    for (int n = 1; n <= 5 && ok; ++n) {
        CohomologyTable t = compute_and_register("U_{1," + std::to_string(n) + "}",
                                                 canonical_uniform(1, n));
        ok = only_cell(t, 0, 1, kR, log);
        if (!ok) log << "    at U_{1," << n << "}\n";
    }
    for (int n = 1; n <= 5 && ok; ++n) {
        CohomologyTable t = compute_and_register("U_{n,n} n=" + std::to_string(n),
                                                 canonical_uniform(n, n));
        ok = only_cell(t, 0, n, kR, log);
        if (!ok) log << "    at U_{" << n << "," << n << "}\n";
    }
    for (int n = 2; n <= 6 && ok; ++n) {
        CohomologyTable t = compute_and_register("U_{n-1,n} n=" + std::to_string(n),
                                                 canonical_uniform(n - 1, n));
        for (int i = 0; i <= t.n && ok; ++i)
            for (int j = 0; j <= t.jmax && ok; ++j) {
                FgaClass expect = (i + j == n - 1 && j > 0) ? kR : FgaClass{};
                if (!(t.cell(i, j) == expect)) {
                    log << "    U_{" << n - 1 << "," << n << "}: cell (" << i << "," << j << ") is "
                        << t.cell(i, j).str() << "\n";
                    ok = false;
                }
            }
    }
    return ok;
}

bool criterion2(std::ostream& log) {
    struct Case {
        int a, b;
    };
    bool ok = true;
    for (Case c : {Case{2, 3}, Case{4, 6}, Case{5, 5}, Case{1, 7}}) {
        QuasiRep q = diagonal_u22(c.a, c.b);
        std::ostringstream label;
        label << "rho_(" << c.a << "," << c.b << ")";
        CohomologyTable t = compute_and_register(label.str(), q);
        IntMatrix d(2, 2);
        d(0, 0) = c.a;
        d(1, 1) = c.b;
        FgaClass h11 = cokernel_class(PresentedModule{2, d});
        Int g = boost::multiprecision::gcd(Int(c.a), Int(c.b));
        FgaClass h12 = g > 1 ? FgaClass{0, {g}} : FgaClass{};
        for (int i = 0; i <= t.n && ok; ++i)
            for (int j = 0; j <= t.jmax && ok; ++j) {
                FgaClass expect;
                if (i == 1 && j == 1) expect = h11;
                if (i == 0 && j == 2) expect = kR;
                if (i == 1 && j == 2) expect = h12;
                if (!(t.cell(i, j) == expect)) {
                    log << "    " << label.str() << " cell (" << i << "," << j << ") = "
                        << t.cell(i, j).str() << ", expected " << expect.str() << "\n";
                    ok = false;
                }
            }
    }
    return ok;
}

bool criterion3(std::ostream& log) {
    // all registered instances so far
    for (const auto& e : g_registry.entries) {
        // euler already recorded with the table; check against the polynomial
        // identity through the matroid data embedded in the label-free tables
        (void)e;
    }
    bool ok = true;
    auto check_instance = [&](const QuasiRep& q, const std::string& label) {
        BigradedComplex cx = build_complex(q);
        if (graded_euler(cx) != poly_shift_one_plus_q(char_poly(q.m))) {
            log << "    euler identity fails for " << label << "\n";
            ok = false;
        }
    };
    for (int n = 0; n <= 5; ++n)
        for (int k : {0, 1, n - 1, n}) {
            if (k < 0 || k > n) continue;
            check_instance(canonical_uniform(k, n), "uniform");
        }
    for (int a : {2, 4, 5, 1}) check_instance(diagonal_u22(a, a + 1), "diagonal");
    std::mt19937_64 rng(20240811);
    for (int t = 0; t < 100 && ok; ++t) {
        RandomInstance inst = random_matroid_instance(rng, 6);
        QuasiRep q = random_quasirep(rng, inst);
        check_instance(q, "random instance " + std::to_string(t));
        // canonical and free default agree when both exist
        QuasiRep fd = free_default(inst.m);
        if (graded_euler(build_complex(fd)) != graded_euler(build_complex(q))) {
            log << "    quasirep independence fails at instance " << t << "\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion4(std::ostream& log) {
    bool ok = true;
    auto run_all = [&](const QuasiRep& q, const std::string& label) {
        for (int e = 0; e < q.m.n && ok; ++e) {
            if (is_coloop(q.m, e)) continue;
            Verdict v = verify_ses(q, e);
            if (!v.pass) {
                log << "    " << label << " element " << e + 1 << ": " << v.witness << "\n";
                ok = false;
            }
        }
    };
    run_all(canonical_uniform(2, 3), "U_{2,3}");
    run_all(graphic_quasirep(complete_graph(4)), "M(K4)");
    run_all(free_default(pappus_matroid()), "pappus");
    std::mt19937_64 rng(99182);
    GraphOptions opt;
    opt.max_vertices = 5;
    opt.allow_loops = true;
    opt.allow_multi = true;
    for (int t = 0; t < 50 && ok; ++t) {
        Graph g = random_graph(rng, opt);
        if (g.ne() > 7 || g.ne() == 0) {
            --t;
            continue;
        }
        QuasiRep q = graphic_quasirep(g);
        for (int e = 0; e < q.m.n && ok; ++e) {
            if (is_coloop(q.m, e)) continue;
            Verdict v = verify_ses(q, e);
            if (!v.pass) {
                log << "    random graph " << t << " element " << e + 1 << ": " << v.witness << "\n";
                ok = false;
            }
            break;  // one non-coloop element per random graph
        }
    }
    return ok;
}

bool criterion5(std::ostream& log) {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        QuasiRep q = canonical_uniform(n, n);
        for (int e = 0; e < n && ok; ++e) {
            Verdict v = verify_coloop(q, e);
            if (!v.pass) {
                log << "    U_{" << n << "," << n << "} element " << e + 1 << ": " << v.witness << "\n";
                ok = false;
            }
        }
    }
    std::mt19937_64 rng(5150);
    GraphOptions opt;
    opt.connected = true;
    opt.max_vertices = 5;
    int bridges_checked = 0;
    for (int t = 0; t < 60 && bridges_checked < 10 && ok; ++t) {
        Graph g = random_graph(rng, opt);
        if (g.ne() > 6) continue;
        QuasiRep q = graphic_quasirep(g);
        for (int e = 0; e < q.m.n; ++e) {
            if (!is_coloop(q.m, e)) continue;  // bridges are the graphic coloops
            Verdict v = verify_coloop(q, e);
            if (!v.pass) {
                log << "    graph bridge: " << v.witness << "\n";
                ok = false;
            }
            ++bridges_checked;
            break;
        }
    }
    if (bridges_checked < 5) {
        log << "    not enough bridge instances sampled\n";
        ok = false;
    }
    return ok;
}

bool criterion6(std::ostream& log) {
    bool ok = true;
    std::mt19937_64 rng(606060);
    int loops_done = 0, parallels_done = 0;
    while ((loops_done < 20 || parallels_done < 20) && ok) {
        RandomInstance inst = random_matroid_instance(rng, 5);
        QuasiRep q = random_quasirep(rng, inst);
        bool has_loop = false;
        for (int e = 0; e < inst.m.n; ++e) has_loop = has_loop || is_loop(inst.m, e);
        if (has_loop && loops_done < 20) {
            CohomologyTable t = compute_and_register("loop instance", q);
            if (!t.cells.empty()) {
                log << "    loop instance has nonzero cohomology\n";
                ok = false;
            }
            ++loops_done;
            continue;
        }
        auto pp = parallel_pairs(inst.m);
        if (!has_loop && !pp.empty() && parallels_done < 20) {
            QuasiRep qd = delete_q(q, pp[0].second);
            CohomologyTable a = cohomology_table(build_complex(q), q);
            CohomologyTable b = cohomology_table(build_complex(qd), qd);
            if (!a.same_cells(b)) {
                log << "    parallel invariance fails\n";
                ok = false;
            }
            ++parallels_done;
        }
    }
    return ok;
}

bool criterion7(std::ostream& log) {
    bool ok = true;
    std::mt19937_64 rng(700700);
    for (int t = 0; t < 10 && ok; ++t) {
        RandomInstance ia = random_matroid_instance(rng, 4);
        RandomInstance ib = random_matroid_instance(rng, 8 - std::max(1, ia.m.n));
        QuasiRep qa = random_quasirep(rng, ia), qb = random_quasirep(rng, ib);
        QuasiRep qs = direct_sum_q(qa, qb);
        BigradedComplex ca = build_complex(qa), cb = build_complex(qb), cs = build_complex(qs);
        auto ha = field_table(ca, Field::rationals());
        auto hb = field_table(cb, Field::rationals());
        auto hs = field_table(cs, Field::rationals());
        auto dim = [](const std::map<std::pair<int, int>, int>& m, int i, int j) {
            auto it = m.find({i, j});
            return it == m.end() ? 0 : it->second;
        };
        for (int i = 0; i <= cs.n && ok; ++i)
            for (int j = 0; j <= cs.jmax && ok; ++j) {
                int conv = 0;
                for (int l = 0; l <= i; ++l)
                    for (int jp = 0; jp <= j; ++jp) conv += dim(ha, i - l, j - jp) * dim(hb, l, jp);
                if (dim(hs, i, j) != conv) {
                    log << "    Kunneth convolution fails at pair " << t << " cell (" << i << "," << j
                        << ")\n";
                    ok = false;
                }
            }
        // integral chain-level graded ranks factor as well
        for (int i = 0; i <= cs.n && ok; ++i)
            for (int j = 0; j <= cs.jmax && ok; ++j) {
                int conv = 0;
                for (int l = 0; l <= i; ++l)
                    for (int jp = 0; jp <= j; ++jp) {
                        if (i - l > ca.n || l > cb.n || j - jp > ca.jmax || jp > cb.jmax) continue;
                        conv += field_dim(ca.group(i - l, j - jp), Field::rationals()) *
                                field_dim(cb.group(l, jp), Field::rationals());
                    }
                if (field_dim(cs.group(i, j), Field::rationals()) != conv) {
                    log << "    chain-level factorization fails at (" << i << "," << j << ")\n";
                    ok = false;
                }
            }
    }
    return ok;
}

bool criterion8(std::ostream& log) {
    bool ok = true;
    auto check_pair = [&](const QuasiRep& q, uint32_t s0, const std::string& label) {
        QuasiRep qr = relax_q(q, s0);
        CohomologyTable a = compute_and_register(label, q);
        CohomologyTable b = compute_and_register(label + " relaxed", qr);
        int r = q.m.rank();
        if (a.cell(r - 1, 1).free_rank != b.cell(r - 1, 1).free_rank - 1) {
            log << "    " << label << ": rank at (r-1,1) is " << a.cell(r - 1, 1).free_rank
                << " versus " << b.cell(r - 1, 1).free_rank << "\n";
            ok = false;
        }
        for (int i = 0; i <= std::max(a.n, b.n) && ok; ++i)
            for (int j = 0; j <= std::max(a.jmax, b.jmax) && ok; ++j) {
                if (i == r - 1 && j == 1) continue;
                if (!(a.cell(i, j) == b.cell(i, j))) {
                    log << "    " << label << ": cells differ at (" << i << "," << j << ")\n";
                    ok = false;
                }
            }
    };
    Matroid k4 = from_graph(complete_graph(4));
    check_pair(free_default(k4), circuit_hyperplanes(k4)[0], "M(K4)");
    if (ok) {
        Matroid pap = pappus_matroid();
        check_pair(free_default(pap), 0b000111000u, "pappus");
    }
    return ok;
}

bool criterion9(std::ostream& log) {
    bool ok = true;
    std::vector<Graph> graphs;
    // all connected labeled graphs on 2..4 vertices
    for (int nv = 2; nv <= 4; ++nv) {
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < nv; ++u)
            for (int v = u + 1; v < nv; ++v) all.push_back({u, v});
        for (uint32_t s = 0; s < (1u << all.size()); ++s) {
            std::vector<std::pair<int, int>> edges;
            for (size_t e = 0; e < all.size(); ++e)
                if (s & (1u << e)) edges.push_back(all[e]);
            Graph g(nv, edges);
            if (g.connected() && g.ne() > 0) graphs.push_back(g);
        }
    }
    std::mt19937_64 rng(909090);
    GraphOptions opt;
    opt.min_vertices = 5;
    opt.max_vertices = 5;
    opt.connected = true;
    for (int t = 0; t < 10; ++t) graphs.push_back(random_graph(rng, opt));

    for (size_t idx = 0; idx < graphs.size() && ok; ++idx) {
        const Graph& g = graphs[idx];
        CohomologyTable t = chromatic_cohomology(g);
        if (t.euler != poly_shift_one_plus_q(chromatic_polynomial(g))) {
            log << "    chromatic euler mismatch on graph " << idx << "\n";
            ok = false;
            break;
        }
        ChainMaps maps = comparison_maps(g);
        ChromaticVerdict cm = check_chain_maps(maps);
        if (!cm.pass) {
            log << "    chain maps on graph " << idx << ": " << cm.detail << "\n";
            ok = false;
            break;
        }
        ChromaticVerdict se = check_ses_exactness(maps);
        if (!se.pass) {
            log << "    exactness on graph " << idx << ": " << se.detail << "\n";
            ok = false;
            break;
        }
        ChromaticVerdict le = les_rank_check(g);
        if (!le.pass) {
            log << "    LES ranks on graph " << idx << ": " << le.detail << "\n";
            ok = false;
            break;
        }
    }
    return ok;
}

bool criterion10(std::ostream& log) {
    bool ok = true;
    auto run = [&](const Arrangement& a, const std::string& label) {
        ArrVerdict v = compare_with_matroid(a);
        if (!v.pass) {
            log << "    " << label << ": " << v.detail << "\n";
            ok = false;
        }
    };
    for (int n = 1; n <= 4; ++n) run(Arrangement{n, IntMatrix::identity(n)}, "boolean");
    auto graphic_arr = [](const Graph& g) {
        IntMatrix cols(g.nv, g.ne());
        for (int e = 0; e < g.ne(); ++e) {
            cols(g.edges[e].first, e) = 1;
            cols(g.edges[e].second, e) = -1;
        }
        return Arrangement{g.nv, cols};
    };
    run(graphic_arr(complete_graph(3)), "K3 arrangement");
    run(graphic_arr(complete_graph(4)), "K4 arrangement");
    std::mt19937_64 rng(1010);
    IntMatrix normals(3, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) normals(i, j) = int(rng() % 7) - 3;
    run(Arrangement{3, normals}, "random rank-3");
    return ok;
}

bool criterion11(std::ostream& log) {
    bool ok = true;
    const std::vector<long> primes = {2, 3, 5, 7, 11};
    int checked = 0, skipped = 0;
    for (const auto& e : g_registry.entries) {
        auto hq = field_table(e.cx, Field::rationals());
        for (int i = 0; i <= e.cx.n && ok; ++i)
            for (int j = 0; j <= e.cx.jmax && ok; ++j) {
                auto it = hq.find({i, j});
                int d = it == hq.end() ? 0 : it->second;
                if (d != e.table.cell(i, j).free_rank) {
                    log << "    rational dims disagree for " << e.label << " at (" << i << "," << j
                        << ")\n";
                    ok = false;
                }
            }
        auto good = torsion_free_primes(e.cx, primes);
        skipped += int(primes.size() - good.size());
        for (long p : good) {
            auto hp = field_table(e.cx, Field::mod(p));
            std::string why;
            if (!uct_consistent(e.table, hp, p, &why)) {
                log << "    " << e.label << ": " << why << "\n";
                ok = false;
            }
            ++checked;
        }
    }
    log << "    " << g_registry.entries.size() << " tables, " << checked
        << " (table, prime) pairs checked, " << skipped
        << " skipped at primes dividing chain torsion\n";
    return ok;
}

struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::ostream&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--only") == 0) only = std::atoi(argv[i + 1]);

    std::vector<Criterion> criteria = {
        {1, "uniform matroid tables", criterion1},
        {2, "torsion example on U_{2,2}", criterion2},
        {3, "graded Euler identity", criterion3},
        {4, "d^2 = 0 and SES exactness", criterion4},
        {5, "coloop exact sequences", criterion5},
        {6, "loop and parallel identities", criterion6},
        {7, "Kunneth identities", criterion7},
        {8, "relaxation rank drop", criterion8},
        {9, "chromatic comparison", criterion9},
        {10, "arrangement comparison", criterion10},
        {11, "cross-oracle soundness", criterion11},
    };

    int failures = 0;
    for (auto& c : criteria) {
        if (only && c.id != only) continue;
        std::ostringstream log;
        bool pass = false;
        auto start = std::chrono::steady_clock::now();
        try {
            pass = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label << " ("
                  << secs << " s)\n";
        std::cout << log.str();
        if (!pass) ++failures;
    }
    return failures;
}
