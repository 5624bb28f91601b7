#include "matcoh/quasirep.hpp"

#include <algorithm>
#include <utility>

#include "matcoh/combinatorics.hpp"
#include "matcoh/lattice.hpp"

namespace matcoh {

namespace {

IntMatrix canonical_lattice(const IntMatrix& gens, const IntMatrix& ambient_rel) {
    return hnf(hcat(gens, ambient_rel)).h;
}

// Express each column of `lat` (a lattice over the old generators) in the
// columns of `basis`; throws if not contained.
IntMatrix express_in(const IntMatrix& basis, const IntMatrix& lat, const char* what) {
    auto sol = solve_integral_cols(basis, lat);
    if (!sol) throw CheckError(std::string("lattice not contained in ") + what);
    return *sol;
}

}  // namespace

int QuasiRep::submodule_rank(uint32_t s) const {
    return rank_rational(lattice(s)) - rank_rational(ambient.relations);
}

QuasiRep canonical_from_matrix(const Matroid& m, const IntMatrix& a) {
    if (a.cols() != m.n) throw CheckError("canonical_from_matrix: column count != ground set size");
    for (uint32_t s = 0; s < (1u << m.n); ++s) {
        if (rank_rational(a.columns(mask_elements(s))) != m.rank(s))
            throw CheckError("matrix does not represent the matroid at " + m.subset_str(s));
    }
    // re-present so the ambient generators are a lattice basis of rho(E)
    IntMatrix basis = hnf(a).h;
    int r = basis.cols();
    QuasiRep q;
    q.m = m;
    q.ambient = PresentedModule::free_module(r);
    q.descriptor = "canonical";
    for (uint32_t f : flats(m)) {
        IntMatrix span = hnf(a.columns(mask_elements(f))).h;
        q.flat_lattice[f] = hnf(express_in(basis, span, "rho(E)")).h;
    }
    return q;
}

std::optional<IntMatrix> uniform_regular_matrix(int k, int n) {
    if (k == 0) return IntMatrix(0, n);
    if (k == n) return IntMatrix::identity(n);
    if (k == 1) {
        IntMatrix a(1, n);
        for (int j = 0; j < n; ++j) a(0, j) = 1;
        return a;
    }
    if (k == n - 1) {
        IntMatrix a(k, n);
        for (int i = 0; i < k; ++i) {
            a(i, i) = 1;
            a(i, n - 1) = 1;
        }
        return a;
    }
    return std::nullopt;
}

QuasiRep free_default(const Matroid& m) {
    QuasiRep q;
    q.m = m;
    int r = m.rank();
    q.ambient = PresentedModule::free_module(r);
    q.descriptor = "free_default";
    IntMatrix id = IntMatrix::identity(r);
    for (uint32_t f : flats(m)) {
        std::vector<int> cols(m.rank(f));
        for (int i = 0; i < int(cols.size()); ++i) cols[i] = i;
        q.flat_lattice[f] = id.columns(cols);
    }
    return q;
}

QuasiRep scaled_free(const Matroid& m, const std::vector<Int>& scalars) {
    int r = m.rank();
    if (int(scalars.size()) != r) throw CheckError("scaled_free: need one scalar per rank");
    for (const auto& s : scalars)
        if (s == 0) throw CheckError("scaled_free: scalars must be nonzero");
    QuasiRep q;
    q.m = m;
    q.ambient = PresentedModule::free_module(r);
    q.descriptor = "scaled_free";
    for (uint32_t f : flats(m)) {
        if (m.rank(f) == r) {
            q.flat_lattice[f] = IntMatrix::identity(r);
            continue;
        }
        IntMatrix lat(r, m.rank(f));
        for (int i = 0; i < m.rank(f); ++i) {
            Int s = scalars[i] < 0 ? Int(-scalars[i]) : scalars[i];
            lat(i, i) = s;
        }
        q.flat_lattice[f] = std::move(lat);
    }
    return q;
}

QuasiRep diagonal_u22(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw CheckError("diagonal_u22: parameters must be nonzero");
    QuasiRep q;
    q.m = from_uniform(2, 2);
    q.ambient = PresentedModule::free_module(2);
    q.descriptor = "u22_diagonal";
    IntMatrix la(2, 1), lb(2, 1);
    la(0, 0) = a < 0 ? Int(-a) : a;
    lb(1, 0) = b < 0 ? Int(-b) : b;
    q.flat_lattice[0b00] = IntMatrix(2, 0);
    q.flat_lattice[0b01] = std::move(la);
    q.flat_lattice[0b10] = std::move(lb);
    q.flat_lattice[0b11] = IntMatrix::identity(2);
    return q;
}

QuasiRep graphic_quasirep(const Graph& g) {
    if (g.nv == 0) throw CheckError("graphic_quasirep: empty graph");
    QuasiRep q;
    q.m = from_graph(g);
    int nv = g.nv;
    std::vector<int> comp_min = g.component_minima(g.ne() ? (1u << g.ne()) - 1 : 0);
    IntMatrix ig(nv, int(comp_min.size()));
    for (int c = 0; c < int(comp_min.size()); ++c) ig(comp_min[c], c) = 1;
    q.ambient = PresentedModule{nv, ig};
    q.descriptor = "graphic";
    for (uint32_t f : flats(q.m)) {
        auto elems = mask_elements(f);
        IntMatrix diffs(nv, int(elems.size()));
        for (int c = 0; c < int(elems.size()); ++c) {
            auto [u, v] = g.edges[elems[c]];
            if (u != v) {
                diffs(u, c) = 1;
                diffs(v, c) = -1;
            }
        }
        q.flat_lattice[f] = canonical_lattice(diffs, ig);
    }
    return q;
}

QuasiRep from_assignment(const Matroid& m, const PresentedModule& ambient,
                         const std::map<uint32_t, IntMatrix>& generators,
                         const std::string& descriptor) {
    QuasiRep q;
    q.m = m;
    q.ambient = ambient;
    q.descriptor = descriptor;
    for (const auto& [s, gens] : generators) {
        if (gens.rows() != ambient.gens) throw CheckError("assignment generator rows != ambient gens");
        uint32_t f = closure(m, s);
        IntMatrix lat = canonical_lattice(gens, ambient.relations);
        auto it = q.flat_lattice.find(f);
        if (it != q.flat_lattice.end()) {
            if (!(it->second == lat))
                throw CheckError("assignment is inconsistent on the flat " + m.subset_str(f));
        } else {
            q.flat_lattice[f] = std::move(lat);
        }
    }
    for (uint32_t f : flats(m))
        if (!q.flat_lattice.count(f))
            throw CheckError("assignment missing a value on the flat " + m.subset_str(f));
    return q;
}

QValidation validate(const QuasiRep& q) {
    QValidation v;
    auto fail = [&](const std::string& msg, uint32_t w) {
        v.ok = false;
        v.message = msg;
        v.witnesses.push_back(w);
        return v;
    };
    uint32_t full = q.m.full_mask();
    // boundary values
    if (!lattice_equal(q.lattice(0), q.ambient.relations))
        return fail("rho(empty) != 0", 0);
    if (!lattice_equal(q.lattice(full), IntMatrix::identity(q.ambient.gens)))
        return fail("rho(E) != N", full);
    // rank axiom over all subsets (through flats)
    for (uint32_t s = 0; s < (1u << q.m.n); ++s) {
        if (q.submodule_rank(s) != q.m.rank(s))
            return fail("rank of rho(S) != rank_M(S) at S = " + q.m.subset_str(s), s);
    }
    // monotonicity on flats (closure makes the general case follow)
    auto fl = flats(q.m);
    for (uint32_t f1 : fl)
        for (uint32_t f2 : fl) {
            if (f1 == f2 || (f1 & f2) != f1) continue;
            if (!lattice_subset(q.flat_lattice.at(f1), q.flat_lattice.at(f2))) {
                v.ok = false;
                v.message = "rho not monotone between " + q.m.subset_str(f1) + " and " +
                            q.m.subset_str(f2);
                v.witnesses = {f1, f2};
                return v;
            }
        }
    return v;
}

QuasiRep delete_q(const QuasiRep& q, int e) {
    if (e < 0 || e >= q.m.n) throw CheckError("delete_q: element out of range");
    uint32_t rest = q.m.full_mask() & ~(1u << e);
    IntMatrix basis = q.lattice(rest);  // new ambient generators
    QuasiRep out;
    out.m = deletion(q.m, e);
    out.ambient = PresentedModule{basis.cols(), hnf(express_in(basis, q.ambient.relations, "rho(E\\e)")).h};
    out.descriptor = q.descriptor + "\\" + q.m.names[e];
    uint32_t low = (1u << e) - 1;
    for (uint32_t f : flats(out.m)) {
        uint32_t old_mask = (f & low) | ((f & ~low) << 1);
        out.flat_lattice[f] = hnf(express_in(basis, q.lattice(old_mask), "rho(E\\e)")).h;
    }
    return out;
}

QuasiRep contract_q(const QuasiRep& q, int e) {
    if (e < 0 || e >= q.m.n) throw CheckError("contract_q: element out of range");
    QuasiRep out;
    out.m = contraction(q.m, e);
    out.ambient = PresentedModule{q.ambient.gens, q.lattice(1u << e)};
    out.descriptor = q.descriptor + "/" + q.m.names[e];
    uint32_t low = (1u << e) - 1;
    for (uint32_t f : flats(out.m)) {
        uint32_t old_mask = ((f & low) | ((f & ~low) << 1)) | (1u << e);
        out.flat_lattice[f] = q.lattice(old_mask);
    }
    return out;
}

QuasiRep direct_sum_q(const QuasiRep& a, const QuasiRep& b) {
    QuasiRep out;
    out.m = direct_sum(a.m, b.m);
    out.ambient = PresentedModule{a.ambient.gens + b.ambient.gens,
                                  block_diag(a.ambient.relations, b.ambient.relations)};
    out.descriptor = a.descriptor + "(+)" + b.descriptor;
    uint32_t amask = a.m.n ? (1u << a.m.n) - 1 : 0;
    for (uint32_t f : flats(out.m))
        out.flat_lattice[f] =
            hnf(block_diag(a.lattice(f & amask), b.lattice(f >> a.m.n))).h;
    return out;
}

QuasiRep relax_q(const QuasiRep& q, uint32_t s0) {
    QuasiRep out;
    out.m = relax(q.m, s0);  // rejects non circuit-hyperplanes
    out.ambient = q.ambient;
    out.descriptor = q.descriptor + "-relaxed";
    for (uint32_t f : flats(out.m)) out.flat_lattice[f] = q.lattice(f);
    return out;
}

QuasiRep permute_q(const QuasiRep& q, const std::vector<int>& perm) {
    if (int(perm.size()) != q.m.n) throw CheckError("permute_q: permutation size mismatch");
    QuasiRep out;
    out.m.n = q.m.n;
    out.m.rank_tbl.resize(1u << q.m.n);
    out.m.names.resize(q.m.n);
    auto map_mask = [&](uint32_t s) {
        uint32_t t = 0;
        for (int i = 0; i < q.m.n; ++i)
            if (s & (1u << i)) t |= (1u << perm[i]);
        return t;
    };
    for (uint32_t s = 0; s < (1u << q.m.n); ++s) out.m.rank_tbl[s] = q.m.rank_tbl[map_mask(s)];
    for (int i = 0; i < q.m.n; ++i) out.m.names[i] = q.m.names[perm[i]];
    out.ambient = q.ambient;
    out.descriptor = q.descriptor + "-permuted";
    for (uint32_t f : flats(out.m)) out.flat_lattice[f] = q.lattice(map_mask(f));
    return out;
}

QuasiRep minimize_q(const QuasiRep& q) {
    MinimalPresentation mp = minimize(q.ambient);
    QuasiRep out;
    out.m = q.m;
    out.ambient = mp.module;
    out.descriptor = q.descriptor;
    for (const auto& [f, lat] : q.flat_lattice)
        out.flat_lattice[f] = canonical_lattice(mp.to_min * lat, mp.module.relations);
    return out;
}

bool saturation_test(const QuasiRep& q, int e) {
    uint32_t rest = q.m.full_mask() & ~(1u << e);
    return lattice_equal(saturation(q.lattice(rest)), q.lattice(rest));
}

bool splitting_test(const QuasiRep& q, int e) {
    uint32_t rest = q.m.full_mask() & ~(1u << e);
    const IntMatrix& a = q.lattice(rest);
    const IntMatrix& b = q.lattice(1u << e);
    if (!lattice_equal(lattice_sum(a, b), IntMatrix::identity(q.ambient.gens))) return false;
    if (!lattice_equal(lattice_intersection(a, b), q.ambient.relations)) return false;
    // rho(e) itself must be free (of rank one, e not a loop)
    IntMatrix basis = hnf(b).h;
    FgaClass cls = cokernel_class(
        PresentedModule{basis.cols(), express_in(basis, q.ambient.relations, "rho(e)")});
    return cls.torsion.empty() && cls.free_rank == 1;
}

}  // namespace matcoh
