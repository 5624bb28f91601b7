#include "matcoh/presented.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "matcoh/combinatorics.hpp"
#include "matcoh/lattice.hpp"
#include "matcoh/snf.hpp"

namespace matcoh {

std::string FgaClass::str() const { return fga_to_string(*this); }

std::string fga_to_string(const FgaClass& c) {
    std::ostringstream os;
    bool first = true;
    if (c.free_rank == 1) {
        os << "Z";
        first = false;
    } else if (c.free_rank > 1) {
        os << "Z^" << c.free_rank;
        first = false;
    }
    for (const auto& d : c.torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool is_well_defined(const ModuleMap& f) {
    if (f.lift.rows() != f.target.gens || f.lift.cols() != f.source.gens) return false;
    IntMatrix moved = f.lift * f.source.relations;
    return solve_integral_cols(f.target.relations, moved).has_value();
}

FgaClass cokernel_class(const PresentedModule& p) {
    std::vector<Int> diag = snf_diagonal(p.relations);
    FgaClass c;
    int nonzero = 0;
    for (const auto& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) c.torsion.push_back(d);
    }
    c.free_rank = p.gens - nonzero;
    return c;
}

PresentedModule exterior_power(const PresentedModule& p, int j) {
    if (j < 0) throw CheckError("exterior_power: negative degree");
    int n = p.gens;
    if (j == 0) return PresentedModule::free_module(1);
    if (j > n) return PresentedModule::zero();

    auto gens = subsets_lex(n, j);
    std::map<std::vector<int>, int> pos;
    for (int t = 0; t < int(gens.size()); ++t) pos[gens[t]] = t;

    auto subs = subsets_lex(n, j - 1);
    std::vector<std::vector<Int>> rel_cols;
    for (int rc = 0; rc < p.relations.cols(); ++rc) {
        std::vector<Int> r = p.relations.col(rc);
        for (const auto& jp : subs) {
            std::vector<Int> col(gens.size());
            bool nonzero = false;
            for (int k = 0; k < n; ++k) {
                if (r[k] == 0) continue;
                if (std::binary_search(jp.begin(), jp.end(), k)) continue;
                std::vector<int> full = jp;
                full.insert(std::upper_bound(full.begin(), full.end(), k), k);
                int below = int(std::lower_bound(jp.begin(), jp.end(), k) - jp.begin());
                Int term = (below & 1) ? Int(-r[k]) : r[k];
                col[pos[full]] += term;
                nonzero = true;
            }
            if (nonzero) rel_cols.push_back(std::move(col));
        }
    }
    IntMatrix rel(int(gens.size()), int(rel_cols.size()));
    for (int c = 0; c < int(rel_cols.size()); ++c) rel.set_col(c, rel_cols[c]);
    return PresentedModule{int(gens.size()), std::move(rel)};
}

ModuleMap exterior_map(const ModuleMap& f, int j) {
    if (!is_well_defined(f)) throw CheckError("exterior_map: input map is not well-defined");
    PresentedModule src = exterior_power(f.source, j);
    PresentedModule tgt = exterior_power(f.target, j);
    if (j == 0) return ModuleMap{src, tgt, IntMatrix::identity(1)};

    auto src_subs = subsets_lex(f.source.gens, j);
    auto tgt_subs = subsets_lex(f.target.gens, j);
    IntMatrix lift(int(tgt_subs.size()), int(src_subs.size()));
    for (int c = 0; c < int(src_subs.size()); ++c)
        for (int r = 0; r < int(tgt_subs.size()); ++r)
            lift(r, c) = det(f.lift.submatrix(tgt_subs[r], src_subs[c]));
    return ModuleMap{std::move(src), std::move(tgt), std::move(lift)};
}

FgaClass cohomology_at(const ModuleMap& f_in, const ModuleMap& f_out) {
    if (!(f_in.target == f_out.source))
        throw CheckError("cohomology_at: maps are not composable");
    const PresentedModule& mid = f_out.source;

    // composite must vanish at module level
    IntMatrix moved = f_out.lift * f_in.lift;
    for (int c = 0; c < moved.cols(); ++c) {
        if (!lattice_contains(f_out.target.relations, moved.col(c)))
            throw CheckError("cohomology_at: composite nonzero on incoming generator " +
                             std::to_string(c));
    }

    IntMatrix k = preimage_lattice(f_out.lift, f_out.target.relations);
    IntMatrix numerator_rels = hcat(f_in.lift, mid.relations);
    auto expressed = solve_integral_cols(k, numerator_rels);
    if (!expressed)
        throw CheckError("cohomology_at: image or relation escapes the kernel lattice");
    return cokernel_class(PresentedModule{k.cols(), std::move(*expressed)});
}

MinimalPresentation minimize(const PresentedModule& p) {
    SmithDecomposition s = snf(p.relations);
    std::vector<Int> diag = s.diagonal();
    // coker(relations) ~ Z^gens / colLat(u * relations * v) via y = u * x;
    // rows with unit diagonal die, torsion rows keep d >= 2, the rest are free.
    std::vector<int> free_rows, torsion_rows;
    for (int i = 0; i < p.gens; ++i) {
        Int d = i < int(diag.size()) ? diag[i] : Int(0);
        if (d == 1) continue;
        if (d == 0)
            free_rows.push_back(i);
        else
            torsion_rows.push_back(i);
    }
    std::vector<int> kept = free_rows;
    kept.insert(kept.end(), torsion_rows.begin(), torsion_rows.end());

    int m = int(kept.size());
    PresentedModule mod;
    mod.gens = m;
    mod.relations = IntMatrix(m, int(torsion_rows.size()));
    for (int t = 0; t < int(torsion_rows.size()); ++t)
        mod.relations(int(free_rows.size()) + t, t) = diag[torsion_rows[t]];

    IntMatrix to_min(m, p.gens);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < p.gens; ++c) to_min(r, c) = s.u(kept[r], c);

    // u^{-1} columns for the kept rows; u is unimodular so the inverse is integral
    IntMatrix uinv = *solve_integral_cols(s.u, IntMatrix::identity(p.gens));
    IntMatrix from_min(p.gens, m);
    for (int r = 0; r < p.gens; ++r)
        for (int c = 0; c < m; ++c) from_min(r, c) = uinv(r, kept[c]);

    return MinimalPresentation{std::move(mod), std::move(to_min), std::move(from_min)};
}

}  // namespace matcoh
