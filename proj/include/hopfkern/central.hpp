#pragma once

// Central character structure: the subalgebras of dual characters central in
// the algebra (and vice versa), the induced partitions of both irreducible
// sets, minimal normal closures N(d), the full Hopf-subalgebra lattice with
// its dual correspondence, property (N), and the theorem harness that checks
// every statement exactly on a given algebra.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfkern/kernels.hpp"

namespace hopfkern {

// C(H): the span of the irreducible characters inside H*, certified equal to
// the space of trace functionals { f : f(ab) = f(ba) }
inline Subspace char_subalgebra(const AlgebraContext& ctx) {
    const HopfAlgebraData& h = ctx.algebra();
    const CycloField* f = h.field();
    size_t n = h.dim();
    std::vector<Vec> rows;
    for (const IrrBlock& b : ctx.irr.blocks) rows.push_back(b.character.values);
    Subspace span = Subspace::from_rows(f, rows, n);
    // trace functionals: f(b_i b_j) = f(b_j b_i) for all pairs
    Matrix sys(f, n, n * n);
    for (size_t k = 0; k < n; ++k) {
        Vec row = vec_zero(f, n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                row[i * n + j] = h.mult()[i].at(j, k) - h.mult()[j].at(i, k);
        // row index k: coefficient of f_k in f(b_i b_j - b_j b_i)
        sys.set_row(k, row);
    }
    Subspace traces = left_kernel(sys);
    if (span != traces)
        throw std::logic_error(h.name() +
                               ": character span differs from the trace-functional space");
    return span;
}

struct CentralData {
    Subspace z_hat_dual; // Z(H*) cap C(H), inside H*
    Subspace z_hat;      // Z(H) cap C(H*), inside H
    std::vector<std::vector<size_t>> partition_y; // classes of Irr(H*)
    std::vector<std::vector<size_t>> partition_x; // classes of Irr(H)
    std::vector<Vec> e_idempotents; // e_j = sum of dual-side idempotents over Y_j (in H*)
    std::vector<Vec> e_hats;        // ê_j = dim(H) phi(e_j) (elements of H)
    std::vector<Vec> f_elements;    // f_i = sum chi(1) chi over X_i (in H*)
};

// partition of blocks by the pattern of their scalar coordinates across a
// basis of central elements; expressing centrals in the idempotent basis is
// exact, no factoring is involved
inline std::vector<std::vector<size_t>> partition_by_central_action(
    const Subspace& central, const IrrData& irr, const CycloField* f) {
    std::vector<Vec> idem_rows;
    for (const IrrBlock& b : irr.blocks) idem_rows.push_back(b.idempotent);
    Matrix idems = Matrix::from_rows(f, idem_rows, central.ambient_dim());
    // coordinates of each central basis vector in the idempotent basis
    auto coords = solve_right(idems, central.basis());
    if (!coords)
        throw std::logic_error("central element is not a combination of the block idempotents");
    // key of block j: the column j of the coordinate matrix
    std::map<std::string, std::vector<size_t>> classes;
    for (size_t j = 0; j < irr.size(); ++j) {
        std::string key;
        for (size_t r = 0; r < coords->rows(); ++r) key += coords->at(r, j).to_string() + ";";
        classes[key].push_back(j);
    }
    std::vector<std::vector<size_t>> out;
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    // deterministic order: by smallest member
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

inline CentralData central_data(const AlgebraContext& ctx) {
    const HopfAlgebraData& h = ctx.algebra();
    const HopfAlgebraData& hd = ctx.dual_algebra();
    const CycloField* f = h.field();
    size_t n = h.dim();
    CentralData cd;

    // characters of H central in H*, and dual characters central in H
    Subspace c_of_h = char_subalgebra(ctx);
    cd.z_hat_dual = Subspace::intersect(center(hd), c_of_h);
    std::vector<Vec> cochar_rows;
    for (const IrrBlock& b : ctx.cochars.blocks) cochar_rows.push_back(b.character.values);
    Subspace c_of_dual = Subspace::from_rows(f, cochar_rows, n);
    cd.z_hat = Subspace::intersect(center(h), c_of_dual);

    if (cd.z_hat.dim() != cd.z_hat_dual.dim())
        throw std::logic_error(h.name() + ": central character spaces differ in dimension");

    // Y partitions Irr(H*) by the action pattern of Z(H*) cap C(H);
    // X partitions Irr(H) by the action pattern of Z(H) cap C(H*)
    cd.partition_y = partition_by_central_action(cd.z_hat_dual, ctx.cochars, f);
    cd.partition_x = partition_by_central_action(cd.z_hat, ctx.irr, f);
    if (cd.partition_x.size() != cd.partition_y.size())
        throw std::logic_error(h.name() + ": partition sizes |I| != |J|");

    // e_j = sum of dual central primitive idempotents over the class
    for (const auto& cls : cd.partition_y) {
        Vec e = vec_zero(f, n);
        for (size_t j : cls) e = vec_add(e, ctx.cochars.blocks[j].idempotent);
        cd.e_idempotents.push_back(std::move(e));
    }
    // orthogonal idempotents of H* summing to eps (the unit of H*)
    {
        Vec sum = vec_zero(f, n);
        for (const Vec& e : cd.e_idempotents) sum = vec_add(sum, e);
        if (sum != hd.unit())
            throw std::logic_error(h.name() + ": class idempotents do not sum to the counit");
        for (size_t a = 0; a < cd.e_idempotents.size(); ++a)
            for (size_t b = 0; b < cd.e_idempotents.size(); ++b) {
                Vec p = hd.multiply(cd.e_idempotents[a], cd.e_idempotents[b]);
                if (a == b ? p != cd.e_idempotents[a] : !vec_is_zero(p))
                    throw std::logic_error(h.name() + ": class idempotents not orthogonal");
            }
        for (const Vec& e : cd.e_idempotents)
            if (!cd.z_hat_dual.contains(e))
                throw std::logic_error(h.name() + ": class idempotent outside the central span");
    }

    // ê_j two ways: dim(H) phi(e_j), and the weighted cocharacter sum over Y_j
    FieldElem dim_scalar = FieldElem::from_int(f, n);
    for (size_t jc = 0; jc < cd.partition_y.size(); ++jc) {
        Vec via_phi = vec_scale(cd.e_idempotents[jc] * ctx.phi, dim_scalar);
        Vec via_sum = vec_zero(f, n);
        for (size_t j : cd.partition_y[jc]) {
            Vec dstar = h.antipode_of(ctx.cochars.chi(j).values);
            via_sum = vec_add(via_sum, vec_scale(dstar, ctx.cochars.chi(j).degree));
        }
        if (via_phi != via_sum)
            throw std::logic_error(h.name() + ": the two class-character formulas disagree");
        cd.e_hats.push_back(via_phi);
    }

    // f_i = sum chi(1) chi over the class; phi(f_i) = sum of idempotents
    for (const auto& cls : cd.partition_x) {
        Vec fi = vec_zero(f, n);
        Vec xi_sum = vec_zero(f, n);
        for (size_t i : cls) {
            fi = vec_add(fi, vec_scale(ctx.irr.chi(i).values,
                                       FieldElem::from_int(f, ctx.irr.blocks[i].degree)));
            xi_sum = vec_add(xi_sum, ctx.irr.blocks[i].idempotent);
        }
        if (fi * ctx.phi != xi_sum)
            throw std::logic_error(h.name() + ": phi(f_i) is not the idempotent sum");
        if (!cd.z_hat_dual.contains(fi))
            throw std::logic_error(h.name() + ": f_i outside the central character span");
        if (!cd.z_hat.contains(xi_sum))
            throw std::logic_error(h.name() + ": phi(f_i) outside the central span");
        cd.f_elements.push_back(std::move(fi));
    }
    return cd;
}

// N(d): the smallest normal Hopf subalgebra whose span contains the simple
// subcoalgebra of d
inline HopfSubalgebraHandle n_of_d(const AlgebraContext& ctx, size_t d_index) {
    HopfSubalgebraHandle k =
        closure(ctx.algebra(), simple_subcoalgebra(ctx, d_index), ClosureMode::normal_hopf);
    if (!k.is_hopf_subalgebra() || !k.is_normal)
        throw std::logic_error(ctx.algebra().name() + ": normal closure failed certification");
    return k;
}

struct LatticeData {
    std::vector<HopfSubalgebraHandle> subalgebras; // every Hopf subalgebra, sorted by dim
    std::vector<bool> normal_flags;
    // subspaces of the dual lattice, in the same canonical order
    std::vector<Subspace> dual_subalgebras;
    // for each normal member, the index of (H//K)* inside dual_subalgebras
    std::vector<std::optional<size_t>> dual_correspondence;
};

// every Hopf subalgebra is a join of atom closures of simple subcoalgebras,
// so the join-closure of the atoms is the whole lattice
inline std::vector<HopfSubalgebraHandle> enumerate_subalgebras(const AlgebraContext& ctx) {
    const HopfAlgebraData& h = ctx.algebra();
    std::vector<HopfSubalgebraHandle> members;
    auto find = [&](const Subspace& s) -> bool {
        for (const auto& m : members)
            if (m.space == s) return true;
        return false;
    };
    std::vector<Subspace> atoms;
    for (size_t j = 0; j < ctx.cochars.size(); ++j) {
        HopfSubalgebraHandle a = closure(h, simple_subcoalgebra(ctx, j), ClosureMode::hopf);
        if (!find(a.space)) members.push_back(a);
        atoms.push_back(members.back().space);
    }
    size_t limit = size_t(1) << std::min<size_t>(ctx.cochars.size(), 20);
    for (;;) {
        if (members.size() > limit)
            throw std::logic_error(h.name() + ": join closure exceeded the lattice bound");
        size_t before = members.size();
        for (size_t a = 0; a < before; ++a)
            for (size_t b = a + 1; b < before; ++b) {
                Subspace sum = members[a].space + members[b].space;
                if (find(sum)) continue;
                HopfSubalgebraHandle join = closure(h, sum, ClosureMode::hopf);
                if (!find(join.space)) members.push_back(join);
            }
        if (members.size() == before) break;
    }
    std::sort(members.begin(), members.end(),
              [](const HopfSubalgebraHandle& a, const HopfSubalgebraHandle& b) {
                  if (a.dim() != b.dim()) return a.dim() < b.dim();
                  return a.space.basis().to_string() < b.space.basis().to_string();
              });
    // the lattice is closed under intersection; verify as a consistency check
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b) {
            Subspace inter = Subspace::intersect(members[a].space, members[b].space);
            if (!find(inter))
                throw std::logic_error(h.name() + ": lattice not intersection-closed");
        }
    return members;
}

// pullback of the dual of the quotient H//K inside H*: the row space of the
// transposed projection
inline Subspace quotient_dual_inside(const QuotientData& q) {
    return row_space(q.projection.transpose());
}

inline LatticeData enumerate_lattice(const AlgebraContext& ctx, const AlgebraContext& dual_ctx) {
    const HopfAlgebraData& h = ctx.algebra();
    LatticeData lat;
    lat.subalgebras = enumerate_subalgebras(ctx);
    for (const auto& k : lat.subalgebras) lat.normal_flags.push_back(k.is_normal);
    std::vector<HopfSubalgebraHandle> dual_members = enumerate_subalgebras(dual_ctx);
    for (const auto& m : dual_members) lat.dual_subalgebras.push_back(m.space);

    size_t normal_count = 0, dual_normal_count = 0;
    for (const auto& k : lat.subalgebras)
        if (k.is_normal) ++normal_count;
    for (const auto& m : dual_members)
        if (m.is_normal) ++dual_normal_count;
    if (normal_count != dual_normal_count)
        throw std::logic_error(h.name() + ": normal member counts differ between H and H*");

    std::vector<bool> hit(dual_members.size(), false);
    for (size_t idx = 0; idx < lat.subalgebras.size(); ++idx) {
        if (!lat.normal_flags[idx]) {
            lat.dual_correspondence.push_back(std::nullopt);
            continue;
        }
        QuotientData q = quotient_by_subalgebra(h, lat.subalgebras[idx]);
        Subspace image = quotient_dual_inside(q);
        std::optional<size_t> where;
        for (size_t t = 0; t < dual_members.size(); ++t)
            if (dual_members[t].space == image) { where = t; break; }
        if (!where)
            throw std::logic_error(h.name() + ": (H//K)* not found in the dual lattice");
        if (!dual_members[*where].is_normal || hit[*where])
            throw std::logic_error(h.name() + ": dual correspondence is not a bijection");
        hit[*where] = true;
        lat.dual_correspondence.push_back(where);
    }
    return lat;
}

struct PropertyN {
    bool holds = true;
    std::vector<size_t> non_normal_witnesses; // indices of characters with non-normal kernel
};

inline PropertyN property_n(const AlgebraContext& ctx) {
    PropertyN p;
    for (size_t i = 0; i < ctx.irr.size(); ++i) {
        HopfSubalgebraHandle k =
            kernel_subalgebra(ctx, ker_set(ctx.irr.chi(i), ctx.cochars));
        if (!k.is_normal) {
            p.holds = false;
            p.non_normal_witnesses.push_back(i);
        }
    }
    return p;
}

struct Finding {
    std::string id;
    bool pass = false;
    bool informational = false; // recorded but not counted toward pass/fail
    std::string detail;
};

struct TheoremHarness {
    std::vector<KernelReport> reports;      // one per chi in Irr(H)
    std::vector<KernelReport> dual_reports; // one per d in Irr(H*), computed in the dual
    CentralData central;
    LatticeData lattice;
    PropertyN prop_n;      // of H
    PropertyN prop_n_dual; // of H*
    std::vector<Finding> findings;

    bool all_pass() const {
        for (const Finding& f : findings)
            if (!f.informational && !f.pass) return false;
        return true;
    }
};

// match blocks of two irreducible data sets by exact character values
inline std::vector<size_t> match_blocks(const IrrData& from, const IrrData& to) {
    std::vector<size_t> map(from.size());
    for (size_t i = 0; i < from.size(); ++i) {
        size_t j = find_cocharacter(to, from.chi(i).values);
        if (j == static_cast<size_t>(-1))
            throw std::logic_error("irreducible data sets do not match");
        map[i] = j;
    }
    return map;
}

// Every exact check on one algebra, reported as findings. dual_ctx must be
// the context of the dual algebra.
inline TheoremHarness run_theorem_harness(const AlgebraContext& ctx,
                                          const AlgebraContext& dual_ctx) {
    const HopfAlgebraData& h = ctx.algebra();
    const CycloField* f = h.field();
    size_t n = h.dim();
    TheoremHarness th;
    th.central = central_data(ctx);
    th.lattice = enumerate_lattice(ctx, dual_ctx);
    for (size_t i = 0; i < ctx.irr.size(); ++i)
        th.reports.push_back(verify_kernel_theorems(ctx, i));
    for (size_t j = 0; j < dual_ctx.irr.size(); ++j)
        th.dual_reports.push_back(verify_kernel_theorems(dual_ctx, j));
    th.prop_n.holds = true;
    for (size_t i = 0; i < th.reports.size(); ++i)
        if (!th.reports[i].normal) {
            th.prop_n.holds = false;
            th.prop_n.non_normal_witnesses.push_back(i);
        }
    th.prop_n_dual.holds = true;
    for (size_t j = 0; j < th.dual_reports.size(); ++j)
        if (!th.dual_reports[j].normal) {
            th.prop_n_dual.holds = false;
            th.prop_n_dual.non_normal_witnesses.push_back(j);
        }

    auto add = [&](std::string id, bool pass, std::string detail = "",
                   bool informational = false) {
        th.findings.push_back({std::move(id), pass, informational, std::move(detail)});
    };

    // representation kernels coincide with categorical Hopf kernels, the
    // trivial-action oracle, and the quotient-module route, per character
    {
        bool ok = true;
        std::string detail;
        auto scan = [&](const std::vector<KernelReport>& reps, const char* side) {
            for (const KernelReport& r : reps) {
                if (!(r.hopf_kernel_matches && r.sm_oracle_matches &&
                      r.quotient_module_matches && r.ker_closed)) {
                    ok = false;
                    detail += std::string(side) + " character " +
                              std::to_string(r.char_index) + " failed; ";
                }
            }
        };
        scan(th.reports, "primal");
        scan(th.dual_reports, "dual");
        add("kernel_equalities", ok, detail);
    }

    // indices of Irr(H) inside dual_ctx.cochars and Irr(H*) inside dual_ctx.irr
    std::vector<size_t> to_dual_irr = match_blocks(ctx.cochars, dual_ctx.irr);
    std::vector<size_t> from_dual_cochar = match_blocks(dual_ctx.cochars, ctx.irr);

    // membership duality: d in ker(chi) iff chi in ker(d)
    {
        bool ok = true;
        for (size_t i = 0; i < ctx.irr.size() && ok; ++i) {
            std::vector<bool> in_ker(ctx.cochars.size(), false);
            for (size_t j : th.reports[i].ker) in_ker[j] = true;
            for (size_t j = 0; j < ctx.cochars.size(); ++j) {
                const KernelReport& dr = th.dual_reports[to_dual_irr[j]];
                bool chi_in_ker_d = false;
                for (size_t t : dr.ker)
                    if (from_dual_cochar[t] == i) chi_in_ker_d = true;
                if (in_ker[j] != chi_in_ker_d) { ok = false; break; }
            }
        }
        add("kernel_membership_duality", ok);
    }

    // equivalent characters generate the same minimal normal Hopf subalgebra
    {
        bool ok = true;
        bool plain_ok = true;
        std::string detail;
        for (const auto& cls : th.central.partition_y) {
            HopfSubalgebraHandle first = n_of_d(ctx, cls.front());
            HopfSubalgebraHandle first_plain =
                closure(h, simple_subcoalgebra(ctx, cls.front()), ClosureMode::hopf);
            for (size_t t = 1; t < cls.size(); ++t) {
                if (n_of_d(ctx, cls[t]).space != first.space) {
                    ok = false;
                    detail += "class with cocharacter " + std::to_string(cls.front()) +
                              " has differing normal closures; ";
                }
                if (closure(h, simple_subcoalgebra(ctx, cls[t]), ClosureMode::hopf).space !=
                    first_plain.space)
                    plain_ok = false;
            }
        }
        add("class_normal_closures_agree", ok, detail);
        add("class_plain_closures_agree", plain_ok,
            plain_ok ? "plain (non-normal) closures also agree on every class"
                     : "plain (non-normal) closures differ on some class",
            /*informational=*/true);
    }

    // recorded, not asserted: the integral of each minimal normal closure is
    // central in H (this is what the class-closure argument actually uses)
    {
        Subspace z = center(h);
        size_t central_count = 0, total = 0;
        for (size_t j = 0; j < ctx.cochars.size(); ++j) {
            Vec lam = subalgebra_integral(h, n_of_d(ctx, j).space);
            ++total;
            if (z.contains(lam)) ++central_count;
        }
        add("normal_closure_integrals_central", central_count == total,
            std::to_string(central_count) + " of " + std::to_string(total) +
                " closure integrals are central",
            /*informational=*/true);
    }

    // every normal Hopf subalgebra is the kernel of its induced character,
    // and that character is central in the dual
    {
        bool ok = true;
        bool agree = true;
        std::string detail;
        for (size_t idx = 0; idx < th.lattice.subalgebras.size(); ++idx) {
            if (!th.lattice.normal_flags[idx]) continue;
            const HopfSubalgebraHandle& k = th.lattice.subalgebras[idx];
            Character ind = induced_trivial_character(h, k.space);
            HopfSubalgebraHandle ker_k = kernel_subalgebra(ctx, ker_set(ind, ctx.cochars));
            if (ker_k.space != k.space) {
                ok = false;
                detail += "kernel of the induced character differs (dim " +
                          std::to_string(k.dim()) + "); ";
            }
            if (!th.central.z_hat_dual.contains(ind.values)) {
                ok = false;
                detail += "induced character not central in the dual (dim " +
                          std::to_string(k.dim()) + "); ";
            }
            // the induced character equals dim(L) times the pullback of the
            // integral of L*
            QuotientData q = quotient_by_subalgebra(h, k);
            Vec t_l = integral(dual(*q.quotient)); // functional on the quotient
            Vec pullback = vec_zero(f, n);
            for (size_t i = 0; i < n; ++i)
                pullback[i] = vec_dot(q.projection.row(i), t_l);
            if (vec_scale(pullback, FieldElem::from_int(f, q.quotient->dim())) != ind.values)
                agree = false;
        }
        add("normal_subalgebras_are_induced_kernels", ok, detail);
        add("induced_character_is_quotient_regular_character", agree);
    }

    // kernels of the class characters are normal Hopf subalgebras of the dual
    {
        bool ok = true;
        for (const Vec& ehat : th.central.e_hats) {
            Character c = Character::from_values(dual_ctx.algebra(), ehat);
            HopfSubalgebraHandle k =
                kernel_subalgebra(dual_ctx, ker_set(c, dual_ctx.cochars));
            if (!k.is_normal) ok = false;
        }
        add("class_character_kernels_normal", ok);
    }

    // the dual has all kernels normal iff kernels are constant on classes
    {
        bool constant = true;
        for (const auto& cls : th.central.partition_y) {
            const std::vector<size_t>& first = th.dual_reports[to_dual_irr[cls.front()]].ker;
            for (size_t t = 1; t < cls.size(); ++t)
                if (th.dual_reports[to_dual_irr[cls[t]]].ker != first) constant = false;
        }
        add("dual_property_n_iff_kernels_constant_on_classes",
            constant == th.prop_n_dual.holds,
            std::string("kernels constant on classes: ") + (constant ? "yes" : "no") +
                ", dual property (N): " + (th.prop_n_dual.holds ? "yes" : "no"));
    }

    // property (N) is self-dual
    add("property_n_selfdual", th.prop_n.holds == th.prop_n_dual.holds,
        std::string("H: ") + (th.prop_n.holds ? "yes" : "no") + ", H*: " +
            (th.prop_n_dual.holds ? "yes" : "no"));

    // with property (N), the kernel of d in the dual is Irr(H // N(d))
    if (th.prop_n.holds) {
        bool ok = true;
        for (size_t j = 0; j < ctx.cochars.size(); ++j) {
            HopfSubalgebraHandle nd = n_of_d(ctx, j);
            // Irr(H // N(d)) as { chi : H_chi contains N(d) }
            std::vector<size_t> quotient_irr;
            for (size_t i = 0; i < ctx.irr.size(); ++i)
                if (th.reports[i].kernel_space.contains(nd.space)) quotient_irr.push_back(i);
            std::vector<size_t> ker_dual;
            for (size_t t : th.dual_reports[to_dual_irr[j]].ker)
                ker_dual.push_back(from_dual_cochar[t]);
            std::sort(ker_dual.begin(), ker_dual.end());
            if (ker_dual != quotient_irr) { ok = false; continue; }
            // subspace form: the kernel subalgebra of d in H* is the pullback
            // of the dual of H // N(d)
            QuotientData q = quotient_by_subalgebra(h, nd);
            if (th.dual_reports[to_dual_irr[j]].kernel_space != quotient_dual_inside(q))
                ok = false;
        }
        add("dual_kernels_match_quotient_characters", ok);
    } else {
        add("dual_kernels_match_quotient_characters", true,
            "not applicable: the algebra does not have property (N)", true);
    }

    // round trip through the dual: ((H*)//((H//K)*))* = K
    {
        bool ok = true;
        for (size_t idx = 0; idx < th.lattice.subalgebras.size(); ++idx) {
            if (!th.lattice.normal_flags[idx]) continue;
            const HopfSubalgebraHandle& k = th.lattice.subalgebras[idx];
            QuotientData q = quotient_by_subalgebra(h, k);
            // pullback of the quotient dual inside H*, certified normal
            Subspace image = quotient_dual_inside(q);
            if (auto v = morphism_violation(dual(*q.quotient), dual_ctx.algebra(),
                                            q.projection.transpose())) {
                ok = false;
                continue;
            }
            HopfSubalgebraHandle lstar = certify_subalgebra(dual_ctx.algebra(), image);
            if (!lstar.is_normal) { ok = false; continue; }
            QuotientData q2 = quotient_by_subalgebra(dual_ctx.algebra(), lstar);
            Subspace back = row_space(q2.projection.transpose());
            if (back != k.space || q2.quotient->dim() != k.dim()) ok = false;
        }
        add("dual_correspondence_roundtrip", ok);
    }

    return th;
}

} // namespace hopfkern
