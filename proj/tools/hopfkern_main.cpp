// Command-line driver: verification, character tables, kernel reports,
// subalgebra lattices, central structure, property (N), and the full theorem
// harness, over structure-constant files or the built-in corpus.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopfkern/io.hpp"

using namespace hopfkern;

namespace {

constexpr size_t kHardDimCap = 16;

constexpr int kExitPass = 0;
constexpr int kExitFinding = 1;
constexpr int kExitInvalid = 2;

struct Options {
    std::string file;
    std::string builtin;
    bool json = false;
    size_t max_dim = kHardDimCap;
};

HopfAlgebraData load_algebra(const Options& opt) {
    if (opt.file.empty() == opt.builtin.empty())
        throw InvalidInputError("supply exactly one of <file> or --builtin NAME");
    HopfAlgebraData h =
        opt.file.empty() ? make_builtin(opt.builtin) : load_algebra_file(opt.file);
    size_t cap = std::min(opt.max_dim, kHardDimCap);
    if (h.dim() > cap)
        throw InvalidInputError(h.name() + ": dimension " + std::to_string(h.dim()) +
                                " exceeds the cap of " + std::to_string(cap));
    return h;
}

void emit(const json& doc, bool json_mode, const std::string& text) {
    if (json_mode)
        std::cout << doc.dump(1) << "\n";
    else
        std::cout << text;
}

std::string render_axioms(const AxiomReport& rep) {
    std::string out;
    for (const AxiomCheck& c : rep.checks) {
        out += (c.pass ? "pass  " : "FAIL  ") + c.axiom;
        if (!c.pass && !c.witness.empty()) out += "  [" + c.witness + "]";
        out += "\n";
    }
    return out;
}

int cmd_verify(const Options& opt) {
    HopfAlgebraData h = load_algebra(opt);
    AxiomReport rep = verify_hopf(h);
    json doc;
    doc["name"] = h.name();
    doc["axioms"] = axiom_report_to_json(rep);
    std::string text = h.name() + " (dim " + std::to_string(h.dim()) + ", cyclotomic order " +
                       std::to_string(h.field()->order()) + ")\n" + render_axioms(rep);
    bool integral_ok = false;
    std::string integral_msg;
    if (rep.all_pass()) {
        try {
            Vec lam = integral(h);
            integral_ok = true;
            integral_msg = "integral exists, normalized and idempotent";
        } catch (const HopfError& e) {
            integral_msg = e.what();
        }
        doc["integral"] = integral_ok;
        text += (integral_ok ? "pass  " : "FAIL  ") + std::string("integral  [") +
                integral_msg + "]\n";
    }
    emit(doc, opt.json, text);
    if (!rep.all_pass() || !integral_ok) {
        std::cerr << h.name() << ": not a verified semisimple Hopf algebra\n";
        return kExitInvalid;
    }
    return kExitPass;
}

std::string render_char_table(const HopfAlgebraData& h, const IrrData& irr,
                              const std::string& title) {
    // aligned text table: rows = characters, columns = basis elements
    std::vector<std::vector<std::string>> cells;
    for (size_t i = 0; i < irr.size(); ++i) {
        std::vector<std::string> row;
        row.push_back("chi_" + std::to_string(i) + " [deg " +
                      std::to_string(irr.blocks[i].degree) + "]");
        for (const FieldElem& v : irr.chi(i).values) row.push_back(v.to_string());
        cells.push_back(std::move(row));
    }
    std::vector<size_t> width(h.dim() + 1, 0);
    for (const auto& row : cells)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out = title + "\n";
    for (const auto& row : cells) {
        for (size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += "\n";
    }
    return out;
}

int cmd_irr(const Options& opt) {
    AlgebraContext ctx = AlgebraContext::make(load_algebra(opt));
    json doc;
    doc["name"] = ctx.algebra().name();
    doc["irr"] = character_table_to_json(ctx.irr);
    doc["irr_dual"] = character_table_to_json(ctx.cochars);
    std::string text =
        render_char_table(ctx.algebra(), ctx.irr, ctx.algebra().name() + ": Irr(H)") + "\n" +
        render_char_table(ctx.dual_algebra(), ctx.cochars,
                          ctx.algebra().name() + ": Irr(H*), as elements of H");
    emit(doc, opt.json, text);
    return kExitPass;
}

std::string render_kernels(const std::vector<KernelReport>& reports) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-6s %-8s %-10s %-8s %-12s %-10s %-8s\n", "chi",
                  "ker_set", "dim(Hchi)", "dim(SM)", "hker_equal", "sm_equal", "normal");
    out += buf;
    for (const KernelReport& r : reports) {
        std::string ks = "{";
        for (size_t t = 0; t < r.ker.size(); ++t)
            ks += (t ? "," : "") + std::to_string(r.ker[t]);
        ks += "}";
        std::snprintf(buf, sizeof buf, "%-6zu %-8s %-10zu %-8zu %-12s %-10s %-8s\n",
                      r.char_index, ks.c_str(), r.kernel_space.dim(), r.sm.dim(),
                      r.hopf_kernel_matches && r.quotient_module_matches ? "yes" : "NO",
                      r.sm_oracle_matches ? "yes" : "NO", r.normal ? "yes" : "no");
        out += buf;
    }
    return out;
}

int cmd_kernels(const Options& opt) {
    AlgebraContext ctx = AlgebraContext::make(load_algebra(opt));
    std::vector<KernelReport> reports;
    bool ok = true;
    for (size_t i = 0; i < ctx.irr.size(); ++i) {
        reports.push_back(verify_kernel_theorems(ctx, i));
        const KernelReport& r = reports.back();
        ok = ok && r.hopf_kernel_matches && r.sm_oracle_matches && r.quotient_module_matches &&
             r.ker_closed;
    }
    json doc;
    doc["name"] = ctx.algebra().name();
    json arr = json::array();
    for (const KernelReport& r : reports) arr.push_back(kernel_report_to_json(r));
    doc["kernels"] = std::move(arr);
    emit(doc, opt.json, ctx.algebra().name() + ": kernels of irreducible characters\n" +
                            render_kernels(reports));
    return ok ? kExitPass : kExitFinding;
}

int cmd_lattice(const Options& opt) {
    AlgebraContext ctx = AlgebraContext::make(load_algebra(opt));
    AlgebraContext dctx = AlgebraContext::make(dual(ctx.algebra()));
    LatticeData lat = enumerate_lattice(ctx, dctx);
    json doc;
    doc["name"] = ctx.algebra().name();
    doc["lattice"] = lattice_to_json(lat);
    if (opt.json) {
        // export each quotient by a normal member, with projection and section
        for (size_t i = 0; i < lat.subalgebras.size(); ++i) {
            if (!lat.normal_flags[i]) continue;
            QuotientData q = quotient_by_subalgebra(ctx.algebra(), lat.subalgebras[i]);
            doc["lattice"][i]["quotient"] = quotient_to_json(q);
        }
    }
    std::string text = ctx.algebra().name() + ": Hopf subalgebra lattice (" +
                       std::to_string(lat.subalgebras.size()) + " members)\n";
    for (size_t i = 0; i < lat.subalgebras.size(); ++i) {
        text += "  dim " + std::to_string(lat.subalgebras[i].dim());
        text += lat.normal_flags[i] ? "  normal" : "";
        if (lat.dual_correspondence[i])
            text += "  <-> dual member of dim " +
                    std::to_string(lat.dual_subalgebras[*lat.dual_correspondence[i]].dim());
        text += "\n";
    }
    emit(doc, opt.json, text);
    return kExitPass;
}

int cmd_central(const Options& opt) {
    AlgebraContext ctx = AlgebraContext::make(load_algebra(opt));
    CentralData cd = central_data(ctx);
    json doc;
    doc["name"] = ctx.algebra().name();
    doc["central"] = central_to_json(cd);
    std::string text = ctx.algebra().name() + ": central character structure\n";
    auto render_partition = [&](const char* label,
                                const std::vector<std::vector<size_t>>& parts) {
        std::string s = std::string("  ") + label + ": ";
        for (const auto& cls : parts) {
            s += "{";
            for (size_t t = 0; t < cls.size(); ++t) s += (t ? "," : "") + std::to_string(cls[t]);
            s += "} ";
        }
        return s + "\n";
    };
    text += render_partition("classes of Irr(H*)", cd.partition_y);
    text += render_partition("classes of Irr(H)", cd.partition_x);
    text += "  central character space dim " + std::to_string(cd.z_hat_dual.dim()) + "\n";
    emit(doc, opt.json, text);
    return kExitPass;
}

int cmd_property_n(const Options& opt) {
    AlgebraContext ctx = AlgebraContext::make(load_algebra(opt));
    AlgebraContext dctx = AlgebraContext::make(dual(ctx.algebra()));
    PropertyN p = property_n(ctx), pd = property_n(dctx);
    bool selfdual_ok = p.holds == pd.holds;
    json doc;
    doc["name"] = ctx.algebra().name();
    doc["property_n"] = p.holds;
    doc["property_n_dual"] = pd.holds;
    doc["selfdual_biconditional"] = selfdual_ok;
    doc["non_normal_witnesses"] = p.non_normal_witnesses;
    doc["non_normal_witnesses_dual"] = pd.non_normal_witnesses;
    std::string text = ctx.algebra().name() + ": property (N)\n";
    text += std::string("  H : ") + (p.holds ? "holds" : "fails") + "\n";
    text += std::string("  H*: ") + (pd.holds ? "holds" : "fails") + "\n";
    text += std::string("  biconditional: ") + (selfdual_ok ? "pass" : "FAIL") + "\n";
    emit(doc, opt.json, text);
    return selfdual_ok ? kExitPass : kExitFinding;
}

std::string render_findings(const TheoremHarness& th) {
    std::string out;
    for (const Finding& f : th.findings) {
        out += std::string("  ") + (f.pass ? "pass  " : "FAIL  ") + f.id;
        if (f.informational) out += "  (informational)";
        if (!f.detail.empty()) out += "  [" + f.detail + "]";
        out += "\n";
    }
    return out;
}

int cmd_theorems(const Options& opt) {
    AlgebraContext ctx = AlgebraContext::make(load_algebra(opt));
    AlgebraContext dctx = AlgebraContext::make(dual(ctx.algebra()));
    TheoremHarness th = run_theorem_harness(ctx, dctx);
    json doc;
    doc["name"] = ctx.algebra().name();
    doc["findings"] = findings_to_json(th);
    emit(doc, opt.json, ctx.algebra().name() + ": theorem findings\n" + render_findings(th));
    return th.all_pass() ? kExitPass : kExitFinding;
}

int cmd_corpus(const Options& opt) {
    json doc = json::array();
    bool all_ok = true;
    std::string text;
    for (const std::string& name : builtin_names()) {
        AlgebraContext ctx = AlgebraContext::make(make_builtin(name));
        AlgebraContext dctx = AlgebraContext::make(dual(ctx.algebra()));
        TheoremHarness th = run_theorem_harness(ctx, dctx);
        all_ok = all_ok && th.all_pass();
        json entry;
        entry["name"] = name;
        entry["dim"] = ctx.algebra().dim();
        entry["irr_degrees"] = json::array();
        for (const IrrBlock& b : ctx.irr.blocks) entry["irr_degrees"].push_back(b.degree);
        entry["property_n"] = th.prop_n.holds;
        entry["findings"] = findings_to_json(th);
        json kernels = json::array();
        for (const KernelReport& r : th.reports) kernels.push_back(kernel_report_to_json(r));
        entry["kernels"] = std::move(kernels);
        entry["lattice"] = lattice_to_json(th.lattice);
        entry["all_pass"] = th.all_pass();
        doc.push_back(std::move(entry));
        text += name + " (dim " + std::to_string(ctx.algebra().dim()) + "): " +
                (th.all_pass() ? "all findings pass" : "FINDINGS FAILED") + "\n";
        if (!opt.json) {
            std::cout << text;
            text.clear();
        }
    }
    if (opt.json)
        std::cout << doc.dump(1) << "\n";
    else
        std::cout << (all_ok ? "corpus: all algebras pass\n" : "corpus: FAILURES present\n");
    return all_ok ? kExitPass : kExitFinding;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of kernels and central structure of semisimple Hopf algebras"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool takes_input) {
        if (takes_input) {
            sub->add_option("file", opt.file, "algebra file (JSON structure constants)");
            sub->add_option("--builtin", opt.builtin, "use a built-in algebra instead of a file");
            sub->add_option("--max-dim", opt.max_dim,
                            "refuse inputs of dimension above this (hard cap 16)");
        }
        sub->add_flag("--json", opt.json, "machine-readable output");
    };

    std::map<std::string, int (*)(const Options&)> handlers;
    for (auto [name, desc, fn, takes_input] :
         std::initializer_list<std::tuple<const char*, const char*, int (*)(const Options&), bool>>{
             {"verify", "check all Hopf algebra axioms and the integral", cmd_verify, true},
             {"irr", "irreducible character tables of H and H*", cmd_irr, true},
             {"kernels", "kernel reports per irreducible character", cmd_kernels, true},
             {"lattice", "Hopf subalgebra lattice with normality and dual partners",
              cmd_lattice, true},
             {"central", "central character partitions and class characters", cmd_central, true},
             {"property-n", "normality of all kernels, on both sides", cmd_property_n, true},
             {"theorems", "run every exact finding on one algebra", cmd_theorems, true},
             {"corpus", "run everything on all built-in algebras", cmd_corpus, false}}) {
        add_common(app.add_subcommand(name, desc), takes_input);
        handlers[name] = fn;
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (auto* sub : app.get_subcommands()) return handlers[sub->get_name()](opt);
    } catch (const InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NotSemisimpleError& e) {
        std::cerr << "not semisimple: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const FieldTooSmallError& e) {
        std::cerr << "base field too small: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NumericLocationError& e) {
        std::cerr << "numeric location failed: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
