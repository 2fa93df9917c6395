#pragma once

// Command-line front end. `run` is kept separate from main so tests can
// drive it in-process.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrep/axioms.hpp"
#include "qrep/decompose.hpp"
#include "qrep/format.hpp"

namespace qrep::cli {

enum exit_code : int { ok = 0, failed = 1, usage = 2 };

/// Raised for bad command arguments (unknown names, unreadable files).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string dims_text(const std::vector<std::size_t>& dims) {
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? ", " : "") + std::to_string(dims[i]);
    return s + ")";
}

template <class F>
std::string dims_text(const Rep<F>& r) {
    return dims_text(r.dims());
}

template <class F>
std::string dims_text(const NRep<F>& x) {
    std::string s = "[";
    for (std::size_t m = 0; m < x.levels(); ++m) s += (m ? ", " : "") + dims_text(x.component(m).dims());
    return s + "]";
}

template <class F>
void print_maps(std::ostream& out, const RepMorphism<F>& f, const std::string& indent) {
    const Quiver& q = f.source().quiver();
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        out << indent << "at " << q.vertices()[v] << " = " << f.at(v) << ";\n";
}

template <class F>
void print_maps(std::ostream& out, const NRepMorphism<F>& f, const std::string& indent) {
    for (std::size_t m = 0; m < f.comps().size(); ++m) {
        const Quiver& q = f.source().quiver(m);
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            out << indent << "at (" << m + 1 << ", " << q.vertices()[v] << ") = " << f.component(m).at(v) << ";\n";
    }
}

/// Calls `fn` with the named rep or nrep.
template <class F, class Fn>
auto with_object(const Document<F>& doc, const std::string& name, Fn fn) {
    if (auto* r = doc.find_rep(name)) return fn(r->rep);
    if (auto* n = doc.find_nrep(name)) return fn(n->nrep);
    throw usage_error("no object '" + name + "'");
}

template <class F>
const typename Document<F>::MorphismEntry& morphism_entry(const Document<F>& doc, const std::string& name) {
    auto* m = doc.find_morphism(name);
    if (!m) throw usage_error("no morphism '" + name + "'");
    return *m;
}

template <class F>
void add_object(Document<F>& doc, const std::string& name, const Rep<F>& r) {
    doc.add_rep(name, r);
}

template <class F>
void add_object(Document<F>& doc, const std::string& name, const NRep<F>& x) {
    doc.add_nrep(name, x);
}

template <class F>
int cmd_validate(const Document<F>& doc, std::ostream& out) {
    int code = ok;
    out << "field " << doc.field.spec().to_string() << "\n";
    for (const auto& q : doc.quivers) {
        auto rep = validate(q.quiver);
        out << "quiver " << q.name << ": " << q.quiver.vertex_count() << " vertices, " << q.quiver.arrow_count()
            << " arrows; finite " << (rep.finite ? "yes" : "no") << ", connected " << (rep.connected ? "yes" : "no")
            << ", acyclic " << (rep.acyclic ? "yes" : "no");
        if (rep.acyclic) {
            out << "; order";
            for (const auto& v : topo_order(q.quiver)) out << ' ' << v;
        }
        out << "\n";
        if (!rep.standard()) code = failed;
    }
    for (const auto& r : doc.reps) out << "rep " << r.name << " on " << r.quiver << ": dims " << dims_text(r.rep) << "\n";
    for (const auto& n : doc.nreps) {
        out << "nrep " << n.name << ": " << n.nrep.levels() << " components, dims " << dims_text(n.nrep) << "\n";
        if (n.nrep.levels() < 2) out << "  note: a single component is just a representation\n";
    }
    for (const auto& m : doc.morphisms) out << "morphism " << m.name << " : " << m.source << " -> " << m.target << ": ok\n";
    out << (code == ok ? "valid\n" : "invalid: every quiver must be connected and acyclic\n");
    return code;
}

template <class F>
int cmd_hom(const Document<F>& doc, const std::string& from, const std::string& to, std::ostream& out) {
    return with_object(doc, from, [&](const auto& a) {
        return with_object(doc, to, [&](const auto& b) -> int {
            if constexpr (!std::is_same_v<std::decay_t<decltype(a)>, std::decay_t<decltype(b)>>) {
                throw error(errc::quiver_mismatch, "'" + from + "' and '" + to + "' are not the same kind of object");
            } else {
                auto basis = hom_basis(a, b);
                out << "dim = " << basis.size() << "\n";
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    out << "basis " << i + 1 << ":\n";
                    print_maps(out, basis[i], "  ");
                }
                return ok;
            }
        });
    });
}

template <class F>
int cmd_kernel_like(Document<F> doc, const std::string& name, bool is_kernel, std::ostream& out) {
    const auto entry = morphism_entry(doc, name);
    std::visit(
        [&](const auto& f) {
            if (is_kernel) {
                auto k = kernel(f);
                std::string obj = doc.fresh_object_name("ker_" + name);
                add_object(doc, obj, k.object);
                doc.add_morphism(doc.fresh_morphism_name(obj + "_incl"), obj, entry.source, k.inclusion);
            } else {
                auto c = cokernel(f);
                std::string obj = doc.fresh_object_name("coker_" + name);
                add_object(doc, obj, c.object);
                doc.add_morphism(doc.fresh_morphism_name(obj + "_proj"), entry.target, obj, c.projection);
            }
        },
        entry.morphism);
    out << emit(doc);
    return ok;
}

template <class F>
int cmd_canon(const Document<F>& doc, const std::string& name, std::ostream& out) {
    const auto& entry = morphism_entry(doc, name);
    return std::visit(
        [&](const auto& f) {
            auto d = canonical_decomposition(f);
            auto yes = [](bool b) { return b ? "true" : "false"; };
            out << "K dims: " << dims_text(d.K) << "\n";
            out << "I dims: " << dims_text(d.I) << "\n";
            out << "C dims: " << dims_text(d.C) << "\n";
            out << "ji_eq_f: " << yes(d.ji_eq_f) << "\n";
            out << "kernel_cokernel: " << yes(d.kernel_cokernel) << "\n";
            out << "image_coker_ker: " << yes(d.image_coker_ker) << "\n";
            out << "image_rank: " << yes(d.image_rank) << "\n";
            out << "verified: " << yes(d.verified()) << "\n";
            return d.verified() ? ok : failed;
        },
        entry.morphism);
}

template <class F>
int cmd_dirsum(Document<F> doc, const std::string& a, const std::string& b, const std::string& name,
               std::ostream& out) {
    if (doc.has_object(name)) throw usage_error("object '" + name + "' already exists");
    with_object(doc, a, [&](const auto& x) {
        return with_object(doc, b, [&](const auto& y) -> int {
            if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, std::decay_t<decltype(y)>>) {
                throw error(errc::quiver_mismatch, "'" + a + "' and '" + b + "' are not the same kind of object");
            } else {
                auto ds = direct_sum(x, y);
                add_object(doc, name, ds.sum);
                doc.add_morphism(doc.fresh_morphism_name(name + "_i1"), a, name, ds.injections[0]);
                doc.add_morphism(doc.fresh_morphism_name(name + "_i2"), b, name, ds.injections[1]);
                doc.add_morphism(doc.fresh_morphism_name(name + "_p1"), name, a, ds.projections[0]);
                doc.add_morphism(doc.fresh_morphism_name(name + "_p2"), name, b, ds.projections[1]);
                return ok;
            }
        });
    });
    out << emit(doc);
    return ok;
}

template <class F>
int cmd_indec(const Document<F>& doc, const std::string& name, const IndecOptions& opt, std::ostream& out) {
    return with_object(doc, name, [&](const auto& x) {
        auto res = indec_status(x, opt);
        out << "status: " << to_string(res.status) << "\n";
        out << "end dim: " << res.end_dim << "\n";
        out << "examined: " << res.examined << "\n";
        out << "certificate: " << res.certificate << "\n";
        if (res.status != IndecStatus::decomposable) return int(ok);
        out << "idempotent:\n";
        print_maps(out, *res.idempotent, "  ");
        out << "summand dims: " << dims_text(res.summands[0]) << " + " << dims_text(res.summands[1]) << "\n";
        out << "witness verified: " << (res.witness_verified() ? "yes" : "no") << "\n";
        return res.witness_verified() ? int(ok) : int(failed);
    });
}

struct AxiomsArgs {
    std::string field = "GF(5)";
    std::string law;
    bool json = false;
    TrialConfig cfg;
};

inline int cmd_axioms(const AxiomsArgs& args, std::ostream& out) {
    TrialConfig cfg = args.cfg;
    try {
        cfg.field = parse_field_spec(args.field);
    } catch (const error& e) {
        throw usage_error(std::string("bad --field: ") + e.what());
    }
    try {
        cfg.validate();
    } catch (const error& e) {
        throw usage_error(e.what());
    }
    std::vector<Law> laws(all_laws.begin(), all_laws.end());
    if (!args.law.empty()) {
        auto l = parse_law(args.law);
        if (!l) throw usage_error("unknown law '" + args.law + "'");
        laws = {*l};
    }
    std::vector<Verdict> verdicts;
    nlohmann::json summary = nlohmann::json::array();
    std::size_t failed_laws = 0;
    for (Law l : laws) {
        auto start = std::chrono::steady_clock::now();
        verdicts.push_back(run_law(l, cfg));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const auto& v = verdicts.back();
        if (!v.passed()) ++failed_laws;
        nlohmann::json seeds = nlohmann::json::array();
        for (const auto& f : v.failures) seeds.push_back(f.seed);
        summary.push_back({{"law", v.law},
                           {"trials", v.trials},
                           {"failures", v.failures.size()},
                           {"seed", v.seed},
                           {"failure_seeds", seeds},
                           {"seconds", secs}});
        if (!args.json) out << render(v);
    }
    if (args.json) {
        out << nlohmann::json{{"field", cfg.field.to_string()}, {"laws", summary}, {"passed", failed_laws == 0}}.dump(2)
            << "\n";
    } else {
        out << (failed_laws == 0 ? "all " + std::to_string(laws.size()) + " laws passed\n"
                                 : std::to_string(failed_laws) + " of " + std::to_string(laws.size()) +
                                       " laws failed\n");
    }
    return failed_laws == 0 ? ok : failed;
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with quiver representations and n-representations", "qrep"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string file, from, to, morphism, object, of, out_name;
    IndecOptions indec_opt;
    AxiomsArgs ax;

    auto* validate_cmd = app.add_subcommand("validate", "Check a document and report quiver properties");
    validate_cmd->add_option("file", file, "Input document")->required();

    auto* hom_cmd = app.add_subcommand("hom", "Dimension and basis of a morphism space");
    hom_cmd->add_option("file", file, "Input document")->required();
    hom_cmd->add_option("--from", from, "Source object")->required();
    hom_cmd->add_option("--to", to, "Target object")->required();

    auto* ker_cmd = app.add_subcommand("ker", "Append the kernel of a morphism and print the document");
    ker_cmd->add_option("file", file, "Input document")->required();
    ker_cmd->add_option("--morphism", morphism, "Morphism name")->required();

    auto* coker_cmd = app.add_subcommand("coker", "Append the cokernel of a morphism and print the document");
    coker_cmd->add_option("file", file, "Input document")->required();
    coker_cmd->add_option("--morphism", morphism, "Morphism name")->required();

    auto* canon_cmd = app.add_subcommand("canon", "Canonical decomposition of a morphism");
    canon_cmd->add_option("file", file, "Input document")->required();
    canon_cmd->add_option("--morphism", morphism, "Morphism name")->required();

    auto* dirsum_cmd = app.add_subcommand("dirsum", "Append a direct sum and print the document");
    dirsum_cmd->add_option("file", file, "Input document")->required();
    dirsum_cmd->add_option("--of", of, "Two objects, comma separated")->required();
    dirsum_cmd->add_option("--out", out_name, "Name of the sum")->required();

    auto* indec_cmd = app.add_subcommand("indec", "Decide whether an object is indecomposable");
    indec_cmd->add_option("file", file, "Input document")->required();
    indec_cmd->add_option("--object", object, "Object name")->required();
    indec_cmd->add_option("--budget", indec_opt.budget, "Maximum number of endomorphisms to examine")
        ->capture_default_str();
    indec_cmd->add_option("--seed", indec_opt.seed, "Seed for the randomized search")->capture_default_str();

    auto* axioms_cmd = app.add_subcommand("axioms", "Run the randomized law suite");
    axioms_cmd->add_option("--field", ax.field, "QQ or GF(p)")->capture_default_str();
    axioms_cmd->add_option("--trials", ax.cfg.trials, "Trials per law")->capture_default_str();
    axioms_cmd->add_option("--seed", ax.cfg.seed, "Base seed")->capture_default_str();
    axioms_cmd->add_option("--law", ax.law, "Run a single law");
    axioms_cmd->add_option("--max-vertices", ax.cfg.max_vertices)->capture_default_str();
    axioms_cmd->add_option("--max-arrows", ax.cfg.max_arrows)->capture_default_str();
    axioms_cmd->add_option("--max-dim", ax.cfg.max_dim)->capture_default_str();
    axioms_cmd->add_option("--min-levels", ax.cfg.min_levels)->capture_default_str();
    axioms_cmd->add_option("--max-levels", ax.cfg.max_levels)->capture_default_str();
    axioms_cmd->add_option("--probes", ax.cfg.probes, "Test morphisms per universal-property check")
        ->capture_default_str();
    axioms_cmd->add_flag("--json", ax.json, "Print a machine-readable summary");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "qrep: " << e.what() << "\n" << "run 'qrep --help' for usage\n";
        return usage;
    }

    try {
        if (axioms_cmd->parsed()) return cmd_axioms(ax, out);

        AnyDocument doc = parse(read_file(file));
        return std::visit(
            [&](const auto& d) -> int {
                if (validate_cmd->parsed()) return cmd_validate(d, out);
                if (hom_cmd->parsed()) return cmd_hom(d, from, to, out);
                if (ker_cmd->parsed()) return cmd_kernel_like(d, morphism, true, out);
                if (coker_cmd->parsed()) return cmd_kernel_like(d, morphism, false, out);
                if (canon_cmd->parsed()) return cmd_canon(d, morphism, out);
                if (dirsum_cmd->parsed()) {
                    auto comma = of.find(',');
                    if (comma == std::string::npos) throw usage_error("--of expects A,B");
                    return cmd_dirsum(d, of.substr(0, comma), of.substr(comma + 1), out_name, out);
                }
                if (indec_cmd->parsed()) return cmd_indec(d, object, indec_opt, out);
                throw usage_error("no command");
            },
            doc);
    } catch (const usage_error& e) {
        err << "qrep: " << e.what() << "\n";
        return usage;
    } catch (const parse_error& e) {
        err << file << ":" << e.detail() << " (" << errc_name(e.code()) << ")\n";
        return usage;
    } catch (const std::exception& e) {
        err << "qrep: " << e.what() << "\n";
        return failed;
    }
}

} // namespace qrep::cli
