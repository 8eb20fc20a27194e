// Command-line front end: template tables, relative Severi degrees by two
// independent routes, node polynomials with golden verification, and leading
// terms.  Exit codes: 0 ok, 2 domain error, 3 verification mismatch, 4
// resource refusal.

#include "relnodes/appendix.hpp"
#include "relnodes/assembly.hpp"
#include "relnodes/cache.hpp"
#include "relnodes/errors.hpp"
#include "relnodes/figures.hpp"
#include "relnodes/floor_diagram.hpp"
#include "relnodes/json_io.hpp"
#include "relnodes/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace relnodes;

namespace {

struct GlobalOptions {
    bool json = false;
    int jobs = 1;
    std::string cache_dir;
};

std::string kappa_text(const Json& kappa) {
    std::string out = "(";
    for (size_t i = 0; i < kappa.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(kappa[i].get<int>());
    }
    return out + ")";
}

Json templates_payload(int delta) {
    Json arr = Json::array();
    for (const auto& t : enumerate_templates(delta)) arr.push_back(template_to_json(t));
    return arr;
}

Json ext_templates_payload(int delta) {
    Json arr = Json::array();
    for (const auto& t : enumerate_extended_templates(delta)) arr.push_back(ext_template_to_json(t));
    return arr;
}

int cmd_templates(const GlobalOptions& global, int delta, const std::string& kind, bool force) {
    bool extended = kind == "extended";
    if (!force && ((extended && delta > 4) || (!extended && delta > 6)))
        throw ResourceError("cogenus " + std::to_string(delta) + " is above the default " +
                            (extended ? std::string("extended-template") : std::string("template")) +
                            " table range (--force overrides)");
    if (!extended && delta < 1) throw DomainError("plain templates need cogenus >= 1");
    if (delta < 0) throw DomainError("cogenus must be >= 0");

    Cache cache = Cache::resolve(global.cache_dir);
    std::string cache_kind = extended ? "ext-templates" : "templates";
    Json payload = cache.get_or_compute(cache_kind, delta, [&] {
        return extended ? ext_templates_payload(delta) : templates_payload(delta);
    });

    if (global.json) {
        std::cout << payload.dump(2) << "\n";
        return 0;
    }
    for (const auto& row : payload) {
        const auto& inv = row.at("invariants");
        std::cout << "delta=" << inv.at("delta").get<int>();
        std::cout << "  l=" << (extended ? row.at("lambda").at("l") : row.at("l")).get<int>();
        std::cout << "  mu=" << inv.at("mu").get<std::string>();
        std::cout << "  kappa=" << kappa_text(inv.at("kappa"));
        if (extended) {
            std::cout << "  d_min=" << inv.at("d_min").get<int>();
            std::cout << "  s=" << inv.at("s").get<int>();
            std::cout << "  q=" << poly_from_json(row.at("q")).to_pretty_string();
            std::cout << "  edges=" << row.at("lambda").at("edges").dump();
            std::cout << "  A=" << row.at("A").dump() << "  B=" << row.at("B").dump();
        } else {
            std::cout << "  k_min=" << inv.at("k_min").get<int>();
            std::cout << "  s=" << inv.at("s").get<int>();
            std::cout << "  P=" << inv.at("P").get<std::string>();
            std::cout << "  edges=" << row.at("edges").dump();
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_severi(const GlobalOptions& global, int delta, const std::string& alpha_text,
               const std::string& beta_text, const std::string& method) {
    TangencySequence alpha = TangencySequence::parse(alpha_text);
    TangencySequence beta = TangencySequence::parse(beta_text);
    AssemblyOptions options;
    options.jobs = global.jobs;

    std::optional<Int> via_enum, via_poly;
    if (method == "enumerate" || method == "both") via_enum = severi_degree_enum(delta, alpha, beta);
    if (method == "polynomial" || method == "both")
        via_poly = evaluate_relative_severi(delta, alpha, beta, options);

    if (global.json) {
        Json j;
        j["delta"] = delta;
        j["alpha"] = alpha_text;
        j["beta"] = beta_text;
        if (via_enum) j["enumerate"] = via_enum->str();
        if (via_poly) j["polynomial"] = via_poly->str();
        if (via_enum && via_poly) j["verdict"] = (*via_enum == *via_poly) ? "MATCH" : "MISMATCH";
        std::cout << j.dump(2) << "\n";
    } else if (method == "both") {
        std::cout << "enumerate:  " << via_enum->str() << "\n";
        std::cout << "polynomial: " << via_poly->str() << "\n";
        std::cout << ((*via_enum == *via_poly) ? "MATCH" : "MISMATCH") << "\n";
    } else {
        std::cout << (via_enum ? via_enum->str() : via_poly->str()) << "\n";
    }
    if (via_enum && via_poly && *via_enum != *via_poly)
        throw VerificationError("the two routes disagree");
    return 0;
}

int cmd_nodepoly(const GlobalOptions& global, int delta, const std::string& out_path) {
    Cache cache = Cache::resolve(global.cache_dir);
    AssemblyOptions options;
    options.jobs = global.jobs;
    Json payload = cache.get_or_compute("nodepoly", delta, [&] {
        return node_polynomial_to_json(node_polynomial(delta, options));
    });
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw DomainError("cannot write " + out_path);
        out << payload.dump(2) << "\n";
    }
    if (global.json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << "N_" << delta << " = " << poly_from_json(payload).to_pretty_string() << "\n";
    return 0;
}

int cmd_leading(const GlobalOptions& global, int delta, int depth) {
    AssemblyOptions options;
    options.jobs = global.jobs;
    MultiPoly lead = leading_terms(delta, depth, options);
    if (global.json)
        std::cout << poly_to_json(lead).dump(2) << "\n";
    else
        std::cout << lead.to_pretty_string() << "\n";
    return 0;
}

int cmd_verify(const GlobalOptions& global, int delta, int max_degree) {
    auto results = run_verification(delta, max_degree, global.jobs);
    bool ok = true;
    if (global.json) {
        Json arr = Json::array();
        for (const auto& r : results) {
            Json j;
            j["check"] = r.name;
            j["pass"] = r.pass;
            if (!r.detail.empty()) j["detail"] = r.detail;
            if (!r.flags.empty()) j["flags"] = r.flags;
            arr.push_back(j);
            ok &= r.pass;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
            if (!r.pass) std::cout << "      " << r.detail << "\n";
            for (const auto& f : r.flags) std::cout << "      flagged: " << f << "\n";
            ok &= r.pass;
        }
    }
    if (!ok) throw VerificationError("verification found mismatches");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relative Severi degrees and node polynomials of plane curves "
                 "via floor diagrams"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_flag("--json", global.json, "emit JSON instead of text");
    app.add_option("--jobs", global.jobs, "worker threads for enumeration and assembly")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", global.cache_dir,
                   "cache directory ('none' disables; default RELNODES_CACHE_DIR or ~/.cache/relnodes)");

    int delta = 0, max_degree = 6, depth = 2;
    std::string kind = "plain", alpha_text, beta_text, method = "polynomial", out_path;

    app.fallthrough();  // global flags may follow the subcommand

    bool force = false;
    auto* t = app.add_subcommand("templates", "list templates or extended templates of a cogenus");
    t->add_option("--cogenus", delta, "cogenus")->required();
    t->add_option("--kind", kind, "plain|extended")->check(CLI::IsMember({"plain", "extended"}));
    t->add_flag("--force", force, "allow cogenus beyond the default table range");

    auto* s = app.add_subcommand("severi", "compute a relative Severi degree");
    s->add_option("--delta", delta, "number of nodes")->required();
    s->add_option("--alpha", alpha_text, "fixed tangencies, e.g. \"1,0,2\" (empty = none)");
    s->add_option("--beta", beta_text, "unconstrained tangencies");
    s->add_option("--method", method, "enumerate|polynomial|both")
        ->check(CLI::IsMember({"enumerate", "polynomial", "both"}));

    auto* n = app.add_subcommand("nodepoly", "compute a relative node polynomial");
    n->add_option("--delta", delta, "number of nodes")->required();
    n->add_option("--out", out_path, "write canonical JSON to this path");

    auto* l = app.add_subcommand("leading", "terms of degree >= 3*delta - depth");
    l->add_option("--delta", delta, "number of nodes")->required();
    l->add_option("--depth", depth, "degree depth t");

    auto* v = app.add_subcommand("verify", "run the golden/oracle verification suite");
    v->add_option("--delta", delta, "verify up to this cogenus")->required();
    v->add_option("--max-degree", max_degree, "degree cap for the dual-path sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (t->parsed()) return cmd_templates(global, delta, kind, force);
        if (s->parsed()) return cmd_severi(global, delta, alpha_text, beta_text, method);
        if (n->parsed()) return cmd_nodepoly(global, delta, out_path);
        if (l->parsed()) return cmd_leading(global, delta, depth);
        if (v->parsed()) return cmd_verify(global, delta, max_degree);
    } catch (const VerificationError& e) {
        std::cerr << "verification: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
