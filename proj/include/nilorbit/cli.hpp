#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilorbit/catalog.hpp"
#include "nilorbit/classify.hpp"
#include "nilorbit/coadjoint.hpp"
#include "nilorbit/dsl.hpp"
#include "nilorbit/error.hpp"
#include "nilorbit/report.hpp"

namespace nilorbit {

/// Exit codes: 0 success, 1 domain error (invalid algebra, out-of-scope
/// request), 2 usage error (bad arguments, unreadable file, DSL diagnostics).
namespace cli {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageFailure : Error {
    explicit UsageFailure(const std::string& m) : Error(m) {}
};
struct DomainFailure : Error {
    explicit DomainFailure(const std::string& m) : Error(m) {}
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageFailure("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Loads and validates an algebra from a .lie file; parse diagnostics are
/// usage errors, validation failures are domain errors.
inline LieAlgebra load_file(const std::string& path) {
    const std::string text = read_file(path);
    AlgebraDocument doc;
    try {
        doc = parse_document(text);
    } catch (const ParseError& e) {
        throw UsageFailure(path + ":" + e.what());
    }
    LieAlgebra L = algebra_from_document(doc);
    const ValidationResult v = L.validate();
    if (!v.ok()) throw DomainFailure(path + ": invalid algebra: " + v.message());
    return L;
}

inline LieAlgebra load_catalog(const std::string& key) {
    try {
        return catalog_make(key);
    } catch (const CatalogError& e) {
        throw UsageFailure(e.what());
    }
}

/// FILE positional or --catalog KEY, exactly one of the two.
inline LieAlgebra load_input(const std::string& file, const std::string& key) {
    if (!file.empty() && !key.empty())
        throw UsageFailure("give either a file or --catalog, not both");
    if (file.empty() && key.empty()) throw UsageFailure("an input algebra is required");
    return file.empty() ? load_catalog(key) : load_file(file);
}

/// For `compare A B`: an operand is a file if it exists on disk, otherwise
/// it is treated as a catalog key.
inline LieAlgebra load_operand(const std::string& spec) {
    if (std::ifstream(spec).good()) return load_file(spec);
    return load_catalog(spec);
}

inline Covector parse_xi(const std::string& text, std::size_t dim) {
    Covector xi;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        cur.erase(std::remove_if(cur.begin(), cur.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  cur.end());
        try {
            xi.push_back(Rational(cur));
        } catch (const std::exception&) {
            throw UsageFailure("--xi: cannot parse rational '" + cur + "'");
        }
    }
    if (xi.size() != dim)
        throw UsageFailure("--xi: expected " + std::to_string(dim) +
                           " comma-separated rationals");
    return xi;
}

}  // namespace cli

/// The command-line driver, callable in-process. `args` excludes the program
/// name; output and diagnostics go to the given streams.
inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact coadjoint-orbit invariants of nilpotent Lie algebras"};
    app.name("nilorbit");
    app.require_subcommand(1);

    std::string file, key, xi_text, operand_a, operand_b;
    bool json = false;
    std::size_t budget = 2000, samples = 1000;
    std::uint64_t seed = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "structure-constant file (.lie)");
        cmd->add_option("--catalog", key, "built-in catalog key");
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check a .lie file");
    std::string validate_file;
    c_validate->add_option("file", validate_file, "structure-constant file")->required();

    CLI::App* c_inv = app.add_subcommand("invariants", "invariant fingerprint of an algebra");
    add_input(c_inv);
    c_inv->add_flag("--json", json, "emit the JSON report");
    c_inv->add_option("--budget", budget, "random covectors in the class-T witness search");
    c_inv->add_option("--seed", seed, "sampling seed");

    CLI::App* c_classify = app.add_subcommand("classify", "isomorphism class (dim <= 5)");
    add_input(c_classify);

    CLI::App* c_compare = app.add_subcommand("compare", "rigidity comparison of two algebras");
    c_compare->add_option("a", operand_a, "file or catalog key")->required();
    c_compare->add_option("b", operand_b, "file or catalog key")->required();
    c_compare->add_flag("--json", json, "emit the JSON report");

    CLI::App* c_classt = app.add_subcommand("classt", "class-T verdict");
    add_input(c_classt);
    c_classt->add_option("--budget", budget, "random covectors in the witness search");
    c_classt->add_option("--seed", seed, "sampling seed");

    CLI::App* c_orbit = app.add_subcommand("orbit", "coadjoint orbit report at a covector");
    add_input(c_orbit);
    c_orbit->add_option("--xi", xi_text, "covector, e.g. \"1,0,-2/3\"")->required();

    CLI::App* c_hist = app.add_subcommand("histogram", "orbit-dimension sampling histogram");
    add_input(c_hist);
    c_hist->add_option("--samples", samples, "number of sampled covectors");
    c_hist->add_option("--seed", seed, "sampling seed");

    CLI::App* c_catalog = app.add_subcommand("catalog", "list catalog entries or print one");
    std::string catalog_key;
    c_catalog->add_option("key", catalog_key, "entry to print in DSL form");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? cli::kOk : cli::kUsageError;
    }

    try {
        if (app.got_subcommand(c_validate)) {
            const std::string text = cli::read_file(validate_file);
            AlgebraDocument doc;
            try {
                doc = parse_document(text);
            } catch (const ParseError& e) {
                throw cli::UsageFailure(validate_file + ":" + e.what());
            }
            const ValidationResult v = algebra_from_document(doc).validate();
            if (!v.ok()) {
                err << validate_file << ": " << v.message() << "\n";
                return cli::kDomainError;
            }
            out << "Ok\n";
            return cli::kOk;
        }

        if (app.got_subcommand(c_inv)) {
            const LieAlgebra L = cli::load_input(file, key);
            ClassTOptions opts;
            opts.budget = budget;
            opts.seed = seed;
            const InvariantsReport r = build_invariants_report(L, opts);
            if (json)
                out << invariants_json(r).dump(2) << "\n";
            else
                out << invariants_text(r);
            return cli::kOk;
        }

        if (app.got_subcommand(c_classify)) {
            const LieAlgebra L = cli::load_input(file, key);
            try {
                out << classify_dim_le5(L) << "\n";
            } catch (const OutOfScopeError& e) {
                throw cli::DomainFailure(e.what());
            }
            return cli::kOk;
        }

        if (app.got_subcommand(c_compare)) {
            const LieAlgebra a = cli::load_operand(operand_a);
            const LieAlgebra b = cli::load_operand(operand_b);
            const RigidityReport r = compare(a, b);
            if (json)
                out << compare_json(r).dump(2) << "\n";
            else
                out << compare_text(r);
            return cli::kOk;
        }

        if (app.got_subcommand(c_classt)) {
            const LieAlgebra L = cli::load_input(file, key);
            ClassTOptions opts;
            opts.budget = budget;
            opts.seed = seed;
            out << class_t_text(class_t(L, opts)) << "\n";
            return cli::kOk;
        }

        if (app.got_subcommand(c_orbit)) {
            const LieAlgebra L = cli::load_input(file, key);
            const Covector xi = cli::parse_xi(xi_text, L.dim());
            const OrbitReport r = orbit_report(L, xi);
            out << "xi: " << covector_str(r.xi) << "\n";
            out << "orbit_dim: " << r.orbit_dim << "\n";
            out << "isotropy_dim: " << r.isotropy.dim() << "\n";
            out << "is_flat: " << (r.is_flat ? "true" : "false") << "\n";
            if (r.flat_affine_description) {
                out << "flat orbit: xi + span of " << r.flat_affine_description->second.dim()
                    << " direction(s)\n";
            }
            return cli::kOk;
        }

        if (app.got_subcommand(c_hist)) {
            const LieAlgebra L = cli::load_input(file, key);
            for (const auto& [d, count] : orbit_dim_histogram(L, samples, seed))
                out << d << ": " << count << "\n";
            return cli::kOk;
        }

        if (app.got_subcommand(c_catalog)) {
            if (catalog_key.empty()) {
                for (const CatalogEntry& e : catalog_list())
                    out << e.key << "\t" << e.dim << "\t" << e.provenance << "\n";
            } else {
                const LieAlgebra L = cli::load_catalog(catalog_key);
                out << emit_document(document_from_algebra(L));
            }
            return cli::kOk;
        }
    } catch (const cli::UsageFailure& e) {
        err << "error: " << e.what() << "\n";
        return cli::kUsageError;
    } catch (const cli::DomainFailure& e) {
        err << "error: " << e.what() << "\n";
        return cli::kDomainError;
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << "\n";
        return cli::kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return cli::kDomainError;
    }
    return cli::kUsageError;
}

}  // namespace nilorbit
