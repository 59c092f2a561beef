// freeprob: command-line front end for the exact free-probability engine.
//
// Subcommands:
//   compute  OP [PARAM] FILES... --output OUT   transform pipelines
//   verify   --suite {identities|fock|onevar|all} [--seed --trials --k --order]
//   fock-check   [--seed --trials --k --order --depth]
//   verify-1d    [--seed --trials --order]
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 data error.

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "freeprob/cauchy1d.hpp"
#include "freeprob/io.hpp"
#include "freeprob/subord.hpp"
#include "freeprob/verify.hpp"

namespace {

using namespace freeprob;

int print_results(const std::vector<CheckResult>& results) {
    bool ok = true;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << " (" << r.witness << ")\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

struct OpSpec {
    int files;
    bool has_param;
};

const std::map<std::string, OpSpec>& op_table() {
    static const std::map<std::string, OpSpec> t{
        {"boxplus", {2, false}},     {"uplus", {2, false}},
        {"boxright", {2, false}},    {"phi2", {2, false}},
        {"bb", {1, false}},          {"bb_inv", {1, false}},
        {"phi", {1, false}},         {"boxplus_pow", {1, true}},
        {"uplus_pow", {1, true}},    {"bb_t", {1, true}},
        {"subpow", {1, true}},
    };
    return t;
}

Distribution apply_op(const std::string& op, const Rat& param,
                      const std::vector<Distribution>& args) {
    if (op == "boxplus") return boxplus(args[0], args[1]);
    if (op == "uplus") return uplus(args[0], args[1]);
    if (op == "boxright") return boxright(args[0], args[1]);
    if (op == "phi2") return phi2(args[0], args[1]);
    if (op == "bb") return bb(args[0]);
    if (op == "bb_inv") return bb_inverse(args[0]);
    if (op == "phi") return phi(args[0]);
    if (op == "boxplus_pow") return boxplus_power(args[0], param);
    if (op == "uplus_pow") return uplus_power(args[0], param);
    if (op == "bb_t") return bb_t(args[0], param);
    return subordination_of_power(args[0], param);  // subpow
}

int run_compute(const std::vector<std::string>& expr, const std::string& output) {
    if (expr.empty()) {
        std::cerr << "compute: empty expression\n";
        return 2;
    }
    const std::string& op = expr[0];
    auto it = op_table().find(op);
    if (it == op_table().end()) {
        std::cerr << "compute: unknown operation '" << op << "'\n";
        return 2;
    }
    const OpSpec& sp = it->second;
    std::size_t expected = 1 + (sp.has_param ? 1 : 0) + static_cast<std::size_t>(sp.files);
    if (expr.size() != expected) {
        std::cerr << "compute: '" << op << "' expects " << (sp.has_param ? "a parameter and " : "")
                  << sp.files << " input file(s)\n";
        return 2;
    }

    Rat param(0);
    std::size_t pos = 1;
    if (sp.has_param) {
        try {
            param = parse_rat(expr[pos++]);
        } catch (const std::invalid_argument& e) {
            std::cerr << "compute: " << e.what() << "\n";
            return 2;
        }
    }

    try {
        std::vector<Distribution> args;
        for (; pos < expr.size(); ++pos) args.push_back(read_distribution_file(expr[pos]));
        Distribution result = apply_op(op, param, args);
        if (output.empty() || output == "-")
            write_distribution(std::cout, result);
        else
            write_distribution_file(output, result);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "compute: " << e.what() << "\n";
        return 3;
    }
}

int run_verify(const std::string& suite, const VerifyOptions& opt) {
    if (opt.trials < 1 || opt.k < 1 || opt.k > 3 || opt.order < 1) {
        std::cerr << "verify: trials >= 1 and 1 <= k <= 3 required\n";
        return 2;
    }
    const int cap = suite == "onevar" ? 8 : 6;
    if (opt.order > cap) {
        std::cerr << "verify: order <= " << cap << " required for suite '" << suite << "'\n";
        return 2;
    }

    std::vector<CheckResult> results;
    auto append = [&](std::vector<CheckResult> r) {
        results.insert(results.end(), r.begin(), r.end());
    };
    if (suite == "identities" || suite == "all") append(verify_identities(opt));
    if (suite == "fock" || suite == "all") {
        VerifyOptions f = opt;
        f.k = std::min(f.k, 2);
        f.order = std::min(f.order, 3);
        f.trials = std::min(f.trials, 20);
        append(verify_fock(f));
    }
    if (suite == "onevar" || suite == "all") {
        VerifyOptions o = opt;
        o.k = 1;
        if (suite == "all") o.order = 8;
        append(verify_onevar(o));
    }
    return print_results(results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for k-variable free probability"};
    app.require_subcommand(1);

    std::vector<std::string> expr;
    std::string output = "-";
    CLI::App* compute = app.add_subcommand("compute", "apply a transform pipeline");
    compute->add_option("expr", expr, "OP [PARAM] FILES...")->required();
    compute->add_option("--output", output, "output file, '-' for stdout");

    std::string suite = "all";
    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "identities|fock|onevar|all")
        ->check(CLI::IsMember({"identities", "fock", "onevar", "all"}));
    verify->add_option("--seed", vopt.seed);
    verify->add_option("--trials", vopt.trials);
    verify->add_option("--k", vopt.k);
    verify->add_option("--order", vopt.order);

    VerifyOptions fopt;
    fopt.trials = 20;
    fopt.order = 3;
    CLI::App* fock = app.add_subcommand("fock-check", "operator-model oracle");
    fock->add_option("--seed", fopt.seed);
    fock->add_option("--trials", fopt.trials);
    fock->add_option("--k", fopt.k);
    fock->add_option("--order", fopt.order);
    fock->add_option("--depth", fopt.depth);

    VerifyOptions oopt;
    oopt.trials = 100;
    oopt.order = 8;
    oopt.k = 1;
    CLI::App* onevar = app.add_subcommand("verify-1d", "Cauchy-transform oracle");
    onevar->add_option("--seed", oopt.seed);
    onevar->add_option("--trials", oopt.trials);
    onevar->add_option("--order", oopt.order);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(expr, output);
        if (verify->parsed()) return run_verify(suite, vopt);
        if (fock->parsed()) {
            if (fopt.trials < 1 || fopt.k < 1 || fopt.k > 2 || fopt.order < 1 ||
                fopt.order > 4 || (fopt.depth != 0 && fopt.depth < fopt.order + 1)) {
                std::cerr << "fock-check: need trials >= 1, 1 <= k <= 2, 1 <= order <= 4, "
                             "depth >= order + 1\n";
                return 2;
            }
            return print_results(verify_fock(fopt));
        }
        // verify-1d
        if (oopt.trials < 1 || oopt.order < 1 || oopt.order > 8) {
            std::cerr << "verify-1d: need trials >= 1 and 1 <= order <= 8\n";
            return 2;
        }
        return print_results(verify_onevar(oopt));
    } catch (const std::exception& e) {
        std::cerr << argv[0] << ": " << e.what() << "\n";
        return 3;
    }
}
