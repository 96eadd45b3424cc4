#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nakamol/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"nakamol: exact quiver-variety invariants and equivariant series"};
    app.require_subcommand(1);

    std::string spec_path;
    nakamol::RunOptions opts;
    std::string lambda_text, theta_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("spec", spec_path, "quiver spec file")->required();
        cmd->add_option("--format", opts.format, "output format: json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--no-cache", opts.no_cache, "bypass the result cache");
        cmd->add_option("--seed", opts.seed, "seed for oracle point drawing");
        cmd->add_option("--threads", opts.threads, "worker threads (results identical)");
        return cmd;
    };

    auto* cflat = add_common(app.add_subcommand("check-flat", "moment-map flatness"));
    auto* creg = add_common(app.add_subcommand("check-regular", "v-regularity of theta"));
    creg->add_option("--theta", theta_text, "GIT character, space/comma separated");
    auto* cdim = add_common(app.add_subcommand("dim", "smooth quotient dimension"));
    auto* cser = add_common(app.add_subcommand("series", "equivariant Hilbert series"));
    cser->add_option("--order", opts.order, "hbar-degree truncation order")->required();
    cser->add_option("--jtype-cap", opts.jtype_cap, "override the hbar-free expansion cap");
    auto* ctaut = add_common(app.add_subcommand("taut", "tautological-sheaf character"));
    ctaut->add_option("--order", opts.order, "hbar-degree truncation order")->required();
    ctaut->add_option("--lambda", lambda_text, "multipartition, e.g. \"1,0;-2,-2\"");
    ctaut->add_option("--jtype-cap", opts.jtype_cap, "override the hbar-free expansion cap");
    auto* ckos = add_common(app.add_subcommand("koszul", "multigraded Koszul homology"));
    ckos->add_option("--max-degree", opts.max_degree, "weighted-degree bound")->required();
    auto* ccross = add_common(app.add_subcommand("crosscheck", "series vs oracle vs Euler"));
    ccross->add_option("--order", opts.order, "hbar-degree order for the series legs");
    ccross->add_option("--max-degree", opts.max_degree, "weighted-degree bound for Koszul");

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    opts.command = sub->get_name();
    (void)cflat; (void)cdim;
    if (!lambda_text.empty()) opts.lambda_text = lambda_text;
    if (!theta_text.empty()) {
        std::vector<int> theta;
        std::string tok;
        std::istringstream is(theta_text);
        while (std::getline(is, tok, ',')) {
            std::istringstream ws(tok);
            std::string t2;
            while (ws >> t2) theta.push_back(std::stoi(t2));
        }
        opts.theta = theta;
    }

    try {
        std::ifstream in(spec_path);
        if (!in) {
            std::cerr << "error: cannot open spec file " << spec_path << "\n";
            return 1;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        auto spec = nakamol::parse_spec(buf.str());
        auto report = nakamol::run_command(spec, opts);
        std::cout << report.render(opts.format);
        std::cerr << (report.cache_hit ? "cache: hit\n" : "cache: miss\n");
        return report.exit_code;
    } catch (const nakamol::SpecParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    }
}
