#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "petit/job.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw petit::error("cannot open output file: " + out_path);
    out << text;
}

int run_analyses(const std::string& config_path, const std::vector<std::string>& analyses,
                 const std::string& out_path, std::uint64_t budget_override) {
    petit::JobConfig cfg = petit::parse_job_config_file(config_path);
    if (!analyses.empty()) cfg.analyses = analyses;
    if (budget_override) cfg.budget = budget_override;
    nlohmann::ordered_json report = petit::run_job(cfg);
    emit(report.dump(2) + "\n", out_path);
    return petit::report_all_pass(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew polynomial quotient algebras: structure and automorphisms"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "report";
    app.add_option("--config", config_path, "job config file")->required();
    app.add_option("--out", out_path, "output path (stdout when omitted)");
    app.add_option("--format", format, "report|table|plain")
        ->check(CLI::IsMember({"report", "table", "plain"}));

    auto* construct = app.add_subcommand("construct", "build the algebra and print its shape");
    auto* mul_table = app.add_subcommand("mul-table", "print the full basis multiplication table");
    auto* structure = app.add_subcommand("structure", "nuclei, center, commutant and their checks");
    auto* autos = app.add_subcommand("automorphisms", "enumerate and classify automorphisms");
    auto* hilbert = app.add_subcommand("hilbert90", "solve k = c^-1 sigma(c) for a given k");
    auto* certify = app.add_subcommand("certify-galois", "produce the Galois witness system");
    auto* check_all = app.add_subcommand("check-all", "run every analysis and verdict");

    std::string mode = "both", auto_report_path, k_text;
    std::uint64_t budget = 0;
    autos->add_option("--mode", mode, "theoretic|bruteforce|both")
        ->check(CLI::IsMember({"theoretic", "bruteforce", "both"}));
    autos->add_option("--budget", budget, "brute-force candidate cap");
    autos->add_option("--report", auto_report_path, "write the report here");
    hilbert->add_option("--k", k_text, "coordinate tuple in C")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            petit::BuiltJob job = petit::build_job(petit::parse_job_config_file(config_path));
            nlohmann::ordered_json out;
            out["ring"] = job.D->describe();
            out["sigma"] = job.sigma.label();
            out["f"] = job.A->f().str();
            out["dim"] = job.A->dim();
            out["cyclic_form"] = job.A->cyclic_form();
            out["associative"] = petit::is_associative(job.A);
            out["s0"] = petit::json_of_subspace(job.A->s0_in_coeff());
            emit(out.dump(2) + "\n", out_path);
            return 0;
        }
        if (mul_table->parsed()) {
            petit::JobConfig cfg = petit::parse_job_config_file(config_path);
            petit::BuiltJob job = petit::build_job(cfg);
            emit(petit::mul_table_text(job, cfg.print_bound), out_path);
            return 0;
        }
        if (structure->parsed()) {
            return run_analyses(config_path, {"structure"}, out_path, 0);
        }
        if (autos->parsed()) {
            std::vector<std::string> names;
            if (mode == "theoretic" || mode == "both") names.push_back("automorphisms");
            if (mode == "bruteforce") names.push_back("automorphisms");
            std::string path = auto_report_path.empty() ? out_path : auto_report_path;
            return run_analyses(config_path, names, path, budget);
        }
        if (hilbert->parsed()) {
            petit::BuiltJob job = petit::build_job(petit::parse_job_config_file(config_path));
            petit::Coords k = job.galois.C->parse(k_text);
            auto c = petit::hilbert90_solve(k, job.galois);
            emit(c ? job.galois.C->format(*c) + "\n" : std::string("NONE\n"), out_path);
            return 0;
        }
        if (certify->parsed()) {
            return run_analyses(config_path, {"galois-certificate"}, out_path, 0);
        }
        if (check_all->parsed()) {
            return run_analyses(config_path, {}, out_path, budget);
        }
    } catch (const petit::config_parse_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const petit::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
