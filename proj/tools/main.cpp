#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "plr/cli.hpp"

namespace {

void emit(const plr::Report& rep, const std::string& out_path) {
    std::string text = rep.body.dump(2) + "\n";
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact renormalization analysis of piecewise-affine interval maps"};
    app.require_subcommand(1);

    std::string map_path, family_path, what, out_path, csv_path = "sweep_out.csv";
    plr::CmdOptions opt;
    unsigned max_q_flag = 0;
    unsigned level_flag = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-depth", opt.max_depth, "tower depth cap (default 8)");
        cmd->add_option("--max-q", max_q_flag, "cycle length cap (default 64; 8 per sweep row)");
        cmd->add_option("--budget", opt.piece_budget, "piece budget (default 10^6)");
        cmd->add_option("--jobs", opt.jobs, "worker threads (default: machine parallelism)");
        cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "corners, variation, fixed points");
    analyze->add_option("map", map_path, "map document (JSON)")->required();
    add_common(analyze);

    CLI::App* tower = app.add_subcommand("tower", "build the renormalization tower");
    tower->add_option("map", map_path, "map document (JSON)")->required();
    add_common(tower);

    CLI::App* certify = app.add_subcommand("certify", "exact certificates");
    certify->add_option("map", map_path, "map document (JSON)")->required();
    certify->add_option("--what", what, "expansion|ledger|claim3|claim5|multiplicity")->required();
    certify->add_option("--level", level_flag, "restrict to one tower level");
    add_common(certify);

    CLI::App* sweep = app.add_subcommand("sweep", "parameter-family sweep");
    sweep->add_option("family", family_path, "family document (JSON)")->required();
    sweep->add_option("--what", what, "depth|expansion")->required();
    sweep->add_option("--csv", csv_path, "CSV output path (default sweep_out.csv)");
    add_common(sweep);

    CLI11_PARSE(app, argc, argv);
    if (max_q_flag) opt.max_q = max_q_flag;
    if (level_flag) opt.level = level_flag;

    if (analyze->parsed()) {
        plr::Report rep = plr::cmd_analyze(map_path, opt);
        emit(rep, out_path);
        return rep.exit_code;
    }
    if (tower->parsed()) {
        plr::Report rep = plr::cmd_tower(map_path, opt);
        emit(rep, out_path);
        return rep.exit_code;
    }
    if (certify->parsed()) {
        plr::Report rep = plr::cmd_certify(map_path, what, opt);
        emit(rep, out_path);
        return rep.exit_code;
    }
    if (sweep->parsed()) {
        plr::SweepOutput out = plr::cmd_sweep(family_path, what, opt);
        if (out.report.exit_code == 0) {
            std::ofstream csv(csv_path, std::ios::binary);
            csv << out.csv;
        }
        emit(out.report, out_path);
        return out.report.exit_code;
    }
    return 1;
}
