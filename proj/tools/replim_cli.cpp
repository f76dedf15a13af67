// Analysis CLI over the replication-rate model: tradeoff tables, schema
// verification, simulated map-reduce runs, and the brute-force cover oracle.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "replim/analyze.hpp"
#include "replim/bounds.hpp"
#include "replim/executor.hpp"
#include "replim/oracle.hpp"
#include "replim/schemas.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitBudget = 4;

json report_json(const replim::SchemaReport& report) {
    return json{{"schema_version", kSchemaVersion},
                {"p", report.p},
                {"q_max_observed", report.q_max_observed},
                {"q_declared", report.q_declared},
                {"q_ok", report.q_ok},
                {"r", {{"num", report.r.num}, {"den", report.r.den}}},
                {"r_value", report.r.value()},
                {"coverage_ok", report.coverage_ok},
                {"lower_bound", report.lower_bound},
                {"ratio", report.ratio}};
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        file << text;
    }
}

std::vector<std::string> split_specs(const std::string& csv) {
    std::vector<std::string> specs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // schema specs themselves contain commas (weight:d=2,k=2); re-join
        // fragments that lack a schema name
        if (!specs.empty() && item.find('=') != std::string::npos &&
            item.find(':') == std::string::npos) {
            specs.back() += "," + item;
        } else {
            specs.push_back(item);
        }
    }
    return specs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"replication-rate analysis for map-reduce mapping schemas"};
    app.require_subcommand(1);

    std::string problem_spec, schema_spec, schemas_csv, out_path;
    double x = 0.5;
    std::uint64_t seed = 0, q = 2, budget = replim::kDefaultSearchBudget;
    bool as_json = false;

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "tradeoff table (CSV) for schemas plus the bound curve");
    analyze_cmd->add_option("problem", problem_spec,
                            "problem spec, e.g. hd1:b=12 or tri:n=30")->required();
    analyze_cmd->add_option("--schemas", schemas_csv,
                            "comma-separated schema specs, e.g. pairwise,splitting:r=2")
        ->required();
    analyze_cmd->add_option("--out", out_path, "output file (default stdout)");
    analyze_cmd->add_flag("--json", as_json, "emit JSON rows instead of CSV");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive schema verification");
    verify_cmd->add_option("problem", problem_spec)->required();
    verify_cmd->add_option("schema", schema_spec)->required();
    verify_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* run_cmd = app.add_subcommand(
        "run", "simulate one map-reduce round on a random instance");
    run_cmd->add_option("problem", problem_spec)->required();
    run_cmd->add_option("schema", schema_spec)->required();
    run_cmd->add_option("--x", x, "Bernoulli presence probability");
    run_cmd->add_option("--seed", seed, "instance seed");
    run_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "exact maximum outputs coverable with q inputs");
    oracle_cmd->add_option("problem", problem_spec)->required();
    oracle_cmd->add_option("--q", q, "inputs per reducer")->required();
    oracle_cmd->add_option("--budget", budget, "search-node budget");
    oracle_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (analyze_cmd->parsed()) {
            replim::Problem problem = replim::parse_problem(problem_spec);
            replim::Analysis analysis =
                replim::analyze(problem, split_specs(schemas_csv));
            std::ostringstream text;
            if (as_json) {
                json rows = json::array();
                for (const auto& row : analysis.rows)
                    rows.push_back({{"schema", row.schema},
                                    {"q", row.q},
                                    {"log2_q", row.log2_q},
                                    {"p", row.p},
                                    {"r_achieved", row.r_achieved},
                                    {"r_lower_bound", row.r_lower_bound},
                                    {"ratio", row.ratio}});
                text << json{{"schema_version", kSchemaVersion}, {"rows", rows}}.dump(2)
                     << '\n';
            } else {
                replim::write_csv(text, analysis.rows);
            }
            emit(out_path, text.str());
            return analysis.all_ok ? 0 : kExitSemantic;
        }

        if (verify_cmd->parsed()) {
            replim::Problem problem = replim::parse_problem(problem_spec);
            replim::MappingSchema schema = replim::parse_schema(problem, schema_spec);
            replim::SchemaReport report = replim::verify_schema(problem, schema);
            emit(out_path, report_json(report).dump(2) + "\n");
            return report.coverage_ok ? 0 : kExitSemantic;
        }

        if (run_cmd->parsed()) {
            replim::Problem problem = replim::parse_problem(problem_spec);
            replim::MappingSchema schema = replim::parse_schema(problem, schema_spec);
            replim::Instance instance = replim::generate_instance(problem, x, seed);
            replim::RunReport report = replim::run(problem, schema, instance);
            replim::LocalSolveResult reference =
                replim::solve_instance(problem, instance.present);
            bool match = report.outputs == reference.outputs &&
                         report.group_sums == reference.group_sums;
            json doc{{"schema_version", kSchemaVersion},
                     {"present", instance.present.size()},
                     {"outputs", report.outputs.size()},
                     {"communication_cost", report.communication_cost},
                     {"expected_cost", report.expected_cost},
                     {"duplicates_suppressed", report.duplicates_suppressed},
                     {"reducers_used", report.reducer_loads.size()},
                     {"matches_reference", match}};
            emit(out_path, doc.dump(2) + "\n");
            return match ? 0 : kExitSemantic;
        }

        if (oracle_cmd->parsed()) {
            replim::Problem problem = replim::parse_problem(problem_spec);
            replim::CoverSearchResult result =
                replim::max_coverable_outputs(problem, q, budget);
            json witness = json::array();
            for (const auto& in : result.witness)
                witness.push_back(replim::format_input(problem, in));
            json doc{{"schema_version", kSchemaVersion},
                     {"q", q},
                     {"best_count", result.best_count},
                     {"visited", result.visited},
                     {"witness", witness}};
            emit(out_path, doc.dump(2) + "\n");
            return 0;
        }
    } catch (const replim::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const replim::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSemantic;
    }
    return 0;
}
