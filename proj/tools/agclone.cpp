#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "agclone/clone.hpp"
#include "agclone/io.hpp"
#include "agclone/rules.hpp"
#include "agclone/scenarios.hpp"

namespace {

agclone::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return agclone::Json::parse(in);
}

std::vector<agclone::TwoFunction> read_generators(const std::string& path) {
    agclone::Json j = read_json_file(path);
    const agclone::Json& list = j.is_array() ? j : j.at("generators");
    std::vector<agclone::TwoFunction> gens;
    for (const auto& item : list) gens.push_back(agclone::two_function_from_json(item));
    if (gens.empty()) throw std::runtime_error("no generators in " + path);
    return gens;
}

void print_report_text(const agclone::Json& r, std::ostream& os) {
    os << r.at("scenario").get<std::string>() << ": " << r.at("status").get<std::string>()
       << " (" << r.at("checked").get<long long>() << " checks)\n";
    os << "  claim: " << r.at("claim").get<std::string>() << "\n";
    if (!r.at("params").empty()) os << "  params: " << r.at("params").dump() << "\n";
    if (!r.at("witnesses").empty()) os << "  witnesses: " << r.at("witnesses").dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for local aggregation rules and conservative 2-clones"};
    app.require_subcommand(1);

    std::string scenario_id;
    agclone::ScenarioParams params;
    bool as_text = false;
    if (const char* env = std::getenv("AGCLONE_BUDGET")) params.budget = std::strtoull(env, nullptr, 10);

    auto* verify = app.add_subcommand("verify", "run one scenario and report its status");
    verify->add_option("scenario", scenario_id, "scenario id (S1..S10)")->required();
    verify->add_option("--m", params.m, "number of alternatives");
    verify->add_option("--n", params.n, "number of voters / arity");
    verify->add_option("--alpha", params.alpha, "single reliability value instead of the grid");
    verify->add_option("--seed", params.seed, "RNG seed");
    verify->add_option("--budget", params.budget, "sample or element budget");
    auto* json_flag = verify->add_flag("--json", "JSON report (default)");
    verify->add_flag("--text", as_text, "human-readable report")->excludes(json_flag);

    auto* list = app.add_subcommand("list", "list scenario ids and claims");

    std::string coalition_json;
    auto* classify = app.add_subcommand("classify", "classify a decisive coalition");
    classify->add_option("--coalition", coalition_json, "coalition as {\"n\":…,\"members\":[[1],…]}")
        ->required();

    std::string gen_path, clone_op, target_path;
    int clone_n = 2;
    auto* clone = app.add_subcommand("clone", "operate on a generated conservative 2-clone");
    clone->add_option("--generators", gen_path, "JSON file with a list of 2-function tables")
        ->required();
    clone->add_option("--op", clone_op, "closure | classify | realize")->required();
    clone->add_option("--n", clone_n, "arity for the closure part");
    clone->add_option("--target", target_path, "target table for realize");
    std::uint64_t clone_budget = 0;
    clone->add_option("--budget", clone_budget, "closure element budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            auto start = std::chrono::steady_clock::now();
            agclone::ScenarioReport report = agclone::run_scenario(scenario_id, params);
            auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
            agclone::Json j = agclone::scenario_report_json(report);
            if (as_text)
                print_report_text(j, std::cout);
            else
                std::cout << j.dump(2) << "\n";
            std::cerr << "runtime: " << elapsed.count() << " s\n";
            return agclone::exit_code(report.status);
        }
        if (*list) {
            for (const auto& e : agclone::scenario_registry())
                std::cout << e.id << "  " << e.claim << "\n";
            return 0;
        }
        if (*classify) {
            agclone::DecisiveCoalition K =
                agclone::coalition_from_json(agclone::Json::parse(coalition_json));
            agclone::PostClass c = agclone::classify_coalition(K);
            agclone::Json out{{"coalition", agclone::to_json(K)},
                              {"post_class", agclone::to_string(c)},
                              {"dictatorial", K.is_dictatorial()},
                              {"monotone", K.is_monotone()},
                              {"odd_parity_family", K.is_odd_parity_family()}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*clone) {
            auto gens = read_generators(gen_path);
            int m = gens.front().m();
            agclone::ClosureBudget budget;
            if (clone_budget) budget.max_elements = clone_budget;
            else if (const char* env = std::getenv("AGCLONE_BUDGET"))
                budget.max_elements = std::strtoull(env, nullptr, 10);
            if (clone_op == "closure") {
                auto part = agclone::two_function_nary_closure(agclone::symmetric_closure(gens), m,
                                                               clone_n, budget);
                std::cout << agclone::slice_to_json(part, gens).dump(2) << "\n";
                return 0;
            }
            if (clone_op == "classify") {
                auto cls = agclone::classify_symmetric_2clone(gens);
                std::cout << agclone::to_json(cls).dump(2) << "\n";
                return 0;
            }
            if (clone_op == "realize") {
                if (target_path.empty()) throw std::runtime_error("realize needs --target");
                auto target = agclone::two_function_from_json(read_json_file(target_path));
                auto out = agclone::realize_member(gens, target);
                std::cout << agclone::Json{{"realized", agclone::to_json(out)}}.dump(2) << "\n";
                return 0;
            }
            throw std::runtime_error("unknown --op " + clone_op);
        }
    } catch (const agclone::FalsificationError& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return 2;
    } catch (const agclone::BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
