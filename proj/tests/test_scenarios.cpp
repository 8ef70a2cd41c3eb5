#include <catch2/catch_amalgamated.hpp>

#include "agclone/scenarios.hpp"

using namespace agclone;

TEST_CASE("registry covers S1..S10 with claims") {
    const auto& reg = scenario_registry();
    REQUIRE(reg.size() == 10);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].id == "S" + std::to_string(i + 1));
        CHECK_FALSE(reg[i].claim.empty());
    }
    CHECK_THROWS_AS(run_scenario("S99"), std::invalid_argument);
}

TEST_CASE("exit codes map status values") {
    CHECK(exit_code(ScenarioStatus::Confirmed) == 0);
    CHECK(exit_code(ScenarioStatus::Falsified) == 2);
    CHECK(exit_code(ScenarioStatus::Inconclusive) == 3);
}

TEST_CASE("fast scenarios confirm") {
    for (const std::string id : {"S1", "S2", "S3", "S5", "S10"}) {
        auto report = run_scenario(id);
        INFO(id << ": " << scenario_report_json(report).dump());
        CHECK(report.status == ScenarioStatus::Confirmed);
        CHECK(report.checked > 0);
    }
}

TEST_CASE("census scenario confirms at n=3 with the expected counts") {
    auto report = run_scenario("S4");
    CHECK(report.status == ScenarioStatus::Confirmed);
    auto j = scenario_report_json(report);
    CHECK(j["witnesses"]["counts"]["O1"] == 3);
    CHECK(j["witnesses"]["counts"]["D2"] == 1);
    CHECK(j["witnesses"]["counts"]["L4"] == 1);
    CHECK(j["witnesses"]["counts"]["D1"] == 3);
}

TEST_CASE("reports are deterministic for fixed params") {
    ScenarioParams p;
    p.seed = 7;
    auto a = scenario_report_json(run_scenario("S5", p)).dump();
    auto b = scenario_report_json(run_scenario("S5", p)).dump();
    CHECK(a == b);
    auto c = scenario_report_json(run_scenario("S8", p)).dump();
    auto d = scenario_report_json(run_scenario("S8", p)).dump();
    CHECK(c == d);
}

TEST_CASE("witness and probability scenarios confirm") {
    CHECK(run_scenario("S6").status == ScenarioStatus::Confirmed);
    CHECK(run_scenario("S7").status == ScenarioStatus::Confirmed);
    CHECK(run_scenario("S8").status == ScenarioStatus::Confirmed);
}
