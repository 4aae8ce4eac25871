#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "gyro/gyro.hpp"
#include "support.hpp"

using namespace gyro;
using nlohmann::json;

TEST(TableIO, LoadsBundledTables) {
    EXPECT_EQ(load_table_file(test::data_path("tables/z4.json")).order(), 4u);
    const auto k = load_table_file(test::data_path("tables/klein4.json"));
    EXPECT_EQ(k.labels()[3], "ab");
    EXPECT_EQ(test::g8().order(), 8u);
    EXPECT_EQ(test::g16().order(), 16u);
}

TEST(TableIO, RoundTrip) {
    const auto g = test::g8();
    const auto back = load_table(table_to_json(g));
    EXPECT_EQ(back.rows(), g.rows());
}

TEST(TableIO, RejectsMalformedInput) {
    EXPECT_THROW(parse_table(json::array()), parse_error);
    EXPECT_THROW(parse_table(json{{"order", 2}, {"table", {{0, 1}, {1, 0}}}, {"extra", 1}}), parse_error);
    EXPECT_THROW(parse_table(json{{"order", -2}, {"table", {{0, 1}, {1, 0}}}}), parse_error);
    EXPECT_THROW(parse_table(json{{"order", 3}, {"table", {{0, 1}, {1, 0}}}}), parse_error);
    EXPECT_THROW(parse_table(json{{"order", 2}, {"table", {{0, 1.5}, {1, 0}}}}), parse_error);
    EXPECT_THROW(parse_table(json{{"order", 2}, {"table", {{0, 1}, {1, 0}}}, {"labels", {"a", "a"}}}), parse_error);
    EXPECT_THROW(parse_table(json{{"order", 2}, {"table", {{0, 1}, {1, 0}}}, {"labels", {1, 2}}}), parse_error);
    std::istringstream garbage("{not json");
    EXPECT_THROW(load_table(garbage), parse_error);
    EXPECT_THROW(load_table_file("/nonexistent/table.json"), parse_error);
}

TEST(ChainIO, FiniteAndRadial) {
    const auto f = parse_finite_chain(json{{"flavor", "admissible"}, {"sets", json::array({json::array({0, 1, 2, 3}), json::array({0, 2})})}}, 4);
    EXPECT_EQ(f.flavor, Flavor::admissible);
    ASSERT_EQ(f.sets.size(), 2u);
    EXPECT_EQ(f.sets[1], ElementSet(4, {0, 2}));
    const auto r = parse_radial_chain(json{{"flavor", "weak"}, {"radii", {0.8, 0.5}}, {"c", 1.0}});
    EXPECT_EQ(r.radii.size(), 2u);
    EXPECT_TRUE(is_radial_chain_json(json{{"radii", {0.5}}}));
    EXPECT_EQ(parse_radial_chain(chain_to_json(r)).radii, r.radii);
    EXPECT_EQ(parse_finite_chain(chain_to_json(f), 4).sets, f.sets);
}

TEST(ChainIO, RejectsMalformedInput) {
    EXPECT_THROW(parse_finite_chain(json{{"flavor", "strong"}, {"sets", json::array({json::array({0})})}}, 4), parse_error);
    EXPECT_THROW(parse_finite_chain(json{{"sets", json::array({json::array({0, 7})})}}, 4), parse_error);
    EXPECT_THROW(parse_finite_chain(json{{"sets", json::array()}}, 4), parse_error);
    EXPECT_THROW(parse_finite_chain(json{{"sets", json::array({json::array({0})})}, {"radii", {0.5}}}, 4), parse_error);
    EXPECT_THROW(parse_radial_chain(json{{"radii", {"x"}}}), parse_error);
    EXPECT_THROW(read_json_file("/nonexistent/chain.json", "chain"), parse_error);
}

TEST(Reports, JsonShape) {
    CheckResult<std::size_t> c("G3_gyroassociativity");
    c.record(0.0, 0.0, std::array<std::size_t, 3>{1, 2, 3});
    c.fail({4, 5, 6});
    c.depth = 3;
    const auto j = to_json(c);
    EXPECT_EQ(j["check"], "G3_gyroassociativity");
    EXPECT_EQ(j["verdict"], "fail");
    EXPECT_EQ(j["depth"], 3);
    EXPECT_EQ(j["samples"], 2);
    EXPECT_EQ(j["witnesses"][0]["elements"], json({4, 5, 6}));
    std::ostringstream out;
    write_jsonl(out, std::vector<CheckResult<std::size_t>>{c}, json{{"model", "g8"}});
    const auto line = json::parse(out.str());
    EXPECT_EQ(line["model"], "g8");
    EXPECT_EQ(line["check"], "G3_gyroassociativity");
}

TEST(Reports, NaNResidualFails) {
    CheckResult<double> c("nan");
    c.record(std::nan(""), 1.0, std::array<double, 1>{0.5});
    EXPECT_FALSE(c.pass);
}

TEST(Reports, WitnessListIsBounded) {
    CheckResult<std::size_t> c("many");
    for (std::size_t i = 0; i < 20; ++i) c.record(1.0, 0.0, std::array<std::size_t, 1>{i});
    EXPECT_EQ(c.witnesses.size(), CheckResult<std::size_t>::max_witnesses);
    EXPECT_EQ(c.samples, 20u);
}
