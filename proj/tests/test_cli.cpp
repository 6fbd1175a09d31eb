#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "diracbox/cli/commands.hpp"
#include "diracbox/cli/output.hpp"
#include "diracbox/units.hpp"

using diracbox::pi;
using nlohmann::json;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = diracbox::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json run_json(std::vector<std::string> args, int expected_code = 0)
{
    args.push_back("--format");
    args.push_back("json");
    const Result r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return json::parse(r.out);
}

int count_lines(const std::string& s)
{
    return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST(Solve1D, UnitBoxRows)
{
    const Result r = run({"solve1d", "--lambda", "1", "--n-max", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(r.out), 4);
    const json j = run_json({"solve1d", "--lambda", "1", "--n-max", "3"});
    ASSERT_EQ(j["rows"].size(), 3u);
    EXPECT_NEAR(j["rows"][0]["x"].get<double>(), 2.028757838110434, 1e-8);
    EXPECT_EQ(j["rows"][0]["status"], "ok");
}

TEST(Solve1D, NegativeLambdaIsUsageError)
{
    const Result r = run({"solve1d", "--lambda", "-1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--lambda"), std::string::npos);
}

TEST(Solve1D, LargeBoxApproachesIntegers)
{
    const json j = run_json({"solve1d", "--lambda", "1e8", "--n-max", "2"});
    EXPECT_NEAR(j["rows"][0]["x_over_pi"].get<double>(), 1.0, 1e-6);
    EXPECT_NEAR(j["rows"][1]["x_over_pi"].get<double>(), 2.0, 1e-6);
}

TEST(Solve3D, SingleModeMatchesPublishedRow)
{
    const json j = run_json({"solve3d", "--cube", "1", "--qn", "1,1,2"});
    ASSERT_EQ(j["rows"].size(), 1u);
    const json& row = j["rows"][0];
    EXPECT_NEAR(row["x1_over_pi"].get<double>(), 0.789821, 5e-5);
    EXPECT_NEAR(row["x3_over_pi"].get<double>(), 1.61153, 5e-5);
    EXPECT_NEAR(row["epsilon"].get<double>(), 6.24063, 5e-5 * 6.24063);
    EXPECT_EQ(row["status"], "ok");
}

TEST(Solve3D, EnumerationRowsAndLevels)
{
    const json j = run_json({"solve3d", "--cube", "1", "--n-max", "3"});
    ASSERT_EQ(j["rows"].size(), 27u);
    std::set<std::int64_t> levels;
    for (const auto& row : j["rows"]) {
        levels.insert(row["level"].get<std::int64_t>());
    }
    EXPECT_EQ(levels.size(), 10u);
}

TEST(Solve3D, NonCubicBox)
{
    const json j = run_json({"solve3d", "--lx", "1", "--ly", "2", "--lz", "3", "--n-max", "2"});
    ASSERT_EQ(j["rows"].size(), 8u);
    for (const auto& row : j["rows"]) {
        EXPECT_EQ(row["status"], "ok");
        EXPECT_EQ(row["degeneracy"], 1);
    }
}

TEST(Solve3D, BoxAndModeSelectionErrors)
{
    EXPECT_EQ(run({"solve3d", "--cube", "1"}).code, 1);
    EXPECT_EQ(run({"solve3d", "--cube", "1", "--qn", "1,1,2", "--n-max", "2"}).code, 1);
    EXPECT_EQ(run({"solve3d", "--cube", "1", "--lx", "2", "--qn", "1,1,1"}).code, 1);
    EXPECT_EQ(run({"solve3d", "--lx", "1", "--qn", "1,1,1"}).code, 1);
    EXPECT_EQ(run({"solve3d", "--cube", "1", "--qn", "0,1,1"}).code, 1);
    EXPECT_EQ(run({"solve3d", "--cube", "1", "--qn", "1,x,1"}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
}

// Sweeps stop at an exact fixed point, so any positive tolerance is reachable.
TEST(Solve3D, TinyToleranceReachesFixedPoint)
{
    const json j = run_json({"solve3d", "--cube", "1", "--qn", "1,1,1", "--tol", "1e-300"});
    EXPECT_EQ(j["rows"][0]["status"], "ok");
    EXPECT_EQ(run({"solve3d", "--cube", "1", "--qn", "1,1,1", "--tol", "0"}).code, 1);
}

TEST(Table1, ReproducesAndRoundTrips)
{
    const Result csv = run({"table1"});
    EXPECT_EQ(csv.code, 0) << csv.err;
    EXPECT_EQ(count_lines(csv.out), 19);
    const json j = run_json({"table1"});
    ASSERT_EQ(j["rows"].size(), 18u);
    for (const auto& row : j["rows"]) {
        EXPECT_EQ(row["status"], "ok");
        const double eps = row["epsilon"].get<double>();
        EXPECT_EQ(diracbox::cli::printed_value(eps), eps);
    }
}

TEST(Output, PrintedValueRoundTrip)
{
    for (double v : {2.261826334114651, 1e-300, 6.02214076e23, -0.5}) {
        const std::string s = diracbox::cli::format_real(v);
        EXPECT_EQ(std::strtod(s.c_str(), nullptr), diracbox::cli::printed_value(v));
        EXPECT_NEAR(diracbox::cli::printed_value(v), v, 1e-8 * std::abs(v));
    }
}

TEST(Output, CsvQuotingAndJsonParams)
{
    diracbox::cli::RowSet rows;
    rows.params.emplace_back("name", diracbox::cli::Cell{std::string("a,b")});
    rows.columns = {"text", "value", "empty"};
    rows.add_row({std::string("say \"hi\", ok"), 1.5, std::monostate{}});
    std::ostringstream csv;
    diracbox::cli::write(csv, rows, diracbox::cli::Format::Csv);
    EXPECT_EQ(csv.str(), "text,value,empty\n\"say \"\"hi\"\", ok\",1.5,\n");
    std::ostringstream js;
    diracbox::cli::write(js, rows, diracbox::cli::Format::Json);
    const json j = json::parse(js.str());
    EXPECT_EQ(j["params"][0]["name"], "name");
    EXPECT_EQ(j["params"][0]["value"], "a,b");
    EXPECT_TRUE(j["rows"][0]["empty"].is_null());
}

TEST(FigData, Fig1IntersectionsInSecondQuadrant)
{
    const json j = run_json({"fig-data", "fig1", "--ratios", "1", "--points", "4000"});
    const auto& rows = j["rows"];
    ASSERT_GT(rows.size(), 1000u);
    int crossings = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double d0 = rows[i - 1]["tan_x"].get<double>() - rows[i - 1]["line"].get<double>();
        const double d1 = rows[i]["tan_x"].get<double>() - rows[i]["line"].get<double>();
        const double x = rows[i]["x"].get<double>();
        // Sign changes of tan x - line across the asymptote are not roots.
        if (d0 < 0.0 && d1 >= 0.0) {
            ++crossings;
            EXPECT_TRUE((x > pi / 2 && x < pi) || (x > 1.5 * pi && x < 2.0 * pi)) << x;
        }
    }
    EXPECT_EQ(crossings, 2);
}

TEST(FigData, Fig2RowsAndGroundState)
{
    const json j = run_json({"fig-data", "fig2"});
    ASSERT_EQ(j["rows"].size(), 81u);
    for (const auto& row : j["rows"]) {
        if (row["lambda"].get<double>() == 1.0 && row["level"] == 1) {
            EXPECT_NEAR(row["log10_kinetic"].get<double>(), std::log10(3.10004), 1e-4);
        }
        if (row["lambda"].get<double>() == 10.0 && row["level"] == 1) {
            EXPECT_NEAR(row["log10_kinetic"].get<double>(), std::log10(0.11689), 1e-3);
        }
    }
}

TEST(Verify, DeterministicAndMutationDetected)
{
    const Result a = run({"verify", "--cube", "1", "--qn", "1,2,1", "--samples", "20", "--seed", "3"});
    const Result b = run({"verify", "--cube", "1", "--qn", "1,2,1", "--samples", "20", "--seed", "3"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(count_lines(a.out), 8);

    const json good = run_json({"verify", "--cube", "1", "--qn", "1,1,1"}, 2);
    const json bad = run_json({"verify", "--cube", "1", "--qn", "1,1,1", "--break-coeffs"}, 2);
    const auto& good_all = good["rows"].back();
    const auto& bad_all = bad["rows"].back();
    EXPECT_EQ(good_all["face"], "all");
    EXPECT_LE(good_all["max_reduced_residual"].get<double>(), 1e-9);
    EXPECT_GT(bad_all["max_reduced_residual"].get<double>(), 0.1);
}

TEST(Verify, UsageErrors)
{
    EXPECT_EQ(run({"verify", "--qn", "1,1,1"}).code, 1);
    EXPECT_EQ(run({"verify", "--cube", "1", "--qn", "1,1"}).code, 1);
}

TEST(Dos, SectionsAndOutputFile)
{
    const json j = run_json({"dos", "--lambda", "0.1,1e6", "--n-max", "4"});
    std::map<std::string, int> sections;
    for (const auto& row : j["rows"]) {
        sections[row["section"].get<std::string>()]++;
        if (row["section"] == "spacing" && row["lambda"].get<double>() == 1e6) {
            EXPECT_NEAR(row["spacing"].get<double>(), pi, 1e-5);
        }
        if (row["section"] == "count" && row["lambda"].get<double>() == 1e6) {
            EXPECT_EQ(row["count_rel"], row["count_nr"]);
        }
    }
    EXPECT_EQ(sections["spacing"], 6);
    EXPECT_GT(sections["level"], 0);
    EXPECT_GT(sections["count"], 0);

    const auto path = std::filesystem::temp_directory_path() / "diracbox_dos_test.csv";
    const Result file_run = run({"dos", "--lambda", "1", "--n-max", "3", "--output", path.string()});
    ASSERT_EQ(file_run.code, 0) << file_run.err;
    EXPECT_TRUE(file_run.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), run({"dos", "--lambda", "1", "--n-max", "3"}).out);
    std::filesystem::remove(path);
}

TEST(Help, ExitsZero)
{
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("solve3d"), std::string::npos);
}
