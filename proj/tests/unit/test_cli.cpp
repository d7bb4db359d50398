#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using omgci::cli::format_number;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "omgci");
    std::ostringstream out;
    std::ostringstream err;
    const int code = omgci::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    return rows;
}

std::vector<std::string> fields(const std::string& row) {
    std::vector<std::string> out;
    std::istringstream in(row);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
    return out;
}

}  // namespace

TEST(FormatNumber, RoundTripsAndSpecials) {
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(std::stod(format_number(0.1)), 0.1);
    EXPECT_EQ(std::stod(format_number(std::exp(-1.0))), std::exp(-1.0));
    EXPECT_EQ(format_number(INFINITY), "inf");
    EXPECT_EQ(format_number(-INFINITY), "-inf");
    EXPECT_EQ(format_number(NAN), "nan");
}

TEST(Cli, EvalWritesHeaderAndRow) {
    const auto r = invoke({"eval", "--n", "1", "--k", "0.1", "--tau", "0.8"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "# base=nats");
    EXPECT_EQ(rows[1], "N,K,tau,G,eta,f,ell,p");
    const auto cells = fields(rows[2]);
    ASSERT_EQ(cells.size(), 8u);
    EXPECT_NEAR(std::stod(cells[3]), 0.21154560845717474, 1e-15);
}

TEST(Cli, BitsBaseScalesEntropies) {
    const auto nats = invoke({"limit", "--k", "0.1", "--tau", "0.8"});
    const auto bits = invoke({"--base", "bits", "limit", "--k", "0.1", "--tau", "0.8"});
    ASSERT_EQ(bits.code, 0);
    EXPECT_EQ(lines(bits.out)[0], "# base=bits");
    const double v_nats = std::stod(fields(lines(nats.out)[2])[2]);
    const double v_bits = std::stod(fields(lines(bits.out)[2])[2]);
    EXPECT_NEAR(v_bits, v_nats / std::log(2.0), 1e-14);
}

TEST(Cli, ScanRowsAndDeterminism) {
    const std::vector<std::string> args{"scan", "--k", "0.125", "--tau", "0.6667", "--points", "50"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 52u);
    EXPECT_EQ(rows[1], "N,G,dGdN");
    for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_LE(std::stod(fields(rows[i])[1]), 0.0);
}

TEST(Cli, ThresholdAndSupremum) {
    const auto th = invoke({"threshold", "--tau", "0.6667"});
    ASSERT_EQ(th.code, 0);
    EXPECT_EQ(lines(th.out)[0], "tau,K_th");
    EXPECT_NEAR(std::stod(fields(lines(th.out)[1])[1]), 0.09794, 2e-4);

    const auto one = invoke({"threshold", "--tau", "1"});
    EXPECT_NEAR(std::stod(fields(lines(one.out)[1])[1]), std::exp(-1.0), 1e-6);

    const auto sup = invoke({"sup", "--tau", "0.4", "--k", "3"});
    ASSERT_EQ(sup.code, 0);
    const auto cells = fields(lines(sup.out)[2]);
    EXPECT_EQ(cells[2], "0");
    EXPECT_EQ(cells[3], "N=0");

    const auto pos = invoke({"sup", "--tau", "0.6666666666666666", "--k", "0.08333333333333333"});
    EXPECT_EQ(fields(lines(pos.out)[2])[3], "N=inf");
}

TEST(Cli, StationaryReportsShape) {
    const auto r = invoke({"stationary", "--tau", "0.6666666666666666", "--k", "0.08333333333333333"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    EXPECT_EQ(rows[1], "tau,K,exists,N_star,G_star,shape");
    const auto cells = fields(rows[2]);
    EXPECT_EQ(cells[5], "DipThenPositive");
    EXPECT_NEAR(std::stod(cells[3]), 0.11874349201296189963, 1e-6);
}

TEST(Cli, RegionMapRowCount) {
    const auto r = invoke({"region-map", "--res", "5"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    EXPECT_EQ(rows[1], "tau,y,K,label,limit");
    EXPECT_EQ(rows.size(), 2u + 25u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"eval", "--n", "-1", "--k", "0.1", "--tau", "0.8"}).code, 2);
    EXPECT_EQ(invoke({"threshold", "--tau", "0.3"}).code, 2);
    EXPECT_EQ(invoke({"eval", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"nonsense"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
    EXPECT_EQ(invoke({"--base", "decibels", "limit", "--k", "0.1", "--tau", "0.8"}).code, 2);
    EXPECT_EQ(invoke({"stationary", "--tau", "0.63225218025500185", "--k", "0.08894606372020504"}).code, 1);
}

TEST(Cli, VerifyJsonReport) {
    const auto r = invoke({"verify", "--samples", "1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc.at("passed").get<bool>());
    EXPECT_EQ(doc.at("samples").get<std::size_t>(), 1000u);
    ASSERT_TRUE(doc.at("properties").is_array());
    for (const auto& p : doc.at("properties")) {
        EXPECT_TRUE(p.at("passed").get<bool>()) << p.at("name");
        EXPECT_TRUE(p.contains("worst"));
        EXPECT_TRUE(p.contains("tolerance"));
    }
}

TEST(Cli, VerifyToleranceOverrides) {
    EXPECT_EQ(invoke({"verify", "--samples", "1000", "--tol", "saturation=0"}).code, 1);
    EXPECT_EQ(invoke({"verify", "--samples", "1000", "--tol", "bogus=1"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--samples", "1000", "--tol", "saturation"}).code, 2);
}

TEST(Cli, OutWritesFile) {
    const auto path = std::filesystem::temp_directory_path() / "omgci_cli_out_test.csv";
    std::filesystem::remove(path);
    const auto r = invoke({"--out", path.string(), "limit", "--k", "0.1", "--tau", "0.8"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "# base=nats");
    std::filesystem::remove(path);
}
