// End-to-end tests of the command-line tool: spawns the real binary and
// checks output bytes and exit codes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "attoclock/barrier.hpp"
#include "attoclock/format.hpp"

namespace {

using attoclock::format_g9;

const std::filesystem::path kStderrFile =
    std::filesystem::temp_directory_path() / "attoclock_cli_stderr.txt";

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args) {
    const std::string command =
        std::string(ATTOCLOCK_CLI_PATH) + " " + args + " 2>" + kStderrFile.string();
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        result.exit_code = -1;
        return result;
    }
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.out.append(buffer, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(kStderrFile);
    std::stringstream err_text;
    err_text << err.rdbuf();
    result.err = err_text.str();
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

TEST(CliPotentialTest, EmitsGeometryHeaderAndRows) {
    const auto r = run_cli("potential --atom He --field 0.06 --xmin 0.5 --xmax 20 --samples 4");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 6u);
    EXPECT_EQ(lines[0].rfind("# {\"f_a\":", 0), 0u);
    EXPECT_NE(lines[0].find("\"x_m\":"), std::string::npos);
    EXPECT_EQ(lines[1], "x_au,v_au,v_eff_au");
    double previous = 0.0;
    for (size_t i = 2; i < lines.size(); ++i) {
        const auto cells = split(lines[i]);
        ASSERT_EQ(cells.size(), 3u);
        const double x = std::stod(cells[0]);
        EXPECT_GT(x, previous);
        previous = x;
    }
}

TEST(CliPotentialTest, RowAtBarrierMaximum) {
    const auto r = run_cli("potential --atom He --field 0.06 --xmin 5.30330085889911 "
                           "--xmax 20 --samples 2");
    ASSERT_EQ(r.exit_code, 0);
    const auto lines = lines_of(r.out);
    ASSERT_GE(lines.size(), 3u);
    // same parse + evaluate path as the tool: byte-for-byte comparable
    const attoclock::AtomSpec helium{0.90357, 1.6875, "He"};
    const double x = 5.30330085889911;
    const std::string expected = format_g9(x) + "," +
                                 format_g9(attoclock::coulomb_potential(helium, x)) + "," +
                                 format_g9(attoclock::effective_potential(helium, 0.06, x));
    EXPECT_EQ(lines[2], expected);
    EXPECT_NE(lines[2].find("-0.636396103"), std::string::npos);
}

TEST(CliPotentialTest, ErrorPaths) {
    EXPECT_EQ(run_cli("potential --atom He --field 0.06 --xmin 5 --xmax 2 --samples 10")
                  .exit_code,
              2);
    EXPECT_EQ(run_cli("potential --atom He --field 0.06 --xmin 1 --xmax 2 --samples 1")
                  .exit_code,
              2);
    const auto bsi = run_cli("potential --atom He --field 0.2 --xmin 1 --xmax 2 --samples 4");
    EXPECT_EQ(bsi.exit_code, 3);
    EXPECT_NE(bsi.err.find("BSI"), std::string::npos);
    EXPECT_EQ(run_cli("potential --field 0.06 --xmin 1 --xmax 2 --samples 4").exit_code, 2);
    EXPECT_EQ(run_cli("potential --atom Xx --field 0.06 --xmin 1 --xmax 2 --samples 4")
                  .exit_code,
              2);
}

TEST(CliSweepTest, NonadiabaticDecreasing) {
    const auto r = run_cli("sweep --model nonadiabatic --atom He --fmin 0.02 --fmax 0.10 "
                           "--steps 5 --omega0 0.062");
    ASSERT_EQ(r.exit_code, 0);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 6u);
    EXPECT_EQ(lines[0],
              "field_au,tau_au,tau_as,delta_z_au,n_f,gamma_k,x_m_au,x_e_plus_au,x_E_au,status");
    double previous = 1e300;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split(lines[i]);
        ASSERT_EQ(cells.size(), 10u);
        const double tau_as = std::stod(cells[2]);
        EXPECT_LT(tau_as, previous);
        previous = tau_as;
        EXPECT_EQ(cells[9], "ok");
    }
}

TEST(CliSweepTest, QuantumLimitPoint) {
    // field a shade below F_a(He) = 0.120953888133: tau_as at the 13.385 limit
    const auto r = run_cli("sweep --model adiabatic --atom He --fmin 0.1209538881 "
                           "--fmax 0.1209538881 --steps 1 --omega0 0.062");
    ASSERT_EQ(r.exit_code, 0);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 2u);
    const double tau_as = std::stod(split(lines[1])[2]);
    EXPECT_NEAR(tau_as, 13.385, 0.02);
}

TEST(CliSweepTest, IntermediateDominatesNonadiabatic) {
    const std::string common =
        "--atom He --fmin 0.02 --fmax 0.10 --steps 5 --omega0 0.062";
    const auto base = run_cli("sweep --model nonadiabatic " + common);
    const auto inter = run_cli("sweep --model intermediate --delta-nu 2 " + common);
    ASSERT_EQ(base.exit_code, 0);
    ASSERT_EQ(inter.exit_code, 0);
    const auto base_lines = lines_of(base.out);
    const auto inter_lines = lines_of(inter.out);
    ASSERT_EQ(base_lines.size(), inter_lines.size());
    for (size_t i = 1; i < base_lines.size(); ++i) {
        EXPECT_GE(std::stod(split(inter_lines[i])[2]), std::stod(split(base_lines[i])[2]));
    }
}

TEST(CliSweepTest, ByteIdenticalReruns) {
    const std::string args = "sweep --model adiabatic --atom He-alt --fmin 0.03 --fmax 0.11 "
                             "--steps 17 --omega0 0.062 --stark";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    ASSERT_EQ(first.exit_code, 0);
    EXPECT_EQ(first.out, second.out);
}

TEST(CliSweepTest, DefaultsAndErrors) {
    const auto defaulted = run_cli("sweep --model nonadiabatic --atom He --fmin 0.06 "
                                   "--fmax 0.06 --steps 1");
    EXPECT_EQ(defaulted.exit_code, 0);
    EXPECT_NE(defaulted.err.find("0.062"), std::string::npos);

    EXPECT_EQ(run_cli("sweep --model bogus --atom He --fmin 0.02 --fmax 0.1 --steps 3")
                  .exit_code,
              2);
    EXPECT_EQ(run_cli("sweep --model nonadiabatic --atom He --fmin -0.1 --fmax 0.1 --steps 3")
                  .exit_code,
              2);
    EXPECT_EQ(run_cli("sweep --model intermediate --delta-nu 1 --delta-eps 0.1 --atom He "
                      "--fmin 0.02 --fmax 0.1 --steps 3")
                  .exit_code,
              2);

    const auto in_au = run_cli("sweep --model nonadiabatic --atom He --fmin 0.06 --fmax 0.06 "
                               "--steps 1 --omega0 0.062 --unit au");
    EXPECT_EQ(in_au.exit_code, 0);
    EXPECT_NE(in_au.err.find("1.11551852..1.11551852 au"), std::string::npos) << in_au.err;
    EXPECT_EQ(run_cli("sweep --model nonadiabatic --atom He --fmin 0.06 --fmax 0.06 "
                      "--steps 1 --omega0 0.062 --unit bogus")
                  .exit_code,
              2);
}

TEST(CliCompareTest, RoundTripIsExact) {
    const std::string args =
        "--model nonadiabatic --atom He --omega0 0.062";
    const auto swept = run_cli("sweep " + args + " --fmin 0.02 --fmax 0.10 --steps 9");
    ASSERT_EQ(swept.exit_code, 0);
    const auto path = write_temp("cli_roundtrip.csv", swept.out);
    const auto compared = run_cli("compare " + args + " --data " + path.string());
    ASSERT_EQ(compared.exit_code, 0) << compared.err;
    const auto report = nlohmann::json::parse(compared.out);
    EXPECT_EQ(report["n_points"].get<int>(), 9);
    EXPECT_EQ(report["weighted_rms_as"].get<double>(), 0.0);
    EXPECT_EQ(report["coverage"].get<double>(), 1.0);
    EXPECT_EQ(report["excluded_bsi"].get<int>(), 0);
}

TEST(CliCompareTest, BsiPointCounted) {
    const auto path = write_temp("cli_bsi.csv",
                                 "field_au,delay_as,err_minus_as,err_plus_as\n"
                                 "0.06,27.0,3.0,3.0\n"
                                 "0.13,10.0,3.0,3.0\n");
    const auto r = run_cli("compare --model nonadiabatic --atom He --omega0 0.062 --data " +
                           path.string());
    ASSERT_EQ(r.exit_code, 0);
    const auto report = nlohmann::json::parse(r.out);
    EXPECT_EQ(report["excluded_bsi"].get<int>(), 1);
    EXPECT_EQ(report["n_points"].get<int>(), 1);
}

TEST(CliCompareTest, KeldyshTimeFarFromData) {
    // tau_K(0.06) = 542 as against tens of attoseconds of data
    const std::string args = "--atom He --omega0 0.062";
    const auto swept =
        run_cli("sweep --model nonadiabatic " + args + " --fmin 0.04 --fmax 0.10 --steps 5");
    ASSERT_EQ(swept.exit_code, 0);
    const auto path = write_temp("cli_keldysh.csv", swept.out);
    const auto r = run_cli("compare --model keldysh " + args + " --data " + path.string());
    ASSERT_EQ(r.exit_code, 0);
    const auto report = nlohmann::json::parse(r.out);
    EXPECT_GT(report["weighted_rms_as"].get<double>(), 100.0);
}

TEST(CliCompareTest, IoErrors) {
    EXPECT_EQ(run_cli("compare --model nonadiabatic --atom He --omega0 0.062 "
                      "--data /nonexistent/file.csv")
                  .exit_code,
              4);
    const auto bad = write_temp("cli_bad.csv", "field_au,delay_as\n0.06,abc\n");
    EXPECT_EQ(run_cli("compare --model nonadiabatic --atom He --omega0 0.062 --data " +
                      bad.string())
                  .exit_code,
              4);
}

TEST(CliConvertTest, SingleConversions) {
    const auto au_time = run_cli("convert --au-time 1");
    EXPECT_EQ(au_time.exit_code, 0);
    EXPECT_EQ(au_time.out, "24.1888433 as\n");

    const auto angle = run_cli("convert --angle 0 --omega0 0.062");
    EXPECT_EQ(angle.exit_code, 0);
    EXPECT_EQ(angle.out, "0 as\n");

    const auto field = run_cli("convert --field 0.0534");
    EXPECT_EQ(field.exit_code, 0);
    EXPECT_EQ(field.out, "1.00074003e+14 W/cm^2\n");

    const auto three_deg = run_cli("convert --angle 3 --omega0 0.062");
    EXPECT_EQ(three_deg.exit_code, 0);
    EXPECT_EQ(three_deg.out, "20.4278205 as\n");
}

TEST(CliConvertTest, FlagValidation) {
    EXPECT_EQ(run_cli("convert --au-time 1 --field 0.05").exit_code, 2);
    EXPECT_EQ(run_cli("convert").exit_code, 2);
    EXPECT_EQ(run_cli("convert --field -0.05").exit_code, 3);
}

TEST(CliGeneralTest, HelpAndUnknown) {
    EXPECT_EQ(run_cli("--help").exit_code, 0);
    EXPECT_EQ(run_cli("bogus-subcommand").exit_code, 2);
}

TEST(CliGeneralTest, PresetsAndOverrides) {
    // explicit --ip/--zeff reproduce the H preset byte for byte
    const std::string tail = " --fmin 0.01 --fmax 0.06 --steps 4 --omega0 0.062";
    const auto preset = run_cli("sweep --model adiabatic --atom H" + tail);
    const auto manual = run_cli("sweep --model adiabatic --ip 0.5 --zeff 1.0" + tail);
    ASSERT_EQ(preset.exit_code, 0);
    EXPECT_EQ(preset.out, manual.out);

    // --zeff on top of a preset switches the He curve family
    const auto he_alt = run_cli("sweep --model nonadiabatic --atom He-alt" + tail);
    const auto he_zeff = run_cli("sweep --model nonadiabatic --atom He --zeff 1.344" + tail);
    ASSERT_EQ(he_alt.exit_code, 0);
    EXPECT_EQ(he_alt.out, he_zeff.out);

    EXPECT_EQ(run_cli("sweep --model adiabatic --ip 0.5" + tail).exit_code, 2);
    EXPECT_EQ(run_cli("sweep --model adiabatic --atom He --ellipticity 1.5" + tail).exit_code,
              2);
}

}  // namespace
