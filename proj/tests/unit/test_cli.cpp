#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run(const std::string& args)
{
    const std::string cmd = std::string(LEIBNIZ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& h, const std::string& n) { return h.find(n) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST(Cli, CheckAndCohomology)
{
    const CliResult check = run("check lambda6");
    EXPECT_EQ(check.code, 0);
    EXPECT_TRUE(contains(check.out, "Leibniz identity: OK"));

    const CliResult coh = run("cohomology lambda6 --degree 2");
    EXPECT_EQ(coh.code, 0);
    EXPECT_TRUE(contains(coh.out, "dim ZL^2 = 8, dim BL^2 = 6, dim HL^2 = 2"));

    const CliResult coh3 = run("cohomology lambda6 --degree 3");
    EXPECT_EQ(coh3.code, 0);
    EXPECT_TRUE(contains(coh3.out, "MISMATCH"));
}

TEST(Cli, VersalAndPushForward)
{
    const CliResult v = run("versal lambda6 --reps paper");
    EXPECT_EQ(v.code, 0);
    EXPECT_TRUE(contains(v.out, "[e_1,e_3] = e_2 + s*e_1"));

    const CliResult i = run("pushforward lambda6 --reps paper --map s=0");
    EXPECT_EQ(i.code, 0);
    EXPECT_TRUE(contains(i.out, "[e_1,e_3] = e_2\n"));
    EXPECT_TRUE(contains(i.out, "[e_2,e_3] = -t*e_1"));

    const CliResult ii = run("pushforward lambda6 --reps paper --map t=0");
    EXPECT_EQ(ii.code, 0);
    EXPECT_FALSE(contains(ii.out, "[e_2,e_3]"));
}

TEST(Cli, JsonAlgebraFileAndJsonOutput)
{
    const std::string path = temp_file("leibniz_cli_heis.json", R"({"dim": 3, "brackets": [
        {"left": 1, "right": 2, "value": [{"basis": 3, "coeff": "1"}]},
        {"left": 2, "right": 1, "value": [{"basis": 3, "coeff": "-1"}]}]})");
    const CliResult r = run("cohomology " + path + " --output json");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "\"dim_cohomology\""));
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("cohomology lambda6 --degree 0").code, 1);
    EXPECT_EQ(run("check /nonexistent.json").code, 1);

    const CliResult bad_poly = run("pushforward lambda6 --map s=t+");
    EXPECT_EQ(bad_poly.code, 1);
    EXPECT_TRUE(contains(bad_poly.out, "column"));

    const std::string broken = temp_file("leibniz_cli_broken.json", "{\n  \"dim\": 2,\n  oops\n}");
    const CliResult bad_json = run("check " + broken);
    EXPECT_EQ(bad_json.code, 1);
    EXPECT_TRUE(contains(bad_json.out, "line 3"));

    // Constant term in a base map.
    EXPECT_EQ(run("pushforward lambda6 --map s=1").code, 2);

    const std::string non_leibniz = temp_file("leibniz_cli_bad.json", R"({"dim": 1, "brackets": [
        {"left": 1, "right": 1, "value": [{"basis": 1, "coeff": "1"}]}]})");
    EXPECT_EQ(run("check " + non_leibniz).code, 0);
    EXPECT_EQ(run("cohomology " + non_leibniz).code, 2);
}
