#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "setrec/csv.hpp"

namespace fs = std::filesystem;

namespace {

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string command = std::string(SETREC_CLI_PATH) + " " + args +
                                " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() /
                         ("setrec_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("bound command prints the closed-form error") {
    int code = -1;
    const std::string out = run_cli("bound knots=midpoints:2", code);
    CHECK(code == 0);
    CHECK(out == "0.125\n");

    const std::string expl = run_cli(
        "bound omega.kind=power omega.c=1 omega.alpha=1 weight.kind=constant "
        "knots=explicit:0.25,0.75",
        code);
    CHECK(code == 0);
    CHECK(expl == "0.125\n");
}

TEST_CASE("noisy command matches the shifted closed form") {
    int code = -1;
    const std::string out = run_cli(
        "noisy knots=midpoints:4 epsilons=uniform:0.05", code);
    CHECK(code == 0);
    CHECK(std::fabs(std::stod(out) - 0.1125) <= 1e-10);
}

TEST_CASE("study output is byte-identical across runs") {
    int code1 = -1, code2 = -1;
    const std::string args =
        "study n_list=1,2,4 weight.kind=polynomial weight.coeffs=0,1 seed=7";
    const std::string first = run_cli(args, code1);
    const std::string second = run_cli(args, code2);
    CHECK(code1 == 0);
    CHECK(code2 == 0);
    CHECK(first == second);
    CHECK(first.rfind("n,error,closed_form,ratio\n", 0) == 0);
}

TEST_CASE("exit codes distinguish failure classes") {
    int code = -1;
    run_cli("bound knots=midpoints:2 bogus=1", code);
    CHECK(code == 2);  // unknown key
    run_cli("frobnicate", code);
    CHECK(code == 2);  // unknown command
    run_cli("bound", code);
    CHECK(code == 2);  // missing required key
    run_cli("bound /nonexistent/setrec.cfg", code);
    CHECK(code == 4);  // unreadable config file
    const fs::path dir = temp_dir();
    run_cli("recover knots=midpoints:1 samples=" + (dir / "missing.csv").string() +
                " output=" + (dir / "out.csv").string(),
            code);
    CHECK(code == 4);  // unreadable sample file
}

TEST_CASE("selftest reports its tally and exits cleanly") {
    int code = -1;
    const std::string out = run_cli("selftest", code);
    CHECK(code == 0);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out.find("passed=") != std::string::npos);
    CHECK(out.find(" failed=0") != std::string::npos);
}

TEST_CASE("integrate writes a support-function table") {
    const fs::path dir = temp_dir();
    const fs::path cloud = dir / "square.csv";
    const fs::path body = dir / "body.csv";
    setrec::write_point_cloud(cloud.string(),
                              setrec::PointCloud({{1.0, 1.0},
                                                  {-1.0, 1.0},
                                                  {-1.0, -1.0},
                                                  {1.0, -1.0}}));
    int code = -1;
    const std::string out = run_cli("integrate trajectory.kind=constant "
                                        "trajectory.cloud=" + cloud.string() +
                                        " output=" + body.string(),
                                    code);
    CHECK(code == 0);
    CHECK(std::stod(out) >= 0.0);
    const std::vector<std::string> lines = read_lines(body);
    REQUIRE(lines.size() == 721);
    CHECK(lines[0] == "direction_index,support_value");
    // direction 0 is +e1; the unit square has support 1 there.
    CHECK(lines[1] == "0,1");
}

TEST_CASE("point cloud CSV round trips exactly") {
    const fs::path dir = temp_dir();
    const fs::path path = dir / "cloud.csv";
    const setrec::PointCloud original({{0.1, -2.0 / 3.0}, {1e-17, 12345.6789}});
    setrec::write_point_cloud(path.string(), original);
    const setrec::PointCloud loaded = setrec::read_point_cloud(path.string());
    REQUIRE(loaded.size() == original.size());
    REQUIRE(loaded.dim() == original.dim());
    for (std::size_t i = 0; i < loaded.size(); ++i)
        for (std::size_t d = 0; d < loaded.dim(); ++d)
            CHECK(loaded[i][d] == original[i][d]);

    std::ofstream commented(dir / "commented.csv");
    commented << "# leading comment\n\n0.5,0.25\n# inline\n-1,2\n";
    commented.close();
    const setrec::PointCloud parsed =
        setrec::read_point_cloud((dir / "commented.csv").string());
    CHECK(parsed.size() == 2);
    CHECK(parsed[1][0] == -1.0);

    CHECK_THROWS_AS(setrec::read_point_cloud((dir / "absent.csv").string()),
                    setrec::IoError);
}
