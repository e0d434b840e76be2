// Exercises the installed command-line surface end to end: output payloads,
// formats, and the exit-code contract (0 ok, 1 verification failure,
// 2 usage/parse, 3 domain).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "floorlab/io.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define EXPECT(cond, label)                                                    \
    do {                                                                       \
        if (!(cond)) {                                                         \
            std::cerr << "[FAIL] " << label << " at " << __FILE__ << ":"       \
                      << __LINE__ << "\n";                                     \
            ++g_failures;                                                      \
        }                                                                      \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string g_cli;
fs::path g_tmp;

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path out_file = g_tmp / ("out_" + std::to_string(counter++));
    const std::string cmd =
        "\"" + g_cli + "\" " + args + " > \"" + out_file.string() + "\" 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n')
            ++n;
    return n;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: floorlab_cli_contract <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    g_tmp = fs::temp_directory_path() / "floorlab_cli_contract";
    fs::remove_all(g_tmp);
    fs::create_directories(g_tmp);

    // eval
    {
        const RunResult r = run("eval -x 29/10 -n 2");
        EXPECT(r.exit_code == 0, "eval exit");
        EXPECT(r.output == "5\n", "eval value");
    }
    {
        const RunResult r = run("eval -x 4 -n 3 -m 2");
        EXPECT(r.exit_code == 0, "eval m=2 exit");
        EXPECT(r.output == "4096\n", "eval m=2 value");
    }
    EXPECT(run("eval -x 0/1 -n 1").exit_code == 3, "eval domain error -> 3");
    EXPECT(run("eval --point=-2 -n 1").exit_code == 3, "eval negative -> 3");
    EXPECT(run("eval -x 1.5 -n 1").exit_code == 2, "eval parse error -> 2");
    EXPECT(run("eval -x 1/0 -n 1").exit_code == 2, "eval zero den -> 2");
    EXPECT(run("eval -n 1").exit_code == 2, "eval missing -x -> 2");
    {
        const RunResult r = run("eval -x 29/10 -n 2 --format json");
        EXPECT(r.exit_code == 0, "eval json exit");
        const auto j = floorlab::io::json::parse(r.output);
        EXPECT(j["command"] == "eval", "eval json command echo");
        EXPECT(j["parameters"]["x"] == "29/10", "eval json params");
        EXPECT(j["results"]["value"] == "5", "eval json value");
    }

    // limits
    {
        const RunResult r = run("limits -x 10/3 -n 2");
        EXPECT(r.exit_code == 0, "limits exit");
        EXPECT(r.output == "left=9 right=10 jump=1\n", "limits at 10/3");
    }
    EXPECT(run("limits -x 3 -n 2").output == "left=5 right=9 jump=4\n",
           "limits at 3");
    EXPECT(run("limits -x 17/5 -n 3").output == "left=33 right=34 jump=1\n",
           "limits at 17/5");
    {
        const RunResult r = run("limits -x 10/3 -n 2 --format json");
        const auto j = floorlab::io::json::parse(r.output);
        EXPECT(j["results"]["left"] == "9" && j["results"]["right"] == "10" &&
                   j["results"]["is_jump"] == true,
               "limits json payload");
    }

    // discont
    {
        const RunResult r = run("discont -n 3 -a 2 -b 3 --format csv");
        EXPECT(r.exit_code == 0, "discont csv exit");
        EXPECT(count_lines(r.output) == 6, "discont csv header + 5 rows");
        EXPECT(r.output.find("9/4,8,9,1\n") != std::string::npos,
               "discont csv row 9/4");
        EXPECT(r.output.find("5/2,9,12,3\n") != std::string::npos,
               "discont csv row 5/2");
    }
    {
        const RunResult r = run("discont -n 2 -a 1 -b 5 --format json");
        const auto j = floorlab::io::json::parse(r.output);
        EXPECT(j["results"]["discontinuities"].size() == 10,
               "discont json 10 entries");
        EXPECT(j["results"]["count"] == 10, "discont json count");
    }
    EXPECT(run("discont -n 2 -a 2 -b 2").exit_code == 3,
           "discont empty interval -> 3");
    EXPECT(run("discont -n 2 -a 1/2 -b 2").exit_code == 3, "discont a < 1 -> 3");
    EXPECT(run("discont -n 2 -a 2 -b 3 -m 2").exit_code == 2,
           "discont has no -m flag -> 2");

    // partition
    {
        const RunResult r = run("partition -n 2 -a 4 -b 5 --format csv");
        EXPECT(r.exit_code == 0, "partition csv exit");
        EXPECT(count_lines(r.output) == 5, "partition csv header + 4 rows");
        EXPECT(r.output.find("4,17/4,16\n") != std::string::npos,
               "partition csv first row");
    }

    // render
    {
        const fs::path svg_path = g_tmp / "plot.svg";
        const RunResult r =
            run("render -n 2 -a 2 -b 4 -o \"" + svg_path.string() + "\"");
        EXPECT(r.exit_code == 0, "render exit");
        std::ifstream in(svg_path);
        std::string first;
        std::getline(in, first);
        EXPECT(first.rfind("<svg ", 0) == 0, "render writes svg");
    }
    EXPECT(run("render -n 2 -a 1/2 -b 3").exit_code == 3, "render a < 1 -> 3");

    // verify
    EXPECT(run("verify --claims T1,T4 --kmax 10 --nmax 6").exit_code == 0,
           "verify proved claims -> 0");
    EXPECT(run("verify --claims T5 --interval 1:6 --nmax 5").exit_code == 0,
           "verify nesting claim -> 0");
    {
        const fs::path report_path = g_tmp / "report.json";
        const RunResult r = run("verify --claims C7 --kmax 5 -o \"" +
                                report_path.string() + "\"");
        EXPECT(r.exit_code == 1, "verify conjecture mismatch -> 1");
        std::ifstream in(report_path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        const auto j = floorlab::io::json::parse(buf.str());
        EXPECT(j["results"]["claims"][0]["status"] == "mismatch",
               "verify report carries the mismatch");
    }
    EXPECT(run("verify --claims Bogus").exit_code == 2, "verify bad claim -> 2");

    // usage errors
    EXPECT(run("").exit_code == 2, "missing subcommand -> 2");
    EXPECT(run("eval -x 2 -n 1 --nonsense").exit_code == 2, "unknown flag -> 2");
    EXPECT(run("--help").exit_code == 0, "help -> 0");

    if (g_failures == 0) {
        std::cout << "cli contract: all checks passed\n";
        return 0;
    }
    std::cerr << "cli contract: " << g_failures << " check(s) failed\n";
    return 1;
}
