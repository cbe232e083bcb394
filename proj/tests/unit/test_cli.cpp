#include "doctest.h"

#include "command.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

using cpsurgery::cli::Outcome;
using cpsurgery::cli::run;
namespace fs = std::filesystem;

namespace {

struct ScratchCache {
    fs::path dir;
    ScratchCache()
    {
        dir = fs::temp_directory_path() / ("cpsurgery-cli-" + std::to_string(::getpid()));
        fs::remove_all(dir);
        ::setenv("CPSURGERY_CACHE_DIR", dir.c_str(), 1);
    }
    ~ScratchCache()
    {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
};

std::string strip_ws(std::string s)
{
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\n' && c != '\t')
            out += c;
    for (size_t p; (p = out.find("\\\\}")) != std::string::npos;)
        out.erase(p, 2);
    return out;
}

size_t count_diff_lines(const std::string& s)
{
    size_t n = 0;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        n += line.rfind("  [", 0) == 0 ? 1 : 0;
    return n;
}

const std::vector<std::vector<std::string>> sample_commands{
    {"ranks", "--n", "6", "--k", "2"},
    {"ranks", "--n", "5", "--k", "4", "--format", "json"},
    {"kerj", "--n", "4", "--l", "4"},
    {"kerj", "--n", "17", "--l", "1", "--format", "csv"},
    {"kerj", "--n", "5", "--l", "0", "--coords", "24,0"},
    {"obstruction", "--n", "2", "--l", "2", "--include-sphere", "--format", "json"},
    {"obstruction", "--n", "3", "--l", "3", "--format", "latex"},
    {"pontryagin", "--n", "4", "--l", "2", "--include-sphere"},
    {"forgetful", "--n", "6", "--l", "1", "--index2-mode", "--format", "json"},
    {"forgetful", "--n", "6", "--l", "2", "--format", "latex"},
    {"congruences", "--n", "6", "--l", "3", "--format", "latex"},
    {"check", "--n", "6", "--l", "1", "--invariants", "-2,44,-662", "--format", "json"},
};

}  // namespace

TEST_CASE("kerj text output lists the generators")
{
    ScratchCache cache;
    Outcome o = run({"kerj", "--n", "4", "--l", "4", "--format", "text"});
    CHECK(o.exit_code == 0);
    CHECK(o.out.find("ξ_1 = 504·g·μ0 + 398·g·μ0^2") != std::string::npos);
    CHECK(o.out.find("ξ_2 = 480·g·μ0^2") != std::string::npos);
}

TEST_CASE("check verdicts")
{
    ScratchCache cache;
    Outcome ok = run({"check", "--n", "6", "--l", "1", "--invariants", "0,0,0"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("sufficient_pass") != std::string::npos);
    Outcome nec = run({"check", "--n", "6", "--l", "1", "--invariants", "-2,44,-662"});
    CHECK(nec.out.find("smoothable_necessary_pass") != std::string::npos);
    Outcome bad = run({"check", "--n", "6", "--l", "1", "--invariants", "1,0,0"});
    CHECK(bad.exit_code == 0);
    CHECK(bad.out.find("fail(row 1)") != std::string::npos);
}

TEST_CASE("validation errors exit 1")
{
    ScratchCache cache;
    CHECK(run({}).exit_code == 1);
    CHECK(run({"frobnicate"}).exit_code == 1);
    CHECK(run({"kerj", "--n", "4"}).exit_code == 1);
    CHECK(run({"kerj", "--n", "4", "--l", "4", "--format", "yaml"}).exit_code == 1);
    CHECK(run({"obstruction", "--n", "2", "--l", "1"}).exit_code == 1);
    CHECK(run({"check", "--n", "6", "--l", "1", "--invariants", "0,0"}).exit_code == 1);
    CHECK(run({"check", "--n", "6", "--l", "1", "--invariants", "0,x,0"}).exit_code == 1);
    CHECK(run({"ranks", "--n", "-3", "--k", "2"}).exit_code == 1);
    Outcome t8 = run({"reproduce", "--table", "8"});
    CHECK(t8.exit_code == 1);
    CHECK(t8.err.find("8") != std::string::npos);
}

TEST_CASE("output is deterministic and the cache is transparent")
{
    ScratchCache cache;
    for (const auto& cmd : sample_commands) {
        CAPTURE(cmd[0]);
        auto uncached = cmd;
        uncached.push_back("--no-cache");
        Outcome a = run(uncached);
        Outcome b = run(uncached);
        Outcome first = run(cmd);
        Outcome second = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(first.out == a.out);
        CHECK(second.out == a.out);
        CHECK(second.exit_code == first.exit_code);
    }
    CHECK_FALSE(fs::is_empty(cache.dir));
}

TEST_CASE("a corrupted cache entry is recomputed")
{
    ScratchCache cache;
    std::vector<std::string> cmd{"kerj", "--n", "6", "--l", "2", "--format", "json"};
    Outcome fresh = run(cmd);
    for (const auto& e : fs::directory_iterator(cache.dir)) {
        std::ofstream out(e.path(), std::ios::trunc);
        out << "garbage";
    }
    CHECK(run(cmd).out == fresh.out);
}

TEST_CASE("reproduce passes on the shipped golden files")
{
    ScratchCache cache;
    Outcome o = run({"reproduce", "--golden-dir", CPSURGERY_TEST_GOLDEN_DIR});
    CHECK(o.exit_code == 0);
    CHECK(o.out.find("all tables pass") != std::string::npos);
    for (int t = 1; t <= 7; ++t)
        CHECK(o.out.find("Table " + std::to_string(t) + ": PASS") != std::string::npos);
}

TEST_CASE("reproduce restricted to one table")
{
    ScratchCache cache;
    Outcome o = run({"reproduce", "--table", "3", "--golden-dir", CPSURGERY_TEST_GOLDEN_DIR});
    CHECK(o.exit_code == 0);
    CHECK(o.out.find("Table 3: PASS") != std::string::npos);
    for (int t : {1, 2, 4, 5, 6, 7})
        CHECK(o.out.find("Table " + std::to_string(t) + ":") == std::string::npos);
}

TEST_CASE("reproduce reports exactly the tampered cell")
{
    ScratchCache cache;
    const fs::path gold = cache.dir / "golden";
    fs::create_directories(gold);
    for (const auto& e : fs::directory_iterator(CPSURGERY_TEST_GOLDEN_DIR))
        fs::copy_file(e.path(), gold / e.path().filename());
    nlohmann::ordered_json j;
    {
        std::ifstream in(gold / "table3.json");
        in >> j;
    }
    bool done = false;
    for (auto& row : j["rows"])
        if (row["n"] == 17 && row["l"] == 1) {
            row["generators"][8][8] = 28729;
            done = true;
        }
    REQUIRE(done);
    {
        std::ofstream out(gold / "table3.json", std::ios::trunc);
        out << j.dump(2);
    }
    Outcome o = run({"reproduce", "--golden-dir", gold.string()});
    CHECK(o.exit_code == 2);
    CHECK(o.out.find("Table 3: FAIL") != std::string::npos);
    CHECK(count_diff_lines(o.out) == 1);
    CHECK(o.out.find("expected 28729, got 28728") != std::string::npos);
    for (int t : {1, 2, 4, 5, 6, 7})
        CHECK(o.out.find("Table " + std::to_string(t) + ": PASS") != std::string::npos);

    Outcome js = run({"reproduce", "--table", "3", "--format", "json", "--golden-dir", gold.string()});
    CHECK(js.exit_code == 2);
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["pass"] == false);
    CHECK(doc["tables"][0]["diffs"].size() == 1);
}

TEST_CASE("reproduced table 2 latex matches the printed table modulo whitespace")
{
    ScratchCache cache;
    Outcome o = run({"reproduce", "--table", "2", "--format", "latex", "--golden-dir", CPSURGERY_TEST_GOLDEN_DIR});
    REQUIRE(o.exit_code == 0);
    const std::string printed = R"(\begin{tabular}{|c|c|}\hline
             Manifold & Congruences \\ \hline
             \thead{$X^{14}\simeq_{\partial}\cp^6\times D^2$ \\ } & \thead{$\overline{\sigma}_{1,2}\equiv0\mod2, \overline{\sigma}_{3,2}+22\overline{\sigma}_{1,2}\equiv0\mod28$ \\
             $\overline{\sigma}_{5,2}+\dfrac{158\overline{\sigma}_{3,2}+1159\overline{\sigma}_{1,2}}{7}\equiv0\mod992$} \\ 
             \hline
             \thead{$X^{16}\simeq_{\partial}\cp^6\times D^4$} & \thead{$\overline{\sigma}_{0,4}\equiv0\mod2, \overline{\sigma}_{2,4}-\overline{\sigma}_{0,4}\equiv0\mod28$ \\
             $\overline{\sigma}_{4,4}+\dfrac{102\overline{\sigma}_{2,4}-109\overline{\sigma}_{0,4}}{7} \equiv0\mod496$ \\
             $\dfrac{351\overline{\sigma}_{4,4}}{31} + \dfrac{6443\overline{\sigma}_{0,4} - 9117\overline{\sigma}_{2,4}}{217}\equiv0\mod 8128$} \\ 
             \hline
             \thead{$X^{18}\simeq_{\partial}\cp^6\times D^6$} & \thead{$\overline{\sigma}_{1,6}\equiv0\mod28, \overline{\sigma}_{3,6}+\dfrac{188}{7}\overline{\sigma}_{1,6}\equiv0\mod992$ \\
             $\overline{\sigma}_{5,6}-\dfrac{23418}{217}\overline{\sigma}_{1,6}+\dfrac{319}{31}\overline{\sigma}_{3,6}\equiv0\mod8128$} \\ \hline
        \end{tabular})";
    std::string ours = o.out;
    ours.erase(0, ours.find('\n') + 1);  // "% Table 2" comment line
    CHECK(strip_ws(ours) == strip_ws(printed));
}

TEST_CASE("the installed binary maps exit codes")
{
    ScratchCache cache;
    auto status = [](const std::string& args, std::string* out = nullptr) {
        std::string cmd = std::string(CPSURGERY_TOOL_PATH) + " " + args + " 2>/dev/null";
        FILE* p = ::popen(cmd.c_str(), "r");
        REQUIRE(p != nullptr);
        std::string buf;
        char chunk[4096];
        for (size_t got; (got = std::fread(chunk, 1, sizeof chunk, p)) > 0;)
            buf.append(chunk, got);
        int st = ::pclose(p);
        if (out)
            *out = buf;
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    std::string out;
    CHECK(status("check --n 6 --l 1 --invariants 0,0,0", &out) == 0);
    CHECK(out.find("sufficient_pass") != std::string::npos);
    CHECK(status("kerj --n 4") == 1);
    CHECK(status("nonsense") == 1);
    CHECK(status("reproduce --table 8") == 1);
    std::string direct = run({"kerj", "--n", "17", "--l", "1"}).out;
    CHECK(status("kerj --n 17 --l 1", &out) == 0);
    CHECK(out == direct);
}
