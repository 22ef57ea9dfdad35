#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the built executable, capturing stdout and stderr together.
Run run(const std::string& args) {
    const std::string cmd = std::string("\"") + ORBICULAR_CLI + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kData = ORBICULAR_DATA;

}  // namespace

TEST_CASE("solve prints the ranking") {
    const auto r = run("solve " + kData + "/example2.json --op hwa --zeta 1.5");
    CHECK(r.code == 0);
    CHECK(r.out.find("ranking: ") != std::string::npos);
    CHECK(r.out == run("solve " + kData + "/example2.json --op hwa --zeta 1.5").out);
}

TEST_CASE("validate") {
    const auto ok = run("validate " + kData + "/example2.json");
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("ok: 5 alternatives", 0) == 0);

    const auto bad = run("validate " + kData + "/bad_grade.json");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("'P2'") != std::string::npos);
    CHECK(bad.out.find("'L3'") != std::string::npos);
    CHECK(bad.out.find("'g2'") != std::string::npos);

    const auto strict = run("validate " + kData + "/example2_enforce.json");
    CHECK(strict.code == 1);
    CHECK(strict.out.find("ConstraintViolation") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate x").code == 2);
    CHECK(run("solve " + kData + "/example2.json --op median").code == 2);
    CHECK(run("sweep " + kData + "/example2.json --zetas 1,abc").code == 2);
    CHECK(run("solve /nonexistent.json").code == 1);
    CHECK(run("solve " + kData + "/example2.json --zeta -1").code == 1);
}

TEST_CASE("sweep") {
    const auto r = run("sweep " + kData + "/example2.json --zetas 1.5,2,2.5,3,3.5,4,4.5,5,5.5,6");
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++rows;
    }
    CHECK(rows == 10);

    const auto csv = run("sweep " + kData + "/example2.json --csv --zetas 2,3");
    CHECK(csv.out.rfind("zeta,alternative,score\n", 0) == 0);
}

TEST_CASE("form") {
    const auto r = run("form " + kData + "/example2.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("P2,L1,") != std::string::npos);
    CHECK(r.out.find("(0.33, 0.68, 0.49; 0.47)") != std::string::npos);
}

TEST_CASE("report is reproducible") {
    const auto base = fs::temp_directory_path() / "orbicular_cli_report";
    fs::remove_all(base);
    const auto a = run("report " + kData + "/example2.json --out " + (base / "a").string());
    const auto b = run("report " + kData + "/example2.json --out " + (base / "b").string());
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    for (const char* name : {"report.txt", "report.json", "scores_hwa.csv", "scores_hwg.csv"}) {
        INFO(name);
        std::ifstream fa(base / "a" / name);
        std::ifstream fb(base / "b" / name);
        std::stringstream sa;
        std::stringstream sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        CHECK(!sa.str().empty());
        CHECK(sa.str() == sb.str());
    }
    const auto plain = run("report " + kData + "/example2.json --zetas \"\" --op hwg --out " +
                           (base / "c").string());
    CHECK(plain.code == 0);
    CHECK_FALSE(fs::exists(base / "c" / "scores_hwa.csv"));
}
