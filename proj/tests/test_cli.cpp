#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SDCODES_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("sdcodes_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p) << content;
    return p.string();
}

std::string golden(const std::string& name) {
    return (fs::path(GOLDEN_DIR) / name).string();
}

}  // namespace

TEST_CASE("tables match their golden files") {
    for (const char* t : {"eq1", "t1", "t2", "t3", "t4", "t5"}) {
        RunResult r = run(std::string("tables ") + t + " --compare " +
                          golden(std::string(t) + ".txt"));
        INFO(t, ": ", r.out);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("cells match") != std::string::npos);
    }
}

TEST_CASE("a corrupted expectation fails on the first differing cell") {
    std::ifstream in(golden("t1.txt"));
    std::stringstream content;
    content << in.rdbuf();
    std::string text = content.str();
    auto pos = text.find("A_38 = 43418963608488");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 21, "A_38 = 43420813336368");
    std::string bad = write_file("t1_bad.txt", text);
    RunResult r = run("tables t1 --compare " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("mismatch at A_38") != std::string::npos);
    CHECK(r.out.find("43420813336368") != std::string::npos);
    CHECK(r.out.find("43418963608488") != std::string::npos);
}

TEST_CASE("output is byte stable across invocations") {
    RunResult a = run("tables t4");
    RunResult b = run("tables t4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("shadow-cases 5 --json");
    RunResult d = run("shadow-cases 5 --json");
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("shadow-cases 0").exit_code == 2);
    CHECK(run("tables nosuch").exit_code == 2);
    CHECK(run("analyze /nonexistent/file").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("design somefile").exit_code == 2);  // missing required flags
    RunResult help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("tables") != std::string::npos);
}

TEST_CASE("shadow case analysis prints certificates") {
    RunResult r = run("shadow-cases 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("B_19 = -12397") != std::string::npos);
    CHECK(r.out.find("B_19 = -2002") != std::string::npos);
    CHECK(r.out.find("B_19 = -252") != std::string::npos);
    CHECK(r.out.find("shadow min weight 23") != std::string::npos);
    CHECK(r.out.find("1 of 4 cases consistent") != std::string::npos);
    CHECK(r.out.find("A_22 = 1534767") != std::string::npos);
    CHECK(r.out.find("B_59 = 169008544553322240") != std::string::npos);
}

TEST_CASE("analyze reports the tiny self-dual code") {
    RunResult exp = run("catalog i2");
    REQUIRE(exp.exit_code == 0);
    std::string path = write_file("i2.txt", exp.out);
    RunResult r = run("analyze " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("self-dual: yes") != std::string::npos);
    CHECK(r.out.find("type: I") != std::string::npos);
    CHECK(r.out.find("W = 1 + y^2") != std::string::npos);
    CHECK(r.out.find("shadow = 2y") != std::string::npos);
}

TEST_CASE("fixed command reports the decomposition") {
    RunResult exp = run("catalog golay24");
    std::string g24 = write_file("g24.txt", exp.out);
    RunResult r = run("fixed " + g24 +
                      " \"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dim F = 1  dim E = 11") != std::string::npos);
    CHECK(r.out.find("projection: [2, 1]") != std::string::npos);
    CHECK(r.out.find("23-(1;1)") != std::string::npos);

    RunResult bad = run("fixed " + g24 + " \"(1,2)\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("not an automorphism") != std::string::npos);
}

TEST_CASE("design command verifies the octads") {
    RunResult exp = run("catalog golay24");
    std::string g24 = write_file("g24d.txt", exp.out);
    RunResult r = run("design " + g24 + " --weight 8 --t 5 --verify exact");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5-(24, 8, 1) design") != std::string::npos);
    CHECK(r.out.find("759 253 77 21 5 1") != std::string::npos);

    RunResult noseed = run("design " + g24 + " --weight 8 --t 5 --verify sample");
    CHECK(noseed.exit_code == 2);
    RunResult seeded =
        run("design " + g24 + " --weight 8 --t 5 --verify sample --seed 9 --trials 100");
    CHECK(seeded.exit_code == 0);
}

TEST_CASE("construction commands pipe into each other") {
    RunResult exp = run("catalog golay24");
    std::string g24 = write_file("g24c.txt", exp.out);
    RunResult ch = run("child " + g24 + " 22 23");
    CHECK(ch.exit_code == 0);
    std::string child_path = write_file("child.txt", ch.out);
    RunResult an = run("analyze " + child_path);
    CHECK(an.out.find("length 22  dimension 11") != std::string::npos);
    CHECK(an.out.find("min distance: 6") != std::string::npos);

    RunResult ext = run("extend " + child_path);
    CHECK(ext.exit_code == 0);
    std::string ext_path = write_file("ext.txt", ext.out);
    RunResult an2 = run("analyze " + ext_path);
    CHECK(an2.out.find("type: II") != std::string::npos);
    CHECK(an2.out.find("min distance: 8") != std::string::npos);

    RunResult refuse = run("extend " + g24);
    CHECK(refuse.exit_code == 1);
    CHECK(refuse.out.find("refused") != std::string::npos);

    std::string vec = write_file("u.txt", "110000000000000000000000\n");
    RunResult nb = run("neighbor " + g24 + " " + vec);
    CHECK(nb.exit_code == 0);
    std::string odd = write_file("odd.txt", "100000000000000000000000\n");
    RunResult nodd = run("neighbor " + g24 + " " + odd);
    CHECK(nodd.exit_code == 1);

    CHECK(run("child " + g24 + " 5 5").exit_code == 2);
}

TEST_CASE("exclusion run over candidate directories") {
    std::string lp = write_file("lp.txt", "4\n(1,2)(3,4)\n");
    std::string lq = write_file("lq.txt", "4\n(1,3)(2,4)\n");
    fs::path dd = scratch_dir() / "dset";
    fs::path ee = scratch_dir() / "eset";
    fs::create_directories(dd);
    fs::create_directories(ee);
    RunResult i2txt = run("catalog i2");
    std::ofstream(dd / "d0.txt") << i2txt.out;
    std::ofstream(ee / "e0.txt") << i2txt.out;
    RunResult keep = run("exclude --layout-p " + lp + " --layout-q " + lq + " --dset " +
                         dd.string() + " --eset " + ee.string() + " --threshold 3");
    CHECK(keep.exit_code == 0);
    CHECK(keep.out.find("excluded: no") != std::string::npos);
    RunResult kill = run("exclude --layout-p " + lp + " --layout-q " + lq + " --dset " +
                         dd.string() + " --eset " + ee.string() + " --threshold 5");
    CHECK(kill.exit_code == 0);
    CHECK(kill.out.find("witness of weight 4") != std::string::npos);
    CHECK(kill.out.find("excluded: yes") != std::string::npos);
}

TEST_CASE("catalog exports layouts that feed back in") {
    RunResult lay = run("catalog golay24 --cycles order6");
    CHECK(lay.exit_code == 0);
    CHECK(lay.out.substr(0, 3) == "24\n");
    CHECK(run("catalog nosuch").exit_code == 2);
    CHECK(run("catalog golay24 --cycles nosuch").exit_code == 2);
    RunResult list = run("catalog");
    CHECK(list.out.find("golay24") != std::string::npos);
    CHECK(list.out.find("6-(4;0)") != std::string::npos);
}

TEST_CASE("discrepancy registry names locations and both values") {
    RunResult r = run("discrepancies");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("8885") != std::string::npos);
    CHECK(r.out.find("8855") != std::string::npos);
    CHECK(r.out.find("[112, 59, 22]") != std::string::npos);
    CHECK(r.out.find("[118, 59, 22]") != std::string::npos);
    CHECK(r.out.find("Question 30") != std::string::npos);
    CHECK(r.out.find("11/164") != std::string::npos);
    CHECK(r.out.find("11/64") != std::string::npos);
    RunResult j = run("discrepancies --json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"printed\"") != std::string::npos);
}

TEST_CASE("json mode emits parseable structures") {
    RunResult r = run("tables t5 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"51359\"") != std::string::npos);
    RunResult f = run("tables t3 --json");
    CHECK(f.out.find("\"rows\"") != std::string::npos);
}
