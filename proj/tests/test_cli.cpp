#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BERGMAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("moments csv lists the lambda_0 values") {
    auto res = run("moments --weight 'alpha=0;M=one' --n-max 4");
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("n,I_n,err_n\n", 0) == 0);
    CHECK(res.out.find("0,0.500000000000000") != std::string::npos);
    CHECK(res.out.find("4,0.100000000000000") != std::string::npos);
    CHECK(res.out.back() == '\n');
}

TEST_CASE("identical invocations produce identical bytes") {
    const char* args = "bv --weight 'alpha=0;M=poly-r2:2,-1' --n-max 64 --format json";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("kernel json includes the closed form for lambda_alpha") {
    auto res = run("kernel --weight 'alpha=1;M=one' --z 0 --w 0 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"series\":[0.63661977236758138,0]") != std::string::npos);
    CHECK(res.out.find("\"closed\":") != std::string::npos);

    auto general = run("kernel --weight 'alpha=0;M=poly-r2:2,-1' --z 0.1 --w 0.2 --format json");
    CHECK(general.exit_code == 0);
    CHECK(general.out.find("\"closed\":") == std::string::npos);
}

TEST_CASE("project reproduces polynomial coefficients as [re,im] pairs") {
    auto res = run("project --weight 'alpha=0;M=poly-r2:2,-1' --fn holo-poly:3,0,2 "
                   "--grid-r 32 --grid-k 64 --degree 4 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"coeffs\":[[3,") != std::string::npos);
    CHECK(res.out.find("[2.000000000000000") != std::string::npos);
}

TEST_CASE("identity-check reports the residual") {
    auto res = run("identity-check --weight 'alpha=0;M=poly-r2:2,-1' --fn mono:1,0 "
                   "--grid-r 32 --grid-k 64 --degree 4 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"residual\":") != std::string::npos);
    CHECK(res.out.find("\"pass\":true") != std::string::npos);
    CHECK(res.out.find("[0.4444444444444") != std::string::npos);
}

TEST_CASE("usage errors exit with status 1") {
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("moments").exit_code == 1); // missing --weight
    CHECK(run("moments --weight 'alpha=-3;M=one'").exit_code == 1);
    CHECK(run("moments --weight 'alpha=0;M=one' --format yaml").exit_code == 1);
    CHECK(run("moments --weight 'alpha=0;M=one' --grid-k 12").exit_code == 1);
    CHECK(run("sn --weight 'alpha=0;M=one' --fn mono:1,0 --n-max 8").exit_code == 1);
}

TEST_CASE("violated tolerances exit with status 2") {
    auto res = run("bv --weight 'alpha=0;M=poly-r2:2,-1' --n-max 64 --max-sup-scaled 1e-9");
    CHECK(res.exit_code == 2);
    // at a generic point the series/closed-form gap is a few ulps, never 0
    auto kernel = run("kernel --weight 'alpha=0;M=one' --z 0.33,0.2 --w 0.44,-0.1 --tol 1e-30");
    CHECK(kernel.exit_code == 2);
    auto identity = run("identity-check --weight 'alpha=0.5;M=exp-r2:1' --fn sing:0.4 "
                        "--grid-r 64 --grid-k 128 --degree 16 --residual-tol 1e-300");
    CHECK(identity.exit_code == 2);
}

TEST_CASE("config file supplies defaults and flags override") {
    std::string dir = "/tmp/bergman_cli_test";
    REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
    {
        std::ofstream cfg(dir + "/cfg.json");
        cfg << R"({"weight":"alpha=0;M=one","n_max":4,"format":"csv"})";
    }
    auto from_cfg = run("moments --config " + dir + "/cfg.json");
    CHECK(from_cfg.exit_code == 0);
    CHECK(from_cfg.out.find("4,0.1") != std::string::npos);

    auto overridden = run("moments --config " + dir + "/cfg.json --n-max 2");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.out.find("2,0.16") != std::string::npos);
    CHECK(overridden.out.find("3,") == std::string::npos);

    auto missing = run("moments --config " + dir + "/nope.json");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("BERGMAN_OUT_DIR anchors relative output paths") {
    std::string dir = "/tmp/bergman_cli_outdir";
    REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
    std::string cmd = "BERGMAN_OUT_DIR=" + dir + " " + BERGMAN_CLI_PATH +
                      " moments --weight 'alpha=0;M=one' --n-max 2 --out table.csv 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    auto body = slurp(dir + "/table.csv");
    CHECK(body.rfind("n,I_n,err_n\n", 0) == 0);
    CHECK(body.back() == '\n');
}

TEST_CASE("sn and opnorm emit row-per-experiment tables") {
    auto sn = run("sn --weight 'alpha=0;M=one' --fn logsing --p 2 --n-max 8 "
                  "--grid-r 32 --grid-k 64");
    CHECK(sn.exit_code == 0);
    CHECK(sn.out.rfind("p,N,ratio,err\n", 0) == 0);
    CHECK(sn.out.find("\n2,8,") != std::string::npos);

    auto opnorm = run("opnorm --weight 'alpha=0;M=one' --battery \"holo-poly:1;mono:0,-1\" "
                      "--p 2,3 --degree 8 --grid-r 32 --grid-k 64");
    CHECK(opnorm.exit_code == 0);
    CHECK(opnorm.out.rfind("p,fn,ratio\n", 0) == 0);
    CHECK(opnorm.out.find("2,holo-poly:1,1\n") != std::string::npos);
    CHECK(opnorm.out.find("3,mono:0,-1,") != std::string::npos);
}

TEST_CASE("alpha override and extended precision flags") {
    auto res = run("moments --weight 'alpha=0;M=one' --alpha 1 --n-max 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("0,0.25,") != std::string::npos); // I_0(lambda_1) = 1/4

    auto ext = run("moments --weight 'alpha=0;M=one' --n-max 2 --precision extended");
    auto dbl = run("moments --weight 'alpha=0;M=one' --n-max 2 --precision double");
    CHECK(ext.exit_code == 0);
    CHECK(ext.out == dbl.out);
    CHECK(run("moments --weight 'alpha=0;M=one' --precision quad").exit_code == 1);
}

TEST_CASE("limits emits the predicted constants") {
    auto res = run("limits --weight 'alpha=0;M=poly-r2:2,-1' --ns 16,64 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"l12\":-4") != std::string::npos);
    CHECK(res.out.find("\"delta_inf\":1") != std::string::npos);
    CHECK(res.out.find("\"rows\":[{\"n\":16,") != std::string::npos);
}
