#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wco/verify.hpp"

// Exercises the installed command surface end to end through the real binary.

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(WCO_CLI_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text, std::string* header) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (header) *header = line;
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("matrix: diagonal csv for a dilation") {
    const std::string path = "cli_matrix_diag.csv";
    REQUIRE(run("matrix --kappa 1 --a0 0 --a1 0.5 --b 1 --trunc 8 --csv " + path) == 0);
    const std::string text = slurp(path);
    CHECK(text.find("trunc=8") != std::string::npos);
    CHECK(text.find("(default)") == std::string::npos);

    std::string header;
    const auto rows = parse_csv(text, &header);
    CHECK(header == "row,col,re,im");
    REQUIRE(rows.size() == 64);
    for (const auto& r : rows) {
        REQUIRE(r.size() == 4);
        const int m = std::stoi(r[0]);
        const int n = std::stoi(r[1]);
        const double re = std::stod(r[2]);
        const double im = std::stod(r[3]);
        if (m == n)
            CHECK(re == doctest::Approx(std::pow(0.5, n)).epsilon(1e-12));
        else
            CHECK(re == 0.0);
        CHECK(im == 0.0);
    }
}

TEST_CASE("matrix: defaulted truncation is noted in the header comment") {
    const std::string path = "cli_matrix_default.csv";
    REQUIRE(run("matrix --a1 0.5 --csv " + path) == 0);
    const std::string text = slurp(path);
    CHECK(text.find("trunc=32 (default)") != std::string::npos);
}

TEST_CASE("matrix: expression symbols give the doubling pattern") {
    const std::string path = "cli_matrix_z2.csv";
    REQUIRE(run("matrix --phi \"z^2\" --psi \"1\" --trunc 8 --csv " + path) == 0);
    const auto rows = parse_csv(slurp(path), nullptr);
    for (const auto& r : rows) {
        const int m = std::stoi(r[0]);
        const int n = std::stoi(r[1]);
        CHECK(std::stod(r[2]) == ((m == 2 * n) ? 1.0 : 0.0));
    }
}

TEST_CASE("matrix: non-self-map parameters exit with a usage error") {
    CHECK(run("matrix --a0 0.5 --a1 0.9 --b 1") == 2);
    CHECK(run("matrix --phi \"2z\"") == 2);
    CHECK(run("matrix --phi \"z**2\"") == 2);
    CHECK(run("matrix") == 2);
    CHECK(run("matrix --a0 0.3 --phi \"z\"") == 2);  // both input modes at once
    CHECK(run("matrix --a1 0.5 --trunc 0") == 2);
    CHECK(run("matrix --no-such-flag") == 2);
}

TEST_CASE("check: custom grid side keeps verdict and residual consistent") {
    const std::string path = "cli_check_grid.json";
    REQUIRE(run("check --a0 0.5i --a1 0.75 --b 1 --grid 7 --json " + path) == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["verdicts"]["normal"] == true);
    CHECK(double(j["normality_residual"]) <= 1e-12);
}

TEST_CASE("check: classification verdicts as data, exit 0") {
    const std::string path = "cli_check.json";
    REQUIRE(run("check --a0 0.3 --a1 0.4 --b 1 --kappa 1 --json " + path) == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["schema"] == "wco-report/1");
    CHECK(j["verdicts"]["complex_symmetric_standard_J"] == true);
    CHECK(j["verdicts"]["hermitian"] == true);
    CHECK(j["verdicts"]["normal"] == true);
    CHECK(j["ppf"]["a0"][0] == doctest::Approx(0.3));

    REQUIRE(run("check --a0 0.5i --a1 0.25 --b 1 --json " + path) == 0);
    const auto j2 = nlohmann::json::parse(slurp(path));
    CHECK(j2["verdicts"]["complex_symmetric_standard_J"] == true);
    CHECK(j2["verdicts"]["hermitian"] == false);
    CHECK(j2["verdicts"]["normal"] == false);

    REQUIRE(run("check --phi \"z^2\" --psi \"1\" --json " + path) == 0);
    const auto j3 = nlohmann::json::parse(slurp(path));
    CHECK(j3["verdicts"]["complex_symmetric_standard_J"] == false);
    CHECK(j3["ppf"].is_null());
}

TEST_CASE("spectrum: sorted moduli and the truncation caveat") {
    const std::string path = "cli_spectrum.csv";
    REQUIRE(run("spectrum --a0 0 --a1 0.5 --b 1 --trunc 12 --csv " + path) == 0);
    const std::string text = slurp(path);
    CHECK(text.find("truncated matrix") != std::string::npos);
    std::string header;
    const auto rows = parse_csv(text, &header);
    CHECK(header == "index,re,im,modulus");
    REQUIRE(rows.size() == 12);
    double prev = 2.0;
    for (const auto& r : rows) {
        const double mod = std::stod(r[3]);
        CHECK(mod <= prev + 1e-15);
        prev = mod;
    }
    CHECK(std::stod(rows[0][3]) == doctest::Approx(1.0));
    CHECK(std::stod(rows[1][3]) == doctest::Approx(0.5));
}

TEST_CASE("spectrum: ladder column stays small on a ppf example") {
    const std::string path = "cli_spectrum_ladder.csv";
    REQUIRE(run("spectrum --a0 0.3 --a1 0.4 --b 1 --trunc 64 --ladder --csv " + path) == 0);
    std::string header;
    const auto rows = parse_csv(slurp(path), &header);
    CHECK(header == "index,re,im,modulus,ladder_distance");
    REQUIRE(rows.size() == 64);
    for (std::size_t n = 0; n <= 4; ++n) {
        REQUIRE(rows[n].size() == 5);
        CHECK(std::stod(rows[n][4]) <= 1e-6);
    }
}

TEST_CASE("koenigs: the halved singular symbol") {
    const std::string path = "cli_koenigs.json";
    REQUIRE(run("koenigs --phi \"0.5z/(1-0.5z)\" --trunc 16 --json " + path) == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["lambda"][0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(j["lambda"][1] == doctest::Approx(0.0));
    for (int n = 1; n <= 8; ++n)
        CHECK(double(j["kappa_coefficients"][n][0]) == doctest::Approx(1.0).epsilon(1e-6));
    for (const auto& entry : j["membership"]) CHECK(entry["divergence_flag"] == true);
    CHECK(j["obstruction"]["divergent_norm"] == true);
    CHECK(j["obstruction"]["kappa0_normalized"].is_null());
}

TEST_CASE("koenigs: dilation is tame") {
    const std::string path = "cli_koenigs_lin.json";
    REQUIRE(run("koenigs --phi \"0.5z\" --trunc 12 --json " + path) == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["iterations"] == 1);
    for (const auto& entry : j["membership"]) CHECK(entry["divergence_flag"] == false);
    CHECK(j["obstruction"]["divergent_norm"] == false);
}

TEST_CASE("koenigs: non-contractive multiplier exits 1") {
    CHECK(run("koenigs --phi \"(0.5-z)/(1-0.5z)\" --trunc 8") == 1);
}

TEST_CASE("verify: filtered run passes and respects the filter") {
    const std::string path = "cli_verify_maps.json";
    REQUIRE(run("verify --filter maps. --json " + path) == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["all_pass"] == true);
    REQUIRE(j["records"].size() > 0);
    for (const auto& rec : j["records"]) {
        const std::string id = rec["test_id"];
        CHECK(id.find("maps.") != std::string::npos);
        CHECK(rec["pass"] == true);
        const bool consistent = (double(rec["metric"]) <= double(rec["tolerance"])) ==
                                bool(rec["pass"]);
        CHECK(consistent);
    }
}

TEST_CASE("verify: byte-identical output for identical inputs") {
    REQUIRE(run("verify --filter series --json cli_verify_a.json") == 0);
    REQUIRE(run("verify --filter series --json cli_verify_b.json") == 0);
    CHECK(slurp("cli_verify_a.json") == slurp("cli_verify_b.json"));
}

TEST_CASE("verify: another seed changes draws, not verdicts") {
    REQUIRE(run("verify --seed 7 --filter operator.symmetry --json cli_verify_seed.json") == 0);
    const auto j = nlohmann::json::parse(slurp("cli_verify_seed.json"));
    CHECK(j["seed"] == 7);
    CHECK(j["all_pass"] == true);
}

TEST_CASE("verify: unmatched filter is a usage error") {
    CHECK(run("verify --filter no_such_check") == 2);
}

TEST_CASE("verify: registry ids are unique, sorted, and stable in shape") {
    const std::vector<std::string> ids = wco::registered_check_ids();
    CHECK(ids.size() >= 30);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    for (const std::string& id : ids) {
        // module-qualified dotted names only
        CHECK(id.find('.') != std::string::npos);
        CHECK(id.find(' ') == std::string::npos);
    }
}

}  // TEST_SUITE
