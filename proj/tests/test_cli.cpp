// Black-box checks of the qwell-carnot executable: exit codes, output
// contracts, determinism, golden files, and CSV/JSON cross-consistency.
//
// Usage: test_cli <path-to-qwell-carnot> <golden-dir>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                              \
    do {                                                                  \
        if (!(cond)) {                                                    \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " "  \
                      << msg << "\n";                                     \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(1);
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(1);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        for (char c : line) {
            if (c == '"') {
                quoted = !quoted;
            } else if (c == ',' && !quoted) {
                fields.push_back(field);
                field.clear();
            } else {
                field.push_back(c);
            }
        }
        fields.push_back(field);
        rows.push_back(fields);
    }
    return rows;
}

double csv_value(const std::string& cycle_csv, const std::string& key) {
    for (const auto& row : parse_csv(cycle_csv))
        if (row.size() == 2 && row[0] == key) return std::stod(row[1]);
    std::cerr << "key not found in cycle csv: " << key << "\n";
    std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: test_cli <cli> <golden-dir>\n";
        return 1;
    }
    const std::string cli = argv[1];
    const std::string golden = argv[2];

    // exit codes
    CHECK_MSG(run(cli + " cycle --l1 1 --l3 4 --lambda 0").exit_code == 0,
              "valid cycle exits 0");
    CHECK_MSG(run(cli + " cycle --l1 1 --l3 1.5 --lambda 0").exit_code == 2,
              "degenerate cycle exits 2");
    CHECK_MSG(run(cli + " cycle --l1 1 --l3 4 --lambda -1").exit_code == 2,
              "negative lambda exits 2");
    CHECK_MSG(run(cli + " cycle --no-such-flag").exit_code == 2,
              "unknown flag exits 2");
    CHECK_MSG(run(cli + " sweep --l1 1 --l3 4").exit_code == 2,
              "empty sweep range exits 2");
    CHECK_MSG(run(cli + " verify --l1 1 --l3 4 --lambda 0").exit_code == 0,
              "verify exits 0 even though literal rows disagree");

    // cycle values
    {
        const auto r = run(cli + " cycle --l1 1 --l3 4 --lambda 0");
        CHECK_MSG(std::abs(csv_value(r.out, "eta") - 0.75) < 1e-12,
                  "eta = 0.75 for the free-particle cycle");
        const auto r2 = run(cli + " cycle --l1 1 --l3 3 --lambda 1");
        CHECK_MSG(std::abs(csv_value(r2.out, "eta") - 0.75) < 1e-12,
                  "eta = 0.75 for the lambda = 1 cycle");
    }

    // determinism: identical invocations produce byte-identical output
    {
        const std::string cmd = cli + " diagram --l1 1 --l3 4 --lambda 0.5 --samples 17";
        CHECK_MSG(run(cmd).out == run(cmd).out, "byte-identical reruns");
    }

    // diagram row contract
    {
        const auto r = run(cli + " diagram --l1 1 --l3 4 --lambda 0 --samples 2");
        const auto rows = parse_csv(r.out);
        CHECK_MSG(rows.size() == 9, "header plus 4*samples rows");
        CHECK_MSG(rows[0] == std::vector<std::string>({"leg", "L", "P", "E", "a1sq"}),
                  "diagram header");
        CHECK_MSG(rows[1][0] == "1" && std::stod(rows[1][1]) == 1.0,
                  "first row is the hot corner");
        CHECK_MSG(std::abs(std::stod(rows[1][2]) - 9.86960440109) < 1e-9,
                  "hot corner pressure is pi^2");
        CHECK_MSG(std::abs(std::stod(rows[4][2]) - 0.616850275068) < 1e-9,
                  "leg 2 end at L=4 has P = pi^2/16");
        // corner rows duplicated across adjacent legs
        CHECK_MSG(rows[2][1] == rows[3][1] && rows[2][2] == rows[3][2],
                  "corner row repeated bit-identically");
    }

    // CSV and JSON encode the same numbers
    {
        const auto csv = run(cli + " cycle --l1 1 --l3 4 --lambda 0.3");
        const auto js = run(cli + " cycle --l1 1 --l3 4 --lambda 0.3 --out json");
        const auto parsed = nlohmann::json::parse(js.out);
        for (const auto& key : {"L2", "L4", "E_H", "E_C", "W_total", "Q_H", "eta"}) {
            const double a = csv_value(csv.out, key);
            const double b = parsed.at(key).get<double>();
            CHECK_MSG(std::abs(a - b) <= 1e-11 * std::max(std::abs(a), 1.0),
                      std::string("csv/json agree on ") + key);
        }
        const auto dj = run(cli + " diagram --l1 1 --l3 4 --lambda 0 --samples 3 --out json");
        const auto rows = nlohmann::json::parse(dj.out);
        CHECK_MSG(rows.is_array() && rows.size() == 12, "json diagram row count");
    }

    // sweep
    {
        const auto r = run(cli + " sweep --l1 1 --lambda 0 --l3-list 4,8");
        const auto rows = parse_csv(r.out);
        CHECK_MSG(rows.size() == 3, "two sweep rows");
        CHECK_MSG(std::abs(std::stod(rows[1][2]) - 0.75) < 1e-12, "eta(l3=4)");
        CHECK_MSG(std::abs(std::stod(rows[2][2]) - 0.9375) < 1e-12, "eta(l3=8)");
        const auto lam = run(cli + " sweep --l1 1 --l3 4 --lambda-list 1e-6");
        const auto lrows = parse_csv(lam.out);
        CHECK_MSG(std::abs(std::stod(lrows[1][2]) - 0.75) <= 1e-5,
                  "lambda -> 0 continuity in sweep");
        // degenerate rows are marked but the run continues
        const auto deg = run(cli + " sweep --l1 1 --lambda 0 --l3-list 1,4");
        CHECK_MSG(deg.exit_code == 0, "sweep survives degenerate rows");
        const auto drows = parse_csv(deg.out);
        CHECK_MSG(drows[1].back() == "degenerate" && drows[2].back() == "ok",
                  "degenerate row marked");
        CHECK_MSG(run(cli + " sweep --l1 1 --lambda 0 --l3-list 4,3,5").exit_code == 2,
                  "non-monotone sweep list rejected");
    }

    // verify report shape
    {
        const auto r = run(cli + " verify --l1 1 --l3 4 --lambda 0");
        const auto rows = parse_csv(r.out);
        CHECK_MSG(rows.size() == 6, "five verify rows");
        CHECK_MSG(std::stod(rows[1][5]) <= 1e-8, "row a quadrature deviation");
        CHECK_MSG(std::abs(std::stod(rows[5][2]) - 0.75) < 1e-12 &&
                      std::abs(std::stod(rows[5][3]) - 0.9375) < 1e-12,
                  "row e prints both efficiencies");
    }

    // golden files
    const std::vector<std::pair<std::string, std::string>> goldens = {
        {" cycle --l1 1 --l3 4 --lambda 0", "cycle_fp.csv"},
        {" cycle --l1 1 --l3 3 --lambda 1", "cycle_pt.csv"},
        {" diagram --l1 1 --l3 4 --lambda 0 --samples 2", "diagram_fp.csv"},
        {" diagram --l1 1 --l3 3 --lambda 1 --samples 2", "diagram_pt.csv"},
        {" verify --l1 1 --l3 4 --lambda 0", "verify_fp.csv"},
        {" verify --l1 1 --l3 3 --lambda 1", "verify_pt.csv"},
    };
    for (const auto& [args, file] : goldens) {
        const auto r = run(cli + args);
        CHECK_MSG(r.exit_code == 0, file << " command exits 0");
        CHECK_MSG(r.out == read_file(golden + "/" + file),
                  file << " matches byte-for-byte");
    }

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " failure(s)\n";
    return 1;
}
