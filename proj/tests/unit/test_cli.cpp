#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"pochzeta"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = pochzeta::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> rows(const std::string& csv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    out.push_back(cells);
  }
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("exit codes") {
  using namespace pochzeta::cli;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"fig1", "--help"}).code == kExitOk);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"fig1", "--points", "0"}).code == kExitUsage);
  CHECK(run({"fig3", "--x-min", "0.5", "--x-max", "1.5"}).code == kExitUsage);
  CHECK(run({"fig3", "--digits", "5"}).code == kExitUsage);
  CHECK(run({"fig3", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"coeffs", "--kind", "q"}).code == kExitUsage);
  CHECK(run({"coeffs", "--kind", "b", "--route", "closed_form"}).code == kExitUsage);
  CHECK(run({"coeffs", "--kind", "dhat", "--route", "primes", "--alpha", "-1", "--K", "3"}).code == kExitUsage);
  CHECK(run({"fig7", "--alpha", "0", "--points", "2", "--n-zeros", "5"}).code == kExitUsage);
  CHECK(run({"coeffs", "--beta", "banana"}).code == kExitUsage);
  CHECK(run({"sweep", "--x-min", "5", "--x-max", "3"}).code == kExitUsage);
  CHECK(run({"fig6", "--prime", "30"}).code == kExitUsage);
  CHECK(run({"series", "--target", "zeta"}).code == kExitUsage);

  // Valid flags, failing inputs.
  const Outcome missing = run({"fig4", "--zeros-file", "/nonexistent/zeros.txt", "--points", "2"});
  CHECK(missing.code == kExitComputation);
  CHECK_FALSE(missing.err.empty());
  const std::filesystem::path bad = std::filesystem::temp_directory_path() / "pochzeta_bad_zeros.txt";
  std::ofstream(bad) << "14.13\n21.02\nnot-a-number\n";
  CHECK(run({"fig7", "--zeros-file", bad.string().c_str(), "--points", "2"}).code == kExitComputation);
  std::filesystem::remove(bad);
  CHECK(run({"fig3", "--points", "2", "--out", "/nonexistent/dir/out.csv"}).code == kExitComputation);
}

TEST_CASE("identical runs give identical bytes") {
  const Outcome a = run({"fig3", "--points", "7"});
  const Outcome b = run({"fig3", "--points", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  const Outcome c = run({"fig4", "--points", "3", "--n-primes", "100"});
  const Outcome d = run({"fig4", "--points", "3", "--n-primes", "100"});
  REQUIRE(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("fig3 grid") {
  const auto one = rows(run({"fig3", "--points", "1", "--x-min", "0.5", "--x-max", "0.5"}).out);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == std::vector<std::string>{"sigma", "series", "direct", "abs_error"});
  CHECK(std::stod(one[1][3]) < 1e-3);

  const auto full = rows(run({"fig3", "--points", "5"}).out);
  REQUIRE(full.size() == 6);
  CHECK(std::stod(full[1][0]) == -1.0);
  for (std::size_t i = 1; i < full.size(); ++i) CHECK(full[i].size() == 4);
}

TEST_CASE("fig1 direct value dips at the first zeros") {
  const Outcome o = run({"fig1", "--x-min", "13.5", "--x-max", "26", "--points", "126"});
  REQUIRE(o.code == 0);
  const auto table = rows(o.out);
  REQUIRE(table[0] == std::vector<std::string>{"t", "series_re", "series_im", "direct_re", "direct_im"});
  for (const double zero : {14.1347, 21.0220, 25.0109}) {
    double best_t = 0.0;
    double best = 1e300;
    for (std::size_t i = 1; i < table.size(); ++i) {
      const double t = std::stod(table[i][0]);
      const double m = std::hypot(std::stod(table[i][3]), std::stod(table[i][4]));
      if (std::abs(t - zero) < 0.5 && m < best) {
        best = m;
        best_t = t;
      }
    }
    CAPTURE(zero);
    CHECK(std::abs(best_t - zero) <= 0.1);
  }
}

TEST_CASE("JSON output carries columns, rows and summary") {
  const Outcome o = run({"fig4", "--points", "3", "--n-primes", "100", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["columns"] == nlohmann::json({"x", "k", "psi1", "psi2", "diff"}));
  CHECK(doc["rows"].size() == 3);
  const auto& summary = doc["summary"];
  for (const char* key : {"max_diff", "oscillations", "params", "truncations"}) {
    CAPTURE(std::string(key));
    CHECK(summary.contains(key));
  }
  CHECK(summary["truncations"]["n_primes"] == 100);
}

TEST_CASE("--out writes the table and a summary file") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "pochzeta_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "fig4.csv").string();
  const Outcome o = run({"fig4", "--points", "2", "--n-primes", "100", "--out", path.c_str()});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  CHECK(slurp(path).rfind("x,k,psi1,psi2,diff\n", 0) == 0);
  const auto summary = nlohmann::json::parse(slurp(path + ".summary.json"));
  CHECK(summary.contains("max_diff"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("closed-form s column is 1/(k+1)") {
  const Outcome o = run({"coeffs", "--kind", "s", "--route", "closed_form", "--alpha", "2", "--beta", "1", "--K",
                         "100", "--digits", "20"});
  REQUIRE(o.code == 0);
  const auto table = rows(o.out);
  REQUIRE(table.size() == 102);
  for (std::size_t i = 1; i < table.size(); ++i) {
    const double k = std::stod(table[i][0]);
    CHECK(std::stod(table[i][1]) == doctest::Approx(1.0 / (k + 1.0)).epsilon(1e-15));
  }
}

TEST_CASE("dhat routes agree through the front-end") {
  const auto binomial = rows(
      run({"coeffs", "--kind", "dhat", "--route", "binomial", "--alpha", "4.5", "--beta", "4", "--K", "10"}).out);
  const auto primes =
      rows(run({"coeffs", "--kind", "dhat", "--route", "primes", "--alpha", "4.5", "--beta", "4", "--K", "10"}).out);
  const auto zeros = rows(run({"coeffs", "--kind", "dhat", "--route", "zeros_beta", "--alpha", "4.5", "--beta", "4",
                               "--K", "10", "--n-zeros", "100", "--n-trivial", "100"})
                              .out);
  REQUIRE(binomial.size() == 12);
  REQUIRE(primes.size() == 11);
  REQUIRE(zeros.size() == 11);
  // Row i of the primes and zeros tables holds k = i, the binomial table starts at k = 0.
  for (std::size_t k = 5; k <= 10; ++k) {
    CAPTURE(k);
    const double b = std::stod(binomial[k + 1][1]);
    CHECK(std::stod(primes[k][1]) == doctest::Approx(b).epsilon(1e-9));
    CHECK(std::stod(zeros[k][1]) == doctest::Approx(b).epsilon(1e-3));
  }
}

TEST_CASE("fig6 and fig7 shapes") {
  const auto fig6 = rows(run({"fig6", "--points", "11", "--prime", "2", "--prime", "29"}).out);
  REQUIRE(fig6.size() == 12);
  CHECK(fig6[0] == std::vector<std::string>{"x", "p2", "p29"});
  const Outcome fig7 = run({"fig7", "--points", "2", "--n-zeros", "20", "--n-trivial", "100"});
  REQUIRE(fig7.code == 0);
  CHECK(fig7.err.find("warning") != std::string::npos);
  const auto table = rows(fig7.out);
  REQUIRE(table.size() == 4);
  CHECK(table.back()[0] == "inf");
}
