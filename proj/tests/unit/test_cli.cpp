#include <doctest.h>

#include <sstream>

#include "tcomb/cli.hpp"

using namespace tcomb;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(TCOMB_TEST_DATA) + "/" + name; }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("decide") {
    auto r = run({"decide", "--theory", "teq", "--formula", data("p3.txt")});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "sat\n");
    r = run({"decide", "--theory", "teq", "--expr", "(and (P 2) (P 3))"});
    CHECK(r.code == cli::kExitNegative);
    CHECK(r.out == "unsat\n");
  }

  TEST_CASE("batch files give one line each") {
    auto r = run({"decide", "--theory", "teq", "--formula", data("batch.txt")});
    CHECK(r.out == "sat\nunsat\nsat\n");
    CHECK(r.code == cli::kExitNegative);
    r = run({"--verbosity", "1", "decide", "--theory", "teq", "--formula", data("batch.txt")});
    CHECK(r.out == "(P 3) : sat\n(and (P 2) (P 3)) : unsat\n(not (= x y)) : sat\n");
  }

  TEST_CASE("spectrum") {
    auto r = run({"spectrum", "--theory", "tlen:3", "--formula", data("neq.txt")});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "{2,3}\n");
    CHECK(run({"spectrum", "--theory", "teq", "--formula", data("neq.txt")}).out == "co{1}\n");
    CHECK(run({"spectrum", "--theory", "tinf", "--expr", "(= x y)"}).out == "{ℵ0}\n");
    CHECK(run({"spectrum", "--theory", "torb2", "--expr", "(= (t a) a)"}).out == "{1,2}\n");
    auto e = run({"spectrum", "--theory", "tlen:3", "--expr", "(not (= x x))"});
    CHECK(e.out == "{}\n");
    CHECK(e.code == cli::kExitNegative);
  }

  TEST_CASE("witness and minmod") {
    CHECK(run({"witness", "--theory", "teq", "--expr", "(P 2)"}).out == "(and (P 2) (not (= _w1 _w2)))\n");
    CHECK(run({"minmod", "--theory", "teq", "--expr", "(P 3)"}).out == "3\n");
    CHECK(run({"minmod", "--theory", "tinf", "--expr", "(= x y)"}).out == "ℵ0\n");
    auto v2 = run({"minmod", "--theory", "teq", "--expr", "(not (= x y))", "--verbosity", "2"});
    CHECK(v2.out.rfind("(not (= x y)) : 2 {", 0) == 0);
    auto un = run({"minmod", "--theory", "teq", "--expr", "(and (P 2) (P 3))"});
    CHECK(un.out == "unsat\n");
    CHECK(un.code == cli::kExitNegative);
  }

  TEST_CASE("combine") {
    auto r = run({"combine", "--engine", "gentle-cfs", "--t1", "tlen:3", "--t2", "tle", "--expr",
                  "(and (P 5) (not (= x y)))"});
    CHECK(r.out == "sat\n");
    CHECK(r.code == cli::kExitOk);
    r = run({"combine", "--engine", "minmod-infdec", "--t1", "tinf", "--t2", "tinfh", "--expr", "(P 1)"});
    CHECK(r.out == "unsat\n");
    CHECK(r.code == cli::kExitNegative);
    r = run({"combine", "--engine", "both-gentle", "--t1", "teq", "--t2", "torb2", "--verbosity", "2", "--expr",
             "(and (P 3) (= x (t a)))"});
    CHECK(r.out.find("  arrangement: ") != std::string::npos);
    CHECK(r.out.find("  spec1 = {3}") != std::string::npos);
    CHECK(run({"combine", "--engine", "fast", "--t1", "tf", "--t2", "tinf", "--expr", "(= x x)"}).code ==
          cli::kExitUsage);
  }

  TEST_CASE("recover and oracle-check") {
    auto r = run({"recover", "--family", "tf-teq", "--oracle", "analytic", "--upto", "8", "--params", data("params.txt")});
    CHECK(r.out == "f: 1 0 1 0 0 1 0 1\nMATCH\n");
    CHECK(r.code == cli::kExitOk);
    r = run({"recover", "--family", "tg-torb2", "--upto", "12"});
    CHECK(r.out == "g: 1 0 1 0 0 0 1 1 1 1 0 0\nMATCH\n");
    r = run({"recover", "--family", "tf-teq", "--oracle", "bruteforce", "--upto", "6"});
    CHECK(r.out == "f: 1 0 0 1 1 0\nMATCH\n");
    r = run({"oracle-check", "--family", "tf-teq"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("AGREE\n") != std::string::npos);
    CHECK(run({"recover", "--family", "tf-teq", "--upto", "17"}).code == cli::kExitUsage);
  }

  TEST_CASE("usage and validation errors exit with 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"decide", "--theory", "teq"}).code == cli::kExitUsage);
    CHECK(run({"decide", "--theory", "teq", "--expr", "(P 1)", "--formula", data("p3.txt")}).code == cli::kExitUsage);
    CHECK(run({"decide", "--theory", "nope", "--expr", "(P 1)"}).code == cli::kExitUsage);
    CHECK(run({"decide", "--theory", "teq", "--expr", "(P 1"}).code == cli::kExitUsage);
    CHECK(run({"decide", "--theory", "teq", "--expr", "(= (s x) x)"}).code == cli::kExitUsage);
    CHECK(run({"decide", "--theory", "teq", "--formula", data("missing.txt")}).code == cli::kExitUsage);
    CHECK(run({"--max-size", "40", "decide", "--theory", "teq", "--expr", "(P 1)"}).code == cli::kExitUsage);
    auto bad = run({"decide", "--theory", "tf", "--params", data("bad_params.txt"), "--expr", "(= x x)"});
    CHECK(bad.code == cli::kExitUsage);
    CHECK(bad.err == "error: f: balance violated at 2^2 = 4: f1(4) = 3, expected 2\n");
    CHECK(bad.out.empty());
  }

  TEST_CASE("reports are deterministic") {
    std::vector<std::vector<std::string>> script{
        {"spectrum", "--theory", "torb2", "--expr", "(or (= (t a) a) (not (= a (t a))))"},
        {"combine", "--engine", "both-gentle", "--t1", "teq", "--t2", "torb2", "--verbosity", "2", "--expr",
         "(and (P 4) (not (= x (t a))))"},
        {"minmod", "--theory", "torb2", "--verbosity", "2", "--expr", "(= (t (t a)) a)"},
        {"oracle-check", "--family", "tg-torb2", "--verbosity", "1"},
    };
    for (const auto& args : script) {
      auto r1 = run(args), r2 = run(args);
      CHECK(r1.out == r2.out);
      CHECK(r1.code == r2.code);
      CHECK_FALSE(r1.out.empty());
    }
  }
}
