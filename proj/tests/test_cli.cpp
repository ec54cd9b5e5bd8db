#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "qvertex/cli.hpp"
#include "qvertex/json_io.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = qv::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("vertex values") {
  const Result r = run({"vertex", "--alpha", "[]", "--beta", "[]", "--gamma", "[]"});
  CHECK(r.status == qv::cli::ok);
  const auto j = qv::Json::parse(r.out);
  CHECK(qv::qrational_from_json(j["value"]) == qv::QRational(1L));
  const Result one = run({"vertex", "--alpha", "[1]", "--beta", "[]", "--gamma", "[]"});
  CHECK(qv::qrational_from_json(qv::Json::parse(one.out)["value"]) == qv::inv_bracket(1));
}

TEST_CASE("mirror curve") {
  const Result r = run({"mirror", "--strip", "conifold", "--n", "1", "--samples", "2"});
  CHECK(r.status == qv::cli::ok);
  const auto j = qv::Json::parse(r.out);
  CHECK(j["curve"] == "x = (1 - y^-1)/(1 - Q*y^-1)");
  CHECK(j["classical"]["passed"] == true);
}

TEST_CASE("verification suites") {
  CHECK(run({"verify", "cyclic", "--weight-max", "2"}).status == qv::cli::ok);
  const Result text = run({"--format", "text", "verify", "macmahon", "--degree", "3"});
  CHECK(text.status == qv::cli::ok);
  CHECK(text.out.rfind("PASS", 0) == 0);
  const Result strips = run({"verify", "strip-oracle", "--sizes", "2", "--qdeg", "2", "--beta-weight", "1"});
  CHECK(strips.status == qv::cli::ok);
  CHECK(qv::Json::parse(strips.out)["passed"] == true);
}

TEST_CASE("partition functions") {
  const Result a = run({"zclosed", "--strip", "conifold", "--betas", "[[1],[]]", "--qdeg", "2"});
  const Result b = run({"zglue", "--strip", "conifold", "--betas", "[[1],[]]", "--qdeg", "2"});
  CHECK(a.status == qv::cli::ok);
  CHECK(b.status == qv::cli::ok);
  CHECK(a.out == b.out);
  const Result inline_strip =
      run({"zclosed", "--strip", R"({"sigma":[1,-1]})", "--betas", "[[1],[]]", "--qdeg", "2"});
  CHECK(inline_strip.out == a.out);
}

TEST_CASE("errors and exit codes") {
  CHECK(run({"vertex", "--alpha", "[1,3]", "--beta", "[]", "--gamma", "[]"}).status == qv::cli::bad_input);
  CHECK(run({"vertex", "--unknown"}).status == qv::cli::bad_input);
  CHECK(run({"zclosed", "--strip", "{not json", "--betas", "[[],[]]"}).status == qv::cli::bad_input);
  CHECK(run({"wave", "--strip", "conifold", "--n", "1", "--kind", "chi"}).status == qv::cli::bad_input);
  setenv("QVERTEX_MAX_QDEG", "1", 1);
  const Result big = run({"zclosed", "--strip", "conifold", "--betas", "[[],[]]", "--qdeg", "3"});
  unsetenv("QVERTEX_MAX_QDEG");
  CHECK(big.status == qv::cli::blow_up);
  CHECK_FALSE(big.err.empty());
  CHECK(run({"--help"}).status == qv::cli::ok);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"wave", "--strip", "conifold", "--n", "1", "--kind", "psi", "--K", "3"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sampled{"--seed", "7", "mirror", "--strip", "conifold", "--n", "2"};
  CHECK(run(sampled).out == run(sampled).out);
}
