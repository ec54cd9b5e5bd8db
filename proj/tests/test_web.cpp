#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "qvertex/errors.hpp"
#include "qvertex/vertex.hpp"
#include "qvertex/web.hpp"

using namespace qv;

namespace {

struct EnvOverride {
  std::string name;
  EnvOverride(std::string n, const char* value) : name(std::move(n)) { setenv(name.c_str(), value, 1); }
  ~EnvOverride() { unsetenv(name.c_str()); }
};

}  // namespace

TEST_CASE("strip descriptions") {
  const StripDiagram s = StripDiagram::make({1, 1, -1});
  CHECK(s.kahler == std::vector<std::string>{"Q1", "Q2"});
  CHECK(s.framing == std::vector<int>{-1, 0});
  CHECK(StripDiagram::conifold().kahler == std::vector<std::string>{"Q"});
  const StripDiagram back = StripDiagram::from_json(s.to_json());
  CHECK(back.sigma == s.sigma);
  CHECK(back.kahler == s.kahler);
  CHECK(back.framing == s.framing);
  CHECK(default_framing({-1, -1, 1, 1}) == std::vector<int>{1, 0, -1});
  CHECK(s.oriented(3, Partition{2}) == Partition{1, 1});
  CHECK_THROWS_AS(StripDiagram::from_json(Json::parse(R"({"sigma":[1,2]})")), Error);
}

TEST_CASE("conifold at first order") {
  // -sum_{i,j} q^{-i-j+1} = -1/[1]^2
  const StripDiagram con = StripDiagram::conifold();
  const MultiSeries z = glued_partition_function(con, {Partition{}, Partition{}, {Partition{}, Partition{}}}, 1);
  const QRational q1 = z.coefficient(std::map<std::string, int>{{"Q", 1}});
  CHECK(q1 == QRational(-1L) * inv_bracket(1).pow(2));
  CHECK(z.constant_term() == QRational(1L));
}

TEST_CASE("glued equals closed on small strips") {
  const Report r = verify_strip_oracle({{2, 3}, 2, 1});
  CHECK(r.checks > 0);
  CHECK(r.failures.empty());
  const auto framings = calibrate_framing({1, -1, -1});
  REQUIRE(framings.size() == 1);
  CHECK(framings.front() == default_framing({1, -1, -1}));
}

TEST_CASE("resolved conifold") {
  const Report r = verify_conifold_identity(2, 3, 2);
  CHECK(r.failures.empty());
  const MultiSeries p = conifold_product({}, {}, 2);
  CHECK(p.coefficient(std::map<std::string, int>{{"Q", 1}}) == QRational(-1L) * inv_bracket(1).pow(2));
}

TEST_CASE("MacMahon function") {
  const auto counts = macmahon_volume_counts(7);
  CHECK(counts == oracle::plane_partition_counts(7));
  CHECK(counts == std::vector<long>{1, 1, 3, 6, 13, 24, 48, 86});
  CHECK(verify_macmahon(4).failures.empty());
}

TEST_CASE("size limits") {
  {
    EnvOverride guard("QVERTEX_MAX_QDEG", "2");
    CHECK(max_qdeg() == 2);
    CHECK_THROWS_AS(closed_partition_function(StripDiagram::conifold(), {Partition{}, Partition{}}, 3), BlowUpError);
  }
  {
    EnvOverride guard("QVERTEX_MAX_CONFIGS", "3");
    CHECK_THROWS_AS(glued_partition_function(StripDiagram::make({1, 1, 1}), {{}, {}, {{}, {}, {}}}, 3), BlowUpError);
  }
  CHECK(max_qdeg() == 12);
}
