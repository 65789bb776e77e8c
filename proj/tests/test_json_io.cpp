#include <cmath>

#include "doctest.h"
#include "markovgeo/errors.hpp"
#include "markovgeo/json_io.hpp"
#include "markovgeo/sampling.hpp"

using namespace markovgeo;

TEST_CASE("kernel json round trip") {
  Rng rng(70);
  Kernel p = random_kernel(3, rng);
  Json encoded = kernel_from_json(Json::parse(dump_json(kernel_to_json(p))))
                     .matrix.isApprox(p.matrix, 0.0)
                     ? Json(true)
                     : Json(false);
  CHECK(encoded.get<bool>());
}

TEST_CASE("support is one-based in files and optional") {
  Json file = Json::parse(R"({"size":2,"matrix":[[0.5,0.5],[0.5,0.5]]})");
  Kernel k = kernel_from_json(file);
  CHECK(k.support.edge_count() == 4);

  Json with_support = Json::parse(
      R"({"size":2,"matrix":[[0.5,0.5],[0.5,0.5]],
          "support":[[1,1],[1,2],[2,1],[2,2]]})");
  CHECK(kernel_from_json(with_support).support.edge_count() == 4);

  Json wrong = Json::parse(
      R"({"size":2,"matrix":[[0.5,0.5],[0.5,0.5]],"support":[[1,1],[1,2],[2,1]]})");
  CHECK_THROWS_AS(kernel_from_json(wrong), error);
}

TEST_CASE("doubles survive the writer exactly") {
  Json payload;
  payload["x"] = 2.0 / 3.0;
  payload["y"] = 0.1;
  Json back = Json::parse(dump_json(payload));
  CHECK(back["x"].get<double>() == 2.0 / 3.0);
  CHECK(back["y"].get<double>() == 0.1);
}

TEST_CASE("malformed files raise io errors") {
  CHECK_THROWS_AS(kernel_from_json(Json::parse(R"({"size":2})")), error);
  CHECK_THROWS_AS(load_kernel("/nonexistent/kernel.json"), error);
}
