#include <doctest.h>

#include <random>

#include <json.hpp>

#include "cpyr/errors.hpp"
#include "cpyr/pyramid_io.hpp"
#include "cpyr/segmentation.hpp"
#include "gen.hpp"

using namespace cpyr;

TEST_CASE("pyramid round trip") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    std::mt19937 rng(seed);
    const Pyramid pyr = cpyr::testing::random_pyramid(rng, 1 + rng() % 6, 1 + rng() % 6, 8);
    const std::string text = to_json(pyr);
    const PyramidFile f = from_json(text);
    CHECK(f.pyramid.top_level() == pyr.top_level());
    CHECK(f.pyramid.top() == pyr.top());
    CHECK(to_json(f.pyramid) == text);
    CHECK_FALSE(f.image.has_value());
  }
  const Image img = cpyr::testing::arrow_sign(12);
  const Pyramid pyr = segment_image(img, 24);
  const PyramidFile f = from_json(to_json(pyr, &img));
  REQUIRE(f.image.has_value());
  CHECK(f.image->data == img.data);
}

TEST_CASE("corrupted files are rejected") {
  const Pyramid pyr = segment_image(cpyr::testing::arrow_sign(8), 24);
  auto j = nlohmann::json::parse(to_json(pyr));
  CHECK_THROWS_AS(from_json("{"), ParseError);
  CHECK_THROWS_AS(from_json("{\"format\":\"other\"}"), ParseError);

  auto bad = j;
  bad["orientations"][0] = 3;
  CHECK_THROWS_AS(from_json(bad.dump()), ParseError);

  bad = j;
  bad["levels"].erase(bad["levels"].begin());
  CHECK_THROWS_AS(from_json(bad.dump()), ParseError);

  bad = j;
  bad["states"][0] = "RKEDE";
  CHECK_THROWS_AS(from_json(bad.dump()), ParseError);

  bad = j;
  bad["levels"][0] = 99;
  CHECK_THROWS_AS(from_json(bad.dump()), ParseError);
}
