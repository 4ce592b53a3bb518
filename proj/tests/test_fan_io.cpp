#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/catalog.hpp"
#include "toric/builders.hpp"
#include "toric/error.hpp"
#include "toric/fan_io.hpp"

using namespace toric;

TEST_CASE("parse the P2 example") {
  const Fan f = parse_fan(R"({"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[2,0]]})");
  CHECK(f.rank == 2);
  CHECK(f.rays.size() == 3);
  CHECK(f.max_cones[2] == Cone({0, 2}));
  CHECK(is_smooth(f));
}

TEST_CASE("semantic violations") {
  try {
    parse_fan(R"({"rank":2,"rays":[[2,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[2,0]]})");
    FAIL("expected a violation");
  } catch (const FanError& e) {
    CHECK(e.violations().front().find("non-primitive ray") != std::string::npos);
  }
  try {
    parse_fan(R"({"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,9],[2,0]]})");
    FAIL("expected a violation");
  } catch (const FanError& e) {
    CHECK(e.violations().front().find("index out of range") != std::string::npos);
  }
}

TEST_CASE("syntax and schema errors") {
  try {
    parse_fan("{\"rank\":2,\n\"rays\":[[1,0],}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(parse_fan(R"({"rank":2,"rays":[]})"), ParseError);
  CHECK_THROWS_AS(parse_fan(R"({"rank":2,"rays":[],"max_cones":[],"extra":1})"), ParseError);
  CHECK_THROWS_AS(parse_fan(R"({"rank":"2","rays":[],"max_cones":[]})"), ParseError);
  CHECK_THROWS_AS(parse_fan(R"({"rank":1,"rank":1,"rays":[],"max_cones":[]})"), ParseError);
  CHECK_THROWS_AS(parse_fan(R"({"rank":1,"rays":[[1],[-1]],"max_cones":[[-1],[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_fan(R"({"rank":1,"rays":[[1.5]],"max_cones":[[0]]})"), ParseError);
}

TEST_CASE("arbitrary precision integers survive a round trip") {
  const std::string big = "123456789012345678901234567890";
  const Fan f = parse_fan_unchecked(R"({"rank":2,"rays":[[1,)" + big + R"(],[0,1]],"max_cones":[[0,1]]})");
  CHECK(f.rays[0][1].get_str() == big);
  CHECK(serialize_fan(f).find(big) != std::string::npos);
}

TEST_CASE("canonical serialization") {
  CHECK(serialize_fan(fan_projective_space(1)) == R"({"rank":1,"rays":[[-1],[1]],"max_cones":[[0],[1]]})");
  for (const auto& e : catalog::fans()) {
    CAPTURE(e.name);
    const std::string text = serialize_fan(e.fan);
    CHECK(serialize_fan(parse_fan(text)) == text);
  }
}

TEST_CASE("permuted input serializes identically") {
  std::mt19937_64 rng(21);
  for (const auto& e : catalog::fans()) {
    CAPTURE(e.name);
    std::vector<std::size_t> perm(e.fan.rays.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Fan shuffled;
    shuffled.rank = e.fan.rank;
    shuffled.rays.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled.rays[perm[i]] = e.fan.rays[i];
    for (const auto& c : e.fan.max_cones) {
      std::vector<std::size_t> idx;
      for (std::size_t r : c.rays) idx.push_back(perm[r]);
      shuffled.max_cones.emplace_back(std::move(idx));
    }
    std::shuffle(shuffled.max_cones.begin(), shuffled.max_cones.end(), rng);
    CHECK(serialize_fan(shuffled) == serialize_fan(e.fan));
  }
}
