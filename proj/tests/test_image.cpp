// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <string>

#include "mff/error.hpp"
#include "mff/image.hpp"
#include "support/test_images.hpp"

using namespace mff;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

std::size_t parse_offset(const std::string& text) {
  try {
    (void)load_pgm(bytes_of(text));
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("load_pgm decodes the documented small streams") {
  const auto img = load_pgm(bytes_of("P2\n2 2\n255\n0 0 0 1\n"));
  CHECK(img.width() == 2);
  CHECK(img.height() == 2);
  CHECK(std::vector<double>(img.samples().begin(), img.samples().end()) ==
        std::vector<double>{0, 0, 0, 1});

  auto p5 = bytes_of("P5\n1 1\n255\n");
  p5.push_back(0xFF);
  const auto one = load_pgm(p5);
  CHECK(one.size() == 1);
  CHECK(one.samples()[0] == 255.0);
}

TEST_CASE("load_pgm reports truncated data") {
  CHECK_THROWS_AS(load_pgm(bytes_of("P2\n2 2\n255\n0 0 0\n")), ParseError);
  auto p5 = bytes_of("P5\n2 2\n255\n");
  p5.insert(p5.end(), {1, 2, 3});
  CHECK_THROWS_AS(load_pgm(p5), ParseError);
  CHECK_THROWS_AS(load_pgm(bytes_of("P5\n2 2\n255")), ParseError);
}

TEST_CASE("load_pgm errors carry byte offsets") {
  CHECK(parse_offset("P3\n1 1\n255\n0\n") == 0);
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("P2\n1 x\n255\n0\n") == 5);
  CHECK(parse_offset("P2\n1 1\n0\n0\n") == 7);
  CHECK(parse_offset("P2\n1 1\n65536\n0\n") == 7);
  CHECK(parse_offset("P2\n1 1\n255\n256\n") == 11);
  CHECK(parse_offset("P2\n0 1\n255\n") == 3);
  CHECK(parse_offset("P2\n2 1\n255\n7 q\n") == 13);
}

TEST_CASE("load_pgm accepts comments between header tokens") {
  const auto img = load_pgm(bytes_of("P2 # magic\n# size follows\n3 # w\n1\n# maxval next\n255\n1 2 3"));
  CHECK(img.width() == 3);
  CHECK(img.samples()[2] == 3.0);
}

TEST_CASE("load_pgm rescales non-255 maxval") {
  const auto low = load_pgm(bytes_of("P2\n2 1\n15\n0 15\n"));
  CHECK(low.samples()[0] == 0.0);
  CHECK(low.samples()[1] == doctest::Approx(255.0).epsilon(1e-15));

  auto wide = bytes_of("P5\n2 1\n65535\n");
  wide.insert(wide.end(), {0xFF, 0xFF, 0x80, 0x00});  // big-endian 65535, 32768
  const auto img = load_pgm(wide);
  CHECK(img.samples()[0] == doctest::Approx(255.0));
  CHECK(img.samples()[1] == doctest::Approx(32768.0 * 255.0 / 65535.0));
}

TEST_CASE("save_pgm rounds half-up and clamps") {
  const auto encode1 = [](double v) {
    const auto bytes = save_pgm(GrayImage(1, 1, v), PgmMode::binary);
    return bytes.back();
  };
  CHECK(encode1(127.4) == 127);
  CHECK(encode1(127.5) == 128);
  CHECK(encode1(300.0) == 255);
  CHECK(encode1(-4.0) == 0);
  CHECK(encode1(254.5) == 255);

  const auto ascii = save_pgm(GrayImage(1, 1, 127.4), PgmMode::ascii);
  CHECK(std::string(ascii.begin(), ascii.end()) == "P2\n1 1\n255\n127\n");
}

TEST_CASE("ascii output keeps lines within 70 characters") {
  std::mt19937_64 rng(3);
  const auto img = testing::random_integer_image(61, 3, rng);
  const auto bytes = save_pgm(img, PgmMode::ascii);
  std::size_t line = 0;
  for (auto c : bytes) {
    if (c == '\n') {
      CHECK(line <= 70);
      line = 0;
    } else {
      ++line;
    }
  }
  CHECK(load_pgm(bytes) == img);
}

TEST_CASE("save/load round trip is the identity on integer images") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 40);
  for (int trial = 0; trial < 60; ++trial) {
    const auto img = testing::random_integer_image(dim(rng), dim(rng), rng);
    const auto from_ascii = load_pgm(save_pgm(img, PgmMode::ascii));
    const auto from_binary = load_pgm(save_pgm(img, PgmMode::binary));
    REQUIRE(from_ascii == img);
    REQUIRE(from_binary == img);
  }
}

TEST_CASE("load is total: mutated streams decode validly or raise a positioned error") {
  std::mt19937_64 rng(5);
  const auto base_img = testing::random_integer_image(5, 4, rng);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto mode : {PgmMode::ascii, PgmMode::binary}) {
    const auto base = save_pgm(base_img, mode);
    std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      auto bytes = base;
      const int edits = 1 + trial % 3;
      for (int e = 0; e < edits; ++e) bytes[pos(rng)] = static_cast<std::uint8_t>(byte(rng));
      if (trial % 7 == 0) bytes.resize(pos(rng));
      try {
        const auto img = load_pgm(bytes);
        CHECK(img.size() == img.width() * img.height());
        for (double v : img.samples()) CHECK((v >= 0.0 && v <= 255.0));
      } catch (const ParseError& e) {
        CHECK(e.offset() <= bytes.size());
      }
    }
  }
}

TEST_CASE("extract") {
  std::vector<double> ramp(20 * 15);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i % 256);
  const GrayImage img(20, 15, ramp);

  CHECK(extract(img, {0, 0, 20, 15}) == img);
  const auto corner = extract(img, {0, 0, 1, 1});
  CHECK(corner.size() == 1);
  CHECK(corner.samples()[0] == ramp[0]);

  const auto block = extract(img, {7, 3, 10, 10});
  for (std::size_t y = 0; y < 10; ++y)
    for (std::size_t x = 0; x < 10; ++x) CHECK(block.at(x, y) == ramp[(y + 3) * 20 + (x + 7)]);

  CHECK_THROWS_AS(extract(img, {11, 0, 10, 10}), Error);
  CHECK_THROWS_AS(extract(img, {0, 6, 10, 10}), Error);
  CHECK_THROWS_AS(extract(img, {0, 0, 0, 1}), Error);
}

TEST_CASE("GrayImage enforces its invariants") {
  CHECK_THROWS_AS(GrayImage(0, 3), Error);
  CHECK_THROWS_AS(GrayImage(2, 2, std::vector<double>{1, 2, 3}), Error);
  CHECK_THROWS_AS(GrayImage(1, 1, std::vector<double>{std::nan("")}), Error);
}
