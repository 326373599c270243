#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"

#include <edgetext/preprocess.hpp>

#include <random>

using namespace edgetext;

TEST_CASE("constant image is unchanged")
{
  GrayImage img(6, 4, 7);
  CHECK(median_filter(img) == img);
}

TEST_CASE("single impulse is removed")
{
  GrayImage img(5, 5, 0);
  img(2, 2) = 255;
  CHECK(median_filter(img, {3}) == GrayImage(5, 5, 0));
}

TEST_CASE("window 1 is the identity")
{
  std::mt19937 rng(3);
  const auto img = oracle::random_gray(rng, 9, 7);
  CHECK(median_filter(img, {1}) == img);
}

TEST_CASE("even or non-positive windows are rejected")
{
  GrayImage img(3, 3);
  CHECK_THROWS_AS(median_filter(img, {4}), std::invalid_argument);
  CHECK_THROWS_AS(median_filter(img, {0}), std::invalid_argument);
  CHECK_THROWS_AS(median_filter(img, {-3}), std::invalid_argument);
}

TEST_CASE("matches brute-force sorted neighborhoods with replicated borders")
{
  std::mt19937 rng(5);
  for (int window : {3, 5, 7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int w = 1 + trial % 6 + window / 2;
      const int h = 1 + (trial * 3) % 8;
      const auto img = oracle::random_gray(rng, w, h);
      const auto out = median_filter(img, {window});
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
          REQUIRE(out(x, y) == oracle::median_brute_force(img, x, y, window));
    }
  }
}

TEST_CASE("output stays inside the input range")
{
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> lo(0, 100), span(0, 155);
  for (int i = 0; i < 20; ++i) {
    const int a = lo(rng);
    const int b = a + span(rng);
    std::uniform_int_distribution<int> v(a, b);
    GrayImage img(8, 8);
    for (auto& p : img.pixels())
      p = static_cast<std::uint8_t>(v(rng));
    const auto [mn, mx] = std::minmax_element(img.pixels().begin(), img.pixels().end());
    const auto out = median_filter(img, {5});
    for (auto p : out.pixels()) {
      CHECK(p >= *mn);
      CHECK(p <= *mx);
    }
  }
}

TEST_CASE("windows wider than the image still replicate edges")
{
  GrayImage img(1, 1, 99);
  CHECK(median_filter(img, {7})(0, 0) == 99);

  GrayImage row(2, 1);
  row(0, 0) = 10;
  row(1, 0) = 200;
  const auto out = median_filter(row, {5});
  CHECK(out(0, 0) == oracle::median_brute_force(row, 0, 0, 5));
  CHECK(out(1, 0) == oracle::median_brute_force(row, 1, 0, 5));
}
