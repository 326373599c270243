#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"

#include <edgetext/binarize.hpp>

#include <random>

using namespace edgetext;

TEST_CASE("histogram counts")
{
  const GrayImage img(2, 2, {0, 0, 255, 7});
  const auto h = histogram(img);
  CHECK(h.counts[0] == 2);
  CHECK(h.counts[7] == 1);
  CHECK(h.counts[255] == 1);
  CHECK(h.total() == 4);

  const auto c = histogram(GrayImage(5, 3, 42));
  CHECK(c.counts[42] == 15);
  CHECK(c.total() == 15);

  std::mt19937 rng(1);
  const auto r = oracle::random_gray(rng, 13, 9);
  CHECK(histogram(r).total() == 13 * 9);
}

TEST_CASE("bimodal histogram picks the smallest maximizing threshold")
{
  Histogram256 h;
  h.counts[10] = 100;
  h.counts[200] = 100;
  CHECK(oracle::otsu(h) == 10);
  CHECK(otsu_threshold(h) == 10);
}

TEST_CASE("constant histogram thresholds at its value")
{
  for (int v : {0, 1, 77, 255}) {
    Histogram256 h;
    h.counts[v] = 9;
    CHECK(oracle::otsu(h) == v);
    CHECK(otsu_threshold(h) == v);
    // The whole constant image stays background.
    CHECK(apply_threshold(GrayImage(3, 3, static_cast<std::uint8_t>(v)), otsu_threshold(h)).count() == 0);
  }
}

TEST_CASE("three dark pixels and one bright")
{
  Histogram256 h;
  h.counts[0] = 3;
  h.counts[255] = 1;
  CHECK(oracle::otsu(h) == 0);
  CHECK(otsu_threshold(h) == 0);
}

TEST_CASE("empty histogram is rejected")
{
  CHECK_THROWS_AS(otsu_threshold(Histogram256{}), std::invalid_argument);
}

TEST_CASE("otsu matches the within-class-variance oracle")
{
  std::mt19937 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const auto h = oracle::random_histogram(rng);
    REQUIRE(otsu_threshold(h) == oracle::otsu(h));
  }
}

TEST_CASE("threshold is invariant under histogram scaling")
{
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> k(2, 1000);
  for (int i = 0; i < 200; ++i) {
    const auto h = oracle::random_histogram(rng);
    auto scaled = h;
    const auto factor = static_cast<std::uint64_t>(k(rng));
    for (auto& c : scaled.counts)
      c *= factor;
    REQUIRE(otsu_threshold(scaled) == otsu_threshold(h));
  }
}

TEST_CASE("apply_threshold uses a strict inequality")
{
  const GrayImage img(3, 1, {0, 128, 255});
  const auto m = apply_threshold(img, 100);
  CHECK_FALSE(m.test(0, 0));
  CHECK(m.test(1, 0));
  CHECK(m.test(2, 0));

  std::mt19937 rng(4);
  const auto r = oracle::random_gray(rng, 8, 8);
  CHECK(apply_threshold(r, 255).count() == 0);
  CHECK(apply_threshold(GrayImage(4, 4, 9), 9).count() == 0);
}

TEST_CASE("foreground count is non-increasing in t")
{
  std::mt19937 rng(5);
  const auto img = oracle::random_gray(rng, 16, 16);
  std::size_t prev = img.size() + 1;
  for (int t = 0; t < 256; ++t) {
    const auto n = apply_threshold(img, static_cast<std::uint8_t>(t)).count();
    CHECK(n <= prev);
    prev = n;
  }
}
