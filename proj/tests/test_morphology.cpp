#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"

#include <edgetext/morphology.hpp>

#include <random>

using namespace edgetext;

namespace {

bool subset(const BinaryImage& a, const BinaryImage& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.bits()[i] && !b.bits()[i])
      return false;
  return true;
}

}  // namespace

TEST_CASE("structuring element validation")
{
  CHECK_THROWS_AS(StructuringElement::rectangle(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(StructuringElement::rectangle(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(StructuringElement(3, 1, {1, 0, 1}), std::invalid_argument);  // origin unset
  CHECK_THROWS_AS(StructuringElement(3, 1, {1, 1}), std::invalid_argument);
  CHECK_NOTHROW(StructuringElement(3, 1, {0, 1, 0}));

  const auto se = StructuringElement::parse("5x1");
  CHECK(se.width() == 5);
  CHECK(se.height() == 1);
  CHECK(se.origin_x() == 2);
  CHECK(StructuringElement::parse("3X7").height() == 7);
  CHECK_THROWS_AS(StructuringElement::parse("3"), std::invalid_argument);
  CHECK_THROWS_AS(StructuringElement::parse("3x"), std::invalid_argument);
  CHECK_THROWS_AS(StructuringElement::parse("4x1"), std::invalid_argument);
  CHECK_THROWS_AS(StructuringElement::parse("3x3x3"), std::invalid_argument);
}

TEST_CASE("dilating an empty mask stays empty")
{
  CHECK(dilate(BinaryImage(6, 5), StructuringElement::rectangle(3, 3)).count() == 0);
}

TEST_CASE("single pixel grows into the element's footprint")
{
  BinaryImage m(5, 5);
  m.set(2, 2);
  const auto out = dilate(m, StructuringElement::rectangle(3, 3));
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < 5; ++x)
      CHECK(out.test(x, y) == (x >= 1 && x <= 3 && y >= 1 && y <= 3));
}

TEST_CASE("horizontal bar closes a one-pixel gap")
{
  BinaryImage m(4, 1);
  m.set(0, 0);
  m.set(2, 0);
  const auto se = StructuringElement::rectangle(3, 1);
  const auto out = dilate(m, se);
  CHECK(out == oracle::dilate_by_translates(m, se));
  for (int x = 0; x < 4; ++x)
    CHECK(out.test(x, 0));
}

TEST_CASE("dilation clips at the image border")
{
  BinaryImage m(3, 3);
  m.set(0, 0);
  const auto out = dilate(m, StructuringElement::rectangle(5, 5));
  CHECK(out.count() == 9);
}

TEST_CASE("agrees with the union-of-translates oracle")
{
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> ext(0, 3), cell(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_mask(rng, 8, 8, 0.15);
    const int w = 2 * ext(rng) + 1;
    const int h = 2 * ext(rng) + 1;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(w * h));
    for (auto& c : cells)
      c = static_cast<std::uint8_t>(cell(rng));
    cells[static_cast<std::size_t>((h / 2) * w + w / 2)] = 1;
    const StructuringElement se(w, h, cells);
    REQUIRE(dilate(m, se) == oracle::dilate_by_translates(m, se));
    const auto rect = StructuringElement::rectangle(w, h);
    REQUIRE(dilate(m, rect) == oracle::dilate_by_translates(m, rect));
  }
}

TEST_CASE("extensivity, monotonicity and 1x1 identity")
{
  std::mt19937 rng(32);
  const auto se = StructuringElement::rectangle(3, 5);
  const auto one = StructuringElement::rectangle(1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = oracle::random_mask(rng, 10, 9, 0.1);
    auto b = a;
    const auto extra = oracle::random_mask(rng, 10, 9, 0.1);
    for (std::size_t i = 0; i < b.size(); ++i)
      b.bits()[i] |= extra.bits()[i];
    REQUIRE(subset(a, dilate(a, se)));
    REQUIRE(subset(dilate(a, se), dilate(b, se)));
    REQUIRE(dilate(a, one) == a);
  }
}
