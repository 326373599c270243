#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"

#include <edgetext/edge.hpp>

#include <cmath>
#include <cstdlib>
#include <random>

using namespace edgetext;

namespace {

SignedPlane plane(int w, int h, std::vector<std::int32_t> v) { return SignedPlane(w, h, std::move(v)); }

GrayImage rotate90(const GrayImage& img)  // clockwise
{
  GrayImage out(img.height(), img.width());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      out(img.height() - 1 - y, x) = img(x, y);
  return out;
}

}  // namespace

TEST_CASE("Sobel kernels")
{
  CHECK(sobel_x_kernel().coefficients == std::array<int, 9>{-1, 0, 1, -2, 0, 2, -1, 0, 1});
  CHECK(sobel_y_kernel().coefficients == std::array<int, 9>{-1, -2, -1, 0, 0, 0, 1, 2, 1});
  CHECK(sobel_x_kernel().at(1, 1) == 1);
  CHECK(sobel_y_kernel().at(0, 1) == 2);
}

TEST_CASE("convolve3x3 basics")
{
  std::mt19937 rng(1);
  const auto img = oracle::random_gray(rng, 7, 5);
  const auto zero_kernel = convolve3x3(img, Kernel3x3{});
  for (auto v : zero_kernel.pixels())
    CHECK(v == 0);

  const auto flat = convolve3x3(GrayImage(6, 6, 77), sobel_x_kernel());
  for (auto v : flat.pixels())
    CHECK(v == 0);
}

TEST_CASE("horizontal ramp gives 8 inside")
{
  GrayImage ramp(5, 5);
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < 5; ++x)
      ramp(x, y) = static_cast<std::uint8_t>(x);
  const auto gx = convolve3x3(ramp, sobel_x_kernel());
  const auto ref = oracle::correlate(ramp, oracle::sobel_x);
  for (int y = 1; y < 4; ++y)
    for (int x = 1; x < 4; ++x) {
      CHECK(ref[static_cast<std::size_t>(y) * 5 + x] == 8);
      CHECK(gx(x, y) == 8);
    }
  // Replicated borders halve the span at the edge columns.
  CHECK(gx(0, 2) == 4);
  CHECK(gx(4, 2) == 4);
}

TEST_CASE("coefficient (+1,+1) multiplies the pixel down-right of center")
{
  GrayImage img(3, 3, 0);
  img(2, 2) = 1;
  Kernel3x3 k;
  k.coefficients[8] = 5;
  CHECK(convolve3x3(img, k)(1, 1) == 5);
}

TEST_CASE("vertical step produces 400 beside the step")
{
  GrayImage img(6, 6, 0);
  for (int y = 0; y < 6; ++y)
    for (int x = 3; x < 6; ++x)
      img(x, y) = 100;
  const auto g = sobel_gradients(img);
  for (int y = 1; y < 5; ++y) {
    CHECK(g.gx(2, y) == 400);
    CHECK(g.gx(3, y) == 400);
    CHECK(g.gy(2, y) == 0);
    CHECK(g.gy(3, y) == 0);
    CHECK(g.gx(0, y) == 0);
  }
}

TEST_CASE("constant images have no gradient")
{
  for (int v : {0, 128, 255}) {
    const auto g = sobel_gradients(GrayImage(5, 4, static_cast<std::uint8_t>(v)), MagnitudeMode::exact);
    for (std::size_t i = 0; i < g.gx.size(); ++i) {
      CHECK(g.gx.pixels()[i] == 0);
      CHECK(g.gy.pixels()[i] == 0);
      CHECK(g.magnitude.pixels()[i] == 0);
    }
  }
}

TEST_CASE("rotation by 90 degrees swaps gx and gy")
{
  // With a clockwise rotation R, gx(R I) at R(p) equals -gy(I) at p.
  std::mt19937 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto img = oracle::random_gray(rng, 6, 6);
    const auto rot = rotate90(img);
    const auto g = sobel_gradients(img);
    const auto gr = sobel_gradients(rot);
    for (int y = 0; y < 6; ++y)
      for (int x = 0; x < 6; ++x) {
        const int rx = 6 - 1 - y;
        const int ry = x;
        REQUIRE(gr.gx(rx, ry) == -g.gy(x, y));
        REQUIRE(gr.gy(rx, ry) == g.gx(x, y));
        REQUIRE(gr.magnitude(rx, ry) == g.magnitude(x, y));
      }
  }
}

TEST_CASE("gradient magnitude modes")
{
  const auto gx = plane(3, 1, {3, 0, -3});
  const auto gy = plane(3, 1, {4, 0, -4});
  const auto exact = gradient_magnitude(gx, gy, MagnitudeMode::exact);
  const auto approx = gradient_magnitude(gx, gy, MagnitudeMode::approx);
  CHECK(exact(0, 0) == 5);
  CHECK(approx(0, 0) == 7);
  CHECK(exact(1, 0) == 0);
  CHECK(approx(1, 0) == 0);
  CHECK(exact(2, 0) == 5);
  CHECK(approx(2, 0) == 7);

  // sqrt(2) = 1.414 -> 1; sqrt(1 + 4) = 2.236 -> 2; sqrt(4 + 9) = 3.606 -> 4
  const auto e2 = gradient_magnitude(plane(3, 1, {1, 1, 2}), plane(3, 1, {1, 2, 3}), MagnitudeMode::exact);
  CHECK(e2(0, 0) == 1);
  CHECK(e2(1, 0) == 2);
  CHECK(e2(2, 0) == 4);

  CHECK_THROWS_AS(gradient_magnitude(plane(2, 1, {0, 0}), plane(1, 2, {0, 0}), MagnitudeMode::exact),
                  std::invalid_argument);
}

TEST_CASE("approx >= exact >= max(|gx|, |gy|) on random planes")
{
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> v(-1020, 1020);
  SignedPlane gx(32, 32), gy(32, 32);
  for (auto& p : gx.pixels())
    p = v(rng);
  for (auto& p : gy.pixels())
    p = v(rng);
  const auto e = gradient_magnitude(gx, gy, MagnitudeMode::exact);
  const auto a = gradient_magnitude(gx, gy, MagnitudeMode::approx);
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(a.pixels()[i] >= e.pixels()[i]);
    CHECK(e.pixels()[i] >= std::max(std::abs(gx.pixels()[i]), std::abs(gy.pixels()[i])));
  }
}

TEST_CASE("convolution is linear")
{
  // Images kept small so a*I1 + b*I2 stays within 8 bits.
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> v(0, 40);
  std::uniform_int_distribution<int> kc(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    GrayImage i1(5, 4), i2(5, 4), mix(5, 4);
    for (auto& p : i1.pixels())
      p = static_cast<std::uint8_t>(v(rng));
    for (auto& p : i2.pixels())
      p = static_cast<std::uint8_t>(v(rng));
    const int a = 1 + trial % 3, b = 2 - trial % 2;
    for (std::size_t i = 0; i < mix.size(); ++i)
      mix.pixels()[i] = static_cast<std::uint8_t>(a * i1.pixels()[i] + b * i2.pixels()[i]);
    Kernel3x3 k;
    for (auto& c : k.coefficients)
      c = kc(rng);
    const auto c1 = convolve3x3(i1, k);
    const auto c2 = convolve3x3(i2, k);
    const auto cm = convolve3x3(mix, k);
    for (std::size_t i = 0; i < cm.size(); ++i)
      REQUIRE(cm.pixels()[i] == a * c1.pixels()[i] + b * c2.pixels()[i]);
  }
}

TEST_CASE("edge_emphasize rescales onto [0, 255]")
{
  CHECK(edge_emphasize(SignedPlane(4, 4, 0)) == GrayImage(4, 4, 0));

  const auto ends = edge_emphasize(plane(2, 1, {0, 913}));
  CHECK(ends(0, 0) == 0);
  CHECK(ends(1, 0) == 255);

  const auto mid = edge_emphasize(plane(3, 1, {0, 5, 10}));
  CHECK(mid(0, 0) == 0);
  CHECK(mid(1, 0) == 128);  // 127.5 rounds up
  CHECK(mid(2, 0) == 255);

  CHECK_THROWS_AS(edge_emphasize(plane(2, 1, {-1, 3})), std::invalid_argument);
}

TEST_CASE("edge_emphasize maximum is 255 for any nonzero plane")
{
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> v(0, 2040);
  for (int trial = 0; trial < 30; ++trial) {
    SignedPlane p(7, 3);
    for (auto& s : p.pixels())
      s = v(rng) % (trial + 2);
    const bool nonzero = std::any_of(p.pixels().begin(), p.pixels().end(), [](int s) { return s; });
    const auto e = edge_emphasize(p);
    const auto mx = *std::max_element(e.pixels().begin(), e.pixels().end());
    CHECK(mx == (nonzero ? 255 : 0));
  }
}

TEST_CASE("magnitude mode names")
{
  CHECK(parse_magnitude_mode("exact") == MagnitudeMode::exact);
  CHECK(parse_magnitude_mode("approx") == MagnitudeMode::approx);
  CHECK(to_string(MagnitudeMode::exact) == "exact");
  CHECK_THROWS_AS(parse_magnitude_mode("L2"), std::invalid_argument);
}
