#include <doctest.h>

#include <cmath>

#include "gsc/nn/ops.hpp"
#include "gsc/nn/optim.hpp"
#include "gsc/nn/parameters.hpp"

using namespace gsc;
using namespace gsc::nn;

TEST_CASE("softmax of equal logits is uniform") {
  Tensor p = softmax_rows(Tensor::row({0.0, 0.0, 0.0}));
  for (double v : p.values()) CHECK(v == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("sigmoid at zero") { CHECK(sigmoid(Tensor::scalar(0.0)).item() == 0.5); }

TEST_CASE("softmax and log-softmax stay finite for large magnitudes") {
  Tensor x = Tensor::row({1000.0, -1000.0, 999.0, 0.0});
  Tensor p = softmax_rows(x);
  Tensor lp = log_softmax_rows(x);
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::isfinite(p.values()[i]));
    CHECK(std::isfinite(lp.values()[i]));
    total += p.values()[i];
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conv1d without padding matches a sliding dot product") {
  // Length-5 sequence, 2 input channels, 3 output channels, kernel width 3.
  Rng rng(3);
  std::vector<double> xv(10), wv(3 * 3 * 2), bv(3);
  for (double& v : xv) v = rng.uniform(-1, 1);
  for (double& v : wv) v = rng.uniform(-1, 1);
  for (double& v : bv) v = rng.uniform(-1, 1);
  Tensor y = conv1d(Tensor::matrix(5, 2, xv), Tensor::matrix(3, 6, wv), Tensor::row(bv), 3, 0);
  REQUIRE(y.rows() == 3);
  REQUIRE(y.cols() == 3);
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t o = 0; o < 3; ++o) {
      double expected = bv[o];
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t c = 0; c < 2; ++c) expected += wv[o * 6 + k * 2 + c] * xv[(p + k) * 2 + c];
      }
      CHECK(y.at(p, o) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("conv1d with padding keeps the sequence length") {
  Tensor y = conv1d(Tensor(Shape{4, 2}, 1.0), Tensor(Shape{5, 6}, 0.5), Tensor(Shape{1, 5}, 0.0), 3, 1);
  CHECK(y.rows() == 4);
  CHECK(y.at(0, 0) == doctest::Approx(2.0));  // two real taps at the border
  CHECK(y.at(1, 0) == doctest::Approx(3.0));
}

TEST_CASE("shape mismatch names both shapes") {
  Tensor a(Shape{2, 3}), b(Shape{2, 2});
  try {
    matmul(a, b);
    FAIL("expected ShapeError");
  } catch (const ShapeError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("[2, 3]") != std::string::npos);
    CHECK(msg.find("[2, 2]") != std::string::npos);
  }
  CHECK_THROWS_AS(add(a, b), ShapeError);
}

TEST_CASE("backward of x*x at 3 gives 6") {
  Tensor x = Tensor::scalar(3.0);
  x.set_requires_grad(true);
  backward(mul(x, x));
  CHECK(x.grad()[0] == doctest::Approx(6.0));
  CHECK(tape_size() == 0);
}

TEST_CASE("gradient of sum(softmax(z)) vanishes") {
  Tensor z = Tensor::row({0.3, -1.2, 2.0, 0.7});
  z.set_requires_grad(true);
  backward(sum(softmax_rows(z)));
  for (double g : z.grad()) CHECK(std::abs(g) < 1e-12);
}

TEST_CASE("backward rejects non-scalar losses") {
  Tensor z = Tensor::row({1.0, 2.0});
  z.set_requires_grad(true);
  Tensor y = scale(z, 2.0);
  CHECK_THROWS_AS(backward(y), ShapeError);
  clear_tape();
}

TEST_CASE("no-grad guard keeps the tape empty") {
  Tensor z = Tensor::row({1.0, 2.0});
  z.set_requires_grad(true);
  {
    NoGradGuard guard;
    Tensor y = sum(mul(z, z));
    CHECK(!y.requires_grad());
  }
  CHECK(tape_size() == 0);
}

TEST_CASE("max_rows routes gradient to the argmax") {
  Tensor x = Tensor::matrix(3, 2, {1.0, 5.0, 4.0, 2.0, 3.0, 0.0});
  x.set_requires_grad(true);
  Tensor m = max_rows(x);
  CHECK(m.values()[0] == 4.0);
  CHECK(m.values()[1] == 5.0);
  backward(sum(m));
  std::vector<double> expected{0, 1, 1, 0, 0, 0};
  for (std::size_t i = 0; i < 6; ++i) CHECK(x.grad()[i] == expected[i]);
}

TEST_CASE("gather and scatter are adjoint") {
  Tensor x = Tensor::matrix(3, 2, {1, 2, 3, 4, 5, 6});
  std::vector<std::size_t> idx{2, 0, 2};
  Tensor g = gather_rows(x, idx);
  CHECK(g.at(0, 0) == 5);
  CHECK(g.at(1, 1) == 2);
  Tensor s = scatter_add_rows(g, idx, 3);
  CHECK(s.at(2, 0) == 10);
  CHECK(s.at(1, 0) == 0);
  CHECK(s.at(0, 1) == 2);
}

TEST_CASE("binary cross-entropy values") {
  std::vector<double> labels{1, 0, 0, 1};
  CHECK(binary_cross_entropy(Tensor::row({0.5, 0.5, 0.5, 0.5}), labels).item() ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(binary_cross_entropy(Tensor::row({1.0, 0.0, 0.0, 1.0}), labels).item() < 1e-6);
  CHECK_THROWS_AS(binary_cross_entropy(Tensor::row({1.5, 0.0, 0.0, 1.0}), labels), std::domain_error);
  // Hand-computed: -(ln .8 + ln .9 + ln .7 + ln .6) / 4
  const double expected = -(std::log(0.8) + std::log(0.9) + std::log(0.7) + std::log(0.6)) / 4.0;
  CHECK(binary_cross_entropy(Tensor::row({0.8, 0.1, 0.3, 0.6}), labels).item() ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("forward values are bitwise deterministic") {
  auto run = [] {
    Rng rng(11);
    ParameterStore store;
    Tensor w = store.create("w", Shape{4, 4}, Init::kGlorot, rng, 4, 4);
    Tensor x(Shape{3, 4}, 0.25);
    Tensor y = tanh(linear(x, w));
    return std::vector<double>(y.values().begin(), y.values().end());
  };
  CHECK(run() == run());
}

TEST_CASE("adam leaves a parameter with zero gradient unchanged") {
  Rng rng(1);
  ParameterStore store;
  Tensor p = store.create("p", Shape{1}, Init::kZeros, rng);
  p.mutable_values()[0] = 2.5;
  backward(scale(sum(p), 0.0));
  auto params = store.all();
  adam_update(params, AdamConfig{});
  CHECK(p.values()[0] == 2.5);
  CHECK(!p.has_grad());
}

TEST_CASE("first adam step moves by about lr") {
  Rng rng(1);
  ParameterStore store;
  Tensor p = store.create("p", Shape{1}, Init::kZeros, rng);
  p.mutable_values()[0] = 1.0;
  backward(scale(sum(p), -3.7));
  auto params = store.all();
  AdamConfig cfg;
  cfg.lr = 0.01;
  adam_update(params, cfg);
  CHECK(p.values()[0] - 1.0 == doctest::Approx(0.01).epsilon(1e-6));
  CHECK(params[0]->step_count == 1);
}

TEST_CASE("adam without gradients is an error") {
  Rng rng(1);
  ParameterStore store;
  store.create("p", Shape{2}, Init::kZeros, rng);
  auto params = store.all();
  CHECK_THROWS(adam_update(params, AdamConfig{}));
}

TEST_CASE("adam descends a quadratic bowl monotonically after warm-up") {
  Rng rng(5);
  ParameterStore store;
  Tensor p = store.create("p", Shape{1, 3}, Init::kZeros, rng);
  const std::vector<double> start{2.0, -1.5, 0.75};
  std::copy(start.begin(), start.end(), p.mutable_values().begin());
  Tensor target = Tensor::row({0.1, 0.2, -0.3});
  auto params = store.all();
  AdamConfig cfg;
  cfg.lr = 0.01;
  std::vector<double> losses;
  for (int step = 0; step < 100; ++step) {
    Tensor d = sub(p, target);
    Tensor loss = sum(mul(d, d));
    losses.push_back(loss.item());
    backward(loss);
    adam_update(params, cfg);
  }
  for (std::size_t i = 6; i < losses.size(); ++i) CHECK(losses[i] < losses[i - 1]);
}

TEST_CASE("parameter store round-trips through json exactly") {
  Rng rng(9);
  ParameterStore a;
  a.create("x.weight", Shape{3, 5}, Init::kGlorot, rng, 5, 3);
  a.create("x.bias", Shape{1, 3}, Init::kEmbedding, rng);
  const std::string text = a.to_json().dump();
  Rng other(10);
  ParameterStore b;
  b.create("x.weight", Shape{3, 5}, Init::kGlorot, other, 5, 3);
  b.create("x.bias", Shape{1, 3}, Init::kEmbedding, other);
  b.load_json(nlohmann::json::parse(text));
  for (const auto* name : {"x.weight", "x.bias"}) {
    auto va = a.get(name).values();
    auto vb = b.get(name).values();
    CHECK(std::equal(va.begin(), va.end(), vb.begin()));
  }
  ParameterStore c;
  c.create("x.weight", Shape{5, 3}, Init::kZeros, other);
  c.create("x.bias", Shape{1, 3}, Init::kZeros, other);
  CHECK_THROWS(c.load_json(nlohmann::json::parse(text)));
}

TEST_CASE("relu, max_rows and binary cross-entropy propagate NaN") {
  const double nan = std::nan("");
  CHECK(std::isnan(relu(Tensor::row({nan, 1.0})).values()[0]));
  CHECK(std::isnan(max_rows(Tensor::matrix(2, 1, {nan, 1.0})).values()[0]));
  CHECK(std::isnan(max_rows(Tensor::matrix(2, 1, {1.0, nan})).values()[0]));
  CHECK(std::isnan(binary_cross_entropy(Tensor::row({nan}), std::vector<double>{1.0}).item()));
  CHECK_THROWS_AS(binary_cross_entropy(Tensor::row({1.5}), std::vector<double>{1.0}), std::domain_error);
}

TEST_CASE("tensor storage is 64-byte aligned") {
  for (std::size_t n : {1u, 3u, 17u, 100u}) {
    Tensor a(Shape{n, 3}, 1.0);
    Tensor b = matmul(a, Tensor(Shape{3, 5}, 2.0));
    CHECK(reinterpret_cast<std::uintptr_t>(a.values().data()) % 64 == 0);
    CHECK(reinterpret_cast<std::uintptr_t>(b.values().data()) % 64 == 0);
  }
}
