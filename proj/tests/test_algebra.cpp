#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "slicecalc/algebra.hpp"
#include "slicecalc/errors.hpp"
#include "slicecalc/generators.hpp"

using namespace slicecalc;

namespace {

// Independent Cl(0, m) product: concatenate generator words, bubble-sort with
// one sign flip per swap, then cancel adjacent equal generators (e_j^2 = -1).
int word_sign(std::vector<unsigned> word, std::uint32_t& blade) {
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        sign = -sign;
      }
    }
  }
  std::vector<unsigned> reduced;
  for (unsigned g : word) {
    if (!reduced.empty() && reduced.back() == g) {
      reduced.pop_back();
      sign = -sign;
    } else {
      reduced.push_back(g);
    }
  }
  blade = 0;
  for (unsigned g : reduced) blade |= 1U << g;
  return sign;
}

std::vector<unsigned> word_of(std::uint32_t blade) {
  std::vector<unsigned> w;
  for (unsigned g = 0; g < 32; ++g) {
    if (blade & (1U << g)) w.push_back(g);
  }
  return w;
}

AlgebraElement oracle_product(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out(a.signature());
  for (std::size_t x = 0; x < a.dimension(); ++x) {
    if (sgn(a[x]) == 0) continue;
    for (std::size_t y = 0; y < b.dimension(); ++y) {
      if (sgn(b[y]) == 0) continue;
      auto w = word_of(static_cast<std::uint32_t>(x));
      const auto wy = word_of(static_cast<std::uint32_t>(y));
      w.insert(w.end(), wy.begin(), wy.end());
      std::uint32_t blade = 0;
      const int s = word_sign(w, blade);
      out[blade] += a[x] * b[y] * s;
    }
  }
  return out;
}

AlgebraElement q(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return AlgebraElement(Signature::quaternion(), {a, b, c, d});
}

}  // namespace

TEST_CASE("quaternion multiplication table") {
  const Signature h = Signature::quaternion();
  const auto one = AlgebraElement::basis(h, 0);
  const auto i = AlgebraElement::basis(h, 1);
  const auto j = AlgebraElement::basis(h, 2);
  const auto k = AlgebraElement::basis(h, 3);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
  CHECK(k * k == -one);
  CHECK((-i) * j * i == -j);
}

TEST_CASE("Clifford generators square to -1 and anticommute") {
  const Signature c = Signature::clifford(3);
  const auto e1 = AlgebraElement::basis(c, 1);
  const auto e2 = AlgebraElement::basis(c, 2);
  const auto e12 = AlgebraElement::basis(c, 3);
  CHECK(e12 * e2 == -e1);
  CHECK(e1 * e1 == AlgebraElement::scalar(c, -1));
  CHECK(e1 * e2 == -(e2 * e1));
  CHECK(e1 * e2 == e12);
  CHECK(e12 * e12 == AlgebraElement::scalar(c, -1));
}

TEST_CASE("blade products match the word-reduction oracle") {
  for (unsigned m : {2U, 3U, 4U, 5U}) {
    const Signature sig = Signature::clifford(m);
    Rng rng(100 + m);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_element(sig, rng);
      const auto b = random_element(sig, rng);
      CHECK(mul(a, b) == oracle_product(a, b));
    }
  }
}

TEST_CASE("quaternions agree with Cl(0,2) under i=e1, j=e2, k=e1e2") {
  const Signature h = Signature::quaternion();
  const Signature c = Signature::clifford(2);
  Rng rng(11);
  auto to_clifford = [&](const AlgebraElement& x) {
    return AlgebraElement(c, {x[0], x[1], x[2], x[3]});
  };
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_element(h, rng);
    const auto b = random_element(h, rng);
    REQUIRE(to_clifford(mul(a, b)) == mul(to_clifford(a), to_clifford(b)));
  }
}

TEST_CASE("products are associative and bilinear") {
  for (const auto& sig : {Signature::quaternion(), Signature::clifford(3), Signature::clifford(4)}) {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_element(sig, rng);
      const auto b = random_element(sig, rng);
      const auto c = random_element(sig, rng);
      const Rational r = rng.small_rational(5, 5);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * r) * b == (a * b) * r);
    }
  }
}

TEST_CASE("mul_add accumulates the product") {
  const Signature sig = Signature::clifford(3);
  Rng rng(5);
  const auto a = random_element(sig, rng);
  const auto b = random_element(sig, rng);
  auto acc = random_element(sig, rng);
  const auto expected = acc + a * b;
  mul_add(a, b, acc);
  CHECK(acc == expected);
}

TEST_CASE("conjugation, real and imaginary parts") {
  CHECK(conj(q(1, 2, 0, 0)) == q(1, -2, 0, 0));
  CHECK(norm_sq(q(0, 1, 1, 0)) == 2);
  const auto x = q(3, 0, 0, 4);
  CHECK(conj(x) * x == q(25, 0, 0, 0));
  CHECK(re(x) == 3);
  CHECK(im(x) == q(0, 0, 0, 4));
  CHECK(AlgebraElement::scalar(x.signature(), re(x)) + im(x) == x);
}

TEST_CASE("conjugation is an anti-involution") {
  const Signature h = Signature::quaternion();
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(h, rng);
    const auto b = random_element(h, rng);
    CHECK(conj(conj(a)) == a);
    CHECK(conj(a * b) == conj(b) * conj(a));
  }
  const Signature c = Signature::clifford(4);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> coords;
    for (int h2 = 0; h2 < 5; ++h2) coords.push_back(rng.small_rational(4, 4));
    const auto x = AlgebraElement::from_coordinates(c, coords);
    CHECK(conj(conj(x)) == x);
    CHECK(conj(x) * x == AlgebraElement::scalar(c, norm_sq(x)));
  }
}

TEST_CASE("paravector-only operations reject other Clifford elements") {
  const Signature c = Signature::clifford(3);
  const auto e12 = AlgebraElement::basis(c, 3);
  CHECK_FALSE(e12.is_paravector());
  CHECK_THROWS_AS(conj(e12), NonParavector);
  CHECK_THROWS_AS(re(e12), NonParavector);
  CHECK_THROWS_AS(norm_sq(e12), NonParavector);
  CHECK_THROWS_AS(e12.coordinates(), NonParavector);
}

TEST_CASE("signature mismatch is an error") {
  const auto a = AlgebraElement::basis(Signature::quaternion(), 1);
  const auto b = AlgebraElement::basis(Signature::clifford(2), 1);
  CHECK_THROWS_AS(mul(a, b), SignatureMismatch);
  CHECK_THROWS_AS(Signature::clifford(1), std::exception);
}

TEST_CASE("element rendering") {
  CHECK(q(make_rational(1, 2), -3, 0, 1).to_string() == "1/2 - 3*i + k");
  CHECK(q(0, 0, 0, 0).to_string() == "0");
  CHECK(AlgebraElement::basis(Signature::clifford(3), 5).to_string() == "e1e3");
}

TEST_CASE("chart parameters map to the expected units") {
  const Signature h = Signature::quaternion();
  const std::vector<Rational> origin{0, 0};
  const std::vector<Rational> p10{1, 0};
  CHECK(unit_from_chart(h, origin).value() == AlgebraElement::basis(h, 1));
  CHECK(unit_from_chart(h, p10).value() == AlgebraElement::basis(h, 2));
}

TEST_CASE("sampled units are exact, distinct and start with the coordinate units") {
  for (const auto& sig : {Signature::quaternion(), Signature::clifford(3), Signature::clifford(5)}) {
    const auto units = sample_units(sig, 42, 200);
    REQUIRE(units.size() == 200);
    for (std::size_t h = 1; h <= sig.imaginary_count(); ++h) {
      CHECK(units[h - 1] == ImaginaryUnit::canonical(sig, h));
    }
    std::set<std::string> seen;
    for (const auto& u : units) {
      CHECK(mul(u.value(), u.value()) == AlgebraElement::scalar(sig, -1));
      CHECK(norm_sq(u.value()) == 1);
      CHECK(re(u.value()) == 0);
      seen.insert(u.to_string());
    }
    CHECK(seen.size() == units.size());
    CHECK(sample_units(sig, 42, 200) == units);
  }
}

TEST_CASE("ImaginaryUnit validation") {
  const Signature h = Signature::quaternion();
  CHECK_THROWS_AS(ImaginaryUnit::make(q(0, 1, 1, 0)), InvalidImaginaryUnit);
  CHECK_THROWS_AS(ImaginaryUnit::make(q(1, 0, 0, 0)), InvalidImaginaryUnit);
  const auto u = ImaginaryUnit::make(q(0, make_rational(3, 5), make_rational(4, 5), 0));
  CHECK(u.components() == std::vector<Rational>{make_rational(3, 5), make_rational(4, 5), 0});
  const Signature c = Signature::clifford(3);
  CHECK_THROWS_AS(ImaginaryUnit::make(AlgebraElement::basis(c, 3)), InvalidImaginaryUnit);
}
