#include <doctest.h>

#include <random>

#include "strcg/gf.hpp"

using namespace strcg;

TEST_CASE("prime field arithmetic") {
  auto f3 = FiniteField::prime(3);
  CHECK(f3->add(2, 2) == 1);
  CHECK(f3->inv(2) == 2);  // 2*2 = 4 = 1
  CHECK(f3->neg(1) == 2);
  CHECK(f3->mul(2, 2) == 1);
  CHECK_THROWS_AS(f3->inv(0), std::domain_error);
}

TEST_CASE("GF(4) with modulus x^2 + x + 1") {
  auto f4 = FiniteField::extension(2, 2);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
  // codes: 0, 1, x = 2, x+1 = 3
  FiniteField::Elem x = f4->from_coeffs(std::vector<int>{0, 1});
  CHECK(x == 2);
  CHECK(f4->mul(x, x) == 3);  // x^2 = x + 1
  CHECK(f4->add(x, x) == 0);
  CHECK(f4->inv(x) == 3);     // x(x+1) = x^2 + x = 1
}

TEST_CASE("default moduli are irreducible and documented for GF(2^k)") {
  CHECK(FiniteField::default_modulus(2, 2) == std::vector<int>{1, 1, 1});
  CHECK(FiniteField::default_modulus(2, 3) == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
  CHECK(FiniteField::default_modulus(2, 4) == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(FiniteField::default_modulus(2, 5) == std::vector<int>{1, 0, 1, 0, 0, 1});
  CHECK(FiniteField::default_modulus(2, 6) == std::vector<int>{1, 1, 0, 0, 0, 0, 1});
  CHECK(FiniteField::default_modulus(2, 7) == std::vector<int>{1, 1, 0, 0, 0, 0, 0, 1});
  CHECK(FiniteField::default_modulus(2, 8) ==
        std::vector<int>{1, 1, 0, 1, 1, 0, 0, 0, 1});  // x^8+x^4+x^3+x+1
  for (int k = 2; k <= 8; ++k) {
    auto f = FiniteField::extension(2, k);
    CHECK(f->order() == (1u << k));
    // every nonzero element inverts
    for (FiniteField::Elem a = 1; a < f->order(); ++a) {
      CHECK(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("rejects a reducible modulus") {
  // x^2 + 1 = (x+1)^2 over GF(2)
  CHECK_THROWS_AS(FiniteField::extension(2, 2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::prime(6), std::invalid_argument);
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(99);
  for (auto field : {FiniteField::prime(3), FiniteField::prime(7),
                     FiniteField::extension(2, 4), FiniteField::extension(3, 2)}) {
    std::uint32_t q = static_cast<std::uint32_t>(field->order());
    for (int trial = 0; trial < 200; ++trial) {
      FiniteField::Elem a = rng() % q, b = rng() % q, c = rng() % q;
      CHECK(field->add(field->add(a, b), c) == field->add(a, field->add(b, c)));
      CHECK(field->mul(field->mul(a, b), c) == field->mul(a, field->mul(b, c)));
      CHECK(field->mul(a, field->add(b, c)) ==
            field->add(field->mul(a, b), field->mul(a, c)));
      CHECK(field->add(a, field->neg(a)) == 0);
      if (a != 0) CHECK(field->mul(a, field->inv(a)) == 1);
    }
  }
}

TEST_CASE("exhaustive axioms on GF(8) and GF(9)") {
  for (auto field : {FiniteField::extension(2, 3), FiniteField::extension(3, 2)}) {
    std::uint32_t q = static_cast<std::uint32_t>(field->order());
    for (FiniteField::Elem a = 0; a < q; ++a) {
      for (FiniteField::Elem b = 0; b < q; ++b) {
        CHECK(field->mul(a, b) == field->mul(b, a));
        for (FiniteField::Elem c = 0; c < q; ++c) {
          CHECK(field->mul(field->mul(a, b), c) == field->mul(a, field->mul(b, c)));
          CHECK(field->mul(a, field->add(b, c)) ==
                field->add(field->mul(a, b), field->mul(a, c)));
        }
      }
    }
    // the multiplicative group is cyclic of order q-1: some element has
    // full order
    bool found_generator = false;
    for (FiniteField::Elem a = 1; a < q && !found_generator; ++a) {
      std::uint32_t ord = 1;
      FiniteField::Elem x = a;
      while (x != 1) {
        x = field->mul(x, a);
        ++ord;
      }
      found_generator = (ord == q - 1);
    }
    CHECK(found_generator);
  }
}

TEST_CASE("coefficient round trip") {
  auto f9 = FiniteField::extension(3, 2);
  for (FiniteField::Elem a = 0; a < 9; ++a) {
    CHECK(f9->from_coeffs(f9->coeffs(a)) == a);
  }
  CHECK(f9->from_int(-1) == 2);
  CHECK(f9->name() == "3^2");
  CHECK(FiniteField::prime(5)->name() == "5");
}
