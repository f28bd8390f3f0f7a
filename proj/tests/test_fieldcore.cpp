#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "kernels.hpp"
#include "support.hpp"
#include "trinomial/binpoly.hpp"
#include "trinomial/cyclic.hpp"
#include "trinomial/errors.hpp"

using namespace trinomial;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_SUITE("binpoly") {
  TEST_CASE("hex round trip and degree") {
    CHECK(BinPoly::from_hex("0x0").is_zero());
    CHECK(BinPoly().to_hex() == "0x0");
    CHECK(BinPoly().degree() == -1);
    CHECK(BinPoly::from_hex("0xB").to_hex() == "0xb");
    CHECK(BinPoly::from_hex("0xB").degree() == 3);
    const std::string big = "0x8000000000000000000000000000000000000000000000000000000000000003";
    CHECK(BinPoly::from_hex(big).to_hex() == big);
    CHECK(BinPoly::from_hex(big).degree() == 255);
    CHECK(code_of([] { (void)BinPoly::from_hex("0xzz"); }) == ErrorCode::ParseError);
  }

  TEST_CASE("ordering follows the integer encoding") {
    CHECK(BinPoly(0xB) < BinPoly(0xD));
    CHECK(BinPoly(0xFFFF) < BinPoly::monomial(64));
  }

  TEST_CASE("smallest irreducible agrees with trial division") {
    for (unsigned d = 2; d <= 16; ++d) {
      std::uint64_t want = std::uint64_t{1} << d;
      while (!naive_irreducible(want)) ++want;
      CHECK(smallest_irreducible(d) == BinPoly(want));
    }
  }

  TEST_CASE("Rabin test agrees with trial division on every degree-10 polynomial") {
    for (std::uint64_t p = 1u << 10; p < (1u << 11); ++p) CHECK(is_irreducible(BinPoly(p)) == naive_irreducible(p));
  }
}

TEST_SUITE("base field") {
  TEST_CASE("default moduli") {
    CHECK(build_base_field(3)->modulus().to_hex() == "0xb");
    CHECK(build_base_field(4)->modulus().to_hex() == "0x13");
    CHECK(build_base_field(3, BinPoly(0xD))->modulus().to_hex() == "0xd");
  }

  TEST_CASE("construction errors") {
    CHECK(code_of([] { (void)build_base_field(1); }) == ErrorCode::UnsupportedDegree);
    CHECK(code_of([] { (void)build_base_field(513); }) == ErrorCode::UnsupportedDegree);
    CHECK(code_of([] { (void)build_base_field(3, BinPoly(0xF)); }) == ErrorCode::NonIrreducible);
    CHECK(code_of([] { (void)build_base_field(4, BinPoly(0xB)); }) == ErrorCode::BadParams);
  }

  TEST_CASE("exact orders for large n") {
    const auto f = build_base_field(512);
    CHECK(f->group_order() == pow2(512) - 1);
    CHECK(f->circle_order() == pow2(512) + 1);
    CHECK(f->modulus().degree() == 512);
  }

  TEST_CASE("deterministic construction") {
    for (unsigned n : {5u, 64u, 127u}) CHECK(build_base_field(n)->modulus() == build_base_field(n)->modulus());
  }

  TEST_CASE("GF(8) products and inverses") {
    const auto f = build_base_field(3);
    CHECK((elt(*f, 0x2) * elt(*f, 0x6)).to_hex() == "0x7");
    CHECK(elt(*f, 0x2).inv().to_hex() == "0x5");
    CHECK((elt(*f, 0x2) * elt(*f, 0x5)).is_one());
    CHECK(code_of([&] { (void)f->zero().inv(); }) == ErrorCode::DivisionByZero);
  }

  TEST_CASE("arithmetic agrees with shift-and-add on all pairs, n <= 8") {
    for (unsigned n = 2; n <= 8; ++n) {
      const auto f = build_base_field(n);
      const NaiveField ref{n, f->modulus().words()[0]};
      const std::uint64_t size = std::uint64_t{1} << n;
      for (std::uint64_t a = 0; a < size; ++a) {
        for (std::uint64_t b = 0; b < size; ++b) {
          REQUIRE((elt(*f, a) * elt(*f, b)).words()[0] == ref.mul(a, b));
        }
        REQUIRE(elt(*f, a).square().words()[0] == ref.mul(a, a));
        REQUIRE(elt(*f, a).trace() == static_cast<int>(ref.trace(a)));
      }
    }
  }

  TEST_CASE("multiword products agree with polynomial reduction") {
    std::mt19937_64 gen(7);
    for (unsigned n : {63u, 64u, 65u, 127u, 128u, 233u, 512u}) {
      const auto f = build_base_field(n);
      for (int i = 0; i < 50; ++i) {
        const BaseElt a = f->random(gen), b = f->random(gen);
        REQUIRE((a * b).to_poly() == mul_mod(a.to_poly(), b.to_poly(), f->modulus()));
        REQUIRE(a.square().to_poly() == mul_mod(a.to_poly(), a.to_poly(), f->modulus()));
      }
    }
  }

  TEST_CASE("portable kernels agree with the selected kernels") {
    std::mt19937_64 gen(11);
    const detail::KernelSet portable = detail::portable_kernels();
    for (unsigned n : {3u, 31u, 64u, 100u, 300u}) {
      const auto f = build_base_field(n);
      detail::FieldShape shape;
      shape.n = n;
      shape.words = f->word_count();
      shape.top_mask = n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
      BinPoly low = f->modulus();
      low.set_bit(n, false);
      shape.low_words = static_cast<unsigned>(low.words().size());
      for (unsigned i = 0; i < shape.low_words; ++i) shape.low[i] = low.words()[i];
      for (int i = 0; i < 50; ++i) {
        const BaseElt a = f->random(gen), b = f->random(gen);
        REQUIRE(portable.mul(shape, a.words(), b.words()) == (a * b).words());
        REQUIRE(portable.square(shape, a.words()) == a.square().words());
      }
    }
  }

  TEST_CASE("inverse, Frobenius and group order, exhaustive n <= 10") {
    for (unsigned n = 2; n <= 10; ++n) {
      const auto f = build_base_field(n);
      for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
        const BaseElt x = elt(*f, v);
        REQUIRE((x * x.inv()).is_one());
        REQUIRE(x.pow(f->group_order()).is_one());
        REQUIRE(x.pow(pow2(n)) == x);
        REQUIRE(x.pow(BigInt(-1)) == x.inv());
        REQUIRE(x.frob(-1).square() == x);
      }
    }
  }

  TEST_CASE("trace") {
    for (unsigned n : {3u, 4u, 127u, 128u}) {
      const auto f = build_base_field(n);
      CHECK(f->zero().trace() == 0);
      CHECK(f->one().trace() == static_cast<int>(n % 2));
    }
    CHECK(elt(*build_base_field(3), 0x2).trace() == 0);
  }

  TEST_CASE("pow with huge exponents") {
    const auto f = build_base_field(127);
    std::mt19937_64 gen(3);
    const BaseElt x = f->random(gen);
    CHECK(x.pow(f->group_order() * 5 + 2) == x.square());
    CHECK(x.pow(BigInt(0)).is_one());
  }

  TEST_CASE("hex parsing") {
    const auto f = build_base_field(3);
    CHECK(f->from_hex("0x7").to_hex() == "0x7");
    CHECK(code_of([&] { (void)f->from_hex("0x8"); }) == ErrorCode::ParseError);
  }

  TEST_CASE("mixing fields is rejected") {
    const auto f3 = build_base_field(3);
    const auto f4 = build_base_field(4);
    CHECK(code_of([&] { (void)(f3->one() + f4->one()); }) == ErrorCode::FieldMismatch);
  }
}

TEST_SUITE("tower") {
  TEST_CASE("constants for n = 3") {
    const auto t = tower_of(3);
    CHECK(t->delta().is_one());
    CHECK(t->omega() == t->u());
    CHECK(t->u().conj() == t->make(t->base().one(), t->base().one()));
  }

  TEST_CASE("delta is the first trace-one element") {
    for (unsigned n = 2; n <= 12; ++n) {
      const auto t = tower_of(n);
      const NaiveField ref{n, t->base().modulus().words()[0]};
      std::uint64_t first = 1;
      while (ref.trace(first) != 1) ++first;
      CHECK(t->delta().words()[0] == first);
    }
  }

  TEST_CASE("delta is the lowest trace-one monomial") {
    const auto t30 = tower_of(30);
    CHECK(t30->base().modulus().to_hex() == "0x40000003");
    CHECK(t30->delta() == elt(t30->base(), std::uint64_t{1} << 29));
    for (unsigned n : {30u, 64u, 100u, 128u, 255u, 512u}) {
      const auto t = tower_of(n);
      const BaseField& f = t->base();
      const BaseElt x = f.from_u64(2);
      BaseElt m = f.one();
      while (m != t->delta()) {
        REQUIRE(m.trace() == 0);
        m = m * x;
      }
      CHECK(m.trace() == 1);
    }
  }

  TEST_CASE("zeta and omega") {
    for (unsigned n : {2u, 3u, 4u, 5u, 8u, 63u, 64u, 127u, 200u}) {
      const auto t = tower_of(n);
      const TowerElt& z = t->zeta();
      CHECK_FALSE(z.is_one());
      CHECK(z.pow(t->base().circle_order()).is_one());
      CHECK(z.norm().is_one());
      const TowerElt& w = t->omega();
      CHECK_FALSE(w.is_one());
      CHECK(w.pow(BigInt(3)).is_one());
      CHECK((t->inv_zeta_plus_one() * (z + t->one())).is_one());
    }
  }

  TEST_CASE("u^2 = u + delta") {
    for (unsigned n : {4u, 9u, 64u}) {
      const auto t = tower_of(n);
      CHECK(t->u().square() == t->u() + t->embed(t->delta()));
    }
  }

  TEST_CASE("conjugation, norm and unit circle") {
    std::mt19937_64 gen(5);
    for (unsigned n : {3u, 6u, 31u, 64u, 130u}) {
      const auto t = tower_of(n);
      const unsigned long long nn = n;
      for (int i = 0; i < 40; ++i) {
        const TowerElt c = t->random(gen);
        REQUIRE(c.conj().conj() == c);
        REQUIRE(c.conj() == c.pow(pow2(n)));
        REQUIRE(c.frob(static_cast<long long>(nn)) == c.conj());
        REQUIRE(t->embed(c.norm()) == c * c.conj());
        if (!c.is_zero()) {
          REQUIRE((c * c.inv()).is_one());
          const TowerElt on_circle = c.conj() / c;
          REQUIRE(in_unit_circle(on_circle));
          REQUIRE(on_circle.pow(t->base().circle_order()).is_one());
        }
        const BaseElt b = t->base().random(gen);
        REQUIRE(t->embed(b).conj() == t->embed(b));
      }
    }
  }

  TEST_CASE("unit circle membership, exhaustive n = 4") {
    const auto t = tower_of(4);
    for (std::uint64_t v = 1; v < 256; ++v) {
      const TowerElt c = t->make(elt(t->base(), v & 15), elt(t->base(), v >> 4));
      REQUIRE(in_unit_circle(c) == c.pow(BigInt(17)).is_one());
    }
  }

  TEST_CASE("unit circle examples") {
    const auto t = tower_of(3);
    CHECK(in_unit_circle(t->one()));
    CHECK(in_unit_circle(t->zeta()));
    CHECK_FALSE(in_unit_circle(t->embed(elt(t->base(), 0x2))));
    CHECK(code_of([&] { (void)in_unit_circle(t->zero()); }) == ErrorCode::DivisionByZero);
  }

  TEST_CASE("text form") {
    const auto t = tower_of(3);
    const TowerElt c = t->make(elt(t->base(), 0x5), elt(t->base(), 0x3));
    CHECK(c.to_string() == "[0x5, 0x3]");
    CHECK(t->parse("[0x5, 0x3]") == c);
    CHECK(code_of([&] { (void)t->parse("0x5"); }) == ErrorCode::ParseError);
  }

  TEST_CASE("Artin-Schreier root") {
    std::mt19937_64 gen(9);
    for (unsigned n : {2u, 3u, 10u, 127u}) {
      const auto t = tower_of(n);
      for (int i = 0; i < 20; ++i) {
        const BaseElt b = t->base().random(gen);
        const TowerElt y = t->artin_schreier_root(b);
        REQUIRE(y.square() + y == t->embed(b));
        REQUIRE(y.is_base() == (b.trace() == 0));
      }
    }
  }
}

TEST_SUITE("cyclic groups") {
  TEST_CASE("cube test examples") {
    const auto t3 = tower_of(3);
    CHECK(is_cube(t3->omega(), CyclicGroup::Circle));
    TowerElt order9 = t3->zero();
    for (std::uint64_t v = 1; v < 64 && order9.is_zero(); ++v) {
      const TowerElt c = t3->make(elt(t3->base(), v & 7), elt(t3->base(), v >> 3));
      if (c.norm().is_one() && !c.pow(BigInt(3)).is_one()) order9 = c;
    }
    REQUIRE_FALSE(order9.is_zero());
    CHECK_FALSE(is_cube(order9, CyclicGroup::Circle));

    const auto t4 = tower_of(4);
    CHECK_FALSE(is_cube(t4->embed(elt(t4->base(), 0x2)), CyclicGroup::MultBase));
  }

  TEST_CASE("cube test rejects groups of order prime to 3") {
    const auto t3 = tower_of(3);
    const auto t4 = tower_of(4);
    CHECK(code_of([&] { (void)is_cube(t3->one(), CyclicGroup::MultBase); }) == ErrorCode::BadGroup);
    CHECK(code_of([&] { (void)is_cube(t4->one(), CyclicGroup::Circle); }) == ErrorCode::BadGroup);
    CHECK(code_of([&] { (void)is_cube(t4->u(), CyclicGroup::MultBase); }) == ErrorCode::BadGroup);
    CHECK(code_of([&] { (void)is_cube(t3->embed(elt(t3->base(), 0x2)), CyclicGroup::Circle); }) ==
          ErrorCode::BadGroup);
  }

  TEST_CASE("cube test agrees with enumeration, n <= 10") {
    for (unsigned n = 2; n <= 10; ++n) {
      const auto t = tower_of(n);
      const bool even = n % 2 == 0;
      std::vector<TowerElt> group;
      if (even) {
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) group.push_back(t->embed(elt(t->base(), v)));
      } else {
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << (2 * n)); ++v) {
          const TowerElt c = t->make(elt(t->base(), v & mask), elt(t->base(), v >> n));
          if (c.norm().is_one()) group.push_back(c);
        }
      }
      REQUIRE(group.size() == (even ? (std::uint64_t{1} << n) - 1 : (std::uint64_t{1} << n) + 1));
      std::set<std::string> cubes;
      for (const auto& c : group) cubes.insert(c.pow(BigInt(3)).to_string());
      REQUIRE(cubes.size() == group.size() / 3);
      const CyclicGroup g = even ? CyclicGroup::MultBase : CyclicGroup::Circle;
      for (const auto& c : group) REQUIRE(is_cube(c, g) == (cubes.count(c.to_string()) == 1));
    }
  }

  TEST_CASE("cyclic root examples") {
    const auto t3 = tower_of(3);
    const TowerElt g = t3->embed(elt(t3->base(), 0x2));
    CHECK(cyclic_root(g.pow(BigInt(3)), BigInt(3), CyclicGroup::MultBase) == g);

    const TowerElt w = t3->omega();
    const TowerElt c = cyclic_root(w, BigInt(3), CyclicGroup::Circle);
    CHECK(c.pow(BigInt(3)) == w);
    CHECK(in_unit_circle(c));
    CHECK_FALSE(c.pow(BigInt(3)).is_one());
    int count = 0;
    for (std::uint64_t v = 1; v < 64; ++v) {
      const TowerElt x = t3->make(elt(t3->base(), v & 7), elt(t3->base(), v >> 3));
      if (x.norm().is_one() && x.pow(BigInt(3)) == w) ++count;
    }
    CHECK(count == 3);
  }

  TEST_CASE("square roots") {
    std::mt19937_64 gen(2);
    for (unsigned n : {3u, 4u, 65u}) {
      const auto t = tower_of(n);
      BaseElt b = t->base().random(gen);
      while (b.is_zero()) b = t->base().random(gen);
      const TowerElt tb = t->embed(b);
      CHECK(cyclic_root(tb, BigInt(2), CyclicGroup::MultBase) == tb.pow(pow2(2 * n - 1)));
      const TowerElt z = t->zeta().pow(BigInt(5));
      CHECK(cyclic_root(z, BigInt(2), CyclicGroup::Circle) == z.pow(pow2(2 * n - 1)));
    }
  }

  TEST_CASE("cube roots come in omega-orbits inside the group") {
    std::mt19937_64 gen(4);
    for (unsigned n : {3u, 4u, 5u, 6u, 9u, 10u, 62u, 63u, 127u, 128u}) {
      const auto t = tower_of(n);
      const CyclicGroup g = n % 2 == 0 ? CyclicGroup::MultBase : CyclicGroup::Circle;
      for (int i = 0; i < 10; ++i) {
        TowerElt x = t->random(gen);
        while (x.is_zero()) x = t->random(gen);
        const TowerElt member = g == CyclicGroup::MultBase ? t->embed(x.norm()) : x.conj() / x;
        const TowerElt cube = member.pow(BigInt(3));
        const TowerElt c = cyclic_root(cube, BigInt(3), g);
        REQUIRE(c.pow(BigInt(3)) == cube);
        REQUIRE(c.pow(group_order(*t, g)).is_one());
        const TowerElt w = t->omega();
        REQUIRE((c * w).pow(BigInt(3)) == cube);
        REQUIRE(((c * w) * w).pow(BigInt(3)) == cube);
        if (g == CyclicGroup::MultBase) {
          REQUIRE(c.is_base());
        } else {
          REQUIRE(in_unit_circle(c * w));
        }
        const TowerElt c4 = cyclic_root(member, BigInt(4), g);
        REQUIRE(c4.pow(BigInt(4)) == member);
      }
    }
  }

  TEST_CASE("non-cubes have no cube root") {
    const auto t = tower_of(4);
    const TowerElt g = t->embed(elt(t->base(), 0x2));
    CHECK(code_of([&] { (void)cyclic_root(g, BigInt(3), CyclicGroup::MultBase); }) == ErrorCode::NoRoot);
  }
}

TEST_SUITE("decompose") {
  TEST_CASE("examples in GF(8)") {
    const auto t = tower_of(3);
    const Decomposition one = decompose(*t, t->base().one());
    CHECK(one.locus == Locus::CircleStar);
    CHECK((one.c.square() + one.c + t->one()).is_zero());

    const Decomposition d = decompose(*t, elt(t->base(), 0x3));
    CHECK(d.locus == Locus::BaseStar);
    REQUIRE(d.c.is_base());
    const std::string c = d.c.as_base().to_hex();
    CHECK((c == "0x7" || c == "0x4"));
    CHECK(code_of([&] { (void)decompose(*t, t->base().zero()); }) == ErrorCode::DivisionByZero);
  }

  TEST_CASE("c + 1/c = z and the locus follows Tr(1/z), exhaustive n <= 14") {
    for (unsigned n = 2; n <= 14; ++n) {
      const auto t = tower_of(n);
      for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
        const BaseElt z = elt(t->base(), v);
        const Decomposition d = decompose(*t, z);
        REQUIRE(d.c + d.c.inv() == t->embed(z));
        if (z.inv().trace() == 0) {
          REQUIRE(d.locus == Locus::BaseStar);
          REQUIRE(d.c.is_base());
          REQUIRE(t->embed(d.c.norm()) == d.c.square());
          REQUIRE_FALSE(d.c.is_one());
        } else {
          REQUIRE(d.locus == Locus::CircleStar);
          REQUIRE(in_unit_circle(d.c));
          REQUIRE_FALSE(d.c.is_one());
        }
      }
    }
  }

  TEST_CASE("large n") {
    std::mt19937_64 gen(8);
    const auto t = tower_of(255);
    for (int i = 0; i < 20; ++i) {
      const BaseElt z = t->base().random(gen);
      if (z.is_zero()) continue;
      const Decomposition d = decompose(*t, z);
      REQUIRE(d.c + d.c.inv() == t->embed(z));
    }
  }
}
