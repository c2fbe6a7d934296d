#include <doctest.h>

#include "kc/corpus.hpp"
#include "oracles.hpp"

using namespace kc;

namespace {

LaurentPoly t(long e = 1) { return LaurentPoly::t(e); }

GRE random_gre(const ModulePtr& H, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-2, 2), c(-3, 3);
  GRE x(H);
  for (int k = 0; k < 3; ++k) x += GRE::group(H, GroupElement{n(rng), random_element(*H, rng, 1)}, Rat(c(rng)));
  return x;
}

}  // namespace

TEST_SUITE("metabelian") {

TEST_CASE("type K acceptance") {
  CHECK_NOTHROW(validate_module({trefoil_polynomial()}));
  CHECK_THROWS_AS(validate_module({t() - LaurentPoly(1)}), TypeKViolation);
  CHECK_NOTHROW(validate_module({stevedore_polynomial()}));
  CHECK(stevedore_polynomial().eval(Rat(1)) == -1);
  CHECK_THROWS_AS(validate_module({poly({2})}), TypeKViolation);
  CHECK_NOTHROW(validate_module({poly({2})}, Coefficients::Q));
}

TEST_CASE("one minus t inverse") {
  ModulePtr H = validate_module({trefoil_polynomial()});
  CHECK(H->one_minus_t_inverse(H->gen(0)) == H->element({t()}));
  CHECK(H->one_minus_t_inverse(H->zero()).is_zero());
  std::mt19937_64 rng(5);
  ModulePtr H2 = validate_module({trefoil_polynomial(), stevedore_polynomial()});
  for (int i = 0; i < 30; ++i) {
    ModuleElement v = random_element(*H2, rng, 3);
    CHECK(H2->act(LaurentPoly(1) - t(), H2->one_minus_t_inverse(v)) == v);
  }
}

TEST_CASE("semidirect product law") {
  ModulePtr H = validate_module({trefoil_polynomial()});
  std::mt19937_64 rng(6);
  ModuleElement h = random_element(*H, rng, 3), k = random_element(*H, rng, 3);
  CHECK(group_mul(*H, {1, h}, {0, k}) == GroupElement{1, H->add(h, H->act(t(), k))});
  CHECK(group_inv(*H, {0, h}) == GroupElement{0, H->neg(h)});
  CHECK(group_mul(*H, {2, H->zero()}, {-5, H->zero()}) == GroupElement{-3, H->zero()});
  for (int i = 0; i < 30; ++i) {
    GroupElement a{long(rng() % 5) - 2, random_element(*H, rng)}, b{long(rng() % 5) - 2, random_element(*H, rng)},
        c{long(rng() % 5) - 2, random_element(*H, rng)};
    CHECK(group_mul(*H, group_mul(*H, a, b), c) == group_mul(*H, a, group_mul(*H, b, c)));
    CHECK(group_mul(*H, a, group_inv(*H, a)) == group_identity(*H));
  }
}

TEST_CASE("group ring involution and augmentation") {
  ModulePtr H = validate_module({figure_eight_polynomial()});
  CHECK(GRE::group(H, {1, H->zero()}).involute() == GRE::group(H, {-1, H->zero()}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    GRE x = random_gre(H, rng), y = random_gre(H, rng);
    CHECK(x.involute().involute() == x);
    CHECK((x * y).involute() == y.involute() * x.involute());
    CHECK(augment_QZ(x * y) == augment_QZ(x) * augment_QZ(y));
    CHECK(augment_Q(x * y) == augment_Q(x) * augment_Q(y));
  }
  GRE g = GRE::group(H, {3, H->gen(0)});
  CHECK(augment_QZ(g) == t(3));
  CHECK(augment_Q(g) == 1);
}

TEST_CASE("induced ring maps") {
  ModulePtr H = validate_module({trefoil_polynomial()});
  ModulePtr S = AlexanderModule::direct_sum(*H, *H);
  RingMap inc = induce_hom(ModuleHom::inclusion_first(H, S));
  ModuleElement h = H->element({t() + LaurentPoly(2)});
  GroupElement img = inc.apply(GroupElement{2, h});
  CHECK(img.n == 2);
  CHECK(img.h == S->element({t() + LaurentPoly(2), LaurentPoly()}));

  GRE x = GRE::group(H, {1, h}, Rat(3)) + GRE(H, Rat(-1));
  CHECK(RingMap::identity(H).apply(x) == x);
  ModulePtr Z0 = AlexanderModule::trivial();
  GRE killed = induce_hom(ModuleHom::zero(H, Z0)).apply(x);
  CHECK(augment_QZ(killed) == augment_QZ(x));
  CHECK(killed.terms().size() == 2);
}

TEST_CASE("inner automorphisms") {
  ModulePtr H = validate_module({trefoil_polynomial()});
  ModuleElement h1 = H->gen(0);
  ModuleElement hp = H->one_minus_t_inverse(h1);
  CHECK(hp == H->element({t()}));
  RingMap c = inner_auto(H, GroupElement{0, hp});
  CHECK(c.apply(GroupElement{1, h1}) == GroupElement{1, H->zero()});
  GRE x = GRE::group(H, {1, h1}) - GRE(H, Rat(2));
  CHECK(inner_auto(H, group_identity(*H)).apply(x) == x);
}

TEST_CASE("module homs are equivariant") {
  ModulePtr H = validate_module({trefoil_polynomial()});
  ModulePtr K = validate_module({stevedore_polynomial()});
  CHECK_THROWS_AS(ModuleHom::from_images(H, K, {K->gen(0)}), NotEquivariant);
  ModuleHom id = ModuleHom::identity(H);
  std::mt19937_64 rng(8);
  ModuleElement v = random_element(*H, rng);
  CHECK(id.apply(v) == v);
  CHECK(id.then(id).q_matrix() == id.q_matrix());
}

}  // TEST_SUITE
