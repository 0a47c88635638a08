#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbp/action_system.hpp"

using namespace sbp;

namespace {

template <typename Fn>
Error capture(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  REQUIRE_MESSAGE(false, "expected an Error to be thrown");
  return Error(ErrorCode::ParseError, "unreachable");
}

MonoidTable table_G() { return make_monoid({{0, 1}, {1, 0}}); }
MonoidTable table_M() { return make_monoid({{0, 1}, {1, 1}}); }
MonoidTable table_Z3() {
  return make_monoid({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}
MonoidTable cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return make_monoid(rows);
}

Semibiproduct z4_extension() {
  const MonoidTable z4 = cyclic(4);
  const MonoidTable g = table_G();
  return from_group_extension(Homomorphism(g, z4, {0, 2}),
                              Homomorphism(z4, g, {0, 1, 0, 1}),
                              PointedMap(g, z4, {0, 1}));
}

// The nontrivial two-by-two building blocks: an absorbing action column, the
// one-sided companions, and the single nonzero cocycle cell.
const std::vector<std::vector<int>> rho_absorb = {{0, 0}, {1, 0}};
const std::vector<std::vector<int>> phi_absorb = {{0, 1}, {0, 0}};
const std::vector<std::vector<int>> gamma_cell = {{0, 0}, {0, 1}};
const std::vector<std::vector<int>> gamma_zero = {{0, 0}, {0, 0}};

}  // namespace

TEST_CASE("constructor rejects tables of the wrong shape or range") {
  const MonoidTable g = table_G();
  const Error shape = capture([&] {
    ActionSystem(g, g, {{0, 0}}, {{0, 1}, {0, 1}}, gamma_zero);
  });
  CHECK(shape.code() == ErrorCode::DimensionMismatch);

  const Error range = capture([&] {
    ActionSystem(g, g, {{0, 0}, {1, 2}}, {{0, 1}, {0, 1}}, gamma_zero);
  });
  CHECK(range.code() == ErrorCode::IndexOutOfRange);
}

TEST_CASE("the trivial system realizes the direct product on the nose") {
  const ActionSystem T = trivial_action_system(table_G(), table_M());
  CHECK(verify_action_system(T).passed());
  const SyntheticRealization R = functor_Q(T);
  CHECK(R.monoid() == product_monoid(table_G(), table_M()));
  CHECK(verify_semibiproduct(R.as_semibiproduct()).passed());
  CHECK(functor_P(R.as_semibiproduct()) == T);
}

TEST_CASE("a broken unit law is reported together with its knock-on effects") {
  const ActionSystem T(table_G(), table_M(), {{0, 0}, {0, 1}},
                       {{0, 1}, {0, 1}}, gamma_zero);
  const VerificationReport r = verify_action_system(T);
  CHECK(r.violations() ==
        std::vector<Violation>{
            {"rho(x,0)=x", {{"x", 1}}},
            {"phi(b,x)=rho(phi(b,x),b)", {{"b", 0}, {"x", 1}}}});
  CHECK_FALSE(satisfies_action_axioms(T));
}

TEST_CASE("a permutation column is not an idempotent action") {
  const ActionSystem T(table_Z3(), table_G(), {{0, 0}, {1, 2}, {2, 1}},
                       {{0, 1, 2}, {0, 1, 2}}, gamma_zero);
  const VerificationReport r = verify_action_system(T);
  CHECK(r.violations() ==
        std::vector<Violation>{
            {"rho(x,b)=rho(rho(x,b),b)", {{"x", 1}, {"b", 1}}},
            {"rho(x,b)=rho(rho(x,b),b)", {{"x", 2}, {"b", 1}}},
            {"phi(b,x)=rho(phi(b,x),b)", {{"b", 1}, {"x", 1}}},
            {"phi(b,x)=rho(phi(b,x),b)", {{"b", 1}, {"x", 2}}}});
}

TEST_CASE("associativity of the synthetic operation can fail on its own") {
  // Unit and idempotence laws all hold here; only the seven-variable law
  // breaks, and the checker reports the first failing tuple.
  const ActionSystem T(table_M(), table_G(), rho_absorb, phi_absorb,
                       gamma_zero);
  const VerificationReport r = verify_action_system(T);
  REQUIRE(r.violations().size() == 1);
  CHECK(r.violations()[0] ==
        Violation{"((x,b)+(x',b'))+(x'',b'')=(x,b)+((x',b')+(x'',b''))",
                  {{"x", 0}, {"x'", 0}, {"x''", 1},
                   {"b", 1}, {"b'", 1}, {"b''", 0}}});

  const Error e = capture([&] { functor_Q(T); });
  CHECK(e.code() == ErrorCode::InvalidActionSystem);
}

TEST_CASE("synthesis of the absorbing system over two idempotents") {
  // With the absorbing action, 0 is the only element fixed by rho(-,1), so
  // the companion and the cocycle are forced to vanish away from 0.
  const ActionSystem T(table_M(), table_M(), rho_absorb, phi_absorb,
                       gamma_zero);
  REQUIRE(verify_action_system(T).passed());
  const SyntheticRealization R = functor_Q(T);
  CHECK(R.carrier() ==
        std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(R.monoid().rows() ==
        std::vector<std::vector<int>>{{0, 1, 2}, {1, 1, 1}, {2, 1, 2}});
  CHECK(R.monoid().labels() ==
        std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)"});
  CHECK(R.p_hat().values() == std::vector<int>{0, 1, 0});
  CHECK(R.k_hat().values() == std::vector<int>{0, 2});
  CHECK(R.q_hat().values() == std::vector<int>{0, 0, 1});
  CHECK(R.s_hat().values() == std::vector<int>{0, 1});
  CHECK(R.index_of(1, 1) == -1);
  CHECK(R.index_of(1, 0) == 2);
  CHECK(verify_semibiproduct(R.as_semibiproduct()).passed());
  CHECK(functor_P(R.as_semibiproduct()) == T);
}

TEST_CASE("carrier membership matches the insertion sum") {
  const std::vector<ActionSystem> systems = {
      ActionSystem(table_M(), table_M(), rho_absorb, phi_absorb, gamma_zero),
      trivial_action_system(table_Z3(), table_G()),
      ActionSystem(table_G(), table_G(), {{0, 0}, {1, 1}}, {{0, 1}, {0, 1}},
                   gamma_cell)};
  for (const ActionSystem& T : systems) {
    const SyntheticRealization R = functor_Q(T);
    for (int x = 0; x < T.X().size(); ++x)
      for (int b = 0; b < T.B().size(); ++b) {
        // (x,0)+(0,b) always lands on (rho(x,b), b); the pair (x,b) itself
        // is an element exactly when rho fixes it.
        const int t = R.monoid().op(R.k_hat()(x), R.s_hat()(b));
        CHECK(R.carrier()[t] == std::make_pair(T.rho(x, b), b));
        CHECK((R.index_of(x, b) >= 0) == (T.rho(x, b) == x));
      }
  }
}

TEST_CASE("analysis of the cyclic extension yields the cocycle system") {
  const ActionSystem T = functor_P(z4_extension());
  CHECK(T.rho_rows() == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
  CHECK(T.phi_rows() == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  CHECK(T.gamma_rows() == gamma_cell);
}

TEST_CASE("analysis refuses an unverified semibiproduct") {
  const MonoidTable m = table_M();
  const Semibiproduct bad(m, m, m, identity_hom(m), identity_hom(m),
                          identity_map(m), identity_map(m));
  const Error e = capture([&] { functor_P(bad); });
  CHECK(e.code() == ErrorCode::InvalidSemibiproduct);
}

TEST_CASE("analysis then synthesis restores the total object") {
  for (const Semibiproduct& S :
       {z4_extension(), direct_product_semibiproduct(table_G(), table_M()),
        direct_product_semibiproduct(table_Z3(), table_G())}) {
    const RoundtripWitness w = roundtrip_witness(S);
    CHECK(is_homomorphism(w.alpha));
    CHECK(is_homomorphism(w.beta));
    CHECK(compose_maps(w.beta, w.alpha).is_identity());
    CHECK(compose_maps(w.alpha, w.beta).is_identity());
  }
  // For the cyclic extension the carrier order even matches element order.
  const RoundtripWitness w = roundtrip_witness(z4_extension());
  CHECK(w.alpha.values() == std::vector<int>{0, 1, 2, 3});
  CHECK(w.beta.values() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("the identity pair fails equivariance against a twisted cocycle") {
  const ActionSystem plain = trivial_action_system(table_G(), table_G());
  const ActionSystem twisted(table_G(), table_G(), {{0, 0}, {1, 1}},
                             {{0, 1}, {0, 1}}, gamma_cell);
  REQUIRE(verify_action_system(twisted).passed());
  const ActMorphism id(plain, twisted, identity_hom(table_G()),
                       identity_hom(table_G()));
  const VerificationReport r = is_act_morphism(id);
  CHECK(r.violations() ==
        std::vector<Violation>{
            {"f(gamma(b,b'))=gamma'(g(b),g(b'))", {{"b", 1}, {"b'", 1}}}});

  const Error e = capture([&] { act_to_psb_morphism(id); });
  CHECK(e.code() == ErrorCode::InvalidActionSystem);
}

TEST_CASE("the zero pair into a twisted cocycle lifts to the realizations") {
  const ActionSystem plain = trivial_action_system(table_G(), table_G());
  const ActionSystem twisted(table_G(), table_G(), {{0, 0}, {1, 1}},
                             {{0, 1}, {0, 1}}, gamma_cell);
  const ActMorphism zero(plain, twisted, zero_hom(table_G(), table_G()),
                         zero_hom(table_G(), table_G()));
  REQUIRE(is_act_morphism(zero).passed());
  const PsbMorphism lifted = act_to_psb_morphism(zero);
  CHECK(lifted.f2.values() == std::vector<int>{0, 0, 0, 0});
  CHECK(is_psb_morphism(lifted).passed());
}

TEST_CASE("collapsing the acting monoid lifts to a morphism of products") {
  const ActionSystem src = trivial_action_system(table_G(), table_M());
  const ActionSystem tgt = trivial_action_system(table_G(), table_G());
  const ActMorphism m(src, tgt, identity_hom(table_G()),
                      zero_hom(table_M(), table_G()));
  REQUIRE(is_act_morphism(m).passed());
  const PsbMorphism lifted = act_to_psb_morphism(m);
  CHECK(lifted.f2.values() == std::vector<int>{0, 0, 2, 2});
  CHECK(is_psb_morphism(lifted).passed());

  // Restricting the lifted triple recovers the pair we started from.
  const ActMorphism back = psb_to_act_morphism(lifted);
  CHECK(back.source == src);
  CHECK(back.target == tgt);
  CHECK(back.f == m.f);
  CHECK(back.g == m.g);
}

TEST_CASE("morphism construction rejects mismatched carriers") {
  const ActionSystem src = trivial_action_system(table_G(), table_M());
  const Error e = capture([&] {
    ActMorphism(src, src, identity_hom(table_M()), identity_hom(table_M()));
  });
  CHECK(e.code() == ErrorCode::CarrierMismatch);
}
