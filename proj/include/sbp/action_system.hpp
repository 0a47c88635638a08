#pragma once

#include "sbp/semibiproduct.hpp"

namespace sbp {

// The three tables of structure a semibiproduct induces on its end objects:
// a right action rho: X x B -> X, a left companion phi: B x X -> X, and a
// factor-set-like gamma: B x B -> X. Dimensions and entry ranges are
// checked at construction; the defining laws are
// verify_action_system's business.
class ActionSystem {
 public:
  ActionSystem(MonoidTable X, MonoidTable B, std::vector<std::vector<int>> rho,
               std::vector<std::vector<int>> phi,
               std::vector<std::vector<int>> gamma);

  const MonoidTable& X() const { return X_; }
  const MonoidTable& B() const { return B_; }

  int rho(int x, int b) const { return rho_[x * bn_ + b]; }
  int phi(int b, int x) const { return phi_[b * xn_ + x]; }
  int gamma(int b, int b2) const { return gamma_[b * bn_ + b2]; }

  std::vector<std::vector<int>> rho_rows() const;
  std::vector<std::vector<int>> phi_rows() const;
  std::vector<std::vector<int>> gamma_rows() const;

  friend bool operator==(const ActionSystem& a, const ActionSystem& b) {
    return a.X_ == b.X_ && a.B_ == b.B_ && a.rho_ == b.rho_ &&
           a.phi_ == b.phi_ && a.gamma_ == b.gamma_;
  }

 private:
  MonoidTable X_, B_;
  int xn_, bn_;
  std::vector<int> rho_, phi_, gamma_;
};

// Checks the unit laws rho(x,0)=x, rho(0,b)=0, phi(0,x)=x, phi(b,0)=0,
// gamma(b,0)=gamma(0,b)=0, the idempotence laws
// rho(rho(x,b),b)=rho(x,b), rho(phi(b,x),b)=phi(b,x),
// rho(gamma(b,b'),b+b')=gamma(b,b'), and associativity of the synthetic
// operation (x,b)+(x',b') = (rho(x+phi(b,x')+gamma(b,b'),b+b'), b+b').
// Witness lists are complete except for the associativity law, which
// reports only the lexicographically first failing (x,x',x'',b,b',b'').
VerificationReport verify_action_system(const ActionSystem& T);
// Same predicate with early exit.
bool satisfies_action_axioms(const ActionSystem& T);

// The monoid built from a valid action system: carrier
// {(x,b) | rho(x,b)=x} in lexicographic order (so (0,0) is the identity at
// index 0), with the synthetic operation, plus the four structure maps
// making it a semibiproduct of X and B.
class SyntheticRealization {
 public:
  const ActionSystem& base() const { return base_; }
  const std::vector<std::pair<int, int>>& carrier() const { return carrier_; }
  const MonoidTable& monoid() const { return monoid_; }

  const Homomorphism& p_hat() const { return p_hat_; }  // R -> B
  const Homomorphism& k_hat() const { return k_hat_; }  // X -> R
  const PointedMap& q_hat() const { return q_hat_; }    // R -> X
  const PointedMap& s_hat() const { return s_hat_; }    // B -> R

  // Position of the pair (x,b) in the carrier, or -1 if rho(x,b) != x.
  int index_of(int x, int b) const;

  Semibiproduct as_semibiproduct() const;

 private:
  friend SyntheticRealization functor_Q(const ActionSystem& T);
  SyntheticRealization(ActionSystem base,
                       std::vector<std::pair<int, int>> carrier,
                       MonoidTable monoid, Homomorphism p_hat,
                       Homomorphism k_hat, PointedMap q_hat, PointedMap s_hat);

  ActionSystem base_;
  std::vector<std::pair<int, int>> carrier_;
  MonoidTable monoid_;
  Homomorphism p_hat_, k_hat_;
  PointedMap q_hat_, s_hat_;
};

// Object part of the synthesis direction: a valid action system to its
// realization. Throws InvalidActionSystem when the axioms fail.
SyntheticRealization functor_Q(const ActionSystem& T);

// Object part of the analysis direction: a verified semibiproduct to the
// action system rho(x,b) = q(k(x)+s(b)), phi(b,x) = q(s(b)+k(x)),
// gamma(b,b') = q(s(b)+s(b')). Throws InvalidSemibiproduct.
ActionSystem functor_P(const Semibiproduct& S);

// A pair of homomorphisms (f: X -> X', g: B -> B') between action systems.
struct ActMorphism {
  ActionSystem source;
  ActionSystem target;
  Homomorphism f, g;

  ActMorphism(ActionSystem src, ActionSystem tgt, Homomorphism f_,
              Homomorphism g_);
};

// The three equivariance laws f(rho(x,b))=rho'(f(x),g(b)),
// f(phi(b,x))=phi'(g(b),f(x)), f(gamma(b,b'))=gamma'(g(b),g(b')).
VerificationReport is_act_morphism(const ActMorphism& m);

// Morphism part of the synthesis direction: (f,g) becomes
// (f, (x,b) -> (f(x),g(b)), g) between the realizations. Both systems must
// be valid and the pair must satisfy the equivariance laws.
PsbMorphism act_to_psb_morphism(const ActMorphism& m);

// Morphism part of the analysis direction: (f1,f2,f3) restricts to
// (f1,f3). Both endpoints must verify.
ActMorphism psb_to_act_morphism(const PsbMorphism& m);

// For a verified S: the realization R of P(S) together with the mutually
// inverse maps alpha: A -> R, a -> (q(a),p(a)) and beta: R -> A,
// (x,b) -> k(x)+s(b) that exhibit A = R.
struct RoundtripWitness {
  SyntheticRealization realization;
  PointedMap alpha;
  PointedMap beta;
};

RoundtripWitness roundtrip_witness(const Semibiproduct& S);

// rho(x,b)=x, phi(b,x)=x, gamma=0: the system whose realization is the
// direct product X x B.
ActionSystem trivial_action_system(const MonoidTable& X, const MonoidTable& B);

}  // namespace sbp
