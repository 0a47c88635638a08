#pragma once

#include <variant>

#include "sbp/monoid.hpp"
#include "sbp/report.hpp"

namespace sbp {

// Whether verification demands the two pointedness laws p(k(x))=0 and
// q(s(b))=0 on top of the splitting and decomposition laws.
enum class Pointedness { require, skip };

// A diagram X -k-> A -p-> B together with backward maps q: A -> X and
// s: B -> A. p and k are homomorphisms; q and s only preserve 0. The
// constructor checks that domains and codomains line up; whether the
// defining laws hold is a separate question answered by
// verify_semibiproduct.
class Semibiproduct {
 public:
  Semibiproduct(MonoidTable X, MonoidTable A, MonoidTable B, Homomorphism p,
                Homomorphism k, PointedMap q, PointedMap s);

  const MonoidTable& X() const { return X_; }
  const MonoidTable& A() const { return A_; }
  const MonoidTable& B() const { return B_; }
  const Homomorphism& p() const { return p_; }
  const Homomorphism& k() const { return k_; }
  const PointedMap& q() const { return q_; }
  const PointedMap& s() const { return s_; }

  friend bool operator==(const Semibiproduct& a, const Semibiproduct& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.q_ == b.q_ && a.s_ == b.s_;
  }

 private:
  MonoidTable X_, A_, B_;
  Homomorphism p_, k_;
  PointedMap q_, s_;
};

// Checks, in order: p(s(b))=b, q(k(x))=x, k(q(a))+s(p(a))=a, and under
// Pointedness::require also p(k(x))=0 and q(s(b))=0. Complete witness
// lists.
VerificationReport verify_semibiproduct(const Semibiproduct& S,
                                        Pointedness mode =
                                            Pointedness::require);
bool is_verified(const Semibiproduct& S,
                 Pointedness mode = Pointedness::require);

// k injective, p surjective, image(k) = preimage of 0 under p. Requires a
// verified S (throws InvalidSemibiproduct otherwise).
VerificationReport check_exactness(const Semibiproduct& S);

// The two-element recovery identity for a verified S:
//   a+a' = k(q(a) + q(sp(a)+kq(a')) + q(sp(a)+sp(a'))) + s(p(a)+p(a')).
// Caller contract: S passes verify_semibiproduct.
bool sum_decomposition_check(const Semibiproduct& S, int a, int a2);

// Builds the unique verified semibiproduct on a short exact sequence of
// groups X -k-> A -p-> B with chosen pointed section s, deriving
// q(a) = k^{-1}(a + (s(p(a)))^{-1}). Throws NotAGroup,
// SectionNotSplitting, KernelMismatch, or PreimageNotFound.
Semibiproduct from_group_extension(const Homomorphism& k,
                                   const Homomorphism& p, const PointedMap& s);

// Base change along h: C -> B: the total object becomes {(a,c) | p(a)=h(c)}
// inside A x C. S must verify; cod(h) must be B.
Semibiproduct pullback_semibiproduct(const Semibiproduct& S,
                                     const Homomorphism& h);

// Why two semibiproducts fail to compose: the first element b of the shared
// middle where s(b) and s(k'(q'(b))) + s(s'(p'(b))) disagree.
struct CompositionObstruction {
  int b;
  int expected;  // s(b)
  int actual;    // s(k'(q'(b))) + s(s'(p'(b)))
};

// For S = (X,A,B,...) and T = (C,B,D,...) sharing the middle object B
// (S's quotient must equal T's total, table for table; MiddleMismatch
// otherwise), either the composite semibiproduct (K, A, D, ...) with
// K = A x_B C, or the obstruction witness. Both inputs must verify.
std::variant<Semibiproduct, CompositionObstruction> compose_semibiproducts(
    const Semibiproduct& S, const Semibiproduct& T);

// A triple of homomorphisms (f1: X -> X', f2: A -> A', f3: B -> B')
// between two semibiproducts.
struct PsbMorphism {
  Semibiproduct source;
  Semibiproduct target;
  Homomorphism f1, f2, f3;

  PsbMorphism(Semibiproduct src, Semibiproduct tgt, Homomorphism f1_,
              Homomorphism f2_, Homomorphism f3_);
};

// The four compatibility squares f2k=k'f1, p'f2=f3p, f2s=s'f3, q'f2=f1q,
// each with complete witness lists. Pointwise check; meaningful for
// verified endpoints.
VerificationReport is_psb_morphism(const PsbMorphism& m);

// X x B with the projections and insertions; the motivating example that
// verifies with both laws of pointedness.
Semibiproduct direct_product_semibiproduct(const MonoidTable& X,
                                           const MonoidTable& B);

// The identity-like tuple (0, B, B, 1, 0, 0, 1) over the one-element
// kernel, and the projection-like tuple (B, B, 0, 0, 1, 1, 0) over the
// one-element quotient. Both verify; handy as composition partners.
Semibiproduct identity_like_semibiproduct(const MonoidTable& B);
Semibiproduct projection_like_semibiproduct(const MonoidTable& B);

}  // namespace sbp
