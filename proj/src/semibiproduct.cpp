#include "sbp/semibiproduct.hpp"

namespace sbp {

namespace {

void require_table(const MonoidTable& got, const MonoidTable& want,
                   const char* what) {
  if (!(got == want))
    throw Error(ErrorCode::CarrierMismatch,
                std::string(what) + " does not match the stated carrier");
}

void require_verified(const Semibiproduct& S, const char* op) {
  if (!is_verified(S))
    throw Error(ErrorCode::InvalidSemibiproduct,
                std::string(op) + " needs a verified semibiproduct");
}

}  // namespace

Semibiproduct::Semibiproduct(MonoidTable X, MonoidTable A, MonoidTable B,
                             Homomorphism p, Homomorphism k, PointedMap q,
                             PointedMap s)
    : X_(std::move(X)), A_(std::move(A)), B_(std::move(B)), p_(std::move(p)),
      k_(std::move(k)), q_(std::move(q)), s_(std::move(s)) {
  require_table(p_.dom(), A_, "dom(p)");
  require_table(p_.cod(), B_, "cod(p)");
  require_table(k_.dom(), X_, "dom(k)");
  require_table(k_.cod(), A_, "cod(k)");
  require_table(q_.dom(), A_, "dom(q)");
  require_table(q_.cod(), X_, "cod(q)");
  require_table(s_.dom(), B_, "dom(s)");
  require_table(s_.cod(), A_, "cod(s)");
}

VerificationReport verify_semibiproduct(const Semibiproduct& S,
                                        Pointedness mode) {
  VerificationReport r;
  const auto& p = S.p();
  const auto& k = S.k();
  const auto& q = S.q();
  const auto& s = S.s();
  for (int b = 0; b < S.B().size(); ++b)
    if (p(s(b)) != b) r.add("p(s(b))=b", {{"b", b}});
  for (int x = 0; x < S.X().size(); ++x)
    if (q(k(x)) != x) r.add("q(k(x))=x", {{"x", x}});
  for (int a = 0; a < S.A().size(); ++a)
    if (S.A().op(k(q(a)), s(p(a))) != a)
      r.add("k(q(a))+s(p(a))=a", {{"a", a}});
  if (mode == Pointedness::require) {
    for (int x = 0; x < S.X().size(); ++x)
      if (p(k(x)) != 0) r.add("p(k(x))=0", {{"x", x}});
    for (int b = 0; b < S.B().size(); ++b)
      if (q(s(b)) != 0) r.add("q(s(b))=0", {{"b", b}});
  }
  return r;
}

bool is_verified(const Semibiproduct& S, Pointedness mode) {
  return verify_semibiproduct(S, mode).passed();
}

VerificationReport check_exactness(const Semibiproduct& S) {
  require_verified(S, "check_exactness");
  VerificationReport r;
  const auto& p = S.p();
  const auto& k = S.k();
  for (int x1 = 0; x1 < S.X().size(); ++x1)
    for (int x2 = x1 + 1; x2 < S.X().size(); ++x2)
      if (k(x1) == k(x2))
        r.add("k is injective", {{"x", x1}, {"x'", x2}});
  {
    std::vector<char> hit(S.B().size(), 0);
    for (int a = 0; a < S.A().size(); ++a) hit[p(a)] = 1;
    for (int b = 0; b < S.B().size(); ++b)
      if (!hit[b]) r.add("p is surjective", {{"b", b}});
  }
  {
    std::vector<char> in_image(S.A().size(), 0);
    for (int x = 0; x < S.X().size(); ++x) in_image[k(x)] = 1;
    for (int a = 0; a < S.A().size(); ++a) {
      const bool in_kernel = p(a) == 0;
      if (in_image[a] && !in_kernel)
        r.add("image(k)={a|p(a)=0}", {{"a", a}});
      if (in_kernel && !in_image[a])
        r.add("image(k)={a|p(a)=0}", {{"a", a}});
    }
  }
  return r;
}

bool sum_decomposition_check(const Semibiproduct& S, int a, int a2) {
  const auto& A = S.A();
  const auto& B = S.B();
  const auto& X = S.X();
  const auto& p = S.p();
  const auto& k = S.k();
  const auto& q = S.q();
  const auto& s = S.s();
  const int spa = s(p(a));
  const int t1 = q(a);
  const int t2 = q(A.op(spa, k(q(a2))));
  const int t3 = q(A.op(spa, s(p(a2))));
  const int x = X.op(X.op(t1, t2), t3);
  const int rebuilt = A.op(k(x), s(B.op(p(a), p(a2))));
  return rebuilt == A.op(a, a2);
}

Semibiproduct from_group_extension(const Homomorphism& k,
                                   const Homomorphism& p,
                                   const PointedMap& s) {
  const MonoidTable& X = k.dom();
  const MonoidTable& A = k.cod();
  const MonoidTable& B = p.cod();
  require_table(p.dom(), A, "dom(p)");
  require_table(s.dom(), B, "dom(s)");
  require_table(s.cod(), A, "cod(s)");
  const auto check_group = [](const MonoidTable& m, const char* name) {
    for (int i = 0; i < m.size(); ++i)
      if (!m.inverse(i))
        throw Error(ErrorCode::NotAGroup,
                    std::string("carrier ") + name + " is not a group",
                    {{"element", i}});
  };
  check_group(A, "A");
  check_group(X, "X");
  check_group(B, "B");
  for (int b = 0; b < B.size(); ++b)
    if (p(s(b)) != b)
      throw Error(ErrorCode::SectionNotSplitting, "p(s(b)) differs from b",
                  {{"b", b}});
  // k must embed X exactly onto the kernel of p.
  std::vector<int> preimage(A.size(), -1);
  for (int x = 0; x < X.size(); ++x) {
    if (preimage[k(x)] >= 0)
      throw Error(ErrorCode::KernelMismatch, "k is not injective",
                  {{"x", preimage[k(x)]}, {"x'", x}});
    preimage[k(x)] = x;
  }
  for (int a = 0; a < A.size(); ++a) {
    const bool in_kernel = p(a) == 0;
    if ((preimage[a] >= 0) != in_kernel)
      throw Error(ErrorCode::KernelMismatch,
                  "image of k differs from the kernel of p", {{"a", a}});
  }
  std::vector<int> qv(A.size());
  for (int a = 0; a < A.size(); ++a) {
    const int t = A.op(a, *A.inverse(s(p(a))));
    if (preimage[t] < 0)
      throw Error(ErrorCode::PreimageNotFound,
                  "a+(s(p(a)))^{-1} is outside the image of k", {{"a", a}});
    qv[a] = preimage[t];
  }
  return Semibiproduct(X, A, B, p, k, PointedMap(A, X, std::move(qv)), s);
}

Semibiproduct pullback_semibiproduct(const Semibiproduct& S,
                                     const Homomorphism& h) {
  require_verified(S, "pullback_semibiproduct");
  if (!(h.cod() == S.B()))
    throw Error(ErrorCode::CodomainMismatch,
                "pullback map must land in the quotient object");
  PullbackSquare pb = pullback(S.p(), h);
  const MonoidTable& C = h.dom();
  const MonoidTable& P = pb.carrier.induced();
  const int cn = C.size();

  std::vector<int> kv(S.X().size());
  for (int x = 0; x < S.X().size(); ++x)
    kv[x] = pb.carrier.index_of(S.k()(x) * cn + 0);
  std::vector<int> sv(cn);
  for (int c = 0; c < cn; ++c)
    sv[c] = pb.carrier.index_of(S.s()(h(c)) * cn + c);
  PointedMap qv = compose_maps(S.q(), pb.proj1.map());

  return Semibiproduct(S.X(), P, C, pb.proj2,
                       Homomorphism(S.X(), P, std::move(kv)), std::move(qv),
                       PointedMap(C, P, std::move(sv)));
}

std::variant<Semibiproduct, CompositionObstruction> compose_semibiproducts(
    const Semibiproduct& S, const Semibiproduct& T) {
  if (!(T.A() == S.B()))
    throw Error(ErrorCode::MiddleMismatch,
                "total object of the second factor must equal the quotient "
                "object of the first");
  require_verified(S, "compose_semibiproducts");
  require_verified(T, "compose_semibiproducts");
  const auto& A = S.A();
  const auto& B = S.B();
  const auto& s = S.s();
  const auto& p2 = T.p();
  const auto& k2 = T.k();
  const auto& q2 = T.q();
  const auto& s2 = T.s();
  // Composability: s = sk'q' + ss'p' pointwise on B.
  for (int b = 0; b < B.size(); ++b) {
    const int rhs = A.op(s(k2(q2(b))), s(s2(p2(b))));
    if (s(b) != rhs) return CompositionObstruction{b, s(b), rhs};
  }
  PullbackSquare pb = pullback(S.p(), k2);
  const MonoidTable& K = pb.carrier.induced();
  const int cn = T.X().size();

  Homomorphism p_new = compose_homs(p2, S.p());
  std::vector<int> qv(A.size());
  for (int a = 0; a < A.size(); ++a) {
    const int c = q2(S.p()(a));
    const int left = A.op(S.k()(S.q()(a)), s(k2(c)));
    qv[a] = pb.carrier.index_of(left * cn + c);
  }
  std::vector<int> sv(T.B().size());
  for (int d = 0; d < T.B().size(); ++d) sv[d] = s(s2(d));
  return Semibiproduct(K, A, T.B(), std::move(p_new), pb.proj1,
                       PointedMap(A, K, std::move(qv)),
                       PointedMap(T.B(), A, std::move(sv)));
}

PsbMorphism::PsbMorphism(Semibiproduct src, Semibiproduct tgt, Homomorphism f1_,
                         Homomorphism f2_, Homomorphism f3_)
    : source(std::move(src)), target(std::move(tgt)), f1(std::move(f1_)),
      f2(std::move(f2_)), f3(std::move(f3_)) {
  require_table(f1.dom(), source.X(), "dom(f1)");
  require_table(f1.cod(), target.X(), "cod(f1)");
  require_table(f2.dom(), source.A(), "dom(f2)");
  require_table(f2.cod(), target.A(), "cod(f2)");
  require_table(f3.dom(), source.B(), "dom(f3)");
  require_table(f3.cod(), target.B(), "cod(f3)");
}

VerificationReport is_psb_morphism(const PsbMorphism& m) {
  VerificationReport r;
  const auto& S = m.source;
  const auto& T = m.target;
  for (int x = 0; x < S.X().size(); ++x)
    if (m.f2(S.k()(x)) != T.k()(m.f1(x)))
      r.add("f2(k(x))=k'(f1(x))", {{"x", x}});
  for (int a = 0; a < S.A().size(); ++a)
    if (T.p()(m.f2(a)) != m.f3(S.p()(a)))
      r.add("p'(f2(a))=f3(p(a))", {{"a", a}});
  for (int b = 0; b < S.B().size(); ++b)
    if (m.f2(S.s()(b)) != T.s()(m.f3(b)))
      r.add("f2(s(b))=s'(f3(b))", {{"b", b}});
  for (int a = 0; a < S.A().size(); ++a)
    if (T.q()(m.f2(a)) != m.f1(S.q()(a)))
      r.add("q'(f2(a))=f1(q(a))", {{"a", a}});
  return r;
}

Semibiproduct direct_product_semibiproduct(const MonoidTable& X,
                                           const MonoidTable& B) {
  MonoidTable A = product_monoid(X, B);
  const int bn = B.size();
  std::vector<int> pv(A.size()), qv(A.size()), kv(X.size()), sv(bn);
  for (int a = 0; a < A.size(); ++a) {
    pv[a] = a % bn;
    qv[a] = a / bn;
  }
  for (int x = 0; x < X.size(); ++x) kv[x] = x * bn;
  for (int b = 0; b < bn; ++b) sv[b] = b;
  return Semibiproduct(X, A, B, Homomorphism(A, B, std::move(pv)),
                       Homomorphism(X, A, std::move(kv)),
                       PointedMap(A, X, std::move(qv)),
                       PointedMap(B, A, std::move(sv)));
}

namespace {

MonoidTable trivial_monoid() { return make_monoid({{0}}); }

}  // namespace

Semibiproduct identity_like_semibiproduct(const MonoidTable& B) {
  MonoidTable O = trivial_monoid();
  return Semibiproduct(O, B, B, identity_hom(B), zero_hom(O, B),
                       zero_map(B, O), identity_map(B));
}

Semibiproduct projection_like_semibiproduct(const MonoidTable& B) {
  MonoidTable O = trivial_monoid();
  return Semibiproduct(B, B, O, zero_hom(B, O), identity_hom(B),
                       identity_map(B), zero_map(O, B));
}

}  // namespace sbp
