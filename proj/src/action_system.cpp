#include "sbp/action_system.hpp"

#include <algorithm>

namespace sbp {

namespace {

std::vector<int> flatten_checked(const std::vector<std::vector<int>>& rows,
                                 int want_rows, int want_cols, int value_range,
                                 const char* what) {
  if (static_cast<int>(rows.size()) != want_rows)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has the wrong number of rows",
                {{"rows", static_cast<long>(rows.size())},
                 {"expected", want_rows}});
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(want_rows) * want_cols);
  for (int i = 0; i < want_rows; ++i) {
    if (static_cast<int>(rows[i].size()) != want_cols)
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(what) + " has a row of the wrong length",
                  {{"row", i}});
    for (int j = 0; j < want_cols; ++j) {
      if (rows[i][j] < 0 || rows[i][j] >= value_range)
        throw Error(ErrorCode::IndexOutOfRange,
                    std::string(what) + " entry out of range",
                    {{"row", i}, {"col", j}, {"value", rows[i][j]}});
      flat.push_back(rows[i][j]);
    }
  }
  return flat;
}

std::vector<std::vector<int>> unflatten(const std::vector<int>& flat, int rows,
                                        int cols) {
  std::vector<std::vector<int>> out(rows);
  for (int i = 0; i < rows; ++i)
    out[i].assign(flat.begin() + i * cols, flat.begin() + (i + 1) * cols);
  return out;
}

}  // namespace

ActionSystem::ActionSystem(MonoidTable X, MonoidTable B,
                           std::vector<std::vector<int>> rho,
                           std::vector<std::vector<int>> phi,
                           std::vector<std::vector<int>> gamma)
    : X_(std::move(X)), B_(std::move(B)), xn_(X_.size()), bn_(B_.size()),
      rho_(flatten_checked(rho, xn_, bn_, xn_, "rho")),
      phi_(flatten_checked(phi, bn_, xn_, xn_, "phi")),
      gamma_(flatten_checked(gamma, bn_, bn_, xn_, "gamma")) {}

std::vector<std::vector<int>> ActionSystem::rho_rows() const {
  return unflatten(rho_, xn_, bn_);
}
std::vector<std::vector<int>> ActionSystem::phi_rows() const {
  return unflatten(phi_, bn_, xn_);
}
std::vector<std::vector<int>> ActionSystem::gamma_rows() const {
  return unflatten(gamma_, bn_, bn_);
}

namespace {

// Result of the synthetic operation (x,b)+(x',b') in the carrier-free
// sense: first component before the final rho is x+phi(b,x')+gamma(b,b').
int synth_first(const ActionSystem& T, int x, int b, int x2, int b2) {
  const auto& X = T.X();
  return X.op(X.op(x, T.phi(b, x2)), T.gamma(b, b2));
}

// Checks all laws. With early_exit, stops at the first violation; the
// report then carries at most one entry.
VerificationReport run_action_checks(const ActionSystem& T, bool early_exit) {
  VerificationReport r;
  const auto& X = T.X();
  const auto& B = T.B();
  const int xn = X.size(), bn = B.size();
  const auto done = [&] { return early_exit && !r.passed(); };

  for (int x = 0; x < xn && !done(); ++x)
    if (T.rho(x, 0) != x) r.add("rho(x,0)=x", {{"x", x}});
  for (int b = 0; b < bn && !done(); ++b)
    if (T.rho(0, b) != 0) r.add("rho(0,b)=0", {{"b", b}});
  for (int x = 0; x < xn && !done(); ++x)
    if (T.phi(0, x) != x) r.add("phi(0,x)=x", {{"x", x}});
  for (int b = 0; b < bn && !done(); ++b)
    if (T.phi(b, 0) != 0) r.add("phi(b,0)=0", {{"b", b}});
  for (int b = 0; b < bn && !done(); ++b) {
    if (T.gamma(b, 0) != 0) r.add("gamma(b,0)=0", {{"b", b}});
    if (T.gamma(0, b) != 0) r.add("gamma(0,b)=0", {{"b", b}});
  }
  for (int x = 0; x < xn && !done(); ++x)
    for (int b = 0; b < bn && !done(); ++b)
      if (T.rho(T.rho(x, b), b) != T.rho(x, b))
        r.add("rho(x,b)=rho(rho(x,b),b)", {{"x", x}, {"b", b}});
  for (int b = 0; b < bn && !done(); ++b)
    for (int x = 0; x < xn && !done(); ++x)
      if (T.rho(T.phi(b, x), b) != T.phi(b, x))
        r.add("phi(b,x)=rho(phi(b,x),b)", {{"b", b}, {"x", x}});
  for (int b = 0; b < bn && !done(); ++b)
    for (int b2 = 0; b2 < bn && !done(); ++b2)
      if (T.rho(T.gamma(b, b2), B.op(b, b2)) != T.gamma(b, b2))
        r.add("gamma(b,b')=rho(gamma(b,b'),b+b')", {{"b", b}, {"b'", b2}});
  if (!r.passed()) {
    // Associativity is only meaningful once the unit and idempotence laws
    // hold; skip it so its single-witness slot is not wasted on noise.
    return r;
  }
  // Associativity of the synthetic operation over X^3 x B^3; first witness
  // only, in (x,x',x'',b,b',b'') order.
  for (int x = 0; x < xn; ++x)
    for (int x2 = 0; x2 < xn; ++x2)
      for (int x3 = 0; x3 < xn; ++x3)
        for (int b = 0; b < bn; ++b)
          for (int b2 = 0; b2 < bn; ++b2)
            for (int b3 = 0; b3 < bn; ++b3) {
              const int b12 = B.op(b, b2);
              const int b23 = B.op(b2, b3);
              const int ball = B.op(b12, b3);
              const int left_mid = T.rho(synth_first(T, x, b, x2, b2), b12);
              const int lhs =
                  T.rho(synth_first(T, left_mid, b12, x3, b3), ball);
              const int right_mid = T.rho(synth_first(T, x2, b2, x3, b3), b23);
              const int rhs =
                  T.rho(synth_first(T, x, b, right_mid, b23), ball);
              if (lhs != rhs) {
                r.add("((x,b)+(x',b'))+(x'',b'')=(x,b)+((x',b')+(x'',b''))",
                      {{"x", x}, {"x'", x2}, {"x''", x3},
                       {"b", b}, {"b'", b2}, {"b''", b3}});
                return r;
              }
            }
  return r;
}

}  // namespace

VerificationReport verify_action_system(const ActionSystem& T) {
  return run_action_checks(T, false);
}

bool satisfies_action_axioms(const ActionSystem& T) {
  return run_action_checks(T, true).passed();
}

SyntheticRealization::SyntheticRealization(
    ActionSystem base, std::vector<std::pair<int, int>> carrier,
    MonoidTable monoid, Homomorphism p_hat, Homomorphism k_hat,
    PointedMap q_hat, PointedMap s_hat)
    : base_(std::move(base)), carrier_(std::move(carrier)),
      monoid_(std::move(monoid)), p_hat_(std::move(p_hat)),
      k_hat_(std::move(k_hat)), q_hat_(std::move(q_hat)),
      s_hat_(std::move(s_hat)) {}

int SyntheticRealization::index_of(int x, int b) const {
  const auto it = std::lower_bound(carrier_.begin(), carrier_.end(),
                                   std::make_pair(x, b));
  if (it == carrier_.end() || *it != std::make_pair(x, b)) return -1;
  return static_cast<int>(it - carrier_.begin());
}

Semibiproduct SyntheticRealization::as_semibiproduct() const {
  return Semibiproduct(base_.X(), monoid_, base_.B(), p_hat_, k_hat_, q_hat_,
                       s_hat_);
}

SyntheticRealization functor_Q(const ActionSystem& T) {
  {
    VerificationReport r = run_action_checks(T, true);
    if (!r.passed())
      throw Error(ErrorCode::InvalidActionSystem,
                  "action system fails law \"" + r.violations()[0].law + "\"");
  }
  const auto& X = T.X();
  const auto& B = T.B();
  std::vector<std::pair<int, int>> carrier;
  for (int x = 0; x < X.size(); ++x)
    for (int b = 0; b < B.size(); ++b)
      if (T.rho(x, b) == x) carrier.emplace_back(x, b);
  const int n = static_cast<int>(carrier.size());
  const auto index_of = [&](int x, int b) {
    const auto it = std::lower_bound(carrier.begin(), carrier.end(),
                                     std::make_pair(x, b));
    return static_cast<int>(it - carrier.begin());
  };
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto [x, b] = carrier[i];
      const auto [x2, b2] = carrier[j];
      const int bsum = B.op(b, b2);
      // The result lands back in the carrier because rho(-,bsum) is
      // idempotent.
      rows[i][j] = index_of(T.rho(synth_first(T, x, b, x2, b2), bsum), bsum);
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i)
    labels[i] = "(" + X.label(carrier[i].first) + "," +
                B.label(carrier[i].second) + ")";
  MonoidTable R = make_monoid(rows, std::move(labels));

  std::vector<int> pv(n), qv(n), kv(X.size()), sv(B.size());
  for (int i = 0; i < n; ++i) {
    qv[i] = carrier[i].first;
    pv[i] = carrier[i].second;
  }
  for (int x = 0; x < X.size(); ++x) kv[x] = index_of(x, 0);
  for (int b = 0; b < B.size(); ++b) sv[b] = index_of(0, b);
  return SyntheticRealization(
      T, std::move(carrier), R, Homomorphism(R, B, std::move(pv)),
      Homomorphism(X, R, std::move(kv)), PointedMap(R, X, std::move(qv)),
      PointedMap(B, R, std::move(sv)));
}

ActionSystem functor_P(const Semibiproduct& S) {
  if (!is_verified(S))
    throw Error(ErrorCode::InvalidSemibiproduct,
                "functor_P needs a verified semibiproduct");
  const auto& A = S.A();
  const auto& k = S.k();
  const auto& s = S.s();
  const auto& q = S.q();
  const int xn = S.X().size(), bn = S.B().size();
  std::vector<std::vector<int>> rho(xn, std::vector<int>(bn));
  std::vector<std::vector<int>> phi(bn, std::vector<int>(xn));
  std::vector<std::vector<int>> gamma(bn, std::vector<int>(bn));
  for (int x = 0; x < xn; ++x)
    for (int b = 0; b < bn; ++b) {
      rho[x][b] = q(A.op(k(x), s(b)));
      phi[b][x] = q(A.op(s(b), k(x)));
    }
  for (int b = 0; b < bn; ++b)
    for (int b2 = 0; b2 < bn; ++b2) gamma[b][b2] = q(A.op(s(b), s(b2)));
  return ActionSystem(S.X(), S.B(), std::move(rho), std::move(phi),
                      std::move(gamma));
}

ActMorphism::ActMorphism(ActionSystem src, ActionSystem tgt, Homomorphism f_,
                         Homomorphism g_)
    : source(std::move(src)), target(std::move(tgt)), f(std::move(f_)),
      g(std::move(g_)) {
  const auto check = [](const MonoidTable& got, const MonoidTable& want,
                        const char* what) {
    if (!(got == want))
      throw Error(ErrorCode::CarrierMismatch,
                  std::string(what) + " does not match the stated carrier");
  };
  check(f.dom(), source.X(), "dom(f)");
  check(f.cod(), target.X(), "cod(f)");
  check(g.dom(), source.B(), "dom(g)");
  check(g.cod(), target.B(), "cod(g)");
}

VerificationReport is_act_morphism(const ActMorphism& m) {
  VerificationReport r;
  const auto& S = m.source;
  const auto& T = m.target;
  for (int x = 0; x < S.X().size(); ++x)
    for (int b = 0; b < S.B().size(); ++b)
      if (m.f(S.rho(x, b)) != T.rho(m.f(x), m.g(b)))
        r.add("f(rho(x,b))=rho'(f(x),g(b))", {{"x", x}, {"b", b}});
  for (int b = 0; b < S.B().size(); ++b)
    for (int x = 0; x < S.X().size(); ++x)
      if (m.f(S.phi(b, x)) != T.phi(m.g(b), m.f(x)))
        r.add("f(phi(b,x))=phi'(g(b),f(x))", {{"b", b}, {"x", x}});
  for (int b = 0; b < S.B().size(); ++b)
    for (int b2 = 0; b2 < S.B().size(); ++b2)
      if (m.f(S.gamma(b, b2)) != T.gamma(m.g(b), m.g(b2)))
        r.add("f(gamma(b,b'))=gamma'(g(b),g(b'))", {{"b", b}, {"b'", b2}});
  return r;
}

PsbMorphism act_to_psb_morphism(const ActMorphism& m) {
  if (!is_act_morphism(m).passed())
    throw Error(ErrorCode::InvalidActionSystem,
                "pair does not satisfy the equivariance laws");
  SyntheticRealization src = functor_Q(m.source);
  SyntheticRealization tgt = functor_Q(m.target);
  std::vector<int> values(src.carrier().size());
  for (size_t i = 0; i < src.carrier().size(); ++i) {
    const auto [x, b] = src.carrier()[i];
    // Equivariance keeps (f(x),g(b)) inside the target carrier.
    values[i] = tgt.index_of(m.f(x), m.g(b));
  }
  Homomorphism f2(src.monoid(), tgt.monoid(), std::move(values));
  return PsbMorphism(src.as_semibiproduct(), tgt.as_semibiproduct(), m.f,
                     std::move(f2), m.g);
}

ActMorphism psb_to_act_morphism(const PsbMorphism& m) {
  return ActMorphism(functor_P(m.source), functor_P(m.target), m.f1, m.f3);
}

RoundtripWitness roundtrip_witness(const Semibiproduct& S) {
  SyntheticRealization R = functor_Q(functor_P(S));
  const auto& A = S.A();
  std::vector<int> av(A.size()), bv(R.carrier().size());
  for (int a = 0; a < A.size(); ++a)
    av[a] = R.index_of(S.q()(a), S.p()(a));
  for (size_t i = 0; i < R.carrier().size(); ++i) {
    const auto [x, b] = R.carrier()[i];
    bv[i] = A.op(S.k()(x), S.s()(b));
  }
  return RoundtripWitness{R, PointedMap(A, R.monoid(), std::move(av)),
                          PointedMap(R.monoid(), A, std::move(bv))};
}

ActionSystem trivial_action_system(const MonoidTable& X,
                                   const MonoidTable& B) {
  const int xn = X.size(), bn = B.size();
  std::vector<std::vector<int>> rho(xn, std::vector<int>(bn));
  std::vector<std::vector<int>> phi(bn, std::vector<int>(xn));
  std::vector<std::vector<int>> gamma(bn, std::vector<int>(bn, 0));
  for (int x = 0; x < xn; ++x)
    for (int b = 0; b < bn; ++b) rho[x][b] = x;
  for (int b = 0; b < bn; ++b)
    for (int x = 0; x < xn; ++x) phi[b][x] = x;
  return ActionSystem(X, B, std::move(rho), std::move(phi), std::move(gamma));
}

}  // namespace sbp
