// Command line front end: every verb reads JSON documents, runs one library
// operation, and prints either aligned text or the JSON artifact. Exit code
// 0 means the checked laws hold, 1 means a verification failed, 2 means the
// input could not be used at all. On failure there is always one
// machine-readable JSON line on a predictable stream: stdout in json mode,
// stderr in table mode.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sbp/json_io.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string format = "table";
  std::string out_path;
  std::string seed_path;

  bool table() const { return format == "table"; }
};

void attach_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", opts.out_path,
                  "write stdout payload to this file instead");
  cmd->add_option("--seed-registry", opts.seed_path,
                  "JSON file with extra named monoids");
}

sbp::Registry load_registry(const Options& opts) {
  sbp::Registry reg;
  if (!opts.seed_path.empty())
    sbp::seed_registry(reg, sbp::parse_json_file(opts.seed_path));
  return reg;
}

// The bytes that would have gone to stdout; --out redirects them to a file.
void deliver(const std::string& payload, const Options& opts) {
  if (opts.out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out)
    throw sbp::Error(sbp::ErrorCode::ParseError,
                     "cannot write file: " + opts.out_path);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

std::string human_report(const sbp::VerificationReport& r) {
  std::string out;
  for (const auto& v : r.violations()) {
    out += "violated " + v.law + " at";
    for (const auto& [name, value] : v.witness)
      out += " " + name + "=" + std::to_string(value);
    out += "\n";
  }
  return out;
}

// Verification failure: exit 1 with the report JSON on the machine stream.
int fail_verification(const json& machine, const std::string& human,
                      const Options& opts) {
  if (opts.table()) {
    deliver(human, opts);
    std::fputs(sbp::jsonl_dump(machine).c_str(), stderr);
  } else {
    deliver(sbp::canonical_dump(machine), opts);
  }
  return 1;
}

int fail_verification(const sbp::VerificationReport& r, const Options& opts) {
  return fail_verification(sbp::report_to_json(r), human_report(r), opts);
}

// Guard for verbs that consume a semibiproduct: the laws must hold before
// the operation makes sense.
bool input_verifies(const sbp::Semibiproduct& S, const char* which,
                    const Options& opts, int& rc) {
  sbp::VerificationReport r = sbp::verify_semibiproduct(S);
  if (r.passed()) return true;
  json machine = sbp::report_to_json(r);
  machine["input"] = which;
  rc = fail_verification(
      machine, std::string(which) + " input fails verification\n" +
                   human_report(r),
      opts);
  return false;
}

std::string render_matrix(const std::vector<std::vector<int>>& rows,
                          const char* name) {
  std::string out = std::string(name) + ":\n";
  for (const auto& r : rows) {
    out += " ";
    for (int v : r) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string render_values(const std::vector<int>& vs, const char* name) {
  std::string out = std::string(name) + ":";
  for (int v : vs) out += " " + std::to_string(v);
  return out + "\n";
}

}  // namespace

// Individual verbs. Each returns the process exit code.
namespace verbs {

int monoid_check(const std::string& path, const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const json doc = sbp::parse_json_file(path);
  std::optional<sbp::MonoidTable> parsed;
  try {
    parsed = sbp::monoid_from_json(doc, reg);
  } catch (const sbp::Error& e) {
    // A wrong table is this verb's negative answer, not a usage error.
    if (e.code() != sbp::ErrorCode::NotIdentity &&
        e.code() != sbp::ErrorCode::NotAssociative)
      throw;
    if (opts.table()) {
      std::string line = std::string("not a monoid: ") + e.what() + " [";
      line += sbp::to_string(e.code());
      for (const auto& [name, value] : e.details())
        line += " " + name + "=" + std::to_string(value);
      line += "]\n";
      deliver(line, opts);
      std::fputs(sbp::jsonl_dump(sbp::error_to_json(e)).c_str(), stderr);
    } else {
      deliver(sbp::canonical_dump(sbp::error_to_json(e)), opts);
    }
    return 1;
  }
  const sbp::MonoidTable& m = *parsed;
  if (opts.table()) {
    std::string props;
    if (m.is_group()) props += props.empty() ? "group" : ", group";
    if (m.is_commutative())
      props += props.empty() ? "commutative" : ", commutative";
    if (m.is_idempotent())
      props += props.empty() ? "idempotent" : ", idempotent";
    std::string line = "ok: monoid of order " + std::to_string(m.size());
    if (!props.empty()) line += " (" + props + ")";
    deliver(line + "\n", opts);
  } else {
    json out;
    out["ok"] = true;
    out["order"] = m.size();
    out["group"] = m.is_group();
    out["commutative"] = m.is_commutative();
    out["idempotent"] = m.is_idempotent();
    deliver(sbp::canonical_dump(out), opts);
  }
  return 0;
}

int monoid_enum(int n, const Options& opts) {
  const std::vector<sbp::MonoidTable> found = sbp::enumerate_monoids(n);
  std::string payload;
  for (size_t i = 0; i < found.size(); ++i) {
    if (opts.table()) {
      payload += std::to_string(i) + ": " +
                 json(found[i].rows()).dump() + "\n";
    } else {
      json line;
      line["index"] = static_cast<int>(i);
      line["table"] = found[i].rows();
      payload += sbp::jsonl_dump(line);
    }
  }
  deliver(payload, opts);
  return 0;
}

int sbp_verify(const std::string& path, const std::string& pointedness,
               const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const sbp::Semibiproduct S =
      sbp::semibiproduct_from_json(sbp::parse_json_file(path), reg);
  const sbp::Pointedness mode = pointedness == "skip"
                                    ? sbp::Pointedness::skip
                                    : sbp::Pointedness::require;
  const sbp::VerificationReport r = sbp::verify_semibiproduct(S, mode);
  if (!r.passed()) return fail_verification(r, opts);
  if (opts.table()) {
    deliver("verified: semibiproduct laws hold (|X|=" +
                std::to_string(S.X().size()) +
                " |A|=" + std::to_string(S.A().size()) +
                " |B|=" + std::to_string(S.B().size()) + ")\n",
            opts);
  } else {
    deliver(sbp::canonical_dump(sbp::report_to_json(r)), opts);
  }
  return 0;
}

int sbp_exactness(const std::string& path, const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const sbp::Semibiproduct S =
      sbp::semibiproduct_from_json(sbp::parse_json_file(path), reg);
  int rc = 0;
  if (!input_verifies(S, "semibiproduct", opts, rc)) return rc;
  const sbp::VerificationReport r = sbp::check_exactness(S);
  if (!r.passed()) return fail_verification(r, opts);
  if (opts.table())
    deliver("exact: k embeds the kernel of p and p is onto\n", opts);
  else
    deliver(sbp::canonical_dump(sbp::report_to_json(r)), opts);
  return 0;
}

int sbp_pullback(const std::string& sbp_path, const std::string& hom_path,
                 const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const sbp::Semibiproduct S =
      sbp::semibiproduct_from_json(sbp::parse_json_file(sbp_path), reg);
  int rc = 0;
  if (!input_verifies(S, "semibiproduct", opts, rc)) return rc;
  const sbp::Homomorphism h =
      sbp::hom_from_json(sbp::parse_json_file(hom_path), reg);
  const sbp::Semibiproduct P = sbp::pullback_semibiproduct(S, h);
  if (opts.table()) {
    deliver("pullback total object has order " +
                std::to_string(P.A().size()) + "; verification " +
                (sbp::is_verified(P) ? "passes" : "fails") + "\n",
            opts);
  } else {
    deliver(sbp::canonical_dump(sbp::semibiproduct_to_json(P)), opts);
  }
  return 0;
}

int sbp_compose(const std::string& first_path, const std::string& second_path,
                const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const sbp::Semibiproduct S =
      sbp::semibiproduct_from_json(sbp::parse_json_file(first_path), reg);
  const sbp::Semibiproduct T =
      sbp::semibiproduct_from_json(sbp::parse_json_file(second_path), reg);
  int rc = 0;
  if (!input_verifies(S, "first", opts, rc)) return rc;
  if (!input_verifies(T, "second", opts, rc)) return rc;
  const auto result = sbp::compose_semibiproducts(S, T);
  if (const auto* obs = std::get_if<sbp::CompositionObstruction>(&result)) {
    const json machine = sbp::obstruction_to_json(*obs);
    const std::string human =
        "not composable: s(b) must equal s(k'(q'(b)))+s(s'(p'(b))), but at "
        "b=" +
        std::to_string(obs->b) + " the sides are " +
        std::to_string(obs->expected) + " and " + std::to_string(obs->actual) +
        "\n";
    return fail_verification(machine, human, opts);
  }
  const auto& C = std::get<sbp::Semibiproduct>(result);
  if (opts.table()) {
    deliver("composite has kernel of order " + std::to_string(C.X().size()) +
                " and quotient of order " + std::to_string(C.B().size()) +
                "; verification " +
                (sbp::is_verified(C) ? "passes" : "fails") + "\n",
            opts);
  } else {
    deliver(sbp::canonical_dump(sbp::semibiproduct_to_json(C)), opts);
  }
  return 0;
}

int act_verify(const std::string& path, const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const sbp::ActionSystem T =
      sbp::action_system_from_json(sbp::parse_json_file(path), reg);
  const sbp::VerificationReport r = sbp::verify_action_system(T);
  if (!r.passed()) return fail_verification(r, opts);
  if (opts.table())
    deliver("verified: action system laws hold (|X|=" +
                std::to_string(T.X().size()) +
                " |B|=" + std::to_string(T.B().size()) + ")\n",
            opts);
  else
    deliver(sbp::canonical_dump(sbp::report_to_json(r)), opts);
  return 0;
}

int act_realize(const std::string& path, const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const sbp::ActionSystem T =
      sbp::action_system_from_json(sbp::parse_json_file(path), reg);
  const sbp::VerificationReport r = sbp::verify_action_system(T);
  if (!r.passed()) return fail_verification(r, opts);
  const sbp::SyntheticRealization R = sbp::functor_Q(T);
  if (opts.table()) {
    std::string out = "carrier:";
    for (const auto& [x, b] : R.carrier())
      out += " (" + std::to_string(x) + "," + std::to_string(b) + ")";
    out += "\n" + render_matrix(R.monoid().rows(), "table");
    out += render_values(R.p_hat().values(), "p");
    out += render_values(R.k_hat().values(), "k");
    out += render_values(R.q_hat().values(), "q");
    out += render_values(R.s_hat().values(), "s");
    deliver(out, opts);
  } else {
    deliver(sbp::canonical_dump(
                sbp::semibiproduct_to_json(R.as_semibiproduct())),
            opts);
  }
  return 0;
}

int act_derive(const std::string& path, const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const sbp::Semibiproduct S =
      sbp::semibiproduct_from_json(sbp::parse_json_file(path), reg);
  int rc = 0;
  if (!input_verifies(S, "semibiproduct", opts, rc)) return rc;
  const sbp::ActionSystem T = sbp::functor_P(S);
  if (opts.table()) {
    deliver(render_matrix(T.rho_rows(), "rho") +
                render_matrix(T.phi_rows(), "phi") +
                render_matrix(T.gamma_rows(), "gamma"),
            opts);
  } else {
    deliver(sbp::canonical_dump(sbp::action_system_to_json(T)), opts);
  }
  return 0;
}

int roundtrip(const std::string& path, const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const sbp::Semibiproduct S =
      sbp::semibiproduct_from_json(sbp::parse_json_file(path), reg);
  int rc = 0;
  if (!input_verifies(S, "semibiproduct", opts, rc)) return rc;
  const sbp::RoundtripWitness w = sbp::roundtrip_witness(S);

  // The two maps must be mutually inverse homomorphisms carrying one
  // structure to the other; anything else is a failed roundtrip.
  sbp::VerificationReport r;
  const auto ab = sbp::compose_maps(w.beta, w.alpha);
  const auto ba = sbp::compose_maps(w.alpha, w.beta);
  for (int a = 0; a < S.A().size(); ++a)
    if (ab(a) != a) r.add("beta(alpha(a))=a", {{"a", a}});
  for (int i = 0; i < w.realization.monoid().size(); ++i)
    if (ba(i) != i) r.add("alpha(beta(r))=r", {{"r", i}});
  if (!sbp::is_homomorphism(w.alpha))
    r.add("alpha respects the operation", {});
  if (!sbp::is_homomorphism(w.beta)) r.add("beta respects the operation", {});
  if (r.passed()) {
    const sbp::PsbMorphism to_realization(
        S, w.realization.as_semibiproduct(), sbp::identity_hom(S.X()),
        sbp::Homomorphism(w.alpha), sbp::identity_hom(S.B()));
    const sbp::VerificationReport squares = sbp::is_psb_morphism(to_realization);
    for (const auto& v : squares.violations()) r.add(v.law, v.witness);
  }
  if (!r.passed()) return fail_verification(r, opts);

  if (opts.table()) {
    deliver("roundtrip: total object of order " +
                std::to_string(S.A().size()) +
                " is isomorphic to its synthetic realization\n" +
                render_values(w.alpha.values(), "alpha") +
                render_values(w.beta.values(), "beta"),
            opts);
  } else {
    json out;
    out["isomorphism"] = true;
    out["alpha"] = w.alpha.values();
    out["beta"] = w.beta.values();
    json carrier = json::array();
    for (const auto& [x, b] : w.realization.carrier())
      carrier.push_back(json::array({x, b}));
    out["carrier"] = carrier;
    deliver(sbp::canonical_dump(out), opts);
  }
  return 0;
}

int act_enumerate(const std::string& x_arg, const std::string& b_arg,
                  const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const auto resolve = [&reg](const std::string& arg) {
    if (reg.contains(arg)) return reg.get(arg);
    return sbp::monoid_from_json(sbp::parse_json_file(arg), reg);
  };
  const sbp::MonoidTable X = resolve(x_arg);
  const sbp::MonoidTable B = resolve(b_arg);
  const std::vector<sbp::ActionSystem> systems =
      sbp::enumerate_action_systems(X, B);
  std::string payload;
  for (size_t i = 0; i < systems.size(); ++i) {
    if (opts.table()) {
      payload += std::to_string(i) + ": rho=" +
                 json(systems[i].rho_rows()).dump() +
                 " phi=" + json(systems[i].phi_rows()).dump() +
                 " gamma=" + json(systems[i].gamma_rows()).dump() + "\n";
    } else {
      payload += sbp::jsonl_dump(sbp::action_system_to_json(systems[i]));
    }
  }
  deliver(payload, opts);
  return 0;
}

int act_classify(const std::string& path, const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const json doc = sbp::parse_json_file(path);
  if (!doc.is_array())
    throw sbp::Error(sbp::ErrorCode::ParseError,
                     "act-classify expects a JSON array of action systems");
  std::vector<sbp::CensusEntry> entries;
  for (const auto& item : doc)
    entries.push_back(
        sbp::make_census_entry(sbp::action_system_from_json(item, reg)));
  const std::vector<sbp::IsoClass> classes = sbp::classify(entries);
  std::string payload;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (opts.table()) {
      payload += std::to_string(i) + ": members";
      for (int m : classes[i].member_indices)
        payload += " " + std::to_string(m);
      payload += "\n";
    } else {
      json line;
      line["class"] = static_cast<int>(i);
      line["members"] = classes[i].member_indices;
      line["representative"] = sbp::action_system_to_json(
          classes[i].representative.system);
      payload += sbp::jsonl_dump(line);
    }
  }
  deliver(payload, opts);
  return 0;
}

int census(const Options& opts) {
  const sbp::Registry reg = load_registry(opts);
  const std::vector<sbp::CensusEntry> entries = sbp::census_2x2();
  std::string payload;
  if (opts.table()) {
    for (size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      const sbp::SystemFlags f = sbp::system_flags(e.system);
      const std::string item = std::to_string(i + 1);
      payload += std::string(item.size() < 2 ? 2 - item.size() : 0, ' ') +
                 item + ". (" +
                 reg.name_of(e.system.X()).value_or("?") + "," +
                 reg.name_of(e.system.B()).value_or("?") + ",rho" +
                 (f.rho_nontrivial ? "1" : "0") + ",phi" +
                 (f.phi_nontrivial ? "1" : "0") + ",gamma" +
                 (f.gamma_nontrivial ? "1" : "0") + ")  |R|=" +
                 std::to_string(e.realization_size) + "  ";
      if (e.tags.empty()) {
        payload += "-";
      } else {
        for (size_t t = 0; t < e.tags.size(); ++t)
          payload += std::string(t ? " " : "") + sbp::to_string(e.tags[t]);
      }
      payload += "\n";
    }
  } else {
    for (size_t i = 0; i < entries.size(); ++i)
      payload += sbp::jsonl_dump(sbp::census_entry_to_json(
          entries[i], static_cast<int>(i + 1), reg));
  }
  deliver(payload, opts);
  return 0;
}

}  // namespace verbs

int main(int argc, char** argv) {
  CLI::App app{"finite monoid semibiproduct toolkit"};
  app.require_subcommand(1);
  Options opts;
  int exit_code = 0;
  const auto set = [&exit_code](int rc) { exit_code = rc; };

  std::string path1, path2, pointedness = "require";
  int enum_n = 0;

  auto* c_mcheck = app.add_subcommand("monoid-check", "validate a monoid doc");
  c_mcheck->add_option("file", path1)->required();
  attach_common(c_mcheck, opts);
  c_mcheck->callback([&] { set(verbs::monoid_check(path1, opts)); });

  auto* c_menum =
      app.add_subcommand("monoid-enum", "all monoids of an order, up to iso");
  c_menum->add_option("n", enum_n)->required();
  attach_common(c_menum, opts);
  c_menum->callback([&] { set(verbs::monoid_enum(enum_n, opts)); });

  auto* c_sverify =
      app.add_subcommand("sbp-verify", "check the semibiproduct laws");
  c_sverify->add_option("file", path1)->required();
  c_sverify->add_option("--pointedness", pointedness)
      ->check(CLI::IsMember({"require", "skip"}));
  attach_common(c_sverify, opts);
  c_sverify->callback(
      [&] { set(verbs::sbp_verify(path1, pointedness, opts)); });

  auto* c_sexact =
      app.add_subcommand("sbp-exactness", "kernel/quotient recovery checks");
  c_sexact->add_option("file", path1)->required();
  attach_common(c_sexact, opts);
  c_sexact->callback([&] { set(verbs::sbp_exactness(path1, opts)); });

  auto* c_spull =
      app.add_subcommand("sbp-pullback", "base change along a homomorphism");
  c_spull->add_option("sbp-file", path1)->required();
  c_spull->add_option("hom-file", path2)->required();
  attach_common(c_spull, opts);
  c_spull->callback([&] { set(verbs::sbp_pullback(path1, path2, opts)); });

  auto* c_scomp =
      app.add_subcommand("sbp-compose", "compose along a shared middle");
  c_scomp->add_option("first", path1)->required();
  c_scomp->add_option("second", path2)->required();
  attach_common(c_scomp, opts);
  c_scomp->callback([&] { set(verbs::sbp_compose(path1, path2, opts)); });

  auto* c_averify =
      app.add_subcommand("act-verify", "check the action system laws");
  c_averify->add_option("file", path1)->required();
  attach_common(c_averify, opts);
  c_averify->callback([&] { set(verbs::act_verify(path1, opts)); });

  auto* c_arealize =
      app.add_subcommand("act-realize", "build the synthetic realization");
  c_arealize->add_option("file", path1)->required();
  attach_common(c_arealize, opts);
  c_arealize->callback([&] { set(verbs::act_realize(path1, opts)); });

  auto* c_aderive = app.add_subcommand(
      "act-derive", "read the action system off a semibiproduct");
  c_aderive->add_option("file", path1)->required();
  attach_common(c_aderive, opts);
  c_aderive->callback([&] { set(verbs::act_derive(path1, opts)); });

  auto* c_round = app.add_subcommand(
      "roundtrip", "realize the derived system and compare with the total");
  c_round->add_option("file", path1)->required();
  attach_common(c_round, opts);
  c_round->callback([&] { set(verbs::roundtrip(path1, opts)); });

  auto* c_aenum = app.add_subcommand(
      "act-enumerate", "all valid action systems over two carriers");
  c_aenum->add_option("X", path1)->required();
  c_aenum->add_option("B", path2)->required();
  attach_common(c_aenum, opts);
  c_aenum->callback([&] { set(verbs::act_enumerate(path1, path2, opts)); });

  auto* c_aclass = app.add_subcommand(
      "act-classify", "group action systems into isomorphism classes");
  c_aclass->add_option("file", path1)->required();
  attach_common(c_aclass, opts);
  c_aclass->callback([&] { set(verbs::act_classify(path1, opts)); });

  auto* c_census = app.add_subcommand(
      "census", "the fourteen extensions of two-element monoids");
  attach_common(c_census, opts);
  c_census->callback([&] { set(verbs::census(opts)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const sbp::Error& e) {
    std::fputs(sbp::jsonl_dump(sbp::error_to_json(e)).c_str(), stderr);
    return 2;
  } catch (const std::exception& e) {
    std::fputs(
        sbp::jsonl_dump(json{{"error", {{"code", "Internal"},
                                        {"message", e.what()}}}})
            .c_str(),
        stderr);
    return 2;
  }
  return exit_code;
}
