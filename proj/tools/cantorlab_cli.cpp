// Batch JSON front end: every operation is a pure function from a JSON
// payload (stdin or --in) to a JSON result document (stdout or --out).
// Exit status: 0 on success, 1 on a domain-level false with witness,
// 2 on malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cantorlab/errors.hpp"
#include "cantorlab/json_io.hpp"
#include "cantorlab/sampling.hpp"
#include "cantorlab/verify.hpp"

namespace {

using cantorlab::json;

json get(const json& payload, const char* field) {
  if (!payload.is_object() || !payload.contains(field))
    throw cantorlab::MalformedQueryError(std::string("missing field \"") +
                                         field + "\"");
  return payload.at(field);
}

cantorlab::Subbasic subbasic_kind(const std::string& s) {
  if (s == "v") return cantorlab::Subbasic::v;
  if (s == "w1") return cantorlab::Subbasic::w1;
  if (s == "w2") return cantorlab::Subbasic::w2;
  throw cantorlab::MalformedQueryError("kind must be v, w1 or w2");
}

cantorlab::HcoQuery hco_query(const json& q) {
  const std::string kind = get(q, "kind").get<std::string>();
  using namespace cantorlab;
  if (kind == "KV")
    return HcoKV{clopen_from_json(get(q, "k")), clopen_from_json(get(q, "v"))};
  if (kind == "KV_inv")
    return HcoKVInv{clopen_from_json(get(q, "k")),
                    clopen_from_json(get(q, "v"))};
  if (kind == "D_minus") return HcoDMinus{clopen_from_json(get(q, "v"))};
  if (kind == "I_minus") return HcoIMinus{clopen_from_json(get(q, "v"))};
  if (kind == "E")
    return HcoE{clopen_from_json(get(q, "v")), clopen_from_json(get(q, "w"))};
  throw MalformedQueryError(
      "query kind must be KV, KV_inv, D_minus, I_minus or E");
}

struct Outcome {
  json doc;
  int exit_code = 0;
};

Outcome ok_result(json result) {
  return {{{"ok", true}, {"result", std::move(result)}}, 0};
}

Outcome refuted_result(json result, json witness) {
  return {{{"ok", false},
           {"result", std::move(result)},
           {"witness", std::move(witness)}},
          1};
}

Outcome dispatch(const std::string& name, const json& p) {
  using namespace cantorlab;
  if (name == "compose")
    return ok_result(to_json(
        compose(pbij_from_json(get(p, "f")), pbij_from_json(get(p, "g")))));
  if (name == "invert")
    return ok_result(to_json(invert(pbij_from_json(get(p, "f")))));
  if (name == "idempotent")
    return ok_result(is_idempotent(pbij_from_json(get(p, "f"))));
  if (name == "nbhd") {
    std::optional<std::uint32_t> y;
    if (p.contains("y")) y = p.at("y").get<std::uint32_t>();
    return ok_result(subbasic_membership(
        pbij_from_json(get(p, "f")),
        subbasic_kind(get(p, "kind").get<std::string>()),
        get(p, "x").get<std::uint32_t>(), y));
  }
  if (name == "converge") {
    SequenceWindow w;
    for (const auto& t : get(p, "terms")) w.terms.push_back(pbij_from_json(t));
    w.claimed_limit = pbij_from_json(get(p, "limit"));
    w.window_bound = get(p, "window_bound").get<std::uint32_t>();
    const bool strict =
        p.contains("strict_inverse") ? p.at("strict_inverse").get<bool>()
                                     : true;
    const auto verdict = check_convergence(w, strict);
    json doc = to_json(verdict);
    if (verdict.refuted) return refuted_result(doc, doc.at("witness"));
    return ok_result(doc);
  }
  if (name == "metric")
    return ok_result(to_json(tau_pp_distance(
        pbij_from_json(get(p, "f")), pbij_from_json(get(p, "g")),
        get(p, "horizon").get<std::uint32_t>())));
  if (name == "wagner-preston") {
    json out = json::array();
    for (const auto& f : wagner_preston(fis_from_json(p)))
      out.push_back(to_json(f));
    return ok_result({{"representation", out}});
  }
  if (name == "ideal")
    return ok_result(principal_ideal(semilattice_from_json(p),
                                     get(p, "x").get<std::uint32_t>()));
  if (name == "compat") {
    json out = json::array();
    for (const auto& [x, y] : compat_pairs(semilattice_from_json(p)))
      out.push_back({x, y});
    return ok_result(out);
  }
  if (name == "munn") {
    json out = json::array();
    for (const auto& m : munn_semigroup(semilattice_from_json(p)))
      out.push_back(to_json(m));
    return ok_result({{"count", out.size()}, {"elements", out}});
  }
  if (name == "munn-member")
    return ok_result(is_munn_member(semilattice_from_json(get(p, "E")),
                                    pbij_from_json(get(p, "f"))));
  if (name == "clopen-op") {
    const std::string kind = get(p, "kind").get<std::string>();
    const Clopen a = clopen_from_json(get(p, "a"));
    if (kind == "complement") return ok_result(to_json(clopen_complement(a)));
    const Clopen b = clopen_from_json(get(p, "b"));
    if (kind == "union") return ok_result(to_json(clopen_union(a, b)));
    if (kind == "intersect")
      return ok_result(to_json(clopen_intersect(a, b)));
    if (kind == "minus") return ok_result(to_json(clopen_minus(a, b)));
    if (kind == "subset") return ok_result(clopen_subset(a, b));
    throw MalformedQueryError(
        "kind must be union, intersect, complement, minus or subset");
  }
  if (name == "base") {
    json out = json::array();
    for (const auto& c : enumerate_base(get(p, "depth").get<int>()))
      out.push_back(to_json(c));
    return ok_result({{"count", out.size()}, {"sets", out}});
  }
  if (name == "tilde") {
    json out = json::array();
    for (const auto& c : tilde_truncated(clopen_from_json(get(p, "v")),
                                         get(p, "depth").get<int>()))
      out.push_back(to_json(c));
    return ok_result(out);
  }
  if (name == "hereditary") {
    std::vector<Clopen> fam;
    for (const auto& c : get(p, "family")) fam.push_back(clopen_from_json(c));
    const int d = get(p, "depth").get<int>();
    const bool carac = p.contains("carac") && p.at("carac").get<bool>();
    return ok_result(carac ? carac_c_check(fam, d)
                           : is_hereditary_sublattice(fam, d));
  }
  if (name == "fell") {
    const std::string kind = get(p, "kind").get<std::string>();
    if (kind != "V_minus" && kind != "V_plus")
      throw MalformedQueryError("kind must be V_minus or V_plus");
    return ok_result(fell_membership(
        clopen_from_json(get(p, "k")),
        kind == "V_minus" ? FellKind::v_minus : FellKind::v_plus,
        clopen_from_json(get(p, "v"))));
  }
  if (name == "pm-compose")
    return ok_result(to_json(pm_compose(prefix_map_from_json(get(p, "f")),
                                        prefix_map_from_json(get(p, "g")))));
  if (name == "pm-invert")
    return ok_result(to_json(pm_invert(prefix_map_from_json(get(p, "f")))));
  if (name == "pm-image")
    return ok_result(to_json(image_clopen(prefix_map_from_json(get(p, "h")),
                                          clopen_from_json(get(p, "u")))));
  if (name == "pm-apply") {
    const auto r = apply_point(prefix_map_from_json(get(p, "h")),
                               get(p, "prefix").get<std::string>());
    json doc;
    switch (r.status) {
      case ApplyResult::determined:
        doc = {{"status", "determined"}, {"image_prefix", r.image_prefix}};
        break;
      case ApplyResult::needs_more_input:
        doc = {{"status", "needs_more_input"}};
        break;
      case ApplyResult::outside_domain:
        doc = {{"status", "outside_domain"}};
        break;
    }
    return ok_result(doc);
  }
  if (name == "hco")
    return ok_result(hco_membership(prefix_map_from_json(get(p, "h")),
                                    hco_query(get(p, "query"))));
  if (name == "encode")
    return ok_result(to_json(encode(prefix_map_from_json(get(p, "h")),
                                    get(p, "depth").get<int>())));
  if (name == "decode") {
    try {
      return ok_result(to_json(decode(tlm_from_json(get(p, "m")))));
    } catch (const InconsistencyError& e) {
      return refuted_result(nullptr,
                            {{"key", e.witness}, {"reason", e.what()}});
    }
  }
  if (name == "phi-check") {
    const auto f = prefix_map_from_json(get(p, "f"));
    const auto g = prefix_map_from_json(get(p, "g"));
    const int d = get(p, "depth").get<int>();
    if (phi_homomorphism_check(f, g, d)) return ok_result(true);
    return refuted_result(false, {{"f", to_json(f)}, {"g", to_json(g)}});
  }
  if (name == "nbhd-identities") {
    std::vector<PrefixMap> sample;
    for (const auto& h : get(p, "sample"))
      sample.push_back(prefix_map_from_json(h));
    const auto o = clopen_from_json(get(p, "o"));
    const auto q = clopen_from_json(get(p, "p"));
    const int d = get(p, "depth").get<int>();
    if (neighborhood_correspondence_check(o, q, sample, d))
      return ok_result(true);
    return refuted_result(false, {{"o", to_json(o)}, {"p", to_json(q)}});
  }
  if (name == "census") {
    const int d = get(p, "depth").get<int>();
    if (d < 0 || d > 2)
      throw ResourceLimitError("exhaustive census limited to depth 2");
    const auto base = enumerate_base(d);
    std::size_t count = 0;
    for (std::uint64_t fam_mask = 0; fam_mask < (1ull << base.size());
         ++fam_mask) {
      std::vector<Clopen> fam;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (fam_mask >> i & 1) fam.push_back(base[i]);
      if (is_hereditary_sublattice(fam, d)) ++count;
    }
    return ok_result({{"count", count}});
  }
  throw cantorlab::MalformedQueryError("unknown command " + name);
}

json read_payload(const std::string& in_path) {
  std::string text;
  if (in_path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(in_path);
    if (!f)
      throw cantorlab::MalformedQueryError("cannot open " + in_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  if (text.empty()) text = "{}";
  return json::parse(text);
}

void write_doc(const std::string& out_path, const json& doc) {
  if (out_path.empty()) {
    std::cout << doc.dump() << "\n";
  } else {
    std::ofstream f(out_path);
    f << doc.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cantorlab: partial symmetries of Cantor space, Munn semigroups and "
      "the clopen-lattice correspondence"};
  app.require_subcommand(1);

  std::string in_path, out_path;
  std::uint64_t seed = 20240915;
  std::optional<int> depth;
  std::optional<std::uint32_t> window;
  std::optional<bool> strict_inverse;

  static const char* kCommands[] = {
      "compose", "invert", "idempotent", "nbhd", "converge", "metric",
      "wagner-preston", "ideal", "compat", "munn", "munn-member",
      "clopen-op", "base", "tilde", "hereditary", "fell", "pm-compose",
      "pm-invert", "pm-image", "pm-apply", "hco", "encode", "decode",
      "phi-check", "nbhd-identities", "census"};
  for (const char* name : kCommands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--in", in_path, "read the JSON payload from a file");
    sub->add_option("--out", out_path, "write the result document to a file");
    sub->add_option("--depth", depth, "override the payload depth");
    sub->add_option("--window", window, "override the payload window bound");
    sub->add_option("--strict-inverse", strict_inverse,
                    "override the payload strict_inverse flag");
  }
  auto* verify = app.add_subcommand(
      "verify", "run the full acceptance suite, one line per criterion");
  verify->add_option("--seed", seed, "seed for all sampled inputs");

  CLI11_PARSE(app, argc, argv);
  const std::string name = app.get_subcommands().front()->get_name();

  if (name == "verify") {
    bool all_ok = true;
    for (const auto& r : cantorlab::run_acceptance(seed)) {
      std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id
                << ": " << r.name;
      if (!r.passed) std::cout << " -- " << r.detail;
      std::cout << "\n";
      all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : 1;
  }

  try {
    json payload = read_payload(in_path);
    if (depth) payload["depth"] = *depth;
    if (window) payload["window_bound"] = *window;
    if (strict_inverse) payload["strict_inverse"] = *strict_inverse;
    const Outcome outcome = dispatch(name, payload);
    write_doc(out_path, outcome.doc);
    return outcome.exit_code;
  } catch (const cantorlab::MalformedQueryError& e) {
    write_doc(out_path, {{"ok", false}, {"error", e.what()}});
    return 2;
  } catch (const cantorlab::ResourceLimitError& e) {
    write_doc(out_path, {{"ok", false}, {"error", e.what()}});
    return 2;
  } catch (const cantorlab::InternalConsistencyError& e) {
    write_doc(out_path, {{"ok", false}, {"error", e.what()}});
    return 2;
  } catch (const json::exception& e) {
    write_doc(out_path, {{"ok", false}, {"error", e.what()}});
    return 2;
  }
}
