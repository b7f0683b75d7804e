#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pyramidal/acceptance.hpp"
#include "pyramidal/classify.hpp"
#include "pyramidal/constructions.hpp"
#include "pyramidal/designs.hpp"
#include "pyramidal/json_io.hpp"
#include "pyramidal/number_theory.hpp"
#include "pyramidal/sweep.hpp"

namespace pyr::cli {

using io::json;

enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

namespace detail {

struct Emitter {
  std::ostream& out;
  std::optional<std::string> path;

  // Writes to the file when one was given, otherwise to stdout.
  void emit(const json& j) const {
    if (path && !path->empty())
      io::write_file(*path, j);
    else
      out << j.dump(2) << '\n';
  }
};

inline json check_to_json(const CheckResult& r) {
  return json{{"verdict", std::string(to_string(r.verdict))}, {"detail", r.detail}};
}

inline int verdict_exit(const CheckResult& r) { return r.verified() ? kOk : kVerificationFailed; }

}  // namespace detail

/// Parses argv, dispatches, and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-pyramidal groups, order oracles and Kirkman triple systems", "pyramidal"};
  app.require_subcommand(1);

  std::optional<std::string> out_path;
  std::string in_path, group_path;
  std::uint64_t m = 0, order = 0, n = 0, a = 0, l = 0, q = 0, v = 0;
  std::uint64_t amax = 0, nmax = 0, pmax = 1'000'000;
  bool ignore_resolution = false;

  auto* construct = app.add_subcommand("construct", "build a group and write it as group JSON");
  construct->require_subcommand(1);
  auto* c_dihedral = construct->add_subcommand("dihedral", "D_2m on m points");
  c_dihedral->add_option("--m", m, "odd m >= 3")->required();
  auto* c_cyclic = construct->add_subcommand("cyclic", "C_n on n points");
  c_cyclic->add_option("--n", n)->required();
  auto* c_cm2 = construct->add_subcommand("cm2", "C_m x| C_{2^a} for a prime m");
  c_cm2->add_option("--m", m)->required();
  c_cm2->add_option("--a", a)->required();
  auto* c_homo = construct->add_subcommand("homocyclic", "H_{l,n} x| C_{2^n - 1}");
  c_homo->add_option("--l", l)->required();
  c_homo->add_option("--n", n)->required();
  auto* c_affine = construct->add_subcommand("affine-sl2", "F_q^2 x| SL(2,q)");
  c_affine->add_option("--q", q)->required();
  auto* c_witness = construct->add_subcommand("witness", "an m-pyramidal group of order N");
  c_witness->add_option("--m", m)->required();
  c_witness->add_option("--order", order)->required();
  for (auto* sub : construct->get_subcommands({})) sub->add_option("--out", out_path, "output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "classify a group read from group JSON");
  analyze->add_option("--in", in_path)->required();

  auto* oracle = app.add_subcommand("oracle", "order-set oracle");
  oracle->require_subcommand(1);
  auto* o_member = oracle->add_subcommand("member", "is N the order of an m-pyramidal group");
  o_member->add_option("--m", m)->required();
  o_member->add_option("--order", order)->required();
  auto* o_witness = oracle->add_subcommand("witness", "write a witness group");
  o_witness->add_option("--m", m)->required();
  o_witness->add_option("--order", order)->required();
  o_witness->add_option("--out", out_path)->required();

  auto* ntc = app.add_subcommand("nt", "number-theory scans");
  ntc->require_subcommand(1);
  auto* n_mersenne = ntc->add_subcommand("mersenne", "solutions of p^k = a^n - 1");
  n_mersenne->add_option("--amax", amax)->required();
  n_mersenne->add_option("--nmax", nmax)->required();
  n_mersenne->add_option("--pmax", pmax, "largest prime scanned")->capture_default_str();
  auto* n_zsig = ntc->add_subcommand("zsigmondy", "primitive prime divisor of a^n - 1");
  n_zsig->add_option("--a", a)->required();
  n_zsig->add_option("--n", n)->required();

  auto* design = app.add_subcommand("design", "triple systems");
  design->require_subcommand(1);
  auto* d_validate = design->add_subcommand("validate", "check STS and, if present, the resolution");
  d_validate->add_option("--in", in_path)->required();
  auto* d_search = design->add_subcommand("search", "find a KTS(v), v <= 15");
  d_search->add_option("--v", v)->required();
  d_search->add_option("--out", out_path);
  auto* d_aut = design->add_subcommand("aut", "automorphism group");
  d_aut->add_option("--in", in_path)->required();
  d_aut->add_flag("--ignore-resolution", ignore_resolution, "blocks only");
  d_aut->add_option("--out", out_path);
  auto* d_pyr = design->add_subcommand("pyramidal", "search for an m-pyramidal action");
  d_pyr->add_option("--in", in_path)->required();
  d_pyr->add_option("--m", m)->required();
  d_pyr->add_flag("--ignore-resolution", ignore_resolution, "blocks only");
  d_pyr->add_option("--out", out_path, "write the group found");
  auto* d_prop1 = design->add_subcommand("prop1", "involution extraction on a pyramidal action");
  d_prop1->add_option("--in", in_path)->required();
  d_prop1->add_option("--group", group_path)->required();
  d_prop1->add_option("--m", m)->required();

  auto* sweep = app.add_subcommand("sweep", "exhaustive subgroup sweeps");
  sweep->require_subcommand(1);
  auto* s_s5 = sweep->add_subcommand("s5", "all subgroups of S_5");

  auto* verify = app.add_subcommand("verify", "acceptance suite");
  verify->require_subcommand(1);
  auto* v_all = verify->add_subcommand("all", "run every criterion");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const detail::Emitter emitter{out, out_path};
  try {
    if (construct->parsed()) {
      PermGroup g = PermGroup::trivial(1);
      if (c_dihedral->parsed()) {
        if (m % 2 == 0) throw Error(Errc::invalid_argument, "dihedral construction requires odd m");
        g = dihedral(m);
      } else if (c_cyclic->parsed()) {
        g = cyclic(n);
      } else if (c_cm2->parsed()) {
        g = cm_semidirect_2group(m, static_cast<unsigned>(a));
      } else if (c_homo->parsed()) {
        g = homocyclic_singer(static_cast<unsigned>(l), static_cast<unsigned>(n));
      } else if (c_affine->parsed()) {
        g = affine_sl2(q);
      } else {
        g = witness_group(m, order);
      }
      emitter.emit(io::group_to_json(g));
      return kOk;
    }
    if (analyze->parsed()) {
      const PermGroup g = io::group_from_json(io::read_file(in_path));
      out << io::report_to_json(classify_pyramidal(g)).dump(2) << '\n';
      return kOk;
    }
    if (o_member->parsed()) {
      out << io::membership_to_json(m, order, nt::in_x(m, order)).dump(2) << '\n';
      return kOk;
    }
    if (o_witness->parsed()) {
      const PermGroup g = witness_group(m, order);
      io::write_file(*out_path, io::group_to_json(g));
      out << json{{"m", m}, {"N", order}, {"order", g.order()}, {"degree", g.degree()}, {"out", *out_path}}.dump(2)
          << '\n';
      return kOk;
    }
    if (n_mersenne->parsed()) {
      json sols = json::array();
      for (const auto& w : nt::mersenne_solutions(amax, static_cast<unsigned>(nmax), pmax))
        sols.push_back({{"p", w.p}, {"k", w.k}, {"a", w.a}, {"n", w.n}});
      out << json{{"amax", amax}, {"nmax", nmax}, {"pmax", pmax}, {"solutions", std::move(sols)}}.dump(2) << '\n';
      return kOk;
    }
    if (n_zsig->parsed()) {
      const auto z = nt::zsigmondy(a, static_cast<unsigned>(n));
      json j{{"a", a}, {"n", n}, {"exception", z.is_exception()}};
      j["prime"] = z.prime ? json(*z.prime) : json(nullptr);
      if (z.is_exception())
        j["family"] = z.exception == nt::ZsigmondyException::a2_n6          ? "a=2,n=6"
                      : z.exception == nt::ZsigmondyException::n2_a_mersenne ? "n=2,a=2^s-1"
                                                                             : "unexpected";
      out << j.dump(2) << '\n';
      return z.exception == nt::ZsigmondyException::unexpected ? kVerificationFailed : kOk;
    }
    if (d_validate->parsed()) {
      const auto [t, r] = io::design_from_json(io::read_file(in_path));
      const CheckResult sts = validate_sts(t);
      json j{{"v", t.v}, {"blocks", t.blocks.size()}, {"sts", detail::check_to_json(sts)}};
      int code = detail::verdict_exit(sts);
      if (r) {
        const CheckResult kts = validate_kts(t, *r);
        j["kts"] = detail::check_to_json(kts);
        code = std::max(code, detail::verdict_exit(kts));
      }
      out << j.dump(2) << '\n';
      return code;
    }
    if (d_search->parsed()) {
      const auto found = search_kts(v);
      if (!found) {
        out << json{{"v", v}, {"found", false}}.dump(2) << '\n';
        return kVerificationFailed;
      }
      emitter.emit(io::design_to_json(found->first, found->second));
      return kOk;
    }
    if (d_aut->parsed()) {
      auto [t, r] = io::design_from_json(io::read_file(in_path));
      if (ignore_resolution) r.reset();
      const PermGroup g = automorphism_group(t, r);
      json j = io::group_to_json(g);
      j["order"] = g.order();
      emitter.emit(j);
      return kOk;
    }
    if (d_pyr->parsed()) {
      auto [t, r] = io::design_from_json(io::read_file(in_path));
      if (ignore_resolution) r.reset();
      const auto g = find_pyramidal_action(t, r, m);
      json j{{"v", t.v}, {"m", m}, {"found", g.has_value()}};
      if (g) {
        j["order"] = g->order();
        j["group"] = io::group_to_json(*g);
        if (out_path && !out_path->empty()) io::write_file(*out_path, io::group_to_json(*g));
      }
      out << j.dump(2) << '\n';
      return kOk;
    }
    if (d_prop1->parsed()) {
      const auto [t, r] = io::design_from_json(io::read_file(in_path));
      if (!r) throw Error(Errc::invalid_argument, "prop1 needs a design with a resolution");
      const PermGroup g = io::group_from_json(io::read_file(group_path));
      const auto p = verify_prop1(t, *r, g, m);
      json j = detail::check_to_json(p.result);
      json invols = json::array();
      for (const auto& x : p.involutions) invols.push_back(x.images());
      j["involutions"] = std::move(invols);
      out << j.dump(2) << '\n';
      return detail::verdict_exit(p.result);
    }
    if (s_s5->parsed()) {
      const auto s = sweep_subgroups(symmetric(5));
      json census = json::object();
      for (const auto& e : s.entries) {
        const std::string key = std::to_string(e.order);
        census[key] = census.value(key, 0) + 1;
      }
      out << json{{"subgroups", s.subgroups},
                  {"even_order", s.even_order},
                  {"pyramidal", s.pyramidal},
                  {"order_checks", s.order_checks},
                  {"sylow2_checks", s.quatpyr_checks},
                  {"dihedral_checks", s.dihedral_checks},
                  {"orders", census},
                  {"failures", s.failures},
                  {"passed", s.passed()}}
                 .dump(2)
          << '\n';
      return s.passed() ? kOk : kVerificationFailed;
    }
    if (v_all->parsed()) {
      json rows = json::array();
      bool all = true;
      for (const auto& c : acceptance::criteria()) {
        const auto r = acceptance::run_criterion(c);
        all = all && r.passed;
        err << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << r.seconds << " s)\n";
        rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      out << json{{"criteria", std::move(rows)}, {"passed", all}}.dump(2) << '\n';
      return all ? kOk : kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == Errc::internal ? kVerificationFailed : kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace pyr::cli
