#include "tgames/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/sha.h>

#include "tgames/errors.hpp"
#include "tgames/generate.hpp"
#include "tgames/io.hpp"
#include "tgames/monotone.hpp"
#include "tgames/oracle.hpp"
#include "tgames/reductions.hpp"
#include "tgames/static_solvers.hpp"
#include "tgames/validate.hpp"

namespace tgames::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool threshold_only(const TemporalGame& g) {
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v))
      if (!e.avail.is<TimeSet::Always>() && !e.avail.is<TimeSet::Never>() && !e.avail.is<TimeSet::Threshold>())
        return false;
  return true;
}

std::size_t monotone_step_bound(const TemporalGame& g) { return g.size() + change_points(g).size(); }

SolveOutcome solve_parity(const TemporalGame& g, const IterationLimits& limits, bool naive) {
  SolveOutcome r;
  const auto& hint = g.class_hint();
  if (std::holds_alternative<PeriodicClass>(hint) || std::holds_alternative<StaticClass>(hint)) {
    TemporalGame periodic = g;
    if (std::holds_alternative<StaticClass>(hint)) periodic.set_class_hint(PeriodicClass{1});
    auto res = solve_periodic_parity(periodic, g.initial(), limits, &r.stats);
    r.region = res.region_by_phase.at(0);
    r.certificate = std::move(res.certificate);
    r.method = "periodic-parity";
  } else if (std::holds_alternative<UltimatelyPeriodicClass>(hint)) {
    if (threshold_only(g) && !naive && (is_declining(g) || is_improving(g))) {
      r.region = solve_declining_parity(g, limits, &r.stats);
      r.method = "declining-parity";
      r.step_bound = monotone_step_bound(g);
    } else if (threshold_only(g)) {
      r.region = solve_ultimately_static(g, limits, &r.stats);
      r.method = "ultimately-static";
    } else {
      r.region = solve_ultimately_periodic_parity(g, g.initial(), limits, &r.stats).region;
      r.method = "ultimately-periodic-parity";
    }
  } else {
    throw UnsupportedInstance("parity objectives on finite-horizon games are not supported");
  }
  return r;
}

SolveOutcome solve_reach(const TemporalGame& g, const IterationLimits& limits, bool naive) {
  SolveOutcome r;
  const auto& hint = g.class_hint();
  if (std::holds_alternative<FiniteHorizonClass>(hint)) {
    r.region = solve_temporal_reachability(g, g.targets(), limits, &r.stats);
    r.method = "finite-reachability";
  } else if (std::holds_alternative<StaticClass>(hint)) {
    r.region = attractor(snapshot(g, 0), Player::One, g.targets()).region1;
    r.method = "attractor";
  } else if (threshold_only(g) && !naive && is_declining(g)) {
    r.region = solve_declining_reachability(g, limits, &r.stats);
    r.method = "declining-reachability";
    r.step_bound = monotone_step_bound(g);
  } else if (threshold_only(g) && !naive && is_improving(g)) {
    r.region = solve_improving_reachability(g, limits, &r.stats);
    r.method = "improving-reachability";
    r.step_bound = monotone_step_bound(g);
  } else if (threshold_only(g)) {
    r.region = solve_ultimately_static(g, limits, &r.stats);
    r.method = "ultimately-static";
  } else {
    r.region = solve_periodic_reachability(g, limits, &r.stats);
    r.method = "periodic-reachability";
  }
  return r;
}

SolveOutcome solve_punctual_game(const TemporalGame& g, const PunctualObjective& obj, const IterationLimits& limits) {
  SolveOutcome r;
  if (is_static(g)) {
    r.region = solve_punctual(snapshot(g, 0), g.targets(), obj.target_time, limits, &r.stats);
    r.method = "punctual";
  } else {
    r.region = solve_punctual_temporal(g, g.targets(), obj.target_time, limits, &r.stats);
    r.method = "punctual-temporal";
  }
  return r;
}

json names(const TemporalGame& g, const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s.members()) out.push_back(g.name(v));
  return out;
}

/// Runs `body`, mapping library failures to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const CapExceeded& e) {
    err << "oracle cap exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  }
}

TemporalGame load(const std::string& path) { return parse_game(read_file(path)); }

fs::path sibling(const std::string& input, const std::string& suffix) {
  const fs::path p(input);
  return p.parent_path() / (p.stem().string() + suffix);
}

struct Options {
  std::string path;
  std::string second;
  std::string kind;
  std::string out;
  std::string report = "text";
  std::uint64_t budget = kDefaultIterationBudget;
  std::uint64_t expansion_budget = kDefaultExpansionBudget;
  bool naive = false;
  std::string target;
  std::string time;
  std::uint64_t seed = 0;
  GenerateOptions gen;
};

IterationLimits limits_of(const Options& o) {
  IterationLimits l;
  l.budget = o.budget;
  l.expansion_budget = o.expansion_budget;
  return l;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TemporalGame g = load(o.path);
    const auto violations = validate(g);
    for (const auto& v : violations) out << v.to_string() << "\n";
    if (violations.empty())
      for (const auto& w : deadlock_warnings(g)) err << "warning: " << w.to_string(g) << "\n";
    return violations.empty() ? kOk : kNegative;
  });
}

int cmd_solve(const std::vector<std::string>& args, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto started = std::chrono::steady_clock::now();
    const TemporalGame g = load(o.path);
    if (const auto violations = validate(g); !violations.empty()) {
      for (const auto& v : violations) err << v.to_string() << "\n";
      return static_cast<int>(kNegative);
    }
    SolveOutcome r = solve_game(g, limits_of(o), o.naive);
    std::optional<fs::path> cert_path;
    if (r.certificate && r.winner == Player::One) {
      cert_path = o.out.empty() ? sibling(o.path, ".cert.json") : fs::path(o.out);
      write_file(*cert_path, serialise_certificate(*r.certificate, g));
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    const auto digest = sha256_hex(serialise_game(g));

    if (o.report == "json") {
      json result = {{"winner", to_int(r.winner)}, {"region", names(g, r.region)}, {"method", r.method},
                     {"initial", g.name(g.initial())}};
      result["certificate"] = cert_path ? json(cert_path->string()) : json(nullptr);
      json stats = {{"iterations", r.stats.iterations},
                    {"backwardSteps", r.stats.backward_steps},
                    {"expansionVertices", r.stats.expansion_vertices},
                    {"wallTimeMs", ms}};
      if (r.step_bound) stats["stepBound"] = *r.step_bound;
      const json report = {{"command", args}, {"digest", "sha256:" + digest}, {"result", result}, {"statistics", stats}};
      out << report.dump(2) << "\n";
    } else {
      out << "winner: player " << to_int(r.winner) << " from " << g.name(g.initial()) << "\n";
      out << "method: " << r.method << "\n";
      out << "region:";
      for (Vertex v : r.region.members()) out << " " << g.name(v);
      out << "\n";
      if (cert_path) out << "certificate: " << cert_path->string() << "\n";
      out << "iterations: " << r.stats.iterations << "\n";
      out << "backward steps: " << r.stats.backward_steps;
      if (r.step_bound) out << " (bound " << *r.step_bound << ")";
      out << "\n";
      out << "expansion vertices: " << r.stats.expansion_vertices << "\n";
      out << "wall time ms: " << std::fixed << std::setprecision(3) << ms << "\n";
      out << "digest: sha256:" << digest << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TemporalGame g = load(o.path);
    const Certificate cert = parse_certificate(read_file(o.second), g);
    const auto check = verify_certificate(g, cert, cert.initial, limits_of(o));
    if (check.ok) {
      out << "certificate valid\n";
      return static_cast<int>(kOk);
    }
    out << "certificate invalid: " << check.diagnostic << "\n";
    return static_cast<int>(kNegative);
  });
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TemporalGame g = load(o.path);
    auto gadget_args = [&]() -> std::pair<Vertex, Time> {
      const auto* p = std::get_if<PunctualObjective>(&g.objective());
      Time t;
      if (!o.time.empty())
        t = parse_time(o.time);
      else if (p)
        t = p->target_time;
      else
        throw UnsupportedInstance("no target time: pass --time or use a punctual objective");
      if (!o.target.empty()) {
        const auto v = g.find(o.target);
        if (!v) throw ParseError("unknown vertex \"" + o.target + "\"");
        return {*v, t};
      }
      if (!p || p->targets.size() != 1)
        throw UnsupportedInstance("the gadget needs a single target: pass --target");
      return {p->targets.front(), t};
    };

    ReductionOutput r;
    if (o.kind == "exists-to-punctual") {
      r = reduce_exists_to_punctual(g);
    } else if (o.kind == "punctual-to-temporal") {
      r = reduce_punctual_to_temporal(g);
    } else if (o.kind == "punctual-to-decreasing") {
      const auto [v, t] = gadget_args();
      r = reduce_punctual_to_decreasing(g, v, t);
    } else if (o.kind == "punctual-to-increasing") {
      const auto [v, t] = gadget_args();
      r = reduce_punctual_to_increasing(g, v, t);
    } else if (o.kind == "punctual-to-periodically-declining") {
      const auto [v, t] = gadget_args();
      r = reduce_punctual_to_periodically_declining(g, v, t);
    } else if (o.kind == "dualize") {
      r = dualize(g);
    } else {
      throw Error("unknown reduction kind \"" + o.kind + "\"");
    }
    const fs::path target = o.out.empty() ? sibling(o.path, "." + o.kind + ".json") : fs::path(o.out);
    write_file(target, serialise_game(r.game));
    const fs::path map = target.parent_path() / (target.stem().string() + ".map.json");
    write_file(map, serialise_reduction_map(g, r));
    out << "wrote " << target.string() << "\n" << "wrote " << map.string() << "\n";
    out << "claim: " << r.claim << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto profile = parse_profile(o.kind);
    if (!profile) throw Error("unknown profile \"" + o.kind + "\"");
    const auto text = serialise_game(generate(*profile, o.seed, o.gen));
    if (o.out.empty())
      out << text;
    else
      write_file(o.out, text);
    return static_cast<int>(kOk);
  });
}

}  // namespace

SolveOutcome solve_game(const TemporalGame& g, const IterationLimits& limits, bool naive) {
  SolveOutcome r = std::visit(
      [&](const auto& obj) {
        using O = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<O, PunctualObjective>)
          return solve_punctual_game(g, obj, limits);
        else if constexpr (std::is_same_v<O, ReachObjective>)
          return solve_reach(g, limits, naive);
        else
          return solve_parity(g, limits, naive);
      },
      g.objective());
  r.winner = r.region.contains(g.initial()) ? Player::One : Player::Two;
  return r;
}

int oracle_check(const TemporalGame& g, const IterationLimits& limits, std::ostream& out, std::ostream& err,
                 const Solver& solver) {
  return guarded(err, [&] {
    const OracleResult expected = oracle_solve(g, limits);
    const SolveOutcome actual = solver ? solver(g, limits) : solve_game(g, limits);
    if (actual.region == expected.region && actual.winner == expected.winner) {
      out << "agree: player " << to_int(actual.winner) << " wins from " << g.name(g.initial()) << "\n";
      return static_cast<int>(kOk);
    }
    auto dump = [&](const char* who, Player w, const VertexSet& region) {
      out << who << ": winner player " << to_int(w) << ", region {";
      bool first = true;
      for (Vertex v : region.members()) {
        out << (first ? "" : ", ") << g.name(v);
        first = false;
      }
      out << "}\n";
    };
    out << "DISAGREE\n";
    dump("solver", actual.winner, actual.region);
    dump("oracle", expected.winner, expected.region);
    return static_cast<int>(kNegative);
  });
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  std::ostringstream os;
  for (unsigned char b : digest) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(b);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solvers for games on temporal graphs", "tgames"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance against the data-model rules");
  validate_cmd->add_option("game", o.path)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance from its initial vertex");
  solve_cmd->add_option("game", o.path)->required();
  solve_cmd->add_option("--budget", o.budget, "Iteration budget")->capture_default_str();
  solve_cmd->add_option("--expansion-budget", o.expansion_budget, "Expansion vertex budget")->capture_default_str();
  solve_cmd->add_option("--report", o.report)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  solve_cmd->add_option("--out", o.out, "Certificate path (default: beside the input)");
  solve_cmd->add_flag("--naive", o.naive, "Solve monotone games layer by layer");

  auto* verify_cmd = app.add_subcommand("verify-cert", "Verify a certificate for Player 1");
  verify_cmd->add_option("game", o.path)->required();
  verify_cmd->add_option("certificate", o.second)->required();
  verify_cmd->add_option("--budget", o.budget, "Iteration budget")->capture_default_str();

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply an instance transformation");
  reduce_cmd->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"exists-to-punctual", "punctual-to-temporal", "punctual-to-decreasing",
                             "punctual-to-increasing", "punctual-to-periodically-declining", "dualize"}));
  reduce_cmd->add_option("game", o.path)->required();
  reduce_cmd->add_option("--target", o.target, "Gadget target vertex");
  reduce_cmd->add_option("--time", o.time, "Gadget target time");
  reduce_cmd->add_option("--out", o.out, "Output path (default: beside the input)");

  auto* generate_cmd = app.add_subcommand("generate", "Generate a seeded random instance");
  generate_cmd->add_option("profile", o.kind)->required()->check(CLI::IsMember(profile_names()));
  generate_cmd->add_option("--seed", o.seed)->capture_default_str();
  generate_cmd->add_option("--vertices", o.gen.vertices)->capture_default_str();
  generate_cmd->add_option("--degree", o.gen.max_out_degree)->capture_default_str();
  generate_cmd->add_option("--time", o.gen.max_time, "Maximal target time or horizon")->capture_default_str();
  generate_cmd->add_option("--period", o.gen.period)->capture_default_str();
  generate_cmd->add_option("--colours", o.gen.colours)->capture_default_str();
  generate_cmd->add_option("--bound", o.gen.max_bound, "Maximal threshold bound")->capture_default_str();
  generate_cmd->add_flag("--parity", o.gen.parity, "Monotone profiles: parity objective");
  generate_cmd->add_flag("--sink-target", o.gen.sink_target, "static-punctual: single Player 1 sink target");
  generate_cmd->add_option("--out", o.out, "Output path (default: standard output)");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the solver with the brute-force oracle");
  oracle_cmd->add_option("game", o.path)->required();
  oracle_cmd->add_option("--budget", o.budget, "Iteration budget")->capture_default_str();
  oracle_cmd->add_option("--expansion-budget", o.expansion_budget, "Expansion vertex budget")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  if (validate_cmd->parsed()) return cmd_validate(o, out, err);
  if (solve_cmd->parsed()) return cmd_solve(args, o, out, err);
  if (verify_cmd->parsed()) return cmd_verify(o, out, err);
  if (reduce_cmd->parsed()) return cmd_reduce(o, out, err);
  if (generate_cmd->parsed()) return cmd_generate(o, out, err);
  return guarded(err, [&] { return oracle_check(load(o.path), limits_of(o), out, err); });
}

}  // namespace tgames::cli
