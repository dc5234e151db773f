// Command-line front end: compute entropies, divergences, betting and
// prospect quantities, wealth-ratio reports, quantum-layer reports, and run
// the verification suites. Prints JSON (default) or CSV. Exit codes:
// 0 success, 1 input error, 2 failed verification suite.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "betinfo/betting.hpp"
#include "betinfo/divergences.hpp"
#include "betinfo/entropies.hpp"
#include "betinfo/numeric.hpp"
#include "betinfo/optimizer.hpp"
#include "betinfo/prob.hpp"
#include "betinfo/prospect.hpp"
#include "betinfo/quantum.hpp"
#include "betinfo/suites.hpp"
#include "betinfo/wealth_ratio.hpp"

namespace {

using nlohmann::json;
using namespace betinfo;

// ---------------------------------------------------------------------------
// Input parsing
// ---------------------------------------------------------------------------

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

double parse_order(const std::string& s, const std::string& flag) {
  if (s == "inf" || s == "+inf") return kPosInf;
  if (s == "-inf") return kNegInf;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) fail(flag + ": trailing characters in '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail(flag + ": expected a decimal number or inf/-inf, got '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(flag + ": value out of range: '" + s + "'");
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path + ": malformed JSON (" + e.what() + ")");
  }
}

std::vector<double> field_doubles(const json& j, const std::string& field,
                                  const std::string& path) {
  if (!j.contains(field)) fail(path + ": missing field '" + field + "'");
  if (!j[field].is_array()) fail(path + ": field '" + field + "' must be an array");
  std::vector<double> out;
  for (const auto& v : j[field]) {
    if (!v.is_number()) fail(path + ": field '" + field + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::size_t> field_shape(const json& j, const std::string& path,
                                     std::size_t want_rank) {
  if (!j.contains("shape")) fail(path + ": missing field 'shape'");
  std::vector<std::size_t> out;
  for (const auto& v : j["shape"]) out.push_back(v.get<std::size_t>());
  if (want_rank != 0 && out.size() != want_rank) {
    fail(path + ": field 'shape' must have " + std::to_string(want_rank) +
         " entries");
  }
  return out;
}

Pmf load_pmf(const std::string& path) {
  const json j = load_json(path);
  if (j.is_array()) {
    std::vector<double> w;
    for (const auto& v : j) w.push_back(v.get<double>());
    return make_pmf(std::move(w));
  }
  return make_pmf(field_doubles(j, "weights", path));
}

Joint2 load_joint2(const std::string& path) {
  const json j = load_json(path);
  const auto shape = field_shape(j, path, 2);
  return make_joint2(shape[0], shape[1], field_doubles(j, "weights", path));
}

Joint3 load_joint3(const std::string& path) {
  const json j = load_json(path);
  const auto shape = field_shape(j, path, 3);
  return make_joint3(shape[0], shape[1], shape[2],
                     field_doubles(j, "weights", path));
}

CondTable load_cond(const std::string& path) {
  const json j = load_json(path);
  const auto shape = field_shape(j, path, 2);
  return make_cond_table(shape[0], shape[1], field_doubles(j, "values", path));
}

CondTable3 load_cond3(const std::string& path) {
  const json j = load_json(path);
  const auto shape = field_shape(j, path, 3);
  return make_cond_table3(shape[0], shape[1], shape[2],
                          field_doubles(j, "values", path));
}

OddsTable load_odds(const std::string& path) {
  const json j = load_json(path);
  if (j.contains("shape")) {
    const auto shape = field_shape(j, path, 2);
    return make_odds(shape[0], shape[1], field_doubles(j, "values", path));
  }
  return make_odds(field_doubles(j, "values", path));
}

// A bet file holds either a bare PMF (unconditional bet) or a 2-D table.
Strategy load_strategy(const std::string& path) {
  const json j = load_json(path);
  if (j.contains("shape")) {
    const auto shape = field_shape(j, path, 2);
    return strategy_from_table(
        make_cond_table(shape[0], shape[1], field_doubles(j, "values", path)));
  }
  if (j.is_array()) {
    std::vector<double> w;
    for (const auto& v : j) w.push_back(v.get<double>());
    return strategy_from_pmf(make_pmf(std::move(w)));
  }
  return strategy_from_pmf(make_pmf(field_doubles(j, "weights", path)));
}

Cmat parse_matrix(const std::vector<double>& entries, std::size_t d,
                  const std::string& path) {
  if (entries.size() != 2 * d * d) {
    fail(path + ": matrix needs " + std::to_string(2 * d * d) +
         " interleaved real/imag entries, got " +
         std::to_string(entries.size()));
  }
  Cmat m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t base = 2 * (i * d + k);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          std::complex<double>(entries[base], entries[base + 1]);
    }
  }
  return m;
}

std::vector<Cmat> load_matrix_list(const json& j, const std::string& field,
                                   std::size_t d, const std::string& path) {
  if (!j.contains(field)) fail(path + ": missing field '" + field + "'");
  std::vector<Cmat> out;
  for (const auto& entry : j[field]) {
    std::vector<double> flat;
    for (const auto& v : entry) flat.push_back(v.get<double>());
    out.push_back(parse_matrix(flat, d, path));
  }
  return out;
}

QuantumEnsemble load_ensemble(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("dim")) fail(path + ": missing field 'dim'");
  const std::size_t d = j["dim"].get<std::size_t>();
  std::vector<DensityMatrix> states;
  for (const Cmat& m : load_matrix_list(j, "states", d, path)) {
    states.push_back(make_density(m));
  }
  return make_ensemble(std::move(states),
                       make_pmf(field_doubles(j, "prior", path)));
}

Povm load_povm(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("dim")) fail(path + ": missing field 'dim'");
  const std::size_t d = j["dim"].get<std::size_t>();
  return make_povm(load_matrix_list(j, "effects", d, path));
}

KrausChannel load_channel(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("dim")) fail(path + ": missing field 'dim'");
  const std::size_t d = j["dim"].get<std::size_t>();
  return make_channel(load_matrix_list(j, "kraus", d, path));
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

json cond_to_json(const CondTable& c) {
  json out;
  out["shape"] = {c.nrows(), c.ncols()};
  out["values"] = c.w;
  if (!c.undefined_col.empty()) {
    std::vector<int> undef;
    for (std::size_t i = 0; i < c.undefined_col.size(); ++i) {
      if (c.undefined_col[i]) undef.push_back(static_cast<int>(i));
    }
    out["undefined_cols"] = undef;
  }
  return out;
}

json effects_to_json(const Povm& m) {
  json out = json::array();
  for (const Cmat& e : m.effects) {
    std::vector<double> flat;
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
      for (Eigen::Index k = 0; k < e.cols(); ++k) {
        flat.push_back(e(i, k).real());
        flat.push_back(e(i, k).imag());
      }
    }
    out.push_back(flat);
  }
  return out;
}

void emit_csv(const json& j, std::ostream& os) {
  os << "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << it.key() << ",";
    if (it.value().is_string()) {
      os << it.value().get<std::string>();
    } else {
      os << it.value().dump();
    }
    os << "\n";
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "csv") {
    emit_csv(j, std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

double num_or(const std::optional<std::string>& s, const char* flag,
              double fallback) {
  return s ? parse_order(*s, flag) : fallback;
}

double num_req(const std::optional<std::string>& s, const char* flag) {
  if (!s) fail(std::string(flag) + " is required for this operation");
  return parse_order(*s, flag);
}

const std::string& file_req(const std::optional<std::string>& s,
                            const char* flag) {
  if (!s) fail(std::string(flag) + " is required for this operation");
  return *s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"betinfo: generalized-entropy betting calculator"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // Common option storage (string-typed so inf/-inf parse uniformly).
  std::optional<std::string> s_q, s_r, s_alpha, s_R, s_S, s_tol, s_scale;
  std::optional<std::string> f_pmf, f_ref, f_joint, f_odds, f_bet, f_bet2;
  std::optional<std::string> f_pc, f_qc, f_weights, f_pg, f_pyg;
  std::optional<std::string> f_ensemble, f_povm, f_channel;
  std::uint64_t seed = 20260822;
  std::size_t trials = 0, oracle_grid = 0, oracle_restarts = 0;
  std::size_t sphere = 512, random_povms = 64;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format)
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--q", s_q);
    sub->add_option("--r", s_r);
    sub->add_option("--alpha", s_alpha);
    sub->add_option("--risk-aversion", s_R);
    sub->add_option("--sensitivity", s_S);
    sub->add_option("--tol", s_tol);
    sub->add_option("--scale", s_scale);
    sub->add_option("--pmf", f_pmf);
    sub->add_option("--ref", f_ref);
    sub->add_option("--joint", f_joint);
    sub->add_option("--odds", f_odds);
    sub->add_option("--bet", f_bet);
    sub->add_option("--bet2", f_bet2);
    sub->add_option("--pc", f_pc);
    sub->add_option("--qc", f_qc);
    sub->add_option("--weights", f_weights);
    sub->add_option("--pg", f_pg);
    sub->add_option("--pyg", f_pyg);
    sub->add_option("--ensemble", f_ensemble);
    sub->add_option("--povm", f_povm);
    sub->add_option("--channel", f_channel);
    sub->add_option("--seed", seed);
    sub->add_option("--trials", trials);
    sub->add_option("--oracle-grid", oracle_grid);
    sub->add_option("--oracle-restarts", oracle_restarts);
    sub->add_option("--sphere", sphere);
    sub->add_option("--random-povms", random_povms);
  };

  std::string ent_kind = "shannon";
  CLI::App* c_entropy = app.add_subcommand("entropy", "entropy quantities");
  c_entropy->add_option("--kind", ent_kind)
      ->check(CLI::IsMember({"shannon", "renyi", "tsallis", "sharma-mittal",
                             "arimoto", "h1", "h2", "h4", "id-cond", "id-mi",
                             "chain-rule"}));
  add_common(c_entropy);

  std::string div_kind = "renyi";
  CLI::App* c_div = app.add_subcommand("divergence", "divergence quantities");
  c_div->add_option("--kind", div_kind)
      ->check(CLI::IsMember({"renyi", "sibson", "csiszar", "blp", "n1", "n2"}));
  add_common(c_div);

  std::string bet_op = "ice";
  std::string bet_game = "none";
  std::string bet_which = "none";
  CLI::App* c_bet = app.add_subcommand("bet", "betting quantities");
  c_bet->add_option("op", bet_op)
      ->check(CLI::IsMember({"ice", "optimal", "decompose", "ratio",
                             "fairness"}));
  c_bet->add_option("--game", bet_game)
      ->check(CLI::IsMember({"none", "gambler", "bookmaker", "double"}));
  c_bet->add_option("--which", bet_which)
      ->check(CLI::IsMember({"none", "gambler"}));
  add_common(c_bet);

  std::string pt_op = "ce";
  CLI::App* c_pt = app.add_subcommand("pt", "prospect-theory quantities");
  c_pt->add_option("op", pt_op)
      ->check(CLI::IsMember({"value", "ce", "optimal", "decompose",
                             "advantage"}));
  add_common(c_pt);

  std::string wr_op = "mi-identity";
  CLI::App* c_wr = app.add_subcommand("wealth-ratio", "wealth-ratio reports");
  c_wr->add_option("op", wr_op)
      ->check(CLI::IsMember({"strategies", "side-information", "renyi-prob",
                             "arimoto-prob", "mi-identity"}));
  c_wr->add_option("--game", bet_game)
      ->check(CLI::IsMember({"none", "gambler", "bookmaker", "double"}));
  add_common(c_wr);

  std::string qu_op = "qsb";
  CLI::App* c_qu = app.add_subcommand("quantum", "quantum state betting");
  c_qu->add_option("op", qu_op)
      ->check(CLI::IsMember({"conditional", "uninformative", "constant", "qsb",
                             "nqsb"}));
  add_common(c_qu);

  std::string suite_name;
  bool verify_all = false;
  CLI::App* c_verify = app.add_subcommand("verify", "verification suites");
  c_verify->add_option("--suite", suite_name);
  c_verify->add_flag("--all", verify_all);
  add_common(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  // BETINFO_THREADS caps oracle parallelism; evaluation here is
  // single-threaded, so any cap is trivially honored (validated only).
  if (const char* threads = std::getenv("BETINFO_THREADS")) {
    const long n = std::strtol(threads, nullptr, 10);
    if (n < 1) {
      std::cerr << "{\"error\": \"BETINFO_THREADS must be >= 1\"}\n";
      return 1;
    }
  }

  try {
    json out;

    if (c_entropy->parsed()) {
      if (ent_kind == "shannon") {
        out["value"] = shannon_entropy(load_pmf(file_req(f_pmf, "--pmf")));
      } else if (ent_kind == "renyi") {
        out["value"] = renyi_entropy(load_pmf(file_req(f_pmf, "--pmf")),
                                     num_req(s_q, "--q"));
      } else if (ent_kind == "tsallis") {
        out["value"] = tsallis_entropy(load_pmf(file_req(f_pmf, "--pmf")),
                                       num_req(s_q, "--q"));
      } else if (ent_kind == "sharma-mittal") {
        out["value"] = sharma_mittal_entropy(
            load_pmf(file_req(f_pmf, "--pmf")),
            OrderPair{num_req(s_q, "--q"), num_req(s_r, "--r")});
      } else if (ent_kind == "arimoto") {
        out["value"] = arimoto_cond_entropy(load_joint2(file_req(f_joint, "--joint")),
                                            num_req(s_q, "--q"));
      } else if (ent_kind == "h1" || ent_kind == "h2" || ent_kind == "h4") {
        const Joint2 j = load_joint2(file_req(f_joint, "--joint"));
        const double a = num_or(s_alpha, "--alpha",
                                num_req(s_q, "--q or --alpha"));
        out["value"] = ent_kind == "h1"  ? cond_entropy_h1(j, a)
                       : ent_kind == "h2" ? cond_entropy_h2(j, a)
                                          : cond_entropy_h4(j, a);
      } else if (ent_kind == "id-cond") {
        out["value"] = id_cond_entropy(
            load_joint2(file_req(f_joint, "--joint")),
            OrderPair{num_req(s_q, "--q"), num_req(s_r, "--r")});
      } else if (ent_kind == "id-mi") {
        out["value"] = id_mutual_information(
            load_joint2(file_req(f_joint, "--joint")),
            OrderPair{num_req(s_q, "--q"), num_req(s_r, "--r")});
      } else {  // chain-rule
        const ChainRuleReport rep = check_chain_rule(
            load_joint2(file_req(f_joint, "--joint")),
            OrderPair{num_req(s_q, "--q"), num_req(s_r, "--r")});
        out["lhs"] = rep.lhs;
        out["rhs"] = rep.rhs;
        out["holds"] = rep.holds;
      }
      out["kind"] = ent_kind;
    }

    if (c_div->parsed()) {
      const double a = num_req(s_alpha ? s_alpha : s_q, "--alpha");
      if (div_kind == "renyi") {
        out["value"] = renyi_divergence(load_pmf(file_req(f_pmf, "--pmf")),
                                        load_pmf(file_req(f_ref, "--ref")), a);
      } else if (div_kind == "n2") {
        out["value"] = n2_crd(load_cond3(file_req(f_pc, "--pc")),
                              load_cond3(file_req(f_qc, "--qc")),
                              load_pmf(file_req(f_pg, "--pg")),
                              load_cond(file_req(f_pyg, "--pyg")), a);
      } else {
        const CondTable pc = load_cond(file_req(f_pc, "--pc"));
        const CondTable qc = load_cond(file_req(f_qc, "--qc"));
        const Pmf pw = load_pmf(file_req(f_weights, "--weights"));
        out["value"] = div_kind == "sibson"    ? sibson_crd(pc, qc, pw, a)
                       : div_kind == "csiszar" ? csiszar_crd(pc, qc, pw, a)
                       : div_kind == "blp"     ? blp_crd(pc, qc, pw, a)
                                               : n1_crd(pc, qc, pw, a);
      }
      out["kind"] = div_kind;
    }

    if (c_bet->parsed()) {
      auto build_game = [&]() -> BettingGame {
        const OddsTable odds = load_odds(file_req(f_odds, "--odds"));
        if (bet_game == "none") {
          return make_game_none(load_pmf(file_req(f_pmf, "--pmf")), odds);
        }
        if (bet_game == "gambler") {
          return make_game_gambler(load_joint2(file_req(f_joint, "--joint")), odds);
        }
        if (bet_game == "bookmaker") {
          return make_game_bookmaker(load_joint2(file_req(f_joint, "--joint")),
                                     odds);
        }
        return make_game_double(load_joint3(file_req(f_joint, "--joint")), odds);
      };
      if (bet_op == "ice") {
        const BettingGame game = build_game();
        const Strategy s = load_strategy(file_req(f_bet, "--bet"));
        const double R = num_req(s_R, "--risk-aversion");
        out["ice"] = ice(game, s, R);
        out["log_ice"] = log_ice(game, s, R);
      } else if (bet_op == "optimal") {
        const BettingGame game = build_game();
        const double R = num_req(s_R, "--risk-aversion");
        if (bet_game == "double") {
          const DoubleOptimum o = optimal_bet_double(game, R);
          out["bet"] = cond_to_json(o.bet);
          out["h_g"] = o.h_g.w;
        } else if (bet_game == "bookmaker") {
          out["bet"] = cond_to_json(optimal_bet_bookmaker(game, R).bet);
        } else {
          fail("bet optimal supports --game bookmaker or double");
        }
      } else if (bet_op == "decompose") {
        const BettingGame game = build_game();
        const Strategy s = load_strategy(file_req(f_bet, "--bet"));
        const double R = num_req(s_R, "--risk-aversion");
        const DecompositionReport rep =
            bet_game == "double" ? decompose_double(game, s, R)
                                 : decompose_bookmaker(game, s, R);
        out["log_ice"] = rep.log_ice;
        out["div_term"] = rep.div_term;
        out["penalty_term"] = rep.penalty_term;
        out["residual"] =
            rep.log_ice - (rep.div_term - rep.penalty_term);
      } else if (bet_op == "ratio") {
        const OddsTable odds = load_odds(file_req(f_odds, "--odds"));
        const Joint2 j = load_joint2(file_req(f_joint, "--joint"));
        const double R = num_req(s_R, "--risk-aversion");
        const RatioReport rep = bet_which == "gambler"
                                    ? ratio_bookmaker_vs_gambler(odds, j, R)
                                    : ratio_bookmaker_vs_none(odds, j, R);
        out["log_ratio"] = rep.log_ratio;
        out["rhs"] = rep.rhs;
        out["exact_rhs"] = rep.exact_rhs;
        out["holds_nonneg"] = rep.holds_nonneg;
      } else {  // fairness
        const FairnessReport rep = fairness(load_odds(file_req(f_odds, "--odds")));
        const char* names[] = {"fair", "superfair", "subfair", "mixed"};
        out["class"] = names[static_cast<int>(rep.cls)];
        out["c"] = rep.c;
      }
      out["op"] = bet_op;
    }

    if (c_pt->parsed()) {
      const PtAgent agent{num_req(s_R, "--risk-aversion"),
                          num_req(s_S, "--sensitivity")};
      const bool with_si = f_joint.has_value();
      const auto odds_req = [&] {
        return load_odds(file_req(f_odds, "--odds"));
      };
      if (pt_op == "value" || pt_op == "ce") {
        const Strategy s = load_strategy(file_req(f_bet, "--bet"));
        if (with_si) {
          const Joint2 j = load_joint2(*f_joint);
          out["value"] = pt_op == "value" ? pt_value(j, odds_req(), s, agent)
                                          : pt_ce(j, odds_req(), s, agent);
        } else {
          const Pmf p = load_pmf(file_req(f_pmf, "--pmf"));
          out["value"] = pt_op == "value" ? pt_value(p, odds_req(), s, agent)
                                          : pt_ce(p, odds_req(), s, agent);
        }
      } else if (pt_op == "optimal") {
        if (with_si) {
          const PtDoubleOptimum o =
              pt_optimal_bet_gambler(load_joint2(*f_joint), odds_req(), agent);
          out["bet"] = cond_to_json(o.bet);
          out["h_g"] = o.h_g.w;
        } else {
          out["bet"] =
              pt_optimal_bet_nosi(load_pmf(file_req(f_pmf, "--pmf")), odds_req(), agent)
                  .w;
        }
      } else if (pt_op == "decompose") {
        PtDecomposition rep;
        if (with_si) {
          const CondTable b = load_cond(file_req(f_bet, "--bet"));
          rep = decompose_pt_gambler(load_joint2(*f_joint), odds_req(), b, agent);
        } else {
          const Pmf b = load_pmf(file_req(f_bet, "--bet"));
          rep = decompose_pt_nosi(load_pmf(file_req(f_pmf, "--pmf")), odds_req(), b,
                                  agent);
        }
        out["lhs"] = rep.lhs;
        out["entropy_term"] = rep.entropy_term;
        out["fairness_term"] = rep.fairness_term;
        out["div_term"] = rep.div_term;
        out["penalty_term"] = rep.penalty_term;
        out["epsilon_limit"] = rep.epsilon_limit;
        out["residual"] = rep.lhs - (rep.entropy_term + rep.fairness_term +
                                     rep.div_term - rep.penalty_term);
      } else {  // advantage
        const double C = num_or(s_scale, "--scale", 1.0);
        const PtAdvantageReport rep =
            pt_advantage(load_joint2(file_req(f_joint, "--joint")), C, agent);
        out["log_ratio"] = rep.log_ratio;
        out["arimoto_mi"] = rep.arimoto_mi;
        out["h2_term"] = rep.h2_term;
        out["exact_log_ratio"] = rep.exact_log_ratio;
        out["epsilon_limit"] = rep.epsilon_limit;
      }
      out["op"] = pt_op;
    }

    if (c_wr->parsed()) {
      if (wr_op == "strategies") {
        const OddsTable odds = load_odds(file_req(f_odds, "--odds"));
        BettingGame game =
            bet_game == "none"
                ? make_game_none(load_pmf(file_req(f_pmf, "--pmf")), odds)
            : bet_game == "gambler"
                ? make_game_gambler(load_joint2(file_req(f_joint, "--joint")), odds)
            : bet_game == "bookmaker"
                ? make_game_bookmaker(load_joint2(file_req(f_joint, "--joint")),
                                      odds)
                : make_game_double(load_joint3(file_req(f_joint, "--joint")), odds);
        const AdvantageReport rep = advantage_strategies(
            game, load_strategy(file_req(f_bet, "--bet")),
            load_strategy(file_req(f_bet2, "--bet2")),
            num_req(s_R, "--risk-aversion"));
        out["ratio"] = rep.ratio;
        out["numerator"] = rep.numerator;
      } else if (wr_op == "side-information") {
        SimplexSearchConfig cfg;
        if (oracle_grid) cfg.grid_resolution = oracle_grid;
        if (oracle_restarts) cfg.restarts = oracle_restarts;
        cfg.seed = seed;
        out["ratio"] = advantage_side_information(
            load_odds(file_req(f_odds, "--odds")),
            load_joint2(file_req(f_joint, "--joint")),
            num_req(s_R, "--risk-aversion"), cfg);
      } else if (wr_op == "renyi-prob" || wr_op == "arimoto-prob") {
        SimplexSearchConfig cfg;
        if (oracle_grid) cfg.grid_resolution = oracle_grid;
        if (oracle_restarts) cfg.restarts = oracle_restarts;
        cfg.seed = seed;
        const double q = num_req(s_q, "--q");
        const double C = num_or(s_scale, "--scale", 1.0);
        const BettingProbReport rep =
            wr_op == "renyi-prob"
                ? renyi_prob_via_betting(load_pmf(file_req(f_pmf, "--pmf")), q, C,
                                         cfg)
                : arimoto_prob_via_betting(
                      load_joint2(file_req(f_joint, "--joint")), q, C, cfg);
        out["scaled_prob"] = rep.scaled_prob;
        out["closed_max"] = rep.closed_max;
        out["oracle_max"] = rep.oracle_max;
        out["agree"] = rep.agree;
      } else {  // mi-identity
        const IdMiOperationalReport rep = id_mi_operational(
            load_joint2(file_req(f_joint, "--joint")),
            OrderPair{num_req(s_q, "--q"), num_req(s_r, "--r")},
            num_or(s_scale, "--scale", 1.0));
        out["lhs_id_mi"] = rep.lhs_id_mi;
        out["rhs_utility_of_ratio"] = rep.rhs_utility_of_ratio;
        out["log_ratio"] = rep.log_ratio;
        out["agree"] = rep.agree;
      }
      out["op"] = wr_op;
    }

    if (c_qu->parsed()) {
      if (qu_op == "conditional") {
        const QuantumEnsemble e = load_ensemble(file_req(f_ensemble, "--ensemble"));
        const Povm m = load_povm(file_req(f_povm, "--povm"));
        if (f_channel) {
          const KrausChannel n = load_channel(*f_channel);
          out["table"] = cond_to_json(induced_conditional(e, m, &n));
        } else {
          out["table"] = cond_to_json(induced_conditional(e, m, nullptr));
        }
      } else if (qu_op == "uninformative") {
        const double tol = num_or(s_tol, "--tol", 1e-9);
        out["uninformative"] =
            is_uninformative(load_povm(file_req(f_povm, "--povm")), tol);
      } else if (qu_op == "constant") {
        const double tol = num_or(s_tol, "--tol", 1e-9);
        out["constant"] =
            is_constant(load_channel(file_req(f_channel, "--channel")), tol);
      } else if (qu_op == "qsb") {
        const QsbReport rep = qsb_identity(
            load_ensemble(file_req(f_ensemble, "--ensemble")),
            load_povm(file_req(f_povm, "--povm")),
            OrderPair{num_req(s_q, "--q"), num_req(s_r, "--r")},
            num_or(s_scale, "--scale", 1.0));
        out["id_mi"] = rep.id_mi;
        out["log_ratio_utility"] = rep.log_ratio_utility;
        out["agree"] = rep.agree;
      } else {  // nqsb
        const QuantumEnsemble e = load_ensemble(file_req(f_ensemble, "--ensemble"));
        const KrausChannel n = load_channel(file_req(f_channel, "--channel"));
        const OrderPair o{num_req(s_q, "--q"), num_req(s_r, "--r")};
        const double C = num_or(s_scale, "--scale", 1.0);
        NqsbReport rep;
        if (f_povm) {
          rep = nqsb_identity(e, load_povm(*f_povm), n, o, C);
        } else {
          QuantumSearchConfig qcfg;
          qcfg.sphere_points = sphere;
          qcfg.random_povms = random_povms;
          qcfg.seed = seed;
          rep = nqsb_identity_search(e, n, o, C, qcfg);
        }
        out["id_mi"] = rep.id_mi;
        out["log_ratio_utility"] = rep.log_ratio_utility;
        out["agree"] = rep.agree;
        out["search_lower_bound"] = rep.search_lower_bound;
        out["best_effects"] = effects_to_json(rep.best_measurement);
      }
      out["op"] = qu_op;
    }

    if (c_verify->parsed()) {
      SuiteOptions sopt;
      sopt.trials = trials;
      sopt.seed = seed;
      sopt.oracle_grid = oracle_grid;
      sopt.oracle_restarts = oracle_restarts;
      bool all_pass = true;
      if (verify_all || suite_name.empty()) {
        json suites = json::array();
        for (const SuiteResult& rep : run_all_criteria(sopt)) {
          json one;
          one["id"] = rep.id;
          one["suite"] = rep.name;
          one["pass"] = rep.pass;
          one["checks"] = rep.checks;
          one["failures"] = rep.failures;
          one["detail"] = rep.detail;
          suites.push_back(one);
          all_pass = all_pass && rep.pass;
        }
        out["suites"] = suites;
        out["pass"] = all_pass;
      } else {
        const SuiteResult rep = run_suite(suite_name, sopt);
        out["id"] = rep.id;
        out["suite"] = rep.name;
        out["pass"] = rep.pass;
        out["checks"] = rep.checks;
        out["failures"] = rep.failures;
        out["detail"] = rep.detail;
        all_pass = rep.pass;
      }
      emit(out, format);
      return all_pass ? 0 : 2;
    }

    emit(out, format);
    return 0;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
