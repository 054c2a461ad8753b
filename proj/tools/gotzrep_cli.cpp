#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gotzrep/chern.hpp"
#include "gotzrep/combinatorics.hpp"
#include "gotzrep/errors.hpp"
#include "gotzrep/io.hpp"
#include "gotzrep/lex.hpp"
#include "gotzrep/monomial.hpp"
#include "gotzrep/numpoly.hpp"
#include "gotzrep/resolution.hpp"
#include "gotzrep/theorems.hpp"

using namespace gotzrep;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  int samples = 3;
  bool text = false;
};

Globals globals;
bool any_violation = false;

// --text prints the same content as --json, flattened to "path: value" lines.
void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    if (!path.empty()) os << path << ": ";
    if (j.is_string()) os << j.get<std::string>();
    else os << j.dump();
    os << "\n";
  }
}

void emit(const Json& j) {
  if (globals.text) flatten(j, "", std::cout);
  else std::cout << j.dump() << "\n";
}

void emit(const CheckReport& r) {
  if (r.verdict == Verdict::violated) any_violation = true;
  emit(to_json(r));
}

Integer parse_integer(const std::string& text, const std::string& field) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) throw ParseError(field + ": not an integer \"" + text + "\"");
  return out;
}

NumPoly load_poly(const std::string& arg) { return poly_from_json(load_json_argument(arg)); }
MonomialSubmodule load_module(const std::string& arg) { return module_from_json(load_json_argument(arg)); }
GradedFreeModule load_shape(const std::string& arg) { return module_shape_from_json(load_json_argument(arg)); }

GasharovKind parse_kind(const std::string& s) {
  if (s == "macaulay") return GasharovKind::macaulay;
  if (s == "green") return GasharovKind::green;
  throw ParseError("--kind: expected macaulay or green, got \"" + s + "\"");
}

GotzmannMode parse_mode(const std::string& s) {
  if (s == "standard") return GotzmannMode::standard;
  if (s == "adjusted") return GotzmannMode::adjusted;
  throw ParseError("--mode: expected standard or adjusted, got \"" + s + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gotzmann representations, Hilbert functions and regularity of monomial modules"};
  app.require_subcommand(1);
  app.add_option("--seed", globals.seed, "seed for random hyperplane sections and sweeps")->capture_default_str();
  app.add_option("--samples", globals.samples, "hyperplane samples per generic section")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  auto* text_flag = app.add_flag("--text", globals.text, "plain-text output");
  app.add_flag("--json", "JSON output (default)")->excludes(text_flag);

  std::function<void()> action;

  // Integer combinatorics.
  std::string a_arg;
  long d_arg = 1;
  auto add_ad = [&](CLI::App* sub) {
    sub->add_option("A", a_arg, "nonnegative integer")->required();
    sub->add_option("D", d_arg, "index d >= 1")->required();
  };
  auto* mrep = app.add_subcommand("macaulay-rep", "d-th Macaulay representation of A");
  add_ad(mrep);
  mrep->callback([&] { action = [&] { emit(to_json(macaulay_rep(parse_integer(a_arg, "A"), d_arg))); }; });
  auto* mtr = app.add_subcommand("macaulay-transform", "A^<D>");
  add_ad(mtr);
  mtr->callback([&] { action = [&] { emit(to_json(macaulay_transform(parse_integer(a_arg, "A"), d_arg))); }; });
  auto* gtr = app.add_subcommand("green-transform", "A_<D>");
  add_ad(gtr);
  gtr->callback([&] { action = [&] { emit(to_json(green_transform(parse_integer(a_arg, "A"), d_arg))); }; });

  // Polynomials.
  std::string poly_arg, module_arg, shape_arg, hf_arg, gotz_arg, mode_arg = "adjusted", kind_arg = "macaulay";
  long rank_arg = 0, degree_arg = 0, n_arg = 1, p_arg = 0, horizon_arg = 4;

  auto* grep = app.add_subcommand("gotzmann-rep", "Gotzmann representation of a polynomial");
  grep->add_option("--poly", poly_arg, "polynomial JSON or file")->required();
  grep->callback([&] { action = [&] { emit(to_json(gotzmann_rep(load_poly(poly_arg)))); }; });

  auto* gnum = app.add_subcommand("gotzmann-number", "Gotzmann number of a polynomial");
  gnum->add_option("--poly", poly_arg, "polynomial JSON or file")->required();
  gnum->callback([&] {
    action = [&] { emit(Json(static_cast<std::uint64_t>(gotzmann_number(load_poly(poly_arg))))); };
  });

  auto* arep = app.add_subcommand("adjusted-rep", "rank-and-degree adjusted Gotzmann representation");
  arep->add_option("--poly", poly_arg)->required();
  arep->add_option("--module", module_arg, "module or module shape (n, degrees)")->required();
  arep->add_option("--rank", rank_arg)->required();
  arep->callback([&] {
    action = [&] {
      const auto f = load_shape(module_arg);
      emit(to_json(adjusted_gotzmann_rep(load_poly(poly_arg), f.n, f.degrees, rank_arg)));
    };
  });

  // Hilbert functions.
  auto* hilb = app.add_subcommand("hilbert", "Hilbert function, series, polynomial or stabilization degree");
  hilb->add_option("--module", module_arg)->required();
  std::vector<long> range;
  auto* o_fn = hilb->add_option("--function", range, "degree range D0 D1")->expected(2);
  auto* o_series = hilb->add_flag("--series");
  auto* o_poly = hilb->add_flag("--polynomial");
  auto* o_stab = hilb->add_flag("--stabilize");
  hilb->callback([&] {
    action = [&] {
      if (int(bool(*o_fn)) + bool(*o_series) + bool(*o_poly) + bool(*o_stab) != 1)
        throw ParseError("hilbert: give exactly one of --function, --series, --polynomial, --stabilize");
      const auto module = load_module(module_arg);
      if (o_fn->count()) {
        Json rows = Json::array();
        for (long d = range[0]; d <= range[1]; ++d) rows.push_back({d, to_json(hf_direct(module, d))});
        emit(Json{{"hilbert_function", rows}});
      } else if (o_series->count()) {
        emit(to_json(hilbert_series(module)));
      } else if (o_poly->count()) {
        const NumPoly p = hilbert_polynomial(module);
        Json out = to_json(p);
        out["text"] = p.to_string();
        emit(out);
      } else if (o_stab->count()) {
        emit(Json{{"stabilization_degree", stabilization_degree(module)}});
      }
    };
  });

  auto* sat = app.add_subcommand("saturate", "saturation of a submodule");
  sat->add_option("--module", module_arg)->required();
  sat->callback([&] { action = [&] { emit(to_json(saturate(load_module(module_arg)))); }; });

  auto* rk = app.add_subcommand("rank", "rank of F/N");
  rk->add_option("--module", module_arg)->required();
  rk->callback([&] { action = [&] { emit(Json(rank(load_module(module_arg)))); }; });

  auto* rho = app.add_subcommand("rho", "free part and remainder of H(F/N, d)");
  rho->add_option("--module", module_arg)->required();
  rho->add_option("--degree", degree_arg)->required();
  rho->callback([&] {
    action = [&] {
      const auto dec = adjusted_hf_decomposition(load_module(module_arg), degree_arg);
      emit(Json{{"free_part", to_json(dec.free_part)}, {"rho", to_json(dec.rho)}});
    };
  });

  // Lex constructions.
  auto* lexify_cmd = app.add_subcommand("lexify", "lex submodule with a given Hilbert function");
  lexify_cmd->add_option("--module-shape", shape_arg)->required();
  lexify_cmd->add_option("--hf", hf_arg, "{\"table\": [[d, H], ...], \"tail\": poly}")->required();
  lexify_cmd->callback([&] {
    action = [&] {
      emit(to_json(lexify(load_shape(shape_arg), hilbert_function_from_json(load_json_argument(hf_arg)))));
    };
  });

  auto* lexi = app.add_subcommand("lex-ideal", "saturated lex ideal of a Gotzmann representation");
  lexi->add_option("--gotzmann", gotz_arg)->required();
  lexi->add_option("--n", n_arg, "projective dimension")->required();
  lexi->callback([&] {
    action = [&] {
      if (n_arg < 0) throw ParseError("--n: must be nonnegative");
      emit(to_json(saturated_lex_ideal(gotzmann_from_json(load_json_argument(gotz_arg)), static_cast<int>(n_arg))));
    };
  });

  auto* lexm = app.add_subcommand("lex-module", "saturated lex submodule with Hilbert polynomial P");
  lexm->add_option("--poly", poly_arg)->required();
  lexm->add_option("--module-shape", shape_arg)->required();
  lexm->add_option("--rank", rank_arg)->required();
  lexm->callback([&] {
    action = [&] { emit(to_json(saturated_lex_module(load_poly(poly_arg), load_shape(shape_arg), rank_arg))); };
  });

  // Resolutions.
  bool submodule = false;
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of F/N (or N)");
  betti->add_option("--module", module_arg)->required();
  betti->add_flag("--submodule", submodule);
  betti->callback([&] {
    action = [&] {
      emit(to_json(koszul_betti(load_module(module_arg), submodule ? BettiOf::submodule : BettiOf::quotient)));
    };
  });

  auto* reg = app.add_subcommand("regularity", "Castelnuovo-Mumford regularity of F/N (or N)");
  reg->add_option("--module", module_arg)->required();
  reg->add_flag("--submodule", submodule);
  reg->callback([&] {
    action = [&] {
      emit(Json(regularity(load_module(module_arg), submodule ? BettiOf::submodule : BettiOf::quotient)));
    };
  });

  auto* chern_cmd = app.add_subcommand("chern", "c1, c2 from a Hilbert polynomial and the bound c2 <= c1^2");
  chern_cmd->add_option("--poly", poly_arg)->required();
  chern_cmd->add_option("--n", n_arg)->required();
  chern_cmd->add_option("--rank", rank_arg)->required();
  chern_cmd->callback([&] {
    action = [&] {
      const auto c = chern_from_hilbert(load_poly(poly_arg), n_arg, rank_arg);
      const Integer sq = c.c1 * c.c1;
      emit(Json{{"c1", to_json(c.c1)}, {"c2", to_json(c.c2)}, {"bound_holds", c.c2 <= sq}, {"sharp", c.c2 == sq}});
    };
  });

  auto* quot = app.add_subcommand("quot-dims", "Grassmannian embedding dimensions");
  quot->add_option("--poly", poly_arg)->required();
  quot->add_option("--module-shape", shape_arg)->required();
  quot->add_option("--rank", rank_arg)->required();
  quot->add_option("--mode", mode_arg, "standard or adjusted")->capture_default_str();
  quot->callback([&] {
    action = [&] {
      const auto f = load_shape(shape_arg);
      emit(to_json(grassmannian_embedding_dims(load_poly(poly_arg), f.n, f.degrees, rank_arg, parse_mode(mode_arg))));
    };
  });

  // Theorem checkers.
  auto* check = app.add_subcommand("check", "bound checkers; exit 1 on a violation");
  check->require_subcommand(1);

  auto* c_mac = check->add_subcommand("macaulay", "adjusted Macaulay bound at degree d");
  c_mac->add_option("--module", module_arg)->required();
  c_mac->add_option("--degree", degree_arg)->required();
  c_mac->callback([&] { action = [&] { emit(check_macaulay_adjusted(load_module(module_arg), degree_arg)); }; });

  auto* c_green = check->add_subcommand("green", "adjusted Green bound at degree d");
  c_green->add_option("--module", module_arg)->required();
  c_green->add_option("--degree", degree_arg)->required();
  c_green->callback([&] {
    action = [&] {
      emit(check_green_adjusted(load_module(module_arg), degree_arg, globals.seed, globals.samples));
    };
  });

  auto* c_pers = check->add_subcommand("persistence", "adjusted persistence from degree d");
  c_pers->add_option("--module", module_arg)->required();
  c_pers->add_option("--degree", degree_arg)->required();
  c_pers->add_option("--horizon", horizon_arg)->capture_default_str();
  c_pers->callback([&] {
    action = [&] { emit(check_persistence_adjusted(load_module(module_arg), degree_arg, horizon_arg)); };
  });

  auto* c_reg = check->add_subcommand("regularity", "adjusted Gotzmann regularity bound");
  c_reg->add_option("--module", module_arg)->required();
  c_reg->callback([&] { action = [&] { emit(check_gotzmann_regularity_adjusted(load_module(module_arg))); }; });

  auto* c_sharp = check->add_subcommand("sharpness", "regularity of the saturated lex module");
  c_sharp->add_option("--poly", poly_arg)->required();
  c_sharp->add_option("--module-shape", shape_arg)->required();
  c_sharp->add_option("--rank", rank_arg)->required();
  c_sharp->callback([&] {
    action = [&] { emit(check_sharpness(load_poly(poly_arg), load_shape(shape_arg), rank_arg)); };
  });

  auto* c_gas = check->add_subcommand("gasharov", "module Macaulay or Green bound");
  c_gas->add_option("--module", module_arg)->required();
  c_gas->add_option("--degree", degree_arg)->required();
  c_gas->add_option("--p", p_arg)->capture_default_str();
  c_gas->add_option("--kind", kind_arg, "macaulay or green")->capture_default_str();
  c_gas->callback([&] {
    action = [&] {
      emit(check_gasharov(load_module(module_arg), degree_arg, p_arg, parse_kind(kind_arg), globals.seed,
                          globals.samples));
    };
  });

  auto* c_chern = check->add_subcommand("chern", "c2 <= c1^2");
  c_chern->add_option("--poly", poly_arg)->required();
  c_chern->add_option("--module-shape", shape_arg, "generator degrees (all <= 0) and n")->required();
  c_chern->add_option("--rank", rank_arg)->required();
  c_chern->callback([&] {
    action = [&] {
      const auto f = load_shape(shape_arg);
      emit(check_chern_bound(load_poly(poly_arg), f.n, f.degrees, rank_arg));
    };
  });

  SweepOptions sweep;
  auto* c_sweep = check->add_subcommand("sweep", "every checker over a seeded random corpus");
  c_sweep->add_option("--instances", sweep.instances)->capture_default_str();
  c_sweep->add_option("--window", sweep.window)->capture_default_str();
  c_sweep->add_option("--max-p", sweep.max_p)->capture_default_str();
  c_sweep->add_option("--horizon", sweep.horizon)->capture_default_str();
  c_sweep->callback([&] {
    action = [&] {
      sweep.seed = globals.seed;
      sweep.samples = globals.samples;
      for (const auto& r : run_sweep(sweep)) emit(r);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return any_violation ? 1 : 0;
}
