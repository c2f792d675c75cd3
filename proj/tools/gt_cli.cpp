// Command-line front end for the graded surface-algebra engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gt/gt.hpp"

namespace {

using gt::Json;

struct Common {
  int g = 0;
  int n = 0;
  int degree = 0;
  std::string framing_file;
  std::string out_file;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c, bool with_framing = true) {
  cmd->add_option("--g", c.g, "genus")->required();
  cmd->add_option("--n", c.n, "number of weight-2 boundary generators")->required();
  cmd->add_option("--degree", c.degree, "truncation degree")->required();
  if (with_framing)
    cmd->add_option("--framing", c.framing_file, "framing JSON file (default: adapted)");
  cmd->add_option("--out", c.out_file, "output path (default: stdout)");
  cmd->add_option("--format", c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

gt::Signature sig_of(const Common& c) { return gt::Signature{c.g, c.n}; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gt::Error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

gt::Framing framing_of(const Common& c) {
  if (c.framing_file.empty()) return gt::Framing::adapted(sig_of(c));
  gt::Framing fr = gt::framing_from_json(read_json_file(c.framing_file));
  gt::require_same_sig(fr.sig(), sig_of(c), "framing file");
  return fr;
}

void check_degree_cap(const Common& c) {
  if (c.degree < 0) throw CLI::ValidationError("--degree must be nonnegative");
  if (const char* cap = std::getenv("GT_MAX_DEGREE")) {
    int m = std::atoi(cap);
    if (m > 0 && c.degree > m)
      throw CLI::ValidationError("--degree exceeds GT_MAX_DEGREE=" + std::string(cap));
  }
}

void emit(const Common& c, const Json& j, const std::string& text) {
  std::string payload = c.format == "text" ? text : j.dump(2) + "\n";
  if (c.out_file.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(c.out_file);
    if (!out) throw gt::Error("cannot write " + c.out_file);
    out << payload;
  }
}

std::string flag_text(const char* name, bool v) {
  return std::string(name) + ": " + (v ? "yes" : "no") + "\n";
}

// --- subcommand bodies ---

int run_bracket(const Common& c, const std::string& ea, const std::string& eb) {
  gt::Signature sig = sig_of(c);
  gt::CyclicSeries a = gt::parse_cyclic_expression(ea, sig);
  gt::CyclicSeries b = gt::parse_cyclic_expression(eb, sig);
  gt::CyclicSeries r = gt::goldman_bracket(a, b).truncated(c.degree);
  emit(c, gt::cyclic_series_json(r), gt::cyclic_series_text(r));
  return 0;
}

int run_cobracket(const Common& c, const std::string& ea) {
  gt::CyclicSeries a = gt::parse_cyclic_expression(ea, sig_of(c));
  gt::BiCyclicSeries r = gt::turaev_cobracket(a, framing_of(c)).truncated(c.degree);
  emit(c, gt::bicyclic_series_json(r), gt::bicyclic_series_text(r));
  return 0;
}

int run_sigma(const Common& c, const std::string& ea) {
  gt::CyclicSeries a = gt::parse_cyclic_expression(ea, sig_of(c));
  gt::TDer u = gt::sigma_hat(a).truncated(c.degree);
  Json j = gt::tangential_json(u);
  std::string text;
  for (int i = 1; i <= c.g; ++i) {
    text += "x" + std::to_string(i) + " ->\n" + gt::series_text(u.ximg[i - 1]);
    text += "y" + std::to_string(i) + " ->\n" + gt::series_text(u.yimg[i - 1]);
  }
  for (int k = 1; k <= c.n; ++k)
    text += "t" + std::to_string(k) + " =\n" + gt::series_text(u.tang[k - 1]);
  emit(c, j, text);
  return 0;
}

int run_es(const Common& c, const std::string& ea) {
  gt::CyclicSeries a = gt::parse_cyclic_expression(ea, sig_of(c));
  gt::CyclicSeries r = gt::es_part(a, framing_of(c)).truncated(c.degree);
  emit(c, gt::cyclic_series_json(r), gt::cyclic_series_text(r));
  return 0;
}

int run_center(const Common& c) {
  std::vector<gt::CyclicSeries> basis = gt::center_basis(sig_of(c), c.degree);
  Json arr = Json::array();
  std::string text;
  for (const auto& b : basis) {
    arr.push_back(gt::cyclic_series_json(b.truncated(c.degree)));
    text += gt::cyclic_series_text(b.truncated(c.degree)) + "\n";
  }
  Json j;
  gt::put_signature(j, sig_of(c));
  j["degree"] = c.degree;
  j["basis"] = std::move(arr);
  emit(c, j, text);
  return 0;
}

int run_axioms(const Common& c, unsigned seed, int samples) {
  gt::Signature sig = sig_of(c);
  gt::Framing fr = framing_of(c);
  std::vector<gt::CyclicSeries> basis;
  for (int d = 1; d <= c.degree; ++d)
    for (const gt::Word& w : gt::words_of_degree(sig, d)) {
      gt::CyclicSeries p(sig);
      p.add_term(gt::CyclicWord(w), gt::Rational(1));
      if (!p.is_zero()) basis.push_back(p);
    }
  std::mt19937_64 rng(seed);
  auto pick = [&rng, &basis]() -> const gt::CyclicSeries& {
    std::uniform_int_distribution<size_t> d(0, basis.size() - 1);
    return basis[d(rng)];
  };
  int bad_jacobi = 0, bad_cojacobi = 0, bad_compat = 0, bad_invol = 0;
  for (const auto& a : basis) {
    if (!gt::cojacobi_defect(a, fr).is_zero_through(c.degree)) ++bad_cojacobi;
    if (!gt::involutivity_defect(a, fr).truncated(c.degree).is_zero()) ++bad_invol;
  }
  for (int s = 0; s < samples; ++s) {
    if (!gt::jacobi_defect(pick(), pick(), pick()).truncated(c.degree).is_zero())
      ++bad_jacobi;
    if (!gt::compatibility_defect(pick(), pick(), fr).truncated(c.degree).is_zero())
      ++bad_compat;
  }
  Json j;
  gt::put_signature(j, sig);
  j["degree"] = c.degree;
  j["basis_words"] = basis.size();
  j["samples"] = samples;
  j["nonzero_defects"] = Json{{"jacobi", bad_jacobi},
                              {"cojacobi", bad_cojacobi},
                              {"compatibility", bad_compat},
                              {"involutivity", bad_invol}};
  bool ok = !bad_jacobi && !bad_cojacobi && !bad_compat && !bad_invol;
  j["all_zero"] = ok;
  std::string text = "jacobi nonzero: " + std::to_string(bad_jacobi) +
                     "\ncojacobi nonzero: " + std::to_string(bad_cojacobi) +
                     "\ncompatibility nonzero: " + std::to_string(bad_compat) +
                     "\ninvolutivity nonzero: " + std::to_string(bad_invol) + "\n" +
                     flag_text("all_zero", ok);
  emit(c, j, text);
  return ok ? 0 : 1;
}

gt::TDer read_tder(const Common& c, const std::string& path) {
  gt::TDer u = gt::tangential_from_json<gt::TDer>(read_json_file(path));
  gt::require_same_sig(u.sig, sig_of(c), "derivation file");
  return u;
}

int run_div(const Common& c, const std::string& tder_file) {
  gt::CyclicSeries r = gt::div_gr(read_tder(c, tder_file)).truncated(c.degree);
  emit(c, gt::cyclic_series_json(r), gt::cyclic_series_text(r));
  return 0;
}

int run_tdiv(const Common& c, const std::string& tder_file) {
  gt::BiCyclicSeries r = gt::tdiv(read_tder(c, tder_file)).truncated(c.degree);
  emit(c, gt::bicyclic_series_json(r), gt::bicyclic_series_text(r));
  return 0;
}

int run_gdiv(const Common& c, const std::string& tder_file) {
  gt::TDer u = read_tder(c, tder_file).truncated(c.degree);
  gt::BiCyclicSeries r = gt::gdiv_f(u, framing_of(c)).truncated(c.degree);
  emit(c, gt::bicyclic_series_json(r), gt::bicyclic_series_text(r));
  return 0;
}

int run_jcocycle(const Common& c, const std::string& taut_file) {
  gt::TAut F = gt::tangential_from_json<gt::TAut>(read_json_file(taut_file));
  gt::require_same_sig(F.sig, sig_of(c), "automorphism file");
  gt::Framing fr = framing_of(c);
  Json j;
  gt::put_signature(j, F.sig);
  j["degree"] = c.degree;
  j["double"] = gt::bicyclic_series_json(gt::double_jacobian(F, c.degree));
  j["scalar"] = gt::cyclic_series_json(gt::jacobian(F, c.degree));
  j["charge"] = gt::cyclic_series_json(gt::charge_cocycle(F, fr, c.degree));
  j["framed"] = gt::cyclic_series_json(gt::framed_jacobian(F, fr, c.degree));
  std::string text =
      "scalar:\n" + gt::cyclic_series_text(gt::jacobian(F, c.degree)) + "framed:\n" +
      gt::cyclic_series_text(gt::framed_jacobian(F, fr, c.degree));
  emit(c, j, text);
  return 0;
}

gt::Expansion expansion_of(const Common& c, const std::string& twist_file) {
  if (twist_file.empty()) return gt::Expansion::exponential(sig_of(c));
  gt::TAut F = gt::tangential_from_json<gt::TAut>(read_json_file(twist_file));
  gt::require_same_sig(F.sig, sig_of(c), "twist file");
  return gt::Expansion(F);
}

int run_expansion(const Common& c, const std::string& twist_file,
                  const std::vector<std::string>& words) {
  gt::Expansion E = expansion_of(c, twist_file);
  bool special = gt::is_special(E, c.degree);
  Json j;
  gt::put_signature(j, E.sig());
  j["degree"] = c.degree;
  j["special"] = special;
  Json evals = Json::array();
  std::string text = flag_text("special", special);
  for (const std::string& s : words) {
    gt::FreeGroupWord w = gt::parse_free_word(s);
    gt::Series v = E.eval(w, c.degree);
    evals.push_back(Json{{"word", gt::free_word_str(w)}, {"value", gt::series_json(v)}});
    text += gt::free_word_str(w) + " ->\n" + gt::series_text(v);
  }
  j["evaluations"] = std::move(evals);
  emit(c, j, text);
  return 0;
}

int run_loop_log(const Common& c, const std::string& twist_file, const std::string& ws) {
  gt::Expansion E = expansion_of(c, twist_file);
  gt::CyclicSeries r = gt::loop_log(gt::parse_free_word(ws), E, c.degree);
  emit(c, gt::cyclic_series_json(r), gt::cyclic_series_text(r));
  return 0;
}

int run_loop_bracket(const Common& c, const std::string& twist_file,
                     const std::string& vs, const std::string& ws) {
  gt::Expansion E = expansion_of(c, twist_file);
  gt::CyclicSeries r =
      gt::loop_bracket(gt::parse_free_word(vs), gt::parse_free_word(ws), E, c.degree);
  emit(c, gt::cyclic_series_json(r), gt::cyclic_series_text(r));
  return 0;
}

int run_loop_cobracket(const Common& c, const std::string& twist_file,
                       const std::string& ws) {
  gt::Expansion E = expansion_of(c, twist_file);
  gt::BiCyclicSeries r =
      gt::loop_cobracket(gt::parse_free_word(ws), E, framing_of(c), c.degree);
  emit(c, gt::bicyclic_series_json(r), gt::bicyclic_series_text(r));
  return 0;
}

int run_kv_solve(const Common& c, bool kvI_only, unsigned seed) {
  gt::KvProblem pb(framing_of(c), c.degree);
  gt::KvReport rep = gt::kv_solve(pb, kvI_only, seed);
  Json j = gt::kv_solution_json(pb, rep, kvI_only);
  std::string text = std::string("status: ") + gt::kv_status_name(rep.status) + "\n" +
                     flag_text("kvI_ok", rep.kvI_ok) + flag_text("kvII_ok", rep.kvII_ok);
  emit(c, j, text);
  return 0;
}

int run_kv_check(const std::string& solution_file, const std::string& format,
                 const std::string& out_file) {
  Json doc = read_json_file(solution_file);
  const Json& ph = doc.at("problem");
  bool kvI_only = ph.value("kvI_only", false);
  gt::KvProblem pb = gt::kv_problem_from_json(ph);
  gt::KvReport rep = gt::kv_report_from_json(doc);

  Json j;
  j["status"] = gt::kv_status_name(rep.status);
  bool ok = true;
  auto note = [&](const char* key, bool pass) {
    j[key] = pass;
    ok = ok && pass;
  };

  gt::Series d1 = gt::kvI_check(rep.F, pb.N + 2);
  note("kvI_defect_matches", d1 == rep.kvI_defect && d1.is_zero() == rep.kvI_ok);
  gt::CyclicSeries r2 =
      gt::reduce_by_span(gt::kvII_phi(rep.F, pb.fr, pb.N), pb.center);
  note("kvII_residue_matches", r2 == rep.kvII_residue && r2.is_zero() == rep.kvII_ok);
  switch (rep.status) {
    case gt::KvStatus::Solved:
      note("status_consistent", rep.kvI_ok && (kvI_only || rep.kvII_ok));
      break;
    case gt::KvStatus::Obstructed:
      note("certificate_verifies", gt::audit_obstruction(rep, pb));
      break;
    default:
      note("status_consistent", !rep.kvI_ok || (!kvI_only && !rep.kvII_ok));
      break;
  }
  if (doc.contains("duflo")) {
    gt::DufloData duf = gt::duflo_extract(rep.F, pb);
    note("duflo_matches", duf.h == rep.duflo.h && duf.hj == rep.duflo.hj &&
                              duf.ambiguous == rep.duflo.ambiguous &&
                              duf.matches_modulo_linear ==
                                  rep.duflo.matches_modulo_linear);
  }
  j["verified"] = ok;

  Common c;
  c.format = format;
  c.out_file = out_file;
  std::string text;
  for (const auto& [k, v] : j.items())
    if (v.is_boolean()) text += flag_text(k.c_str(), v.get<bool>());
  emit(c, j, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded Goldman-Turaev engine"};
  app.require_subcommand(1);

  Common c;
  std::string expr_a, expr_b, file_a, twist_file, solution_file;
  std::vector<std::string> word_args;
  unsigned seed = 0;
  int samples = 60;
  bool kvI_only = false;

  CLI::App* bracket = app.add_subcommand("bracket", "loop bracket of cyclic words");
  add_common(bracket, c, false);
  bracket->add_option("a", expr_a, "first cyclic expression")->required();
  bracket->add_option("b", expr_b, "second cyclic expression")->required();

  CLI::App* cobracket = app.add_subcommand("cobracket", "framed loop cobracket");
  add_common(cobracket, c);
  cobracket->add_option("a", expr_a, "cyclic expression")->required();

  CLI::App* sigma = app.add_subcommand("sigma", "derivation attached to a trace");
  add_common(sigma, c, false);
  sigma->add_option("a", expr_a, "cyclic expression")->required();

  CLI::App* es = app.add_subcommand("es", "unit-wedge part of the cobracket");
  add_common(es, c);
  es->add_option("a", expr_a, "cyclic expression")->required();

  CLI::App* axioms = app.add_subcommand("axioms", "bialgebra defect summary");
  add_common(axioms, c);
  axioms->add_option("--seed", seed, "sample seed");
  axioms->add_option("--samples", samples, "random samples per identity");

  CLI::App* center = app.add_subcommand("center", "center basis through a degree");
  add_common(center, c, false);

  CLI::App* divc = app.add_subcommand("div", "single divergence of a derivation");
  add_common(divc, c, false);
  divc->add_option("--tder", file_a, "derivation JSON file")->required();

  CLI::App* tdivc = app.add_subcommand("tdiv", "double divergence of a derivation");
  add_common(tdivc, c, false);
  tdivc->add_option("--tder", file_a, "derivation JSON file")->required();

  CLI::App* gdivc = app.add_subcommand("gdiv", "framed double divergence");
  add_common(gdivc, c);
  gdivc->add_option("--tder", file_a, "derivation JSON file")->required();

  CLI::App* jco = app.add_subcommand("jcocycle", "Jacobian cocycles of an automorphism");
  add_common(jco, c);
  jco->add_option("--taut", file_a, "automorphism JSON file")->required();

  CLI::App* expn = app.add_subcommand("expansion", "evaluate an expansion");
  add_common(expn, c, false);
  expn->add_option("--twist", twist_file, "twisting automorphism JSON file");
  expn->add_option("words", word_args, "free-group words");

  CLI::App* loop = app.add_subcommand("loop", "operations on free-group loops");
  loop->require_subcommand(1);
  CLI::App* llog = loop->add_subcommand("log", "homology class of a loop");
  add_common(llog, c, false);
  llog->add_option("--twist", twist_file, "twisting automorphism JSON file");
  llog->add_option("w", expr_a, "free-group word")->required();
  CLI::App* lbr = loop->add_subcommand("bracket", "loop bracket through an expansion");
  add_common(lbr, c, false);
  lbr->add_option("--twist", twist_file, "twisting automorphism JSON file");
  lbr->add_option("v", expr_a, "first free-group word")->required();
  lbr->add_option("w", expr_b, "second free-group word")->required();
  CLI::App* lco = loop->add_subcommand("cobracket", "loop cobracket through an expansion");
  add_common(lco, c);
  lco->add_option("--twist", twist_file, "twisting automorphism JSON file");
  lco->add_option("w", expr_a, "free-group word")->required();

  CLI::App* kv = app.add_subcommand("kv", "Kashiwara-Vergne conditions");
  kv->require_subcommand(1);
  CLI::App* solve = kv->add_subcommand("solve", "degree-by-degree solver");
  add_common(solve, c);
  solve->add_flag("--kvI-only", kvI_only, "solve the first condition only");
  solve->add_option("--seed", seed, "gauge seed (0: least norm)");
  CLI::App* check = kv->add_subcommand("check", "re-verify a solution document");
  check->add_option("--solution", solution_file, "solution JSON file")->required();
  check->add_option("--out", c.out_file, "output path (default: stdout)");
  check->add_option("--format", c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_kv_check(solution_file, c.format, c.out_file);
    check_degree_cap(c);
    if (*bracket) return run_bracket(c, expr_a, expr_b);
    if (*cobracket) return run_cobracket(c, expr_a);
    if (*sigma) return run_sigma(c, expr_a);
    if (*es) return run_es(c, expr_a);
    if (*axioms) return run_axioms(c, seed, samples);
    if (*center) return run_center(c);
    if (*divc) return run_div(c, file_a);
    if (*tdivc) return run_tdiv(c, file_a);
    if (*gdivc) return run_gdiv(c, file_a);
    if (*jco) return run_jcocycle(c, file_a);
    if (*expn) return run_expansion(c, twist_file, word_args);
    if (*llog) return run_loop_log(c, twist_file, expr_a);
    if (*lbr) return run_loop_bracket(c, twist_file, expr_a, expr_b);
    if (*lco) return run_loop_cobracket(c, twist_file, expr_a);
    if (*solve) return run_kv_solve(c, kvI_only, seed);
  } catch (const gt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
