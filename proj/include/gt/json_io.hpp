#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gt/expansions.hpp"
#include "gt/kv.hpp"

namespace gt {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

// All numerics travel as exact "p" or "p/q" strings.
inline Json rational_json(const Rational& c) { return c.str(); }

inline Rational rational_from_json(const Json& j) {
  return Rational::parse(j.get<std::string>());
}

inline Json word_json(const Word& w) {
  Json a = Json::array();
  for (Letter l : w) a.push_back(letter_name(l));
  return a;
}

inline Word word_from_json(const Json& j, const Signature& sig) {
  Word w;
  for (const auto& e : j) w.push_back(parse_letter(e.get<std::string>(), sig));
  return w;
}

inline Json valid_json(int valid) {
  if (valid >= kExactDegree) return "exact";
  return valid;
}

inline int valid_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "exact") throw ParseError("bad valid degree");
    return kExactDegree;
  }
  return j.get<int>();
}

inline Signature signature_from_json(const Json& j) {
  return Signature{j.at("g").get<int>(), j.at("n").get<int>()};
}

inline void put_signature(Json& j, const Signature& sig) {
  j["g"] = sig.g;
  j["n"] = sig.n;
}

inline Json series_json(const Series& s) {
  Json j;
  put_signature(j, s.sig);
  j["valid"] = valid_json(s.valid);
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms)
    terms.push_back(Json{{"word", word_json(w)}, {"coeff", rational_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

inline Series series_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  Series s(sig, valid_from_json(j.at("valid")));
  for (const auto& t : j.at("terms"))
    s.add_term(word_from_json(t.at("word"), sig), rational_from_json(t.at("coeff")));
  return s;
}

inline Json cyclic_series_json(const CyclicSeries& s) {
  Json j;
  put_signature(j, s.sig);
  j["valid"] = valid_json(s.valid);
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms)
    terms.push_back(Json{{"word", word_json(w.rep)}, {"coeff", rational_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

inline CyclicSeries cyclic_series_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  CyclicSeries s(sig, valid_from_json(j.at("valid")));
  for (const auto& t : j.at("terms"))
    s.add_term(CyclicWord(word_from_json(t.at("word"), sig)),
               rational_from_json(t.at("coeff")));
  return s;
}

inline Json bicyclic_series_json(const BiCyclicSeries& s) {
  Json j;
  put_signature(j, s.sig);
  j["valid"] = valid_json(s.valid);
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms)
    terms.push_back(Json{{"first", word_json(k.first.rep)},
                         {"second", word_json(k.second.rep)},
                         {"coeff", rational_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

inline BiCyclicSeries bicyclic_series_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  BiCyclicSeries s(sig, valid_from_json(j.at("valid")));
  for (const auto& t : j.at("terms"))
    s.add_term(CyclicWord(word_from_json(t.at("first"), sig)),
               CyclicWord(word_from_json(t.at("second"), sig)),
               rational_from_json(t.at("coeff")));
  return s;
}

inline Json framing_json(const Framing& fr) {
  const Signature& sig = fr.sig();
  Json j;
  put_signature(j, sig);
  Json rg = Json::array(), ra = Json::array(), rb = Json::array();
  for (int k = 1; k <= sig.n; ++k) rg.push_back(fr.rot_gamma(k));
  for (int i = 1; i <= sig.g; ++i) {
    ra.push_back(fr.rot_alpha(i));
    rb.push_back(fr.rot_beta(i));
  }
  j["rot_boundary"] = std::move(rg);
  j["rot_alpha"] = std::move(ra);
  j["rot_beta"] = std::move(rb);
  return j;
}

inline Framing framing_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  return Framing(sig, j.at("rot_boundary").get<std::vector<long>>(),
                 j.at("rot_alpha").get<std::vector<long>>(),
                 j.at("rot_beta").get<std::vector<long>>());
}

// Shared layout for tangential derivations and automorphisms.
template <class T>
inline Json tangential_json(const T& t) {
  Json j;
  put_signature(j, t.sig);
  j["valid"] = valid_json(t.valid);
  Json xs = Json::array(), ys = Json::array(), ts = Json::array();
  for (const auto& s : t.ximg) xs.push_back(series_json(s));
  for (const auto& s : t.yimg) ys.push_back(series_json(s));
  for (const auto& s : t.tang) ts.push_back(series_json(s));
  j["x_images"] = std::move(xs);
  j["y_images"] = std::move(ys);
  j["tangential"] = std::move(ts);
  return j;
}

template <class T>
inline T tangential_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  T t(sig, valid_from_json(j.at("valid")));
  const Json& xs = j.at("x_images");
  const Json& ys = j.at("y_images");
  const Json& ts = j.at("tangential");
  if (static_cast<int>(xs.size()) != sig.g || static_cast<int>(ys.size()) != sig.g ||
      static_cast<int>(ts.size()) != sig.n)
    throw ParseError("tangential data does not match signature");
  for (int i = 0; i < sig.g; ++i) {
    t.ximg[i] = series_from_json(xs[i]);
    t.yimg[i] = series_from_json(ys[i]);
  }
  for (int k = 0; k < sig.n; ++k) t.tang[k] = series_from_json(ts[k]);
  return t;
}

inline const char* kv_status_name(KvStatus s) {
  switch (s) {
    case KvStatus::Solved: return "solved";
    case KvStatus::Obstructed: return "obstructed";
    default: return "checked_only";
  }
}

inline KvStatus kv_status_from_name(const std::string& s) {
  if (s == "solved") return KvStatus::Solved;
  if (s == "obstructed") return KvStatus::Obstructed;
  if (s == "checked_only") return KvStatus::CheckedOnly;
  throw ParseError("unknown status: " + s);
}

// Self-contained solution document: the problem header plus the report.
inline Json kv_solution_json(const KvProblem& pb, const KvReport& rep,
                             bool kvI_only = false) {
  Json j;
  Json problem;
  put_signature(problem, pb.sig);
  problem["degree"] = pb.N;
  problem["framing"] = framing_json(pb.fr);
  problem["kvI_only"] = kvI_only;
  j["problem"] = std::move(problem);
  j["status"] = kv_status_name(rep.status);
  Json degrees = Json::array();
  for (int d : rep.completed_degrees)
    degrees.push_back(Json{{"degree", d}, {"status", "completed"}});
  if (rep.status == KvStatus::Obstructed)
    degrees.push_back(Json{{"degree", rep.obstruction_degree}, {"status", "obstructed"}});
  j["degrees"] = std::move(degrees);
  j["automorphism"] = tangential_json(rep.F);
  j["kvI_ok"] = rep.kvI_ok;
  j["kvII_ok"] = rep.kvII_ok;
  j["kvI_defect"] = series_json(rep.kvI_defect);
  j["kvII_residue"] = cyclic_series_json(rep.kvII_residue);
  if (rep.status == KvStatus::Obstructed) {
    Json ob;
    ob["degree"] = rep.obstruction_degree;
    Json sr = Json::array();
    for (const Word& w : rep.obstruction_series_rows) sr.push_back(word_json(w));
    Json tr = Json::array();
    for (const CyclicWord& w : rep.obstruction_trace_rows) tr.push_back(word_json(w.rep));
    Json lm = Json::array();
    for (const Rational& c : rep.obstruction_lambda) lm.push_back(rational_json(c));
    ob["series_rows"] = std::move(sr);
    ob["trace_rows"] = std::move(tr);
    ob["lambda"] = std::move(lm);
    j["obstruction"] = std::move(ob);
  }
  if (rep.has_duflo) {
    Json df;
    Json h = Json::array();
    for (const Rational& c : rep.duflo.h) h.push_back(rational_json(c));
    Json hj = Json::array();
    for (const auto& col : rep.duflo.hj) {
      Json one = Json::array();
      for (const Rational& c : col) one.push_back(rational_json(c));
      hj.push_back(std::move(one));
    }
    df["h"] = std::move(h);
    df["h_boundary"] = std::move(hj);
    df["ambiguous"] = rep.duflo.ambiguous;
    df["matches_modulo_linear"] = rep.duflo.matches_modulo_linear;
    j["duflo"] = std::move(df);
  }
  return j;
}

inline KvProblem kv_problem_from_json(const Json& j) {
  return KvProblem(framing_from_json(j.at("framing")), j.at("degree").get<int>());
}

inline KvReport kv_report_from_json(const Json& j) {
  KvReport rep;
  Signature sig = signature_from_json(j.at("problem"));
  rep.status = kv_status_from_name(j.at("status").get<std::string>());
  for (const auto& e : j.at("degrees"))
    if (e.at("status").get<std::string>() == "completed")
      rep.completed_degrees.push_back(e.at("degree").get<int>());
  rep.F = tangential_from_json<TAut>(j.at("automorphism"));
  rep.kvI_ok = j.at("kvI_ok").get<bool>();
  rep.kvII_ok = j.at("kvII_ok").get<bool>();
  rep.kvI_defect = series_from_json(j.at("kvI_defect"));
  rep.kvII_residue = cyclic_series_from_json(j.at("kvII_residue"));
  if (j.contains("obstruction")) {
    const Json& ob = j.at("obstruction");
    rep.obstruction_degree = ob.at("degree").get<int>();
    for (const auto& e : ob.at("series_rows"))
      rep.obstruction_series_rows.push_back(word_from_json(e, sig));
    for (const auto& e : ob.at("trace_rows"))
      rep.obstruction_trace_rows.push_back(CyclicWord(word_from_json(e, sig)));
    for (const auto& e : ob.at("lambda"))
      rep.obstruction_lambda.push_back(rational_from_json(e));
  }
  if (j.contains("duflo")) {
    const Json& df = j.at("duflo");
    rep.has_duflo = true;
    for (const auto& e : df.at("h")) rep.duflo.h.push_back(rational_from_json(e));
    for (const auto& col : df.at("h_boundary")) {
      std::vector<Rational> one;
      for (const auto& e : col) one.push_back(rational_from_json(e));
      rep.duflo.hj.push_back(std::move(one));
    }
    rep.duflo.ambiguous = df.at("ambiguous").get<bool>();
    rep.duflo.matches_modulo_linear = df.at("matches_modulo_linear").get<bool>();
  }
  return rep;
}

// Text expressions: sums of rational multiples of cyclic words, e.g.
// "|x1 y1| - 3/2 |z1|". The empty word is |1| or ||.
inline CyclicSeries parse_cyclic_expression(const std::string& text,
                                            const Signature& sig) {
  CyclicSeries out(sig);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw ParseError("empty expression");
  while (i < text.size()) {
    Rational sign(1);
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = Rational(-1);
      ++i;
      skip();
    }
    Rational coeff(1);
    if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
      size_t start = i;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
        ++i;
      coeff = Rational::parse(text.substr(start, i - start));
      skip();
    }
    if (i >= text.size() || text[i] != '|')
      throw ParseError("expected a cyclic word at position " + std::to_string(i));
    size_t close = text.find('|', i + 1);
    if (close == std::string::npos) throw ParseError("unterminated cyclic word");
    std::string inner = text.substr(i + 1, close - i - 1);
    i = close + 1;
    Word w;
    size_t p = 0;
    while (p < inner.size()) {
      while (p < inner.size() && std::isspace(static_cast<unsigned char>(inner[p]))) ++p;
      if (p >= inner.size()) break;
      size_t q = p;
      while (q < inner.size() && !std::isspace(static_cast<unsigned char>(inner[q]))) ++q;
      std::string tok = inner.substr(p, q - p);
      p = q;
      if (tok == "1") continue;
      w.push_back(parse_letter(tok, sig));
    }
    out.add_term(CyclicWord(w), sign * coeff);
    skip();
  }
  return out;
}

inline std::string series_text(const Series& s) {
  if (s.is_zero()) return "0\n";
  std::string out;
  for (const auto& [w, c] : s.terms) out += c.str() + "  " + word_str(w) + "\n";
  return out;
}

inline std::string cyclic_series_text(const CyclicSeries& s) {
  if (s.is_zero()) return "0\n";
  std::string out;
  for (const auto& [w, c] : s.terms) out += c.str() + "  " + cyclic_word_str(w) + "\n";
  return out;
}

inline std::string bicyclic_series_text(const BiCyclicSeries& s) {
  if (s.is_zero()) return "0\n";
  std::string out;
  for (const auto& [k, c] : s.terms)
    out += c.str() + "  " + cyclic_word_str(k.first) + " (x) " +
           cyclic_word_str(k.second) + "\n";
  return out;
}

}  // namespace gt
