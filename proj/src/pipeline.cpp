#include "sympair/pipeline.hpp"

#include "sympair/affine_weyl.hpp"
#include "sympair/invariant_algebra.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

namespace sympair {

using nlohmann::json;
using nlohmann::ordered_json;

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"theorem_4_8", "theorem_3_3", "theorem_3_1",  "bijection_2_3",
                                                 "lemma_2_4",   "rho_identity", "degree_defect"};
  return names;
}

void validate(const RunConfig& config) {
  for (const auto& c : config.checks)
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
      throw InvalidInput("unknown check '" + c + "'");
  if (config.format != "json" && config.format != "text") throw InvalidInput("unknown format '" + config.format + "'");
  if (config.max_bidegree < -1) throw InvalidInput("max bidegree must be >= 0");
}

int default_threads() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("SYMPAIR_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<long>(n, cap);
  }
  return n;
}

namespace {

Rational coefficient(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InvalidInput("coefficient must be an integer or a rational string, got " + v.dump());
}

std::map<std::string, Rational> parse_image(const json& j) {
  if (!j.is_object()) throw InvalidInput("generator image must be an object {label: coefficient}");
  std::map<std::string, Rational> out;
  for (const auto& [label, c] : j.items()) out[label] = coefficient(c);
  return out;
}

std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

ordered_json weights_json(const std::vector<Weight>& ws) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(w);
  return a;
}

struct Check {
  std::string status = "skipped";
  bool complete = true;
  std::string detail;
  std::optional<std::string> observed;
};

ordered_json check_json(const Check& c) {
  ordered_json j;
  j["status"] = c.status;
  if (c.observed) j["observed"] = *c.observed;
  j["complete"] = c.complete;
  j["detail"] = c.detail;
  return j;
}

}  // namespace

PairDescriptor parse_descriptor(const json& j) {
  if (!j.is_object()) throw InvalidInput("descriptor must be a JSON object");
  PairDescriptor d;
  d.name = j.value("name", std::string("custom"));
  const char* algebra_key = j.contains("algebra") ? "algebra" : "cartan";
  if (!j.contains(algebra_key)) throw InvalidInput("descriptor needs an 'algebra' entry");
  const json& c = j[algebra_key];
  if (c.is_string()) {
    d.cartan = cartan_matrix_for(c.get<std::string>());
  } else if (c.is_array()) {
    for (const auto& row : c) {
      if (!row.is_array()) throw InvalidInput("cartan matrix must be an array of integer arrays");
      std::vector<int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw InvalidInput("cartan entries must be integers");
        r.push_back(x.get<int>());
      }
      d.cartan.push_back(std::move(r));
    }
  } else {
    throw InvalidInput("algebra must be a type name or a Cartan matrix");
  }
  const json* images = nullptr;
  if (j.contains("involution")) {
    const json& inv = j["involution"];
    if (inv.is_string()) {
      if (inv.get<std::string>() != "diagonal") throw InvalidInput("involution must be \"diagonal\" or an object");
      d.diagonal = true;
    } else if (inv.is_object() && inv.contains("generator_images")) {
      images = &inv["generator_images"];
    } else {
      throw InvalidInput("involution object needs 'generator_images'");
    }
  } else {
    if (j.contains("diagonal")) {
      if (!j["diagonal"].is_boolean()) throw InvalidInput("'diagonal' must be a boolean");
      d.diagonal = j["diagonal"].get<bool>();
    }
    if (j.contains("generator_images")) images = &j["generator_images"];
  }
  if (images) {
    if (images->is_array()) {
      for (const auto& e : *images) {
        if (!e.is_object() || !e.contains("generator") || !e.contains("image"))
          throw InvalidInput("each generator image needs 'generator' and 'image'");
        d.images.push_back({e["generator"].get<std::string>(), parse_image(e["image"])});
      }
    } else if (images->is_object()) {
      for (const auto& [name, img] : images->items()) d.images.push_back({name, parse_image(img)});
    } else {
      throw InvalidInput("generator_images must be a list or an object");
    }
  }
  if (!d.diagonal && d.images.empty()) throw InvalidInput("descriptor needs an involution");
  return d;
}

PairDescriptor resolve_pair(const std::string& pair) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), pair) != names.end()) return preset_descriptor(pair);
  std::ifstream in(pair);
  if (!in) throw InvalidInput("'" + pair + "' is neither a preset nor a readable descriptor file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("cannot parse descriptor '" + pair + "': " + e.what());
  }
  return parse_descriptor(j);
}

RunResult run_verify(const RunConfig& config) {
  using clock = std::chrono::steady_clock;
  RunResult result;
  ordered_json& rep = result.report;
  const auto start = clock::now();
  auto stage_start = start;
  bool over_budget = false;
  auto end_stage = [&](const std::string& name) {
    const auto now = clock::now();
    result.stage_seconds.emplace_back(name, std::chrono::duration<double>(now - stage_start).count());
    stage_start = now;
    if (config.budget_seconds > 0 && std::chrono::duration<double>(now - start).count() > config.budget_seconds)
      over_budget = true;
  };
  auto finish = [&](int code, const std::string& status) {
    rep["status"] = status;
    rep["exit_code"] = code;
    if (config.timings) {
      ordered_json t;
      for (const auto& [s, x] : result.stage_seconds) t[s] = x;
      rep["timings"] = t;
    }
    result.exit_code = code;
    return result;
  };

  rep["pair"] = ordered_json::object();
  rep["pair"]["name"] = config.pair;
  try {
    validate(config);
  } catch (const Error& e) {
    rep["error"] = e.what();
    return finish(exit_bad_input, "bad_input");
  }
  ordered_json cfg;
  cfg["checks"] = config.checks;
  cfg["max_bidegree"] = config.max_bidegree;
  cfg["ceiling"] = config.ceiling;
  rep["config"] = cfg;

  // lie_core and symmetric_pair
  std::unique_ptr<SymmetricPair> sp;
  int end_k = 0;
  try {
    PairDescriptor d = resolve_pair(config.pair);
    if (d.name.empty()) d.name = config.pair;
    build_root_system(d.cartan);
    end_stage("lie_core");
    sp = std::make_unique<SymmetricPair>(build_pair(d));
    end_k = irreducibility_report(*sp);
    end_stage("symmetric_pair");
  } catch (const HypothesisViolation& e) {
    rep["error"] = e.what();
    return finish(exit_out_of_hypothesis, "out_of_hypothesis");
  } catch (const Error& e) {
    rep["error"] = e.what();
    return finish(exit_bad_input, "bad_input");
  }

  const bool irreducible = end_k == 1;
  ordered_json pair;
  pair["name"] = sp->name;
  pair["dim_g"] = sp->dim_g();
  pair["dim_k"] = sp->dim_k();
  pair["dim_p"] = sp->dim_p();
  pair["rank"] = sp->cartan_rank();
  pair["diagonal"] = sp->is_diagonal();
  pair["k_semisimple"] = sp->k_semisimple();
  pair["dim_end_k_p"] = end_k;
  pair["p_irreducible"] = irreducible;
  pair["theta_p"] = sp->theta_p;
  pair["p_weights"] = weights_json(sp->p_weights);
  rep["pair"] = pair;
  std::vector<std::string> notes;
  if (!sp->is_diagonal() && !sp->table.roots.is_simple()) notes.push_back("g is semisimple but not simple: outside proven scope");
  if (!irreducible) notes.push_back("p is reducible (dim End_k(p) = " + std::to_string(end_k) + "); results are reported without a pass/fail claim");

  auto wanted = [&](const std::string& c) { return std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end(); };
  std::map<std::string, Check> checks;
  for (const auto& c : check_names())
    if (wanted(c)) checks[c].detail = "not run";
  auto set_check = [&](const std::string& name, bool pass, bool complete, const std::string& detail) {
    if (!wanted(name)) return;
    Check& c = checks[name];
    c.complete = complete;
    c.detail = detail;
    if (!irreducible) {
      c.status = "skipped";
      c.observed = pass ? "pass" : "fail";
    } else if (!pass) {
      c.status = "fail";
    } else {
      c.status = complete ? "pass" : "skipped";
    }
  };
  auto skip_all = [&](const std::vector<std::string>& names, const std::string& why) {
    for (const auto& n : names)
      if (wanted(n)) checks[n].detail = why;
  };
  bool truncated = false;

  // affine_weyl
  std::optional<AffineRootSystem> ars;
  std::vector<AffineWeylElement> minuscule;
  std::optional<AbelianOracle> oracle;
  const std::vector<std::string> affine_checks = {"theorem_3_1", "bijection_2_3", "lemma_2_4", "rho_identity", "degree_defect"};
  if (over_budget) {
    truncated = true;
    skip_all(affine_checks, "wall-clock budget exhausted");
  } else {
    try {
      oracle = enumerate_abelian_oracle(*sp);
    } catch (const HypothesisViolation& e) {
      notes.push_back(std::string("abelian subspace oracle unavailable: ") + e.what());
    }
    try {
      ars = build_affine(*sp);
      minuscule = enumerate_minuscule(*ars);
    } catch (const HypothesisViolation& e) {
      notes.push_back(std::string("affine root data unavailable: ") + e.what());
      skip_all(affine_checks, e.what());
    }
    if (ars) {
      ordered_json affine;
      affine["cartan"] = ars->cartan;
      ordered_json cat = ordered_json::array();
      for (const auto& w : minuscule) {
        ordered_json e;
        e["word"] = w.word;
        e["length"] = w.length();
        std::vector<int> levels;
        for (const auto& b : inverse_inversions(*ars, w)) levels.push_back(ars->level(b));
        e["levels"] = levels;
        e["weight_support"] = weights_json(ev1_subspace(*ars, w).weight_support);
        cat.push_back(e);
      }
      affine["minuscule"] = cat;
      rep["affine"] = affine;

      if (oracle) {
        CheckOutcome b = check_bijection(*ars, *sp, minuscule, *oracle);
        std::string detail = b.detail;
        bool pass = b.pass;
        if (sp->is_diagonal()) {
          const std::size_t expect = std::size_t{1} << sp->cartan_rank();
          const bool reg = oracle->subspaces.size() == expect;
          detail += "; |Xi| = " + std::to_string(oracle->subspaces.size()) + (reg ? " = " : " != ") + "2^" +
                    std::to_string(sp->cartan_rank());
          pass = pass && reg;
        }
        if (!oracle->zero_weight_certified) {
          pass = false;
          detail += "; zero-weight obstruction not certified: " + oracle->note;
        }
        set_check("bijection_2_3", pass, true, detail);
      } else {
        skip_all({"bijection_2_3"}, "oracle unavailable");
      }
      const CheckOutcome oi = order_ideal_check(*ars, minuscule);
      const CheckOutcome mc = minimal_coset_check(*ars, minuscule);
      set_check("lemma_2_4", oi.pass && mc.pass, true, oi.detail + "; " + mc.detail);
      const CheckOutcome rho = rho_length_check(*ars, minuscule);
      set_check("rho_identity", rho.pass, true, rho.detail);
      const CheckOutcome dd = degree_defect_check(*ars, minuscule);
      set_check("degree_defect", dd.pass, true, dd.detail);
    }
    end_stage("affine_weyl");
  }

  // invariant_algebra
  const std::vector<std::string> engine_checks = {"theorem_4_8", "theorem_3_3", "theorem_3_1"};
  if (over_budget) {
    truncated = true;
    skip_all(engine_checks, "wall-clock budget exhausted");
  } else {
    const GeneratorSet gens = build_generators(*sp);
    EngineOptions opt;
    opt.max_bidegree = config.max_bidegree;
    opt.ceiling = config.ceiling;
    opt.threads = std::max(1, config.threads);
    const InvariantEngine engine(*sp, gens, opt);
    truncated = truncated || engine.truncated();

    ordered_json gen;
    gen["rank_C1"] = gens.C1.rank();
    gen["rank_C2"] = gens.C2.rank();
    gen["rank_C3"] = gens.C3.rank();
    rep["generators"] = gen;

    ordered_json quotient = ordered_json::array();
    for (int n = 0; n <= sp->dim_p(); ++n) {
      const auto q = engine.quotient_dim(n);
      if (q) quotient.push_back(*q);
      else quotient.push_back(nullptr);
    }
    rep["quotient_dims"] = quotient;

    ordered_json dims;
    const int maxb = engine.max_bidegree();
    for (int p = 0; p <= maxb; ++p)
      for (int q = 0; q <= maxb; ++q) {
        const ComponentDims& c = engine.dims(p, q);
        ordered_json e;
        e["R"] = c.R;
        if (c.computed) {
          e["J"] = c.J;
          e["A"] = c.A;
          e["B"] = c.B;
          e["A_k"] = c.A_k;
          e["B_k"] = c.B_k;
        } else {
          e["truncated"] = true;
        }
        dims[std::to_string(p) + "," + std::to_string(q)] = e;
      }
    rep["dims"] = dims;

    const SPowerProfile prof = engine.s_power_profile(maxb);
    rep["s_profile"] = prof.ranks;
    if (prof.nilpotency_order) rep["nilpotency_order"] = *prof.nilpotency_order;
    else rep["nilpotency_order"] = nullptr;
    if (prof.truncated) truncated = true;

    const ExponentPrediction pred = conjectured_exponent(*sp);
    ordered_json ce;
    ce["measured"] = rep["nilpotency_order"];
    if (pred.value) ce["predicted"] = *pred.value;
    else ce["predicted"] = nullptr;
    if (pred.naive) ce["h_g_minus_h_k"] = *pred.naive;
    if (pred.value && prof.nilpotency_order) ce["agrees"] = *pred.value == *prof.nilpotency_order;
    else ce["agrees"] = nullptr;
    ce["note"] = pred.note;
    rep["conjectured_exponent"] = ce;

    const GenerationVerdict v = verify_generated_by_S(engine);
    set_check("theorem_4_8", v.pass, v.complete,
              (v.pass ? "A^k generated by S up to bidegree " + std::to_string(v.degree_bound) : v.witness));
    if (oracle) {
      const HanReport h = han_check(*sp, engine, oracle->subspaces);
      set_check("theorem_3_3", h.pass, h.complete, h.detail);
    } else {
      skip_all({"theorem_3_3"}, "abelian subspace oracle unavailable");
    }
    if (ars) {
      std::vector<int> lengths;
      for (const auto& w : minuscule) lengths.push_back(w.length());
      const BidiagonalReport b = b_invariants_bidiagonal_check(engine, lengths);
      set_check("theorem_3_1", b.pass, b.complete, b.detail);
    }
    end_stage("invariant_algebra");
  }

  bool failed = false, incomplete = false;
  ordered_json cj;
  for (const auto& name : check_names()) {
    if (!wanted(name)) continue;
    const Check& c = checks[name];
    if (c.status == "fail") failed = true;
    if (!c.complete) incomplete = true;
    cj[name] = check_json(c);
  }
  rep["checks"] = cj.is_null() ? ordered_json::object() : cj;
  rep["truncated"] = truncated || incomplete;
  rep["notes"] = notes;

  if (!irreducible) return finish(exit_out_of_hypothesis, "out_of_hypothesis");
  if (failed) return finish(exit_check_failed, "check_failed");
  if (truncated || incomplete) return finish(exit_truncated, "truncated");
  return finish(exit_ok, "ok");
}

std::string render_text(const RunResult& result) {
  const ordered_json& r = result.report;
  std::ostringstream os;
  const auto& pair = r["pair"];
  os << "pair " << pair.value("name", std::string("?"));
  if (pair.contains("dim_g"))
    os << "  dim g " << pair["dim_g"] << ", dim k " << pair["dim_k"] << ", dim p " << pair["dim_p"] << ", End_k(p) "
       << pair["dim_end_k_p"];
  os << "\n";
  if (r.contains("error")) os << "error: " << r["error"].get<std::string>() << "\n";
  if (r.contains("affine")) {
    os << "minuscule elements: " << r["affine"]["minuscule"].size() << "\n";
    for (const auto& e : r["affine"]["minuscule"]) {
      std::vector<Weight> ws = e["weight_support"].get<std::vector<Weight>>();
      os << "  " << word_text(e["word"].get<std::vector<int>>()) << "  length " << e["length"] << "  I = {";
      for (std::size_t i = 0; i < ws.size(); ++i) os << (i ? " " : "") << weight_text(ws[i]);
      os << "}\n";
    }
  }
  if (r.contains("dims")) {
    const int maxb = r["config"]["max_bidegree"].get<int>() < 0 ? r["pair"]["dim_p"].get<int>() : r["config"]["max_bidegree"].get<int>();
    const int lim = std::min(maxb, r["pair"]["dim_p"].get<int>());
    os << "dim (A^k)^{p,q} / dim (B^k)^{p,q}:\n";
    for (int p = 0; p <= lim; ++p) {
      os << "  ";
      for (int q = 0; q <= lim; ++q) {
        const auto& e = r["dims"][std::to_string(p) + "," + std::to_string(q)];
        if (e.contains("truncated")) os << "  -/-";
        else os << "  " << e["A_k"] << "/" << e["B_k"];
      }
      os << "\n";
    }
    os << "S powers:";
    for (const auto& x : r["s_profile"]) os << " " << x;
    os << "\nnilpotency order: " << (r["nilpotency_order"].is_null() ? "not reached" : r["nilpotency_order"].dump()) << "\n";
    const auto& ce = r["conjectured_exponent"];
    os << "conjectured exponent: " << (ce["predicted"].is_null() ? "undefined" : ce["predicted"].dump());
    if (ce.contains("h_g_minus_h_k")) os << " (h_g - h_k = " << ce["h_g_minus_h_k"] << ")";
    os << "  " << ce["note"].get<std::string>() << "\n";
  }
  if (r.contains("checks")) {
    os << "checks:\n";
    for (const auto& [name, c] : r["checks"].items()) {
      os << "  " << name << ": " << c["status"].get<std::string>();
      if (c.contains("observed")) os << " (observed " << c["observed"].get<std::string>() << ")";
      if (!c["complete"].get<bool>()) os << " [incomplete]";
      os << "  " << c["detail"].get<std::string>() << "\n";
    }
  }
  if (r.contains("notes"))
    for (const auto& n : r["notes"]) os << "note: " << n.get<std::string>() << "\n";
  os << "timings:";
  for (const auto& [s, x] : result.stage_seconds) os << " " << s << " " << x << "s";
  os << "\nstatus: " << r["status"].get<std::string>() << " (exit " << result.exit_code << ")\n";
  return os.str();
}

ordered_json list_presets() {
  ordered_json out = ordered_json::array();
  for (const auto& name : preset_names()) {
    ordered_json e;
    e["name"] = name;
    try {
      const SymmetricPair sp = build_pair(preset_descriptor(name));
      const int end_k = irreducibility_report(sp);
      e["dim_g"] = sp.dim_g();
      e["dim_k"] = sp.dim_k();
      e["dim_p"] = sp.dim_p();
      e["hypothesis"] = end_k == 1 ? "p irreducible" : "p reducible";
    } catch (const Error& err) {
      e["hypothesis"] = std::string("rejected: ") + err.what();
    }
    out.push_back(e);
  }
  return out;
}

std::string render_presets(const ordered_json& catalog) {
  std::ostringstream os;
  for (const auto& e : catalog) {
    os << e["name"].get<std::string>();
    if (e.contains("dim_g")) os << "  dim g " << e["dim_g"] << "  dim k " << e["dim_k"] << "  dim p " << e["dim_p"];
    os << "  " << e["hypothesis"].get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace sympair
