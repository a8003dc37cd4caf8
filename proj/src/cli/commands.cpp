#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mrees/cli.hpp"
#include "mrees/corpus.hpp"
#include "mrees/verifiers.hpp"

namespace mrees::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string num(std::int64_t v) { return std::to_string(v); }

ojson point_json(std::span<const Exponent> p) {
  ojson a = ojson::array();
  for (Exponent v : p) a.push_back(num(v));
  return a;
}

ojson ideal_json(const MonomialIdeal& ideal) {
  ojson gens = ojson::array();
  for (const auto& g : ideal.generators()) {
    ojson row = ojson::array();
    for (int i = 0; i < g.size(); ++i) row.push_back(num(g[i]));
    gens.push_back(std::move(row));
  }
  ojson j;
  j["text"] = format_ideal(ideal);
  j["generators"] = std::move(gens);
  return j;
}

ojson monomial_json(const ExponentVector& v, const RingContext& ring) { return format_monomial(v, ring); }

ojson jr_json(const JrReport& r) {
  ojson j;
  j["kind"] = jr_kind_name(r.kind);
  j["bound"] = num(r.bound);
  j["passed"] = r.passed;
  return j;
}

ojson jr_failure_json(const JrFailure& f, const RingContext& ring) {
  ojson j;
  j["point"] = point_json(f.point);
  j["witness"] = monomial_json(f.witness, ring);
  j["detail"] = f.detail;
  return j;
}

ojson check_json(const CheckReport& r) {
  ojson j;
  j["check"] = r.check;
  j["passed"] = r.passed;
  j["bound"] = num(r.bound);
  ojson cmp = ojson::array();
  for (const auto& c : r.comparisons) {
    ojson e;
    e["label"] = c.label;
    e["lhs"] = num(c.lhs);
    e["rhs"] = num(c.rhs);
    e["equal"] = c.equal();
    cmp.push_back(std::move(e));
  }
  j["comparisons"] = std::move(cmp);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

ojson check_failures_json(const CheckReport& r, const RingContext& ring) {
  ojson a = ojson::array();
  for (const auto& f : r.failures) {
    ojson e;
    e["point"] = point_json(f.point);
    if (f.witness) e["witness"] = monomial_json(*f.witness, ring);
    e["detail"] = f.detail;
    a.push_back(std::move(e));
  }
  return a;
}

std::string index_label(const MultiIndex& i, int arity) {
  std::string s = "e(";
  for (int k = 0; k < arity; ++k) s += (k ? "," : "") + std::to_string(i[static_cast<std::size_t>(k)]);
  return s + ")";
}

ojson poly_json(const HilbertPoly& p) {
  ojson j;
  j["arity"] = num(p.arity());
  ojson coeffs;
  for (const auto& [i, v] : p.coeffs()) coeffs[index_label(i, p.arity())] = num(v);
  j["coefficients"] = std::move(coeffs);
  if (p.arity() == 1) {
    const auto e = p.univariate();
    j["e"] = {num(e[0]), num(e[1]), num(e[2]), num(e[3])};
  }
  if (p.stable_offset >= 0) j["stable_offset"] = num(p.stable_offset);
  return j;
}

// Indented "key: value" rendering of a report section.
void render(std::ostream& out, const ojson& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto flat = [&](const ojson& a) {
    return std::all_of(a.begin(), a.end(), [](const ojson& v) { return v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const ojson& w) { return w.is_primitive(); })); });
  };
  auto inline_array = [&](const ojson& a) {
    std::function<std::string(const ojson&)> go = [&](const ojson& v) -> std::string {
      if (!v.is_array()) return scalar(v);
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + go(v[i]);
      return s + "]";
    };
    return go(a);
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        out << pad << k << ": " << scalar(v) << '\n';
      } else if (v.is_array() && flat(v)) {
        out << pad << k << ": " << inline_array(v) << '\n';
      } else if (v.is_object() && v.contains("text") && v.contains("generators") && v.size() == 2) {
        out << pad << k << ": " << v["text"].get<std::string>() << '\n';
      } else {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        out << pad << "- " << scalar(v) << '\n';
      } else if (v.is_object() && v.contains("text") && v.contains("generators") && v.size() == 2) {
        out << pad << "- " << v["text"].get<std::string>() << '\n';
      } else {
        out << pad << "-\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

// Exit 2: the request itself was unusable.
bool is_usage_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) != nullptr || dynamic_cast<const DimensionMismatch*>(&e) != nullptr ||
         dynamic_cast<const ZeroIdealError*>(&e) != nullptr || dynamic_cast<const NotMPrimary*>(&e) != nullptr ||
         dynamic_cast<const PreconditionError*>(&e) != nullptr;
}

const char* error_type(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const ZeroIdealError*>(&e)) return "ZeroIdealError";
  if (dynamic_cast<const NotMPrimary*>(&e)) return "NotMPrimary";
  if (dynamic_cast<const ExponentOverflow*>(&e)) return "ExponentOverflow";
  if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
  if (dynamic_cast<const ContainmentViolation*>(&e)) return "ContainmentViolation";
  if (dynamic_cast<const PostulationFailure*>(&e)) return "PostulationFailure";
  if (dynamic_cast<const NoStabilization*>(&e)) return "NoStabilization";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
  return "Error";
}

struct Report {
  std::string command;
  ojson inputs = ojson::object();
  ojson outputs = ojson::object();
  ojson verdicts = ojson::object();
  ojson witnesses = ojson::object();
  std::optional<ojson> error;
  double millis = 0;

  void emit(std::ostream& out, bool as_json) const {
    ojson j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["verdicts"] = verdicts;
    j["witnesses"] = witnesses;
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << millis;
    j["timings"] = {{"total_ms", ms.str()}};
    if (error) j["error"] = *error;
    if (as_json) {
      out << j.dump() << '\n';
      return;
    }
    out << "command: " << command << '\n';
    for (const char* section : {"inputs", "outputs", "verdicts", "witnesses", "error"}) {
      if (!j.contains(section) || j[section].empty()) continue;
      out << section << ":\n";
      render(out, j[section], 2);
    }
    out << "timings:\n  total_ms: " << ms.str() << '\n';
  }
};

struct Options {
  std::string ring = "x,y,z";
  Exponent bound = 4;
  bool json = false;
  std::string cache_path;
  std::uint64_t seed = 1;
  std::vector<std::string> defs;

  std::vector<std::string> ideals;  // positional expressions
  std::string I, J, K, a, b, c;
  int arity = 0;
  Exponent offset = 0;
  bool stabilize = false;
  std::string point = "1,1,1";
  Exponent max_k = 0;
  std::string reduction;
  Exponent box = 6;
  bool adic = false;
  std::size_t count = 20;
  Exponent max_exponent = 4;
};

class Session {
 public:
  Session(const Options& opt, Report& report, std::ostream& err) : opt_(opt), report_(report), err_(err) {
    std::vector<std::string> names;
    std::stringstream ss(opt.ring);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) throw PreconditionError("empty variable name in --ring");
      names.push_back(name);
    }
    ring_ = RingContext(names);
    for (const auto& def : opt.defs) {
      const auto eq = def.find('=');
      if (eq == std::string::npos || eq == 0) throw PreconditionError("--def expects NAME=EXPR, got '" + def + "'");
      const std::string key = def.substr(0, eq);
      bindings_[key] = parse_and_evaluate(def.substr(eq + 1), ring_, bindings_);
      report_.inputs["definitions"][key] = ideal_json(bindings_[key]);
    }
    if (!opt.cache_path.empty()) store_.emplace(opt.cache_path, err);
  }

  ~Session() {
    if (store_) store_->flush();
  }

  const RingContext& ring() const { return ring_; }
  const Options& opt() const { return opt_; }
  Report& report() { return report_; }

  MonomialIdeal ideal(const std::string& text) { return parse_and_evaluate(text, ring_, bindings_); }
  ExponentVector monomial(const std::string& text) {
    // A bound name holding a principal ideal also names its generator.
    auto it = bindings_.find(text);
    if (it != bindings_.end() && it->second.size() == 1) return it->second.generators().front();
    return parse_monomial(text, ring_);
  }

  FiltrationCache& cache(const std::vector<MonomialIdeal>& ideals, FiltrationKind kind = FiltrationKind::Normal) {
    if (store_) return store_->get(ideals, kind);
    auto c = std::make_unique<FiltrationCache>(ideals, kind);
    const std::string key = c->key();
    auto it = local_.find(key);
    if (it == local_.end()) it = local_.emplace(key, std::move(c)).first;
    return *it->second;
  }

  /// 1-3 positional ideals, recorded as inputs.
  std::vector<MonomialIdeal> ideal_list(std::size_t min, std::size_t max) {
    if (opt_.ideals.size() < min || opt_.ideals.size() > max) {
      throw PreconditionError("expected between " + std::to_string(min) + " and " + std::to_string(max) +
                              " ideal expressions, got " + std::to_string(opt_.ideals.size()));
    }
    std::vector<MonomialIdeal> out;
    ojson list = ojson::array();
    for (const auto& text : opt_.ideals) {
      out.push_back(ideal(text));
      list.push_back(ideal_json(out.back()));
    }
    report_.inputs["ideals"] = std::move(list);
    return out;
  }

  MonomialIdeal single_ideal() { return ideal_list(1, 1).front(); }

  std::array<MonomialIdeal, 3> host_ideals() {
    std::array<std::string, 3> text{opt_.I, opt_.J, opt_.K};
    if (!opt_.ideals.empty()) {
      if (opt_.ideals.size() != 3 || !opt_.I.empty() || !opt_.J.empty() || !opt_.K.empty()) {
        throw PreconditionError("give the ideals either as --I/--J/--K or as three positional expressions");
      }
      text = {opt_.ideals[0], opt_.ideals[1], opt_.ideals[2]};
    }
    static constexpr const char* kNames[3] = {"I", "J", "K"};
    std::array<MonomialIdeal, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
      if (text[i].empty()) throw PreconditionError(std::string("missing ideal --") + kNames[i]);
      out[i] = ideal(text[i]);
      report_.inputs[kNames[i]] = ideal_json(out[i]);
    }
    return out;
  }

  /// Hosts plus a, b, c; without --a/--b/--c a good monomial joint reduction
  /// is searched among pure powers.
  JrTriple triple() {
    auto [I, J, K] = host_ideals();
    const bool given = !opt_.a.empty() || !opt_.b.empty() || !opt_.c.empty();
    std::optional<JrTriple> t;
    if (given) {
      if (opt_.a.empty() || opt_.b.empty() || opt_.c.empty()) throw PreconditionError("give all of --a, --b, --c");
      t.emplace(I, J, K, monomial(opt_.a), monomial(opt_.b), monomial(opt_.c));
    } else {
      t = find_good_monomial_jr(I, J, K, opt_.bound);
      if (!t) throw PreconditionError("no good monomial joint reduction among pure powers; give --a, --b, --c");
      report_.inputs["reduction_search"] = "pure powers, good up to bound " + num(opt_.bound);
    }
    report_.inputs["a"] = monomial_json(t->a, ring_);
    report_.inputs["b"] = monomial_json(t->b, ring_);
    report_.inputs["c"] = monomial_json(t->c, ring_);
    return *t;
  }

  Grade point() {
    Grade g{0, 0, 0};
    std::stringstream ss(opt_.point);
    std::string part;
    std::size_t i = 0;
    while (std::getline(ss, part, ',')) {
      if (i >= 3) throw PreconditionError("--point takes three entries");
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(part, &used);
      } catch (const std::exception&) {
        throw PreconditionError("bad --point entry '" + part + "'");
      }
      if (used != part.size()) throw PreconditionError("bad --point entry '" + part + "'");
      g[i++] = v;
    }
    if (i != 3) throw PreconditionError("--point takes three entries");
    report_.inputs["point"] = point_json(g);
    return g;
  }

  void bound_input() { report_.inputs["bound"] = num(opt_.bound); }

 private:
  const Options& opt_;
  Report& report_;
  std::ostream& err_;
  RingContext ring_;
  Bindings bindings_;
  std::optional<CacheStore> store_;
  std::map<std::string, std::unique_ptr<FiltrationCache>> local_;
};

using Handler = std::function<int(Session&)>;

int cmd_closure(Session& s) {
  const MonomialIdeal I = s.single_ideal();
  const MonomialIdeal cl = integral_closure(I);
  s.report().outputs["closure"] = ideal_json(cl);
  s.report().verdicts["complete"] = cl == I;
  if (const auto w = generator_not_in(cl, I)) s.report().witnesses["missing"] = monomial_json(*w, s.ring());
  return 0;
}

int cmd_colength(Session& s) {
  const MonomialIdeal I = s.single_ideal();
  s.report().outputs["colength"] = num(colength(I));
  return 0;
}

int cmd_hilbert_fit(Session& s) {
  const auto ideals = s.ideal_list(1, 3);
  const int arity = s.opt().arity == 0 ? static_cast<int>(ideals.size()) : s.opt().arity;
  s.report().inputs["arity"] = num(arity);
  FiltrationCache& cache = s.cache(ideals);
  HilbertPoly p;
  if (s.opt().stabilize) {
    s.report().inputs["stabilize"] = true;
    p = stabilized_fit(cache, arity);
  } else {
    s.report().inputs["offset"] = num(s.opt().offset);
    p = fit(cache, arity, s.opt().offset);
  }
  s.report().outputs["polynomial"] = poly_json(p);
  return 0;
}

int cmd_e_coeffs(Session& s) {
  const MonomialIdeal I = s.single_ideal();
  const HilbertPoly p = stabilized_fit(s.cache({I}), 1);
  const auto e = p.univariate();
  for (int i = 0; i < 4; ++i) s.report().outputs["e" + std::to_string(i)] = num(e[static_cast<std::size_t>(i)]);
  s.report().outputs["stable_offset"] = num(p.stable_offset);
  return 0;
}

int cmd_criterion(Session& s) {
  auto [I, J, K] = s.host_ideals();
  const CriterionValues v = criterion_values(I, J, K);
  ojson e3;
  for (const char* k : {"I", "J", "K", "IJ", "IK", "JK", "IJK"}) e3[k] = num(v.e3.at(k));
  s.report().outputs["e3"] = std::move(e3);
  s.report().outputs["criterion_sum"] = num(v.sum);
  s.report().verdicts["criterion_sum_zero"] = v.sum == 0;
  return 0;
}

int jr_command(Session& s, bool good) {
  const JrTriple t = s.triple();
  s.bound_input();
  FiltrationCache& cache = s.cache(t.hosts());
  const JrReport r = good ? check_good_jr(t, s.opt().bound, cache) : check_jrn_zero(t, s.opt().bound, cache);
  s.report().verdicts[jr_kind_name(r.kind)] = jr_json(r);
  if (r.first_failure) s.report().witnesses["first_failure"] = jr_failure_json(*r.first_failure, s.ring());
  return r.passed ? 0 : 1;
}

int cmd_km_lengths(Session& s) {
  const JrTriple t = s.triple();
  const Grade g = s.point();
  const KmLengths k = km_lengths(t, g, s.cache(t.hosts()));
  s.report().outputs["h0"] = num(k.h0);
  s.report().outputs["h1"] = num(k.h1);
  s.report().outputs["h2"] = num(k.h2);
  return 0;
}

int cmd_length_identity(Session& s) {
  const JrTriple t = s.triple();
  const Grade g = s.point();
  FiltrationCache& cache = s.cache(t.hosts());
  const CheckReport len = length_identity_check(t, g, cache);
  const CheckReport euler = euler_identity_check(t, g, cache);
  s.report().verdicts["length_identity"] = check_json(len);
  s.report().verdicts["euler_identity"] = check_json(euler);
  return len.passed && euler.passed ? 0 : 1;
}

int cmd_s_length(Session& s) {
  const JrTriple t = s.triple();
  const Grade g = s.point();
  s.report().outputs["s_length"] = num(s_length(t, g, s.cache(t.hosts())));
  return 0;
}

int cmd_lc_origin(Session& s) {
  const JrTriple t = s.triple();
  const Exponent max_k = s.opt().max_k > 0 ? s.opt().max_k : std::max<Exponent>(s.opt().bound, 2) + 2;
  s.report().inputs["max_k"] = num(max_k);
  const LcOrigin lc = lc_origin_length(t, max_k, s.cache(t.hosts()));
  s.report().outputs["lc_origin"] = num(lc.value);
  s.report().outputs["stable_k"] = num(lc.stable_k);
  s.report().outputs["sequence"] = point_json(lc.sequence);
  return 0;
}

int cmd_reduction_number(Session& s) {
  const MonomialIdeal I = s.single_ideal();
  s.bound_input();
  MonomialIdeal kred;
  if (s.opt().reduction.empty()) {
    const auto bounds = pure_power_bounds(I);
    if (!bounds) throw NotMPrimary("reduction number needs an m-primary ideal");
    std::vector<ExponentVector> powers;
    for (int i = 0; i < I.dimension(); ++i) powers.push_back(ExponentVector::pure_power(I.dimension(), i, (*bounds)[i]));
    kred = minimalize(I.ring(), powers);
  } else {
    kred = s.ideal(s.opt().reduction);
  }
  s.report().inputs["reduction"] = ideal_json(kred);
  const auto r = normal_reduction_number(I, kred, s.opt().bound);
  const auto e = stabilized_fit(s.cache({I}), 1).univariate();
  s.report().outputs["reduction_number"] = r ? ojson(num(*r)) : ojson("exceeds bound");
  s.report().outputs["e3"] = num(e[3]);
  if (!r) return 0;
  const bool consistent = (*r <= 2) == (e[3] == 0);
  s.report().verdicts["reduction_at_most_2_iff_e3_zero"] = consistent;
  return consistent ? 0 : 1;
}

int cmd_vitulli(Session& s) {
  const auto ideals = s.ideal_list(1, 3);
  s.bound_input();
  const VitulliReport v = vitulli_check(ideals, s.opt().bound);
  ojson hyp = ojson::array();
  for (const auto& p : v.hypothesis) {
    ojson e;
    e["exponents"] = point_json(p.exponents);
    e["complete"] = p.complete;
    hyp.push_back(std::move(e));
  }
  s.report().outputs["hypothesis"] = std::move(hyp);
  s.report().verdicts["hypothesis_holds"] = v.hypothesis_holds;
  if (v.first_incomplete) {
    ojson e;
    e["exponents"] = point_json(v.first_incomplete->exponents);
    if (v.first_incomplete->witness) e["witness"] = monomial_json(*v.first_incomplete->witness, s.ring());
    s.report().witnesses["first_incomplete"] = std::move(e);
  }
  s.report().verdicts["phase2_ran"] = v.phase2_ran;
  if (v.phase2_ran) {
    s.report().verdicts["phase2"] = check_json(v.phase2);
    if (!v.phase2.failures.empty()) s.report().witnesses["phase2"] = check_failures_json(v.phase2, s.ring());
  }
  s.report().verdicts["consistent"] = v.consistent();
  return v.consistent() ? 0 : 1;
}

int cmd_postulation(Session& s) {
  const auto ideals = s.ideal_list(1, 3);
  s.report().inputs["box"] = num(s.opt().box);
  const int arity = static_cast<int>(ideals.size());
  FiltrationCache& normal = s.cache(ideals);
  CheckReport r;
  if (s.opt().adic) {
    s.report().inputs["compare_against"] = "adic";
    const HilbertPoly p = stabilized_fit(normal, arity);
    s.report().outputs["polynomial"] = poly_json(p);
    r = postulation_check(p, s.cache(ideals, FiltrationKind::Adic), s.opt().box);
  } else {
    r = postulation_check(normal, arity, s.opt().box);
  }
  s.report().verdicts["postulation"] = check_json(r);
  if (!r.failures.empty()) s.report().witnesses["failures"] = check_failures_json(r, s.ring());
  return r.passed ? 0 : 1;
}

int cmd_equivalences(Session& s) {
  const JrTriple t = s.triple();
  s.bound_input();
  const CriterionReport r = evaluate_equivalences(t, s.opt().bound, s.cache(t.hosts()));
  ojson e3;
  for (const char* k : {"I", "J", "K", "IJ", "IK", "JK", "IJK"}) e3[k] = num(r.e3_values.at(k));
  s.report().outputs["e3"] = std::move(e3);
  s.report().outputs["criterion_sum"] = num(r.criterion_sum);
  s.report().outputs["lc_origin"] = num(r.lc_origin);
  s.report().outputs["lc_stable_k"] = num(r.lc_stable_k);
  s.report().verdicts["criterion_sum_zero"] = r.criterion_sum == 0;
  s.report().verdicts["jrn_zero"] = jr_json(r.jrn_zero);
  s.report().verdicts["lc_origin_zero"] = r.lc_origin == 0;
  s.report().verdicts["consistent"] = r.consistent;
  if (r.jrn_zero.first_failure) {
    s.report().witnesses["jrn_zero_failure"] = jr_failure_json(*r.jrn_zero.first_failure, s.ring());
  }
  if (!r.notes.empty()) s.report().outputs["notes"] = r.notes;
  return r.consistent ? 0 : 1;
}

int cmd_mixed_relations(Session& s) {
  auto [I, J, K] = s.host_ideals();
  const CheckReport r = mixed_coefficient_relations(I, J, K);
  s.report().verdicts["mixed_relations"] = check_json(r);
  return r.passed ? 0 : 1;
}

int cmd_corpus(Session& s) {
  s.bound_input();
  s.report().inputs["seed"] = num(static_cast<std::int64_t>(s.opt().seed));
  s.report().inputs["count"] = num(static_cast<std::int64_t>(s.opt().count));
  s.report().inputs["max_exponent"] = num(s.opt().max_exponent);
  const Corpus c = admissible_corpus(s.opt().seed, s.opt().count, s.opt().max_exponent, s.opt().bound,
                                     std::max<std::size_t>(s.opt().count * 50, 100));
  ojson list = ojson::array();
  for (const auto& e : c.admissible) {
    ojson j;
    j["sample"] = num(static_cast<std::int64_t>(e.sample));
    j["I"] = ideal_json(e.triple.I);
    j["J"] = ideal_json(e.triple.J);
    j["K"] = ideal_json(e.triple.K);
    j["a"] = monomial_json(e.triple.a, e.triple.I.ring());
    j["b"] = monomial_json(e.triple.b, e.triple.I.ring());
    j["c"] = monomial_json(e.triple.c, e.triple.I.ring());
    list.push_back(std::move(j));
  }
  s.report().outputs["sampled"] = num(static_cast<std::int64_t>(c.sampled));
  s.report().outputs["admissible"] = std::move(list);
  return 0;
}

bool wants_json(const std::vector<std::string>& args) {
  return std::find(args.begin(), args.end(), "--json") != args.end();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Normal Hilbert coefficients and joint reductions of monomial ideals", "mrees"};
  app.require_subcommand(1);
  app.add_option("--ring", opt.ring, "Comma-separated variable names (at most three)")->capture_default_str();
  app.add_option("--bound", opt.bound, "Range for bounded verification")->capture_default_str();
  app.add_flag("--json", opt.json, "Machine-readable output, one JSON object per report");
  app.add_option("--cache", opt.cache_path, "Append-only filtration cache file");
  app.add_option("--seed", opt.seed, "Seed for corpus sampling")->capture_default_str();
  app.add_option("--def", opt.defs, "Named binding NAME=EXPR (repeatable, earlier names visible to later ones)");

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto command = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto with_ideals = [&](CLI::App* sub) { sub->add_option("ideals", opt.ideals, "Ideal expressions"); };
  auto with_triple = [&](CLI::App* sub) {
    sub->add_option("ideals", opt.ideals, "I J K as positional expressions");
    sub->add_option("--I", opt.I, "Ideal I");
    sub->add_option("--J", opt.J, "Ideal J");
    sub->add_option("--K", opt.K, "Ideal K");
    sub->add_option("--a", opt.a, "Element a of I");
    sub->add_option("--b", opt.b, "Element b of J");
    sub->add_option("--c", opt.c, "Element c of K");
  };
  auto with_point = [&](CLI::App* sub) {
    sub->add_option("--point", opt.point, "Grade r,s,t")->capture_default_str();
  };

  with_ideals(command("closure", "Integral closure via the Newton polyhedron", cmd_closure));
  with_ideals(command("colength", "Colength of an m-primary ideal", cmd_colength));
  {
    CLI::App* sub = command("hilbert-fit", "Fit the normal Hilbert polynomial of 1-3 ideals", cmd_hilbert_fit);
    with_ideals(sub);
    sub->add_option("--arity", opt.arity, "Arity (defaults to the number of ideals)");
    sub->add_option("--offset", opt.offset, "Sampling offset")->capture_default_str();
    sub->add_flag("--stabilize", opt.stabilize, "Increase the offset until consecutive fits agree");
  }
  with_ideals(command("e-coeffs", "e0..e3 of the normal filtration of one ideal", cmd_e_coeffs));
  with_triple(command("criterion", "e3 values and the alternating criterion sum", cmd_criterion));
  with_triple(command("check-jrn", "Joint reduction number zero up to --bound",
                      [](Session& s) { return jr_command(s, false); }));
  with_triple(command("check-good-jr", "Good joint reduction up to --bound",
                      [](Session& s) { return jr_command(s, true); }));
  {
    CLI::App* sub = command("km-lengths", "Homology lengths h0, h1, h2 of the graded complex", cmd_km_lengths);
    with_triple(sub);
    with_point(sub);
  }
  {
    CLI::App* sub = command("length-identity", "Length and Euler identities at a grade", cmd_length_identity);
    with_triple(sub);
    with_point(sub);
  }
  {
    CLI::App* sub = command("s-length", "Origin length S(r,s,t)", cmd_s_length);
    with_triple(sub);
    with_point(sub);
  }
  {
    CLI::App* sub = command("lc-origin", "Stable value of S(k,k,k)", cmd_lc_origin);
    with_triple(sub);
    sub->add_option("--max-k", opt.max_k, "Largest k tried (default max(bound,2)+2)");
  }
  {
    CLI::App* sub = command("reduction-number", "Normal reduction number and e3", cmd_reduction_number);
    with_ideals(sub);
    sub->add_option("--reduction", opt.reduction, "Minimal reduction (defaults to the pure powers)");
  }
  with_ideals(command("vitulli", "Completeness of products from those of total exponent <= 2", cmd_vitulli));
  {
    CLI::App* sub = command("postulation", "Hilbert polynomial against Hilbert function on [0,box]", cmd_postulation);
    with_ideals(sub);
    sub->add_option("--box", opt.box, "Grid size")->capture_default_str();
    sub->add_flag("--adic", opt.adic, "Compare against the adic Hilbert function");
  }
  with_triple(command("equivalences", "Criterion sum, jrn-zero and origin length verdicts", cmd_equivalences));
  with_triple(command("mixed-relations", "Relations among mixed normal Hilbert coefficients", cmd_mixed_relations));
  {
    CLI::App* sub = command("corpus", "Seeded admissible triples of random m-primary ideals", cmd_corpus);
    sub->add_option("--count", opt.count, "Admissible triples wanted")->capture_default_str();
    sub->add_option("--max-exponent", opt.max_exponent, "Largest generator exponent")->capture_default_str();
  }

  // CLI11 parses argv in reverse from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (wants_json(args)) {
      ojson j;
      j["command"] = nullptr;
      j["error"] = {{"type", "UsageError"}, {"message", e.what()}};
      out << j.dump() << '\n';
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Report report;
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    report.command = sub->get_name();
    try {
      Session session(opt, report, err);
      code = handler(session);
    } catch (const Error& e) {
      code = is_usage_error(e) ? 2 : 1;
      report.error = ojson{{"type", error_type(e)}, {"message", e.what()}};
      err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
      code = 1;
      report.error = ojson{{"type", "InternalError"}, {"message", e.what()}};
      err << "error: " << e.what() << '\n';
    }
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.emit(out, opt.json);
  return code;
}

}  // namespace mrees::cli
