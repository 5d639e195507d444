#include "cli.hpp"

#include "kappa/catalog.hpp"
#include "kappa/fixed_point_json.hpp"
#include "kappa/localization.hpp"
#include "kappa/obstruction.hpp"
#include "kappa/su2rep.hpp"
#include "kappa/symalg.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

namespace kappa::cli {

namespace {

using nlohmann::json;

enum class Format { text, json };

struct Result {
  int code = kOk;
  json body;
  std::string text;
};

void emit(std::ostream& out, Format fmt, const Result& r) {
  if (fmt == Format::json) out << r.body.dump(2) << '\n';
  else out << r.text;
}

int classify(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

// Runs work(i) for every input on up to `jobs` threads and prints the
// results in input order.
int run_batch(const std::vector<std::string>& inputs, unsigned jobs, Format fmt, std::ostream& out, std::ostream& err,
              const std::function<Result(const std::string&)>& work) {
  std::vector<Result> results(inputs.size());
  std::vector<std::string> errors(inputs.size());
  auto one = [&](std::size_t i) {
    std::ostringstream local_err;
    results[i].code = classify(local_err, [&] {
      const auto code = results[i].code;
      results[i] = work(inputs[i]);
      return std::max(code, results[i].code);
    });
    errors[i] = local_err.str();
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(inputs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) one(i);
      });
    }
  }

  int code = kOk;
  json array = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    code = std::max(code, results[i].code);
    if (!errors[i].empty()) {
      err << inputs[i] << ": " << errors[i];
      continue;
    }
    if (fmt == Format::json) {
      json body = results[i].body;
      body["input"] = inputs[i];
      array.push_back(std::move(body));
    } else {
      if (inputs.size() > 1) out << "== " << inputs[i] << '\n';
      out << results[i].text;
    }
  }
  if (fmt == Format::json) out << (inputs.size() == 1 && !array.empty() ? array[0] : array).dump(2) << '\n';
  return code;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string flags_text(const HypothesisFlags& f) {
  std::vector<std::string> parts;
  if (f.rationally_odd) parts.emplace_back("rationally-odd");
  if (f.negative_euler_char) parts.emplace_back("neg-euler");
  if (f.nontrivial_action_assumed) parts.emplace_back("nontrivial-action");
  return parts.empty() ? "none" : join(parts, ",");
}

HypothesisFlags resolve_flags(const std::optional<std::string>& flags, std::ostream& err) {
  if (!flags) {
    err << "warning: --flags not given; assuming rationally-odd,neg-euler,nontrivial-action\n";
    return HypothesisFlags::all_set();
  }
  return parse_hypothesis_flags(*flags);
}

Result verdict_result(const BVector& b, const Verdict& v) {
  Result r;
  r.body = to_json(v);
  r.body["b"] = to_json(b);
  std::ostringstream t;
  t << "b: " << b.to_string() << '\n';
  t << "verdict: " << to_string(v.status) << '\n';
  if (v.gcd) t << "gcd: " << to_string(*v.gcd) << '\n';
  for (const auto& reason : v.reasons) {
    t << "reason: " << reason.to_string() << '\n';
    if (reason.kind == VerdictReason::Kind::gcd_has_odd_prime) {
      t << "witness prime: " << to_string(reason.value) << '\n';
      r.body["witness_prime"] = to_string(reason.value);
    }
  }
  if (!v.hypotheses_hold) t << "note: hypotheses not all asserted; the verdict is not a theorem for this input\n";
  r.text = t.str();
  return r;
}

Result expected_check(const FixedPointFile& f) {
  Result r;
  r.body["checks"] = json::array();
  std::ostringstream t;
  for (const auto& e : f.expected) {
    auto value = localize_circle(f.data, e.class_monomial);
    if (e.generator == Generator::c2) value = lift_to_su2(value);
    const bool match = value.coefficient == e.coefficient && value.generator_power == e.power;
    if (!match) r.code = kDomainError;
    json check = to_json(value);
    check["expected_coefficient"] = to_string(e.coefficient);
    check["expected_power"] = e.power;
    check["match"] = match;
    r.body["checks"].push_back(check);
    t << "kappa_e" << (e.class_monomial.is_unit() ? "" : "*" + e.class_monomial.to_string()) << " = "
      << to_string(value.coefficient) << " " << to_string(value.generator) << "^" << value.generator_power
      << (match ? "  [matches expected]" : "  [MISMATCH: expected " + to_string(e.coefficient) + "]") << '\n';
  }
  if (f.expected.empty()) t << "no expected annotations; pass --class to evaluate a class\n";
  r.text = t.str();
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tautological-class localization and SU(2) obstruction checks", "kappa-forge"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output encoding")
      ->envname("KAPPA_FORGE_FORMAT")
      ->check(CLI::IsMember({"json", "text"}));

  // sigma
  std::string sigma_class, sigma_weights;
  auto* sigma = app.add_subcommand("sigma", "Evaluate sigma_c on circle weights");
  sigma->add_option("--class", sigma_class, "Class monomial, e.g. e*p1^2")->required();
  sigma->add_option("--weights", sigma_weights, "Comma-separated integer weights")->required();

  // localize / pullback-su2
  std::vector<std::string> inputs;
  std::optional<std::string> localize_class;
  unsigned jobs = 1;
  auto* localize = app.add_subcommand("localize", "Localize kappa_{ec} over BS^1 from fixed-point data");
  localize->add_option("--input", inputs, "Fixed-point data file(s)")->required();
  localize->add_option("--class", localize_class, "Class c; without it, every expected annotation is checked");
  localize->add_option("--jobs", jobs, "Worker threads for multiple inputs")->check(CLI::PositiveNumber);

  unsigned pontryagin_index = 0;
  auto* pullback = app.add_subcommand("pullback-su2", "kappa_{e p_i} over BSU(2) and b_i");
  pullback->add_option("--input", inputs, "Fixed-point data file(s)")->required();
  pullback->add_option("--i", pontryagin_index, "Pontryagin index i")->required();
  pullback->add_option("--jobs", jobs, "Worker threads for multiple inputs")->check(CLI::PositiveNumber);

  // theorem-a
  std::string b_text;
  std::optional<std::string> flags_opt;
  auto* theorem_a = app.add_subcommand("theorem-a", "Integrality and gcd test on a b-vector");
  theorem_a->add_option("--b", b_text, "Comma-separated rationals b_1..b_n")->required();
  theorem_a->add_option("--flags", flags_opt, "rationally-odd,neg-euler,nontrivial-action (default: all)");

  // adams
  std::string adams_k, adams_b, adams_weights, adams_degree;
  bool certify = false;
  auto* adams = app.add_subcommand("adams", "Apply psi_k to a b-vector, optionally certifying non-kineticity");
  auto* k_opt = adams->add_option("--k", adams_k, "Odd k >= 1");
  auto* b_opt = adams->add_option("--b", adams_b, "Base b-vector");
  auto* w_opt = adams->add_option("--weights", adams_weights, "Derive the base b-vector from weights");
  auto* deg_opt = adams->add_option("--degree", adams_degree, "Only test whether d is a self-map loop degree");
  adams->add_flag("--certify", certify, "Emit a non-kinetic certificate");
  adams->add_option("--flags", flags_opt, "Hypotheses for --certify (default: all)");
  b_opt->excludes(w_opt);
  deg_opt->excludes(k_opt)->excludes(b_opt)->excludes(w_opt);

  // su2
  std::string rep_text;
  auto* restrict = app.add_subcommand("su2-restrict", "Restrict a real SU(2) representation to the torus");
  restrict->add_option("--rep", rep_text, "e.g. V3+V4+2*V1")->required();
  std::string realize_weights_text;
  auto* realize = app.add_subcommand("su2-realize", "Find a real SU(2) representation with given torus weights");
  realize->add_option("--weights", realize_weights_text, "Comma-separated weights")->required();

  // betti
  std::optional<std::uint64_t> w_even, w_odd, m_even, m_odd;
  std::string betti_list;
  auto* betti = app.add_subcommand("betti", "Fixed-set Betti feasibility or rationally-odd check");
  auto* we = betti->add_option("--w-even", w_even, "b_even(W)");
  auto* wo = betti->add_option("--w-odd", w_odd, "b_odd(W)");
  auto* me = betti->add_option("--m-even", m_even, "b_even(M)");
  auto* mo = betti->add_option("--m-odd", m_odd, "b_odd(M)");
  auto* bl = betti->add_option("--betti", betti_list, "b_0,...,b_2n of W");
  we->needs(wo)->needs(me)->needs(mo);
  bl->excludes(we)->excludes(wo)->excludes(me)->excludes(mo);

  // catalog
  std::string family;
  std::int64_t cat_k = -1;
  unsigned cat_n = 0, cat_g = 0;
  std::string out_path;
  auto* catalog = app.add_subcommand("catalog", "Generate worked example data");
  catalog->add_option("family", family, "s2xs2 or wg")->required()->check(CLI::IsMember({"s2xs2", "wg"}));
  catalog->add_option("--k", cat_k, "Even k >= 0 (s2xs2)");
  catalog->add_option("--n", cat_n, "Odd n >= 3 (wg)");
  catalog->add_option("--g", cat_g, "Number of summands g >= 1 (wg)");
  catalog->add_option("--out", out_path, "Write fixed-point data here");

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i].starts_with("-")) continue;
    const auto subs = app.get_subcommands([&](const CLI::App* s) { return s->get_name() == args[i]; });
    if (subs.empty()) {
      err << "error: unknown subcommand '" << args[i] << "'\n";
      return kUsageError;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const Format fmt = format == "json" ? Format::json : Format::text;

  if (*sigma) {
    return classify(err, [&] {
      const auto w = WeightVector(parse_int_list(sigma_weights));
      if (w.size() == 0) throw InvalidArgument("empty weight vector");
      const auto c = parse_monomial(sigma_class, static_cast<unsigned>(w.size()));
      const auto value = sigma_eval(c, w);
      Result r;
      r.body = {{"class", reduce_monomial(c).to_string()},
                {"weights", std::vector<std::int64_t>(w.values().begin(), w.values().end())},
                {"value", to_string(value)}};
      r.text = to_string(value) + "\n";
      emit(out, fmt, r);
      return kOk;
    });
  }

  if (*localize) {
    return run_batch(inputs, jobs, fmt, out, err, [&](const std::string& path) {
      const auto f = read_fixed_point_file(path);
      Result r;
      for (const auto& d : validate_fixed_data(f.data)) {
        if (d.severity == Diagnostic::Severity::info) r.text += "info: " + d.message + "\n";
      }
      if (!localize_class) {
        auto checked = expected_check(f);
        checked.text = r.text + checked.text;
        return checked;
      }
      const auto value = localize_circle(f.data, parse_monomial(*localize_class, f.data.fiber_half_dim));
      r.body = to_json(value);
      r.text += to_string(value.coefficient) + " gamma^" + std::to_string(value.generator_power) + "\n";
      return r;
    });
  }

  if (*pullback) {
    return run_batch(inputs, jobs, fmt, out, err, [&](const std::string& path) {
      const auto f = read_fixed_point_file(path);
      const auto p = pullback_su2(f.data, pontryagin_index);
      Result r;
      r.body = to_json(p.value);
      r.body["b"] = to_string(p.b);
      r.body["i"] = pontryagin_index;
      r.text = "kappa_e*p" + std::to_string(pontryagin_index) + " = " + to_string(p.value.coefficient) + " c2^" +
               std::to_string(p.value.generator_power) + "\n" + "b" + std::to_string(pontryagin_index) + " = " +
               to_string(p.b) + "\n";
      return r;
    });
  }

  if (*theorem_a) {
    return classify(err, [&] {
      const BVector b(parse_rational_list(b_text));
      const auto flags = resolve_flags(flags_opt, err);
      emit(out, fmt, verdict_result(b, theorem_a_check(b, flags)));
      return kOk;
    });
  }

  if (*adams) {
    return classify(err, [&] {
      if (*deg_opt) {
        const auto d = parse_rational(adams_degree);
        if (!is_integral(d)) throw InvalidArgument("degree must be an integer");
        const bool ok = self_map_degree_realizable(d.get_num());
        Result r;
        r.body = {{"degree", adams_degree}, {"realizable", ok}};
        r.text = std::string(ok ? "realizable" : "not realizable") + "\n";
        emit(out, fmt, r);
        return kOk;
      }
      if (!*k_opt) throw InvalidArgument("--k is required");
      if (!*b_opt && !*w_opt) throw InvalidArgument("one of --b or --weights is required");
      const auto kq = parse_rational(adams_k);
      if (!is_integral(kq)) throw InvalidArgument("--k must be an integer");
      const Integer k = kq.get_num();
      const BVector base = *w_opt ? weights_to_b(WeightVector(parse_int_list(adams_weights)))
                                  : BVector(parse_rational_list(adams_b));
      Result r;
      if (!certify) {
        const auto t = adams_transform(k, base);
        r.body = {{"k", to_string(k)}, {"b_base", to_json(base)}, {"b_transformed", to_json(t)}};
        r.text = t.to_string() + "\n";
        emit(out, fmt, r);
        return kOk;
      }
      const auto flags = resolve_flags(flags_opt, err);
      const auto result = nonkinetic_certificate(base, k, flags);
      if (const auto* cert = std::get_if<NonkineticCertificate>(&result)) {
        r.body = to_json(*cert);
        std::ostringstream t;
        t << "k: " << to_string(cert->k) << '\n'
          << "b_base: " << cert->b_base.to_string() << '\n'
          << "b_transformed: " << cert->b_transformed.to_string() << '\n'
          << "gcd: " << to_string(cert->gcd) << '\n'
          << "witness prime: " << to_string(cert->witness_prime) << '\n'
          << "hypotheses: " << flags_text(cert->hypotheses) << '\n'
          << "conclusion: non-kinetic\n";
        r.text = t.str();
      } else {
        const auto& na = std::get<NotApplicable>(result);
        r.body = {{"conclusion", "not_applicable"}, {"reason", na.reason}};
        r.body["gcd"] = na.gcd ? json(to_string(*na.gcd)) : json(nullptr);
        r.text = "not applicable: " + na.reason + (na.gcd ? " (gcd " + to_string(*na.gcd) + ")" : "") + "\n";
      }
      emit(out, fmt, r);
      return kOk;
    });
  }

  if (*restrict) {
    return classify(err, [&] {
      const auto rep = parse_real_rep(rep_text);
      const auto w = restrict_to_torus(rep);
      Result r;
      r.body = {{"rep", rep.to_string()}, {"weights", w.entries()}, {"dim", rep.total_dim()}};
      r.text = "weights: " + w.to_string() + "\n";
      if (rep.is_nontrivial()) {
        const auto check = check_weight_constraints(w, rep.total_dim());
        r.body["constraints_ok"] = check.ok();
        r.body["constraints"] = check.reason();
        r.text += "weight constraints: " + check.reason() + "\n";
      }
      emit(out, fmt, r);
      return kOk;
    });
  }

  if (*realize) {
    return classify(err, [&] {
      const auto w = parse_weight_multiset(realize_weights_text);
      const auto rep = realize_weights(w);
      Result r;
      r.body = {{"weights", w.entries()}, {"feasible", rep.has_value()}};
      if (rep) r.body["rep"] = rep->to_string();
      r.text = rep ? rep->to_string() + "\n" : "infeasible\n";
      emit(out, fmt, r);
      return rep ? kOk : kDomainError;
    });
  }

  if (*betti) {
    return classify(err, [&] {
      Result r;
      if (*bl) {
        std::vector<std::uint64_t> b;
        for (auto x : parse_int_list(betti_list)) {
          if (x < 0) throw InvalidArgument("Betti numbers must be non-negative");
          b.push_back(static_cast<std::uint64_t>(x));
        }
        const auto res = rationally_odd_check(b);
        r.body = {{"rationally_odd", res.rationally_odd}, {"euler_char", res.euler_char}, {"warnings", res.warnings}};
        r.text = std::string("rationally odd: ") + (res.rationally_odd ? "yes" : "no") + "\n" +
                 "euler characteristic: " + std::to_string(res.euler_char) + "\n";
        for (const auto& wmsg : res.warnings) err << "warning: " << wmsg << '\n';
      } else if (w_even) {
        const auto res = betti_feasible(*w_even, *w_odd, *m_even, *m_odd);
        r.body = {{"feasible", res.feasible}};
        r.body["k"] = res.k ? json(*res.k) : json(nullptr);
        r.text = res.feasible ? "feasible, k = " + std::to_string(*res.k) + "\n" : "infeasible\n";
      } else {
        throw InvalidArgument("betti needs --betti or all of --w-even --w-odd --m-even --m-odd");
      }
      emit(out, fmt, r);
      return kOk;
    });
  }

  if (*catalog) {
    return classify(err, [&] {
      Result r;
      if (family == "s2xs2") {
        if (cat_k < 0) throw InvalidArgument("catalog s2xs2 needs --k (even, >= 0)");
        const auto entry = s2xs2_family(cat_k);
        const auto file = entry.to_file();
        if (out_path.empty()) {
          out << to_json(file).dump(2) << '\n';
          return kOk;
        }
        write_fixed_point_file(out_path, file);
        const auto p = pullback_su2(entry.data, 1);
        r.body = {{"label", entry.label}, {"out", out_path}, {"kappa_e_p1", to_string(p.value.coefficient)},
                  {"b1", to_string(p.b)}};
        r.text = "wrote " + out_path + " (" + entry.label + "): kappa_e*p1 = " + to_string(p.value.coefficient) +
                 " c2, b1 = " + to_string(p.b) + "\n";
      } else {
        if (cat_n == 0 || cat_g == 0) throw InvalidArgument("catalog wg needs --n and --g");
        if (!out_path.empty()) throw InvalidArgument("catalog wg emits a report only; --out is not supported");
        const auto rep = wg_hypothesis_report(cat_n, cat_g);
        r.body = rep.to_json();
        std::ostringstream t;
        t << "W_g = #^" << rep.g << "(S^" << rep.n << " x S^" << rep.n << ")\n"
          << "euler characteristic: " << rep.euler_char << '\n'
          << "rationally odd: " << (rep.rationally_odd ? "yes" : "no") << '\n'
          << "building-block fixed set: " << rep.block_fixed_set << '\n'
          << "hypotheses: " << flags_text(rep.hypotheses) << '\n'
          << "obstruction applies: " << (rep.theorems_apply ? "yes" : "no") << '\n';
        r.text = t.str();
      }
      emit(out, fmt, r);
      return kOk;
    });
  }

  return kUsageError;
}

}  // namespace kappa::cli
