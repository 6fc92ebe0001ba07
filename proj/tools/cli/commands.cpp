#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/render.hpp"
#include "cli/report.hpp"

namespace cfknot::cli {

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInapplicable = 4;

struct OutputSink {
  bool json_mode = false;
  std::string out_path;

  void write(const std::string& text, const json& j) const {
    const std::string payload = json_mode ? j.dump(2) + "\n" : text;
    if (out_path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open output file: " + out_path);
    }
    file << payload;
  }
};

std::string join_ints(const std::vector<Int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << values[i];
  }
  return os.str();
}

CLI::App* add_sub(CLI::App& parent, const std::string& name,
                  const std::string& description) {
  CLI::App* sub = parent.add_subcommand(name, description);
  sub->fallthrough();
  return sub;
}

void run_cf_eval(const OutputSink& sink, const std::string& operand) {
  const ContinuedFraction cf{parse_coefficients(operand)};
  const ProjectiveRational value = evaluate(cf);
  sink.write(value.str() + "\n", {{"value", value.str()}});
}

void run_cf_expand(const OutputSink& sink, const std::string& operand) {
  const ContinuedFraction cf = expand(parse_rational(operand));
  sink.write(join_ints(cf.coefficients) + "\n",
             {{"coefficients", coefficients_json(cf.coefficients)}});
}

void run_curve(const OutputSink& sink, const std::string& operand,
               const std::string& intersect_with) {
  const CurveClass curve =
      curve_from_cf(ContinuedFraction{parse_coefficients(operand)});
  json j = curve_json(curve);
  std::ostringstream text;
  text << curve << "\n";
  if (!intersect_with.empty()) {
    const CurveClass other = parse_curve(intersect_with);
    const Int crossings = intersection(curve, other);
    j["intersect_with"] = curve_json(other);
    j["intersection"] = int_str(crossings);
    text << "intersection with " << other << ": " << crossings << "\n";
  }
  sink.write(text.str(), j);
}

void run_twist(const OutputSink& sink, const std::string& word_text,
               const std::string& curve_text) {
  const TwistWord word = parse_twist_word(word_text);
  const CurveClass image = apply_twist_word(word, parse_curve(curve_text));
  std::ostringstream text;
  text << image << "\n";
  sink.write(text.str(), curve_json(image));
}

void run_genus(const OutputSink& sink, const std::string& curve_text,
               const std::vector<std::string>& ktw_args) {
  if (!ktw_args.empty()) {
    if (!curve_text.empty()) {
      throw ParseError("genus takes either a curve or --ktw, not both");
    }
    const Int r = parse_integer(ktw_args[0]);
    const Int s = parse_integer(ktw_args[1]);
    const Int genus = ktw_genus(r, s);
    sink.write(int_str(genus) + "\n", {{"genus", int_str(genus)},
                                       {"r", int_str(r)},
                                       {"s", int_str(s)}});
    return;
  }
  if (curve_text.empty()) {
    throw ParseError("genus needs a curve operand or --ktw r s");
  }
  const CurveClass curve = parse_curve(curve_text);
  const auto [p, q] = to_cb_basis(curve);
  const BraidCounts counts = braid_counts(p, q);
  const Int chi = counts.strands - counts.crossings;
  const Int genus = fibered_genus_pq(p, q);
  sink.write(int_str(genus) + "\n",
             {{"genus", int_str(genus)},
              {"p", int_str(counts.p)},
              {"q", int_str(counts.q)},
              {"strands", int_str(counts.strands)},
              {"crossings", int_str(counts.crossings)},
              {"euler_characteristic", int_str(chi)}});
}

void run_small(const OutputSink& sink, const std::string& operand) {
  const SmallnessProblem problem{parse_coefficients(operand)};
  const auto witnesses = enumerate_witnesses(problem);
  const bool small = witnesses.empty();
  std::ostringstream text;
  text << "small: " << (small ? "true" : "false") << "\n";
  for (const auto& w : witnesses) {
    text << "witness " << witness_str(w) << "\n";
  }
  sink.write(text.str(), {{"applicable", true},
                          {"coefficients", coefficients_json(problem.coefficients)},
                          {"small", small},
                          {"witnesses", witnesses_json(witnesses)}});
}

void run_scan(const OutputSink& sink, const std::string& r_text,
              const std::string& s_text, const std::string& lo_text,
              const std::string& hi_text) {
  const Int r = parse_integer(r_text);
  const Int s = parse_integer(s_text);
  const Int lo = parse_integer(lo_text);
  const Int hi = parse_integer(hi_text);
  const auto scan = family_smallness_scan(r, s, lo, hi);

  // The family is not small exactly at n in {r-1, r} once n >= 2; collect
  // both sides of that claim for the summary.
  std::vector<Int> expected;
  for (const Int& candidate : {Int(r - 1), r}) {
    if (candidate >= 2 && candidate >= lo && candidate <= hi) {
      expected.push_back(candidate);
    }
  }
  std::vector<Int> observed;
  for (const auto& [n, entry] : scan) {
    if (n >= 2 && entry.applicable && !entry.small) {
      observed.push_back(n);
    }
  }
  const bool pattern_match = expected == observed;

  json entries = json::array();
  std::ostringstream text;
  for (const auto& [n, entry] : scan) {
    json e;
    e["n"] = int_str(n);
    e["applicable"] = entry.applicable;
    if (entry.applicable) {
      e["small"] = entry.small;
      e["witnesses"] = witnesses_json(entry.witnesses);
      text << "n=" << n << (entry.small ? " small" : " not-small");
      if (!entry.small) {
        text << " witnesses=" << entry.witnesses.size();
      }
      text << "\n";
    } else {
      e["witnesses"] = json::array();
      text << "n=" << n << " inapplicable\n";
    }
    entries.push_back(e);
  }

  json expected_json = json::array();
  for (const Int& n : expected) {
    expected_json.push_back(int_str(n));
  }
  json observed_json = json::array();
  for (const Int& n : observed) {
    observed_json.push_back(int_str(n));
  }
  text << "summary: not-small for n>=2 at {" << join_ints(observed)
       << "}; expected {r-1,r} gives {" << join_ints(expected) << "}; "
       << (pattern_match ? "pattern match" : "PATTERN MISMATCH") << "\n";

  sink.write(text.str(),
             {{"entries", entries},
              {"summary",
               {{"r", int_str(r)},
                {"s", int_str(s)},
                {"expected_not_small", expected_json},
                {"observed_not_small", observed_json},
                {"pattern_match", pattern_match}}}});
}

void run_growth(const OutputSink& sink, const std::string& b0_text,
                const std::string& b1_text, const std::string& eps_text) {
  const bool has_pair = !b0_text.empty() || !b1_text.empty();
  if (has_pair && (b0_text.empty() || b1_text.empty())) {
    throw ParseError("growth needs both b0 and b1");
  }
  if (!has_pair && eps_text.empty()) {
    throw ParseError("growth needs b0 and b1, or --epsilon");
  }
  json j;
  std::ostringstream text;
  if (has_pair) {
    const BridgeIndices bridge(parse_integer(b0_text), parse_integer(b1_text));
    const GrowthRateBound bound = growth_rate_bound(bridge);
    j.update(growth_json(bridge, bound));
    text << "min: " << bound.min_bound << "\n"
         << "max: " << bound.max_bound << "\n";
  }
  if (!eps_text.empty()) {
    const ProjectiveRational eps = parse_rational(eps_text);
    const Int target = epsilon_target(eps);
    j["epsilon"] = eps.str();
    j["b1_target"] = int_str(target);
    text << "b1_target: " << target << "\n";
  }
  sink.write(text.str(), j);
}

void run_surgery(const OutputSink& sink, const std::string& r_text,
                 const std::string& s_text, const std::string& n_text,
                 const std::string& link, bool figure_variant) {
  const FamilyParams params(parse_integer(r_text), parse_integer(s_text),
                            parse_integer(n_text));
  const SurgeryDescription description =
      link == "l7" ? l7_description(params)
                   : c7_description(params, figure_variant);
  sink.write(export_text(description), description_json(description));
}

void run_report(const OutputSink& sink, const std::string& r_text,
                const std::string& s_text, const std::string& n_text,
                const std::string& b0_text, const std::string& b1_text,
                bool figure_variant) {
  const FamilyParams params(parse_integer(r_text), parse_integer(s_text),
                            parse_integer(n_text));
  std::optional<BridgeIndices> bridge;
  if (!b0_text.empty()) {
    bridge.emplace(parse_integer(b0_text), parse_integer(b1_text));
  }
  const FamilyReport report = build_family_report(params, bridge, figure_variant);
  sink.write(report_text(report), report_json(report));
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "exact invariants and surgery exports for continued-fraction knots "
      "on the trefoil fiber"};
  app.require_subcommand(1);

  OutputSink sink;
  app.add_flag("--json", sink.json_mode, "emit machine-readable JSON");
  app.add_option("--out", sink.out_path,
                 "write output to a file instead of stdout");

  // cf
  CLI::App* cf = add_sub(app, "cf", "evaluate or expand a continued fraction");
  cf->require_subcommand(1);
  std::string cf_eval_operand;
  CLI::App* cf_eval =
      add_sub(*cf, "eval", "exact value of a coefficient list b1,...,bk");
  cf_eval->add_option("coefficients", cf_eval_operand,
                      "comma-separated integers, e.g. 3,-2,5")
      ->required();
  cf_eval->callback([&] { run_cf_eval(sink, cf_eval_operand); });

  std::string cf_expand_operand;
  CLI::App* cf_expand =
      add_sub(*cf, "expand", "canonical coefficient list of a rational m/n");
  cf_expand->add_option("value", cf_expand_operand, "reduced fraction, e.g. 2/7")
      ->required();
  cf_expand->callback([&] { run_cf_expand(sink, cf_expand_operand); });

  // curve
  std::string curve_operand;
  std::string curve_intersect;
  CLI::App* curve =
      add_sub(app, "curve", "curve class of a continued-fraction knot");
  curve->add_option("coefficients", curve_operand, "coefficient list")
      ->required();
  curve->add_option("--intersect", curve_intersect,
                    "also print the intersection number with this curve "
                    "(a, b, or m/n)");
  curve->callback([&] { run_curve(sink, curve_operand, curve_intersect); });

  // twist
  std::string twist_word;
  std::string twist_curve;
  CLI::App* twist =
      add_sub(app, "twist", "apply a Dehn-twist word to a curve class");
  twist->add_option("word", twist_word,
                    "letters curve^exponent, rightmost applied first, "
                    "e.g. \"b^-3 a^2 b^-5\"")
      ->required();
  twist->add_option("curve", twist_curve, "a, b, or a slope m/n")->required();
  twist->callback([&] { run_twist(sink, twist_word, twist_curve); });

  // genus
  std::string genus_curve;
  std::vector<std::string> genus_ktw;
  CLI::App* genus =
      add_sub(app, "genus", "fibered genus via the positive braid form");
  genus->add_option("curve", genus_curve, "a, b, or a slope m/n");
  genus->add_option("--ktw", genus_ktw,
                    "closed-form genus of the twist curve for parameters r s")
      ->expected(2);
  genus->callback([&] { run_genus(sink, genus_curve, genus_ktw); });

  // small
  std::string small_operand;
  CLI::App* small = add_sub(
      app, "small", "closed essential surface witnesses for a coefficient list");
  small->add_option("coefficients", small_operand, "coefficient list")
      ->required();
  small->callback([&] { run_small(sink, small_operand); });

  // scan
  std::string scan_r, scan_s, scan_lo, scan_hi;
  CLI::App* scan =
      add_sub(app, "scan", "smallness verdicts for [r,-s,n] over a range of n");
  scan->add_option("r", scan_r, "r >= 3")->required();
  scan->add_option("s", scan_s, "s >= 2")->required();
  scan->add_option("n_min", scan_lo, "range start")->required();
  scan->add_option("n_max", scan_hi, "range end")->required();
  scan->callback([&] { run_scan(sink, scan_r, scan_s, scan_lo, scan_hi); });

  // growth
  std::string growth_b0, growth_b1, growth_eps;
  CLI::App* growth = add_sub(
      app, "growth", "growth-rate bound from bridge indices, or an epsilon target");
  growth->add_option("b0", growth_b0, "bridge index (b0 > b1)");
  growth->add_option("b1", growth_b1, "torus bridge index");
  growth->add_option("--epsilon", growth_eps,
                     "smallest b1 with 1 - 1/b1 > 1 - epsilon");
  growth->callback([&] { run_growth(sink, growth_b0, growth_b1, growth_eps); });

  // surgery
  std::string surgery_r, surgery_s, surgery_n, surgery_link;
  bool surgery_figure_variant = false;
  CLI::App* surgery =
      add_sub(app, "surgery", "export an L7 or C7 surgery description");
  surgery->add_option("r", surgery_r, "r >= 3")->required();
  surgery->add_option("s", surgery_s, "s >= 2")->required();
  surgery->add_option("n", surgery_n, "twist count")->required();
  surgery->add_option("link", surgery_link, "l7 or c7")
      ->required()
      ->check(CLI::IsMember({"l7", "c7"}));
  surgery->add_flag("--figure-variant", surgery_figure_variant,
                    "use -n+1 instead of -n-1 for the fourth C7 slope");
  surgery->callback([&] {
    run_surgery(sink, surgery_r, surgery_s, surgery_n, surgery_link,
                surgery_figure_variant);
  });

  // report
  std::string report_r, report_s, report_n, report_b0, report_b1;
  bool report_figure_variant = false;
  CLI::App* report =
      add_sub(app, "report", "full family report for one (r, s, n)");
  report->add_option("r", report_r, "r >= 3")->required();
  report->add_option("s", report_s, "s >= 2")->required();
  report->add_option("n", report_n, "twist count")->required();
  CLI::Option* b0_opt = report->add_option("--b0", report_b0, "bridge index");
  CLI::Option* b1_opt =
      report->add_option("--b1", report_b1, "torus bridge index");
  b0_opt->needs(b1_opt);
  b1_opt->needs(b0_opt);
  report->add_flag("--figure-variant", report_figure_variant,
                   "use -n+1 for the fourth C7 slope");
  report->callback([&] {
    run_report(sink, report_r, report_s, report_n, report_b0, report_b1,
               report_figure_variant);
  });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CriterionInapplicable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace cfknot::cli
