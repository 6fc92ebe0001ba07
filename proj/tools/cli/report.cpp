#include "cli/report.hpp"

#include <sstream>

#include "cli/render.hpp"

namespace cfknot::cli {

FamilyReport build_family_report(const FamilyParams& params,
                                 const std::optional<BridgeIndices>& bridge,
                                 bool figure_variant) {
  FamilyReport report{params,
                      knot_class(params),
                      ktw_genus(params.r, params.s),
                      false,
                      false,
                      {},
                      false,
                      2,
                      bridge,
                      std::nullopt,
                      std::nullopt,
                      "",
                      c7_description(params, figure_variant),
                      figure_variant};

  SmallnessProblem problem{family_cf(params).coefficients};
  report.smallness_applicable = problem.applicable();
  if (report.smallness_applicable) {
    report.witnesses = enumerate_witnesses(problem);
    report.small = report.witnesses.empty();
    report.msmall = report.small;
  }

  if (bridge) {
    report.growth = growth_rate_bound(*bridge);
  }

  try {
    report.l7 = l7_description(params);
  } catch (const DegenerateTwist& e) {
    report.l7_degenerate_reason = e.what();
  }
  return report;
}

namespace {

json hypotheses_json(const FamilyReport& report) {
  json smallness;
  if (!report.smallness_applicable) {
    smallness = {{"status", "inapplicable"},
                 {"detail", "the criterion needs |n| >= 2"}};
  } else if (report.small) {
    smallness = {{"status", "holds"},
                 {"detail", "no witness pair; small, hence m-small"}};
  } else {
    smallness = {{"status", "fails"},
                 {"detail", "closed essential surface witnesses exist"}};
  }
  return {
      {"heegaard_genus",
       {{"status", "bounded"},
        {"detail", "g(E(K)) <= 2 for every knot on the fiber"}}},
      {"smallness", smallness},
      {"torus_bridge_index",
       {{"status", "external input"},
        {"detail", "bridge indices are caller-supplied, never computed"}}},
      {"hyperbolicity",
       {{"status", "out of scope"},
        {"detail",
         "holds for sufficiently large r, s, n; verify externally on the "
         "exported C7 filling"}}},
  };
}

}  // namespace

json report_json(const FamilyReport& report) {
  json j;
  j["params"] = {{"r", int_str(report.params.r)},
                 {"s", int_str(report.params.s)},
                 {"n", int_str(report.params.n)}};
  j["curve_class"] = curve_json(report.curve);
  j["ktw_genus"] = int_str(report.twist_curve_genus);

  json smallness;
  smallness["applicable"] = report.smallness_applicable;
  if (report.smallness_applicable) {
    smallness["small"] = report.small;
  } else {
    smallness["reason"] = "criterion needs |n| >= 2";
  }
  smallness["witnesses"] = witnesses_json(report.witnesses);
  j["smallness"] = smallness;

  j["msmall"] = report.msmall;
  j["heegaard_genus_bound"] = report.heegaard_genus_bound;

  if (report.bridge && report.growth) {
    j["growth_rate"] = growth_json(*report.bridge, *report.growth);
  }

  json surgery;
  surgery["c7"] = description_json(report.c7);
  if (report.l7) {
    surgery["l7"] = description_json(*report.l7);
  } else {
    surgery["l7"] = {{"degenerate", true},
                     {"reason", report.l7_degenerate_reason}};
  }
  surgery["figure_variant"] = report.figure_variant;
  j["surgery"] = surgery;

  j["hypotheses"] = hypotheses_json(report);
  return j;
}

std::string report_text(const FamilyReport& report) {
  std::ostringstream os;
  os << "family knot [r,-s,n] with r=" << report.params.r
     << " s=" << report.params.s << " n=" << report.params.n << "\n";
  os << "homology class: " << report.curve << "\n";
  os << "twist-curve genus: " << report.twist_curve_genus << "\n";

  if (!report.smallness_applicable) {
    os << "smallness: inapplicable (criterion needs |n| >= 2)\n";
  } else if (report.small) {
    os << "smallness: small (no closed essential surface witnesses)\n";
  } else {
    os << "smallness: NOT small; " << report.witnesses.size()
       << " witness(es)\n";
    for (const auto& w : report.witnesses) {
      os << "  witness " << witness_str(w) << "\n";
    }
  }
  os << "m-small: " << (report.msmall ? "certified (small knots here are m-small)"
                                      : "not certified")
     << "\n";
  os << "Heegaard genus of the exterior: <= " << report.heegaard_genus_bound
     << "\n";

  if (report.bridge && report.growth) {
    os << "growth rate bound (b0=" << report.bridge->b0
       << ", b1=" << report.bridge->b1 << "): min " << report.growth->min_bound
       << ", max variant " << report.growth->max_bound << "\n";
  } else {
    os << "growth rate bound: not evaluated (supply --b0 and --b1)\n";
  }

  os << "surgery descriptions:\n";
  if (report.l7) {
    os << export_text(*report.l7);
  } else {
    os << "link L7 degenerate: " << report.l7_degenerate_reason << "\n";
  }
  os << export_text(report.c7);
  os << "hyperbolicity: not checked here; holds for sufficiently large "
        "r, s, n (verify externally)\n";
  return os.str();
}

}  // namespace cfknot::cli
