#include "volterra/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "volterra/accretivity.hpp"
#include "volterra/analytic_spectra.hpp"
#include "volterra/discretizer.hpp"
#include "volterra/errors.hpp"
#include "volterra/norm_bounds.hpp"
#include "volterra/numerical_range.hpp"
#include "volterra/pencil_spectra.hpp"
#include "volterra/tolerances.hpp"

namespace volterra {

namespace {

const char* part_name(PartSelector p) {
  switch (p) {
    case PartSelector::FullV: return "v";
    case PartSelector::FullVAdjoint: return "v*";
    case PartSelector::RealPart: return "re";
    case PartSelector::ImagPart: return "im";
  }
  return "?";
}

const char* method_name(EigsMethod m) {
  switch (m) {
    case EigsMethod::Auto: return "auto";
    case EigsMethod::Pencil: return "pencil";
    case EigsMethod::Analytic: return "analytic";
    case EigsMethod::Discretize: return "discretize";
  }
  return "?";
}

const char* source_name(SpectrumSource s) {
  switch (s) {
    case SpectrumSource::Pencil: return "pencil";
    case SpectrumSource::Analytic: return "analytic";
    case SpectrumSource::Discretized: return "discretized";
  }
  return "?";
}

bool pencil_covers(PartSelector part, PowerIndex n) {
  return (part == PartSelector::RealPart && n % 2 == 1) ||
         (part == PartSelector::ImagPart && n % 2 == 0);
}

bool analytic_covers(PartSelector part, PowerIndex n) {
  return (part == PartSelector::ImagPart && n == 1) ||
         (part == PartSelector::RealPart && n == 2);
}

}  // namespace

PartSelector parse_part(const std::string& s) {
  if (s == "re") return PartSelector::RealPart;
  if (s == "im") return PartSelector::ImagPart;
  if (s == "v") return PartSelector::FullV;
  throw UsageError("unknown part '" + s + "' (expected re, im, or v)");
}

EigsMethod parse_method(const std::string& s) {
  if (s == "auto") return EigsMethod::Auto;
  if (s == "pencil") return EigsMethod::Pencil;
  if (s == "analytic") return EigsMethod::Analytic;
  if (s == "discretize") return EigsMethod::Discretize;
  throw UsageError("unknown method '" + s +
                   "' (expected auto, pencil, analytic, or discretize)");
}

int default_grid(int fallback) {
  const char* env = std::getenv("VOLTERRA_DEFAULT_M");
  if (env == nullptr) return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 2 || v > tol::kGridCap)
    throw UsageError(std::string("VOLTERRA_DEFAULT_M='") + env +
                     "' is not a grid size in [2, " +
                     std::to_string(tol::kGridCap) + "]");
  return static_cast<int>(v);
}

ReportDoc cmd_eigs(PartSelector part, PowerIndex n, EigsMethod method,
                   int count, int m) {
  require(n >= 1, "eigs: n must be >= 1");
  require(count >= 1, "eigs: count must be >= 1");

  EigsMethod resolved = method;
  if (method == EigsMethod::Auto) {
    if (pencil_covers(part, n) && n <= tol::kPencilPowerCap)
      resolved = EigsMethod::Pencil;
    else if (analytic_covers(part, n))
      resolved = EigsMethod::Analytic;
    else
      resolved = EigsMethod::Discretize;
  } else if (method == EigsMethod::Pencil && !pencil_covers(part, n)) {
    throw UsageError("eigs: the pencil route covers re with odd n and im with even n only");
  } else if (method == EigsMethod::Analytic && !analytic_covers(part, n)) {
    throw UsageError("eigs: the analytic route covers im n=1 and re n=2 only");
  }

  ReportDoc doc;
  doc.command = "eigs";
  add_input(doc, "part", part_name(part));
  add_input(doc, "n", std::to_string(n));
  add_input(doc, "method", method_name(method));

  if (part == PartSelector::FullV || part == PartSelector::FullVAdjoint) {
    // quasinilpotent: report the empty nonzero spectrum instead of the
    // triangular matrix's quadrature artifacts
    add_input(doc, "note", "quasinilpotent: no nonzero eigenvalues");
    return doc;
  }

  Spectrum spectrum;
  switch (resolved) {
    case EigsMethod::Pencil:
      spectrum = pencil_eigenvalues(build_pencil(n));
      break;
    case EigsMethod::Analytic:
      spectrum = part == PartSelector::ImagPart
                     ? to_spectrum(imv_eigenvalues((count + 1) / 2))
                     : rev2_eigenvalues(count);
      break;
    default: {
      const OperatorMatrix mat = assemble({part, n}, make_grid(m));
      spectrum = part == PartSelector::RealPart ? eigenvalues_symmetric(mat)
                                                : eigenvalues_antisymmetric(mat);
      add_input(doc, "m", std::to_string(m));
      break;
    }
  }
  add_input(doc, "source", source_name(spectrum.source));

  const int keep = static_cast<int>(
      std::min<std::size_t>(count, spectrum.values.size()));
  for (int i = 0; i < keep; ++i)
    add_result(doc, "lambda[" + std::to_string(i) + "]", spectrum.values[i]);
  return doc;
}

ReportDoc cmd_norms(PowerIndex n, int m) {
  ReportDoc doc;
  doc.command = "norms";
  add_input(doc, "n", std::to_string(n));
  add_input(doc, "m", std::to_string(m));

  struct Row {
    const char* prefix;
    PartSelector part;
  };
  constexpr Row rows[] = {{"v", PartSelector::FullV},
                          {"re", PartSelector::RealPart},
                          {"im", PartSelector::ImagPart}};
  for (const auto& row : rows) {
    const NormReport r = make_norm_report(row.part, n, m);
    const std::string p = row.prefix;
    add_result(doc, p + ".hs_exact", r.hs_exact);
    add_result(doc, p + ".op_lower", r.op_lower);
    add_result(doc, p + ".op_upper", r.op_upper);
    if (r.op_exact) add_result(doc, p + ".op_exact", *r.op_exact);
    if (r.op_discretized) {
      add_result(doc, p + ".op_discretized", *r.op_discretized);
      const double scale = std::max(r.op_upper, std::abs(*r.op_discretized));
      add_lower_check(doc, p + "-sandwich-lower", r.op_lower, *r.op_discretized,
                      tol::kSandwichSlack * scale);
      add_upper_check(doc, p + "-sandwich-upper", r.op_upper, *r.op_discretized,
                      tol::kSandwichSlack * scale);
    }
  }
  return doc;
}

ReportDoc cmd_nrange(PowerIndex n, int points,
                     const std::optional<std::string>& out_csv, int m) {
  require(points >= 2, "nrange: points must be >= 2");
  if (out_csv && n != 1)
    throw UsageError("nrange: the boundary curve export is defined for n = 1 only");

  ReportDoc doc;
  doc.command = "nrange";
  add_input(doc, "n", std::to_string(n));
  add_input(doc, "points", std::to_string(points));
  add_input(doc, "m", std::to_string(m));
  if (out_csv) add_input(doc, "out", *out_csv);

  const Interval re = range_interval(PartSelector::RealPart, n, m);
  const Interval im = range_interval(PartSelector::ImagPart, n, m);
  add_result(doc, "re.lo", re.lo);
  add_result(doc, "re.hi", re.hi);
  add_result(doc, "im.lo", im.lo);
  add_result(doc, "im.hi", im.hi);

  if (out_csv) {
    std::ofstream ofs(*out_csv);
    if (!ofs) throw Error("nrange: cannot open " + *out_csv + " for writing");
    ofs << "t,x,y_upper,y_lower\n";
    for (const auto& s : brown_curve(points)) {
      ofs << format_sig12(s.t) << ',' << format_sig12(s.upper.x) << ','
          << format_sig12(s.upper.y) << ',' << format_sig12(s.lower.y) << '\n';
    }
    if (!ofs) throw Error("nrange: write to " + *out_csv + " failed");
  }
  return doc;
}

ReportDoc cmd_accretive(double a, double b, int m) {
  const QuadCoeffs q{a, b};
  const QuadraticModel model = make_quadratic_model(m);
  const AccretivityVerdict verdict = certify_numeric(model, q);

  ReportDoc doc;
  doc.command = "accretive";
  add_input(doc, "a", format_sig12(a));
  add_input(doc, "b", format_sig12(b));
  add_input(doc, "m", std::to_string(m));
  add_input(doc, "accretive", verdict.predicate ? "yes" : "no");
  if (verdict.witness) {
    add_input(doc, "witness",
              verdict.witness->kind == WitnessKind::XMinusHalf
                  ? std::string("x-minus-half")
                  : "spike(" + std::to_string(verdict.witness->spike_index) + ")");
  }

  add_result(doc, "predicate", verdict.predicate ? 1.0 : 0.0);
  add_result(doc, "min_eig", *verdict.min_eig_certificate);
  if (verdict.witness)
    add_result(doc, "witness_rayleigh", witness_rayleigh(q, *verdict.witness, m));
  if (verdict.predicate)
    add_result(doc, "resolvent_norm", resolvent_norm_check(model, q));
  return doc;
}

ReportDoc cmd_verify(VerifyLevel level) { return run_verification(level); }

}  // namespace volterra
