#pragma once

#include <optional>
#include <string>

#include "volterra/kernels.hpp"
#include "volterra/report.hpp"
#include "volterra/verify.hpp"

namespace volterra {

enum class EigsMethod { Auto, Pencil, Analytic, Discretize };

// "re" | "im" | "v"; anything else throws UsageError.
PartSelector parse_part(const std::string& s);

// "auto" | "pencil" | "analytic" | "discretize"; anything else UsageError.
EigsMethod parse_method(const std::string& s);

// Default grid size: VOLTERRA_DEFAULT_M when set (must hold a valid size,
// else UsageError), otherwise the fallback.
int default_grid(int fallback);

// Spectrum of the selected part of V^n. auto resolves to the first
// applicable route in the order pencil, analytic, discretize; an explicitly
// requested route that does not cover (part, n) throws UsageError. For the
// full operator the nonzero spectrum is empty (quasinilpotent), and the
// report records that fact rather than the discretization's triangular
// artifacts. m feeds only the discretize route.
ReportDoc cmd_eigs(PartSelector part, PowerIndex n, EigsMethod method,
                   int count, int m);

// Norm table for V^n, Re V^n, Im V^n: exact Hilbert-Schmidt value, operator
// norm bracket, known exact value when there is one, discretized estimate,
// and sandwich containment pass flags.
ReportDoc cmd_norms(PowerIndex n, int m);

// Numerical range intervals of Re V^n and Im V^n; for n = 1 additionally
// writes the boundary curve of W(V) as CSV (columns t,x,y_upper,y_lower)
// when out_csv is given. out_csv with n != 1 is a usage error. m feeds the
// discretized interval routes only.
ReportDoc cmd_nrange(PowerIndex n, int points,
                     const std::optional<std::string>& out_csv, int m);

// Accretivity verdict for a V + b V^2 with certificate, witness quotient,
// and (inside the accretive region) the resolvent norm. The verdict is
// data: not-accretive is still a successful command.
ReportDoc cmd_accretive(double a, double b, int m);

// The full verification suite at the requested level; the caller maps the
// document's overall status to the process exit code.
ReportDoc cmd_verify(VerifyLevel level);

}  // namespace volterra
