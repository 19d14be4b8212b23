#include "validate.hpp"

#include <cmath>

#include "closed_form.hpp"
#include "error.hpp"
#include "jsonio.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"

namespace ncwheel {

namespace {

constexpr double kLemmaTol = 1e-10;
constexpr double kRotationTol = 1e-10;

std::vector<double> periodic_gs(const WheelParams& p) {
  const std::vector<double> nu = gs_vector(p);
  std::vector<double> out(p.n());
  for (int u = 0; u < p.n(); ++u) out[u] = nu[u % p.d()];
  return out;
}

double axiom_residual(const DenseMatrix& a, const DenseMatrix& lap) {
  const DenseMatrix al = multiply(a, lap);
  const DenseMatrix la = multiply(lap, a);
  double worst = max_abs_diff(al, la);
  worst = std::max(worst, max_abs_diff(multiply(al, a), a));
  worst = std::max(worst, max_abs_diff(multiply(la, lap), lap));
  std::vector<double> ones(static_cast<size_t>(a.rows), 1.0);
  worst = std::max(worst, max_abs(matvec(a, ones)));
  return worst;
}

}  // namespace

std::string overall_name(OverallStatus s) {
  switch (s) {
    case OverallStatus::Ok: return "ok";
    case OverallStatus::Fault: return "fault";
    case OverallStatus::Unresolved: return "unresolved";
  }
  return "fault";
}

ValidationReport run_validation(const ValidationOptions& opts) {
  ValidationReport rep;
  rep.options = opts;

  ErrataReconciler reconciler;
  reconciler.run(opts.sweep, opts.strict_operators);
  rep.ledger = reconciler.report();

  auto resolved = [&](const char* id) {
    const ErrataRecord* r = rep.ledger.find(id);
    return r != nullptr && r->status != FormulaStatus::Unresolved;
  };
  const bool theorem_usable =
      resolved("thm21_Nk") && resolved("thm21_border") && resolved("thm21_corner");
  const bool closed_resistance_usable = resolved("prop31_Rij") && resolved("prop31_Rhub");
  const bool closed_kirchhoff_usable = resolved("prop31_kirchhoff");
  const bool wheel_kirchhoff_usable = resolved("cor32_kirchhoff");

  const std::vector<WheelParams> points = opts.sweep.instances();
  rep.instances = static_cast<int>(points.size());

  double axioms = 0.0, vs_oracle = 0.0, vs_theorem = 0.0;
  double gr_identity = 0.0, mr_identity = 0.0, f_sum = 0.0, mr_sum = 0.0;
  double f_gs = 0.0, ms_gs = 0.0;
  double pair_sum_identity = 0.0, metric_violation = 0.0, rotation = 0.0;
  double closed_resistance = 0.0, closed_kirchhoff = 0.0, wheel_kirchhoff_dev = 0.0;
  bool has_d1 = false;

  for (const WheelParams& p : points) {
    const int n = p.n(), d = p.d(), m = p.m();
    const DenseMatrix lap = build_laplacian(p);
    const DenseMatrix a = assemble_group_inverse(p);

    axioms = std::max(axioms, axiom_residual(a, lap));
    vs_oracle = std::max(vs_oracle,
                         compare(a, dense_group_inverse(lap), opts.tol).rel_frobenius);
    if (theorem_usable)
      vs_theorem = std::max(vs_theorem, max_abs_diff(theorem_matrix(p), a));

    gr_identity = std::max(
        gr_identity, circ_identity_defect(reduced_green(p), reduced_green_inverse(p)));

    CirculantVec shifted = reduced_green_inverse(p);
    shifted.row[0] += p.a() * (m - 1.0) / m;
    for (int j = 1; j < m; ++j) shifted.row[j] -= p.a() / m;
    mr_identity = std::max(mr_identity, circ_identity_defect(mr_matrix(p), shifted));

    double acc = 0.0;
    for (double f : f_coeffs(p)) acc += f;
    f_sum = std::max(f_sum, std::fabs(acc));

    acc = 0.0;
    for (double mj : mr_matrix(p).row) acc += mj;
    mr_sum = std::max(mr_sum,
                      std::fabs(acc + d * (static_cast<double>(m) * m - 1.0) / (12.0 * p.c())));

    const std::vector<double> gs = periodic_gs(p);
    f_gs = std::max(f_gs, max_abs(matvec(induced_f(p), gs)));
    std::vector<double> ms = matvec(induced_m(p), hub_border_column(p));
    for (int u = 0; u < n; ++u) ms[u] -= gs[u];
    ms_gs = std::max(ms_gs, max_abs(ms));

    const DenseMatrix table = resistance_table(a);
    double half_pair_sum = 0.0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) half_pair_sum += table.at(i, j);
    pair_sum_identity =
        std::max(pair_sum_identity, std::fabs(kirchhoff_green(a) - half_pair_sum));

    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        metric_violation = std::max(metric_violation, -table.at(i, j));
        for (int k = 0; k <= n; ++k)
          metric_violation =
              std::max(metric_violation, table.at(i, k) - table.at(i, j) - table.at(j, k));
      }
    }

    auto rotate = [&](int v) { return v == n ? n : (v + d) % n; };
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        rotation = std::max(
            rotation, std::fabs(table.at(i, j) - table.at(rotate(i), rotate(j))));

    if (closed_resistance_usable) {
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          closed_resistance = std::max(
              closed_resistance, std::fabs(resistance_closed(p, i, j) - table.at(i, j)));
    }
    const double k_green = kirchhoff_green(a);
    if (closed_kirchhoff_usable)
      closed_kirchhoff =
          std::max(closed_kirchhoff, std::fabs(kirchhoff_closed(p) - k_green));
    if (d == 1) {
      has_d1 = true;
      if (wheel_kirchhoff_usable)
        wheel_kirchhoff_dev =
            std::max(wheel_kirchhoff_dev, std::fabs(kirchhoff_wheel(p) - k_green));
    }
  }

  auto push = [&](const std::string& name, double worst, double tol, bool excluded = false) {
    rep.checks.push_back({name, worst, tol, worst <= tol, excluded});
  };
  push("group_inverse_axioms", axioms, opts.tol);
  push("pipeline_vs_oracle", vs_oracle, opts.tol);
  push("theorem_vs_pipeline", vs_theorem, opts.tol, !theorem_usable);
  push("lemma_reduced_green_inverse", gr_identity, kLemmaTol);
  push("lemma_mr_inverse", mr_identity, kLemmaTol);
  push("lemma_f_sum_zero", f_sum, kLemmaTol);
  push("lemma_mr_row_sum", mr_sum, kLemmaTol);
  push("lemma_f_gs_zero", f_gs, kLemmaTol);
  push("lemma_ms_equals_gs", ms_gs, kLemmaTol);
  push("metrics_kirchhoff_pair_sum", pair_sum_identity, opts.tol);
  push("metrics_resistance_properties", metric_violation, opts.tol);
  push("metrics_rotation_invariance", rotation, kRotationTol);
  push("closed_resistance_vs_green", closed_resistance, opts.tol, !closed_resistance_usable);
  push("closed_kirchhoff_vs_green", closed_kirchhoff, opts.tol, !closed_kirchhoff_usable);
  push("wheel_kirchhoff_vs_green", wheel_kirchhoff_dev, opts.tol,
       !wheel_kirchhoff_usable || !has_d1);

  bool fault = false;
  for (const CheckResult& c : rep.checks)
    if (!c.excluded && !c.passed) fault = true;

  if (fault) {
    rep.overall = OverallStatus::Fault;
    if (opts.tol < 1e-12)
      rep.diagnostic =
          "requested tolerance " + jsonio::format_double(opts.tol) +
          " is below double-precision attainability; residuals of order 1e-14 are expected";
  } else if (rep.ledger.has_unresolved()) {
    rep.overall = OverallStatus::Unresolved;
  } else {
    rep.overall = OverallStatus::Ok;
  }
  return rep;
}

std::string validation_envelope_json(const ValidationReport& rep) {
  jsonio::JsonWriter w;
  w.begin_object();
  w.key("schema_version").value("1");
  w.key("params").begin_object();
  w.key("sweep").begin_object();
  w.key("m").begin_array().value(rep.options.sweep.m_lo).value(rep.options.sweep.m_hi).end_array();
  w.key("d").begin_array().value(rep.options.sweep.d_lo).value(rep.options.sweep.d_hi).end_array();
  w.key("pairs").begin_array();
  for (const auto& [a, c] : rep.options.sweep.conductances)
    w.begin_array().value(a).value(c).end_array();
  w.end_array();
  w.end_object();
  w.key("tol").value(rep.options.tol);
  w.key("strict").value(rep.options.strict_operators);
  w.end_object();
  w.key("method").value("validate");
  w.key("payload").begin_object();
  w.key("instances").value(rep.instances);
  w.key("status").value(overall_name(rep.overall));
  if (!rep.diagnostic.empty()) w.key("diagnostic").value(rep.diagnostic);
  w.key("checks").begin_array();
  for (const CheckResult& c : rep.checks) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("worst").value(c.worst);
    w.key("tolerance").value(c.tol);
    w.key("passed").value(c.passed);
    w.key("excluded").value(c.excluded);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  w.key("errata").begin_array();
  for (const ErrataRecord& r : rep.ledger.records) {
    w.begin_object();
    w.key("formula_id").value(r.formula_id);
    w.key("paper_location").value(r.paper_location);
    w.key("printed_fragment").value(r.printed_fragment);
    w.key("reconstruction").value(r.reconstruction);
    w.key("status").value(status_name(r.status));
    w.key("max_abs_deviation").value(r.max_abs_deviation);
    w.key("sweep_size").value(r.sweep_size);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace ncwheel
