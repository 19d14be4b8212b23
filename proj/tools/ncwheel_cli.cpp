// Command-line front end for libncwheel. Talks to the library exclusively
// through the C API; owns flag parsing, output formatting, and the exit-code
// contract {0 ok, 1 computation fault, 2 usage, 3 unresolved formulas}.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jsonio.hpp"
#include "ncwheel/ncwheel.h"

namespace {

using ncwheel::jsonio::JsonWriter;
using ncwheel::jsonio::format_double;

constexpr int kExitOk = 0;
constexpr int kExitFault = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnresolved = 3;

int exit_code_for(ncw_status rc) {
  switch (rc) {
    case NCW_OK: return kExitOk;
    case NCW_ERR_USAGE: return kExitUsage;
    case NCW_ERR_UNRESOLVED: return kExitUnresolved;
    default: return kExitFault;
  }
}

int report_error(ncw_status rc) {
  const char* detail = ncw_last_error();
  std::cerr << "error: " << (detail != nullptr && detail[0] != '\0'
                                 ? detail
                                 : ncw_status_message(rc))
            << "\n";
  return exit_code_for(rc);
}

struct WheelFlags {
  int m = 0;
  int d = 0;
  double a = 0.0;
  double c = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--m", m, "number of spokes (>= 2)")->required();
    cmd->add_option("--d", d, "spoke spacing (>= 1); n = m*d")->required();
    cmd->add_option("--a", a, "hub-cycle conductance (> 0)")->required();
    cmd->add_option("--c", c, "cycle conductance (> 0)")->required();
  }
};

struct OutputFlags {
  std::string format = "json";
  std::string out_path;
  bool header = false;

  void attach(CLI::App* cmd, bool csv_allowed = true) {
    cmd->add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({csv_allowed ? "csv" : "json", "json"}));
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    if (csv_allowed) cmd->add_flag("--header", header, "emit a CSV header row");
  }
};

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitFault;
  }
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  return f ? kExitOk : kExitFault;
}

bool parse_method(const std::string& name, bool closed_allowed, ncw_method* out) {
  if (name == "pipeline") {
    *out = NCW_METHOD_PIPELINE;
  } else if (name == "theorem") {
    *out = NCW_METHOD_THEOREM;
  } else if (name == "oracle") {
    *out = NCW_METHOD_ORACLE;
  } else if (name == "closed" && closed_allowed) {
    *out = NCW_METHOD_CLOSED;
  } else {
    std::cerr << "error: unknown method '" << name << "'\n";
    return false;
  }
  return true;
}

void envelope_params(JsonWriter& w, const WheelFlags& p, int n) {
  w.key("params").begin_object();
  w.key("m").value(p.m);
  w.key("d").value(p.d);
  w.key("a").value(p.a);
  w.key("c").value(p.c);
  w.key("n").value(n);
  w.end_object();
}

std::string matrix_json(const WheelFlags& p, int n, const std::string& method,
                        const ncw_matrix* mat) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value("1");
  envelope_params(w, p, n);
  w.key("method").value(method);
  w.key("payload").begin_array();
  const int rows = ncw_matrix_rows(mat), cols = ncw_matrix_cols(mat);
  for (int i = 0; i < rows; ++i) {
    w.begin_array();
    for (int j = 0; j < cols; ++j) w.value(ncw_matrix_get(mat, i, j));
    w.end_array();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string scalar_json(const WheelFlags& p, int n, const std::string& method, double value) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value("1");
  envelope_params(w, p, n);
  w.key("method").value(method);
  w.key("payload").value(value);
  w.end_object();
  return w.str() + "\n";
}

std::string matrix_csv(const ncw_matrix* mat, bool header) {
  std::string out;
  const int rows = ncw_matrix_rows(mat), cols = ncw_matrix_cols(mat);
  if (header) {
    for (int j = 0; j < cols; ++j) {
      if (j) out += ',';
      out += std::to_string(j + 1);
    }
    out += '\n';
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) out += ',';
      out += format_double(ncw_matrix_get(mat, i, j));
    }
    out += '\n';
  }
  return out;
}

std::string scalar_csv(double value, bool header) {
  std::string out;
  if (header) out += "value\n";
  out += format_double(value);
  out += '\n';
  return out;
}

struct WheelHandle {
  ncw_wheel* ptr = nullptr;
  ~WheelHandle() { ncw_wheel_free(ptr); }
};

struct MatrixHandle {
  ncw_matrix* ptr = nullptr;
  ~MatrixHandle() { ncw_matrix_free(ptr); }
};

int run_ginv(const WheelFlags& p, const std::string& method_name, const OutputFlags& output) {
  ncw_method method;
  if (!parse_method(method_name, false, &method)) return kExitUsage;
  WheelHandle wheel;
  ncw_status rc = ncw_wheel_create(p.m, p.d, p.a, p.c, &wheel.ptr);
  if (rc != NCW_OK) return report_error(rc);
  MatrixHandle mat;
  rc = ncw_group_inverse(wheel.ptr, method, &mat.ptr);
  if (rc != NCW_OK) return report_error(rc);
  const int n = ncw_wheel_n(wheel.ptr);
  const std::string text = output.format == "csv"
                               ? matrix_csv(mat.ptr, output.header)
                               : matrix_json(p, n, method_name, mat.ptr);
  return write_output(text, output.out_path);
}

int run_resistance(const WheelFlags& p, const std::string& method_name, int label_i,
                   int label_j, bool all, const OutputFlags& output) {
  ncw_method method;
  if (!parse_method(method_name, true, &method)) return kExitUsage;
  WheelHandle wheel;
  ncw_status rc = ncw_wheel_create(p.m, p.d, p.a, p.c, &wheel.ptr);
  if (rc != NCW_OK) return report_error(rc);
  const int n = ncw_wheel_n(wheel.ptr);

  if (all) {
    MatrixHandle table;
    rc = ncw_resistance_table(wheel.ptr, method, &table.ptr);
    if (rc != NCW_OK) return report_error(rc);
    const std::string text = output.format == "csv"
                                 ? matrix_csv(table.ptr, output.header)
                                 : matrix_json(p, n, method_name, table.ptr);
    return write_output(text, output.out_path);
  }

  if (label_i < 1 || label_i > n + 1 || label_j < 1 || label_j > n + 1) {
    std::cerr << "error: vertex labels are 1-based, 1.." << n + 1 << " (hub = " << n + 1
              << ")\n";
    return kExitUsage;
  }
  double value = 0.0;
  rc = ncw_effective_resistance(wheel.ptr, method, label_i - 1, label_j - 1, &value);
  if (rc != NCW_OK) return report_error(rc);
  const std::string text = output.format == "csv" ? scalar_csv(value, output.header)
                                                  : scalar_json(p, n, method_name, value);
  return write_output(text, output.out_path);
}

int run_kirchhoff(const WheelFlags& p, const std::string& method_name,
                  const OutputFlags& output) {
  ncw_method method;
  if (!parse_method(method_name, true, &method)) return kExitUsage;
  WheelHandle wheel;
  ncw_status rc = ncw_wheel_create(p.m, p.d, p.a, p.c, &wheel.ptr);
  if (rc != NCW_OK) return report_error(rc);
  double value = 0.0;
  rc = ncw_kirchhoff(wheel.ptr, method, &value);
  if (rc != NCW_OK) return report_error(rc);
  const int n = ncw_wheel_n(wheel.ptr);
  const std::string text = output.format == "csv" ? scalar_csv(value, output.header)
                                                  : scalar_json(p, n, method_name, value);
  return write_output(text, output.out_path);
}

bool parse_sweep(const std::string& spec, ncw_validate_options* opts) {
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string part = spec.substr(pos, comma - pos);
    pos = comma + 1;
    const size_t eq = part.find('=');
    if (eq == std::string::npos) return false;
    const std::string key = part.substr(0, eq);
    const std::string range = part.substr(eq + 1);
    int lo = 0, hi = 0;
    const size_t dots = range.find("..");
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoi(range);
      } else {
        lo = std::stoi(range.substr(0, dots));
        hi = std::stoi(range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      return false;
    }
    if (key == "m") {
      opts->m_lo = lo;
      opts->m_hi = hi;
    } else if (key == "d") {
      opts->d_lo = lo;
      opts->d_hi = hi;
    } else {
      return false;
    }
  }
  return true;
}

int run_validate(const std::string& sweep, double tol, bool strict,
                 const OutputFlags& output) {
  ncw_validate_options opts{0, 0, 0, 0, 0.0, 0};
  if (!sweep.empty() && !parse_sweep(sweep, &opts)) {
    std::cerr << "error: cannot parse sweep spec '" << sweep << "' (expected m=LO..HI,d=LO..HI)\n";
    return kExitUsage;
  }
  opts.tol = tol;
  opts.strict_operators = strict ? 1 : 0;

  char* json = nullptr;
  const ncw_status rc = ncw_validate(&opts, &json);
  if (json == nullptr) return report_error(rc);
  std::string text(json);
  ncw_string_free(json);
  text += '\n';
  const int write_rc = write_output(text, output.out_path);
  if (write_rc != kExitOk) return write_rc;
  if (rc != NCW_OK) {
    const char* detail = ncw_last_error();
    if (detail != nullptr && detail[0] != '\0') std::cerr << "validate: " << detail << "\n";
    return exit_code_for(rc);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "closed-form Green matrices, effective resistances and Kirchhoff indices\n"
      "for cycle-plus-hub networks (extended symmetric periodic Jacobi matrices)"};
  app.require_subcommand(1);
  app.footer("exit codes: 0 ok, 1 computation fault, 2 usage, 3 unresolved formulas");

  WheelFlags gp, rp, kp;
  OutputFlags gout, rout, kout, vout;
  std::string gmethod = "pipeline", rmethod = "pipeline", kmethod = "pipeline";
  int label_i = 0, label_j = 0;
  bool all_pairs = false;
  std::string sweep_spec;
  double tol = 1e-9;
  bool strict = false;

  CLI::App* ginv = app.add_subcommand("ginv", "group inverse of the wheel Laplacian");
  gp.attach(ginv);
  ginv->add_option("--method", gmethod, "pipeline | theorem | oracle");
  gout.attach(ginv);

  CLI::App* resistance =
      app.add_subcommand("resistance", "effective resistance between two vertices");
  rp.attach(resistance);
  resistance->add_option("--method", rmethod, "pipeline | theorem | oracle | closed");
  resistance->add_option("--i", label_i, "first vertex, 1-based (hub = n+1)");
  resistance->add_option("--j", label_j, "second vertex, 1-based (hub = n+1)");
  resistance->add_flag("--all", all_pairs, "emit the full pairwise table");
  rout.attach(resistance);

  CLI::App* kirchhoff = app.add_subcommand("kirchhoff", "Kirchhoff index of the wheel");
  kp.attach(kirchhoff);
  kirchhoff->add_option("--method", kmethod, "pipeline | theorem | oracle | closed");
  kout.attach(kirchhoff);

  CLI::App* validate = app.add_subcommand(
      "validate", "reconciliation sweep: pipeline vs oracle vs printed formulas");
  validate->add_option("--sweep", sweep_spec, "parameter ranges, e.g. m=2..6,d=1..5");
  validate->add_option("--tol", tol, "comparison tolerance (default 1e-9)");
  validate->add_flag("--strict", strict,
                     "operator insertions only; symbol/term corrections stay as printed");
  vout.attach(validate, /*csv_allowed=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (ginv->parsed()) return run_ginv(gp, gmethod, gout);
  if (resistance->parsed()) {
    if (!all_pairs && (resistance->count("--i") == 0 || resistance->count("--j") == 0)) {
      std::cerr << "error: provide --i and --j, or --all\n";
      return kExitUsage;
    }
    return run_resistance(rp, rmethod, label_i, label_j, all_pairs, rout);
  }
  if (kirchhoff->parsed()) return run_kirchhoff(kp, kmethod, kout);
  if (validate->parsed()) return run_validate(sweep_spec, tol, strict, vout);
  return kExitUsage;
}
