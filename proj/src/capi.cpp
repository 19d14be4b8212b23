#include "ncwheel/ncwheel.h"

#include <cstring>
#include <new>
#include <string>

#include "closed_form.hpp"
#include "dense_matrix.hpp"
#include "error.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "validate.hpp"
#include "wheel.hpp"

using ncwheel::DenseMatrix;
using ncwheel::Error;
using ncwheel::ErrorKind;
using ncwheel::WheelParams;

struct ncw_wheel {
  WheelParams params;
};

struct ncw_matrix {
  DenseMatrix m;
};

namespace {

thread_local std::string g_last_error;

ncw_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Domain:
    case ErrorKind::Index:
      return NCW_ERR_USAGE;
    case ErrorKind::Overflow:
      return NCW_ERR_OVERFLOW;
    case ErrorKind::Singular:
      return NCW_ERR_SINGULAR;
    case ErrorKind::AxiomViolation:
      return NCW_ERR_FAULT;
    case ErrorKind::Unresolved:
      return NCW_ERR_UNRESOLVED;
    case ErrorKind::Precondition:
    case ErrorKind::Dimension:
      return NCW_ERR_USAGE;
  }
  return NCW_ERR_INTERNAL;
}

template <typename Fn>
ncw_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return NCW_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NCW_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NCW_ERR_INTERNAL;
  }
}

ncw_status usage(const char* msg) {
  g_last_error = msg;
  return NCW_ERR_USAGE;
}

DenseMatrix ginv_by_method(const WheelParams& p, ncw_method method) {
  switch (method) {
    case NCW_METHOD_PIPELINE:
      return ncwheel::assemble_group_inverse(p);
    case NCW_METHOD_THEOREM:
      return ncwheel::theorem_matrix(p);
    case NCW_METHOD_ORACLE:
      return ncwheel::dense_group_inverse(ncwheel::build_laplacian(p));
    default:
      ncwheel::fail(ErrorKind::Domain, "method does not produce a matrix");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ncw_version(void) { return "0.1.0"; }

const char* ncw_last_error(void) { return g_last_error.c_str(); }

const char* ncw_status_message(ncw_status status) {
  switch (status) {
    case NCW_OK: return "ok";
    case NCW_ERR_USAGE: return "invalid parameter, index, or argument";
    case NCW_ERR_OVERFLOW: return "recurrence magnitude guard tripped";
    case NCW_ERR_SINGULAR: return "linear solve or circulant inversion failed";
    case NCW_ERR_FAULT: return "internal axiom or comparison failure";
    case NCW_ERR_UNRESOLVED: return "formula reconstruction unresolved";
    case NCW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ncw_status ncw_wheel_create(int m, int d, double a, double c, ncw_wheel** out) {
  if (out == nullptr) return usage("null output handle");
  *out = nullptr;
  return guarded([&] { *out = new ncw_wheel{WheelParams(m, d, a, c)}; });
}

void ncw_wheel_free(ncw_wheel* wheel) { delete wheel; }

int ncw_wheel_n(const ncw_wheel* wheel) { return wheel == nullptr ? -1 : wheel->params.n(); }

ncw_status ncw_laplacian(const ncw_wheel* wheel, ncw_matrix** out) {
  if (wheel == nullptr || out == nullptr) return usage("null handle");
  *out = nullptr;
  return guarded([&] { *out = new ncw_matrix{ncwheel::build_laplacian(wheel->params)}; });
}

ncw_status ncw_group_inverse(const ncw_wheel* wheel, ncw_method method, ncw_matrix** out) {
  if (wheel == nullptr || out == nullptr) return usage("null handle");
  *out = nullptr;
  return guarded([&] { *out = new ncw_matrix{ginv_by_method(wheel->params, method)}; });
}

ncw_status ncw_resistance_table(const ncw_wheel* wheel, ncw_method method, ncw_matrix** out) {
  if (wheel == nullptr || out == nullptr) return usage("null handle");
  *out = nullptr;
  return guarded([&] {
    if (method == NCW_METHOD_CLOSED) {
      const WheelParams& p = wheel->params;
      const int nv = p.n() + 1;
      DenseMatrix table(nv, nv);
      for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
          const double r = ncwheel::resistance_closed(p, i, j);
          table.at(i, j) = r;
          table.at(j, i) = r;
        }
      *out = new ncw_matrix{std::move(table)};
    } else {
      *out = new ncw_matrix{ncwheel::resistance_table(ginv_by_method(wheel->params, method))};
    }
  });
}

int ncw_matrix_rows(const ncw_matrix* matrix) { return matrix == nullptr ? -1 : matrix->m.rows; }

int ncw_matrix_cols(const ncw_matrix* matrix) { return matrix == nullptr ? -1 : matrix->m.cols; }

double ncw_matrix_get(const ncw_matrix* matrix, int row, int col) {
  if (matrix == nullptr || row < 0 || row >= matrix->m.rows || col < 0 ||
      col >= matrix->m.cols)
    return 0.0;
  return matrix->m.at(row, col);
}

const double* ncw_matrix_data(const ncw_matrix* matrix) {
  return matrix == nullptr ? nullptr : matrix->m.data.data();
}

void ncw_matrix_free(ncw_matrix* matrix) { delete matrix; }

ncw_status ncw_effective_resistance(const ncw_wheel* wheel, ncw_method method, int i, int j,
                                    double* out) {
  if (wheel == nullptr || out == nullptr) return usage("null handle");
  return guarded([&] {
    const WheelParams& p = wheel->params;
    if (i < 0 || i > p.n() || j < 0 || j > p.n())
      ncwheel::fail(ErrorKind::Index, "vertex index out of range");
    if (method == NCW_METHOD_CLOSED)
      *out = ncwheel::resistance_closed(p, i, j);
    else
      *out = ncwheel::effective_resistance(ginv_by_method(p, method), i, j);
  });
}

ncw_status ncw_kirchhoff(const ncw_wheel* wheel, ncw_method method, double* out) {
  if (wheel == nullptr || out == nullptr) return usage("null handle");
  return guarded([&] {
    const WheelParams& p = wheel->params;
    if (method == NCW_METHOD_CLOSED)
      *out = p.d() == 1 ? ncwheel::kirchhoff_wheel(p) : ncwheel::kirchhoff_closed(p);
    else
      *out = ncwheel::kirchhoff_green(ginv_by_method(p, method));
  });
}

ncw_status ncw_validate(const ncw_validate_options* options, char** json_out) {
  if (json_out == nullptr) return usage("null output pointer");
  *json_out = nullptr;
  ncwheel::OverallStatus overall = ncwheel::OverallStatus::Ok;
  const ncw_status rc = guarded([&] {
    ncwheel::ValidationOptions opts;
    if (options != nullptr) {
      if (options->m_lo != 0 || options->m_hi != 0) {
        opts.sweep.m_lo = options->m_lo;
        opts.sweep.m_hi = options->m_hi;
      }
      if (options->d_lo != 0 || options->d_hi != 0) {
        opts.sweep.d_lo = options->d_lo;
        opts.sweep.d_hi = options->d_hi;
      }
      if (options->tol > 0.0) opts.tol = options->tol;
      opts.strict_operators = options->strict_operators != 0;
    }
    const ncwheel::ValidationReport rep = ncwheel::run_validation(opts);
    overall = rep.overall;
    if (!rep.diagnostic.empty()) g_last_error = rep.diagnostic;
    *json_out = dup_string(ncwheel::validation_envelope_json(rep));
  });
  if (rc != NCW_OK) return rc;
  switch (overall) {
    case ncwheel::OverallStatus::Ok: return NCW_OK;
    case ncwheel::OverallStatus::Unresolved:
      if (g_last_error.empty()) g_last_error = "one or more formulas remain unresolved";
      return NCW_ERR_UNRESOLVED;
    case ncwheel::OverallStatus::Fault:
      if (g_last_error.empty()) g_last_error = "a validation comparison failed";
      return NCW_ERR_FAULT;
  }
  return NCW_ERR_INTERNAL;
}

void ncw_string_free(char* text) { delete[] text; }

}  // extern "C"
