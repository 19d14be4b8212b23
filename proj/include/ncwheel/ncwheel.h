#ifndef NCWHEEL_H
#define NCWHEEL_H

/*
 * C interface to libncwheel: closed-form group inverses (Green matrices),
 * effective resistances and Kirchhoff indices for cycle-plus-hub networks,
 * i.e. symmetric periodic Jacobi matrices extended by one bordered row and
 * column.
 *
 * All objects are opaque handles owned by the library; every handle returned
 * through an out-parameter must be released with the matching _free call.
 * Functions report failure through ncw_status; ncw_last_error() carries a
 * human-readable detail message for the calling thread.
 *
 * Vertex indexing is 0-based with the hub at index n = m*d.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncw_status {
  NCW_OK = 0,
  NCW_ERR_USAGE = 1,      /* invalid parameter, index, or argument */
  NCW_ERR_OVERFLOW = 2,   /* recurrence magnitude guard tripped */
  NCW_ERR_SINGULAR = 3,   /* linear solve or circulant inversion failed */
  NCW_ERR_FAULT = 4,      /* internal axiom or comparison failure */
  NCW_ERR_UNRESOLVED = 5, /* formula reconstruction unresolved */
  NCW_ERR_INTERNAL = 6
} ncw_status;

typedef enum ncw_method {
  NCW_METHOD_PIPELINE = 0, /* structured closed-form chain (trusted path) */
  NCW_METHOD_THEOREM = 1,  /* direct entry formulas, accepted reconstruction */
  NCW_METHOD_ORACLE = 2,   /* dense rank-completion group inverse */
  NCW_METHOD_CLOSED = 3    /* printed resistance/Kirchhoff formulas (reconstructed) */
} ncw_method;

typedef struct ncw_wheel ncw_wheel;
typedef struct ncw_matrix ncw_matrix;

const char* ncw_version(void);

/* Detail message for the last failing call on this thread ("" if none). */
const char* ncw_last_error(void);

/* Short description of a status code. */
const char* ncw_status_message(ncw_status status);

/* --- parameter handles --------------------------------------------------- */

/* m >= 2 spokes, spacing d >= 1, conductances a, c > 0; n = m*d >= 3. */
ncw_status ncw_wheel_create(int m, int d, double a, double c, ncw_wheel** out);
void ncw_wheel_free(ncw_wheel* wheel);
int ncw_wheel_n(const ncw_wheel* wheel);

/* --- matrices ------------------------------------------------------------ */

ncw_status ncw_laplacian(const ncw_wheel* wheel, ncw_matrix** out);

/* (n+1) x (n+1) group inverse of the wheel Laplacian. NCW_METHOD_CLOSED is
 * not a matrix method and is rejected here. */
ncw_status ncw_group_inverse(const ncw_wheel* wheel, ncw_method method, ncw_matrix** out);

/* Full pairwise effective-resistance table for the chosen method. */
ncw_status ncw_resistance_table(const ncw_wheel* wheel, ncw_method method, ncw_matrix** out);

int ncw_matrix_rows(const ncw_matrix* matrix);
int ncw_matrix_cols(const ncw_matrix* matrix);
double ncw_matrix_get(const ncw_matrix* matrix, int row, int col);
/* Row-major contiguous storage, valid until the handle is freed. */
const double* ncw_matrix_data(const ncw_matrix* matrix);
void ncw_matrix_free(ncw_matrix* matrix);

/* --- scalar queries -------------------------------------------------------*/

ncw_status ncw_effective_resistance(const ncw_wheel* wheel, ncw_method method, int i, int j,
                                    double* out);

ncw_status ncw_kirchhoff(const ncw_wheel* wheel, ncw_method method, double* out);

/* --- validation sweep ------------------------------------------------------*/

typedef struct ncw_validate_options {
  int m_lo, m_hi; /* inclusive spoke-count range; 0,0 selects 2..6 */
  int d_lo, d_hi; /* inclusive spacing range; 0,0 selects 1..5 */
  double tol;     /* <= 0 selects 1e-9 */
  int strict_operators; /* nonzero: operator insertions only, no symbol fixes */
} ncw_validate_options;

/* Runs the reconciliation and cross-check sweep and hands back the complete
 * JSON report (envelope with checks and errata ledger) as a heap string to
 * release with ncw_string_free. Returns NCW_OK when every comparison passed
 * and all formulas resolved, NCW_ERR_UNRESOLVED when the only defects are
 * unresolved formulas, NCW_ERR_FAULT when a comparison or axiom failed (the
 * report is still produced in all three cases). */
ncw_status ncw_validate(const ncw_validate_options* options, char** json_out);

void ncw_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* NCWHEEL_H */
