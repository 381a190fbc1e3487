/* Pinwheel tiling generation, pair correlation and radial diffraction.
 *
 * C interface to the pinwheel shared library. All functions return a
 * pw_status; results are passed through opaque handles that must be
 * released with the matching *_free call. On failure, pw_last_error()
 * returns a thread-local description of the most recent error.
 */
#ifndef PINWHEEL_H
#define PINWHEEL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define PW_API __declspec(dllexport)
#else
#define PW_API __attribute__((visibility("default")))
#endif

typedef enum pw_status {
    PW_OK = 0,
    PW_ERR_PARAM = 2,    /* invalid parameter or precondition violation */
    PW_ERR_IO = 3,       /* file could not be read or written */
    PW_ERR_LIMIT = 4,    /* configured resource cap exceeded */
    PW_ERR_INTERNAL = 5  /* unexpected failure */
} pw_status;

typedef struct pw_patch pw_patch;
typedef struct pw_census pw_census;
typedef struct pw_autocorr pw_autocorr;
typedef struct pw_profile pw_profile;

PW_API const char* pw_version(void);
PW_API const char* pw_last_error(void);

/* --- tiling ------------------------------------------------------------ */

/* seed_kind: "single" (geometric fixed-point seed) or "census-pair"
 * (one tile of each chirality). steps above steps_cap fail with
 * PW_ERR_LIMIT. */
PW_API pw_status pw_patch_generate(int steps, const char* seed_kind, int steps_cap,
                                   pw_patch** out);
PW_API pw_status pw_patch_load_csv(const char* path, pw_patch** out);
PW_API pw_status pw_patch_save_csv(const pw_patch* p, const char* path);
PW_API size_t pw_patch_size(const pw_patch* p);
PW_API void pw_patch_free(pw_patch* p);

/* --- orientation census ------------------------------------------------ */

PW_API pw_status pw_census_compute(int n, long long seed_plus, long long seed_minus,
                                   pw_census** out);
PW_API int pw_census_steps(const pw_census* c);
/* Writes the value of f^chi_n(k) (chirality +1 or -1) as a decimal string. */
PW_API pw_status pw_census_coeff(const pw_census* c, int chirality, int k, char* buf,
                                 size_t bufsize);
PW_API void pw_census_free(pw_census* c);

/* --- autocorrelation ----------------------------------------------------*/

/* Weights are exact rationals wp_num/wp_den and wm_num/wm_den.
 * estimator: "all-pairs" or "eroded-core". threads <= 0 selects the
 * hardware concurrency. */
PW_API pw_status pw_autocorr_estimate(const pw_patch* p, long long wp_num, long long wp_den,
                                      long long wm_num, long long wm_den, double rmax,
                                      const char* estimator, int threads, pw_autocorr** out);
PW_API pw_status pw_autocorr_save_csv(const pw_autocorr* ac, const char* path);
PW_API pw_status pw_autocorr_load_csv(const char* path, pw_autocorr** out);
PW_API size_t pw_autocorr_size(const pw_autocorr* ac);
PW_API void pw_autocorr_free(pw_autocorr* ac);

/* --- diffraction --------------------------------------------------------*/

PW_API pw_status pw_profile_compute(const pw_autocorr* ac, double kmax, double dk, int threads,
                                    pw_profile** out);
PW_API pw_status pw_profile_load_csv(const char* path, pw_profile** out);
PW_API pw_status pw_profile_save_csv(const pw_profile* p, const char* path);
PW_API pw_status pw_profile_ring_intensity(const pw_profile* p, double k0, double delta,
                                           double* out);
PW_API void pw_profile_free(pw_profile* p);

PW_API double pw_bessel_j0(double z);

/* --- peak analysis ------------------------------------------------------*/

/* Ring records for m <= mmax plus per-(ell, s) c/k fits. */
PW_API pw_status pw_peaks_write(const pw_profile* p, uint64_t mmax, double delta,
                                const char* peaks_path, const char* fits_path);

/* Square-lattice powder reference; if normalize != 0 the ring at k = 1 is
 * rescaled to normalize_to. */
PW_API pw_status pw_powder_write(uint64_t mmax, int normalize, double normalize_to,
                                 const char* path);

#ifdef __cplusplus
}
#endif

#endif /* PINWHEEL_H */
