#include "pinwheel.h"

#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "pinwheel/autocorr.hpp"
#include "pinwheel/bessel.hpp"
#include "pinwheel/census.hpp"
#include "pinwheel/intensity.hpp"
#include "pinwheel/peaks.hpp"
#include "pinwheel/tiling.hpp"

namespace {

thread_local std::string g_last_error;

pw_status fail(pw_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

// Maps the core's exception idiom onto C status codes.
template <typename Fn>
pw_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PW_OK;
    } catch (const std::invalid_argument& e) {
        return fail(PW_ERR_PARAM, e.what());
    } catch (const std::domain_error& e) {
        return fail(PW_ERR_PARAM, e.what());
    } catch (const std::out_of_range& e) {
        return fail(PW_ERR_PARAM, e.what());
    } catch (const std::length_error& e) {
        return fail(PW_ERR_LIMIT, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail(PW_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PW_ERR_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return fail(PW_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(PW_ERR_INTERNAL, "unknown error");
    }
}

pinwheel::Estimator parse_estimator(const char* s) {
    std::string v = s ? s : "";
    if (v == "all-pairs") return pinwheel::Estimator::all_pairs;
    if (v == "eroded-core") return pinwheel::Estimator::eroded_core;
    throw std::invalid_argument("estimator must be 'all-pairs' or 'eroded-core'");
}

}  // namespace

struct pw_patch {
    pinwheel::Patch v;
};
struct pw_census {
    pinwheel::Census v;
};
struct pw_autocorr {
    pinwheel::RadialAutocorrelation v;
};
struct pw_profile {
    pinwheel::IntensityProfile v;
};

extern "C" {

const char* pw_version(void) { return "0.1.0"; }

const char* pw_last_error(void) { return g_last_error.c_str(); }

pw_status pw_patch_generate(int steps, const char* seed_kind, int steps_cap, pw_patch** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output handle");
        if (steps < 0) throw std::invalid_argument("steps must be >= 0");
        if (steps > steps_cap) throw std::length_error("steps exceeds the configured cap");
        std::string kind = seed_kind ? seed_kind : "";
        pinwheel::Patch seed;
        if (kind == "single")
            seed = pinwheel::single_seed_patch();
        else if (kind == "census-pair")
            seed = pinwheel::census_pair_patch();
        else
            throw std::invalid_argument("seed_kind must be 'single' or 'census-pair'");
        *out = new pw_patch{pinwheel::inflate(seed, steps)};
    });
}

pw_status pw_patch_load_csv(const char* path, pw_patch** out) {
    return guarded([&] {
        if (!out || !path) throw std::invalid_argument("null argument");
        *out = new pw_patch{pinwheel::read_points_csv(path)};
    });
}

pw_status pw_patch_save_csv(const pw_patch* p, const char* path) {
    return guarded([&] {
        if (!p || !path) throw std::invalid_argument("null argument");
        pinwheel::write_points_csv(p->v, path);
    });
}

size_t pw_patch_size(const pw_patch* p) { return p ? p->v.tiles.size() : 0; }

void pw_patch_free(pw_patch* p) { delete p; }

pw_status pw_census_compute(int n, long long seed_plus, long long seed_minus, pw_census** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output handle");
        if (seed_plus < 0 || seed_minus < 0)
            throw std::invalid_argument("seed counts must be >= 0");
        *out = new pw_census{pinwheel::census_matrix(n, pinwheel::BigInt(seed_plus),
                                                     pinwheel::BigInt(seed_minus))};
    });
}

int pw_census_steps(const pw_census* c) { return c ? c->v.n : -1; }

pw_status pw_census_coeff(const pw_census* c, int chirality, int k, char* buf, size_t bufsize) {
    return guarded([&] {
        if (!c || !buf) throw std::invalid_argument("null argument");
        if (chirality != 1 && chirality != -1)
            throw std::invalid_argument("chirality must be +1 or -1");
        if (k < 0 || k > c->v.n) throw std::out_of_range("k outside 0..n");
        const pinwheel::BigInt& v =
            chirality == 1 ? c->v.fplus[static_cast<std::size_t>(k)]
                           : c->v.fminus[static_cast<std::size_t>(k)];
        std::string s = v.str();
        if (s.size() + 1 > bufsize) throw std::invalid_argument("buffer too small");
        std::memcpy(buf, s.c_str(), s.size() + 1);
    });
}

void pw_census_free(pw_census* c) { delete c; }

pw_status pw_autocorr_estimate(const pw_patch* p, long long wp_num, long long wp_den,
                               long long wm_num, long long wm_den, double rmax,
                               const char* estimator, int threads, pw_autocorr** out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        if (wp_den == 0 || wm_den == 0) throw std::invalid_argument("zero weight denominator");
        pinwheel::Weights w{pinwheel::BigRat(pinwheel::BigInt(wp_num), pinwheel::BigInt(wp_den)),
                            pinwheel::BigRat(pinwheel::BigInt(wm_num), pinwheel::BigInt(wm_den))};
        *out = new pw_autocorr{
            pinwheel::estimate_autocorr(p->v, w, rmax, parse_estimator(estimator), threads)};
    });
}

pw_status pw_autocorr_save_csv(const pw_autocorr* ac, const char* path) {
    return guarded([&] {
        if (!ac || !path) throw std::invalid_argument("null argument");
        pinwheel::write_autocorr_csv(ac->v, path);
    });
}

pw_status pw_autocorr_load_csv(const char* path, pw_autocorr** out) {
    return guarded([&] {
        if (!out || !path) throw std::invalid_argument("null argument");
        *out = new pw_autocorr{pinwheel::read_autocorr_csv(path)};
    });
}

size_t pw_autocorr_size(const pw_autocorr* ac) { return ac ? ac->v.coeffs.size() : 0; }

void pw_autocorr_free(pw_autocorr* ac) { delete ac; }

pw_status pw_profile_compute(const pw_autocorr* ac, double kmax, double dk, int threads,
                             pw_profile** out) {
    return guarded([&] {
        if (!ac || !out) throw std::invalid_argument("null argument");
        *out = new pw_profile{pinwheel::intensity_profile(ac->v, kmax, dk, threads)};
    });
}

pw_status pw_profile_load_csv(const char* path, pw_profile** out) {
    return guarded([&] {
        if (!out || !path) throw std::invalid_argument("null argument");
        *out = new pw_profile{pinwheel::read_intensity_csv(path)};
    });
}

pw_status pw_profile_save_csv(const pw_profile* p, const char* path) {
    return guarded([&] {
        if (!p || !path) throw std::invalid_argument("null argument");
        pinwheel::write_intensity_csv(p->v, path);
    });
}

pw_status pw_profile_ring_intensity(const pw_profile* p, double k0, double delta, double* out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        *out = pinwheel::ring_intensity(p->v, k0, delta);
    });
}

void pw_profile_free(pw_profile* p) { delete p; }

double pw_bessel_j0(double z) {
    try {
        return pinwheel::bessel_j0(z);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return std::numeric_limits<double>::quiet_NaN();
    }
}

pw_status pw_peaks_write(const pw_profile* p, uint64_t mmax, double delta,
                         const char* peaks_path, const char* fits_path) {
    return guarded([&] {
        if (!p || !peaks_path || !fits_path) throw std::invalid_argument("null argument");
        auto records = pinwheel::peak_table(p->v, mmax, delta);
        pinwheel::write_peaks_csv(records, peaks_path);
        pinwheel::write_fits_csv(pinwheel::group_fits(records), fits_path);
    });
}

pw_status pw_powder_write(uint64_t mmax, int normalize, double normalize_to, const char* path) {
    return guarded([&] {
        if (!path) throw std::invalid_argument("null argument");
        auto ref = pinwheel::powder_reference(
            mmax, normalize ? std::optional<double>(normalize_to) : std::nullopt);
        pinwheel::write_powder_csv(ref, path);
    });
}

}  // extern "C"
