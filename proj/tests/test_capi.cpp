#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>

#include "pinwheel.h"

namespace {

std::string tmp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("c api: generate, save, load") {
    pw_patch* patch = nullptr;
    REQUIRE(pw_patch_generate(2, "single", 9, &patch) == PW_OK);
    CHECK(pw_patch_size(patch) == 25);

    const std::string path = tmp_path("pw_capi_points.csv");
    REQUIRE(pw_patch_save_csv(patch, path.c_str()) == PW_OK);
    pw_patch* loaded = nullptr;
    REQUIRE(pw_patch_load_csv(path.c_str(), &loaded) == PW_OK);
    CHECK(pw_patch_size(loaded) == 25);
    pw_patch_free(loaded);
    pw_patch_free(patch);
    std::filesystem::remove(path);
}

TEST_CASE("c api: error codes and messages") {
    pw_patch* patch = nullptr;
    CHECK(pw_patch_generate(12, "single", 9, &patch) == PW_ERR_LIMIT);
    CHECK(std::strlen(pw_last_error()) > 0);
    CHECK(pw_patch_generate(2, "hexagon", 9, &patch) == PW_ERR_PARAM);
    CHECK(pw_patch_load_csv("/nonexistent/points.csv", &patch) == PW_ERR_IO);

    pw_census* census = nullptr;
    CHECK(pw_census_compute(-1, 1, 1, &census) == PW_ERR_PARAM);
}

TEST_CASE("c api: census coefficients as decimal strings") {
    pw_census* census = nullptr;
    REQUIRE(pw_census_compute(2, 1, 1, &census) == PW_OK);
    CHECK(pw_census_steps(census) == 2);
    char buf[64];
    REQUIRE(pw_census_coeff(census, +1, 1, buf, sizeof(buf)) == PW_OK);
    CHECK(std::string(buf) == "15");
    REQUIRE(pw_census_coeff(census, -1, 0, buf, sizeof(buf)) == PW_OK);
    CHECK(std::string(buf) == "6");
    CHECK(pw_census_coeff(census, -1, 5, buf, sizeof(buf)) == PW_ERR_PARAM);
    CHECK(pw_census_coeff(census, +1, 0, buf, 1) == PW_ERR_PARAM);
    pw_census_free(census);

    // Big-integer territory: 2 * 5^40 total, spot the symmetry f+(0) = f-(40).
    REQUIRE(pw_census_compute(40, 1, 1, &census) == PW_OK);
    char lo[128], hi[128];
    REQUIRE(pw_census_coeff(census, +1, 0, lo, sizeof(lo)) == PW_OK);
    REQUIRE(pw_census_coeff(census, -1, 40, hi, sizeof(hi)) == PW_OK);
    CHECK(std::string(lo) == hi);
    CHECK(std::string(lo) == "1099511627776");  // 2^40
    pw_census_free(census);
}

TEST_CASE("c api: pipeline through files") {
    pw_patch* patch = nullptr;
    REQUIRE(pw_patch_generate(3, "single", 9, &patch) == PW_OK);

    pw_autocorr* ac = nullptr;
    REQUIRE(pw_autocorr_estimate(patch, 1, 1, -1, 1, 4.0, "all-pairs", 0, &ac) == PW_OK);
    pw_patch_free(patch);
    CHECK(pw_autocorr_size(ac) > 4);

    const std::string ac_path = tmp_path("pw_capi_ac.csv");
    REQUIRE(pw_autocorr_save_csv(ac, ac_path.c_str()) == PW_OK);
    pw_autocorr* ac2 = nullptr;
    REQUIRE(pw_autocorr_load_csv(ac_path.c_str(), &ac2) == PW_OK);
    CHECK(pw_autocorr_size(ac2) == pw_autocorr_size(ac));
    pw_autocorr_free(ac);

    pw_profile* prof = nullptr;
    REQUIRE(pw_profile_compute(ac2, 2.0, 0.001, 0, &prof) == PW_OK);
    pw_autocorr_free(ac2);

    double ring = 0.0;
    REQUIRE(pw_profile_ring_intensity(prof, 1.0, 0.01, &ring) == PW_OK);
    CHECK(pw_profile_ring_intensity(prof, 5.0, 0.01, &ring) == PW_ERR_PARAM);

    const std::string prof_path = tmp_path("pw_capi_prof.csv");
    REQUIRE(pw_profile_save_csv(prof, prof_path.c_str()) == PW_OK);
    pw_profile* prof2 = nullptr;
    REQUIRE(pw_profile_load_csv(prof_path.c_str(), &prof2) == PW_OK);
    pw_profile_free(prof);

    const std::string peaks_path = tmp_path("pw_capi_peaks.csv");
    const std::string fits_path = tmp_path("pw_capi_fits.csv");
    REQUIRE(pw_peaks_write(prof2, 3, 0.01, peaks_path.c_str(), fits_path.c_str()) == PW_OK);
    pw_profile_free(prof2);

    const std::string powder_path = tmp_path("pw_capi_powder.csv");
    REQUIRE(pw_powder_write(5, 1, 1.0, powder_path.c_str()) == PW_OK);

    for (const std::string& p : {ac_path, prof_path, peaks_path, fits_path, powder_path}) {
        CHECK(std::filesystem::exists(p));
        std::filesystem::remove(p);
    }
}

TEST_CASE("c api: bessel") {
    CHECK(pw_bessel_j0(0.0) == 1.0);
    CHECK(std::isnan(pw_bessel_j0(-1.0)));
    CHECK(std::string(pw_version()).size() > 0);
}
