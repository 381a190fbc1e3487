// Command-line front end for the pinwheel library. Orchestrates patch
// generation, autocorrelation, diffraction and peak analysis through the
// shared-library C API and records a manifest per run.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinwheel.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitIo = 3;
constexpr int kExitLimit = 4;

int status_to_exit(pw_status s) {
    switch (s) {
        case PW_OK: return kExitOk;
        case PW_ERR_PARAM: return kExitParam;
        case PW_ERR_IO: return kExitIo;
        case PW_ERR_LIMIT: return kExitLimit;
        default: return 1;
    }
}

[[noreturn]] void die(pw_status s) {
    std::cerr << "pinwheel: " << pw_last_error() << "\n";
    std::exit(status_to_exit(s));
}

void check(pw_status s) {
    if (s != PW_OK) die(s);
}

struct Options {
    int steps = 7;
    std::string seed = "single";
    std::string weights = "1,1";
    double rmax = 30.0;
    std::string estimator = "eroded-core";
    double kmax = 4.0;
    double dk = 0.001;
    double delta = 0.01;
    std::uint64_t mmax = 100;
    std::string out_dir = ".";
    int threads = 0;
    int steps_cap = 9;
};

std::pair<long long, long long> parse_weights(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        std::cerr << "pinwheel: --weights expects two integers 'a+,a-'\n";
        std::exit(kExitParam);
    }
    try {
        return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
    } catch (const std::exception&) {
        std::cerr << "pinwheel: --weights expects two integers 'a+,a-'\n";
        std::exit(kExitParam);
    }
}

std::string out_path(const Options& opt, const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    return (std::filesystem::path(opt.out_dir) / name).string();
}

class Manifest {
  public:
    Manifest(const Options& opt, std::string command) : opt_(opt) {
        start_ = std::chrono::steady_clock::now();
        j_["command"] = std::move(command);
        j_["parameters"] = ordered_json::object();
        j_["inputs"] = ordered_json::array();
        j_["outputs"] = ordered_json::array();
    }
    template <typename T>
    void param(const std::string& key, const T& v) {
        j_["parameters"][key] = v;
    }
    void input(const std::string& path) { j_["inputs"].push_back(path); }
    void output(const std::string& path) { j_["outputs"].push_back(path); }

    void write() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        j_["wall_clock_seconds"] = secs;
        j_["library_version"] = pw_version();
        const std::string path = out_path(opt_, "manifest.json");
        std::ofstream os(path);
        if (!os) {
            std::cerr << "pinwheel: cannot write " << path << "\n";
            std::exit(kExitIo);
        }
        os << j_.dump(2) << "\n";
    }

  private:
    const Options& opt_;
    ordered_json j_;
    std::chrono::steady_clock::time_point start_;
};

int cmd_generate(const Options& opt) {
    Manifest man(opt, "generate");
    man.param("steps", opt.steps);
    man.param("seed", opt.seed);
    man.param("steps_cap", opt.steps_cap);

    pw_patch* patch = nullptr;
    check(pw_patch_generate(opt.steps, opt.seed.c_str(), opt.steps_cap, &patch));
    const std::string path = out_path(opt, "points.csv");
    pw_status s = pw_patch_save_csv(patch, path.c_str());
    const size_t n = pw_patch_size(patch);
    pw_patch_free(patch);
    check(s);
    man.output(path);
    man.write();
    std::cout << "wrote " << path << " (" << n << " tiles)\n";
    return kExitOk;
}

int cmd_census(const Options& opt, const std::string& seed) {
    long long sp = 1, sm = 1;
    if (seed == "single") sm = 0;
    pw_census* c = nullptr;
    check(pw_census_compute(opt.steps, sp, sm, &c));
    const int n = pw_census_steps(c);
    char buf[256];
    std::cout << "n " << n << " seed (" << sp << "," << sm << ")\n";
    for (int chi : {+1, -1}) {
        std::cout << (chi > 0 ? "f+" : "f-");
        for (int k = 0; k <= n; ++k) {
            check(pw_census_coeff(c, chi, k, buf, sizeof(buf)));
            std::cout << ' ' << buf;
        }
        std::cout << '\n';
    }
    pw_census_free(c);
    return kExitOk;
}

int cmd_autocorr(const Options& opt, const std::string& points_file) {
    Manifest man(opt, "autocorr");
    man.param("weights", opt.weights);
    man.param("rmax", opt.rmax);
    man.param("estimator", opt.estimator);
    man.param("threads", opt.threads);
    man.input(points_file);

    auto [wp, wm] = parse_weights(opt.weights);
    pw_patch* patch = nullptr;
    check(pw_patch_load_csv(points_file.c_str(), &patch));
    pw_autocorr* ac = nullptr;
    pw_status s = pw_autocorr_estimate(patch, wp, 1, wm, 1, opt.rmax, opt.estimator.c_str(),
                                       opt.threads, &ac);
    pw_patch_free(patch);
    check(s);
    const std::string path = out_path(opt, "autocorr.csv");
    s = pw_autocorr_save_csv(ac, path.c_str());
    const size_t n = pw_autocorr_size(ac);
    pw_autocorr_free(ac);
    check(s);
    man.output(path);
    man.write();
    std::cout << "wrote " << path << " (" << n << " distances)\n";
    return kExitOk;
}

int cmd_diffract(const Options& opt, const std::string& autocorr_file) {
    Manifest man(opt, "diffract");
    man.param("kmax", opt.kmax);
    man.param("dk", opt.dk);
    man.param("threads", opt.threads);
    man.input(autocorr_file);

    pw_autocorr* ac = nullptr;
    check(pw_autocorr_load_csv(autocorr_file.c_str(), &ac));
    pw_profile* prof = nullptr;
    pw_status s = pw_profile_compute(ac, opt.kmax, opt.dk, opt.threads, &prof);
    pw_autocorr_free(ac);
    check(s);
    const std::string path = out_path(opt, "intensity.csv");
    s = pw_profile_save_csv(prof, path.c_str());
    pw_profile_free(prof);
    check(s);
    man.output(path);
    man.write();
    std::cout << "wrote " << path << "\n";
    return kExitOk;
}

int cmd_peaks(const Options& opt, const std::string& intensity_file) {
    Manifest man(opt, "peaks");
    man.param("mmax", opt.mmax);
    man.param("delta", opt.delta);
    man.input(intensity_file);

    pw_profile* prof = nullptr;
    check(pw_profile_load_csv(intensity_file.c_str(), &prof));
    const std::string peaks_path = out_path(opt, "peaks.csv");
    const std::string fits_path = out_path(opt, "fits.csv");
    pw_status s = pw_peaks_write(prof, opt.mmax, opt.delta, peaks_path.c_str(), fits_path.c_str());
    pw_profile_free(prof);
    check(s);
    man.output(peaks_path);
    man.output(fits_path);
    man.write();
    std::cout << "wrote " << peaks_path << " and " << fits_path << "\n";
    return kExitOk;
}

int cmd_powder(const Options& opt, bool normalize, double normalize_to) {
    Manifest man(opt, "powder");
    man.param("mmax", opt.mmax);
    if (normalize) man.param("normalize", normalize_to);

    const std::string path = out_path(opt, "powder.csv");
    check(pw_powder_write(opt.mmax, normalize ? 1 : 0, normalize_to, path.c_str()));
    man.output(path);
    man.write();
    std::cout << "wrote " << path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pinwheel tiling generation, correlation and diffraction"};
    app.require_subcommand(1);
    Options opt;

    auto* gen = app.add_subcommand("generate", "inflate a seed and write points.csv");
    gen->add_option("--steps", opt.steps, "inflation steps");
    gen->add_option("--seed", opt.seed, "'single' or 'census-pair'")
        ->check(CLI::IsMember({"single", "census-pair"}));
    gen->add_option("--steps-cap", opt.steps_cap, "refuse runs above this step count");
    gen->add_option("--out-dir", opt.out_dir, "output directory");

    std::string census_seed = "census-pair";
    auto* cen = app.add_subcommand("census", "print the orientation census table");
    cen->add_option("--steps", opt.steps, "inflation steps");
    cen->add_option("--seed", census_seed, "'single' or 'census-pair'")
        ->check(CLI::IsMember({"single", "census-pair"}));

    std::string points_file, autocorr_file, intensity_file;
    auto* aco = app.add_subcommand("autocorr", "estimate radial autocorrelation coefficients");
    aco->add_option("points", points_file, "points.csv from generate")->required();
    aco->add_option("--weights", opt.weights, "chirality weights 'a+,a-'");
    aco->add_option("--rmax", opt.rmax, "maximum pair distance");
    aco->add_option("--estimator", opt.estimator, "'all-pairs' or 'eroded-core'");
    aco->add_option("--threads", opt.threads, "worker threads (0 = auto)");
    aco->add_option("--out-dir", opt.out_dir, "output directory");

    auto* dif = app.add_subcommand("diffract", "evaluate the radial intensity profile");
    dif->add_option("autocorr", autocorr_file, "autocorr.csv")->required();
    dif->add_option("--kmax", opt.kmax, "grid end");
    dif->add_option("--dk", opt.dk, "grid spacing");
    dif->add_option("--threads", opt.threads, "worker threads (0 = auto)");
    dif->add_option("--out-dir", opt.out_dir, "output directory");

    auto* pk = app.add_subcommand("peaks", "ring intensities, classification and c/k fits");
    pk->add_option("intensity", intensity_file, "intensity.csv")->required();
    pk->add_option("--mmax", opt.mmax, "largest k^2");
    pk->add_option("--delta", opt.delta, "ring integration half-width");
    pk->add_option("--out-dir", opt.out_dir, "output directory");

    bool normalize = false;
    double normalize_to = 1.0;
    auto* pow = app.add_subcommand("powder", "square-lattice powder reference rings");
    pow->add_option("--mmax", opt.mmax, "largest k^2");
    auto* nopt = pow->add_option("--normalize", normalize_to, "rescale the k=1 ring to this value");
    pow->add_option("--out-dir", opt.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParam;
    }
    normalize = nopt->count() > 0;

    if (gen->parsed()) return cmd_generate(opt);
    if (cen->parsed()) return cmd_census(opt, census_seed);
    if (aco->parsed()) return cmd_autocorr(opt, points_file);
    if (dif->parsed()) return cmd_diffract(opt, autocorr_file);
    if (pk->parsed()) return cmd_peaks(opt, intensity_file);
    if (pow->parsed()) return cmd_powder(opt, normalize, normalize_to);
    return kExitParam;
}
