// codimlab: exact computations on word-defined nonassociative algebras.
//
// Subcommands: words, algebra, codim, cocharacter, witness, phi, lemma-check,
// trajectory, scan. All numeric output is either exact (integers, rationals as
// p/q) or tagged with its working precision; runs are deterministic given the
// same configuration and seed.

#include <cstdio>
#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "codimlab/asymptotics.hpp"
#include "codimlab/codim.hpp"
#include "codimlab/error.hpp"
#include "codimlab/util.hpp"

namespace cl = codimlab;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct RunConfig {
    int threads = cl::hardware_threads_default();
    long precision = 128;
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> primes{cl::linalg::kPrime62a, cl::linalg::kPrime62b};
    std::size_t exact_threshold = 2000;
    cl::multilinear::Caps caps;

    cl::codim::CodimOptions codim_options() const {
        cl::codim::CodimOptions opt;
        opt.caps = caps;
        if (primes.size() >= 2) opt.primes = {primes[0], primes[1]};
        opt.exact_threshold = exact_threshold;
        opt.threads = threads;
        opt.prec = precision;
        return opt;
    }
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    cl::require(in.good(), cl::ErrorCode::InvalidParams, "cannot read config file " + path);
    json j = json::parse(in);
    cfg.threads = j.value("threads", cfg.threads);
    cfg.precision = j.value("precision", cfg.precision);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.exact_threshold = j.value("exact_threshold", cfg.exact_threshold);
    if (j.contains("primes")) cfg.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    if (j.contains("caps")) {
        const json& c = j.at("caps");
        cfg.caps.full = c.value("full", cfg.caps.full);
        cfg.caps.left_normed = c.value("left_normed", cfg.caps.left_normed);
        cfg.caps.cochar_full = c.value("cochar_full", cfg.caps.cochar_full);
        cfg.caps.cochar_left_normed = c.value("cochar_left_normed", cfg.caps.cochar_left_normed);
    }
}

struct ModelArgs {
    int m = 2;
    int d = 1;
    std::string word = "periodic:0";
    std::string flavor = "windowed";
    int depth = 0;  // 0 = choose from the requested degree
    bool unital = false;
    std::string model_file;

    cl::algebra::AlgebraModel build(int degree_needed) const {
        if (!model_file.empty()) {
            std::ifstream in(model_file);
            cl::require(in.good(), cl::ErrorCode::InvalidParams,
                        "cannot read model file " + model_file);
            json j = json::parse(in);
            int hint = depth;
            if (hint == 0 && j.value("flavor", std::string()) == "windowed" &&
                !j.contains("depth")) {
                const auto word_spec = cl::words::from_json(j.at("word"));
                hint = cl::algebra::AlgebraModel::recommended_depth(word_spec, degree_needed);
            }
            return cl::algebra::AlgebraModel::from_descriptor(j, hint);
        }
        const auto word_spec = cl::words::WordSpec::parse(word);
        const auto params = cl::algebra::AlgebraParams::of(m, d, word_spec);
        cl::algebra::AlgebraModel model = [&]() {
            if (flavor == "wrap" || flavor == "periodic-wrap")
                return cl::algebra::AlgebraModel::periodic_wrap(params);
            cl::require(flavor == "windowed", cl::ErrorCode::InvalidParams,
                        "flavor must be 'windowed' or 'wrap'");
            const int k = depth > 0
                              ? depth
                              : cl::algebra::AlgebraModel::recommended_depth(word_spec,
                                                                             degree_needed);
            return cl::algebra::AlgebraModel::windowed(params, k);
        }();
        return unital ? model.adjoin_unit() : model;
    }
};

void add_model_options(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("--m", args.m, "parameter m (>= 2)");
    cmd->add_option("--d", args.d, "parameter d (1 <= d <= m-1)");
    cmd->add_option("--word", args.word,
                    "word shorthand: periodic:0110 | mechanical:2/5 | sturmian:1,1,1,1");
    cmd->add_option("--flavor", args.flavor, "windowed | wrap");
    cmd->add_option("--depth", args.depth, "window depth (windowed flavor; 0 = automatic)");
    cmd->add_flag("--unital", args.unital, "adjoin an external unit");
    cmd->add_option("--model", args.model_file, "JSON model descriptor file");
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            cl::require(file_.good(), cl::ErrorCode::InvalidParams, "cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string real_field(const cl::Interval& v, long prec) {
    return v.to_string(25) + "@" + std::to_string(prec) + "b";
}

void write_banner(std::ostream& os, const RunConfig& cfg, const std::string& params,
                  std::optional<std::uint64_t> model_hash = std::nullopt) {
    os << "# codimlab " << kVersion;
    if (model_hash) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(*model_hash));
        os << " model=" << buf;
    }
    os << " seed=" << cfg.seed << " precision=" << cfg.precision << " " << params << "\n";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ",";
        line += cl::csv_quote(fields[i]);
    }
    return line;
}

// ---------------------------------------------------------------------------

int run_words(const RunConfig& cfg, const std::string& word, int n_max, int prefix_len,
              const std::string& csv_path) {
    const auto spec = cl::words::WordSpec::parse(word);
    Output out(csv_path);
    auto& os = out.stream();
    write_banner(os, cfg, "word=" + spec.to_string());
    os << "op,n,value\n";
    if (prefix_len > 0) {
        const auto bits = cl::words::prefix(spec, static_cast<std::size_t>(prefix_len));
        std::string s;
        for (auto b : bits) s += static_cast<char>('0' + b);
        os << csv_row({"prefix", std::to_string(prefix_len), s}) << "\n";
    }
    for (int n = 1; n <= n_max; ++n)
        os << csv_row({"complexity", std::to_string(n),
                       std::to_string(cl::words::complexity(spec, static_cast<std::size_t>(n)))})
           << "\n";
    const auto sl = cl::words::slope(spec);
    const std::string slope_str = sl.exact()
                                      ? cl::rational_to_string(sl.lo)
                                      : "[" + cl::rational_to_string(sl.lo) + "," +
                                            cl::rational_to_string(sl.hi) + "]";
    os << csv_row({"slope", "", slope_str}) << "\n";
    os << csv_row({"balance", std::to_string(n_max),
                   std::to_string(cl::words::balance_constant(spec, static_cast<std::size_t>(n_max)))})
       << "\n";
    os << csv_row({"deviation", std::to_string(n_max),
                   cl::rational_to_string(cl::words::factor_height_deviation(
                       spec, static_cast<std::size_t>(n_max)))})
       << "\n";
    return 0;
}

int run_algebra_check(const RunConfig& cfg, const ModelArgs& margs, int degree) {
    const auto model = margs.build(degree);
    Output out("");
    auto& os = out.stream();
    write_banner(os, cfg, "degree=" + std::to_string(degree), model.descriptor_hash());
    os << "check,result,expected\n";
    bool all_ok = true;
    auto row = [&](const std::string& name, bool got, bool expect) {
        os << name << "," << (got ? "true" : "false") << "," << (expect ? "true" : "false")
           << "\n";
        if (got != expect) all_ok = false;
    };
    row("left_annihilator_identity", model.verify_left_annihilator_identity(),
        !model.unital());
    row("z_ideal_zero_multiplication", model.verify_z_ideal(), true);
    if (model.unital()) {
        bool unit_ok = true;
        for (const auto& e : model.basis_elements(model.depth())) {
            if (!(model.multiply(cl::algebra::Elem::unit(), e) == e)) unit_ok = false;
            if (!(model.multiply(e, cl::algebra::Elem::unit()) == e)) unit_ok = false;
        }
        row("unit_axiom", unit_ok, true);
    }
    os << "overall," << (all_ok ? "pass" : "fail") << ",\n";
    return all_ok ? 0 : 4;
}

int run_codim(const RunConfig& cfg, const ModelArgs& margs, int n_max,
              const std::string& mode_name, bool with_cocharacter,
              const std::string& csv_path, const std::string& json_path) {
    const auto model = margs.build(n_max);
    const auto opt = cfg.codim_options();
    cl::codim::RankMode mode = cl::codim::RankMode::Auto;
    if (mode_name == "full") mode = cl::codim::RankMode::Full;
    else if (mode_name == "left-normed") mode = cl::codim::RankMode::LeftNormed;
    else cl::require(mode_name == "auto", cl::ErrorCode::InvalidParams,
                     "mode must be auto|full|left-normed");

    // fail fast before the degree loop starts grinding
    const bool full_mode = mode == cl::codim::RankMode::Full ||
                           (mode == cl::codim::RankMode::Auto && model.unital());
    const int cap = with_cocharacter
                        ? (full_mode ? cfg.caps.cochar_full : cfg.caps.cochar_left_normed)
                        : (full_mode ? cfg.caps.full : cfg.caps.left_normed);
    cl::require(n_max <= cap, cl::ErrorCode::CapExceeded,
                "degree " + std::to_string(n_max) + " exceeds the cap " + std::to_string(cap));

    std::vector<cl::codim::CodimReport> reports;
    for (int n = 1; n <= n_max; ++n) {
        if (with_cocharacter)
            reports.push_back(cl::codim::cocharacter(model, n, opt));
        else
            reports.push_back(cl::codim::codimension(model, n, mode, opt));
    }

    Output out(csv_path);
    auto& os = out.stream();
    write_banner(os, cfg,
                 "n_max=" + std::to_string(n_max) + " cocharacter=" +
                     (with_cocharacter ? "yes" : "no"),
                 model.descriptor_hash());
    os << "n,c_n,l_n,dim_P_n,prime_ranks_agree,exact\n";
    for (const auto& r : reports) {
        const bool agree = r.cert.prime_ranks.size() == 2 &&
                           r.cert.prime_ranks[0] == r.cert.prime_ranks[1];
        os << csv_row({std::to_string(r.n), std::to_string(r.c_n),
                       r.colength ? std::to_string(*r.colength) : "",
                       std::to_string(r.dim_p_n), agree ? "yes" : "no",
                       r.cert.exact_confirmed ? "yes" : "no"})
           << "\n";
    }
    if (with_cocharacter) {
        os << "n,lambda,m_lambda,d_lambda,phi\n";
        for (const auto& r : reports) {
            if (!r.multiplicities) continue;
            for (const auto& [lambda, m] : *r.multiplicities) {
                os << csv_row({std::to_string(r.n), lambda.to_string(), std::to_string(m),
                               cl::repr::hook_dimension(lambda).get_str(),
                               real_field(cl::repr::phi_of_partition(lambda, lambda.height(),
                                                                     cfg.precision),
                                          cfg.precision)})
                   << "\n";
            }
        }
    }
    if (!json_path.empty()) {
        json j;
        j["tool"] = std::string("codimlab ") + kVersion;
        j["seed"] = cfg.seed;
        j["model"] = model.descriptor();
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(cl::codim::report_to_json(r, cfg.precision));
        std::ofstream jf(json_path);
        jf << j.dump(2) << "\n";
    }
    return 0;
}

int run_witness(const RunConfig& cfg, const ModelArgs& margs, int t,
                const std::string& json_path) {
    const auto word_spec = cl::words::WordSpec::parse(margs.word);
    const auto params = cl::algebra::AlgebraParams::of(margs.m, margs.d, word_spec);
    const auto witness = cl::multilinear::build_witness(params, t, cfg.caps);
    const auto model = cl::algebra::AlgebraModel::windowed(
        params, cl::algebra::AlgebraModel::recommended_depth(word_spec, witness.degree));
    const auto image = cl::multilinear::evaluate_polynomial(witness.f, witness.phi, model);
    const auto info = cl::asymptotics::witness_partition(margs.m, margs.d, word_spec, t);

    Output out("");
    auto& os = out.stream();
    write_banner(os, cfg, "t=" + std::to_string(t), model.descriptor_hash());
    os << "field,value\n";
    os << "degree," << witness.degree << "\n";
    os << "terms," << witness.f.term_count() << "\n";
    std::string sizes;
    for (std::size_t i = 0; i < witness.alternation_sets.size(); ++i) {
        if (i) sizes += " ";
        sizes += std::to_string(witness.alternation_sets[i].size());
    }
    os << csv_row({"alternation_set_sizes", sizes}) << "\n";
    os << csv_row({"witness_partition", info.lambda.to_string()}) << "\n";
    os << csv_row({"beta", cl::rational_to_string(info.beta)}) << "\n";
    for (const auto& [elem, coeff] : image)
        os << csv_row({"image", elem.to_string() + " * " + cl::rational_to_string(coeff)})
           << "\n";
    if (image.empty()) os << "image,0\n";
    if (!json_path.empty()) {
        json j;
        j["degree"] = witness.degree;
        j["t"] = t;
        j["polynomial"] = cl::multilinear::polynomial_to_json(witness.f);
        j["phi"] = witness.phi.to_string();
        std::ofstream jf(json_path);
        jf << j.dump(2) << "\n";
    }
    return 0;
}

int run_phi(const RunConfig& cfg, const std::string& partition, int d) {
    const auto lambda = cl::repr::Partition::parse(partition);
    const int dd = d > 0 ? d : lambda.height();
    const auto value = cl::repr::phi_of_partition(lambda, dd, cfg.precision);
    Output out("");
    auto& os = out.stream();
    write_banner(os, cfg, "partition=" + lambda.to_string() + " d=" + std::to_string(dd));
    os << "partition,d,phi\n";
    os << csv_row({lambda.to_string(), std::to_string(dd), real_field(value, cfg.precision)})
       << "\n";
    return 0;
}

int run_lemma_check(const RunConfig& cfg, const std::string& which,
                    const std::string& partition, int d, double a, int count) {
    Output out("");
    auto& os = out.stream();
    if (which == "L1") {
        cl::require(!partition.empty(), cl::ErrorCode::InvalidParams,
                    "lemma-check L1 needs --partition");
        const auto lambda = cl::repr::Partition::parse(partition);
        const int dd = d > 0 ? d : lambda.height();
        const auto check = cl::repr::check_L1(lambda, dd, cfg.precision);
        write_banner(os, cfg, "check=L1 partition=" + lambda.to_string());
        os << "check,partition,d,hypothesis_ok,lower_ok,upper_ok,lower_margin,upper_margin\n";
        os << csv_row({"L1", lambda.to_string(), std::to_string(dd),
                       check.hypothesis_ok ? "true" : "false",
                       check.lower_ok ? "true" : "false", check.upper_ok ? "true" : "false",
                       real_field(check.lower_margin, cfg.precision),
                       real_field(check.upper_margin, cfg.precision)})
           << "\n";
        const bool pass = check.lower_ok && check.upper_ok;
        os << "result," << (pass ? "pass" : "fail") << "\n";
        return pass ? 0 : 4;
    }
    if (which == "L2") {
        cl::Rng rng(cfg.seed);
        std::map<long long, std::vector<cl::repr::Partition>> cache;
        int violations = 0;
        int performed = 0;
        while (performed < count) {
            const long long n = 2 + static_cast<long long>(rng.below(40));
            auto it = cache.find(n);
            if (it == cache.end()) it = cache.emplace(n, cl::repr::partitions_of(n)).first;
            const auto& shapes = it->second;
            const auto& lambda = shapes[rng.below(shapes.size())];
            const int h = lambda.height();
            const int from = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(h)));
            const int to = from + 1 +
                           static_cast<int>(rng.below(static_cast<std::uint64_t>(h - from + 1)));
            try {
                (void)cl::repr::push_down(lambda, from, to);  // certifies Phi monotonicity
                ++performed;
            } catch (const cl::Error& e) {
                if (e.code() == cl::ErrorCode::InvalidMove) continue;
                ++violations;
                ++performed;
            }
        }
        write_banner(os, cfg, "check=L2 count=" + std::to_string(count));
        os << "check,count,violations\n";
        os << "L2," << count << "," << violations << "\n";
        os << "result," << (violations == 0 ? "pass" : "fail") << "\n";
        return violations == 0 ? 0 : 4;
    }
    if (which == "L3") {
        const auto r = cl::repr::maximize_added_row(a);
        const double delta = std::abs(r.value - r.value_numeric);
        write_banner(os, cfg, "check=L3 a=" + std::to_string(a));
        os << "check,a,t_star,value,t_numeric,value_numeric,delta\n";
        char buf[256];
        std::snprintf(buf, sizeof(buf), "L3,%.17g,%.17g,%.17g,%.17g,%.17g,%.3g", a, r.t_star,
                      r.value, r.t_numeric, r.value_numeric, delta);
        os << buf << "\n";
        const bool pass = delta <= 1e-9;
        os << "result," << (pass ? "pass" : "fail") << "\n";
        return pass ? 0 : 4;
    }
    cl::fail(cl::ErrorCode::InvalidParams, "unknown lemma check '" + which + "'");
}

int run_trajectory(const RunConfig& cfg, const ModelArgs& margs, int n_max,
                   bool no_cocharacter, const std::string& csv_path) {
    const auto model = margs.build(n_max);
    const auto report =
        cl::asymptotics::trajectory(model, n_max, cfg.codim_options(), !no_cocharacter);
    Output out(csv_path);
    auto& os = out.stream();
    write_banner(os, cfg, "n_max=" + std::to_string(n_max), model.descriptor_hash());
    os << "n,c_n,root,lower,upper,target,unital_target\n";
    const std::string target_str = real_field(report.goal.value, cfg.precision);
    const std::string unital_str = real_field(report.goal.unital_value, cfg.precision);
    for (const auto& row : report.rows) {
        char root_buf[64];
        std::snprintf(root_buf, sizeof(root_buf), "%.12g", row.root);
        os << csv_row({std::to_string(row.n), std::to_string(row.c_n), root_buf,
                       row.lower.get_str(), row.upper.get_str(), target_str, unital_str})
           << "\n";
    }
    os << "monotone," << (report.monotone ? "yes" : "no") << "\n";
    return 0;
}

int run_scan(const RunConfig& cfg, const std::string& gamma_text, const std::string& eps_text) {
    const mpq_class gamma = cl::rational_from_decimal(gamma_text);
    const mpq_class eps = cl::rational_from_decimal(eps_text);
    const auto res = cl::asymptotics::density_scan(gamma, eps, cfg.precision);
    Output out("");
    auto& os = out.stream();
    write_banner(os, cfg, "gamma=" + gamma_text + " eps=" + eps_text);
    os << "gamma,eps,m,d,q,achieved,boundary,note\n";
    os << csv_row({cl::rational_to_string(gamma), cl::rational_to_string(eps),
                   std::to_string(res.m), std::to_string(res.d), cl::rational_to_string(res.q),
                   real_field(res.achieved, cfg.precision), res.boundary ? "yes" : "no",
                   res.note})
       << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // --config gives defaults; explicit flags override them below.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(cfg, argv[i + 1]);
            } catch (const cl::Error& e) {
                json err{{"error", cl::error_code_name(e.code())}, {"message", e.what()}};
                std::cerr << err.dump() << "\n";
                return cl::error_exit_status(e.code());
            } catch (const std::exception& e) {
                json err{{"error", "InvalidParams"}, {"message", e.what()}};
                std::cerr << err.dump() << "\n";
                return 2;
            }
        }
    }

    CLI::App app{"exact codimension laboratory for word-defined algebras"};
    app.set_version_flag("--version", std::string("codimlab ") + kVersion);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags win on conflict)");
    app.add_option("--threads", cfg.threads, "worker threads (env CODIMLAB_THREADS)");
    app.add_option("--precision", cfg.precision, "working precision in bits");
    app.add_option("--seed", cfg.seed, "seed for randomized property checks");
    app.add_option("--primes", cfg.primes, "primes for modular rank (two expected)");
    app.add_option("--exact-threshold", cfg.exact_threshold,
                   "run exact elimination when dim P_n is at most this");
    app.add_option("--cap-full", cfg.caps.full, "full-mode degree cap");
    app.add_option("--cap-left-normed", cfg.caps.left_normed, "left-normed degree cap");
    app.add_option("--cochar-cap-full", cfg.caps.cochar_full, "full-mode cocharacter cap");
    app.add_option("--cochar-cap-left-normed", cfg.caps.cochar_left_normed,
                   "left-normed cocharacter cap");
    app.require_subcommand(1);
    app.fallthrough();

    // words
    auto* words_cmd = app.add_subcommand("words", "prefix/complexity/slope/balance of a word");
    words_cmd->fallthrough();
    std::string words_word = "periodic:0";
    int words_nmax = 8, words_prefix = 0;
    std::string words_csv;
    words_cmd->add_option("--word", words_word, "word shorthand")->required();
    words_cmd->add_option("--n-max", words_nmax, "largest factor length");
    words_cmd->add_option("--prefix", words_prefix, "also print a prefix of this length");
    words_cmd->add_option("--csv", words_csv, "write CSV here instead of stdout");

    // algebra check
    auto* algebra_cmd = app.add_subcommand("algebra", "model invariant checks");
    algebra_cmd->fallthrough();
    auto* algebra_check = algebra_cmd->add_subcommand("check", "run the invariant suite");
    algebra_check->fallthrough();
    ModelArgs algebra_args;
    int algebra_degree = 4;
    add_model_options(algebra_check, algebra_args);
    algebra_check->add_option("--degree", algebra_degree, "degree used to size the window");

    // codim / cocharacter
    ModelArgs codim_args;
    int codim_n = 4;
    bool codim_cochar = false;
    std::string codim_mode = "auto", codim_csv, codim_json;
    auto* codim_cmd = app.add_subcommand("codim", "codimensions c_1..c_n of a model");
    codim_cmd->fallthrough();
    add_model_options(codim_cmd, codim_args);
    codim_cmd->add_option("--n", codim_n, "compute degrees 1..n")->required();
    codim_cmd->add_option("--mode", codim_mode, "auto | full | left-normed");
    codim_cmd->add_flag("--cocharacter", codim_cochar, "also compute multiplicities");
    codim_cmd->add_option("--csv", codim_csv, "write CSV here instead of stdout");
    codim_cmd->add_option("--json", codim_json, "also write a JSON report here");

    ModelArgs cochar_args;
    int cochar_n = 3;
    std::string cochar_csv, cochar_json;
    auto* cochar_cmd =
        app.add_subcommand("cocharacter", "codimensions with multiplicities and colength");
    cochar_cmd->fallthrough();
    add_model_options(cochar_cmd, cochar_args);
    cochar_cmd->add_option("--n", cochar_n, "compute degrees 1..n")->required();
    cochar_cmd->add_option("--csv", cochar_csv, "write CSV here instead of stdout");
    cochar_cmd->add_option("--json", cochar_json, "also write a JSON report here");

    // witness
    ModelArgs witness_args;
    int witness_t = 1;
    std::string witness_json;
    auto* witness_cmd = app.add_subcommand("witness", "alternated witness polynomial f_t");
    witness_cmd->fallthrough();
    add_model_options(witness_cmd, witness_args);
    witness_cmd->add_option("--t", witness_t, "witness index")->required();
    witness_cmd->add_option("--json", witness_json, "dump the polynomial as JSON here");

    // phi
    std::string phi_partition;
    int phi_d = 0;
    auto* phi_cmd = app.add_subcommand("phi", "Phi value of a normalized partition");
    phi_cmd->fallthrough();
    phi_cmd->add_option("--partition", phi_partition, "e.g. 50,50")->required();
    phi_cmd->add_option("--d", phi_d, "number of coordinates (default: height)");

    // lemma-check
    std::string lemma_which, lemma_partition;
    int lemma_d = 0, lemma_count = 1000;
    double lemma_a = 1.0;
    auto* lemma_cmd = app.add_subcommand("lemma-check", "L1 | L2 | L3 verifiers");
    lemma_cmd->fallthrough();
    lemma_cmd->add_option("which", lemma_which, "L1, L2 or L3")->required();
    lemma_cmd->add_option("--partition", lemma_partition, "L1: the shape");
    lemma_cmd->add_option("--d", lemma_d, "L1: coordinate count");
    lemma_cmd->add_option("--count", lemma_count, "L2: number of random moves");
    lemma_cmd->add_option("--a", lemma_a, "L3: the fixed Phi value");

    // trajectory
    ModelArgs traj_args;
    int traj_nmax = 5;
    bool traj_no_cochar = false;
    std::string traj_csv;
    auto* traj_cmd = app.add_subcommand("trajectory", "finite-degree sandwich vs the target");
    traj_cmd->fallthrough();
    add_model_options(traj_cmd, traj_args);
    traj_cmd->add_option("--n-max", traj_nmax, "largest degree")->required();
    traj_cmd->add_flag("--no-cocharacter", traj_no_cochar, "skip multiplicity upper bounds");
    traj_cmd->add_option("--csv", traj_csv, "write CSV here instead of stdout");

    // scan
    std::string scan_gamma, scan_eps = "1e-4";
    auto* scan_cmd = app.add_subcommand("scan", "find (m,d,q) whose unital target hits gamma");
    scan_cmd->fallthrough();
    scan_cmd->add_option("--gamma", scan_gamma, "wanted unital exponent (>= 2)")->required();
    scan_cmd->add_option("--eps", scan_eps, "tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::ostringstream silent;
        app.exit(e, silent, silent);
        json err{{"error", "InvalidParams"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        cfg.caps.validate();
        if (words_cmd->parsed())
            return run_words(cfg, words_word, words_nmax, words_prefix, words_csv);
        if (algebra_cmd->parsed()) {
            cl::require(algebra_check->parsed(), cl::ErrorCode::InvalidParams,
                        "usage: codimlab algebra check ...");
            return run_algebra_check(cfg, algebra_args, algebra_degree);
        }
        if (codim_cmd->parsed())
            return run_codim(cfg, codim_args, codim_n, codim_mode, codim_cochar, codim_csv,
                             codim_json);
        if (cochar_cmd->parsed())
            return run_codim(cfg, cochar_args, cochar_n, "auto", true, cochar_csv, cochar_json);
        if (witness_cmd->parsed()) return run_witness(cfg, witness_args, witness_t, witness_json);
        if (phi_cmd->parsed()) return run_phi(cfg, phi_partition, phi_d);
        if (lemma_cmd->parsed())
            return run_lemma_check(cfg, lemma_which, lemma_partition, lemma_d, lemma_a,
                                   lemma_count);
        if (traj_cmd->parsed())
            return run_trajectory(cfg, traj_args, traj_nmax, traj_no_cochar, traj_csv);
        if (scan_cmd->parsed()) return run_scan(cfg, scan_gamma, scan_eps);
        return 2;
    } catch (const cl::Error& e) {
        json err{{"error", cl::error_code_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return cl::error_exit_status(e.code());
    } catch (const std::exception& e) {
        json err{{"error", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 4;
    }
}
