#include "afbd/cli.hpp"

#include "afbd/backdoor.hpp"
#include "afbd/error.hpp"
#include "afbd/eval.hpp"
#include "afbd/fragments.hpp"
#include "afbd/gadgets.hpp"
#include "afbd/io.hpp"
#include "afbd/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace afbd::cli {

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

const std::vector<std::string> class_names{"acyc", "noeven", "sym", "bip"};
const std::vector<std::string> semantics_names{"adm", "prf", "com", "sem", "stb"};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open `" + path + "`");
    buf << file.rdbuf();
    return buf.str();
}

Framework load_framework(const std::string& path, const std::string& format, std::istream& in) {
    FileFormat fmt = format.empty() ? (path == "-" ? FileFormat::Apx : format_from_path(path))
                                    : (format == "tgf" ? FileFormat::Tgf : FileFormat::Apx);
    return parse_framework(read_input(path, in), fmt);
}

std::size_t oracle_guard() {
    const char* env = std::getenv(oracle_guard_env);
    if (env == nullptr || *env == '\0') return default_oracle_guard;
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0') throw Error(std::string(oracle_guard_env) + " must be a nonnegative integer");
    return static_cast<std::size_t>(value);
}

std::string braced(const ArgumentSet& s) { return "{" + to_string(s) + "}"; }

// Options shared by the solving subcommands.
struct SolveOptions {
    std::string file;
    std::string format;
    std::string semantics = "com";
    std::string method = "backdoor";
    std::string fragment = "acyc";
    long long max_k = -1;
};

void add_input(CLI::App* cmd, SolveOptions& o) {
    cmd->add_option("file", o.file, "Framework file (apx or tgf), `-` for stdin")->required();
    cmd->add_option("--format", o.format, "Override format detection")
        ->check(CLI::IsMember({"apx", "tgf"}));
}

void add_solver(CLI::App* cmd, SolveOptions& o) {
    cmd->add_option("--method", o.method, "backdoor or oracle")
        ->check(CLI::IsMember({"backdoor", "oracle"}));
    cmd->add_option("--class", o.fragment, "Backdoor target class for evaluation")
        ->check(CLI::IsMember({"acyc", "noeven"}));
    cmd->add_option("--max-k", o.max_k, "Largest backdoor to look for (default: |X|)")
        ->check(CLI::NonNegativeNumber);
}

std::size_t budget(const SolveOptions& o, const Framework& f) {
    return o.max_k < 0 ? f.size() : static_cast<std::size_t>(o.max_k);
}

ExtensionSet solve_extensions(const Framework& f, const SolveOptions& o, Semantics sigma) {
    if (o.method == "oracle") return enumerate_oracle(f, sigma, oracle_guard());
    return extensions_with_detection(f, sigma, *parse_fragment_class(o.fragment), budget(o, f));
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// For adm, which the backdoor route cannot enumerate, bench compares the
// credulously accepted arguments instead of the extensions themselves.
ArgumentSet accepted_arguments(const ExtensionSet& e) {
    ArgumentSet out;
    for (const auto& s : e) out = set_union(out, s);
    return out;
}

int run_bench(const std::string& dir, Semantics sigma, FragmentClass c, int repeat, std::ostream& out) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error("`" + dir + "` is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".apx" || ext == ".tgf")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    const std::size_t guard = std::min(oracle_guard(), max_oracle_guard);
    const Semantics routed = sigma == Semantics::Adm ? Semantics::Com : sigma;
    out << "instance\tn\tattacks\tk\tbackdoor_ms\toracle_ms\tagreement\n";
    out << std::fixed << std::setprecision(3);
    for (const auto& path : files) {
        std::ifstream file(path, std::ios::binary);
        std::ostringstream buf;
        buf << file.rdbuf();
        const Framework f = parse_framework(buf.str(), format_from_path(path.string()));

        ExtensionSet via_backdoor;
        std::size_t k = 0;
        auto start = std::chrono::steady_clock::now();
        for (int r = 0; r < repeat; ++r) {
            auto b = detect(f, c, f.size());
            k = b->members.size();
            via_backdoor = extensions_via_backdoor(f, b->members, EvenCycleFreeSubSolver(c), routed);
        }
        const double backdoor_ms = elapsed_ms(start) / repeat;

        out << path.filename().string() << '\t' << f.size() << '\t' << f.attack_count() << '\t' << k << '\t'
            << backdoor_ms << '\t';
        if (f.size() > guard) {
            out << "-\t-\n";
            continue;
        }
        ExtensionSet via_oracle;
        start = std::chrono::steady_clock::now();
        for (int r = 0; r < repeat; ++r) via_oracle = enumerate_oracle(f, sigma, guard);
        const double oracle_ms = elapsed_ms(start) / repeat;
        const bool agree = sigma == Semantics::Adm
                               ? accepted_arguments(via_backdoor) == accepted_arguments(via_oracle)
                               : via_backdoor == via_oracle;
        out << oracle_ms << '\t' << (agree ? "ok" : "mismatch") << '\n';
    }
    return exit_yes;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abstract argumentation through backdoors to tractable fragments", "afbd"};
    app.require_subcommand(1);

    // recognize
    SolveOptions rec_opts;
    auto* recognize_cmd = app.add_subcommand("recognize", "Test membership in a tractable fragment");
    add_input(recognize_cmd, rec_opts);
    std::string rec_class;
    recognize_cmd->add_option("--class", rec_class, "acyc, noeven, sym or bip")
        ->required()
        ->check(CLI::IsMember(class_names));

    // backdoor
    SolveOptions bd_opts;
    auto* backdoor_cmd = app.add_subcommand("backdoor", "Find a smallest backdoor into a fragment");
    add_input(backdoor_cmd, bd_opts);
    std::string bd_class;
    bool distance_only = false;
    backdoor_cmd->add_option("--class", bd_class, "acyc, noeven, sym or bip")
        ->required()
        ->check(CLI::IsMember(class_names));
    backdoor_cmd->add_option("--max-k", bd_opts.max_k, "Largest backdoor to look for (default: |X|)")
        ->check(CLI::NonNegativeNumber);
    backdoor_cmd->add_flag("--distance", distance_only, "Print only the distance to the class");

    // extensions
    SolveOptions ext_opts;
    auto* extensions_cmd = app.add_subcommand("extensions", "Enumerate extensions");
    add_input(extensions_cmd, ext_opts);
    extensions_cmd->add_option("--semantics", ext_opts.semantics, "adm, prf, com, sem or stb")
        ->required()
        ->check(CLI::IsMember(semantics_names));
    add_solver(extensions_cmd, ext_opts);

    // accept
    SolveOptions acc_opts;
    std::string mode, argument;
    bool explain = false;
    auto* accept_cmd = app.add_subcommand("accept", "Decide credulous or skeptical acceptance");
    add_input(accept_cmd, acc_opts);
    accept_cmd->add_option("--mode", mode, "credulous or skeptical")
        ->required()
        ->check(CLI::IsMember({"credulous", "skeptical"}));
    accept_cmd->add_option("--semantics", acc_opts.semantics, "adm, prf, com, sem or stb")
        ->required()
        ->check(CLI::IsMember(semantics_names));
    accept_cmd->add_option("--argument", argument, "Argument to query")->required();
    add_solver(accept_cmd, acc_opts);
    accept_cmd->add_flag("--explain", explain, "Also print a witnessing extension");

    // reduce
    std::string cnf_file, reduction;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build a framework from a DIMACS CNF formula");
    reduce_cmd->add_option("cnf", cnf_file, "DIMACS file, `-` for stdin")->required();
    reduce_cmd->add_option("--type", reduction, "ca-bip, sa-bip, ca-sym or sa-sym")
        ->required()
        ->check(CLI::IsMember({"ca-bip", "sa-bip", "ca-sym", "sa-sym"}));

    // generate
    std::size_t gen_args = 0;
    double gen_prob = 0.0;
    std::uint64_t gen_seed = 0;
    auto* generate_cmd = app.add_subcommand("generate", "Generate a seeded random framework");
    generate_cmd->add_option("--args", gen_args, "Number of arguments")->required();
    generate_cmd->add_option("--attack-prob", gen_prob, "Attack probability in [0,1]")->required();
    generate_cmd->add_option("--seed", gen_seed, "Generator seed")->required();

    // bench
    std::string corpus;
    std::string bench_semantics = "com", bench_class = "acyc";
    int repeat = 1;
    auto* bench_cmd = app.add_subcommand("bench", "Time backdoor evaluation against the oracle");
    bench_cmd->add_option("corpus", corpus, "Directory of .apx/.tgf files")->required();
    bench_cmd->add_option("--semantics", bench_semantics, "adm, prf, com, sem or stb")
        ->check(CLI::IsMember(semantics_names));
    bench_cmd->add_option("--class", bench_class, "acyc or noeven")->check(CLI::IsMember({"acyc", "noeven"}));
    bench_cmd->add_option("--repeat", repeat, "Runs per instance")->check(CLI::PositiveNumber);

    std::vector<std::string> argv_storage{"afbd"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Help requests are successes that CLI11 reports through exceptions.
        return app.exit(e, out, err) == 0 ? exit_yes : exit_error;
    }

    std::ostringstream buf;
    int status = exit_yes;
    try {
        if (*recognize_cmd) {
            const auto f = load_framework(rec_opts.file, rec_opts.format, in);
            bool yes = recognize(f, *parse_fragment_class(rec_class));
            buf << (yes ? "yes" : "no") << '\n';
            status = yes ? exit_yes : exit_no;
        } else if (*backdoor_cmd) {
            const auto f = load_framework(bd_opts.file, bd_opts.format, in);
            const auto c = *parse_fragment_class(bd_class);
            if (distance_only) {
                buf << distance(f, c) << '\n';
            } else {
                const std::size_t k = budget(bd_opts, f);
                if (auto found = detect(f, c, k)) {
                    for (const auto& m : found->members) buf << m << '\n';
                } else {
                    buf << "NOT FOUND within k=" << k << '\n';
                    status = exit_no;
                }
            }
        } else if (*extensions_cmd) {
            const auto f = load_framework(ext_opts.file, ext_opts.format, in);
            buf << to_string(solve_extensions(f, ext_opts, *parse_semantics(ext_opts.semantics)));
        } else if (*accept_cmd) {
            const auto f = load_framework(acc_opts.file, acc_opts.format, in);
            const auto sigma = *parse_semantics(acc_opts.semantics);
            const auto m = mode == "credulous" ? AcceptanceMode::Credulous : AcceptanceMode::Skeptical;
            bool accepted = false;
            std::optional<ArgumentSet> witness;
            if (acc_opts.method == "oracle") {
                f.id(argument);
                const auto exts = enumerate_oracle(f, sigma, oracle_guard());
                for (const auto& s : exts) {
                    if ((m == AcceptanceMode::Credulous) == s.contains(argument)) {
                        witness = s;
                        break;
                    }
                }
                accepted = (m == AcceptanceMode::Credulous) == witness.has_value();
            } else {
                auto r = decide_via_backdoor(f, m, sigma, argument, *parse_fragment_class(acc_opts.fragment),
                                             budget(acc_opts, f));
                accepted = r.accepted;
                witness = r.witness;
            }
            buf << (accepted ? "accepted" : "rejected") << '\n';
            if (explain && witness)
                buf << (m == AcceptanceMode::Credulous ? "witness: " : "counterexample: ") << braced(*witness)
                    << '\n';
            status = accepted ? exit_yes : exit_no;
        } else if (*reduce_cmd) {
            const auto phi = parse_dimacs(read_input(cnf_file, in));
            Reduction r = reduction == "ca-bip"   ? reduce_ca_bip(phi)
                          : reduction == "sa-bip" ? reduce_sa_bip(phi)
                          : reduction == "ca-sym" ? reduce_ca_sym(phi)
                                                  : reduce_sa_sym(phi);
            buf << serialize_apx(r.framework) << "% query: " << r.query << '\n';
        } else if (*generate_cmd) {
            buf << serialize_apx(generate_random(gen_args, gen_prob, gen_seed));
        } else if (*bench_cmd) {
            status = run_bench(corpus, *parse_semantics(bench_semantics), *parse_fragment_class(bench_class),
                               repeat, buf);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    out << buf.str() << std::flush;
    return status;
}

} // namespace afbd::cli
