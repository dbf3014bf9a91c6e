// Command-line front end: synthesize winning-set certificates for regular
// safety games, verify certificates, solve explicit slices, and generate the
// built-in benchmark suite.
//
// Exit codes: 0 success, 1 invalid certificate / failed benchmark batch,
// 2 parse or input error, 3 learner round-limit abort, 4 budget exhausted,
// 5 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsg/arena.hpp"
#include "rsg/automaton_ops.hpp"
#include "rsg/benchmarks.hpp"
#include "rsg/dot.hpp"
#include "rsg/errors.hpp"
#include "rsg/game.hpp"
#include "rsg/membership.hpp"
#include "rsg/run.hpp"
#include "rsg/trace.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitRounds = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rsg::InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw rsg::InputError("cannot write '" + path + "'");
    out << content;
}

struct CommonOptions {
    std::size_t budget = rsg::kDefaultBudget;
    int rounds = 500;
    std::string trace_path;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--budget", options.budget, "explicit-state vertex budget");
    cmd->add_option("--rounds", options.rounds, "equivalence-query round limit");
    cmd->add_option("--trace", options.trace_path, "write json-lines query trace here");
    cmd->add_option("--format", options.format, "report format")
        ->check(CLI::IsMember({"text", "json-lines"}));
}

void print_report(const rsg::RunReport& report, const std::string& format) {
    if (format == "json-lines")
        std::cout << report.to_json().dump() << '\n';
    else
        std::cout << report.to_text();
}

int run_synth(const std::string& game_path, const std::string& out_path,
              const std::string& dot_path, const CommonOptions& options) {
    rsg::RegularSafetyGame game = rsg::parse_game(read_file(game_path));

    std::ofstream trace_stream;
    std::optional<rsg::TraceSink> trace;
    if (!options.trace_path.empty()) {
        trace_stream.open(options.trace_path);
        if (!trace_stream) throw rsg::InputError("cannot write '" + options.trace_path + "'");
        trace.emplace(trace_stream);
    }

    rsg::SynthesisOptions synth_options;
    synth_options.budget = options.budget;
    synth_options.max_rounds = options.rounds;
    synth_options.trace = trace ? &*trace : nullptr;
    synth_options.game_name = std::filesystem::path(game_path).stem().string();

    rsg::SynthesisResult result = rsg::synthesize(game, synth_options);
    print_report(result.report, options.format);
    if (result.report.outcome == rsg::RunOutcome::Aborted) return kExitRounds;

    if (!out_path.empty()) write_file(out_path, rsg::render_certificate(*result.certificate));
    if (!dot_path.empty())
        write_file(dot_path, rsg::to_dot(*result.certificate, synth_options.game_name));
    return 0;
}

int run_verify(const std::string& game_path, const std::string& cert_path,
               const CommonOptions& options) {
    rsg::RegularSafetyGame game = rsg::parse_game(read_file(game_path));
    rsg::Dfa cert = rsg::parse_certificate(read_file(cert_path), game.alphabet);
    rsg::RunReport report =
        rsg::verify_run(game, cert, std::filesystem::path(game_path).stem().string());
    print_report(report, options.format);
    return report.outcome == rsg::RunOutcome::CertificateValid ? 0 : kExitInvalid;
}

int run_slice(const std::string& game_path, int length, const CommonOptions& options) {
    rsg::RegularSafetyGame game = rsg::parse_game(read_file(game_path));
    rsg::FiniteArena arena = rsg::slice_arena(game, length, options.budget);
    auto winning = rsg::solve_finite(arena);
    for (std::size_t v = 0; v < arena.size(); ++v) {
        if (options.format == "json-lines") {
            nlohmann::json record{
                {"word", rsg::format_word(game.alphabet, arena.vertices[v])},
                {"owner", arena.owner[v] == rsg::Player::Zero ? 0 : 1},
                {"bad", arena.bad[v] != 0},
                {"winning", winning[v] != 0}};
            std::cout << record.dump() << '\n';
        } else {
            std::cout << (arena.owner[v] == rsg::Player::Zero ? "P0 " : "P1 ")
                      << (arena.bad[v] ? "bad  " : "ok   ")
                      << (winning[v] ? "win  " : "lose ") << "'"
                      << rsg::format_word(game.alphabet, arena.vertices[v]) << "'\n";
        }
    }
    std::cerr << arena.size() << " vertices, " << arena.edge_count() << " edges\n";
    return 0;
}

int run_gen(const std::string& name, const std::string& out_path) {
    std::string text = rsg::generate_benchmark(name);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int run_list() {
    for (const rsg::BenchmarkInfo& info : rsg::list_benchmarks())
        std::cout << info.name << "  (min initial length " << info.min_initial_length << "): "
                  << info.title << '\n';
    return 0;
}

int run_bench(const std::string& which, const std::string& out_dir,
              const CommonOptions& options) {
    std::filesystem::create_directories(out_dir);
    bool all_ok = true;
    for (const rsg::BenchmarkInfo& info : rsg::list_benchmarks()) {
        if (which != "all" && which != info.name) continue;
        const std::string game_path = out_dir + "/" + info.name + ".game";
        write_file(game_path, rsg::generate_benchmark(info.name));
        nlohmann::json row{{"game", info.name}};
        try {
            rsg::RegularSafetyGame game = rsg::build_benchmark(info.name);
            rsg::SynthesisOptions synth_options;
            synth_options.budget = options.budget;
            synth_options.max_rounds = options.rounds;
            synth_options.game_name = info.name;
            rsg::SynthesisResult result = rsg::synthesize(game, synth_options);
            write_file(out_dir + "/" + info.name + ".cert",
                       rsg::render_certificate(*result.certificate));
            write_file(out_dir + "/" + info.name + ".dot",
                       rsg::to_dot(*result.certificate, info.name));
            row["outcome"] = rsg::outcome_name(result.report.outcome);
            row["seconds"] = result.report.wall_seconds;
            row["size"] = result.report.certificate_states;
            row["membership_queries"] = result.report.stats.membership_queries;
            row["equivalence_queries"] = result.report.stats.equivalence_queries;
            if (result.report.outcome != rsg::RunOutcome::Synthesized) all_ok = false;
        } catch (const std::exception& e) {
            // One failing game must not stop the batch.
            row["outcome"] = "Error";
            row["error"] = e.what();
            all_ok = false;
        }
        if (options.format == "json-lines") {
            std::cout << row.dump() << '\n';
        } else {
            std::cout << row["game"].get<std::string>() << ": "
                      << row["outcome"].get<std::string>();
            if (row.contains("size"))
                std::cout << "  size=" << row["size"] << "  time=" << row["seconds"]
                          << "s  mem=" << row["membership_queries"]
                          << "  eq=" << row["equivalence_queries"];
            if (row.contains("error")) std::cout << "  (" << row["error"].get<std::string>() << ")";
            std::cout << '\n';
        }
    }
    return all_ok ? 0 : kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular safety game synthesis via active automata learning"};
    app.require_subcommand(1);

    CommonOptions options;

    std::string game_path, cert_path, out_path, dot_path, bench_name = "all";
    std::string out_dir = "benchmarks";
    int slice_length = 0;

    CLI::App* synth = app.add_subcommand("synth", "learn a winning-set certificate");
    synth->add_option("game", game_path, "game file")->required();
    synth->add_option("-o,--out", out_path, "write the certificate here");
    synth->add_option("--dot", dot_path, "write certificate DOT here");
    add_common(synth, options);

    CLI::App* verify = app.add_subcommand("verify", "check a certificate against a game");
    verify->add_option("game", game_path, "game file")->required();
    verify->add_option("certificate", cert_path, "certificate file")->required();
    add_common(verify, options);

    CLI::App* slice = app.add_subcommand("slice", "solve one explicit length slice");
    slice->add_option("game", game_path, "game file")->required();
    slice->add_option("length", slice_length, "word length")->required();
    add_common(slice, options);

    CLI::App* bench = app.add_subcommand("bench", "generate and solve the benchmark suite");
    bench->add_option("name", bench_name, "benchmark name or 'all'");
    bench->add_option("--out-dir", out_dir, "directory for game/certificate files");
    add_common(bench, options);

    CLI::App* gen = app.add_subcommand("gen", "emit a benchmark game file");
    gen->add_option("name", bench_name, "benchmark name")->required();
    gen->add_option("-o,--out", out_path, "output path (default stdout)");

    app.add_subcommand("list", "list the built-in benchmarks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return run_synth(game_path, out_path, dot_path, options);
        if (verify->parsed()) return run_verify(game_path, cert_path, options);
        if (slice->parsed()) return run_slice(game_path, slice_length, options);
        if (bench->parsed()) return run_bench(bench_name, out_dir, options);
        if (gen->parsed()) return run_gen(bench_name, out_path);
        return run_list();
    } catch (const rsg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const rsg::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const rsg::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
