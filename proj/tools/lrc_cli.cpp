// lrc: construct, analyze and verify locally recoverable codes over JSON
// files. Exit codes: 0 success, 1 a verified claim is falsified (or
// recovery is not unique), 2 usage/IO/format errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lrc/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    bool json = false;
    bool verbose = false;
    std::size_t cap = std::size_t{1} << 20;

    lrc::SearchBudget budget() const { return lrc::SearchBudget{cap}; }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

lrc::json parse_json(const std::string& text) {
    try {
        return lrc::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw lrc::ShapeError(std::string("malformed JSON: ") + e.what());
    }
}

struct ParsedCode {
    lrc::Codebook codebook;
    std::optional<int> k;  // present when the file carries one

    std::optional<lrc::SystematicCode> systematic() const {
        if (!k) return std::nullopt;
        return lrc::systematic_from_codebook(codebook, *k);
    }
};

ParsedCode load_code(const std::string& path, const GlobalOptions& options) {
    const lrc::json j = parse_json(read_input(path));
    ParsedCode parsed{lrc::codebook_from_json(j), std::nullopt};
    if (j.is_object() && j.contains("k")) {
        parsed.k = j.at("k").get<int>();
        parsed.systematic();  // validate now so errors carry context
    }
    if (options.verbose) {
        std::cerr << "loaded codebook: q=" << parsed.codebook.q()
                  << " n=" << parsed.codebook.n() << " K=" << parsed.codebook.size();
        if (parsed.k) std::cerr << " k=" << *parsed.k;
        std::cerr << "\n";
    }
    return parsed;
}

int cmd_construct(const GlobalOptions&, const std::string& in,
                  const std::string& out) {
    const lrc::ConstructionSpec spec =
        lrc::construction_spec_from_json(parse_json(read_input(in)));
    const lrc::SystematicCode code =
        spec.kind == lrc::ConstructionSpec::Kind::Pyramid
            ? lrc::build_pyramid({spec.q, spec.k, spec.r, spec.d})
            : lrc::build_rs_mds(spec.q, spec.k, spec.d);
    write_output(out, lrc::systematic_to_json(code).dump(2));
    return kExitOk;
}

int cmd_analyze(const GlobalOptions& options, const std::string& in,
                const std::string& out) {
    const ParsedCode parsed = load_code(in, options);
    const lrc::Codebook& code = parsed.codebook;

    const int distance = lrc::min_distance(code);
    const lrc::SingletonReport singleton = lrc::check_singleton(code);
    const lrc::LocalityProfile profile =
        lrc::locality_profile(code, code.n() - 1, options.budget());
    std::optional<int> info_locality;
    if (parsed.k) {
        info_locality = lrc::information_locality(*parsed.systematic(), code.n() - 1,
                                                  options.budget());
    }

    if (options.json) {
        lrc::json j;
        j["q"] = code.q();
        j["n"] = code.n();
        j["K"] = code.size();
        if (parsed.k) j["k"] = *parsed.k;
        j["min_distance"] = distance;
        j["singleton"] = lrc::singleton_report_to_json(singleton);
        if (parsed.k) {
            j["information_locality"] =
                info_locality ? lrc::json(*info_locality) : lrc::json(nullptr);
        }
        j["locality_profile"] = lrc::locality_profile_to_json(profile);
        write_output(out, j.dump(2));
    } else {
        std::ostringstream text;
        text << "code: q=" << code.q() << " n=" << code.n() << " K=" << code.size();
        if (parsed.k) text << " k=" << *parsed.k;
        text << "\nmin distance: " << distance;
        text << "\nSingleton bound: n = " << singleton.lhs
             << " >= log_q K + d - 1 = " << singleton.rhs << " -> "
             << (singleton.holds ? "holds" : "VIOLATED") << " (slack "
             << singleton.slack << ")";
        if (parsed.k) {
            text << "\ninformation locality: ";
            if (info_locality) {
                text << *info_locality;
            } else {
                text << "none within n - 1";
            }
        }
        text << "\nlocality profile:";
        for (const lrc::LocalityEntry& entry : profile) {
            text << "\n  coordinate " << entry.coordinate + 1 << ": ";
            if (entry.locality) {
                text << *entry.locality << " via {";
                for (std::size_t i = 0; i < entry.witness->size(); ++i) {
                    text << (i ? "," : "") << (*entry.witness)[i] + 1;
                }
                text << "}";
            } else {
                text << "no repair set within cap";
            }
        }
        write_output(out, text.str());
    }
    return singleton.holds ? kExitOk : kExitFalsified;
}

int cmd_verify_bound(const GlobalOptions& options, int n, int k, int d, int r,
                     const std::string& out) {
    const lrc::BoundReport report = lrc::check_locality_bound(n, k, d, r);
    if (options.json) {
        write_output(out, lrc::bound_report_to_json(report).dump(2));
    } else {
        std::ostringstream text;
        text << "n = " << report.n << " vs k + ceil(k/r) + d - 2 = " << report.rhs
             << " -> "
             << (!report.holds ? "VIOLATED" : report.optimal ? "optimal" : "holds");
        write_output(out, text.str());
    }
    return report.holds ? kExitOk : kExitFalsified;
}

int cmd_subcode_trace(const GlobalOptions& options, const std::string& in,
                      int r, const std::string& forced_path,
                      const std::string& out) {
    const ParsedCode parsed = load_code(in, options);
    if (!parsed.k) {
        throw lrc::ShapeError("subcode-trace needs a systematic code (field \"k\")");
    }
    lrc::Strategy strategy;
    if (!forced_path.empty()) {
        strategy = lrc::forced_steps_from_json(parse_json(read_input(forced_path)));
    }
    const lrc::SubcodeTrace trace =
        lrc::run_subcode(*parsed.systematic(), r, strategy, options.budget());
    write_output(out, lrc::trace_to_json(trace).dump(2));
    return kExitOk;
}

int cmd_verify_structure(const GlobalOptions& options, const std::string& in,
                         int r, const std::string& out) {
    const ParsedCode parsed = load_code(in, options);
    if (!parsed.k) {
        throw lrc::ShapeError("verify-structure needs a systematic code (field \"k\")");
    }
    const lrc::StructureReport report =
        lrc::verify_structure(*parsed.systematic(), r, options.budget());

    if (options.json) {
        write_output(out, lrc::structure_report_to_json(report).dump(2));
    } else {
        std::ostringstream text;
        if (!report.applicable) {
            text << "not applicable: " << report.reason;
        } else {
            text << (report.optimal ? "optimal" : "not optimal") << "; groups:";
            for (const lrc::CoordSet& g : report.groups) {
                text << " {";
                for (std::size_t i = 0; i < g.size(); ++i) {
                    text << (i ? "," : "") << g[i] + 1;
                }
                text << "}";
            }
            for (const auto& [key, verdict] : report.items) {
                text << "\n" << key << ": " << (verdict.pass ? "pass" : "FAIL") << " ("
                     << verdict.detail << ")";
            }
        }
        write_output(out, text.str());
    }
    if (!report.applicable) return kExitOk;  // hypotheses unmet, nothing falsified
    return report.all_pass() ? kExitOk : kExitFalsified;
}

int cmd_twist(const GlobalOptions& options, const std::string& in,
              std::optional<std::uint64_t> seed, const std::string& spec_path,
              const std::string& out) {
    const ParsedCode parsed = load_code(in, options);
    lrc::TwistSpec spec;
    if (seed && !spec_path.empty()) {
        throw lrc::ShapeError("give either --seed or --spec, not both");
    }
    if (seed) {
        spec = lrc::TwistSpec::seeded(*seed);
    } else if (!spec_path.empty()) {
        spec = lrc::twist_spec_from_json(parse_json(read_input(spec_path)));
    } else {
        throw lrc::ShapeError("twist needs --seed or --spec");
    }
    const lrc::Codebook twisted = lrc::twist(parsed.codebook, spec);
    if (parsed.k) {
        write_output(out, lrc::systematic_to_json(
                              lrc::systematic_from_codebook(twisted, *parsed.k))
                              .dump(2));
    } else {
        write_output(out, lrc::codebook_to_json(twisted).dump(2));
    }
    return kExitOk;
}

int cmd_recover(const GlobalOptions& options, const std::string& in,
                const std::string& pattern_path, bool local,
                const std::string& out) {
    const ParsedCode parsed = load_code(in, options);
    const lrc::ErasurePattern pattern =
        lrc::pattern_from_json(parse_json(read_input(pattern_path)));
    const lrc::RecoveryResult result =
        lrc::recover_erasures(parsed.codebook, pattern);

    lrc::json j = lrc::recovery_to_json(result);
    std::ostringstream text;
    switch (result.status) {
        case lrc::RecoveryResult::Status::Unique: {
            text << "unique:";
            for (lrc::Symbol s : *result.word) text << " " << s;
            break;
        }
        case lrc::RecoveryResult::Status::Ambiguous:
            text << "ambiguous: " << result.match_count << " codewords match";
            break;
        case lrc::RecoveryResult::Status::Inconsistent:
            text << "inconsistent: no codeword matches";
            break;
    }

    if (local) {
        const lrc::LocalityProfile profile = lrc::locality_profile(
            parsed.codebook, parsed.codebook.n() - 1, options.budget());
        try {
            const auto repairs = lrc::local_repair(parsed.codebook, pattern, profile);
            lrc::json repairs_json;
            for (const auto& [coord, repair] : repairs) {
                lrc::json entry;
                entry["value"] = repair.value;
                lrc::json accessed = lrc::json::array();
                for (int c : repair.accessed) accessed.push_back(c + 1);
                entry["accessed"] = std::move(accessed);
                repairs_json[std::to_string(coord + 1)] = std::move(entry);
                text << "\nlocal repair of coordinate " << coord + 1 << ": "
                     << repair.value << " reading " << repair.accessed.size()
                     << " coordinate(s)";
            }
            j["local_repair"] = std::move(repairs_json);
        } catch (const lrc::NeedsGlobalRepair& e) {
            j["local_repair"] = lrc::json(nullptr);
            j["local_repair_error"] = e.what();
            text << "\nlocal repair unavailable: " << e.what();
        }
    }

    write_output(out, options.json ? j.dump(2) : text.str());
    return result.status == lrc::RecoveryResult::Status::Unique ? kExitOk
                                                                : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, analyze and verify locally recoverable codes"};
    app.require_subcommand(1);
    // Let global flags (--json, --cap, ...) appear after the subcommand too.
    app.fallthrough();

    GlobalOptions options;
    app.add_flag("--json", options.json, "machine-readable JSON output");
    app.add_flag("--verbose", options.verbose, "chatty diagnostics on stderr");
    app.add_option("--cap", options.cap,
                   "combinatorial budget for repair-set searches")
        ->capture_default_str();

    std::string in = "-";
    std::string out = "-";
    std::string forced_path;
    std::string spec_path;
    std::string pattern_path;
    std::optional<std::uint64_t> seed;
    int n = 0, k = 0, d = 0, r = 0;
    bool local = false;

    auto* construct = app.add_subcommand("construct", "construction spec JSON -> codebook JSON");
    construct->add_option("-i,--input", in, "construction spec (- for stdin)");
    construct->add_option("-o,--output", out, "codebook file (- for stdout)");

    auto* analyze = app.add_subcommand("analyze", "distance, Singleton report and locality profile");
    analyze->add_option("-i,--input", in, "codebook file");
    analyze->add_option("-o,--output", out, "report file");

    auto* verify_bound = app.add_subcommand("verify-bound", "block-length lower bound for given n, k, d, r");
    verify_bound->add_option("--n", n, "block length")->required();
    verify_bound->add_option("--k", k, "dimension")->required();
    verify_bound->add_option("--d", d, "minimum distance")->required();
    verify_bound->add_option("--r", r, "information locality")->required();
    verify_bound->add_option("-o,--output", out, "report file");

    auto* subcode_trace = app.add_subcommand("subcode-trace", "run the sub-code extraction loop, emit the trace");
    subcode_trace->add_option("-i,--input", in, "systematic codebook file");
    subcode_trace->add_option("--r", r, "information locality")->required();
    subcode_trace->add_option("--forced", forced_path, "JSON list of forced (i, S) first steps");
    subcode_trace->add_option("-o,--output", out, "trace file");

    auto* verify_structure = app.add_subcommand("verify-structure", "repair-group and parity-partition checks");
    verify_structure->add_option("-i,--input", in, "systematic codebook file");
    verify_structure->add_option("--r", r, "information locality")->required();
    verify_structure->add_option("-o,--output", out, "report file");

    auto* twist_cmd = app.add_subcommand("twist", "apply per-coordinate alphabet permutations");
    twist_cmd->add_option("-i,--input", in, "codebook file");
    twist_cmd->add_option("--seed", seed, "seed for generated permutations");
    twist_cmd->add_option("--spec", spec_path, "twist spec JSON");
    twist_cmd->add_option("-o,--output", out, "codebook file");

    auto* recover = app.add_subcommand("recover", "recover erased coordinates of a received word");
    recover->add_option("-i,--input", in, "codebook file");
    recover->add_option("--pattern", pattern_path, "received word with nulls for erasures")->required();
    recover->add_flag("--local", local, "also repair each erasure from its witness set");
    recover->add_option("-o,--output", out, "result file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(options, in, out);
        if (analyze->parsed()) return cmd_analyze(options, in, out);
        if (verify_bound->parsed()) return cmd_verify_bound(options, n, k, d, r, out);
        if (subcode_trace->parsed()) {
            return cmd_subcode_trace(options, in, r, forced_path, out);
        }
        if (verify_structure->parsed()) {
            return cmd_verify_structure(options, in, r, out);
        }
        if (twist_cmd->parsed()) return cmd_twist(options, in, seed, spec_path, out);
        if (recover->parsed()) {
            return cmd_recover(options, in, pattern_path, local, out);
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const lrc::InternalInvariantViolation& e) {
        // The input code falsified the locality claim it was run under.
        std::cerr << "error: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const lrc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
