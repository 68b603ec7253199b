#include "stci/cli.hpp"

#include "stci/error.hpp"
#include "stci/srideal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace stci {

namespace {

std::string tuple_str(const std::vector<BigNat>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_decimal(v[i]);
    return out + ")";
}

void print_item(std::ostream& out, const std::string& name, const std::string& status,
                const std::string& detail) {
    out << "  [" << status << "] " << name;
    if (!detail.empty()) out << " — " << detail;
    out << "\n";
}

/// Shared ledger rows so the text and JSON forms cannot drift apart.
struct LevelRow {
    std::uint32_t n;
    BigNat delta, alpha, lambda, beta, eps;
};

std::vector<LevelRow> level_rows(const Schedule& s) {
    std::vector<LevelRow> rows;
    for (std::uint32_t n = 5; n <= s.N; ++n)
        rows.push_back({n, s.delta(n), s.alpha(n), s.lambda(n), s.beta(n), s.eps(n)});
    return rows;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f.good()) {
        err << "cannot write " << path << "\n";
        return false;
    }
    return true;
}

bool read_file(const std::string& path, std::string& text, std::ostream& err) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        err << "cannot read " << path << "\n";
        return false;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
    return true;
}

bool load_set(const std::string& path, GeneratorSetFile& file, std::ostream& err) {
    std::string text;
    if (!read_file(path, text, err)) return false;
    try {
        file = generator_set_from_json(text);
    } catch (const std::invalid_argument& e) {
        err << path << ": " << e.what() << "\n";
        return false;
    }
    return true;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// q -> extension degree k with p^k = q; 0 when q is not a power of p.
std::uint32_t degree_of(std::uint64_t q, std::uint32_t p) {
    std::uint32_t k = 0;
    std::uint64_t t = 1;
    while (t < q) {
        if (t > q / p) return 0;
        t *= p;
        ++k;
    }
    return t == q ? k : 0;
}

std::uint64_t sweep_cap(std::ostream& err, bool& ok) {
    ok = true;
    const char* env = std::getenv(kSweepCapEnv);
    if (env == nullptr) return kDefaultSweepCap;
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        err << kSweepCapEnv << " must be a positive integer\n";
        ok = false;
        return 0;
    }
    return v;
}

void print_report(std::ostream& out, std::ostream& err, const std::string& title,
                  const VerificationReport& rep) {
    out << "== " << title << " ==\n";
    for (const auto& item : rep.items) {
        std::string status = item.status == CheckStatus::pass   ? "PASS"
                             : item.status == CheckStatus::fail ? "FAIL"
                                                                : "SKIP";
        print_item(out, item.name, status, item.detail);
    }
    if (rep.swept > 0) out << "  swept " << rep.swept << " points\n";
    err << "[time] " << title << ": " << rep.elapsed_ms << " ms\n";
}

}  // namespace

int cmd_schedule(std::uint32_t p, std::uint32_t N, bool json, std::ostream& out, std::ostream& err) {
    if (N < 6) {
        err << "need N >= 6\n";
        return kExitUsage;
    }
    Schedule sch;
    try {
        sch = make_minimal(p, N);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    const auto rows = level_rows(sch);
    const auto report = validate(sch);

    if (json) {
        nlohmann::ordered_json j;
        j["schedule"] = nlohmann::ordered_json::parse(schedule_to_json(sch));
        auto levels = nlohmann::ordered_json::array();
        for (const auto& row : rows)
            levels.push_back({{"level", row.n},
                              {"delta", to_decimal(row.delta)},
                              {"alpha", to_decimal(row.alpha)},
                              {"lambda", to_decimal(row.lambda)},
                              {"beta", to_decimal(row.beta)},
                              {"eps", to_decimal(row.eps)}});
        j["levels"] = std::move(levels);
        auto checks = nlohmann::ordered_json::array();
        for (const auto& item : report.items)
            checks.push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
        j["validate"] = std::move(checks);
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "schedule p=" << p << " N=" << N << " (minimal)\n";
    out << "r=" << tuple_str(sch.r) << "\n";
    std::vector<BigNat> s_vals;
    for (std::uint32_t n = 4; n <= N; ++n) s_vals.push_back(sch.s_at(n));
    out << "s=" << tuple_str(s_vals) << "\n";
    for (std::uint32_t n = 5; n <= N; ++n)
        out << "gamma[" << n << "]=" << tuple_str(sch.gamma_row(n)) << "\n";
    for (const auto& row : rows)
        out << "level " << row.n << ": delta=" << to_decimal(row.delta) << " alpha=" << to_decimal(row.alpha)
            << " lambda=" << to_decimal(row.lambda) << " beta=" << to_decimal(row.beta)
            << " eps=" << to_decimal(row.eps) << "\n";
    out << "validate:\n";
    for (const auto& item : report.items) print_item(out, item.name, item.pass ? "PASS" : "FAIL", item.detail);
    out << (report.all_pass() ? "all schedule checks hold\n"
                              : "some schedule checks fail (see above); the construction does not rely on "
                                "the failing bounds\n");
    return kExitOk;
}

int cmd_construct(const Schedule& sch, std::uint32_t n, X2Mode mode, bool with_artifacts,
                  const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (n < 5 || n > sch.N) {
        err << "level must lie in 5.." << sch.N << " (schedule has no level " << n << ")\n";
        return kExitUsage;
    }
    Chain chain;
    try {
        chain = build_chain(sch, mode, n);
    } catch (const construction_error& e) {
        err << "construction failed: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    GeneratorSetFile file;
    file.gens = chain.levels[n - 5];
    if (with_artifacts && n >= 6) {
        file.has_artifacts = true;
        file.artifacts = chain.lifts[n - 6];
    }
    const std::string text = generator_set_to_json(file);
    if (!write_file(out_path, text, err)) return kExitUsage;

    out << "level " << n << " (mode " << to_string(mode) << "): " << file.gens.gens.size()
        << " generators\n";
    out << "terms:";
    std::size_t total = 0;
    for (std::size_t i = 0; i < file.gens.gens.size(); ++i) {
        total += file.gens.gens[i].term_count();
        out << " f_" << (i + 1) << "=" << file.gens.gens[i].term_count();
    }
    out << " total=" << total << "\n";
    out << "wrote: " << out_path << " (" << text.size() << " bytes)\n";
    return kExitOk;
}

int cmd_construct(std::uint32_t p, std::uint32_t N, std::uint32_t n, const std::string& mode,
                  bool with_artifacts, const std::string& out_path, std::ostream& out, std::ostream& err) {
    Schedule sch;
    X2Mode m;
    try {
        sch = make_minimal(p, N);
        m = x2_mode_from_string(mode);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    return cmd_construct(sch, n, m, with_artifacts, out_path, out, err);
}

int cmd_verify(const std::string& in_path, const std::string& fields, const std::string& checks,
               std::uint64_t seed, std::uint32_t trials, std::ostream& out, std::ostream& err) {
    GeneratorSetFile file;
    if (!load_set(in_path, file, err)) return kExitUsage;
    const StructuredGenerators& g = file.gens;
    const std::uint32_t n = g.level;

    bool cap_ok = false;
    const std::uint64_t cap = sweep_cap(err, cap_ok);
    if (!cap_ok) return kExitUsage;

    std::vector<Field> subfields;
    for (const std::string& tok : split_csv(fields.empty() ? std::to_string(g.p()) : fields)) {
        char* end = nullptr;
        std::uint64_t q = std::strtoull(tok.c_str(), &end, 10);
        std::uint32_t k = (end != tok.c_str() && *end == '\0') ? degree_of(q, g.p()) : 0;
        if (k == 0) {
            err << "field size " << tok << " is not a power of p = " << g.p() << "\n";
            return kExitUsage;
        }
        try {
            subfields.emplace_back(g.p(), k);
        } catch (const std::invalid_argument& e) {
            err << e.what() << "\n";
            return kExitUsage;
        }
    }

    bool want_membership = false, want_conditions = false, want_variety = false, want_resultant = false,
         want_probe = false;
    for (const std::string& tok : split_csv(checks)) {
        if (tok == "all") {
            want_membership = want_conditions = want_variety = true;
            want_resultant = want_probe = file.has_artifacts;
        } else if (tok == "membership") {
            want_membership = true;
        } else if (tok == "conditions") {
            want_conditions = true;
        } else if (tok == "variety") {
            want_variety = true;
        } else if (tok == "resultant") {
            want_resultant = true;
        } else if (tok == "probe") {
            want_probe = true;
        } else {
            err << "unknown check \"" << tok << "\" (membership, conditions, variety, resultant, probe, "
                << "all)\n";
            return kExitUsage;
        }
    }
    if (!(want_membership || want_conditions || want_variety || want_resultant || want_probe)) {
        err << "no checks selected\n";
        return kExitUsage;
    }
    if ((want_resultant || want_probe) && !file.has_artifacts) {
        err << in_path << " carries no lift artifacts; resultant/probe need a file written with them\n";
        return kExitUsage;
    }

    out << "file: " << in_path << "\n";
    out << "level " << n << ", mode " << to_string(g.mode) << ", p=" << g.p() << ", N=" << g.schedule.N
        << ", " << g.gens.size() << " generators\n";

    bool all_pass = true;
    try {
        if (want_membership) {
            auto rep = membership_check(g.gens, n);
            print_report(out, err, "membership", rep);
            all_pass = all_pass && rep.all_pass();
        }
        if (want_conditions) {
            auto rep = check_conditions(g);
            out << "== conditions ==\n";
            for (const auto& item : rep.items)
                print_item(out, item.name, item.pass ? "PASS" : "FAIL", item.detail);
            all_pass = all_pass && rep.all_pass();
        }
        if (want_variety)
            for (const Field& f : subfields) {
                auto rep = variety_equality(g.gens, n, f, cap);
                print_report(out, err, "variety F_" + std::to_string(f.q()), rep);
                all_pass = all_pass && rep.all_pass();
            }
        if (want_resultant) {
            auto rep = resultant_checks(g.schedule, file.artifacts);
            print_report(out, err, "resultant level " + std::to_string(n), rep);
            all_pass = all_pass && rep.all_pass();
        }
        if (want_probe)
            for (const Field& f : subfields) {
                auto rep = trivial_solution_probe(file.artifacts, f, trials, seed, cap);
                print_report(out, err, "probe F_" + std::to_string(f.q()) + " seed " + std::to_string(seed),
                             rep);
                all_pass = all_pass && rep.all_pass();
            }
    } catch (const construction_error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    out << "result: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_export(const std::string& in_path, const std::string& format, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    GeneratorSetFile file;
    if (!load_set(in_path, file, err)) return kExitUsage;
    std::string script;
    try {
        script = export_cas(file.gens.gens, file.gens.level, format);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    if (!write_file(out_path, script, err)) return kExitUsage;
    out << "wrote: " << out_path << " (" << script.size() << " bytes, " << format << ")\n";
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"structured generators for cycle ideals: construct, verify, export"};
    app.require_subcommand(1);

    std::uint32_t p = 2, N = 6, n = 5;
    bool json = false, artifacts = true;
    std::string mode = "carried", in_path, out_path, fields, checks = "all", format;
    std::uint64_t seed = 0;
    std::uint32_t trials = 100;

    auto* sc_sched = app.add_subcommand("schedule", "print the exponent ledger and its validation");
    sc_sched->add_option("--p", p, "prime characteristic")->required();
    sc_sched->add_option("--N", N, "top level of the tower")->required();
    sc_sched->add_flag("--json", json, "emit JSON instead of the table");

    auto* sc_con = app.add_subcommand("construct", "build a level and write its generator-set file");
    sc_con->add_option("--p", p, "prime characteristic")->required();
    sc_con->add_option("--N", N, "top level of the tower")->required();
    sc_con->add_option("--n", n, "level to construct (5..N)")->required();
    sc_con->add_option("--mode", mode, "x_2 exponent mode: carried or literal");
    sc_con->add_flag("--artifacts,!--no-artifacts", artifacts, "embed the lift artifacts (default on)");
    sc_con->add_option("--out", out_path, "output file")->required();

    auto* sc_ver = app.add_subcommand("verify", "run checks recorded against a generator-set file");
    sc_ver->add_option("--in", in_path, "generator-set file")->required();
    sc_ver->add_option("--fields", fields, "comma list of subfield sizes (default: the prime field)");
    sc_ver->add_option("--checks", checks,
                       "comma list: membership, conditions, variety, resultant, probe, all");
    sc_ver->add_option("--seed", seed, "probe sampling seed");
    sc_ver->add_option("--trials", trials, "probe sample count per field");

    auto* sc_exp = app.add_subcommand("export", "write a CAS script for a generator-set file");
    sc_exp->add_option("--in", in_path, "generator-set file")->required();
    sc_exp->add_option("--format", format, "macaulay2 or singular")->required();
    sc_exp->add_option("--out", out_path, "output script file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    if (sc_sched->parsed()) return cmd_schedule(p, N, json, out, err);
    if (sc_con->parsed()) return cmd_construct(p, N, n, mode, artifacts, out_path, out, err);
    if (sc_ver->parsed()) return cmd_verify(in_path, fields, checks, seed, trials, out, err);
    return cmd_export(in_path, format, out_path, out, err);
}

}  // namespace stci
