#include "nsg/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nsg/format.hpp"

namespace nsg::cli {

using nlohmann::json;

namespace {

Int parse_int_token(const std::string& tok) {
    Int v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range)
        throw OverflowError("integer token out of range: '" + tok + "'");
    if (ec != std::errc{} || ptr != last)
        throw ParseError("not an integer: '" + tok + "'");
    return v;
}

const std::vector<Int> kPaper17 = {1030, 1031, 1034, 1039, 1046, 1055,
                                   1066, 1079, 1094, 1111, 1130, 1151,
                                   1373, 1393, 1423, 1433, 1493};

struct Options {
    std::vector<std::string> tokens;
    std::string file;
    std::string format = "text";
    std::size_t param_index = 0;
    unsigned threads = 1;
    Int max_level = -1;
    Int query = 0;           // member
    std::vector<Int> triple; // n3
    std::string preset;      // bench
    bool no_spairs = false;
    Int member_bound = -1;   // verify; -1 = default clamp, 0 = full range
};

void add_generator_options(CLI::App* cmd, Options& opt, bool tokens_first) {
    if (tokens_first)
        cmd->add_option("generators", opt.tokens, "semigroup generators");
    cmd->add_option("--file", opt.file,
                    "read generators from a file (one integer per line, '#' "
                    "comments allowed)");
    cmd->add_option("--param-index", opt.param_index,
                    "index into the sorted generators of the Noether "
                    "parameter (default 0, the smallest)");
    cmd->add_option("--threads", opt.threads, "worker threads for the scan");
    cmd->add_option("--max-level", opt.max_level,
                    "override of the hard total-degree cap of the scan");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

GeneratorSet load_generators(const Options& opt, bool allow_preset = false) {
    std::vector<Int> gens;
    int sources = !opt.tokens.empty();
    sources += !opt.file.empty();
    if (allow_preset) sources += !opt.preset.empty();
    if (sources != 1) {
        throw CLI::ValidationError(
            "generators",
            "exactly one generator source required (inline, --file" +
                std::string(allow_preset ? " or --preset" : "") + ")");
    }
    if (!opt.preset.empty()) {
        if (opt.preset != "paper17")
            throw CLI::ValidationError("--preset",
                                       "unknown preset '" + opt.preset + "'");
        gens = kPaper17;
    } else if (!opt.file.empty()) {
        gens = parse_generators_file(opt.file);
    } else {
        gens = parse_generator_tokens(opt.tokens);
    }
    return normalize(gens, opt.param_index);
}

AperyParams apery_params(const Options& opt) {
    AperyParams p;
    p.threads = opt.threads;
    p.max_level = opt.max_level;
    return p;
}

void emit(std::ostream& out, const std::string& format, const json& payload,
          const std::string& text) {
    if (format == "json")
        out << payload.dump(2) << "\n";
    else
        out << text;
}

std::string representation_string(const GeneratorSet& g,
                                  const MembershipCertificate& cert, Int b) {
    std::ostringstream os;
    os << b << " =";
    for (std::size_t i = 0; i < g.sorted.size(); ++i) {
        if (i) os << " +";
        os << " " << cert.representation[i] << "*" << g.sorted[i];
    }
    return os.str();
}

int run_verify(const GeneratorSet& g, const Options& opt, std::ostream& out,
               std::ostream& err) {
    AperyTable t = compute_apery(g, apery_params(opt));
    std::vector<Binomial> gb = groebner_basis(g, t);
    oracle::VerificationReport rep =
        oracle::verify_groebner(g, gb, t, !opt.no_spairs);

    // Cross-checks against the independent oracle.
    std::vector<Int> dist = oracle::apery_shortest_path(g);
    bool apery_ok = dist == t.values;
    rep.checks.push_back({"apery_oracle", apery_ok,
                          apery_ok ? "" : "table disagrees with shortest-path "
                                          "distances"});

    Int bound = checked_add(checked_add(frobenius(t), g.param()),
                            g.sorted.back());
    constexpr Int kDefaultClamp = 1000000;
    if (opt.member_bound > 0 && bound > opt.member_bound)
        bound = opt.member_bound;
    else if (opt.member_bound < 0 && bound > kDefaultClamp) {
        bound = kDefaultClamp;
        err << "note: membership scan clamped to " << kDefaultClamp
            << "; pass --member-bound 0 for the full range\n";
    }
    std::vector<bool> reach = oracle::member_table(g, bound);
    bool member_ok = true;
    for (Int b = 0; b <= bound && member_ok; ++b)
        member_ok = is_member(t, g, b).member == reach[std::size_t(b)];
    rep.checks.push_back({"member_oracle", member_ok,
                          member_ok ? "" : "membership disagrees with the "
                                           "reachability table"});
    rep.overall = apery_ok && member_ok && rep.overall;

    std::ostringstream text;
    for (const auto& c : rep.checks) {
        if (c.pass)
            text << "ok " << c.name << "\n";
        else
            text << "FAIL " << c.name << ": " << c.detail << "\n";
    }
    text << (rep.overall ? "overall: pass" : "overall: fail") << "\n";
    json payload{{"command", "verify"},
                 {"generators", to_json(g)},
                 {"verify", to_json(rep)}};
    emit(out, opt.format, payload, text.str());
    return rep.overall ? 0 : 4;
}

int run_bench(const GeneratorSet& g, const Options& opt, std::ostream& out,
              std::ostream& err) {
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) {
        return std::chrono::duration<double, std::milli>(d).count();
    };
    auto t0 = clock::now();
    AperyTable t = compute_apery(g, apery_params(opt));
    auto t1 = clock::now();
    StaircaseReport stairs = staircase_report(g, t);
    std::vector<Binomial> gb = groebner_basis(g, t);
    auto t2 = clock::now();

    Int apery_max = checked_mul(t.lambda, t.max_value());
    err << "apery_ms=" << ms(t1 - t0) << " groebner_ms=" << ms(t2 - t1)
        << "\n";
    json payload{{"command", "bench"},
                 {"generators", to_json(g)},
                 {"bench",
                  {{"levels_scanned", t.levels_scanned},
                   {"base", t.base},
                   {"apery_max", apery_max},
                   {"frobenius", frobenius(t)},
                   {"standard_count", stairs.standard.size()},
                   {"groebner_count", gb.size()}}}};
    std::ostringstream text;
    text << "levels: " << t.levels_scanned << "\n"
         << "base: " << t.base << "\n"
         << "apery_max: " << apery_max << "\n"
         << "frobenius: " << frobenius(t) << "\n"
         << "standard: " << stairs.standard.size() << "\n"
         << "groebner: " << gb.size() << "\n";
    emit(out, opt.format, payload, text.str());
    return 0;
}

int run_n3(const Options& opt, std::ostream& out, std::ostream& err) {
    Gb3Result res = gb3(opt.triple[0], opt.triple[1], opt.triple[2]);
    if (res.used_fallback)
        err << "note: closed-form construction fell back to the general "
               "engine for this triple\n";
    std::ostringstream text;
    auto line = [&](const char* name, const std::vector<Int>& v) {
        text << name << ":";
        for (Int x : v) text << " " << x;
        text << "\n";
    };
    if (!res.used_fallback) {
        line("s", res.table.s);
        line("p", res.table.p);
        line("r", res.table.r);
        line("q", res.table.q);
        text << "mu: " << res.table.mu << "\n";
    }
    text << "basis:\n";
    for (const Binomial& b : res.binomials)
        text << binomial_string(b) << "\n";
    text << "staircase: " << res.staircase_size << "\n";
    text << "frobenius: " << res.frobenius << "\n";

    json binomials = json::array();
    for (const Binomial& b : res.binomials) binomials.push_back(to_json(b));
    json payload{{"command", "n3"},
                 {"generators", opt.triple},
                 {"n3",
                  {{"table", to_json(res.table)},
                   {"binomials", std::move(binomials)},
                   {"staircase", to_json(res.staircase)},
                   {"staircase_size", res.staircase_size},
                   {"frobenius", res.frobenius},
                   {"fallback", res.used_fallback}}}};
    emit(out, opt.format, payload, text.str());
    return 0;
}

}  // namespace

std::vector<Int> parse_generator_tokens(
    const std::vector<std::string>& tokens) {
    std::vector<Int> out;
    out.reserve(tokens.size());
    for (const std::string& tok : tokens) out.push_back(parse_int_token(tok));
    return out;
}

std::vector<Int> parse_generators_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open generators file '" + path + "'");
    std::vector<Int> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) out.push_back(parse_int_token(tok));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact Apery sets, Frobenius numbers and toric Groebner "
                 "bases of numerical semigroups"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* frob = app.add_subcommand("frobenius", "largest gap of the "
                                                     "semigroup");
    add_generator_options(frob, opt, true);
    CLI::App* apery =
        app.add_subcommand("apery", "minimal elements per residue class with "
                                    "witness monomials");
    add_generator_options(apery, opt, true);
    CLI::App* member = app.add_subcommand(
        "member", "membership certificate for a query value");
    member->add_option("b", opt.query, "query value")->required();
    add_generator_options(member, opt, true);
    CLI::App* standard =
        app.add_subcommand("standard", "monomials outside the initial ideal");
    add_generator_options(standard, opt, true);
    CLI::App* initial = app.add_subcommand(
        "initial", "minimal generators of the initial ideal");
    add_generator_options(initial, opt, true);
    CLI::App* groebner = app.add_subcommand(
        "groebner", "reduced Groebner basis of the toric ideal");
    add_generator_options(groebner, opt, true);
    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "Hilbert-Poincare series numerator, denominator, degree");
    add_generator_options(hilbert, opt, true);
    CLI::App* decompose = app.add_subcommand(
        "decompose", "degrees of the free module generators over the "
                     "parameter subring");
    add_generator_options(decompose, opt, true);
    CLI::App* n3 = app.add_subcommand(
        "n3", "closed-form basis for exactly three generators; the FIRST "
              "generator is the parameter (input order matters, unlike the "
              "other subcommands which default to the smallest)");
    n3->add_option("abc", opt.triple, "the three generators, parameter first")
        ->expected(3);
    n3->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the engine against the independent oracle");
    add_generator_options(verify, opt, true);
    verify->add_flag("--no-spairs", opt.no_spairs,
                     "skip the S-pair closure check");
    verify->add_option("--member-bound", opt.member_bound,
                       "cap of the membership scan (0 = full range)");
    CLI::App* bench =
        app.add_subcommand("bench", "timed run reporting level counts");
    add_generator_options(bench, opt, true);
    bench->add_option("--preset", opt.preset,
                      "named generator preset (paper17)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (app.got_subcommand(n3)) return run_n3(opt, out, err);

        GeneratorSet g = load_generators(opt, app.got_subcommand(bench));
        if (app.got_subcommand(verify)) return run_verify(g, opt, out, err);
        if (app.got_subcommand(bench)) return run_bench(g, opt, out, err);

        AperyTable t = compute_apery(g, apery_params(opt));
        json payload{{"generators", to_json(g)}};
        std::ostringstream text;

        if (app.got_subcommand(frob)) {
            payload["command"] = "frobenius";
            payload["frobenius"] = frobenius(t);
            text << frobenius(t) << "\n";
        } else if (app.got_subcommand(apery)) {
            payload["command"] = "apery";
            json tj = to_json(t);
            payload["apery"] = std::move(tj["entries"]);
            payload["base"] = t.base;
            payload["levels_scanned"] = t.levels_scanned;
            for (Int r = 0; r < t.base; ++r)
                text << r << " " << t.scaled_value(r) << " "
                     << monomial_string(t.witness(r)) << "\n";
        } else if (app.got_subcommand(member)) {
            MembershipCertificate cert = is_member(t, g, opt.query);
            payload["command"] = "member";
            payload["member"] = to_json(cert);
            if (cert.member)
                text << "true\n"
                     << representation_string(g, cert, opt.query) << "\n";
            else if (cert.blocking)
                text << "false\nblocking " << *cert.blocking << "\n";
            else
                text << "false\nnot a multiple of lambda " << g.lambda << "\n";
        } else if (app.got_subcommand(standard)) {
            payload["command"] = "standard";
            json arr = json::array();
            for (const auto& m : standard_monomials(g, t)) {
                arr.push_back(monomial_json(m.exps));
                text << monomial_string(m.exps) << "\n";
            }
            payload["standard"] = std::move(arr);
        } else if (app.got_subcommand(initial)) {
            payload["command"] = "initial";
            json arr = json::array();
            for (const auto& m : initial_ideal(g, t)) {
                arr.push_back(monomial_json(m.exps));
                text << monomial_string(m.exps) << "\n";
            }
            payload["initial"] = std::move(arr);
        } else if (app.got_subcommand(groebner)) {
            payload["command"] = "groebner";
            json arr = json::array();
            for (const Binomial& b : groebner_basis(g, t)) {
                arr.push_back(to_json(b));
                text << binomial_string(b) << "\n";
            }
            payload["groebner"] = std::move(arr);
        } else if (app.got_subcommand(hilbert)) {
            HilbertSeries h = hilbert_series(t, g);
            payload["command"] = "hilbert";
            payload["hilbert"] = to_json(h);
            text << "numerator:";
            for (Int e : h.numerator_exponents) text << " " << e;
            text << "\ndenominator: " << h.denominator_exponent
                 << "\ndegree: " << h.degree << "\n";
        } else if (app.got_subcommand(decompose)) {
            payload["command"] = "decompose";
            payload["decompose"] = module_decomposition(t);
            for (Int d : module_decomposition(t)) text << d << "\n";
        }
        emit(out, opt.format, payload, text.str());
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace nsg::cli
