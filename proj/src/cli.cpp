#include "arcinv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <set>

#include "arcinv/brieskorn.hpp"
#include "arcinv/catalog.hpp"
#include "arcinv/fibers.hpp"
#include "arcinv/io.hpp"
#include "arcinv/parallel.hpp"
#include "arcinv/recovery.hpp"
#include "arcinv/selfcheck.hpp"
#include "arcinv/zeta.hpp"

namespace arcinv {

namespace {

const std::set<std::string> kValueOptions{"--order", "--format", "--jobs", "--min-d", "--max-d", "--max-exp", "--kind"};

// Moves every argument that is not an option behind "--" so that polynomials
// such as "-x1^2 + x2^3" and targets such as "-1" stay positional.
std::vector<std::string> separate_positionals(const std::vector<std::string>& args) {
    if (args.empty()) return args;
    std::vector<std::string> options{args.front()};
    std::vector<std::string> positionals;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--") {
            positionals.insert(positionals.end(), args.begin() + static_cast<std::ptrdiff_t>(i) + 1, args.end());
            break;
        }
        if (a == "-h" || a == "--help") {
            options.push_back(a);
        } else if (a.rfind("--", 0) == 0) {
            if (kValueOptions.contains(a) && i + 1 < args.size())
                options.push_back(a + "=" + args[++i]);
            else
                options.push_back(a);
        } else {
            positionals.push_back(a);
        }
    }
    options.emplace_back("--");
    options.insert(options.end(), positionals.begin(), positionals.end());
    return options;
}

BrieskornPoly parse_arg(const std::string& text) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw std::invalid_argument("cannot parse \"" + text + "\": " + e.what());
    }
}

int resolve_order(const Config& cfg, const BrieskornPoly& f) { return cfg.order > 0 ? cfg.order : default_order(f); }

std::string join_ints(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_normalize(const Config& cfg, const std::string& input, std::ostream& out) {
    const BrieskornPoly f = normalize(parse_arg(input));
    switch (cfg.format) {
        case OutputFormat::json:
            out << json{{"input", input}, {"normalized", f.to_string()}, {"singular", is_singular(f)}}.dump() << '\n';
            break;
        case OutputFormat::csv:
            out << "input,normalized,singular\n"
                << csv_quote(input) << ',' << csv_quote(f.to_string()) << ',' << (is_singular(f) ? "true" : "false") << '\n';
            break;
        case OutputFormat::plain: out << f.to_string() << '\n'; break;
    }
    return exit_code::ok;
}

int cmd_classify(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out) {
    const BrieskornPoly f = parse_arg(a);
    const BrieskornPoly g = parse_arg(b);
    const EquivalenceVerdict v = classify_pair(f, g);
    switch (cfg.format) {
        case OutputFormat::json: {
            json j = to_json(v);
            j["f"] = normalize(f).to_string();
            j["g"] = normalize(g).to_string();
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "f,g,equivalent,reason,detail\n"
                << csv_quote(normalize(f).to_string()) << ',' << csv_quote(normalize(g).to_string()) << ','
                << (v.equivalent ? "true" : "false") << ',' << to_string(v.reason) << ','
                << (v.detail ? std::to_string(*v.detail) : "") << '\n';
            break;
        case OutputFormat::plain: out << v.describe() << '\n'; break;
    }
    return v.equivalent ? exit_code::ok : exit_code::not_equivalent;
}

int cmd_fiber(const Config& cfg, const std::string& input, int target, std::ostream& out, std::ostream& err) {
    const BrieskornPoly f = parse_arg(input);
    const FiberQuery q(f.terms(), target);
    const LaurentPoly closed = beta_closed(q);
    const LaurentPoly recursive = beta_recursive(q);
    if (closed != recursive) {
        err << "error: fiber engines disagree: closed " << closed << ", recursive " << recursive << '\n';
        return exit_code::error;
    }
    const Rational chi = evaluate(closed, -1);
    const auto reduced = reduce(q);
    if (std::holds_alternative<TwoPowerForm>(reduced) && euler_fiber(q) != chi.num) {
        err << "error: Euler characteristic mismatch\n";
        return exit_code::error;
    }
    switch (cfg.format) {
        case OutputFormat::json:
            out << json{{"polynomial", f.to_string()}, {"target", target}, {"beta", to_json(closed)},
                        {"beta_text", closed.to_string()}, {"chi_c", chi.num}, {"engines_agree", true}}
                       .dump()
                << '\n';
            break;
        case OutputFormat::csv:
            out << "target,beta,chi_c\n" << target << ',' << csv_quote(closed.to_string()) << ',' << chi.num << '\n';
            break;
        case OutputFormat::plain:
            out << "closed:    " << closed << '\n'
                << "recursive: " << recursive << '\n'
                << "chi_c:     " << chi.num << '\n';
            break;
    }
    return exit_code::ok;
}

template <ZetaKind Kind>
void emit_zeta(const Config& cfg, const RealizedZeta<Kind>& z, std::ostream& out) {
    switch (cfg.format) {
        case OutputFormat::json: out << to_json(z).dump() << '\n'; break;
        case OutputFormat::csv: write_csv(out, z); break;
        case OutputFormat::plain:
            out << to_string(Kind) << " zeta, order " << z.order() << '\n';
            for (int n = 1; n <= z.order(); ++n) {
                const auto& c = z.at(n);
                out << std::setw(4) << n << "  bbar: " << c.bbar << "  fplus: " << c.fplus << "  fminus: " << c.fminus
                    << '\n';
            }
            break;
    }
}

int cmd_zeta(const Config& cfg, const std::string& input, const std::string& kind, std::ostream& out) {
    const BrieskornPoly f = parse_arg(input);
    const ModifiedZeta z = modified_zeta(f, resolve_order(cfg, f));
    if (kind == "modified")
        emit_zeta(cfg, z, out);
    else
        emit_zeta(cfg, plain_from_modified(z), out);
    return exit_code::ok;
}

int cmd_recover(const Config& cfg, const std::string& input, std::ostream& out) {
    const BrieskornPoly f = normalize(parse_arg(input));
    if (!is_singular(f)) throw std::invalid_argument("recover: polynomial is nonsingular, its modified zeta vanishes");
    const auto exps = f.exponents();
    const SignRecovery r = recover(exps, modified_zeta(f, resolve_order(cfg, f)));
    switch (cfg.format) {
        case OutputFormat::json: out << to_json(r).dump() << '\n'; break;
        case OutputFormat::csv:
            out << "k,sigma_plus,sigma_minus,pi,rho,branch\n";
            for (const auto& s : r.steps)
                out << s.k << ',' << s.counts.plus << ',' << s.counts.minus << ',' << csv_quote(s.pi.to_string()) << ','
                    << csv_quote(s.rho.to_string()) << ',' << to_string(s.branch) << '\n';
            break;
        case OutputFormat::plain:
            if (r.steps.empty()) out << "K is empty: no sign is an invariant\n";
            for (const auto& s : r.steps)
                out << "k=" << s.k << "  sigma+=" << s.counts.plus << "  sigma-=" << s.counts.minus << "  pi=" << s.pi
                    << "  rho=" << s.rho << "  branch=" << to_string(s.branch) << '\n';
            break;
    }
    return exit_code::ok;
}

int cmd_table(const Config& cfg, std::ostream& out) {
    if (cfg.min_d < 1 || cfg.max_d < cfg.min_d || cfg.max_d > 32 || cfg.max_exp < 2)
        throw std::invalid_argument("table bounds must satisfy 1 <= min-d <= max-d <= 32 and max-exp >= 2");
    const int order = cfg.order > 0 ? cfg.order : 2 * cfg.max_exp;
    constexpr std::size_t kBatch = 4096;

    if (cfg.format == OutputFormat::csv) out << "polynomial,representative,class,K,sign_counts\n";
    ClassificationTable table;
    std::map<int, std::vector<ModifiedZeta>> rep_zetas;  // per d, indexed by class

    std::vector<BrieskornPoly> batch;
    auto flush = [&] {
        std::vector<std::optional<ModifiedZeta>> zetas(batch.size());
        parallel_for(batch.size(), cfg.jobs, [&](std::size_t i) { zetas[i] = modified_zeta(batch[i], order); });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const TableRecord rec = table.add(batch[i]);
            auto& reps = rep_zetas[static_cast<int>(rec.polynomial.num_variables())];
            if (rec.class_index == reps.size()) reps.push_back(*zetas[i]);
            for (std::size_t c = 0; c < reps.size(); ++c)
                if (zeta_equal(reps[c], *zetas[i]) != (c == rec.class_index))
                    throw std::logic_error("zeta equality disagrees with the classification for " +
                                           rec.polynomial.to_string());
            switch (cfg.format) {
                case OutputFormat::json: out << to_json(rec).dump() << '\n'; break;
                case OutputFormat::csv: {
                    std::string counts;
                    for (const auto& sc : rec.counts)
                        counts += "(" + std::to_string(sc.plus) + ";" + std::to_string(sc.minus) + ")";
                    out << csv_quote(rec.polynomial.to_string()) << ',' << csv_quote(rec.representative.to_string())
                        << ',' << rec.class_index << ',' << csv_quote(join_ints(rec.relevant)) << ',' << csv_quote(counts)
                        << '\n';
                    break;
                }
                case OutputFormat::plain: {
                    out << rec.polynomial.to_string() << "  ~  " << rec.representative.to_string() << "  [class "
                        << rec.class_index + 1 << ", K=" << join_ints(rec.relevant);
                    for (std::size_t k = 0; k < rec.relevant.size(); ++k)
                        out << " " << rec.relevant[k] << ":(" << rec.counts[k].plus << "," << rec.counts[k].minus << ")";
                    out << "]\n";
                    break;
                }
            }
        }
        batch.clear();
    };

    for (int d = cfg.min_d; d <= cfg.max_d; ++d) {
        for_each_normalized(d, 2, cfg.max_exp, [&](const BrieskornPoly& f) {
            batch.push_back(f);
            if (batch.size() == kBatch) flush();
        });
        flush();
    }

    for (int d = cfg.min_d; d <= cfg.max_d; ++d) {
        const auto count = table.class_count(static_cast<std::size_t>(d));
        const auto predicted = predicted_class_count(d, cfg.max_exp);
        if (count != predicted)
            throw std::logic_error("class count " + std::to_string(count) + " differs from predicted " +
                                   std::to_string(predicted) + " for d=" + std::to_string(d));
        if (cfg.format == OutputFormat::plain) out << "# d=" << d << ": " << count << " classes\n";
        if (cfg.format == OutputFormat::json) out << json{{"summary", {{"d", d}, {"classes", count}}}}.dump() << '\n';
    }
    return exit_code::ok;
}

int cmd_selfcheck(const Config& cfg, std::ostream& out) {
    SelfCheckConfig sc;
    sc.max_d = cfg.max_d;
    sc.max_exp = cfg.max_exp;
    sc.order = cfg.order > 0 ? cfg.order : 2 * cfg.max_exp;
    sc.jobs = cfg.jobs;
    const auto results = run_selfcheck(sc);
    bool ok = true;
    json j = json::array();
    for (const auto& r : results) {
        ok = ok && r.passed();
        if (cfg.format == OutputFormat::plain) {
            out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(32) << r.name << std::right << std::setw(10)
                << r.cases << " cases  " << std::fixed << std::setprecision(2) << r.seconds << "s";
            if (!r.passed()) out << "  failures=" << r.failures << "  first: " << r.first_failure;
            out << '\n';
        } else if (cfg.format == OutputFormat::csv) {
            if (&r == &results.front()) out << "suite,passed,cases,failures,seconds\n";
            out << r.name << ',' << (r.passed() ? "true" : "false") << ',' << r.cases << ',' << r.failures << ','
                << r.seconds << '\n';
        } else {
            j.push_back({{"suite", r.name},
                         {"passed", r.passed()},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"first_failure", r.first_failure},
                         {"seconds", r.seconds}});
        }
    }
    if (cfg.format == OutputFormat::json) out << j.dump() << '\n';
    if (cfg.format == OutputFormat::plain) out << (ok ? "all suites passed\n" : "some suites FAILED\n");
    return ok ? exit_code::ok : exit_code::check_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arc-analytic invariants of Brieskorn polynomials", "arcinv"};
    app.require_subcommand(1);

    Config cfg;
    const std::map<std::string, OutputFormat> formats{
        {"plain", OutputFormat::plain}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    };
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", cfg.order, "Truncation order N (default: twice the largest exponent)")
            ->check(CLI::Range(1, 100000));
    };
    auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", cfg.jobs, "Worker threads (default: all cores)"); };
    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--max-d", cfg.max_d, "Largest number of variables")->check(CLI::Range(1, 32));
        sub->add_option("--max-exp", cfg.max_exp, "Largest exponent")->check(CLI::Range(2, 1000));
    };

    std::string f_text, g_text, kind = "modified";
    int target = 0;

    auto* normalize_cmd = app.add_subcommand("normalize", "Parse and normalize a polynomial");
    normalize_cmd->add_option("polynomial", f_text)->required();
    add_common(normalize_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "Decide arc-analytic equivalence (exit 0 equivalent, 1 not)");
    classify_cmd->add_option("f", f_text)->required();
    classify_cmd->add_option("g", g_text)->required();
    add_common(classify_cmd);

    auto* fiber_cmd = app.add_subcommand("fiber", "Virtual Poincare polynomial and chi_c of {f = target}");
    fiber_cmd->add_option("polynomial", f_text)->required();
    fiber_cmd->add_option("target", target, "-1, 0 or 1")->check(CLI::IsMember({-1, 0, 1}));
    add_common(fiber_cmd);

    auto* zeta_cmd = app.add_subcommand("zeta", "Realized zeta coefficients");
    zeta_cmd->add_option("polynomial", f_text)->required();
    zeta_cmd->add_option("--kind", kind, "modified or plain")->check(CLI::IsMember({"modified", "plain"}));
    add_common(zeta_cmd);
    add_order(zeta_cmd);

    auto* recover_cmd = app.add_subcommand("recover", "Recover relevant sign counts from the modified zeta function");
    recover_cmd->add_option("polynomial", f_text)->required();
    add_common(recover_cmd);
    add_order(recover_cmd);

    auto* table_cmd = app.add_subcommand("table", "Classify every normalized singular polynomial within bounds");
    table_cmd->add_option("--min-d", cfg.min_d, "Smallest number of variables")->check(CLI::Range(1, 32));
    add_bounds(table_cmd);
    add_common(table_cmd);
    add_order(table_cmd);
    add_jobs(table_cmd);

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run every invariant sweep");
    add_bounds(selfcheck_cmd);
    add_common(selfcheck_cmd);
    add_order(selfcheck_cmd);
    add_jobs(selfcheck_cmd);

    std::vector<std::string> args = separate_positionals(raw_args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::error;
    }

    try {
        if (*normalize_cmd) return cmd_normalize(cfg, f_text, out);
        if (*classify_cmd) return cmd_classify(cfg, f_text, g_text, out);
        if (*fiber_cmd) return cmd_fiber(cfg, f_text, target, out, err);
        if (*zeta_cmd) return cmd_zeta(cfg, f_text, kind, out);
        if (*recover_cmd) return cmd_recover(cfg, f_text, out);
        if (*table_cmd) return cmd_table(cfg, out);
        if (*selfcheck_cmd) return cmd_selfcheck(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::error;
    }
    return exit_code::error;
}

}  // namespace arcinv
