// floorlab: command-line surface over the exact nested-floor library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 domain error (also unsupported requests and exceeded budgets).

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "floorlab/evaluator.hpp"
#include "floorlab/io.hpp"
#include "floorlab/partitioner.hpp"
#include "floorlab/rational.hpp"
#include "floorlab/verifier.hpp"

namespace {

using namespace floorlab;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + path);
    file << content;
}

struct PointArgs {
    std::string x;
    unsigned n = 1;
    unsigned m = 1;
    std::string format = "text";
};

struct IntervalArgs {
    unsigned n = 1;
    std::string a;
    std::string b;
    std::string format = "text";
    std::string out = "-";
};

struct VerifyArgs {
    std::string claims;
    unsigned kmax = 0, nmax = 0, mmax = 0, hmax = 0;
    std::string interval;
    unsigned threads = 1;
    std::string out = "-";
    CLI::Option* kmax_opt = nullptr;
    CLI::Option* nmax_opt = nullptr;
    CLI::Option* mmax_opt = nullptr;
    CLI::Option* hmax_opt = nullptr;
};

std::vector<ClaimId> parse_claims(const std::string& list) {
    if (list.empty())
        return {all_claims.begin(), all_claims.end()};
    std::vector<ClaimId> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string token =
            list.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        const auto id = claim_from_string(token);
        if (!id)
            throw CLI::ValidationError("--claims", "unknown claim \"" + token +
                                                       "\"");
        out.push_back(*id);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

void add_format_option(CLI::App* cmd, std::string& target,
                       const std::vector<std::string>& choices) {
    cmd->add_option("--format", target, "output format")
        ->check(CLI::IsMember(choices));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"floorlab: exact arithmetic for nested floor functions: "
                 "values, one-sided limits, jump enumeration, claim checks"};
    app.require_subcommand(1);
    int exit_status = 0;

    // --- eval ---------------------------------------------------------------
    auto eval_args = std::make_shared<PointArgs>();
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate f_{n,m}(x) at a rational point");
    eval_cmd->add_option("-x,--point", eval_args->x, "point, \"p/q\" or integer")
        ->required();
    eval_cmd->add_option("-n,--depth", eval_args->n, "nesting depth")->required();
    eval_cmd->add_option("-m,--exponent", eval_args->m, "exponent (default 1)");
    add_format_option(eval_cmd, eval_args->format, {"text", "json"});
    eval_cmd->callback([eval_args] {
        const Rational x = Rational::parse(eval_args->x);
        const BigInt value = eval_fn(x, eval_args->n, eval_args->m);
        if (eval_args->format == "json") {
            io::json params{{"x", x.str()}, {"n", eval_args->n}, {"m", eval_args->m}};
            std::cout << io::dump(io::envelope(
                "eval", std::move(params), io::json{{"value", value.str()}}));
        } else {
            std::cout << value.str() << "\n";
        }
    });

    // --- limits ---------------------------------------------------------------
    auto limits_args = std::make_shared<PointArgs>();
    CLI::App* limits_cmd = app.add_subcommand(
        "limits", "one-sided limits of f_{n,m} at a rational point");
    limits_cmd
        ->add_option("-x,--point", limits_args->x, "point, \"p/q\" or integer")
        ->required();
    limits_cmd->add_option("-n,--depth", limits_args->n, "nesting depth")
        ->required();
    limits_cmd->add_option("-m,--exponent", limits_args->m, "exponent (default 1)");
    add_format_option(limits_cmd, limits_args->format, {"text", "json"});
    limits_cmd->callback([limits_args] {
        const Rational x = Rational::parse(limits_args->x);
        const SidedLimits sl = sided_limits(x, limits_args->n, limits_args->m);
        if (limits_args->format == "json") {
            io::json params{
                {"x", x.str()}, {"n", limits_args->n}, {"m", limits_args->m}};
            std::cout << io::dump(
                io::envelope("limits", std::move(params), io::to_json(sl)));
        } else {
            std::cout << "left=" << sl.left.str() << " right=" << sl.right.str()
                      << " jump=" << sl.jump.str() << "\n";
        }
    });

    // --- partition ------------------------------------------------------------
    auto part_args = std::make_shared<IntervalArgs>();
    CLI::App* part_cmd = app.add_subcommand(
        "partition", "maximal constancy intervals of f_n on [a, b)");
    part_cmd->add_option("-n,--depth", part_args->n, "nesting depth")->required();
    part_cmd->add_option("-a,--from", part_args->a, "left endpoint (inclusive)")
        ->required();
    part_cmd->add_option("-b,--to", part_args->b, "right endpoint (exclusive)")
        ->required();
    add_format_option(part_cmd, part_args->format, {"text", "json", "csv"});
    part_cmd->callback([part_args] {
        const Rational a = Rational::parse(part_args->a);
        const Rational b = Rational::parse(part_args->b);
        const Partition part = partition(part_args->n, a, b);
        if (part_args->format == "json") {
            io::json params{{"n", part_args->n}, {"a", a.str()}, {"b", b.str()}};
            std::cout << io::dump(
                io::envelope("partition", std::move(params), io::to_json(part)));
        } else if (part_args->format == "csv") {
            std::cout << io::csv(part);
        } else {
            for (const StepInterval& iv : part.intervals)
                std::cout << "[" << iv.lo.str() << ", " << iv.hi.str()
                          << ") value=" << iv.value.str() << "\n";
        }
    });

    // --- discont ---------------------------------------------------------------
    auto disc_args = std::make_shared<IntervalArgs>();
    CLI::App* disc_cmd =
        app.add_subcommand("discont", "jump discontinuities of f_n in [a, b)");
    disc_cmd->add_option("-n,--depth", disc_args->n, "nesting depth")->required();
    disc_cmd->add_option("-a,--from", disc_args->a, "left endpoint (inclusive)")
        ->required();
    disc_cmd->add_option("-b,--to", disc_args->b, "right endpoint (exclusive)")
        ->required();
    add_format_option(disc_cmd, disc_args->format, {"text", "json", "csv"});
    disc_cmd->callback([disc_args] {
        const Rational a = Rational::parse(disc_args->a);
        const Rational b = Rational::parse(disc_args->b);
        const auto jumps = discontinuities(disc_args->n, a, b);
        if (disc_args->format == "json") {
            io::json params{{"n", disc_args->n}, {"a", a.str()}, {"b", b.str()}};
            io::json results{{"count", jumps.size()},
                             {"discontinuities", io::to_json(jumps)}};
            std::cout << io::dump(
                io::envelope("discont", std::move(params), std::move(results)));
        } else if (disc_args->format == "csv") {
            std::cout << io::csv(jumps);
        } else {
            for (const Discontinuity& d : jumps)
                std::cout << "at=" << d.at.str() << " left=" << d.left.str()
                          << " right=" << d.right.str()
                          << " jump=" << d.jump.str() << "\n";
        }
    });

    // --- verify ----------------------------------------------------------------
    auto verify_args = std::make_shared<VerifyArgs>();
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check every claim against exact computation");
    verify_cmd->add_option("--claims", verify_args->claims,
                           "comma-separated claim names (default: all)");
    verify_args->kmax_opt =
        verify_cmd->add_option("--kmax", verify_args->kmax, "cap for k ranges");
    verify_args->nmax_opt =
        verify_cmd->add_option("--nmax", verify_args->nmax, "cap for depth ranges");
    verify_args->mmax_opt =
        verify_cmd->add_option("--mmax", verify_args->mmax, "cap for exponent ranges");
    verify_args->hmax_opt =
        verify_cmd->add_option("--hmax", verify_args->hmax, "cap for counting range");
    verify_cmd->add_option("--interval", verify_args->interval,
                           "interval a:b for the nesting claim");
    verify_cmd->add_option("--threads", verify_args->threads,
                           "concurrent claims (default 1)");
    verify_cmd->add_option("-o,--out", verify_args->out,
                           "report file (default stdout)");
    verify_cmd->callback([verify_args, &exit_status] {
        SuiteConfig config;
        config.claims = parse_claims(verify_args->claims);
        if (verify_args->kmax_opt->count())
            config.kmax = verify_args->kmax;
        if (verify_args->nmax_opt->count())
            config.nmax = verify_args->nmax;
        if (verify_args->mmax_opt->count())
            config.mmax = verify_args->mmax;
        if (verify_args->hmax_opt->count())
            config.hmax = verify_args->hmax;
        if (!verify_args->interval.empty()) {
            const auto colon = verify_args->interval.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("--interval", "expected a:b");
            config.interval_a =
                Rational::parse(verify_args->interval.substr(0, colon));
            config.interval_b =
                Rational::parse(verify_args->interval.substr(colon + 1));
        }
        config.threads = verify_args->threads;

        const VerificationReport report = run_suite(config);

        // The thread count is execution mechanics, not a semantic parameter:
        // serial and parallel runs must serialize to identical bytes.
        io::json params{
            {"claims", verify_args->claims.empty() ? "all" : verify_args->claims}};
        write_output(verify_args->out,
                     io::dump(io::envelope("verify", std::move(params),
                                           io::to_json(report))));

        for (const ClaimResult& r : report.claims)
            std::cerr << to_string(r.claim) << ": " << to_string(r.status)
                      << " (" << r.range << ", "
                      << r.counterexamples.size() << " counterexamples)\n";
        std::cerr << "pass=" << report.passed << " fail=" << report.failed
                  << " mismatch=" << report.mismatched << " wall_ms="
                  << report.wall_ms << "\n";
        exit_status = report.all_pass() ? 0 : 1;
    });

    // --- render ----------------------------------------------------------------
    auto render_args = std::make_shared<IntervalArgs>();
    CLI::App* render_cmd =
        app.add_subcommand("render", "SVG step plot of f_n on [a, b)");
    render_cmd->add_option("-n,--depth", render_args->n, "nesting depth")
        ->required();
    render_cmd->add_option("-a,--from", render_args->a, "left endpoint (inclusive)")
        ->required();
    render_cmd->add_option("-b,--to", render_args->b, "right endpoint (exclusive)")
        ->required();
    render_cmd->add_option("-o,--out", render_args->out,
                           "SVG file (default stdout)");
    render_cmd->callback([render_args] {
        const Rational a = Rational::parse(render_args->a);
        const Rational b = Rational::parse(render_args->b);
        write_output(render_args->out,
                     io::render_svg(partition(render_args->n, a, b)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return exit_status;
}
