// Command-line front door: tables, single evaluations, verification suites.
//
// Exit codes: 0 success (and all checks passing), 1 verification failure,
// 2 invalid configuration.

#include "CLI11.hpp"
#include "json.hpp"

#include "ecmoment/classsum.hpp"
#include "ecmoment/curves.hpp"
#include "ecmoment/finitefield.hpp"
#include "ecmoment/numtheory.hpp"
#include "ecmoment/quadforms.hpp"
#include "ecmoment/rational.hpp"
#include "ecmoment/traceformula.hpp"
#include "ecmoment/verify.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::ordered_json;
using namespace ecm;

namespace {

struct Output {
    std::string format = "json"; // json | csv
    std::string path;            // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + path);
            out << text << "\n";
        }
    }
};

std::pair<std::int64_t, std::int64_t> parse_group(const std::string& a) {
    auto comma = a.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--A", "expected \"m1,m2\"");
    return {std::stoll(a.substr(0, comma)), std::stoll(a.substr(comma + 1))};
}

std::int64_t resolve_q(std::int64_t q, std::int64_t p, int n) {
    if (q > 0) return q;
    if (p > 0 && n > 0) return ipow(p, n);
    throw CLI::ValidationError("--q", "need --q or both --p and --n");
}

json checks_to_json(const std::vector<CheckGroup>& groups) {
    json checks = json::array();
    for (const auto& g : groups) {
        checks.push_back({{"name", g.name},
                          {"pass", g.pass()},
                          {"lhs", std::to_string(g.total - (std::int64_t)g.failures.size()) + " passed"},
                          {"rhs", std::to_string(g.total) + " total"}});
        for (const auto& f : g.failures)
            checks.push_back({{"name", g.name + " " + f.name}, {"pass", false}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    return checks;
}

std::string checks_to_csv(const std::vector<CheckGroup>& groups) {
    std::string out = "name,pass,lhs,rhs\n";
    for (const auto& g : groups) {
        out += g.name + "," + (g.pass() ? "true" : "false") + "," +
               std::to_string(g.total - (std::int64_t)g.failures.size()) + " passed," +
               std::to_string(g.total) + " total\n";
        for (const auto& f : g.failures)
            out += g.name + " " + f.name + ",false," + f.lhs + "," + f.rhs + "\n";
    }
    return out;
}

int emit_checks(const std::string& command, const json& params,
                const std::vector<CheckGroup>& groups, const Output& out) {
    bool all_pass = true;
    for (const auto& g : groups) all_pass = all_pass && g.pass();
    if (out.format == "csv") {
        out.emit(checks_to_csv(groups));
    } else {
        json doc = {{"command", command}, {"params", params}, {"result", all_pass ? "pass" : "fail"},
                    {"checks", checks_to_json(groups)}};
        out.emit(doc.dump(2));
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moments of elliptic-curve traces and Eichler-Selberg Hecke traces"};
    app.require_subcommand(1);
    app.fallthrough(); // let --format/--out appear after the subcommand

    Output out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    std::int64_t q = 0, p = 0, delta = 0, N = 1, M = 1, d = 1;
    int n = 0, k = 12, r = 0, workers = 1;
    std::string group_arg = "1,1";

    auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz-Kronecker class number H(delta)");
    hurwitz->add_option("--delta", delta, "discriminant (negative integer)")->required();

    auto* census_cmd = app.add_subcommand("census", "weighted curve census over F_q");
    census_cmd->add_option("--q", q, "prime power q");
    census_cmd->add_option("--p", p, "characteristic (with --n)");
    census_cmd->add_option("--n", n, "extension degree (with --p)");
    census_cmd->add_option("--A", group_arg, "subgroup as \"m1,m2\"");
    census_cmd->add_option("--workers", workers, "parallel workers")->check(CLI::Range(1, 64));

    auto* moment_cmd = app.add_subcommand("moment", "both sides of the moment identity");
    moment_cmd->add_option("--q", q, "prime power q");
    moment_cmd->add_option("--p", p, "characteristic (with --n)");
    moment_cmd->add_option("--n", n, "extension degree (with --p)");
    moment_cmd->add_option("--A", group_arg, "subgroup as \"m1,m2\"")->required();
    moment_cmd->add_option("--k", k, "weight")->required();

    auto* trace_cmd = app.add_subcommand("trace", "Hecke trace via the four-term formula");
    trace_cmd->add_option("--N", N, "level part coprime to q")->required();
    trace_cmd->add_option("--M", M, "lower-left congruence divisor");
    trace_cmd->add_option("--q", q, "prime power q")->required();
    trace_cmd->add_option("--k", k, "weight")->required();
    trace_cmd->add_option("--d", d, "diamond operator argument");
    trace_cmd->add_option("--r", r, "p-exponent of the level");

    auto* vmain = app.add_subcommand("verify-main", "main identity across the acceptance grid");
    std::int64_t fq = 0;
    int fk = 0;
    std::string fA;
    vmain->add_option("--q", fq, "restrict to one q");
    vmain->add_option("--k", fk, "restrict to one weight");
    vmain->add_option("--A", fA, "restrict to one subgroup \"m1,m2\"");

    auto* vlem = app.add_subcommand("verify-lemmas", "lemma suite across the stated grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (hurwitz->parsed()) {
            Rat h = hurwitz_class_number(delta);
            if (out.format == "csv") {
                out.emit("delta,H\n" + std::to_string(delta) + "," + rat_to_string(h));
            } else {
                json doc = {{"command", "hurwitz"}, {"params", {{"delta", delta}}},
                            {"result", rat_to_string(h)}};
                out.emit(doc.dump(2));
            }
            return 0;
        }

        if (census_cmd->parsed()) {
            std::int64_t qq = resolve_q(q, p, n);
            auto [m1, m2] = parse_group(group_arg);
            auto ctx = FieldCtx::for_prime_power(qq);
            AbelianSpec spec = AbelianSpec::make(m1, m2, qq);
            CensusReport rep = census(*ctx, spec, workers);
            if (out.format == "csv") {
                out.emit(rep.to_csv());
            } else {
                json doc = {{"command", "census"},
                            {"params", {{"q", qq}, {"m1", m1}, {"m2", m2}, {"workers", workers}}},
                            {"result", json::parse(rep.to_json())}};
                out.emit(doc.dump(2));
            }
            return 0;
        }

        if (moment_cmd->parsed()) {
            std::int64_t qq = resolve_q(q, p, n);
            auto [m1, m2] = parse_group(group_arg);
            auto ctx = FieldCtx::for_prime_power(qq);
            AbelianSpec spec = AbelianSpec::make(m1, m2, qq);
            Rat lhs = weighted_moment(*ctx, spec, k);
            Rat rhs = trace_side_moment(spec, qq, k);
            bool equal = lhs == rhs;
            if (out.format == "csv") {
                out.emit("lhs,rhs,equal\n" + rat_to_string(lhs) + "," + rat_to_string(rhs) + "," +
                         (equal ? "true" : "false"));
            } else {
                json doc = {{"command", "moment"},
                            {"params", {{"q", qq}, {"m1", m1}, {"m2", m2}, {"k", k}}},
                            {"result", {{"lhs", rat_to_string(lhs)}, {"rhs", rat_to_string(rhs)}, {"equal", equal}}}};
                out.emit(doc.dump(2));
            }
            return equal ? 0 : 1;
        }

        if (trace_cmd->parsed()) {
            TraceParams tp(N, M, q, d, k, r);
            Rat tr = hecke_trace(tp);
            if (out.format == "csv") {
                out.emit("trace\n" + rat_to_string(tr));
            } else {
                json doc = {{"command", "trace"},
                            {"params", {{"N", N}, {"M", M}, {"q", q}, {"d", d}, {"k", k}, {"r", r}}},
                            {"result", rat_to_string(tr)}};
                out.emit(doc.dump(2));
            }
            return 0;
        }

        if (vmain->parsed()) {
            MainTheoremFilter filter;
            filter.q = fq;
            filter.k = fk;
            if (!fA.empty()) {
                auto [m1, m2] = parse_group(fA);
                filter.m1 = m1;
                filter.m2 = m2;
            }
            auto g = verify_main_theorem({2, 3, 4, 5, 8, 9}, 18, {2, 4, 6, 8, 10, 12, 14, 16}, filter);
            json params = {{"q", fq}, {"k", fk}, {"A", fA}};
            return emit_checks("verify-main", params, {g}, out);
        }

        if (vlem->parsed()) {
            return emit_checks("verify-lemmas", json::object(), verify_lemma_suite(), out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
