// addgen: positive lengths, diameters, and extremal invariants of finite
// abelian groups from the command line.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "addgen/constructions.hpp"
#include "addgen/errors.hpp"
#include "addgen/formulas.hpp"
#include "addgen/group.hpp"
#include "addgen/literals.hpp"
#include "addgen/oracle.hpp"
#include "addgen/subgroup.hpp"
#include "addgen/verify.hpp"

using nlohmann::json;
using namespace addgen;

namespace {

constexpr const char* kEngineVersion = "1.0.0";

constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

struct Options {
    std::string format = "text";
    int jobs = 1;
    std::string cache_path;
    double budget_seconds = 0.0;
    long long max_order = 16;
    bool allow_bnb = false;
};

SearchBudget make_budget(const Options& o) {
    SearchBudget b;
    b.exhaustive_order_bound = o.max_order;
    b.bnb_order_bound = o.allow_bnb ? std::max<long long>(64, o.max_order) : o.max_order;
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(o.budget_seconds * 1000.0));
    b.jobs = o.jobs;
    return b;
}

// Line-delimited JSON result cache.  Keys are canonical normalized inputs;
// a hit requires exact key and engine-version match.  Appends are done by the
// single coordinating process only.
class Cache {
public:
    explicit Cache(std::string path) : path_(std::move(path)) {}

    bool enabled() const { return !path_.empty(); }

    std::optional<json> lookup(const std::string& command, const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path_);
        std::optional<json> hit;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json rec = json::parse(line, nullptr, false);
            if (rec.is_discarded()) continue;
            if (rec.value("command", "") == command && rec.value("key", "") == key &&
                rec.value("version", "") == kEngineVersion)
                hit = rec;  // last record wins
        }
        return hit;
    }

    void store(const std::string& command, const std::string& key, const json& payload,
               long long runtime_ms) const {
        if (!enabled()) return;
        json rec = {{"command", command},
                    {"key", key},
                    {"version", kEngineVersion},
                    {"payload", payload},
                    {"runtime_ms", runtime_ms},
                    {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(
                                      std::chrono::system_clock::now().time_since_epoch())
                                      .count()}};
        std::ofstream out(path_, std::ios::app);
        out << rec.dump() << '\n';
    }

private:
    std::string path_;
};

// Runs (or replays from cache) one command and emits the report in the
// requested format.  `payload` must carry "result" and "provenance";
// text/csv renderers receive the result object.
int emit(const Options& opts, const std::string& command, const json& inputs,
         const std::function<json()>& compute,
         const std::function<void(const json&)>& render_text,
         const std::function<void(const json&)>& render_csv,
         const std::function<int(const json&)>& exit_code) {
    const Cache cache(opts.cache_path);
    const std::string key = inputs.dump();

    json payload;
    long long runtime_ms = 0;
    if (auto hit = cache.lookup(command, key)) {
        payload = (*hit)["payload"];
        runtime_ms = hit->value("runtime_ms", 0LL);
    } else {
        const auto start = std::chrono::steady_clock::now();
        payload = compute();
        runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        cache.store(command, key, payload, runtime_ms);
    }

    const json& result = payload.at("result");
    if (opts.format == "json") {
        json out = {{"command", command},
                    {"inputs", inputs},
                    {"result", result},
                    {"provenance", payload.value("provenance", json::array())},
                    {"runtime_ms", runtime_ms}};
        std::cout << out.dump(2) << '\n';
    } else if (opts.format == "csv") {
        render_csv(result);
    } else {
        render_text(result);
    }
    return exit_code(result);
}

int zero_exit(const json&) { return 0; }

std::string opt_to_text(const json& v) { return v.is_null() ? "inf" : v.dump(); }

// ---- subcommand implementations ----

int cmd_diam(const Options& opts, const std::string& group_lit, const std::string& set_lit) {
    const GroupType g = parse_group(group_lit);
    json inputs = {{"group", format_group(g)}};
    std::optional<ElementSet> set;
    if (!set_lit.empty()) {
        set = parse_set(g, set_lit);
        inputs["set"] = format_set(*set);
    }
    return emit(
        opts, "diam", inputs,
        [&]() -> json {
            if (set) {
                auto d = diameter(*set);
                return {{"result", {{"diameter", d ? json(*d) : json(nullptr)}}},
                        {"provenance", json::array()}};
            }
            return {{"result", {{"diameter", diam_formula(g)}}},
                    {"provenance", json::array({"2.1"})}};
        },
        [&](const json& r) { std::cout << "diameter = " << opt_to_text(r["diameter"]) << '\n'; },
        [&](const json& r) {
            std::cout << "group,set,diameter\n\"" << inputs["group"].get<std::string>() << "\",\""
                      << (set ? inputs["set"].get<std::string>() : std::string()) << "\","
                      << opt_to_text(r["diameter"]) << '\n';
        },
        zero_exit);
}

int cmd_length(const Options& opts, const std::string& group_lit, const std::string& set_lit,
               const std::string& elem_lit) {
    const GroupType g = parse_group(group_lit);
    const ElementSet a = parse_set(g, set_lit);
    const Element e = parse_element(g, elem_lit);
    const json inputs = {{"group", format_group(g)},
                         {"set", format_set(a)},
                         {"element", format_element(g, e)}};
    return emit(
        opts, "length", inputs,
        [&]() -> json {
            const int l = length_table(a).at(e);
            return {{"result",
                     {{"length", l == LengthTable::kInfinite ? json(nullptr) : json(l)}}},
                    {"provenance", json::array()}};
        },
        [&](const json& r) { std::cout << "length = " << opt_to_text(r["length"]) << '\n'; },
        [&](const json& r) {
            std::cout << "group,set,element,length\n\"" << inputs["group"].get<std::string>()
                      << "\",\"" << inputs["set"].get<std::string>() << "\",\""
                      << inputs["element"].get<std::string>() << "\","
                      << opt_to_text(r["length"]) << '\n';
        },
        zero_exit);
}

int cmd_extremal(const Options& opts, bool is_t, const std::string& group_lit, int rho,
                 const std::string& method) {
    const GroupType g = parse_group(group_lit);
    const json inputs = {{"group", format_group(g)},
                         {"rho", rho},
                         {"method", method},
                         {"max_order", opts.max_order},
                         {"allow_bnb", opts.allow_bnb}};
    const std::string name = is_t ? "tmax" : "smax";
    return emit(
        opts, name, inputs,
        [&]() -> json {
            json res;
            json provenance = json::array();
            std::optional<long long> fv;
            if (method == "formula" || method == "both") {
                const FormulaResult f = is_t ? t_formula(g, rho) : s_formula(g, rho);
                if (auto v = f.as_value()) {
                    fv = *v;
                    res["formula"] = *v;
                    if (!f.source.empty()) {
                        res["source"] = f.source;
                        provenance.push_back(f.source);
                    }
                } else {
                    res["formula"] = nullptr;
                    res["status"] = "unknown";
                }
            }
            std::optional<long long> ov;
            if (method == "oracle" || method == "both") {
                const SearchBudget b = make_budget(opts);
                ov = is_t ? t_oracle(g, rho, b) : s_oracle(g, rho, b);
                res["oracle"] = *ov;
            }
            if (method == "both")
                res["match"] = fv ? json(*fv == *ov) : json(nullptr);
            res["value"] = ov ? json(*ov) : (fv ? json(*fv) : json(nullptr));
            return {{"result", res}, {"provenance", provenance}};
        },
        [&](const json& r) {
            std::cout << (is_t ? "t" : "s") << "_" << rho << " = " << opt_to_text(r["value"]);
            if (r.contains("source")) std::cout << " [" << r["source"].get<std::string>() << "]";
            if (r.contains("match") && !r["match"].is_null())
                std::cout << (r["match"].get<bool>() ? " (match)" : " (MISMATCH)");
            if (r.contains("status")) std::cout << " (formula unknown)";
            std::cout << '\n';
        },
        [&](const json& r) {
            std::cout << "group,rho,kind,value,formula,oracle,source,match\n\""
                      << inputs["group"].get<std::string>() << "\"," << rho << ","
                      << (is_t ? "t" : "s") << "," << opt_to_text(r["value"]) << ","
                      << (r.contains("formula") ? opt_to_text(r["formula"]) : "") << ","
                      << (r.contains("oracle") ? opt_to_text(r["oracle"]) : "") << ","
                      << (r.contains("source") ? r["source"].get<std::string>() : "") << ","
                      << (r.contains("match") && !r["match"].is_null()
                              ? (r["match"].get<bool>() ? "yes" : "no")
                              : "")
                      << '\n';
        },
        [](const json& r) {
            if (r.contains("match") && r["match"].is_boolean() && !r["match"].get<bool>())
                return kExitVerification;
            return 0;
        });
}

int cmd_enumerate(const Options& opts, const std::string& group_lit, int rho, bool aperiodic) {
    const GroupType g = parse_group(group_lit);
    const json inputs = {{"group", format_group(g)},
                         {"rho", rho},
                         {"aperiodic", aperiodic},
                         {"max_order", opts.max_order}};
    return emit(
        opts, "enumerate", inputs,
        [&]() -> json {
            const auto records = enumerate_rho_maximal(g, rho, aperiodic, make_budget(opts));
            json lines = json::array();
            json sets = json::array();
            for (const auto& rec : records) {
                lines.push_back(rec.to_line());
                sets.push_back(format_set(rec.set));
            }
            return {{"result",
                     {{"count", records.size()}, {"records", lines}, {"sets", sets}}},
                    {"provenance", json::array()}};
        },
        [&](const json& r) {
            for (const auto& line : r["records"]) std::cout << line.get<std::string>() << '\n';
            std::cout << "count = " << r["count"] << '\n';
        },
        [&](const json& r) {
            std::cout << "group,rho,set\n";
            for (const auto& s : r["sets"])
                std::cout << "\"" << inputs["group"].get<std::string>() << "\"," << rho << ",\""
                          << s.get<std::string>() << "\"\n";
        },
        zero_exit);
}

std::map<int, int> parse_sigma(const std::string& text) {
    // "0:1,1:3" -> {0 -> 1, 1 -> 3}
    std::map<int, int> sigma;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad sigma entry: " + item);
        sigma[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    return sigma;
}

std::vector<Element> parse_basis(const GroupType& g, const std::string& text) {
    std::vector<Element> basis;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ';')) basis.push_back(parse_element(g, item));
    return basis;
}

struct ConstructArgs {
    std::string kind;
    std::string group_lit;
    std::string sigma;
    std::string basis;
    int m = 0;
    int rho = 0;
    std::string subgroup_lit;
    std::string rep_lit;
    std::string elem_lit;
    std::string group2_lit;
    std::string set2_lit;
    std::string quotient_set_lit;
};

int cmd_construct(const Options& opts, ConstructArgs a) {
    if (a.kind == "product4") a.kind = "product-4maximal";  // accepted alias
    json inputs = {{"kind", a.kind}};
    std::string provenance_tag;
    std::function<std::pair<GroupType, ElementSet>()> build;

    if (a.kind == "standard" || a.kind == "near-standard") {
        const GroupType g = parse_group(a.group_lit);
        inputs["group"] = format_group(g);
        if (!a.sigma.empty()) inputs["sigma"] = a.sigma;
        if (!a.basis.empty()) inputs["basis"] = a.basis;
        provenance_tag = "2.2";
        build = [=]() {
            NearStandardSpec spec;
            if (!a.sigma.empty()) spec.sigma = parse_sigma(a.sigma);
            if (!a.basis.empty()) spec.basis = parse_basis(g, a.basis);
            return std::make_pair(g, a.kind == "standard" ? standard_generating_set(g)
                                                          : near_standard(g, spec));
        };
    } else if (a.kind == "interval") {
        inputs["m"] = a.m;
        inputs["rho"] = a.rho;
        provenance_tag = "2.5";
        build = [=]() {
            ElementSet s = interval_set(a.m, a.rho);
            return std::make_pair(s.group(), s);
        };
    } else if (a.kind == "punctured-coset" || a.kind == "double-coset") {
        const GroupType g = parse_group(a.group_lit);
        inputs["group"] = format_group(g);
        inputs["subgroup"] = a.subgroup_lit;
        inputs["rep"] = a.rep_lit;
        provenance_tag = a.kind == "punctured-coset" ? "6.1" : "2.9";
        build = [=]() {
            const Subgroup h = Subgroup::closure(g, parse_set(g, a.subgroup_lit));
            const Element rep = parse_element(g, a.rep_lit);
            return std::make_pair(g, a.kind == "punctured-coset" ? punctured_coset(g, h, rep)
                                                                 : double_coset(g, h, rep));
        };
    } else if (a.kind == "odd-pairing") {
        const GroupType g = parse_group(a.group_lit);
        inputs["group"] = format_group(g);
        inputs["sum"] = a.elem_lit;
        provenance_tag = "2.7";
        build = [=]() { return std::make_pair(g, odd_pairing_set(g, parse_element(g, a.elem_lit))); };
    } else if (a.kind == "product-4maximal") {
        inputs["m"] = a.m;
        inputs["group2"] = a.group2_lit;
        inputs["set2"] = a.set2_lit;
        provenance_tag = "2.7";
        build = [=]() {
            const GroupType g1 = GroupType::of({a.m});
            const GroupType g2 = parse_group(a.group2_lit);
            return product_4maximal(g1, parse_set(g2, a.set2_lit));
        };
    } else if (a.kind == "lift") {
        const GroupType g = parse_group(a.group_lit);
        inputs["group"] = format_group(g);
        inputs["subgroup"] = a.subgroup_lit;
        inputs["quotient_set"] = a.quotient_set_lit;
        provenance_tag = "2.3";
        build = [=]() {
            const Subgroup h = Subgroup::closure(g, parse_set(g, a.subgroup_lit));
            const ElementSet abar = parse_set(h.quotient_type(), a.quotient_set_lit);
            return std::make_pair(g, lift(g, h, abar));
        };
    } else {
        throw std::invalid_argument("unknown construct kind: " + a.kind);
    }

    return emit(
        opts, "construct", inputs,
        [&]() -> json {
            auto [g, s] = build();
            return {{"result",
                     {{"group", format_group(g)}, {"set", format_set(s)}, {"size", s.size()}}},
                    {"provenance", json::array({provenance_tag})}};
        },
        [&](const json& r) {
            std::cout << "group = " << r["group"].get<std::string>() << '\n'
                      << "set = " << r["set"].get<std::string>() << '\n'
                      << "size = " << r["size"] << '\n';
        },
        [&](const json& r) {
            std::cout << "kind,group,set,size\n"
                      << a.kind << ",\"" << r["group"].get<std::string>() << "\",\""
                      << r["set"].get<std::string>() << "\"," << r["size"] << '\n';
        },
        zero_exit);
}

json report_to_json(const VerificationReport& r) {
    json w = json::array();
    for (const auto& s : r.witnesses) w.push_back(format_set(s));
    return {{"tag", r.theorem_id},
            {"group", format_group(r.group)},
            {"rho", r.rho ? json(*r.rho) : json(nullptr)},
            {"oracle", r.oracle_value ? json(*r.oracle_value) : json(nullptr)},
            {"formula", r.formula_value ? json(*r.formula_value) : json(nullptr)},
            {"bound", r.bound_value ? json(*r.bound_value) : json(nullptr)},
            {"witnesses", w},
            {"verdict", to_string(r.verdict)},
            {"notes", r.notes},
            {"line", r.to_line()}};
}

int verdict_exit(const std::string& verdict) {
    if (verdict == "fail") return kExitVerification;
    if (verdict == "skipped") return kExitBudget;
    return 0;
}

struct VerifyArgs {
    std::string theorem;
    std::string group_lit;
    int rho = -1;
    bool sweep = false;
    bool scan_t0 = false;
    std::string set_a;
    std::string set_b;
};

int cmd_verify(const Options& opts, const VerifyArgs& a) {
    const SearchBudget budget = make_budget(opts);

    auto emit_reports = [&](const std::string& mode, const json& inputs,
                            const std::function<std::vector<VerificationReport>()>& gen,
                            bool fail_on_fail) {
        // Sweeps are not cached: their cost is dominated by the oracle scans,
        // which are memoized in-process anyway.
        const auto reports = gen();
        json rj = json::array();
        int failures = 0;
        for (const auto& r : reports) {
            rj.push_back(report_to_json(r));
            if (r.verdict == Verdict::fail) ++failures;
        }
        if (opts.format == "json") {
            json out = {{"command", mode},
                        {"inputs", inputs},
                        {"result", {{"reports", rj}, {"failures", failures}}},
                        {"provenance", json::array()}};
            std::cout << out.dump(2) << '\n';
        } else if (opts.format == "csv") {
            std::cout << reports_to_csv(reports);
        } else {
            std::cout << serialize_reports(reports);
            std::cout << "reports = " << reports.size() << ", failures = " << failures << '\n';
        }
        return fail_on_fail && failures > 0 ? kExitVerification : 0;
    };

    if (a.sweep) {
        const json inputs = {{"max_order", opts.max_order}};
        return emit_reports("verify-sweep", inputs,
                            [&] { return verify_sweep(opts.max_order, budget); }, true);
    }
    if (a.scan_t0) {
        const json inputs = {{"max_order", opts.max_order}};
        return emit_reports("verify-scan-t0", inputs,
                            [&] { return scan_vanishing_t(opts.max_order, budget); }, false);
    }

    if (a.theorem.empty()) throw std::invalid_argument("verify requires --theorem or --sweep");

    VerificationReport report;
    json inputs = {{"theorem", a.theorem}};
    if (a.theorem == "kneser") {
        const GroupType g = parse_group(a.group_lit);
        const ElementSet sa = parse_set(g, a.set_a);
        const ElementSet sb = parse_set(g, a.set_b);
        inputs["group"] = format_group(g);
        inputs["set_a"] = format_set(sa);
        inputs["set_b"] = format_set(sb);
        report = verify_kneser(sa, sb);
    } else if (a.theorem == "appendix") {
        const GroupType g = parse_group(a.group_lit);
        const auto& f = g.invariant_factors();
        if (f.size() != 2 || f[0] != 2 || (f[1] & (f[1] - 1)) != 0 || f[1] < 8)
            throw std::invalid_argument("appendix expects a group of type 2,2^n with n >= 3");
        int n = 0;
        for (int v = f[1]; v > 1; v >>= 1) ++n;
        inputs["group"] = format_group(g);
        report = verify_appendix(n, budget);
    } else {
        const GroupType g = parse_group(a.group_lit);
        inputs["group"] = format_group(g);
        std::optional<int> rho;
        if (a.rho >= 0) {
            rho = a.rho;
            inputs["rho"] = a.rho;
        }
        report = verify_theorem(a.theorem, g, rho, budget);
    }

    if (opts.format == "json") {
        json out = {{"command", "verify"},
                    {"inputs", inputs},
                    {"result", report_to_json(report)},
                    {"provenance", json::array({report.theorem_id})}};
        std::cout << out.dump(2) << '\n';
    } else if (opts.format == "csv") {
        std::cout << VerificationReport::csv_header() << '\n' << report.to_csv_row() << '\n';
    } else {
        std::cout << report.to_line() << '\n';
    }
    return verdict_exit(to_string(report.verdict));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive lengths, diameters, and extremal invariants of finite abelian groups"};
    app.require_subcommand(1);
    // Global options (--format, --cache, ...) may follow the subcommand.
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", opts.cache_path, "line-delimited JSON result cache");
    app.add_option("--budget", opts.budget_seconds, "time budget in seconds (0 = unlimited)");
    app.add_option("--max-order", opts.max_order, "exhaustive search order bound")
        ->check(CLI::PositiveNumber);
    app.add_flag("--allow-bnb", opts.allow_bnb, "enable the branch-and-bound tier");

    std::string group_lit, set_lit, elem_lit, method = "both";
    int rho = 0;
    bool aperiodic = false;

    auto* diam = app.add_subcommand("diam", "absolute or per-set positive diameter");
    diam->add_option("--group", group_lit)->required();
    diam->add_option("--set", set_lit);

    auto* length = app.add_subcommand("length", "positive length of an element");
    length->add_option("--group", group_lit)->required();
    length->add_option("--set", set_lit)->required();
    length->add_option("--element", elem_lit)->required();

    auto* tmax = app.add_subcommand("tmax", "t_rho: largest aperiodic rho-maximal set");
    auto* smax = app.add_subcommand("smax", "s_rho: largest generating set with diam >= rho");
    for (auto* cmd : {tmax, smax}) {
        cmd->add_option("--group", group_lit)->required();
        cmd->add_option("--rho", rho)->required();
        cmd->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle", "both"}));
    }

    auto* enumerate = app.add_subcommand("enumerate", "all rho-maximal subsets");
    enumerate->add_option("--group", group_lit)->required();
    enumerate->add_option("--rho", rho)->required();
    enumerate->add_flag("--aperiodic", aperiodic, "aperiodic sets only");

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "witness constructions");
    construct->add_option("--kind", cargs.kind)
        ->required()
        ->check(CLI::IsMember({"standard", "near-standard", "interval", "punctured-coset",
                               "double-coset", "odd-pairing", "product4", "product-4maximal",
                               "lift"}));
    construct->add_option("--group", cargs.group_lit);
    construct->add_option("--sigma", cargs.sigma, "near-standard map, e.g. 0:1,1:2");
    construct->add_option("--basis", cargs.basis, "semicolon-separated element literals");
    construct->add_option("--m", cargs.m, "cyclic order");
    construct->add_option("--rho", cargs.rho);
    construct->add_option("--subgroup", cargs.subgroup_lit, "generators of H, set literal");
    construct->add_option("--rep", cargs.rep_lit, "coset representative element");
    construct->add_option("--sum", cargs.elem_lit, "pair sum element");
    construct->add_option("--group2", cargs.group2_lit);
    construct->add_option("--set2", cargs.set2_lit);
    construct->add_option("--quotient-set", cargs.quotient_set_lit);

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "theorem verification harness");
    verify->add_option("--theorem", vargs.theorem);
    verify->add_option("--group", vargs.group_lit);
    verify->add_option("--rho", vargs.rho);
    verify->add_flag("--sweep", vargs.sweep, "run every applicable check up to --max-order");
    verify->add_flag("--scan-t0", vargs.scan_t0, "probe for vanishing t_rho (reported only)");
    verify->add_option("--set-a", vargs.set_a);
    verify->add_option("--set-b", vargs.set_b);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (diam->parsed()) return cmd_diam(opts, group_lit, set_lit);
        if (length->parsed()) return cmd_length(opts, group_lit, set_lit, elem_lit);
        if (tmax->parsed()) return cmd_extremal(opts, true, group_lit, rho, method);
        if (smax->parsed()) return cmd_extremal(opts, false, group_lit, rho, method);
        if (enumerate->parsed()) return cmd_enumerate(opts, group_lit, rho, aperiodic);
        if (construct->parsed()) return cmd_construct(opts, cargs);
        if (verify->parsed()) return cmd_verify(opts, vargs);
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
