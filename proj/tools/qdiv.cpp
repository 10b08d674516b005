// Command-line driver: list the catalog, verify instances and sweeps, query
// coefficients and partition statistics.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qdiv/errors.hpp>
#include <qdiv/identities.hpp>
#include <qdiv/numbers.hpp>
#include <qdiv/qtools.hpp>
#include <qdiv/series.hpp>

namespace
{

using json = nlohmann::ordered_json;
using namespace qdiv;

constexpr const char *tool_version = "1.0.0";

enum Exit { ok = 0, failed = 1, config_error = 2 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "a..b" or a single integer.
ParamRange parse_range(const std::string &text)
{
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const long v = std::stol(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return {v, v};
        }
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        ParamRange r{std::stol(lo, &used), 0};
        if (used != lo.size()) {
            throw std::invalid_argument(text);
        }
        r.hi = std::stol(hi, &used);
        if (used != hi.size()) {
            throw std::invalid_argument(text);
        }
        return r;
    } catch (const std::logic_error &) {
        throw ConfigError("bad range '" + text + "', expected N or A..B");
    }
}

// "q=40" style cap overrides.
std::vector<std::pair<Var, std::uint32_t>> parse_caps(const std::vector<std::string> &specs)
{
    std::vector<std::pair<Var, std::uint32_t>> out;
    for (const auto &s : specs) {
        const auto eq = s.find('=');
        if (eq != 1) {
            throw ConfigError("bad cap '" + s + "', expected var=N");
        }
        Var v;
        try {
            v = parse_var(s[0]);
        } catch (const std::invalid_argument &) {
            throw ConfigError("unknown variable in cap '" + s + "'");
        }
        long cap = 0;
        try {
            std::size_t used = 0;
            cap = std::stol(s.substr(2), &used);
            if (used != s.size() - 2) {
                throw std::invalid_argument(s);
            }
        } catch (const std::logic_error &) {
            throw ConfigError("bad cap value in '" + s + "'");
        }
        if (cap < 1 || cap > static_cast<long>(Truncation::max_cap)) {
            throw ConfigError("cap in '" + s + "' must lie in 1.." + std::to_string(Truncation::max_cap));
        }
        out.emplace_back(v, static_cast<std::uint32_t>(cap));
    }
    return out;
}

Truncation apply_caps(Truncation tr, const std::vector<std::pair<Var, std::uint32_t>> &caps)
{
    for (const auto &[v, c] : caps) {
        tr = tr.with(v, c);
    }
    return tr;
}

json caps_json(const Truncation &tr)
{
    json j = json::object();
    for (auto v : all_vars) {
        if (tr.cap(v) > 0) {
            j[std::string(1, var_name(v))] = tr.cap(v);
        }
    }
    return j;
}

json params_json(const Params &ps)
{
    json j = json::object();
    for (const auto &[k, v] : ps) {
        j[k] = v;
    }
    return j;
}

// ---- list ----

int cmd_list(const std::string &filter)
{
    std::size_t shown = 0;
    for (const auto &e : catalog()) {
        if (!filter.empty() && std::string(e.name).find(filter) == std::string::npos) {
            continue;
        }
        std::string params;
        for (const auto &p : e.params) {
            params += (params.empty() ? "" : ",") + p;
        }
        std::cout << e.name << "\t" << e.label << "\t(" << params << ")\t"
                  << (e.constraints.empty() ? "-" : std::string(e.constraints)) << "\t" << e.anchor << "\n";
        ++shown;
    }
    std::cout << shown << " entries\n";
    return ok;
}

// ---- verify ----

struct VerifyConfig {
    std::vector<std::string> ids;
    bool all = false;
    std::map<std::string, std::string> ranges;
    std::vector<std::string> caps;
    std::string out;
    std::string format = "text";
    int jobs = 0;
    bool admissible = false;
};

json result_json(const VerificationResult &r)
{
    json j;
    j["id"] = std::string(name_of(r.instance.id));
    j["params"] = params_json(r.instance.params);
    j["caps"] = caps_json(r.instance.trunc);
    j["status"] = r.passed() ? "pass" : (r.error ? "error" : "fail");
    j["residual_zero"] = r.residual_zero;
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    j["stop_index"] = r.stop_index;
    if (r.error) {
        j["error_kind"] = *r.error_kind;
        j["error"] = *r.error;
    }
    return j;
}

std::string text_line(const VerificationResult &r)
{
    std::ostringstream s;
    s << (r.passed() ? "PASS" : (r.error ? "ERROR" : "FAIL")) << "  " << name_of(r.instance.id) << " "
      << to_string(r.instance.params) << " [" << to_string(r.instance.trunc) << "]";
    if (r.error) {
        s << "  " << *r.error_kind << ": " << *r.error;
    } else {
        s << "  lhs=" << r.lhs_terms << " rhs=" << r.rhs_terms;
        if (r.stop_index >= 0) {
            s << " stop=" << r.stop_index;
        }
        s << "  " << r.elapsed.count() << "s";
    }
    return s.str();
}

json config_json(const VerifyConfig &c)
{
    json j;
    j["ids"] = c.all ? json("all") : json(c.ids);
    json ranges = json::object();
    for (const auto &[k, v] : c.ranges) {
        ranges[k] = v;
    }
    j["ranges"] = ranges;
    j["caps"] = c.caps;
    j["format"] = c.format;
    j["admissible"] = c.admissible;
    return j;
}

void emit(const std::string &path, const std::string &body)
{
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw ConfigError("cannot write report to '" + path + "'");
    }
    f << body;
}

int cmd_verify(const VerifyConfig &c)
{
    const auto start = std::chrono::steady_clock::now();
    json report;
    report["tool"] = "qdiv";
    report["version"] = tool_version;
    report["config"] = config_json(c);

    std::vector<IdentityInstance> instances;
    try {
        if (c.format != "text" && c.format != "structured") {
            throw ConfigError("unknown format '" + c.format + "'");
        }
        if (c.all == !c.ids.empty()) {
            throw ConfigError("give exactly one of --id or --all");
        }
        if (c.jobs < 0) {
            throw ConfigError("--jobs must be non-negative");
        }
        std::vector<IdentityId> ids;
        if (c.all) {
            for (const auto &e : catalog()) {
                ids.push_back(e.id);
            }
        }
        for (const auto &name : c.ids) {
            auto id = parse_identity(name);
            if (!id) {
                throw ConfigError("unknown identity '" + name + "'");
            }
            ids.push_back(*id);
        }
        const auto caps = parse_caps(c.caps);
        for (auto id : ids) {
            const auto &entry = info(id);
            ParamRanges ranges;
            for (const auto &[name, text] : c.ranges) {
                if (std::find(entry.params.begin(), entry.params.end(), name) != entry.params.end()) {
                    ranges[name] = parse_range(text);
                } else if (!c.all && ids.size() == 1) {
                    throw ConfigError(std::string(entry.name) + " has no parameter '" + name + "'");
                }
            }
            // Catalog grids contain inadmissible corners; explicit grids are
            // checked unless --admissible is given.
            const bool skip_invalid = c.admissible || ranges.empty();
            auto batch = expand(id, ranges, apply_caps(entry.default_trunc, caps), skip_invalid);
            if (!skip_invalid) {
                for (const auto &inst : batch) {
                    validate(inst);
                }
            }
            instances.insert(instances.end(), batch.begin(), batch.end());
        }
    } catch (const std::exception &e) {
        std::cerr << "config error: " << e.what() << "\n";
        if (c.format == "structured") {
            report["config_error"] = e.what();
            try {
                emit(c.out, report.dump(2) + "\n");
            } catch (const std::exception &) {
            }
        }
        return config_error;
    }

    const auto results = verify_all(instances, c.jobs);
    std::size_t pass = 0, fail = 0, error = 0;
    json list = json::array();
    json timing = json::array();
    std::ostringstream text;
    for (const auto &r : results) {
        if (r.passed()) {
            ++pass;
        } else if (r.error) {
            ++error;
        } else {
            ++fail;
        }
        list.push_back(result_json(r));
        timing.push_back(r.elapsed.count());
        text << text_line(r) << "\n";
    }
    const std::chrono::duration<double> total = std::chrono::steady_clock::now() - start;
    report["results"] = list;
    report["summary"] = {{"total", results.size()}, {"pass", pass}, {"fail", fail}, {"error", error}};
    report["timing"] = {{"total_seconds", total.count()}, {"instance_seconds", timing}};

    text << pass << " passed, " << fail << " failed, " << error << " errors (" << total.count() << "s)\n";
    try {
        emit(c.out, c.format == "structured" ? report.dump(2) + "\n" : text.str());
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return config_error;
    }
    if (!c.out.empty() && c.format == "structured") {
        std::cout << text.str();
    }
    return fail + error == 0 ? ok : failed;
}

// ---- coeff ----

struct CoeffConfig {
    std::optional<unsigned> lambert_m;
    bool odd_divisor = false;
    std::optional<unsigned> eulerian_n;
    std::optional<unsigned> carlitz_n;
    unsigned q_exp = 0;
    unsigned t_exp = 0;
    std::vector<std::string> caps;
};

int cmd_coeff(const CoeffConfig &c)
{
    const int selected = (c.lambert_m ? 1 : 0) + (c.odd_divisor ? 1 : 0) + (c.eulerian_n ? 1 : 0)
                         + (c.carlitz_n ? 1 : 0);
    try {
        if (selected != 1) {
            throw ConfigError("choose exactly one of --lambert-m, --odd-divisor, --eulerian, --carlitz");
        }
        const Truncation defaults{{Var::q, 40}, {Var::t, 8}};
        const Truncation tr = apply_caps(defaults, parse_caps(c.caps));
        MultiSeries s(tr);
        Exponents e = exps({{Var::q, c.q_exp}});
        if (c.lambert_m) {
            s = lambert_series(*c.lambert_m, tr);
        } else if (c.odd_divisor) {
            s = odd_divisor_series(tr);
        } else if (c.eulerian_n) {
            s = eulerian(*c.eulerian_n, Var::t, tr);
            e = exps({{Var::t, c.t_exp}});
        } else {
            s = carlitz_eulerian(*c.carlitz_n, Var::t, Var::q, tr);
            e = exps({{Var::t, c.t_exp}, {Var::q, c.q_exp}});
        }
        std::cout << s.coefficient(e).get_str() << "\n";
        return ok;
    } catch (const OutOfTruncation &e) {
        std::cerr << "out of truncation: " << e.what() << "\n";
        return config_error;
    } catch (const std::exception &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return config_error;
    }
}

// ---- partitions ----

std::string show(const Partition &p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p.parts[i]);
    }
    return s + ")";
}

int cmd_partitions(long n, std::optional<long> big_n)
{
    if (n < 1 || (big_n && *big_n < 1)) {
        std::cerr << "config error: need n >= 1 and N >= 1\n";
        return config_error;
    }
    const GapBound bound = big_n ? GapBound(static_cast<unsigned>(*big_n)) : std::nullopt;
    const std::string tag = big_n ? std::to_string(n) + "," + std::to_string(*big_n) : std::to_string(n);
    std::cout << "P(" << tag << ") =";
    for (const auto &p : partitions_distinct(static_cast<unsigned>(n), bound)) {
        std::cout << " " << show(p);
    }
    std::cout << "\n";
    const long t = t_stat(n, bound);
    std::cout << "t(" << tag << ") = " << t << "\n";
    if (!big_n) {
        const auto d = sigma(0, static_cast<std::uint64_t>(n));
        std::cout << "d(" << n << ") = " << d.get_str() << "\n";
        const bool pass = d == t;
        std::cout << "check d(n) = t(n): " << (pass ? "pass" : "FAIL") << "\n";
        return pass ? ok : failed;
    }
    const long shifted = t_stat(n - *big_n, bound);
    const auto d = divisor_count_bounded(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(*big_n));
    std::cout << "t(" << n - *big_n << "," << *big_n << ") = " << shifted << "\n";
    std::cout << "d(" << tag << ") = " << d << "\n";
    const bool pass = static_cast<long>(d) == t - shifted;
    std::cout << "check d(n,N) = t(n,N) - t(n-N,N): " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? ok : failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact verification of (p,q)-identities around divisor functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    std::string filter;
    auto *list = app.add_subcommand("list", "List catalog entries");
    list->add_option("filter", filter, "Substring filter on identity ids");

    VerifyConfig vc;
    auto *verify = app.add_subcommand("verify", "Verify identity instances");
    verify->add_option("--id", vc.ids, "Identity id (repeatable)");
    verify->add_flag("--all", vc.all, "Every catalog entry at its default grid");
    for (const char *p : {"m", "n", "r", "i", "N", "sign", "seed"}) {
        verify->add_option_function<std::string>(
            std::string("--") + p, [&vc, p](const std::string &v) { vc.ranges[p] = v; },
            std::string("Range for ") + p + " (N or A..B)");
    }
    verify->add_option("--cap", vc.caps, "Cap override var=N (repeatable)");
    verify->add_option("--out", vc.out, "Report path (default stdout)");
    verify->add_option("--format", vc.format, "text or structured");
    verify->add_option("--jobs", vc.jobs, "Worker count (0 = all available)");
    verify->add_flag("--admissible", vc.admissible, "Skip grid points outside the constraints");

    CoeffConfig cc;
    auto *coeff = app.add_subcommand("coeff", "Print one coefficient of a named series");
    coeff->add_option("--lambert-m", cc.lambert_m, "sum sigma_m(n) q^n");
    coeff->add_flag("--odd-divisor", cc.odd_divisor, "sum q^k/(1-q^{2k})");
    coeff->add_option("--eulerian", cc.eulerian_n, "Eulerian polynomial A_n(t)");
    coeff->add_option("--carlitz", cc.carlitz_n, "Carlitz polynomial A_n(t;q)");
    coeff->add_option("--q", cc.q_exp, "Exponent of q");
    coeff->add_option("--t", cc.t_exp, "Exponent of t");
    coeff->add_option("--cap", cc.caps, "Cap override var=N (repeatable)");

    long pn = 0;
    std::optional<long> pbig;
    auto *parts = app.add_subcommand("partitions", "Distinct-part partitions and smallest-part statistics");
    parts->add_option("n", pn, "Integer to partition")->required();
    parts->add_option("N", pbig, "Bound on largest minus smallest part plus one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    if (*list) {
        return cmd_list(filter);
    }
    if (*verify) {
        return cmd_verify(vc);
    }
    if (*coeff) {
        return cmd_coeff(cc);
    }
    return cmd_partitions(pn, pbig);
}
