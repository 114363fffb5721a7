#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>

#include "tropdesc/errors.hpp"
#include "tropdesc/provider.hpp"
#include "tropdesc/validate.hpp"

namespace tropdesc::cli {

namespace {

struct Record {
    std::optional<int> d;
    std::string key;
    std::string value;
    std::string provenance;
    double elapsed_ms = 0;
};

struct Options {
    std::string format = "text";
    std::string cache_file;
    bool no_cache = false;
    bool no_oracle = false;
    bool timing = false;
    std::string seed_psi_line;
    std::string seed_psi_line_line;
};

Context make_context(const Options& o) {
    ContextOptions opts;
    if (o.no_oracle) opts.use_oracle = false;
    if (!o.seed_psi_line.empty()) opts.seeds.psi_line_degree1 = Rational::parse(o.seed_psi_line);
    if (!o.seed_psi_line_line.empty()) opts.seeds.psi_line_line_degree1 = Rational::parse(o.seed_psi_line_line);
    return Context(opts);
}

bool uses_cache_file(const Options& o) { return !o.no_cache && !o.cache_file.empty(); }

Record evaluate(Context& ctx, const InvariantKey& key, const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    const Sourced s = compute(ctx, key);
    const auto stop = std::chrono::steady_clock::now();
    Record r{std::nullopt, key.str(), s.value.to_string(), std::string(to_string(s.provenance)), 0};
    if (o.timing) r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

nlohmann::ordered_json to_json(const Record& r, const Options& o) {
    nlohmann::ordered_json j;
    if (r.d) j["d"] = *r.d;
    j["key"] = r.key;
    j["value"] = r.value;
    j["provenance"] = r.provenance;
    if (o.timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

void print_single(const Record& r, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        out << to_json(r, o).dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "key,value,provenance" << (o.timing ? ",elapsed_ms" : "") << "\n";
        out << csv_field(r.key) << "," << r.value << "," << r.provenance;
        if (o.timing) out << "," << r.elapsed_ms;
        out << "\n";
    } else {
        out << r.key << " = " << r.value << "  [" << r.provenance << "]";
        if (o.timing) out << "  (" << std::fixed << std::setprecision(3) << r.elapsed_ms << " ms)";
        out << "\n";
    }
}

void print_table(const std::vector<Record>& rows, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(to_json(r, o));
        out << arr.dump(2) << "\n";
        return;
    }
    if (o.format == "csv") {
        out << "d,value\n";
        for (const auto& r : rows) out << *r.d << "," << r.value << "\n";
        return;
    }
    std::size_t key_width = 3, value_width = 5;
    for (const auto& r : rows) {
        key_width = std::max(key_width, r.key.size());
        value_width = std::max(value_width, r.value.size());
    }
    out << std::left << std::setw(4) << "d" << std::setw(static_cast<int>(key_width) + 2) << "key"
        << std::setw(static_cast<int>(value_width) + 2) << "value" << "source\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(4) << *r.d << std::setw(static_cast<int>(key_width) + 2) << r.key
            << std::setw(static_cast<int>(value_width) + 2) << r.value << r.provenance << "\n";
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        std::size_t used = 0;
        const int lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument("range");
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw ParseError("empty range '" + text + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("malformed range '" + text + "' (expected A..B)");
    }
}

InvariantKey table_key(const std::string& kind, int d, int k) {
    if (kind == "N") return InvariantKey::n(d);
    if (kind == "psiP") return InvariantKey::psi_p(d, k);
    if (kind == "psiL") return InvariantKey::psi_l(d, k);
    if (kind == "psiLL") return InvariantKey::psi_ll(d);
    if (kind == "Nw") {
        std::vector<int> beta{k};
        beta.insert(beta.end(), std::max(0, d - k), 1);
        return InvariantKey::rel(d, TangencyProfile::free_ends(beta));
    }
    if (kind == "Ntilde") {
        return InvariantKey::rel(d, TangencyProfile{{k}, std::vector<int>(std::max(0, d - k), 1)}.canonical());
    }
    if (kind == "Box") return InvariantKey::special(SpecialDegree::box(d));
    if (kind == "L-kE") return InvariantKey::special(SpecialDegree::minus_ke(d, k));
    throw ParseError("unknown kind '" + kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact descendant and relative invariants of the projective plane", "tropdesc"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--cache", o.cache_file, "Cache file: loaded before and saved after the command");
    app.add_flag("--no-cache", o.no_cache, "Ignore --cache");
    app.add_flag("--no-oracle", o.no_oracle, "Do not consult the polygon oracle");
    app.add_flag("--timing", o.timing, "Report elapsed time per record");
    app.add_option("--seed-psiL1", o.seed_psi_line, "Override <psi L>_1 (diagnostics only)");
    app.add_option("--seed-psiLL1", o.seed_psi_line_line, "Override <psi L, psi L>_1 (diagnostics only)");

    auto* compute_cmd = app.add_subcommand("compute", "Evaluate one invariant key, e.g. psiL(d=3,k=1)");
    std::string key_text;
    compute_cmd->add_option("key", key_text, "Invariant key")->required();

    auto* table_cmd = app.add_subcommand("table", "Evaluate one kind over a range of degrees");
    std::string kind = "psiL", range = "1..3";
    int k = 1;
    table_cmd->add_option("--kind", kind, "N, psiP, psiL, psiLL, Nw, Ntilde, Box or L-kE")
        ->check(CLI::IsMember({"N", "psiP", "psiL", "psiLL", "Nw", "Ntilde", "Box", "L-kE"}))
        ->capture_default_str();
    table_cmd->add_option("--k", k, "Psi power, end weight or blow-up multiplicity")->capture_default_str();
    table_cmd->add_option("--range", range, "Degrees A..B")->capture_default_str();

    auto* validate_cmd = app.add_subcommand("validate", "Run the self-checks");
    std::string suite = "all";
    validate_cmd->add_option("--suite", suite, "paper, cross or all")
        ->check(CLI::IsMember({"paper", "cross", "all"}))
        ->capture_default_str();

    auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the cache file");
    std::string action;
    cache_cmd->add_option("action", action, "stats or clear")->required()->check(CLI::IsMember({"stats", "clear"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        Context ctx = make_context(o);
        if (uses_cache_file(o) && !cache_cmd->parsed()) ctx.cache().load(o.cache_file);

        int code = 0;
        if (compute_cmd->parsed()) {
            print_single(evaluate(ctx, InvariantKey::parse(key_text), o), o, out);
        } else if (table_cmd->parsed()) {
            const auto [lo, hi] = parse_range(range);
            std::vector<Record> rows;
            for (int d = lo; d <= hi; ++d) {
                Record r = evaluate(ctx, table_key(kind, d, k), o);
                r.d = d;
                rows.push_back(std::move(r));
            }
            print_table(rows, o, out);
        } else if (validate_cmd->parsed()) {
            const auto report = validate::run(ctx, validate::parse_suite(suite));
            for (const auto& c : report.checks) out << validate::format(c) << "\n";
            out << "summary: " << report.count(validate::Status::Pass) << " passed, "
                << report.count(validate::Status::Fail) << " failed, " << report.count(validate::Status::Skip)
                << " skipped, " << report.count(validate::Status::Note) << " notes\n";
            code = report.ok() ? 0 : 2;
        } else if (cache_cmd->parsed()) {
            if (o.cache_file.empty()) throw ParseError("cache needs --cache FILE");
            if (action == "clear") {
                ctx.cache().save(o.cache_file);
                out << "cleared " << o.cache_file << "\n";
            } else {
                ctx.cache().load(o.cache_file);
                std::map<std::string, std::size_t> kinds;
                for (const auto& [key, value] : ctx.cache().entries()) ++kinds[key.substr(0, key.find('('))];
                out << "entries: " << ctx.cache().size() << "\n";
                for (const auto& [name, n] : kinds) out << "  " << name << ": " << n << "\n";
            }
            return 0;
        }

        if (uses_cache_file(o)) ctx.cache().save(o.cache_file);
        return code;
    } catch (const InsufficientDataError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tropdesc::cli
