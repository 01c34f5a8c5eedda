#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "ramsey/units.hpp"

namespace ramsey::app {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    int line = 0;
};

using Table = std::map<std::string, Entry>;  // "section.key"

class Reader {
public:
    explicit Reader(Table table) : table_(std::move(table)) {}

    bool has(const std::string& key) const { return table_.count(key) != 0; }

    const Entry* find(const std::string& key) const {
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : &it->second;
    }

    double number(const std::string& key, double fallback) const {
        const Entry* e = find(key);
        if (e == nullptr) return fallback;
        return to_double(e->value, e->line, key);
    }

    std::int64_t integer(const std::string& key, std::int64_t fallback) const {
        const Entry* e = find(key);
        if (e == nullptr) return fallback;
        std::int64_t v = 0;
        const auto* end = e->value.data() + e->value.size();
        const auto [ptr, ec] = std::from_chars(e->value.data(), end, v);
        if (ec != std::errc{} || ptr != end) fail(e->line, key, "expected an integer");
        return v;
    }

    bool boolean(const std::string& key, bool fallback) const {
        const Entry* e = find(key);
        if (e == nullptr) return fallback;
        if (e->value == "true" || e->value == "yes" || e->value == "1") return true;
        if (e->value == "false" || e->value == "no" || e->value == "0") return false;
        fail(e->line, key, "expected true or false");
    }

    std::string text(const std::string& key, const std::string& fallback) const {
        const Entry* e = find(key);
        return e == nullptr ? fallback : e->value;
    }

    std::vector<double> list(const std::string& key) const {
        const Entry* e = find(key);
        std::vector<double> out;
        if (e == nullptr) return out;
        std::string_view rest = e->value;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = trim(rest.substr(0, comma));
            if (item.empty()) fail(e->line, key, "empty list element");
            out.push_back(to_double(item, e->line, key));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (out.empty()) fail(e->line, key, "empty list");
        return out;
    }

    [[noreturn]] static void fail(int line, const std::string& key, const std::string& what) {
        std::ostringstream os;
        os << "config line " << line << ", field " << key << ": " << what;
        throw ConfigError(os.str(), line, key);
    }

    static double to_double(std::string_view text, int line, const std::string& key) {
        double v = 0.0;
        const auto* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, v);
        if (ec != std::errc{} || ptr != end || !std::isfinite(v))
            fail(line, key, "expected a number, got '" + std::string(text) + "'");
        return v;
    }

private:
    Table table_;
};

const std::map<std::string, std::vector<std::string>>& known_keys() {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"transmon", {"ec_ghz", "ej_ratio", "phi_res", "phi_disp"}},
        {"drive", {"eta_ghz"}},
        {"sweep", {"min_ghz", "max_ghz", "step_ghz", "refine", "fine_step_ghz"}},
        {"scheme", {"kind", "method", "cw_amplitude"}},
        {"averaging", {"s", "ratio_r"}},
        {"report", {"shift_vs_cw"}},
        {"optimizer",
         {"k_values", "s_ns", "r_values", "r_log", "p_min", "step_ghz", "refine", "fine_step_ghz"}},
        {"mc", {"n_samples", "seed", "partitions"}},
        {"validate", {"composition_draws", "mc_draws"}},
        {"output",
         {"spectrum_csv", "baseline_csv", "report", "baseline_report", "trace_csv", "summary", "validation_report"}},
    };
    return keys;
}

Table tokenize(std::string_view text) {
    Table table;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') Reader::fail(line_no, "-", "unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (known_keys().count(section) == 0)
                Reader::fail(line_no, section, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) Reader::fail(line_no, "-", "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (section.empty()) Reader::fail(line_no, key, "key outside of any [section]");
        const auto& allowed = known_keys().at(section);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            Reader::fail(line_no, section + "." + key, "unknown key");
        if (value.empty()) Reader::fail(line_no, section + "." + key, "missing value");
        const std::string full = section + "." + key;
        if (table.count(full) != 0) Reader::fail(line_no, full, "duplicate key");
        table[full] = Entry{value, line_no};
    }
    return table;
}

void require(bool ok, const Reader& r, const std::string& key, const std::string& what) {
    if (ok) return;
    const Entry* e = r.find(key);
    std::ostringstream os;
    os << "config";
    if (e != nullptr) os << " line " << e->line;
    os << ", field " << key << ": " << what;
    throw ConfigError(os.str(), e != nullptr ? e->line : 0, key);
}

}  // namespace

RunConfig default_config() {
    RunConfig cfg;
    cfg.scheme.kind = SchemeKind::double_resonance;
    cfg.scheme.method = AverageMethod::closed_form;
    cfg.scheme.s = parse_time_constant(cfg.s_spec, cfg.system.eta);
    cfg.scheme.ratio_r = 0.001;
    cfg.optimizer.s_grid = seed_points(cfg.system.eta, {2.5, 3.0, 3.5});
    cfg.optimizer.r_grid = {0.0005, 0.001, 0.002};
    return cfg;
}

double parse_time_constant(std::string_view spec, double eta) {
    static const std::regex k_rule(R"(^\s*([0-9]*\.?[0-9]+)\s*pi\s*/\s*([0-9]*\.?[0-9]+)\s*eta\s*$)");
    const std::string s(spec);
    std::smatch m;
    if (std::regex_match(s, m, k_rule)) {
        const double c = std::stod(m[1].str());
        const double k = std::stod(m[2].str());
        if (!(k > 0.0)) throw std::invalid_argument("time constant: k must be > 0");
        return c * units::pi / (k * eta);
    }
    double ns = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, ns);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("time constant: expected '<c>pi/<k>eta' or a value in ns");
    return units::ns_to_s(ns);
}

RunConfig parse_config(std::string_view text) {
    const Reader r(tokenize(text));
    RunConfig cfg = default_config();

    auto& tr = cfg.system.transmon;
    tr.e_c = units::ghz_to_angular(r.number("transmon.ec_ghz", units::angular_to_ghz(tr.e_c)));
    tr.ej_ratio = r.number("transmon.ej_ratio", tr.ej_ratio);
    tr.phi_res = r.number("transmon.phi_res", tr.phi_res);
    tr.phi_disp = r.number("transmon.phi_disp", tr.phi_disp);
    require(tr.e_c > 0.0, r, "transmon.ec_ghz", "must be > 0");
    require(tr.ej_ratio > 0.0, r, "transmon.ej_ratio", "must be > 0");
    require(tr.phi_res >= 0.0 && tr.phi_res < 1.0, r, "transmon.phi_res", "must lie in [0, 1)");
    require(tr.phi_disp >= 0.0 && tr.phi_disp < 1.0, r, "transmon.phi_disp", "must lie in [0, 1)");

    const double eta_ghz = r.number("drive.eta_ghz", 0.1);
    require(eta_ghz > 0.0, r, "drive.eta_ghz", "must be > 0");
    cfg.system.eta = units::ghz_to_angular(eta_ghz);

    auto& sw = cfg.sweep;
    sw.min_ghz = r.number("sweep.min_ghz", sw.min_ghz);
    sw.max_ghz = r.number("sweep.max_ghz", sw.max_ghz);
    sw.coarse_step_ghz = r.number("sweep.step_ghz", sw.coarse_step_ghz);
    sw.refine = r.boolean("sweep.refine", sw.refine);
    sw.fine_step_ghz = r.number("sweep.fine_step_ghz", sw.fine_step_ghz);
    require(sw.min_ghz > 0.0, r, "sweep.min_ghz", "must be > 0");
    require(sw.max_ghz > sw.min_ghz, r, "sweep.max_ghz", "empty grid: max_ghz must exceed min_ghz");
    require(sw.coarse_step_ghz > 0.0, r, "sweep.step_ghz", "must be > 0");
    require(sw.fine_step_ghz > 0.0, r, "sweep.fine_step_ghz", "must be > 0");

    const std::string kind = r.text("scheme.kind", "double");
    static const std::regex general(R"(^general:([0-9]+)$)");
    std::smatch gm;
    if (kind == "cw") {
        cfg.scheme.kind = SchemeKind::cw;
    } else if (kind == "double") {
        cfg.scheme.kind = SchemeKind::double_resonance;
    } else if (kind == "triple") {
        cfg.scheme.kind = SchemeKind::triple_resonance;
        cfg.scheme.method = AverageMethod::numeric;
    } else if (std::regex_match(kind, gm, general)) {
        cfg.scheme.kind = SchemeKind::general;
        cfg.scheme.method = AverageMethod::numeric;
        cfg.scheme.n_res = std::stoi(gm[1].str());
        require(cfg.scheme.n_res >= 1, r, "scheme.kind", "general:n needs n >= 1");
    } else {
        require(false, r, "scheme.kind", "expected cw, double, triple or general:<n>");
    }
    if (r.has("scheme.method")) {
        const std::string method = r.text("scheme.method", "");
        require(method == "closed" || method == "numeric", r, "scheme.method",
                "expected closed or numeric");
        cfg.scheme.method = method == "closed" ? AverageMethod::closed_form : AverageMethod::numeric;
        require(!(cfg.scheme.kind == SchemeKind::general &&
                  cfg.scheme.method == AverageMethod::closed_form),
                r, "scheme.method", "general:n schemes have no closed form");
    }
    cfg.scheme.cw_amplitude = r.number("scheme.cw_amplitude", cfg.scheme.cw_amplitude);
    require(cfg.scheme.cw_amplitude > 0.0, r, "scheme.cw_amplitude", "must be > 0");

    cfg.s_spec = r.text("averaging.s", cfg.s_spec);
    try {
        cfg.scheme.s = parse_time_constant(cfg.s_spec, cfg.system.eta);
    } catch (const std::invalid_argument& e) {
        require(false, r, "averaging.s", e.what());
    }
    require(cfg.scheme.s > 0.0, r, "averaging.s", "must be > 0");
    cfg.scheme.ratio_r = r.number("averaging.ratio_r", cfg.scheme.ratio_r);
    require(cfg.scheme.ratio_r >= 0.0, r, "averaging.ratio_r", "must be >= 0");

    cfg.shift_vs_cw = r.boolean("report.shift_vs_cw", cfg.shift_vs_cw);

    auto& opt = cfg.optimizer;
    require(!(r.has("optimizer.k_values") && r.has("optimizer.s_ns")), r, "optimizer.s_ns",
            "give either k_values or s_ns, not both");
    if (r.has("optimizer.k_values")) {
        const auto ks = r.list("optimizer.k_values");
        for (double k : ks) require(k > 0.0, r, "optimizer.k_values", "k must be > 0");
        opt.s_grid = seed_points(cfg.system.eta, ks);
    } else if (r.has("optimizer.s_ns")) {
        opt.s_grid.clear();
        for (double s : r.list("optimizer.s_ns")) {
            require(s > 0.0, r, "optimizer.s_ns", "s must be > 0");
            opt.s_grid.push_back(units::ns_to_s(s));
        }
    } else {
        opt.s_grid = seed_points(cfg.system.eta, {2.5, 3.0, 3.5});
    }
    require(!(r.has("optimizer.r_values") && r.has("optimizer.r_log")), r, "optimizer.r_log",
            "give either r_values or r_log, not both");
    if (r.has("optimizer.r_values")) {
        opt.r_grid = r.list("optimizer.r_values");
        for (double v : opt.r_grid) require(v >= 0.0, r, "optimizer.r_values", "R must be >= 0");
    } else if (r.has("optimizer.r_log")) {
        // lo:hi:count
        const Entry* e = r.find("optimizer.r_log");
        static const std::regex log_spec(R"(^([^:]+):([^:]+):([0-9]+)$)");
        std::smatch lm;
        if (!std::regex_match(e->value, lm, log_spec))
            Reader::fail(e->line, "optimizer.r_log", "expected lo:hi:count");
        const double lo = Reader::to_double(trim(lm[1].str()), e->line, "optimizer.r_log");
        const double hi = Reader::to_double(trim(lm[2].str()), e->line, "optimizer.r_log");
        const int count = std::stoi(lm[3].str());
        require(lo > 0.0 && hi >= lo && count >= 1, r, "optimizer.r_log",
                "need 0 < lo <= hi and count >= 1");
        opt.r_grid = log_grid(lo, hi, count);
    }
    opt.objective.p_min = r.number("optimizer.p_min", opt.objective.p_min);
    require(opt.objective.p_min >= 0.0 && opt.objective.p_min <= 1.0, r, "optimizer.p_min",
            "must lie in [0, 1]");
    opt.plan.min_ghz = sw.min_ghz;
    opt.plan.max_ghz = sw.max_ghz;
    opt.plan.coarse_step_ghz = r.number("optimizer.step_ghz", opt.plan.coarse_step_ghz);
    opt.plan.refine = r.boolean("optimizer.refine", opt.plan.refine);
    opt.plan.fine_step_ghz = r.number("optimizer.fine_step_ghz", opt.plan.fine_step_ghz);
    require(opt.plan.coarse_step_ghz > 0.0, r, "optimizer.step_ghz", "must be > 0");
    require(opt.plan.fine_step_ghz > 0.0, r, "optimizer.fine_step_ghz", "must be > 0");

    const auto n_samples = r.integer("mc.n_samples", cfg.mc.n_samples);
    require(n_samples >= 1, r, "mc.n_samples", "must be >= 1");
    cfg.mc.n_samples = n_samples;
    const auto seed = r.integer("mc.seed", static_cast<std::int64_t>(cfg.mc.rng_seed));
    require(seed >= 0, r, "mc.seed", "must be >= 0");
    cfg.mc.rng_seed = static_cast<std::uint64_t>(seed);
    const auto parts = r.integer("mc.partitions", cfg.mc.partitions);
    require(parts >= 1 && parts <= 4096, r, "mc.partitions", "must lie in [1, 4096]");
    cfg.mc.partitions = static_cast<int>(parts);

    const auto comp = r.integer("validate.composition_draws", cfg.validation.composition_draws);
    require(comp >= 1, r, "validate.composition_draws", "must be >= 1");
    cfg.validation.composition_draws = static_cast<int>(comp);
    const auto mcd = r.integer("validate.mc_draws", cfg.validation.mc_draws);
    require(mcd >= 1, r, "validate.mc_draws", "must be >= 1");
    cfg.validation.mc_draws = static_cast<int>(mcd);

    auto& out = cfg.output;
    out.spectrum_csv = r.text("output.spectrum_csv", out.spectrum_csv);
    out.baseline_csv = r.text("output.baseline_csv", out.baseline_csv);
    out.report = r.text("output.report", out.report);
    out.baseline_report = r.text("output.baseline_report", out.baseline_report);
    out.trace_csv = r.text("output.trace_csv", out.trace_csv);
    out.summary = r.text("output.summary", out.summary);
    out.validation_report = r.text("output.validation_report", out.validation_report);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_template() {
    return R"(# ramsey run configuration
# Frequencies are cyclic, in GHz; times in ns.

[transmon]
ec_ghz = 0.5        # charging energy E_C/2pi (calibrated to the 4.505 GHz peak)
ej_ratio = 100      # E_J / E_C
phi_res = 0.46      # reduced flux, resonant bias point
phi_disp = 0.49     # reduced flux, dispersive bias point

[drive]
eta_ghz = 0.1       # coupling eta/2pi

[sweep]
min_ghz = 3.5
max_ghz = 5.5
step_ghz = 0.001    # coarse grid
refine = true       # second pass over peak +- 2 FWHM
fine_step_ghz = 0.0001

[scheme]
kind = double       # cw | double | triple | general:<n>
# method = closed   # closed | numeric (triple and general default to numeric)
cw_amplitude = 0.5  # amplitude A of the CW line A*eta^2/(Delta^2 + eta^2)

[averaging]
s = 0.68pi/3eta     # Maxwell time constant: '<c>pi/<k>eta' or a value in ns
ratio_r = 0.001     # dispersive / resonant duration ratio R

[report]
shift_vs_cw = true  # report the peak shift against the CW line

[optimizer]
k_values = 2.5, 3, 3.5         # s = 0.68pi/(k eta); or s_ns = ...
r_values = 0.0005, 0.001, 0.002  # or r_log = lo:hi:count
p_min = 0.3                    # minimum accepted peak value
step_ghz = 0.002
refine = false
fine_step_ghz = 0.0001

[mc]
n_samples = 100000
seed = 42
partitions = 8

[validate]
composition_draws = 1000
mc_draws = 10

[output]
spectrum_csv = spectrum.csv
baseline_csv = baseline.csv
report = report.txt
baseline_report = baseline_report.txt
trace_csv = trace.csv
summary = optimize_summary.txt
validation_report = validation.txt
)";
}

}  // namespace ramsey::app
