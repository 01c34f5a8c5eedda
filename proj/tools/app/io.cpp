#include "io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "ramsey/units.hpp"

namespace ramsey::app {

std::string format_number(double value) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.9g", value);
    return std::string(buf, static_cast<std::size_t>(n));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
    std::string out = "omega_ghz,p_e\n";
    out.reserve(out.size() + spectrum.points.size() * 28);
    for (const auto& p : spectrum.points) {
        out += format_number(units::angular_to_ghz(p.omega));
        out += ',';
        out += format_number(p.p_e);
        out += '\n';
    }
    return out;
}

namespace {

double parse_field(std::string_view field, int line) {
    double v = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" +
                                 std::string(field) + "'");
    return v;
}

}  // namespace

Spectrum spectrum_from_csv(std::string_view text) {
    Spectrum spectrum;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line_no == 1) {
            if (line != "omega_ghz,p_e") throw std::runtime_error("csv: unexpected header");
            continue;
        }
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string_view::npos)
            throw std::runtime_error("csv line " + std::to_string(line_no) + ": missing column");
        spectrum.points.push_back({units::ghz_to_angular(parse_field(line.substr(0, comma), line_no)),
                                   parse_field(line.substr(comma + 1), line_no)});
    }
    return spectrum;
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return spectrum_from_csv(buf.str());
}

Spectrum quantize_to_csv_precision(const Spectrum& spectrum) {
    Spectrum out = spectrum;
    for (auto& p : out.points) {
        p.omega = units::ghz_to_angular(
            parse_field(format_number(units::angular_to_ghz(p.omega)), 0));
        p.p_e = parse_field(format_number(p.p_e), 0);
    }
    return out;
}

}  // namespace ramsey::app
