#include "cli/emit.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

namespace nuspec::cli {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string format_real(double value)
{
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), result.ptr);
}

void write_spectrum(std::ostream& out, const SpectrumTable& table, Format format)
{
    if (format == Format::json) {
        json rows = json::array();
        for (const SpectrumRow& row : table.rows) {
            rows.push_back({{"n", row.state.n},
                            {"l", row.state.l},
                            {"flux", row.state.flux.value()},
                            {"energy", optional_number(row.energy)},
                            {"source", std::string(source_name(row.source))},
                            {"status", row.status}});
        }
        out << json{{"rows", rows}}.dump(2) << '\n';
        return;
    }
    out << "n,l,flux,energy,source,status\n";
    for (const SpectrumRow& row : table.rows) {
        out << row.state.n << ',' << row.state.l << ',' << format_real(row.state.flux.value()) << ','
            << (row.energy ? format_real(*row.energy) : std::string()) << ',' << source_name(row.source) << ','
            << row.status << '\n';
    }
}

void write_samples(std::ostream& out, const std::vector<double>& r, const std::vector<double>& radial,
                   Format format)
{
    if (format == Format::json) {
        out << json{{"r", r}, {"R", radial}}.dump() << '\n';
        return;
    }
    out << "r,R\n";
    for (std::size_t i = 0; i < r.size(); ++i) {
        out << format_real(r[i]) << ',' << format_real(radial[i]) << '\n';
    }
}

void write_verification(std::ostream& out, const VerifyReport& report, Format format)
{
    if (format == Format::json) {
        json rows = json::array();
        for (const VerifyRow& row : report.rows) {
            rows.push_back({{"family", std::string(family_name(row.family))},
                            {"n", row.state.n},
                            {"l", row.state.l},
                            {"flux", row.state.flux.value()},
                            {"closed_form", optional_number(row.closed_form)},
                            {"oracle", optional_number(row.oracle)},
                            {"deviation", row.deviation},
                            {"status", row.status},
                            {"r_min", row.grid.r_min},
                            {"r_max", row.grid.r_max},
                            {"points", row.grid.points}});
        }
        out << json{{"rows", rows},
                    {"worst_deviation", report.worst_deviation},
                    {"pass", report.pass},
                    {"errors", report.errors}}
                   .dump(2)
            << '\n';
        return;
    }
    out << "family,n,l,flux,closed_form,oracle,deviation,status,r_min,r_max,points\n";
    for (const VerifyRow& row : report.rows) {
        const bool compared = row.oracle.has_value();
        out << family_name(row.family) << ',' << row.state.n << ',' << row.state.l << ','
            << format_real(row.state.flux.value()) << ','
            << (row.closed_form ? format_real(*row.closed_form) : std::string()) << ','
            << (compared ? format_real(*row.oracle) : std::string()) << ','
            << (compared ? format_real(row.deviation) : std::string()) << ',' << row.status << ','
            << (compared ? format_real(row.grid.r_min) : std::string()) << ','
            << (compared ? format_real(row.grid.r_max) : std::string()) << ','
            << (compared ? std::to_string(row.grid.points) : std::string()) << '\n';
    }
}

}  // namespace nuspec::cli
