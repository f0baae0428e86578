#include "bellsim/report_io.hpp"

#include <array>
#include <charconv>
#include <fstream>

namespace bellsim {

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace {

std::string format_u64(std::uint64_t v)
{
    std::array<char, 24> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string to_csv(const ExperimentReport& report)
{
    static constexpr std::array<std::string_view, 4> pair_names = {"a1b1", "a1b2", "a2b1", "a2b2"};
    std::string out = "pair,a_rad,b_rad,n,n_pp,n_pm,n_mp,n_mm,e_hat,stderr\n";
    for (int i = 0; i < 4; ++i) {
        const JointCounts& c = report.counts[i];
        const CorrelationEstimate& e = report.correlations[i];
        out += pair_names[i];
        out += ',';
        out += format_double(c.a.angle());
        out += ',';
        out += format_double(c.b.angle());
        out += ',';
        out += format_u64(c.total());
        out += ',';
        out += format_u64(c.n_pp);
        out += ',';
        out += format_u64(c.n_pm);
        out += ',';
        out += format_u64(c.n_mp);
        out += ',';
        out += format_u64(c.n_mm);
        out += ',';
        out += format_double(e.e_hat);
        out += ',';
        out += format_double(e.std_error);
        out += '\n';
    }
    out += "S," + format_double(report.chsh.s) + "," + format_double(report.chsh.std_error) + "\n";
    out += "timing,";
    out += to_string(report.timing);
    out += '\n';
    return out;
}

std::string to_csv(const SuiteReport& suite)
{
    std::string out = "model,fig1_S,fig1_verdict,fig2_S,fig2_verdict\n";
    for (const SuiteRow& row : suite.rows) {
        out += row.model_id;
        out += ',';
        out += format_double(row.standard.chsh.s);
        out += ',';
        out += to_string(row.standard_verdict);
        out += ',';
        out += format_double(row.before_before.chsh.s);
        out += ',';
        out += to_string(row.before_before_verdict);
        out += '\n';
    }
    out += "experiment,violation,violation\n";
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open output file " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out)
        throw IoError("failed writing output file " + path.string());
}

}  // namespace bellsim
