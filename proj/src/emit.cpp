#include "catjc/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace catjc {

namespace {

// 17 significant digits round-trips a double exactly and keeps the output
// byte-stable for identical input.
std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// JSON has no NaN/Inf literals; those become null.
std::string json_num(double v) {
    if (!std::isfinite(v)) return "null";
    return num17(v);
}

std::string json_str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    const std::filesystem::path parent = path.parent_path();
    if (!parent.empty()) {
        std::filesystem::create_directories(parent, ec);
        if (ec) throw IoError("cannot create directory " + parent.string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

constexpr const char* kCsvHeader =
    "tau,E_x,E_y,H_x,H_y,H_z,V_x,V_y,exp_x,exp_y,exp_z,rho_ee,re_rho_eg,im_rho_eg,"
    "entropy_sum_slack\n";

void append_csv_row(std::string& out, const SqueezingSample& s) {
    out += num17(s.tau);
    for (double v : {s.e_x, s.e_y, s.h_x, s.h_y, s.h_z, s.v_x, s.v_y, s.exp_x, s.exp_y,
                     s.exp_z, s.rho_ee, s.rho_eg.real(), s.rho_eg.imag(),
                     s.entropy_sum_slack}) {
        out += ',';
        out += num17(v);
    }
    out += '\n';
}

void append_json_sample(std::string& out, const SqueezingSample& s, const char* indent) {
    out += indent;
    out += "{\"tau\": " + json_num(s.tau);
    const std::pair<const char*, double> fields[] = {
        {"E_x", s.e_x}, {"E_y", s.e_y}, {"H_x", s.h_x}, {"H_y", s.h_y}, {"H_z", s.h_z},
        {"V_x", s.v_x}, {"V_y", s.v_y}, {"exp_x", s.exp_x}, {"exp_y", s.exp_y},
        {"exp_z", s.exp_z}, {"rho_ee", s.rho_ee}, {"re_rho_eg", s.rho_eg.real()},
        {"im_rho_eg", s.rho_eg.imag()}, {"entropy_sum_slack", s.entropy_sum_slack}};
    for (const auto& [name, v] : fields) {
        out += ", \"";
        out += name;
        out += "\": " + json_num(v);
    }
    out += '}';
}

std::string config_json(const ScenarioConfig& c, const std::filesystem::path& path) {
    std::string out = "{";
    out += "\"theta\": " + json_num(c.qubit.theta);
    out += ", \"phi\": " + json_num(c.qubit.phi);
    out += ", \"nbar\": " + json_num(c.field.n_bar);
    out += ", \"beta\": " + json_num(c.field.beta);
    out += ", \"rhoc\": " + json_num(c.field.rho_c);
    out += ", \"tau_start\": " + json_num(c.tau_start);
    out += ", \"tau_end\": " + json_num(c.tau_end);
    out += ", \"points\": " + std::to_string(c.resolved_points());
    out += ", \"engine\": " + json_str(to_string(c.engine));
    out += ", \"tail_eps\": " + json_num(c.tail_eps);
    out += ", \"threshold\": " + json_num(c.threshold);
    out += ", \"format\": " + json_str(to_string(c.output_format));
    out += ", \"out\": " + json_str(path.string());
    out += "}";
    return out;
}

std::string validation_json(const ValidationReport& r) {
    std::string out = "{";
    out += std::string("\"status\": ") + (r.consistent ? "\"consistent\"" : "\"discrepant\"");
    out += ", \"tolerance\": " + json_num(r.tolerance);
    out += ", \"max_delta_rho_ee\": " + json_num(r.max_delta_rho_ee);
    out += ", \"argmax_tau_rho_ee\": " + json_num(r.argmax_tau_ee);
    out += ", \"max_delta_rho_eg\": " + json_num(r.max_delta_rho_eg);
    out += ", \"argmax_tau_rho_eg\": " + json_num(r.argmax_tau_eg);
    if (!r.consistent) {
        out += ", \"minus_pairing_max_delta_rho_ee\": " + json_num(r.minus_pairing_max_delta_rho_ee);
        out += ", \"minus_pairing_max_delta_rho_eg\": " + json_num(r.minus_pairing_max_delta_rho_eg);
        out += ", \"offending_term\": " + json_str(r.offending_term);
    }
    out += "}";
    return out;
}

} // namespace

void emit(const TimeSeries& series, const std::filesystem::path& path, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::csv) {
        out = kCsvHeader;
        out.reserve(out.size() + series.samples.size() * 280);
        for (const SqueezingSample& s : series.samples) append_csv_row(out, s);
    } else {
        out = "{\n  \"config\": " + config_json(series.config, path) + ",\n";
        if (series.validation)
            out += "  \"validation\": " + validation_json(*series.validation) + ",\n";
        out += "  \"samples\": [\n";
        for (size_t i = 0; i < series.samples.size(); ++i) {
            append_json_sample(out, series.samples[i], "    ");
            if (i + 1 < series.samples.size()) out += ',';
            out += '\n';
        }
        out += "  ]\n}\n";
    }
    write_file(path, out);
}

void emit_rho_c_table(std::span<const RhoCDeviationRow> rows,
                      const std::filesystem::path& path, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::csv) {
        out = "rho_c,max_abs_dE_x,max_abs_dE_y\n";
        for (const RhoCDeviationRow& r : rows) {
            out += num17(r.rho_c);
            out += ',';
            out += num17(r.max_dev_e_x);
            out += ',';
            out += num17(r.max_dev_e_y);
            out += '\n';
        }
    } else {
        out = "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            out += "  {\"rho_c\": " + json_num(rows[i].rho_c) +
                   ", \"max_abs_dE_x\": " + json_num(rows[i].max_dev_e_x) +
                   ", \"max_abs_dE_y\": " + json_num(rows[i].max_dev_e_y) + "}";
            if (i + 1 < rows.size()) out += ',';
            out += '\n';
        }
        out += "]\n";
    }
    write_file(path, out);
}

} // namespace catjc
