#include "qcc/output_record.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace qcc {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string Cell::text() const {
    if (const auto* s = std::get_if<std::string>(&value)) return *s;
    if (const auto* i = std::get_if<int64_t>(&value)) return std::to_string(*i);
    return format_double(std::get<double>(value));
}

namespace {

// quote a CSV field when it contains a separator, quote, or newline
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::string kv_join(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string out;
    for (size_t i = 0; i < kv.size(); ++i) {
        if (i) out += ' ';
        out += kv[i].first + "=" + kv[i].second;
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> kv_split(const std::string& s) {
    std::vector<std::pair<std::string, std::string>> out;
    size_t pos = 0;
    while (pos < s.size()) {
        const size_t sp = s.find(' ', pos);
        const std::string tok = s.substr(pos, sp == std::string::npos ? sp : sp - pos);
        const size_t eq = tok.find('=');
        if (eq != std::string::npos)
            out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
        if (sp == std::string::npos) break;
        pos = sp + 1;
    }
    return out;
}

} // namespace

std::string to_csv(const OutputRecord& rec) {
    std::string out;
    out += "# schema_version=" + rec.schema_version + "\n";
    out += "# command=" + rec.command + "\n";
    if (!rec.parameters.empty()) out += "# parameters " + kv_join(rec.parameters) + "\n";
    if (!rec.provenance.empty()) out += "# provenance " + kv_join(rec.provenance) + "\n";
    for (size_t i = 0; i < rec.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_field(rec.columns[i]);
    }
    out += '\n';
    for (const auto& row : rec.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(row[i].text());
        }
        out += '\n';
    }
    return out;
}

OutputRecord parse_csv(const std::string& text) {
    OutputRecord rec;
    rec.schema_version.clear();
    bool have_header = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        const std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = line.substr(line.find_first_not_of("# "));
            if (body.rfind("schema_version=", 0) == 0)
                rec.schema_version = body.substr(15);
            else if (body.rfind("command=", 0) == 0)
                rec.command = body.substr(8);
            else if (body.rfind("parameters ", 0) == 0)
                rec.parameters = kv_split(body.substr(11));
            else if (body.rfind("provenance ", 0) == 0)
                rec.provenance = kv_split(body.substr(11));
            continue;
        }
        if (!have_header) {
            rec.columns = split_csv_line(line);
            have_header = true;
        } else {
            std::vector<Cell> row;
            for (std::string& f : split_csv_line(line)) row.emplace_back(std::move(f));
            rec.rows.push_back(std::move(row));
        }
    }
    if (rec.schema_version.empty())
        throw std::runtime_error("parse_csv: missing schema_version");
    return rec;
}

namespace {

void json_string(std::string& out, const std::string& s) {
    out += '"';
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
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void json_kv_block(std::string& out,
                   const std::vector<std::pair<std::string, std::string>>& kv) {
    out += "{";
    for (size_t i = 0; i < kv.size(); ++i) {
        out += (i ? ",\n    " : "\n    ");
        json_string(out, kv[i].first);
        out += ": ";
        json_string(out, kv[i].second);
    }
    if (!kv.empty()) out += "\n  ";
    out += "}";
}

} // namespace

// hand-written so that doubles are emitted with 17 significant digits;
// parsing goes through nlohmann::ordered_json, which preserves key order,
// so emissions round-trip byte for byte
std::string to_json(const OutputRecord& rec) {
    std::string out = "{\n  \"schema_version\": ";
    json_string(out, rec.schema_version);
    out += ",\n  \"command\": ";
    json_string(out, rec.command);
    out += ",\n  \"parameters\": ";
    json_kv_block(out, rec.parameters);
    out += ",\n  \"columns\": [";
    for (size_t i = 0; i < rec.columns.size(); ++i) {
        if (i) out += ", ";
        json_string(out, rec.columns[i]);
    }
    out += "],\n  \"rows\": [";
    for (size_t r = 0; r < rec.rows.size(); ++r) {
        out += (r ? ",\n" : "\n");
        out += "    {";
        const auto& row = rec.rows[r];
        for (size_t i = 0; i < row.size() && i < rec.columns.size(); ++i) {
            if (i) out += ", ";
            json_string(out, rec.columns[i]);
            out += ": ";
            const Cell& c = row[i];
            if (const auto* s = std::get_if<std::string>(&c.value))
                json_string(out, *s);
            else if (const auto* v = std::get_if<int64_t>(&c.value))
                out += std::to_string(*v);
            else
                out += format_double(std::get<double>(c.value));
        }
        out += "}";
    }
    if (!rec.rows.empty()) out += "\n  ";
    out += "],\n  \"provenance\": ";
    json_kv_block(out, rec.provenance);
    out += "\n}\n";
    return out;
}

OutputRecord parse_json(const std::string& text) {
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    OutputRecord rec;
    rec.schema_version = j.at("schema_version").get<std::string>();
    rec.command = j.value("command", "");
    if (j.contains("parameters"))
        for (const auto& [k, v] : j.at("parameters").items())
            rec.parameters.emplace_back(k, v.get<std::string>());
    rec.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& obj : j.at("rows")) {
        std::vector<Cell> row;
        for (const std::string& col : rec.columns) {
            const auto& v = obj.at(col);
            if (v.is_string()) row.emplace_back(v.get<std::string>());
            else if (v.is_number_integer()) row.emplace_back(v.get<int64_t>());
            else row.emplace_back(v.get<double>());
        }
        rec.rows.push_back(std::move(row));
    }
    if (j.contains("provenance"))
        for (const auto& [k, v] : j.at("provenance").items())
            rec.provenance.emplace_back(k, v.get<std::string>());
    return rec;
}

} // namespace qcc
