#include "oldqm/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace oldqm {

namespace {

// Fixed 17-significant-digit form: every double round-trips exactly and
// re-serializing a parsed document reproduces it byte for byte.
std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string format_plot_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_text_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string escape_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
    return out;
}

std::string scalar_to_json(const Json& j) {
    switch (j.type()) {
        case Json::value_t::string: return escape_string(j.get<std::string>());
        case Json::value_t::boolean: return j.get<bool>() ? "true" : "false";
        case Json::value_t::number_integer: return std::to_string(j.get<long long>());
        case Json::value_t::number_unsigned: return std::to_string(j.get<unsigned long long>());
        case Json::value_t::number_float: return format_double(j.get<double>());
        case Json::value_t::null: return "null";
        default: throw std::invalid_argument("serialize_json: not a scalar");
    }
}

void write_json(const Json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in + escape_string(it.key()) + ": ";
            write_json(it.value(), out, depth + 1);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& item : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            write_json(item, out, depth + 1);
        }
        out += "\n" + pad + "]";
    } else {
        out += scalar_to_json(j);
    }
}

std::string csv_cell(const Json& v) {
    if (v.is_number_float()) return format_plot_double(v.get<double>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_null()) return "";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        return quoted;
    }
    return s;
}

std::string text_cell(const Json& v) {
    if (v.is_number_float()) return format_text_double(v.get<double>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string meta_scalar(const Json& v) {
    if (v.is_number_float()) return format_plot_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("parse_format: unknown format '" + name + "'");
}

std::string serialize_json(const Json& j) {
    std::string out;
    write_json(j, out, 0);
    out += '\n';
    return out;
}

void emit(const TableDocument& doc, OutputFormat f, std::ostream& os) {
    switch (f) {
        case OutputFormat::json: {
            Json root = Json::object();
            root["meta"] = doc.meta;
            root["columns"] = doc.columns;
            root["rows"] = doc.rows;
            os << serialize_json(root);
            return;
        }
        case OutputFormat::csv: {
            for (auto it = doc.meta.begin(); it != doc.meta.end(); ++it)
                os << "# " << it.key() << " = " << meta_scalar(it.value()) << "\n";
            for (std::size_t i = 0; i < doc.columns.size(); ++i)
                os << (i ? "," : "") << doc.columns[i];
            os << "\n";
            for (const auto& row : doc.rows) {
                for (std::size_t i = 0; i < doc.columns.size(); ++i)
                    os << (i ? "," : "") << csv_cell(row.at(doc.columns[i]));
                os << "\n";
            }
            return;
        }
        case OutputFormat::text: {
            for (auto it = doc.meta.begin(); it != doc.meta.end(); ++it)
                os << "# " << it.key() << " = " << meta_scalar(it.value()) << "\n";
            std::vector<std::size_t> width(doc.columns.size());
            std::vector<std::vector<std::string>> cells;
            for (std::size_t i = 0; i < doc.columns.size(); ++i)
                width[i] = doc.columns[i].size();
            for (const auto& row : doc.rows) {
                std::vector<std::string> line;
                for (std::size_t i = 0; i < doc.columns.size(); ++i) {
                    line.push_back(text_cell(row.at(doc.columns[i])));
                    width[i] = std::max(width[i], line.back().size());
                }
                cells.push_back(std::move(line));
            }
            for (std::size_t i = 0; i < doc.columns.size(); ++i) {
                os << (i ? "  " : "") << doc.columns[i]
                   << std::string(width[i] - doc.columns[i].size(), ' ');
            }
            os << "\n";
            for (const auto& line : cells) {
                for (std::size_t i = 0; i < line.size(); ++i)
                    os << (i ? "  " : "") << line[i]
                       << std::string(width[i] - line[i].size(), ' ');
                os << "\n";
            }
            return;
        }
    }
}

}  // namespace oldqm
