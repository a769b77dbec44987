#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace oldqm {

using Json = nlohmann::ordered_json;

// Column-ordered table plus a metadata block; the one shape every subcommand
// reports, so the three serializations live in one place.
struct TableDocument {
    Json meta;                         // object; always emitted
    std::vector<std::string> columns;  // column order for csv/text
    std::vector<Json> rows;            // objects keyed by column name
};

enum class OutputFormat { text, csv, json };

OutputFormat parse_format(const std::string& name);  // throws std::invalid_argument

// JSON writer with fixed formatting: insertion key order, doubles as %.16e
// (17 significant digits). parse + re-serialize is byte-identical.
std::string serialize_json(const Json& j);

void emit(const TableDocument& doc, OutputFormat f, std::ostream& os);

}  // namespace oldqm
