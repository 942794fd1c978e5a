#include "centropy/dataset.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "centropy/errors.hpp"
#include "text_util.hpp"

namespace centropy {

using detail::iequals;
using detail::num_to_string;
using detail::parse_double;
using detail::trim;
using nlohmann::json;

std::optional<std::string_view> canonical_benchmark(std::string_view name) {
  for (const BenchmarkInfo& info : kBenchmarks) {
    if (iequals(trim(name), info.name)) return info.name;
  }
  return std::nullopt;
}

std::string_view benchmark_unit(std::string_view canonical_name) {
  for (const BenchmarkInfo& info : kBenchmarks) {
    if (info.name == canonical_name) return info.unit;
  }
  return "";
}

std::string canonical_manufacturer(std::string_view name) {
  const std::string_view trimmed = trim(name);
  if (iequals(trimmed, "HPE-Cray")) return "HPE/Cray";
  return std::string(trimmed);
}

CompatibilityMatrix bundled_compatibility_matrix() {
  return CompatibilityMatrix(
      {"AMD", "Intel", "NVIDIA", "IBM", "Fujitsu", "HPE/Cray"},
      {
          {0.95, 0.82, 0.81, 0.79, 0.75, 0.90},
          {0.82, 0.88, 0.82, 0.78, 0.74, 0.85},
          {0.81, 0.82, 0.92, 0.79, 0.73, 0.87},
          {0.79, 0.78, 0.79, 0.85, 0.72, 0.80},
          {0.75, 0.74, 0.73, 0.72, 0.98, 0.76},
          {0.90, 0.85, 0.87, 0.80, 0.76, 0.95},
      });
}

BenchmarkTable bundled_top10() {
  auto record = [](std::string name, double entropy, double linpack, double stream, double mlperf,
                   double hpcg, double hpcc, double graph500, double hpcai) {
    return SystemRecord{std::move(name),
                        entropy,
                        {{"LINPACK", linpack},
                         {"STREAM", stream},
                         {"MLPerf", mlperf},
                         {"HPCG", hpcg},
                         {"HPCC", hpcc},
                         {"Graph500", graph500},
                         {"HPCAI", hpcai}}};
  };
  BenchmarkTable table;
  table.source = "bundled:top10";
  table.records = {
      record("El Capitan", 4.2, 1.742, 45.2, 11.8, 2.79, 3.21, 8.9, 15.2),
      record("Frontier", 4.6, 1.206, 41.8, 9.95, 14.05, 3.86, 15.9, 12.8),
      record("Aurora", 5.1, 1.012, 38.5, 11.6, 5.60, 2.97, 12.1, 18.9),
      record("Jupiter", 4.8, 0.424, 28.3, 5.2, 3.2, 2.45, 6.8, 8.1),
      record("Eagle", 3.9, 0.561, 32.1, 7.8, 2.1, 2.89, 9.2, 11.7),
      record("HPC6", 4.7, 0.380, 26.8, 4.9, 2.8, 2.12, 5.9, 7.4),
      record("Fugaku", 8.9, 0.442, 44.2, 6.7, 16.0, 2.93, 4.8, 9.3),
      record("Alps", 5.2, 0.270, 22.4, 3.8, 2.4, 1.87, 4.2, 6.8),
      record("LUMI", 4.3, 0.380, 35.6, 5.1, 4.2, 2.56, 7.1, 8.9),
      record("Leonardo", 4.9, 0.304, 29.7, 4.3, 3.8, 2.31, 6.3, 7.6),
  };
  return table;
}

// -- strict JSON walking -----------------------------------------------------

namespace {

json parse_json_text(const std::string& text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("{}: {}", source, e.what()));
  }
}

void require_object(const json& node, const std::string& context) {
  if (!node.is_object()) throw SchemaError(fmt::format("{}: expected an object", context));
}

void reject_unknown_fields(const json& node, std::initializer_list<std::string_view> allowed,
                           const std::string& context) {
  for (const auto& item : node.items()) {
    bool known = false;
    for (std::string_view key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw SchemaError(fmt::format("{}: unknown field \"{}\"", context, item.key()));
  }
}

const json& require_field(const json& node, const char* key, const std::string& context) {
  const auto it = node.find(key);
  if (it == node.end())
    throw SchemaError(fmt::format("{}: missing required field \"{}\"", context, key));
  return *it;
}

std::string require_string(const json& node, const char* key, const std::string& context) {
  const json& field = require_field(node, key, context);
  if (!field.is_string())
    throw SchemaError(fmt::format("{}.{}: expected a string", context, key));
  return field.get<std::string>();
}

double require_number(const json& field, const std::string& context) {
  if (!field.is_number()) throw SchemaError(fmt::format("{}: expected a number", context));
  return field.get<double>();
}

const json& require_array(const json& node, const char* key, const std::string& context) {
  const json& field = require_field(node, key, context);
  if (!field.is_array())
    throw SchemaError(fmt::format("{}.{}: expected an array", context, key));
  return field;
}

ComponentSpec parse_component(const json& node, const std::string& context) {
  require_object(node, context);
  reject_unknown_fields(node, {"kind", "manufacturer", "base_value"}, context);
  ComponentSpec component;
  const std::string kind_text = require_string(node, "kind", context);
  const auto kind = parse_component_kind(kind_text);
  if (!kind)
    throw SchemaError(fmt::format("{}.kind: unknown component kind \"{}\"", context, kind_text));
  component.kind = *kind;
  component.manufacturer = canonical_manufacturer(require_string(node, "manufacturer", context));
  if (const auto it = node.find("base_value"); it != node.end()) {
    component.base_value = require_number(*it, context + ".base_value");
  }
  return component;
}

MachineSpec parse_machine_object(const json& node, const std::string& context) {
  require_object(node, context);
  reject_unknown_fields(node, {"name", "components"}, context);
  MachineSpec machine;
  machine.name = require_string(node, "name", context);
  const json& components = require_array(node, "components", context);
  for (std::size_t i = 0; i < components.size(); ++i) {
    machine.components.push_back(
        parse_component(components[i], fmt::format("{}.components[{}]", context, i)));
  }
  return machine;
}

}  // namespace

MachineSpec parse_machine_spec(const std::string& text, std::string_view source) {
  const json root = parse_json_text(text, source);
  MachineSpec machine = parse_machine_object(root, fmt::format("{}: machine spec", source));
  validate(machine);
  return machine;
}

ClusterSpec parse_cluster_spec(const std::string& text, std::string_view source) {
  const json root = parse_json_text(text, source);
  const std::string context = fmt::format("{}: cluster spec", source);
  require_object(root, context);
  reject_unknown_fields(root, {"name", "groups"}, context);

  ClusterSpec cluster;
  cluster.name = require_string(root, "name", context);
  const json& groups = require_array(root, "groups", context);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const std::string group_context = fmt::format("{}.groups[{}]", context, i);
    const json& group_node = groups[i];
    require_object(group_node, group_context);
    reject_unknown_fields(group_node, {"count", "machine"}, group_context);

    MachineGroup group;
    if (const auto it = group_node.find("count"); it != group_node.end()) {
      if (!it->is_number_integer())
        throw SchemaError(fmt::format("{}.count: expected an integer", group_context));
      group.count = it->get<std::int64_t>();
    }
    group.machine =
        parse_machine_object(require_field(group_node, "machine", group_context),
                             group_context + ".machine");
    cluster.groups.push_back(std::move(group));
  }
  validate(cluster);
  return cluster;
}

// -- CSV ----------------------------------------------------------------------

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> parse_csv_row(const std::string& line, std::string_view source,
                                       std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  if (quoted)
    throw ParseError(fmt::format("{}:{}: unterminated quoted field", source, line_no));
  fields.push_back(std::move(field));
  return fields;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string escaped = "\"";
  for (char c : field) {
    if (c == '"') escaped.push_back('"');
    escaped.push_back(c);
  }
  escaped.push_back('"');
  return escaped;
}

double parse_csv_number(const std::string& field, std::string_view source, std::size_t line_no) {
  const auto value = parse_double(field);
  if (!value)
    throw ParseError(fmt::format("{}:{}: invalid number \"{}\"", source, line_no, field));
  return *value;
}

}  // namespace

CompatibilityMatrix parse_matrix_csv(const std::string& text, std::string_view source) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError(fmt::format("{}: empty matrix file", source));

  const std::vector<std::string> header = parse_csv_row(lines[0], source, 1);
  if (header.size() < 2)
    throw SchemaError(fmt::format("{}:1: matrix header needs at least one manufacturer", source));
  std::vector<std::string> manufacturers;
  for (std::size_t i = 1; i < header.size(); ++i) {
    manufacturers.push_back(canonical_manufacturer(header[i]));
  }

  const std::size_t n = manufacturers.size();
  if (lines.size() != n + 1)
    throw SchemaError(
        fmt::format("{}: expected {} data rows for {} manufacturers, got {}", source, n, n,
                    lines.size() - 1));

  std::vector<std::vector<double>> scores(n);
  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t line_no = row + 2;
    const std::vector<std::string> fields = parse_csv_row(lines[row + 1], source, line_no);
    if (fields.size() != n + 1)
      throw ParseError(fmt::format("{}:{}: expected {} fields, got {}", source, line_no, n + 1,
                                   fields.size()));
    const std::string row_name = canonical_manufacturer(fields[0]);
    if (!iequals(row_name, manufacturers[row]))
      throw SchemaError(fmt::format("{}:{}: row label \"{}\" does not match column header \"{}\"",
                                    source, line_no, row_name, manufacturers[row]));
    for (std::size_t col = 0; col < n; ++col) {
      scores[row].push_back(parse_csv_number(fields[col + 1], source, line_no));
    }
  }
  return CompatibilityMatrix(std::move(manufacturers), std::move(scores));
}

CompatibilityMatrix parse_matrix_json(const std::string& text, std::string_view source) {
  const json root = parse_json_text(text, source);
  const std::string context = fmt::format("{}: matrix", source);
  require_object(root, context);
  reject_unknown_fields(root, {"manufacturers", "scores", "epsilon"}, context);

  std::vector<std::string> manufacturers;
  for (const json& name : require_array(root, "manufacturers", context)) {
    if (!name.is_string())
      throw SchemaError(context + ".manufacturers: expected an array of strings");
    manufacturers.push_back(canonical_manufacturer(name.get<std::string>()));
  }
  std::vector<std::vector<double>> scores;
  for (const json& row : require_array(root, "scores", context)) {
    if (!row.is_array()) throw SchemaError(context + ".scores: expected an array of arrays");
    std::vector<double> values;
    for (const json& cell : row) {
      values.push_back(require_number(cell, context + ".scores"));
    }
    scores.push_back(std::move(values));
  }
  double epsilon = kDefaultEpsilon;
  if (const auto it = root.find("epsilon"); it != root.end()) {
    epsilon = require_number(*it, context + ".epsilon");
  }
  return CompatibilityMatrix(std::move(manufacturers), std::move(scores), epsilon);
}

namespace {

void validate_table(const BenchmarkTable& table, std::string_view source) {
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    const SystemRecord& record = table.records[i];
    if (record.name.empty())
      throw ValidationError(fmt::format("{}: record {} has an empty system name", source, i));
    if (!(record.entropy >= 0.0))
      throw ValidationError(fmt::format("{}: system \"{}\" has negative entropy {}", source,
                                        record.name, record.entropy));
    for (const auto& [benchmark, value] : record.benchmarks) {
      if (!(value >= 0.0))
        throw ValidationError(fmt::format("{}: system \"{}\" has negative {} value {}", source,
                                          record.name, benchmark, value));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (table.records[j].name == record.name)
        throw ValidationError(
            fmt::format("{}: duplicate system name \"{}\"", source, record.name));
    }
  }
}

}  // namespace

BenchmarkTable parse_benchmarks_csv(const std::string& text, std::string_view source) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError(fmt::format("{}: empty benchmark file", source));

  const std::vector<std::string> header = parse_csv_row(lines[0], source, 1);
  // Column plan: index -> canonical benchmark name; "" marks System/Entropy.
  std::optional<std::size_t> system_col;
  std::optional<std::size_t> entropy_col;
  std::vector<std::pair<std::size_t, std::string>> benchmark_cols;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string_view name = trim(header[i]);
    if (iequals(name, "System")) {
      if (system_col) throw SchemaError(fmt::format("{}:1: duplicate System column", source));
      system_col = i;
    } else if (iequals(name, "Entropy")) {
      if (entropy_col) throw SchemaError(fmt::format("{}:1: duplicate Entropy column", source));
      entropy_col = i;
    } else if (const auto canonical = canonical_benchmark(name)) {
      for (const auto& [_, existing] : benchmark_cols) {
        if (existing == *canonical)
          throw SchemaError(fmt::format("{}:1: duplicate {} column", source, existing));
      }
      benchmark_cols.emplace_back(i, std::string(*canonical));
    } else {
      throw SchemaError(fmt::format("{}:1: unknown column \"{}\"", source, name));
    }
  }
  if (!system_col) throw SchemaError(fmt::format("{}:1: missing System column", source));
  if (!entropy_col) throw SchemaError(fmt::format("{}:1: missing Entropy column", source));

  BenchmarkTable table;
  table.source = std::string(source);
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const std::size_t line_no = row + 1;
    const std::vector<std::string> fields = parse_csv_row(lines[row], source, line_no);
    if (fields.size() != header.size())
      throw ParseError(fmt::format("{}:{}: expected {} fields, got {}", source, line_no,
                                   header.size(), fields.size()));
    SystemRecord record;
    record.name = std::string(trim(fields[*system_col]));
    if (record.name.empty())
      throw SchemaError(fmt::format("{}:{}: empty system name", source, line_no));
    if (trim(fields[*entropy_col]).empty())
      throw SchemaError(fmt::format("{}:{}: missing entropy value", source, line_no));
    record.entropy = parse_csv_number(fields[*entropy_col], source, line_no);
    for (const auto& [col, benchmark] : benchmark_cols) {
      if (trim(fields[col]).empty()) continue;  // blank cell = missing
      record.benchmarks[benchmark] = parse_csv_number(fields[col], source, line_no);
    }
    table.records.push_back(std::move(record));
  }
  validate_table(table, source);
  return table;
}

BenchmarkTable parse_benchmarks_json(const std::string& text, std::string_view source) {
  const json root = parse_json_text(text, source);
  const std::string context = fmt::format("{}: benchmark table", source);
  require_object(root, context);
  reject_unknown_fields(root, {"source", "records"}, context);

  BenchmarkTable table;
  table.source = std::string(source);
  const json& records = require_array(root, "records", context);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string record_context = fmt::format("{}.records[{}]", context, i);
    const json& node = records[i];
    require_object(node, record_context);
    reject_unknown_fields(node, {"name", "entropy", "benchmarks"}, record_context);
    SystemRecord record;
    record.name = require_string(node, "name", record_context);
    record.entropy = require_number(require_field(node, "entropy", record_context),
                                    record_context + ".entropy");
    if (const auto it = node.find("benchmarks"); it != node.end()) {
      require_object(*it, record_context + ".benchmarks");
      for (const auto& item : it->items()) {
        const auto canonical = canonical_benchmark(item.key());
        if (!canonical)
          throw SchemaError(fmt::format("{}.benchmarks: unknown benchmark \"{}\"", record_context,
                                        item.key()));
        record.benchmarks[std::string(*canonical)] =
            require_number(item.value(), fmt::format("{}.benchmarks.{}", record_context, item.key()));
      }
    }
    table.records.push_back(std::move(record));
  }
  validate_table(table, source);
  return table;
}

// -- serialization -------------------------------------------------------------

std::string cluster_spec_to_json(const ClusterSpec& cluster) {
  json groups = json::array();
  for (const MachineGroup& group : cluster.groups) {
    json components = json::array();
    for (const ComponentSpec& component : group.machine.components) {
      components.push_back({{"kind", to_string(component.kind)},
                            {"manufacturer", component.manufacturer},
                            {"base_value", component.base_value}});
    }
    groups.push_back({{"count", group.count},
                      {"machine", {{"name", group.machine.name}, {"components", components}}}});
  }
  return json{{"name", cluster.name}, {"groups", groups}}.dump(2) + "\n";
}

std::string matrix_to_csv(const CompatibilityMatrix& matrix) {
  std::string out = "Manufacturer";
  for (const std::string& name : matrix.manufacturers()) {
    out += "," + csv_escape(name);
  }
  out.push_back('\n');
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out += csv_escape(matrix.manufacturers()[i]);
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      out += "," + num_to_string(matrix.score_at(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

std::string matrix_to_json(const CompatibilityMatrix& matrix) {
  json scores = json::array();
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      row.push_back(matrix.score_at(i, j));
    }
    scores.push_back(std::move(row));
  }
  return json{{"manufacturers", matrix.manufacturers()},
              {"scores", scores},
              {"epsilon", matrix.epsilon()}}
             .dump(2) +
         "\n";
}

std::string benchmarks_to_csv(const BenchmarkTable& table) {
  std::string out = "System,Entropy";
  for (const BenchmarkInfo& info : kBenchmarks) {
    out += fmt::format(",{}", info.name);
  }
  out.push_back('\n');
  for (const SystemRecord& record : table.records) {
    out += csv_escape(record.name) + "," + num_to_string(record.entropy);
    for (const BenchmarkInfo& info : kBenchmarks) {
      const auto it = record.benchmarks.find(std::string(info.name));
      out.push_back(',');
      if (it != record.benchmarks.end()) out += num_to_string(it->second);
    }
    out.push_back('\n');
  }
  return out;
}

// -- files ----------------------------------------------------------------------

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open {}", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(fmt::format("failed reading {}", path.string()));
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write {}", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError(fmt::format("failed writing {}", path.string()));
}

bool looks_like_json(const std::filesystem::path& path, const std::string& text) {
  std::string extension = path.extension().string();
  for (char& c : extension) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (extension == ".json") return true;
  if (extension == ".csv") return false;
  const std::string_view body = trim(text);
  return !body.empty() && (body.front() == '{' || body.front() == '[');
}

}  // namespace

MachineSpec load_machine_spec(const std::filesystem::path& path) {
  return parse_machine_spec(read_file(path), path.string());
}

ClusterSpec load_cluster_spec(const std::filesystem::path& path) {
  return parse_cluster_spec(read_file(path), path.string());
}

CompatibilityMatrix load_matrix(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return looks_like_json(path, text) ? parse_matrix_json(text, path.string())
                                     : parse_matrix_csv(text, path.string());
}

BenchmarkTable load_benchmarks(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return looks_like_json(path, text) ? parse_benchmarks_json(text, path.string())
                                     : parse_benchmarks_csv(text, path.string());
}

void save_cluster_spec(const ClusterSpec& cluster, const std::filesystem::path& path) {
  write_file(path, cluster_spec_to_json(cluster));
}

void save_matrix_csv(const CompatibilityMatrix& matrix, const std::filesystem::path& path) {
  write_file(path, matrix_to_csv(matrix));
}

void save_matrix_json(const CompatibilityMatrix& matrix, const std::filesystem::path& path) {
  write_file(path, matrix_to_json(matrix));
}

void save_benchmarks_csv(const BenchmarkTable& table, const std::filesystem::path& path) {
  write_file(path, benchmarks_to_csv(table));
}

}  // namespace centropy
