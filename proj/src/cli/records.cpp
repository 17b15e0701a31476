#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "surfsym/cli.hpp"
#include "surfsym/errors.hpp"

namespace surfsym::cli {

using nlohmann::json;

std::string to_json_line(const OutputRecord& r) {
  json j;
  j["genus"] = r.genus ? json(*r.genus) : json(nullptr);
  j["quantity"] = r.quantity;
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["witnesses"] = r.witnesses;
  j["source"] = r.source;
  if (r.pass) j["pass"] = *r.pass;
  j["detail"] = r.detail;
  return j.dump();
}

OutputRecord from_json_line(const std::string& line) {
  const auto j = json::parse(line);
  OutputRecord r;
  if (!j.at("genus").is_null()) r.genus = j.at("genus").get<Int>();
  r.quantity = j.at("quantity").get<std::string>();
  if (!j.at("value").is_null()) r.value = j.at("value").get<Int>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.source = j.at("source").get<std::string>();
  if (j.contains("pass")) r.pass = j.at("pass").get<bool>();
  r.detail = j.at("detail").get<std::string>();
  return r;
}

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(1, sep) : "") + parts[i];
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(field);
      rows.push_back(row);
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw InvalidInput("csv: unterminated quoted field");
  if (any || !field.empty() || !row.empty()) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string csv_header() { return "genus,quantity,value,witnesses,source,pass,detail"; }

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream os;
  os << (r.genus ? std::to_string(*r.genus) : "") << ',' << quote(r.quantity) << ','
     << (r.value ? std::to_string(*r.value) : "") << ',' << quote(join(r.witnesses, ';')) << ',' << quote(r.source)
     << ',' << (r.pass ? (*r.pass ? "true" : "false") : "") << ',' << quote(r.detail);
  return os.str();
}

std::vector<OutputRecord> parse_csv(const std::string& text) {
  auto rows = csv_rows(text);
  if (rows.empty()) throw InvalidInput("csv: missing header");
  std::vector<OutputRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != 7) throw InvalidInput("csv: expected 7 fields");
    OutputRecord r;
    if (!f[0].empty()) r.genus = std::stoll(f[0]);
    r.quantity = f[1];
    if (!f[2].empty()) r.value = std::stoll(f[2]);
    r.witnesses = split(f[3], ';');
    r.source = f[4];
    if (!f[5].empty()) r.pass = f[5] == "true";
    r.detail = f[6];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace surfsym::cli
