// Text formats for profiles, class structures and arrangements.

#include <json.hpp>

#include <cctype>
#include <sstream>

#include "seating/profile.hpp"

namespace seating {

namespace {

using nlohmann::json;

Value integer_entry(const json& v, const char* what) {
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("non-integer entry in ") + what + ": " + v.dump());
  return v.get<Value>();
}

std::vector<std::vector<Value>> integer_matrix(const json& m, std::size_t n, const char* what) {
  if (!m.is_array() || m.size() != n)
    throw std::invalid_argument(std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<std::vector<Value>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n)
      throw std::invalid_argument(std::string(what) + " is not square (row " + std::to_string(i) + ")");
    for (const auto& e : m[i]) rows[i].push_back(integer_entry(e, what));
  }
  return rows;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Value parse_integer_token(const std::string& raw) {
  std::string tok = trim(raw);
  if (tok.empty()) throw std::invalid_argument("empty entry");
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) throw std::invalid_argument("non-integer entry: " + tok);
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw std::invalid_argument("non-integer entry: " + tok);
  return std::stoll(tok);
}

Profile parse_csv(const std::string& text) {
  std::vector<std::vector<Value>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<Value> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_integer_token(cell));
    rows.push_back(std::move(row));
  }
  return Profile::from_rows(rows);
}

}  // namespace

Profile parse_profile(const std::string& text) {
  const std::string body = trim(text);
  if (body.empty() || body[0] != '{') return parse_csv(body);
  json doc = json::parse(body);
  if (!doc.contains("values")) throw std::invalid_argument("profile JSON lacks \"values\"");
  const auto& values = doc["values"];
  std::size_t n = doc.contains("n") ? doc["n"].get<std::size_t>() : values.size();
  return Profile::from_rows(integer_matrix(values, n, "profile"));
}

std::string emit_profile_json(const Profile& p) {
  json doc;
  doc["n"] = p.size();
  doc["values"] = p.rows();
  return doc.dump() + "\n";
}

std::string emit_profile_csv(const Profile& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? "," : "") << p(i, j);
    out << "\n";
  }
  return out.str();
}

ClassStructure parse_classes(const std::string& text) {
  json doc = json::parse(text);
  ClassStructure c;
  const std::size_t k = doc.at("k").get<std::size_t>();
  c.sizes = doc.at("sizes").get<std::vector<std::size_t>>();
  if (c.sizes.size() != k) throw std::invalid_argument("class JSON: sizes must have k entries");
  c.matrix = integer_matrix(doc.at("matrix"), k, "class matrix");
  c.validate();
  return c;
}

std::string emit_classes_json(const ClassStructure& c) {
  json doc;
  doc["k"] = c.k();
  doc["sizes"] = c.sizes;
  doc["matrix"] = c.matrix;
  return doc.dump() + "\n";
}

Arrangement parse_arrangement(const std::string& text) {
  std::vector<Agent> seats;
  std::istringstream cells(text);
  std::string cell;
  while (std::getline(cells, cell, ',')) seats.push_back(static_cast<Agent>(parse_integer_token(cell)));
  return Arrangement(std::move(seats));
}

std::string format_arrangement(const Arrangement& a) {
  std::ostringstream out;
  for (std::size_t s = 0; s < a.size(); ++s) out << (s ? "," : "") << a[s];
  return out.str();
}

}  // namespace seating
