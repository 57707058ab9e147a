#include "zt/tensor_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <vector>

namespace zt {

namespace {

using nlohmann::json;

Tensor parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("dim"))
    throw Error(Errc::ParseError, "expected object with order and dim fields");
  std::vector<std::pair<IndexTuple, double>> raw;
  if (doc.contains("entries")) {
    if (!doc["entries"].is_array())
      throw Error(Errc::ParseError, "entries must be an array");
    for (const auto& e : doc["entries"]) {
      if (!e.is_object() || !e.contains("idx") || !e.contains("val"))
        throw Error(Errc::ParseError, "entry needs idx and val fields");
      IndexTuple idx;
      for (const auto& i : e["idx"]) idx.push_back(i.get<int>());
      raw.emplace_back(std::move(idx), e["val"].get<double>());
    }
  }
  try {
    return make_tensor(doc["order"].get<int>(), doc["dim"].get<int>(), raw);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Tensor parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int order = 0, dim = 0;
  bool have_header = false;
  std::vector<std::pair<IndexTuple, double>> raw;
  int max_index = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    auto fail = [&](const std::string& msg) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(lineno) + ": " + msg);
    };

    // A standalone pair of integers before any entry is the "order dim"
    // header; entry lines always carry order+1 >= 3 tokens.
    if (!have_header && raw.empty() && tokens.size() == 2) {
      try {
        order = std::stoi(tokens[0]);
        dim = std::stoi(tokens[1]);
      } catch (const std::exception&) {
        fail("malformed header");
      }
      have_header = true;
      continue;
    }
    if (tokens.size() < 3) fail("expected i1 ... im value");
    if (have_header && static_cast<int>(tokens.size()) != order + 1)
      fail("entry does not match declared order");
    if (!have_header && !raw.empty() &&
        static_cast<int>(tokens.size()) != order + 1)
      fail("inconsistent entry length");
    if (!have_header && raw.empty()) order = static_cast<int>(tokens.size()) - 1;

    IndexTuple idx;
    double val = 0;
    try {
      for (std::size_t j = 0; j + 1 < tokens.size(); ++j)
        idx.push_back(std::stoi(tokens[j]));
      val = std::stod(tokens.back());
    } catch (const std::exception&) {
      fail("malformed number");
    }
    for (int i : idx) max_index = std::max(max_index, i);
    raw.emplace_back(std::move(idx), val);
  }
  if (!have_header) {
    if (raw.empty()) throw Error(Errc::ParseError, "no tensor data found");
    dim = max_index;
  }
  try {
    return make_tensor(order, dim, raw);
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidArgument || e.code() == Errc::IndexOutOfRange ||
        e.code() == Errc::DimensionMismatch)
      throw Error(Errc::ParseError, e.what());
    throw;
  }
}

}  // namespace

Tensor read_tensor(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw Error(Errc::ParseError, "empty input");
  if (text[first] == '{') return parse_json(text);
  return parse_text(text);
}

Tensor read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  return read_tensor(in);
}

void write_tensor(std::ostream& out, const Tensor& T) {
  json entries = json::array();
  // std::map iteration is already lexicographic in the tuple.
  for (const auto& [idx, val] : T.entries())
    entries.push_back({{"idx", idx}, {"val", val}});
  json doc{{"order", T.order()}, {"dim", T.dim()}, {"entries", entries}};
  out << doc.dump(2) << '\n';
}

void write_tensor_file(const std::string& path, const Tensor& T) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot open " + path + " for writing");
  write_tensor(out, T);
}

}  // namespace zt
