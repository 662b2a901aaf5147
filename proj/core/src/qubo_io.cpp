#include "qwass/qubo_io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>

namespace qwass {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

QuboFormatError line_error(std::size_t line, const std::string& what) {
  return QuboFormatError("qubo text line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string to_qubo_text(const Qubo& qubo) {
  std::ostringstream os;
  os << "c qwass QUBO, variables in canonical edge order\n";
  os << "c offset " << fmt_double(qubo.offset()) << "\n";
  os << "c B " << fmt_double(qubo.penalty()) << "\n";
  os << "c B_star " << fmt_double(qubo.b_star()) << "\n";
  if (qubo.shape()) os << "c shape " << qubo.shape()->n() << " " << qubo.shape()->m() << "\n";
  for (std::size_t i = 0; i < qubo.edge_labels().size(); ++i) {
    os << "c edge " << i << " " << qubo.edge_labels()[i] << "\n";
  }
  os << "p qubo 0 " << qubo.num_vars() << " " << qubo.num_vars() << " " << qubo.quadratic().size()
     << "\n";
  for (std::size_t i = 0; i < qubo.num_vars(); ++i) {
    os << i << " " << i << " " << fmt_double(qubo.linear(i)) << "\n";
  }
  for (const auto& t : qubo.quadratic()) {
    os << t.i << " " << t.j << " " << fmt_double(t.value) << "\n";
  }
  return os.str();
}

Qubo parse_qubo_text(std::istream& in) {
  double offset = 0.0, penalty = 0.0, b_star = 0.0;
  std::optional<GraphShape> shape;
  std::vector<std::pair<std::size_t, std::string>> labels;
  std::vector<double> linear;
  std::vector<QuadraticTerm> quadratic;
  bool have_header = false;
  std::size_t num_vars = 0, expect_nodes = 0, expect_couplers = 0, nodes = 0;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "c") {
      std::string key;
      ls >> key;
      if (key == "offset") {
        if (!(ls >> offset)) throw line_error(line, "bad offset");
      } else if (key == "B") {
        if (!(ls >> penalty)) throw line_error(line, "bad B");
      } else if (key == "B_star") {
        if (!(ls >> b_star)) throw line_error(line, "bad B_star");
      } else if (key == "shape") {
        std::size_t n = 0, m = 0;
        if (!(ls >> n >> m)) throw line_error(line, "bad shape");
        shape = GraphShape(n, m);
      } else if (key == "edge") {
        std::size_t idx = 0;
        std::string label;
        if (!(ls >> idx >> label)) throw line_error(line, "bad edge label");
        labels.emplace_back(idx, label);
      }
      continue;
    }
    if (head == "p") {
      std::string kind, topology;
      if (!(ls >> kind >> topology >> num_vars >> expect_nodes >> expect_couplers) ||
          kind != "qubo") {
        throw line_error(line, "malformed problem line");
      }
      have_header = true;
      linear.assign(num_vars, 0.0);
      continue;
    }
    if (!have_header) throw line_error(line, "coefficient before 'p qubo' line");
    std::size_t i = 0, j = 0;
    double value = 0.0;
    std::istringstream full(raw);
    if (!(full >> i >> j >> value)) throw line_error(line, "malformed coefficient line");
    if (i >= num_vars || j >= num_vars) throw line_error(line, "variable index out of range");
    if (i == j) {
      linear[i] = value;
      ++nodes;
    } else {
      quadratic.push_back({i, j, value});
    }
  }
  if (!have_header) throw QuboFormatError("qubo text: missing 'p qubo' line");
  if (nodes != expect_nodes || quadratic.size() != expect_couplers) {
    throw QuboFormatError("qubo text: coefficient counts do not match header");
  }

  std::vector<std::string> edge_labels;
  if (!labels.empty()) {
    if (labels.size() != num_vars) throw QuboFormatError("qubo text: incomplete edge labels");
    edge_labels.resize(num_vars);
    for (auto& [idx, label] : labels) {
      if (idx >= num_vars) throw QuboFormatError("qubo text: edge label index out of range");
      edge_labels[idx] = std::move(label);
    }
  }
  try {
    return Qubo(num_vars, std::move(linear), std::move(quadratic), offset, penalty, b_star,
                std::move(edge_labels), shape);
  } catch (const std::invalid_argument& e) {
    throw QuboFormatError(std::string("qubo text: ") + e.what());
  }
}

Qubo parse_qubo_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_qubo_text(in);
}

std::string to_qubo_json(const Qubo& qubo) {
  nlohmann::ordered_json j;
  j["num_vars"] = qubo.num_vars();
  j["offset"] = qubo.offset();
  j["B"] = qubo.penalty();
  j["B_star"] = qubo.b_star();
  if (qubo.shape()) {
    j["n"] = qubo.shape()->n();
    j["m"] = qubo.shape()->m();
  }
  auto& lin = j["linear"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < qubo.num_vars(); ++i) lin[std::to_string(i)] = qubo.linear(i);
  auto& quad = j["quadratic"] = nlohmann::ordered_json::array();
  for (const auto& t : qubo.quadratic()) quad.push_back({t.i, t.j, t.value});
  j["edge_labels"] = qubo.edge_labels();
  return j.dump(2) + "\n";
}

Qubo parse_qubo_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto num_vars = j.at("num_vars").get<std::size_t>();
    std::vector<double> linear(num_vars, 0.0);
    for (const auto& [key, value] : j.at("linear").items()) {
      const std::size_t idx = std::stoul(key);
      if (idx >= num_vars) throw QuboFormatError("qubo json: linear index out of range");
      linear[idx] = value.get<double>();
    }
    std::vector<QuadraticTerm> quadratic;
    for (const auto& t : j.at("quadratic")) {
      if (!t.is_array() || t.size() != 3) throw QuboFormatError("qubo json: bad quadratic entry");
      quadratic.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<double>()});
    }
    std::vector<std::string> labels;
    if (j.contains("edge_labels")) labels = j["edge_labels"].get<std::vector<std::string>>();
    std::optional<GraphShape> shape;
    if (j.contains("n") && j.contains("m")) {
      shape = GraphShape(j["n"].get<std::size_t>(), j["m"].get<std::size_t>());
    }
    return Qubo(num_vars, std::move(linear), std::move(quadratic), j.at("offset").get<double>(),
                j.at("B").get<double>(), j.value("B_star", 0.0), std::move(labels), shape);
  } catch (const nlohmann::json::exception& e) {
    throw QuboFormatError(std::string("qubo json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw QuboFormatError(std::string("qubo json: ") + e.what());
  }
}

Qubo read_qubo_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && text[first] == '{') return parse_qubo_json(text);
    return parse_qubo_text(std::string_view(text));
  } catch (const QuboFormatError& e) {
    throw QuboFormatError(path + ": " + e.what());
  }
}

}  // namespace qwass
