// Copyright 2026 The bidual authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bidual/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bidual {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) {
    throw ParseError(std::string("missing field \"") + field + "\"");
  }
  return *it;
}

Vector parse_vector(const json& node, const char* field, int expected) {
  if (!node.is_array()) {
    throw ParseError(std::string("field \"") + field +
                     "\" must be an array of numbers");
  }
  if (static_cast<int>(node.size()) != expected) {
    std::ostringstream os;
    os << "field \"" << field << "\" has length " << node.size()
       << ", expected " << expected;
    throw ParseError(os.str());
  }
  Vector out(expected);
  for (int i = 0; i < expected; ++i) {
    if (!node[i].is_number()) {
      throw ParseError(std::string("field \"") + field +
                       "\" must contain only numbers");
    }
    out[i] = node[i].get<double>();
  }
  return out;
}

int parse_int(const json& doc, const char* field) {
  const json& node = require(doc, field);
  if (!node.is_number_integer()) {
    throw ParseError(std::string("field \"") + field +
                     "\" must be an integer");
  }
  return node.get<int>();
}

Matrix parse_matrix(const json& node, int m, int n) {
  if (!node.is_array() || static_cast<int>(node.size()) != m) {
    std::ostringstream os;
    os << "field \"A\" must be an array of " << m << " rows";
    throw ParseError(os.str());
  }
  Matrix A(m, n);
  for (int i = 0; i < m; ++i) {
    const json& row = node[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      std::ostringstream os;
      os << "field \"A\" row " << i << " must have " << n << " entries";
      throw ParseError(os.str());
    }
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        throw ParseError("field \"A\" must contain only numbers");
      }
      A(i, j) = row[j].get<double>();
    }
  }
  return A;
}

BoxBound parse_box(const json& doc) {
  const json& node = require(doc, "M");
  if (node.is_string()) {
    if (node.get<std::string>() != "conservative") {
      throw ParseError(
          "field \"M\" must be a positive number or \"conservative\"");
    }
    return BoxBound::conservative();
  }
  if (!node.is_number()) {
    throw ParseError(
        "field \"M\" must be a positive number or \"conservative\"");
  }
  const double m = node.get<double>();
  if (!(m > 0.0)) {
    throw ParseError("field \"M\" must be positive");
  }
  return BoxBound::finite(m);
}

SparsityMode parse_mode(const json& doc) {
  if (!doc.at("mode").is_string()) {
    throw ParseError("field \"mode\" must be a string");
  }
  const std::string name = doc.at("mode").get<std::string>();
  if (name == "entry") return SparsityMode::entry_wise();
  if (name == "group") return SparsityMode::group();
  if (name == "mixed") {
    const auto it = doc.find("gamma");
    if (it == doc.end()) {
      throw ParseError("missing field \"gamma\" (required by mode \"mixed\")");
    }
    if (!it->is_number() || it->get<double>() < 0.0) {
      throw ParseError("field \"gamma\" must be a nonnegative number");
    }
    return SparsityMode::mixed(it->get<double>());
  }
  throw ParseError("field \"mode\" must be \"entry\", \"group\" or \"mixed\"");
}

}  // namespace

ProblemInstance parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // keeps the line/column diagnostic
  }
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");

  const int m = parse_int(doc, "m");
  const int n = parse_int(doc, "n");
  if (m < 1 || n < 1) throw ParseError("fields \"m\" and \"n\" must be >= 1");
  const Matrix A = parse_matrix(require(doc, "A"), m, n);
  const Vector b = parse_vector(require(doc, "b"), "b", m);

  const json& blocks_node = require(doc, "blocks");
  if (!blocks_node.is_array() || blocks_node.empty()) {
    throw ParseError("field \"blocks\" must be a nonempty array of sizes");
  }
  std::vector<int> sizes;
  int total = 0;
  for (const json& entry : blocks_node) {
    if (!entry.is_number_integer() || entry.get<int>() < 1) {
      throw ParseError("field \"blocks\" must contain positive integers");
    }
    sizes.push_back(entry.get<int>());
    total += sizes.back();
  }
  if (total != n) {
    std::ostringstream os;
    os << "field \"blocks\" sums to " << total << ", expected n = " << n;
    throw ParseError(os.str());
  }
  BlockPartition partition(sizes);
  const BoxBound box = parse_box(doc);

  ProblemInstance instance = [&]() {
    if (doc.contains("mode")) {
      // Preset overrides any alpha/beta present in the file.
      try {
        return make_instance(A, b, partition, parse_mode(doc), box);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    const int K = partition.num_blocks();
    ProblemInstance out{A,
                        b,
                        partition,
                        parse_vector(require(doc, "alpha"), "alpha", K),
                        parse_vector(require(doc, "beta"), "beta", K),
                        box,
                        SparsityMode::weighted()};
    return out;
  }();

  const auto violations = validate(instance);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid problem:";
    for (const std::string& v : violations) os << " " << v << ";";
    throw ParseError(os.str());
  }
  return instance;
}

ProblemInstance load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_json(buffer.str());
}

std::string problem_to_json(const ProblemInstance& instance) {
  json doc;
  doc["m"] = instance.rows();
  doc["n"] = instance.cols();
  json rows = json::array();
  for (int i = 0; i < instance.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < instance.cols(); ++j) row.push_back(instance.A(i, j));
    rows.push_back(std::move(row));
  }
  doc["A"] = std::move(rows);
  doc["b"] = std::vector<double>(instance.b.begin(), instance.b.end());
  doc["blocks"] = instance.partition.sizes();
  doc["alpha"] = std::vector<double>(instance.alpha.begin(),
                                     instance.alpha.end());
  doc["beta"] = std::vector<double>(instance.beta.begin(),
                                    instance.beta.end());
  if (instance.box.is_finite()) {
    doc["M"] = instance.box.value();
  } else {
    doc["M"] = "conservative";
  }
  if (instance.mode.kind != SparsityKind::Weighted) {
    doc["mode"] = to_string(instance.mode.kind);
    if (instance.mode.kind == SparsityKind::Mixed) {
      doc["gamma"] = instance.mode.gamma;
    }
  }
  return doc.dump(2);
}

}  // namespace bidual
