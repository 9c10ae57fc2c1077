// Copyright 2026 The cohgen Authors
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

#include "cohgen/matrix_json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cohgen {

namespace {

void read_part(const Json& rows, Eigen::Index dim, const char* key, ComplexMatrix& out, bool imag) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
    throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must have dim rows");
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" rows must have dim entries");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) {
        throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" entries must be numbers");
      }
      const double x = v.get<double>();
      if (imag) {
        out(i, j).imag(x);
      } else {
        out(i, j).real(x);
      }
    }
  }
}

void emit(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        emit(value, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; matrix rows read naturally that way.
      const bool flat = std::none_of(j.begin(), j.end(),
                                     [](const Json& e) { return e.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        emit(e, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re")) {
    throw Error(ErrorCode::ParseError, "matrix JSON must be an object with \"re\"");
  }
  const Json& re = j.at("re");
  if (!re.is_array() || re.empty()) {
    throw Error(ErrorCode::ParseError, "\"re\" must be a non-empty array of rows");
  }
  const auto dim = static_cast<Eigen::Index>(re.size());
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() != dim) {
      throw Error(ErrorCode::ParseError, "\"dim\" does not match the number of rows");
    }
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  read_part(re, dim, "re", m, false);
  if (j.contains("im")) read_part(j.at("im"), dim, "im", m, true);
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json re_row = Json::array();
    Json im_row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  Json out;
  out["dim"] = m.rows();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Json vector_to_json(const ComplexVector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  Json out;
  out["dim"] = v.size();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return matrix_from_json(j);
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // keep JSON readers from treating whole numbers as integers
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  out += '\n';
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing " + path);
}

}  // namespace cohgen
