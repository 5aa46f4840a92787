#include "qcoh/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qcoh {

namespace {

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(1) << '\n';
}

int dim_of(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("missing integer field 'dim'");
  }
  const int d = j["dim"].get<int>();
  if (d < 1) throw ParseError("'dim' must be positive");
  return d;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ParseError("matrix must have " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(dim) +
                       " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const Json& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ParseError("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") must be [re, im]");
      }
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

Json to_json(const StateFile& s) {
  Json j;
  j["dim"] = s.dim;
  j["matrix"] = matrix_to_json(s.matrix);
  return j;
}

Json to_json(const ChannelFile& c) {
  Json j;
  j["dim"] = c.dim;
  Json ks = Json::array();
  for (const auto& k : c.kraus) ks.push_back(matrix_to_json(k));
  j["kraus"] = std::move(ks);
  if (c.label) j["label"] = *c.label;
  return j;
}

StateFile state_file_from_json(const Json& j) {
  StateFile s;
  s.dim = dim_of(j);
  if (!j.contains("matrix")) throw ParseError("missing field 'matrix'");
  s.matrix = matrix_from_json(j["matrix"], s.dim);
  return s;
}

ChannelFile channel_file_from_json(const Json& j) {
  ChannelFile c;
  c.dim = dim_of(j);
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw ParseError("missing non-empty array 'kraus'");
  }
  for (const auto& k : j["kraus"]) c.kraus.push_back(matrix_from_json(k, c.dim));
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("'label' must be a string");
    c.label = j["label"].get<std::string>();
  }
  return c;
}

StateFile read_state_file(const std::string& path) {
  try {
    return state_file_from_json(parse_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

ChannelFile read_channel_file(const std::string& path) {
  try {
    return channel_file_from_json(parse_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_state_file(const std::string& path, const StateFile& s) { write_file(path, to_json(s)); }

void write_channel_file(const std::string& path, const ChannelFile& c) {
  write_file(path, to_json(c));
}

DensityMatrix load_state(const std::string& path) {
  return DensityMatrix::validate(read_state_file(path).matrix);
}

std::optional<KrausChannel> builtin_channel(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string kind = name.substr(0, colon);
  if (kind != "depol-ext" && kind != "erase-ext" && kind != "dephase") return std::nullopt;
  const std::string arg = name.substr(colon + 1);
  int d = 0;
  const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), d);
  if (ec != std::errc{} || end != arg.data() + arg.size() || d < 1) {
    throw ParseError("bad dimension in channel name '" + name + "'");
  }
  if (kind == "depol-ext") return depolarizing_extension(d);
  if (kind == "erase-ext") return erasure_extension(d);
  return dephasing_channel(d);
}

KrausChannel load_channel(const std::string& spec) {
  if (auto b = builtin_channel(spec)) return std::move(*b);
  ChannelFile c = read_channel_file(spec);
  return KrausChannel(c.dim, std::move(c.kraus), c.label.value_or(spec));
}

Json to_json(const ExtendedReal& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass;
  j["trials"] = r.trials;
  j["worst_violation"] = r.worst_violation;
  j["worst_case_seed"] = r.worst_case_seed;
  j["notes"] = r.notes;
  return j;
}

}  // namespace qcoh
