#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qcoh/channels.hpp"
#include "qcoh/extended_real.hpp"
#include "qcoh/matrix.hpp"
#include "qcoh/verify.hpp"

namespace qcoh {

// Malformed JSON or a document that does not have the expected shape.
class ParseError : public Error {
 public:
  using Error::Error;
};

using Json = nlohmann::ordered_json;

// {"dim": d, "matrix": [[[re, im], ...], ...]}
struct StateFile {
  int dim = 0;
  ComplexMatrix matrix;
};

// {"dim": d, "kraus": [matrix, ...], "label": "..."}  (label optional)
struct ChannelFile {
  int dim = 0;
  std::vector<ComplexMatrix> kraus;
  std::optional<std::string> label;
};

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, int dim);

Json to_json(const StateFile& s);
Json to_json(const ChannelFile& c);
StateFile state_file_from_json(const Json& j);
ChannelFile channel_file_from_json(const Json& j);

// Parsing only; no physical validation.
StateFile read_state_file(const std::string& path);
ChannelFile read_channel_file(const std::string& path);
void write_state_file(const std::string& path, const StateFile& s);
void write_channel_file(const std::string& path, const ChannelFile& c);

// Parse and validate.
DensityMatrix load_state(const std::string& path);
// "depol-ext:d", "erase-ext:d", "dephase:d" or a channel file path.
KrausChannel load_channel(const std::string& spec);
std::optional<KrausChannel> builtin_channel(const std::string& name);

// Finite values as numbers, +inf as the string "inf".
Json to_json(const ExtendedReal& x);
Json to_json(const VerificationReport& r);

}  // namespace qcoh
