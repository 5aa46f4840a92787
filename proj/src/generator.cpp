#include "qcoh/generator.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

std::string format_param(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

GeneratorFunction::GeneratorFunction(std::string name, std::vector<double> params,
                                     std::function<double(double)> eval,
                                     ExtendedReal limit_at_zero, ExtendedReal asymptotic_slope,
                                     bool operator_convex)
    : name_(std::move(name)),
      params_(std::move(params)),
      eval_(std::move(eval)),
      limit_at_zero_(limit_at_zero),
      slope_(asymptotic_slope),
      operator_convex_(operator_convex) {}

double GeneratorFunction::eval(double x) const {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ParamOutOfRange(name_ + ": argument " + std::to_string(x) + " outside (0, inf)");
  }
  return eval_(x);
}

ExtendedReal GeneratorFunction::limit_at_inf_weighted(double c) const {
  if (c < 0.0) throw ParamOutOfRange(name_ + ": weighted limit needs c >= 0");
  return slope_.scaled(c);
}

bool GeneratorFunction::monotone_decreasing() const noexcept {
  return slope_.is_finite() && slope_.value() <= 0.0;
}

GeneratorFunction builtin_neg_log() {
  return GeneratorFunction("neg_log", {}, [](double x) { return -std::log(x); },
                           ExtendedReal::infinity(), ExtendedReal(0.0), true);
}

GeneratorFunction builtin_power(double p) {
  if (!(p > -1.0 && p < 2.0) || p == 0.0 || p == 1.0) {
    throw ParamOutOfRange("power: p = " + format_param(p) + " outside (-1, 2) \\ {0, 1}");
  }
  const double norm = p * (1.0 - p);
  // f(0+) = 1/norm unless x^p blows up (p < 0); slope is infinite iff p > 1.
  const ExtendedReal at_zero = p > 0.0 ? ExtendedReal(1.0 / norm) : ExtendedReal::infinity();
  const ExtendedReal slope = p > 1.0 ? ExtendedReal::infinity() : ExtendedReal(0.0);
  return GeneratorFunction("power:" + format_param(p), {p},
                           [p, norm](double x) { return (1.0 - std::pow(x, p)) / norm; },
                           at_zero, slope, true);
}

GeneratorFunction builtin_tsallis(double q) {
  if (!(q > 0.0 && q < 2.0) || q == 1.0) {
    throw ParamOutOfRange("tsallis: q = " + format_param(q) + " outside (0, 2) \\ {1}");
  }
  const double e = 1.0 - q;
  const ExtendedReal at_zero = q < 1.0 ? ExtendedReal(1.0 / e) : ExtendedReal::infinity();
  return GeneratorFunction("tsallis:" + format_param(q), {q},
                           [e](double x) { return (1.0 - std::pow(x, e)) / e; }, at_zero,
                           ExtendedReal(0.0), true);
}

TransposeFunction transpose(const GeneratorFunction& f) {
  if (f.base_) return *f.base_;
  auto base = std::make_shared<const GeneratorFunction>(f);
  // x f(1/x): its value at 0+ is the slope of f and vice versa.
  GeneratorFunction t(
      "~" + f.name(), f.params(), [base](double x) { return x * base->eval(1.0 / x); },
      f.asymptotic_slope(), f.limit_at_zero(), f.claims_operator_convex());
  t.base_ = std::move(base);
  return t;
}

GeneratorFunction parse_generator(std::string_view spec) {
  if (!spec.empty() && spec.front() == '~') return transpose(parse_generator(spec.substr(1)));

  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  if (name == "neg_log") {
    if (colon != std::string_view::npos) {
      throw UnknownGenerator("neg_log takes no parameter: '" + std::string(spec) + "'");
    }
    return builtin_neg_log();
  }
  if (name != "power" && name != "tsallis") {
    throw UnknownGenerator("unknown generator function '" + std::string(spec) + "'");
  }
  if (colon == std::string_view::npos) {
    throw UnknownGenerator(std::string(name) + " requires a parameter, e.g. " +
                           std::string(name) + ":0.5");
  }
  const std::string_view text = spec.substr(colon + 1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UnknownGenerator("malformed parameter in '" + std::string(spec) + "'");
  }
  return name == "power" ? builtin_power(value) : builtin_tsallis(value);
}

std::vector<std::string> builtin_names() { return {"neg_log", "power:<p>", "tsallis:<q>"}; }

}  // namespace qcoh
